#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>

#include "revwit/condensation.hpp"
#include "revwit/structure.hpp"

namespace revwit {

// Bounds attached to a certificate when the invariant caps the field.
struct FieldBounds {
    std::optional<Element> p;  // lower; absent for one-sided fields
    Element q;                 // upper
};

// A back-and-forth extension rule.  extend_* computes the pairs a step adds
// and advances any internal state; the engine commits them to the map.
class Strategy {
public:
    virtual ~Strategy() = default;
    virtual std::string id() const = 0;
    virtual std::string invariant() const = 0;
    virtual void init(const PartialCondensation& seed) = 0;
    virtual bool dom_covers(const PartialCondensation& m, const Element& e) const {
        return m.in_dom(e.enc);
    }
    virtual bool ran_covers(const PartialCondensation& m, const Element& e) const {
        return m.in_ran(e.enc);
    }
    virtual PairList extend_dom(const PartialCondensation& m, const Element& target) = 0;
    virtual PairList extend_ran(const PartialCondensation& m, const Element& target) = 0;
    virtual std::optional<FieldBounds> bounds() const { return std::nullopt; }
};

// Strategy ids: well-founded, rooted-directed, convex, universal.
bool strategy_compatible(const std::string& structure_id, const std::string& strategy_id);
std::vector<std::string> strategy_ids();
std::string strategy_invariant(const std::string& strategy_id);
std::unique_ptr<Strategy> make_strategy(Structure& s, const std::string& strategy_id);

// Seed construction.  A seed spec is "default" (or empty) or a semicolon list
// of name=encoding assignments; accepted names depend on the strategy:
//   well-founded / rooted-directed on rooted structures: r, a0, a1, b0
//   rooted-directed on half-plane, convex:               a0, a1, b0
//   universal:                                           a0, a1, b0, b1
// Overrides replace the defaults; the result is validated, never repaired.
struct SeedSpec {
    std::map<std::string, std::string> overrides;
};

SeedSpec parse_seed_spec(const std::string& text);
PairList build_seed(Structure& s, const std::string& strategy_id, const SeedSpec& spec);

}  // namespace revwit
