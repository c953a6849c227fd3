#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "revwit/structure.hpp"

namespace revwit {

using ElementPair = std::pair<Element, Element>;
using PairList = std::vector<ElementPair>;

// A finite injective order-preserving partial map, kept valid by construction.
class PartialCondensation {
public:
    PartialCondensation() = default;

    const PairList& pairs() const { return pairs_; }
    size_t size() const { return pairs_.size(); }

    bool in_dom(const std::string& enc) const { return dom_.count(enc) > 0; }
    bool in_ran(const std::string& enc) const { return ran_.count(enc) > 0; }
    const Element& image(const std::string& dom_enc) const;

    // Appends a pair; throws InternalError if the domain or range entry
    // already exists.  Order properties are not checked here.
    void add(const Element& x, const Element& y);

    const std::unordered_set<std::string>& dom_encs() const { return dom_; }
    const std::unordered_set<std::string>& ran_encs() const { return ran_; }

private:
    PairList pairs_;
    std::unordered_set<std::string> dom_, ran_;
    std::unordered_map<std::string, size_t> dom_pos_;
};

struct MapViolation {
    std::string kind;  // functional | injective | homomorphism
    size_t i, j;       // offending pair positions
};

struct MapReport {
    bool ok = true;
    std::vector<MapViolation> violations;
};

// Full scan of a raw pair list: functional, injective, order-preserving.
MapReport verify_pairs(const Structure& s, const PairList& pairs);

// Incremental scan assuming `base` already verified: checks the added block
// against the base and within itself, including dom/ran freshness.
MapReport verify_extension(const Structure& s, const PartialCondensation& base,
                           const PairList& added);

struct BadWitness {
    Element x1, x2, y1, y2;  // not(x1 <= x2) but y1 <= y2
};

// Least witness that the map fails to reflect the order: scans pairs sorted by
// domain enumeration index, lexicographically in (position of x1, position of
// x2), and returns the first (x1 -> y1, x2 -> y2) with not(x1 <= x2) yet
// y1 <= y2.
std::optional<BadWitness> find_bad_witness(const Structure& s, const PairList& pairs);

// Every pair of `base` occurs in `ext`.
bool is_extension(const PairList& base, const PairList& ext);

}  // namespace revwit
