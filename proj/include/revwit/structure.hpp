#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "revwit/element.hpp"

namespace revwit {

// What a structure supports; operations gated on a missing capability throw
// CapabilityError.
struct Capabilities {
    bool locally_finite_below = false;  // principal ideals are finite
    bool rooted = false;                // least element, = at(0)
    bool directed = false;              // finite sets have upper bounds
    bool minimal_layer = false;         // canonical layer for fresh minimal picks
    bool self_embedding_above = false;  // embed_ideal_above available
    bool interval_translations = false; // plane translation witnesses available
    bool extension_axioms = false;      // grown-on-demand witness calls (random poset)
};

struct SuccessorResult {
    std::vector<Element> found;  // sorted by enumeration index
    bool complete;               // exact within the budget window
};

using SkipFn = std::function<bool(const Element&)>;

// A countable partial order with a fixed enumeration.  All operations are
// deterministic; ties everywhere break toward the least enumeration index.
class Structure {
public:
    virtual ~Structure() = default;

    virtual std::string id() const = 0;
    virtual Capabilities caps() const = 0;

    // Canonical-form codec: parse rejects anything render would not produce.
    virtual Element parse(const std::string& enc) const = 0;
    virtual Element at(const Big& n) const = 0;

    virtual bool leq(const Element& x, const Element& y) const = 0;
    bool lt(const Element& x, const Element& y) const { return leq(x, y) && x.enc != y.enc; }
    bool incomparable(const Element& x, const Element& y) const { return !leq(x, y) && !leq(y, x); }

    // For grown-on-demand structures: how many elements exist right now.
    virtual std::optional<Big> enumeration_limit() const { return std::nullopt; }

    // (-, x], sorted by enumeration index.
    virtual std::vector<Element> principal_ideal(const Element& x) const;

    virtual Element upper_bound(const std::vector<Element>& xs) const;
    virtual Element strict_upper_bound(const std::vector<Element>& xs) const;

    // Least-index element of the canonical minimal layer for which skip()
    // returns false.
    virtual Element fresh_min_avoiding(const SkipFn& skip) const;
    Element fresh_min_avoiding(const std::unordered_set<std::string>& avoid) const;
    virtual bool in_minimal_layer(const Element& x) const;

    // Strictly increasing x0 < x1 < ... < x{k-1}, all strictly above p, none
    // in avoid.  Each link is the least-index immediate successor not avoided.
    virtual std::vector<Element> increasing_chain_above(const Element& p,
                                                        const std::unordered_set<std::string>& avoid,
                                                        size_t k) const;

    // Graph of an order-embedding of (-, a] into [p, -), sorted by domain index.
    virtual std::vector<std::pair<Element, Element>> embed_ideal_above(const Element& a,
                                                                       const Element& p) const;

    // Immediate successors of x among the first `budget` enumerated elements.
    virtual SuccessorResult immediate_successors(const Element& x, const Big& budget) const;

protected:
    // Iterates immediate successors in enumeration-index order until the
    // callback returns false.  Default: capability error.
    virtual void for_successors(const Element& x, const std::function<bool(const Element&)>& cb) const;
};

// Union of principal ideals, sorted by index, deduplicated.
std::vector<Element> down_closure(const Structure& s, const std::vector<Element>& xs);

// Known ids: divisibility, finite-sets, level-restricted, level-restricted(...),
// fn-omega, fin-support, half-plane, zxz, qxq, random-poset.
std::unique_ptr<Structure> make_structure(const std::string& id);
std::vector<std::string> structure_ids();

}  // namespace revwit
