#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "revwit/structure.hpp"

namespace revwit {

// A strict partial order on vertices v0, v1, ... grown one vertex at a time.
// Each new vertex p is created from disjoint vertex sets (L, G, U) with
//   (c1) every l in L is strictly below every g in G,
//   (c2) no u in U is strictly below any l in L,
//   (c3) no g in G is strictly below any u in U,
// and satisfies L < p < G with p incomparable to everything in U and to every
// vertex outside the closure of L and G.  Relations are stored as bitset rows.
class RandomPosetState {
public:
    size_t size() const { return below_.size(); }
    bool lt(size_t x, size_t y) const;
    bool leq(size_t x, size_t y) const { return x == y || lt(x, y); }

    // Validates (c1)-(c3), adds the vertex, returns its id.
    size_t add_vertex(const std::vector<size_t>& L, const std::vector<size_t>& G,
                      const std::vector<size_t>& U);

    // Full irreflexivity + transitivity + converse-consistency scan.
    bool strict_partial_order() const;

    std::vector<std::pair<size_t, size_t>> strict_pairs() const;

private:
    std::vector<uint64_t>& row(std::vector<std::vector<uint64_t>>& m, size_t i) { return m[i]; }
    bool bit(const std::vector<uint64_t>& r, size_t j) const {
        return j / 64 < r.size() && (r[j / 64] >> (j % 64)) & 1;
    }
    static void set_bit(std::vector<uint64_t>& r, size_t j) {
        if (j / 64 >= r.size()) r.resize(j / 64 + 1, 0);
        r[j / 64] |= uint64_t(1) << (j % 64);
    }
    std::vector<std::vector<uint64_t>> below_;  // below_[v] = {x : x < v}
    std::vector<std::vector<uint64_t>> above_;  // above_[v] = {y : v < y}
};

// Structure facade over a grown-on-demand state.  Elements are "v<k>"; the
// enumeration index of v<k> is k; only vertices below enumeration_limit()
// exist.  Fresh instances start with the fixed four-vertex protocol:
// v0, v1 incomparable, v2 < v3, no other relations.
class RandomPosetStructure : public Structure {
public:
    RandomPosetStructure();
    std::string id() const override { return "random-poset"; }
    Capabilities caps() const override;
    Element parse(const std::string& enc) const override;
    Element at(const Big& n) const override;
    bool leq(const Element& x, const Element& y) const override;
    std::optional<Big> enumeration_limit() const override;
    SuccessorResult immediate_successors(const Element& x, const Big& budget) const override;

    RandomPosetState& state() { return *state_; }
    const RandomPosetState& state() const { return *state_; }
    static size_t vertex(const Element& e);
    Element vertex_element(size_t k) const;

private:
    std::shared_ptr<RandomPosetState> state_;
};

}  // namespace revwit
