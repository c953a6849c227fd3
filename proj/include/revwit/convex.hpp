#pragma once

#include <vector>

#include "revwit/condensation.hpp"
#include "revwit/rational.hpp"
#include "revwit/structure.hpp"

namespace revwit {

struct Pt {
    Rat x, y;
    bool operator==(const Pt& o) const { return x == o.x && y == o.y; }
};

inline bool pt_leq(const Pt& a, const Pt& b) { return a.x <= b.x && a.y <= b.y; }
inline Pt pt_add(const Pt& a, const Pt& b) { return {a.x + b.x, a.y + b.y}; }
inline Pt pt_sub(const Pt& a, const Pt& b) { return {a.x - b.x, a.y - b.y}; }

// Point set indexed for one-sided domination queries.
class PointIndex {
public:
    static PointIndex build(const std::vector<Pt>& pts);
    // exists member m with m <= e / m >= e
    bool some_leq(const Pt& e) const;
    bool some_geq(const Pt& e) const;
    bool empty() const { return by_x_.empty(); }

private:
    std::vector<Pt> by_x_;          // sorted by x ascending
    std::vector<Rat> prefix_min_y_; // over by_x_[0..i]
    std::vector<Rat> suffix_max_y_; // over by_x_[i..]
};

// Shared engine/verifier state machine for the convex strategy on a plane.
// The conceptual domain is the sandwich region: everything above some element
// of `minima` and below some element of `maxima`.  On the integer plane every
// region point is materialized; on the rational plane a step materializes only
// the target and its image, and image membership is answered through the
// recorded translation regions.
class ConvexDriver {
public:
    ConvexDriver(const Structure& s, bool dense) : s_(s), dense_(dense) {}

    void init(const PairList& seed);

    bool dom_covers(const PartialCondensation& m, const Element& e) const;
    bool ran_covers(const PartialCondensation& m, const Element& e) const;

    // Compute the pairs a step adds and advance the antichain/bound state.
    PairList dom_step(const PartialCondensation& m, const Element& target);
    PairList ran_step(const PartialCondensation& m, const Element& target);

    Element lower_bound_el() const;  // P, strictly below the whole field
    Element upper_bound_el() const;  // Q, strictly above the whole field

    const std::vector<Pt>& minima() const { return minima_; }
    const std::vector<Pt>& maxima() const { return maxima_; }
    bool in_sandwich(const Pt& z) const;

    Pt to_pt(const Element& e) const;
    Element to_el(const Pt& p) const;

private:
    struct Region {
        int kase;  // 1 = glued below target, 2 = glued above target
        Pt a, v;
        PointIndex min_before, max_before;
    };

    PairList glue_integral(const PartialCondensation& m, const Pt& a, const Pt& v, bool below_side);
    void absorb(const Pt& p);
    void rebuild();

    const Structure& s_;
    bool dense_;
    std::vector<Pt> minima_, maxima_;
    PointIndex min_idx_, max_idx_;
    std::vector<Region> regions_;
    bool have_field_ = false;
    Pt fmin_, fmax_;
};

// Exact convexity of an integral point set: no lattice point outside the set
// lies both above and below set members.  Equivalent to enumerating every
// interval between comparable members.  Throws CapabilityError when the
// relevant bounding box is too large to scan.
bool integral_convex_grid(const std::vector<Pt>& dom_pts);

// Literal counterpart: enumerates [x, y] for every comparable pair.
bool integral_convex_literal(const std::vector<Pt>& dom_pts);

}  // namespace revwit
