#include "revwit/convex.hpp"

#include <algorithm>

#include "revwit/structures.hpp"

namespace revwit {

PointIndex PointIndex::build(const std::vector<Pt>& pts) {
    PointIndex idx;
    idx.by_x_ = pts;
    std::sort(idx.by_x_.begin(), idx.by_x_.end(), [](const Pt& a, const Pt& b) {
        return a.x < b.x || (a.x == b.x && a.y < b.y);
    });
    size_t n = idx.by_x_.size();
    idx.prefix_min_y_.resize(n);
    idx.suffix_max_y_.resize(n);
    for (size_t i = 0; i < n; ++i) {
        idx.prefix_min_y_[i] = idx.by_x_[i].y;
        if (i && idx.prefix_min_y_[i - 1] < idx.prefix_min_y_[i])
            idx.prefix_min_y_[i] = idx.prefix_min_y_[i - 1];
    }
    for (size_t i = n; i-- > 0;) {
        idx.suffix_max_y_[i] = idx.by_x_[i].y;
        if (i + 1 < n && idx.suffix_max_y_[i + 1] > idx.suffix_max_y_[i])
            idx.suffix_max_y_[i] = idx.suffix_max_y_[i + 1];
    }
    return idx;
}

bool PointIndex::some_leq(const Pt& e) const {
    // members with x <= e.x form a prefix
    size_t lo = 0, hi = by_x_.size();
    while (lo < hi) {
        size_t mid = (lo + hi) / 2;
        if (by_x_[mid].x <= e.x)
            lo = mid + 1;
        else
            hi = mid;
    }
    if (lo == 0) return false;
    return prefix_min_y_[lo - 1] <= e.y;
}

bool PointIndex::some_geq(const Pt& e) const {
    size_t lo = 0, hi = by_x_.size();
    while (lo < hi) {
        size_t mid = (lo + hi) / 2;
        if (by_x_[mid].x < e.x)
            lo = mid + 1;
        else
            hi = mid;
    }
    if (lo == by_x_.size()) return false;
    return suffix_max_y_[lo] >= e.y;
}

Pt ConvexDriver::to_pt(const Element& e) const {
    if (dense_) {
        auto [x, y] = QxqStructure::coords(e);
        return {x, y};
    }
    auto [m, n] = ZxzStructure::coords(e);
    return {Rat(m), Rat(n)};
}

Element ConvexDriver::to_el(const Pt& p) const {
    if (dense_) return QxqStructure::make(p.x, p.y);
    if (boost::multiprecision::denominator(p.x) != 1 ||
        boost::multiprecision::denominator(p.y) != 1)
        throw InternalError("convex: non-integral point on the integer plane");
    return ZxzStructure::make(boost::multiprecision::numerator(p.x),
                              boost::multiprecision::numerator(p.y));
}

void ConvexDriver::absorb(const Pt& p) {
    if (!have_field_) {
        fmin_ = fmax_ = p;
        have_field_ = true;
        return;
    }
    fmin_.x = std::min(fmin_.x, p.x);
    fmin_.y = std::min(fmin_.y, p.y);
    fmax_.x = std::max(fmax_.x, p.x);
    fmax_.y = std::max(fmax_.y, p.y);
}

void ConvexDriver::rebuild() {
    min_idx_ = PointIndex::build(minima_);
    max_idx_ = PointIndex::build(maxima_);
}

Element ConvexDriver::lower_bound_el() const {
    if (!have_field_) throw InternalError("convex: bounds before field exists");
    return to_el({fmin_.x - 1, fmin_.y - 1});
}

Element ConvexDriver::upper_bound_el() const {
    if (!have_field_) throw InternalError("convex: bounds before field exists");
    return to_el({fmax_.x + 1, fmax_.y + 1});
}

void ConvexDriver::init(const PairList& seed) {
    std::vector<Pt> dom;
    for (const auto& [x, y] : seed) {
        dom.push_back(to_pt(x));
        absorb(to_pt(x));
        absorb(to_pt(y));
    }
    for (const auto& d : dom) {
        bool is_min = true, is_max = true;
        for (const auto& o : dom) {
            if (o == d) continue;
            if (pt_leq(o, d)) is_min = false;
            if (pt_leq(d, o)) is_max = false;
        }
        if (is_min) minima_.push_back(d);
        if (is_max) maxima_.push_back(d);
    }
    rebuild();
}

bool ConvexDriver::in_sandwich(const Pt& z) const {
    return min_idx_.some_leq(z) && max_idx_.some_geq(z);
}

bool ConvexDriver::dom_covers(const PartialCondensation& m, const Element& e) const {
    if (!dense_) return m.in_dom(e.enc);
    return in_sandwich(to_pt(e));
}

bool ConvexDriver::ran_covers(const PartialCondensation& m, const Element& e) const {
    if (m.in_ran(e.enc)) return true;
    if (!dense_) return false;
    Pt w = to_pt(e);
    for (const auto& r : regions_) {
        Pt z = pt_sub(w, r.v);
        if (r.kase == 1) {
            if (pt_leq(z, r.a) && r.min_before.some_leq(z) && !r.max_before.some_geq(z))
                return true;
        } else {
            if (pt_leq(r.a, z) && r.max_before.some_geq(z) && !r.min_before.some_leq(z))
                return true;
        }
    }
    return false;
}

PairList ConvexDriver::glue_integral(const PartialCondensation& m, const Pt& a, const Pt& v,
                                     bool below_side) {
    // Region: sandwiched against the one-sided antichain, capped by the target.
    Big ax = boost::multiprecision::numerator(a.x), ay = boost::multiprecision::numerator(a.y);
    Big lox = ax, loy = ay, hix = ax, hiy = ay;
    const auto& anchors = below_side ? minima_ : maxima_;
    bool any = false;
    for (const auto& c : anchors) {
        if (below_side ? !pt_leq(c, a) : !pt_leq(a, c)) continue;
        any = true;
        Big cx = boost::multiprecision::numerator(c.x), cy = boost::multiprecision::numerator(c.y);
        if (below_side) {
            lox = std::min(lox, cx);
            loy = std::min(loy, cy);
        } else {
            hix = std::max(hix, cx);
            hiy = std::max(hiy, cy);
        }
    }
    if (!any) throw InternalError("convex: glue without an anchor");
    if ((hix - lox + 1) * (hiy - loy + 1) > 4000000)
        throw CapabilityError("convex: glue region too large to scan");
    PairList added;
    for (Big x = lox; x <= hix; ++x) {
        for (Big y = loy; y <= hiy; ++y) {
            Pt z{Rat(x), Rat(y)};
            if (below_side ? !min_idx_.some_leq(z) : !max_idx_.some_geq(z)) continue;
            Element ze = to_el(z);
            if (m.in_dom(ze.enc)) continue;
            added.emplace_back(ze, to_el(pt_add(z, v)));
        }
    }
    std::sort(added.begin(), added.end(), [](const ElementPair& p, const ElementPair& q) {
        return p.first.index < q.first.index;
    });
    return added;
}

PairList ConvexDriver::dom_step(const PartialCondensation& m, const Element& target) {
    Pt a = to_pt(target);
    bool below = min_idx_.some_leq(a);
    bool above = max_idx_.some_geq(a);
    if (below && above) throw InternalError("convex: target already inside the region");
    PairList added;
    if (below) {  // glue the part below the target, translated above everything
        Pt v = {fmax_.x + 1 - (fmin_.x - 1), fmax_.y + 1 - (fmin_.y - 1)};
        if (dense_) {
            added.emplace_back(target, to_el(pt_add(a, v)));
            regions_.push_back({1, a, v, PointIndex::build(minima_), PointIndex::build(maxima_)});
        } else {
            added = glue_integral(m, a, v, true);
        }
        std::vector<Pt> keep;
        for (const auto& M : maxima_)
            if (!pt_leq(M, a)) keep.push_back(M);
        keep.push_back(a);
        maxima_ = std::move(keep);
    } else if (above) {  // dual: glue the part above, translated below everything
        Pt v = {fmin_.x - 1 - (fmax_.x + 1), fmin_.y - 1 - (fmax_.y + 1)};
        if (dense_) {
            added.emplace_back(target, to_el(pt_add(a, v)));
            regions_.push_back({2, a, v, PointIndex::build(minima_), PointIndex::build(maxima_)});
        } else {
            added = glue_integral(m, a, v, false);
        }
        std::vector<Pt> keep;
        for (const auto& mn : minima_)
            if (!pt_leq(a, mn)) keep.push_back(mn);
        keep.push_back(a);
        minima_ = std::move(keep);
    } else {  // isolated: image is the corner incomparable to the whole box
        Pt corner{fmin_.x - 1 - 1, fmax_.y + 1 + 1};
        added.emplace_back(target, to_el(corner));
        minima_.push_back(a);
        maxima_.push_back(a);
    }
    rebuild();
    for (const auto& [x, y] : added) {
        absorb(to_pt(x));
        absorb(to_pt(y));
    }
    return added;
}

PairList ConvexDriver::ran_step(const PartialCondensation&, const Element& target) {
    Pt corner{fmin_.x - 1 - 1, fmax_.y + 1 + 1};
    PairList added;
    added.emplace_back(to_el(corner), target);
    minima_.push_back(corner);
    maxima_.push_back(corner);
    rebuild();
    absorb(corner);
    absorb(to_pt(target));
    return added;
}

bool integral_convex_grid(const std::vector<Pt>& dom_pts) {
    // Bounding box of all comparable pairs; witnesses outside it cannot matter.
    bool any = false;
    Big lox = 0, loy = 0, hix = 0, hiy = 0;
    auto num = [](const Rat& r) { return boost::multiprecision::numerator(r); };
    for (size_t i = 0; i < dom_pts.size(); ++i)
        for (size_t j = 0; j < dom_pts.size(); ++j) {
            if (i == j || !pt_leq(dom_pts[i], dom_pts[j])) continue;
            if (!any) {
                lox = num(dom_pts[i].x);
                loy = num(dom_pts[i].y);
                hix = num(dom_pts[j].x);
                hiy = num(dom_pts[j].y);
                any = true;
            } else {
                lox = std::min(lox, num(dom_pts[i].x));
                loy = std::min(loy, num(dom_pts[i].y));
                hix = std::max(hix, num(dom_pts[j].x));
                hiy = std::max(hiy, num(dom_pts[j].y));
            }
        }
    if (!any) return true;
    Big w = hix - lox + 1, h = hiy - loy + 1;
    if (w * h > 16000000) throw CapabilityError("convexity grid too large to scan");
    size_t W = w.convert_to<size_t>(), H = h.convert_to<size_t>();
    std::vector<char> in(W * H, 0), below(W * H, 0), above(W * H, 0);
    for (const auto& p : dom_pts) {
        Big px = num(p.x), py = num(p.y);
        if (px < lox || px > hix || py < loy || py > hiy) continue;
        in[(px - lox).convert_to<size_t>() * H + (py - loy).convert_to<size_t>()] = 1;
    }
    for (size_t i = 0; i < W; ++i)
        for (size_t j = 0; j < H; ++j) {
            size_t k = i * H + j;
            below[k] = in[k] || (i > 0 && below[k - H]) || (j > 0 && below[k - 1]);
        }
    for (size_t i = W; i-- > 0;)
        for (size_t j = H; j-- > 0;) {
            size_t k = i * H + j;
            above[k] = in[k] || (i + 1 < W && above[k + H]) || (j + 1 < H && above[k + 1]);
        }
    for (size_t k = 0; k < W * H; ++k)
        if (!in[k] && below[k] && above[k]) return false;
    return true;
}

bool integral_convex_literal(const std::vector<Pt>& dom_pts) {
    auto num = [](const Rat& r) { return boost::multiprecision::numerator(r); };
    std::unordered_set<std::string> have;
    for (const auto& p : dom_pts)
        have.insert(num(p.x).str() + "," + num(p.y).str());
    for (size_t i = 0; i < dom_pts.size(); ++i)
        for (size_t j = 0; j < dom_pts.size(); ++j) {
            if (i == j || !pt_leq(dom_pts[i], dom_pts[j])) continue;
            for (Big x = num(dom_pts[i].x); x <= num(dom_pts[j].x); ++x)
                for (Big y = num(dom_pts[i].y); y <= num(dom_pts[j].y); ++y)
                    if (!have.count(x.str() + "," + y.str())) return false;
        }
    return true;
}

}  // namespace revwit
