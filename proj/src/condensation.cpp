#include "revwit/condensation.hpp"

#include <algorithm>

namespace revwit {

const Element& PartialCondensation::image(const std::string& dom_enc) const {
    auto it = dom_pos_.find(dom_enc);
    if (it == dom_pos_.end()) throw InternalError("condensation: image of element outside domain");
    return pairs_[it->second].second;
}

void PartialCondensation::add(const Element& x, const Element& y) {
    if (!dom_.insert(x.enc).second) throw InternalError("condensation: domain entry repeated: " + x.enc);
    if (!ran_.insert(y.enc).second) throw InternalError("condensation: range entry repeated: " + y.enc);
    dom_pos_[x.enc] = pairs_.size();
    pairs_.emplace_back(x, y);
}

MapReport verify_pairs(const Structure& s, const PairList& pairs) {
    MapReport rep;
    for (size_t i = 0; i < pairs.size(); ++i) {
        for (size_t j = 0; j < pairs.size(); ++j) {
            if (i == j) continue;
            if (j > i && pairs[i].first.enc == pairs[j].first.enc)
                rep.violations.push_back({"functional", i, j});
            if (j > i && pairs[i].second.enc == pairs[j].second.enc)
                rep.violations.push_back({"injective", i, j});
            if (s.leq(pairs[i].first, pairs[j].first) &&
                !s.leq(pairs[i].second, pairs[j].second))
                rep.violations.push_back({"homomorphism", i, j});
        }
    }
    rep.ok = rep.violations.empty();
    return rep;
}

MapReport verify_extension(const Structure& s, const PartialCondensation& base,
                           const PairList& added) {
    MapReport rep;
    const PairList& old_pairs = base.pairs();
    for (size_t i = 0; i < added.size(); ++i) {
        if (base.in_dom(added[i].first.enc))
            rep.violations.push_back({"functional", old_pairs.size() + i, old_pairs.size() + i});
        if (base.in_ran(added[i].second.enc))
            rep.violations.push_back({"injective", old_pairs.size() + i, old_pairs.size() + i});
        for (size_t k = 0; k < old_pairs.size(); ++k) {
            if (s.leq(added[i].first, old_pairs[k].first) &&
                !s.leq(added[i].second, old_pairs[k].second))
                rep.violations.push_back({"homomorphism", old_pairs.size() + i, k});
            if (s.leq(old_pairs[k].first, added[i].first) &&
                !s.leq(old_pairs[k].second, added[i].second))
                rep.violations.push_back({"homomorphism", k, old_pairs.size() + i});
        }
        for (size_t j = 0; j < added.size(); ++j) {
            if (i == j) continue;
            if (j > i && added[i].first.enc == added[j].first.enc)
                rep.violations.push_back({"functional", old_pairs.size() + i, old_pairs.size() + j});
            if (j > i && added[i].second.enc == added[j].second.enc)
                rep.violations.push_back({"injective", old_pairs.size() + i, old_pairs.size() + j});
            if (s.leq(added[i].first, added[j].first) &&
                !s.leq(added[i].second, added[j].second))
                rep.violations.push_back({"homomorphism", old_pairs.size() + i, old_pairs.size() + j});
        }
    }
    rep.ok = rep.violations.empty();
    return rep;
}

std::optional<BadWitness> find_bad_witness(const Structure& s, const PairList& pairs) {
    std::vector<size_t> order(pairs.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        return pairs[a].first.index < pairs[b].first.index;
    });
    for (size_t a : order) {
        for (size_t b : order) {
            if (a == b) continue;
            if (!s.leq(pairs[a].first, pairs[b].first) &&
                s.leq(pairs[a].second, pairs[b].second))
                return BadWitness{pairs[a].first, pairs[b].first,
                                  pairs[a].second, pairs[b].second};
        }
    }
    return std::nullopt;
}

bool is_extension(const PairList& base, const PairList& ext) {
    for (const auto& [x, y] : base) {
        bool found = false;
        for (const auto& [u, v] : ext)
            if (u.enc == x.enc && v.enc == y.enc) { found = true; break; }
        if (!found) return false;
    }
    return true;
}

}  // namespace revwit
