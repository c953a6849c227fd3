#include "revwit/strategy.hpp"

#include <algorithm>

#include "revwit/convex.hpp"
#include "revwit/finite_poset.hpp"
#include "revwit/random_poset.hpp"

namespace revwit {

namespace {

struct WellFoundedStrategy : Strategy {
    explicit WellFoundedStrategy(const Structure& s) : s_(s) {}
    std::string id() const override { return "well-founded"; }
    std::string invariant() const override { return "open-domain"; }
    void init(const PartialCondensation&) override {}

    PairList extend_dom(const PartialCondensation& m, const Element& target) override {
        std::vector<Element> dprime, images;
        for (auto& z : s_.principal_ideal(target)) {
            if (m.in_dom(z.enc))
                images.push_back(m.image(z.enc));
            else
                dprime.push_back(z);
        }
        if (dprime.empty()) throw InternalError("well-founded: target already covered");
        Element p = s_.upper_bound(images);
        auto order = FinitePoset::fragment(s_, dprime).linear_extension();
        auto chain = s_.increasing_chain_above(p, m.ran_encs(), dprime.size());
        PairList added;
        for (size_t t = 0; t < order.size(); ++t) added.emplace_back(dprime[order[t]], chain[t]);
        std::sort(added.begin(), added.end(), [](const ElementPair& a, const ElementPair& b) {
            return a.first.index < b.first.index;
        });
        return added;
    }

    PairList extend_ran(const PartialCondensation& m, const Element& target) override {
        Element a = s_.fresh_min_avoiding(
            SkipFn([&m](const Element& e) { return m.in_dom(e.enc); }));
        return {{a, target}};
    }

    const Structure& s_;
};

struct RootedDirectedStrategy : Strategy {
    explicit RootedDirectedStrategy(const Structure& s) : s_(s), rooted_(s.caps().rooted) {}
    std::string id() const override { return "rooted-directed"; }
    std::string invariant() const override { return "open-domain+bounded-field"; }

    void init(const PartialCondensation& seed) override {
        std::vector<Element> field;
        for (const auto& [x, y] : seed.pairs()) {
            field.push_back(x);
            field.push_back(y);
        }
        bound_ = s_.upper_bound(field);
    }

    PairList extend_dom(const PartialCondensation& m, const Element& target) override {
        Element p2 = s_.strict_upper_bound({*bound_});
        PairList added;
        Element img_target = target;
        bool saw_target = false;
        for (auto& [z, w] : s_.embed_ideal_above(target, p2)) {
            if (z.enc == target.enc) {
                img_target = w;
                saw_target = true;
            }
            if (m.in_dom(z.enc)) continue;
            added.emplace_back(z, w);
        }
        if (!saw_target) throw InternalError("rooted-directed: embedding misses the target");
        bound_ = s_.strict_upper_bound({*bound_, target, img_target});
        return added;
    }

    PairList extend_ran(const PartialCondensation& m, const Element& target) override {
        Element a = s_.fresh_min_avoiding(SkipFn(
            [&](const Element& e) { return m.in_dom(e.enc) || s_.leq(e, *bound_); }));
        bound_ = s_.strict_upper_bound({*bound_, a, target});
        return {{a, target}};
    }

    std::optional<FieldBounds> bounds() const override {
        FieldBounds b{std::nullopt, *bound_};
        if (rooted_) b.p = s_.at(0);
        return b;
    }

    const Structure& s_;
    bool rooted_;
    std::optional<Element> bound_;
};

struct ConvexStrategy : Strategy {
    ConvexStrategy(const Structure& s, bool dense) : driver_(s, dense) {}
    std::string id() const override { return "convex"; }
    std::string invariant() const override { return "convex+bounded-field"; }
    void init(const PartialCondensation& seed) override { driver_.init(seed.pairs()); }
    bool dom_covers(const PartialCondensation& m, const Element& e) const override {
        return driver_.dom_covers(m, e);
    }
    bool ran_covers(const PartialCondensation& m, const Element& e) const override {
        return driver_.ran_covers(m, e);
    }
    PairList extend_dom(const PartialCondensation& m, const Element& target) override {
        return driver_.dom_step(m, target);
    }
    PairList extend_ran(const PartialCondensation& m, const Element& target) override {
        return driver_.ran_step(m, target);
    }
    std::optional<FieldBounds> bounds() const override {
        return FieldBounds{driver_.lower_bound_el(), driver_.upper_bound_el()};
    }

    ConvexDriver driver_;
};

struct UniversalStrategy : Strategy {
    explicit UniversalStrategy(Structure& s) : rp_(dynamic_cast<RandomPosetStructure*>(&s)) {
        if (!rp_) throw CapabilityError("universal: requires the random poset");
    }
    std::string id() const override { return "universal"; }
    std::string invariant() const override { return "none"; }
    void init(const PartialCondensation&) override {}

    PairList extend_dom(const PartialCondensation& m, const Element& target) override {
        size_t va = RandomPosetStructure::vertex(target);
        auto& st = rp_->state();
        std::vector<size_t> L, G, U;
        for (const auto& [x, y] : m.pairs()) {
            size_t vx = RandomPosetStructure::vertex(x);
            size_t vy = RandomPosetStructure::vertex(y);
            if (st.lt(vx, va))
                L.push_back(vy);
            else if (st.lt(va, vx))
                G.push_back(vy);
        }
        for (const auto& [x, y] : m.pairs()) {
            (void)x;
            size_t vy = RandomPosetStructure::vertex(y);
            bool forced = false;
            for (size_t l : L)
                if (vy == l || st.lt(vy, l)) { forced = true; break; }
            for (size_t g : G)
                if (!forced && (vy == g || st.lt(g, vy))) forced = true;
            if (!forced) U.push_back(vy);
        }
        size_t vb = st.add_vertex(L, G, U);
        return {{target, rp_->vertex_element(vb)}};
    }

    PairList extend_ran(const PartialCondensation& m, const Element& target) override {
        std::vector<size_t> U;
        for (const auto& [x, y] : m.pairs()) {
            (void)y;
            U.push_back(RandomPosetStructure::vertex(x));
        }
        size_t va = rp_->state().add_vertex({}, {}, U);
        return {{rp_->vertex_element(va), target}};
    }

    RandomPosetStructure* rp_;
};

}  // namespace

std::vector<std::string> strategy_ids() {
    return {"well-founded", "rooted-directed", "convex", "universal"};
}

std::string strategy_invariant(const std::string& strategy_id) {
    if (strategy_id == "well-founded") return "open-domain";
    if (strategy_id == "rooted-directed") return "open-domain+bounded-field";
    if (strategy_id == "convex") return "convex+bounded-field";
    if (strategy_id == "universal") return "none";
    throw ParseError("unknown strategy id: " + strategy_id);
}

bool strategy_compatible(const std::string& structure_id, const std::string& strategy_id) {
    bool level = structure_id.rfind("level-restricted", 0) == 0;
    if (strategy_id == "well-founded")
        return structure_id == "divisibility" || structure_id == "finite-sets" || level ||
               structure_id == "fn-omega" || structure_id == "fin-support";
    if (strategy_id == "rooted-directed")
        return structure_id == "divisibility" || structure_id == "finite-sets" ||
               structure_id == "fin-support" || structure_id == "half-plane";
    if (strategy_id == "convex") return structure_id == "zxz" || structure_id == "qxq";
    if (strategy_id == "universal") return structure_id == "random-poset";
    throw ParseError("unknown strategy id: " + strategy_id);
}

std::unique_ptr<Strategy> make_strategy(Structure& s, const std::string& strategy_id) {
    if (!strategy_compatible(s.id(), strategy_id))
        throw CapabilityError("strategy " + strategy_id + " does not apply to " + s.id());
    if (strategy_id == "well-founded") return std::make_unique<WellFoundedStrategy>(s);
    if (strategy_id == "rooted-directed") return std::make_unique<RootedDirectedStrategy>(s);
    if (strategy_id == "convex") return std::make_unique<ConvexStrategy>(s, s.id() == "qxq");
    if (strategy_id == "universal") return std::make_unique<UniversalStrategy>(s);
    throw ParseError("unknown strategy id: " + strategy_id);
}

}  // namespace revwit
