#include "revwit/lifts.hpp"

#include <algorithm>
#include <unordered_map>

#include "revwit/structures.hpp"

namespace revwit {

bool is_lift_strategy(const std::string& strategy_id) {
    return strategy_id == "product-lift" || strategy_id == "subset-lift";
}

namespace {

std::unordered_map<std::string, std::string> map_of(const PairList& pairs) {
    std::unordered_map<std::string, std::string> f;
    for (const auto& [x, y] : pairs) f.emplace(x.enc, y.enc);
    return f;
}

void finish_lift(const Structure& s, Certificate& c) {
    PartialCondensation m;
    for (const auto& [x, y] : c.final_pairs) m.add(x, y);
    unsigned long long dp = 0, rp = 0;
    while (m.in_dom(s.at(Big(dp)).enc)) ++dp;
    while (m.in_ran(s.at(Big(rp)).enc)) ++rp;
    c.dom_prefix = dp;
    c.ran_prefix = rp;
}

}  // namespace

Certificate product_lift(const Certificate& base, unsigned long long prefix) {
    if (base.structure != "divisibility")
        throw CapabilityError("product-lift needs a divisibility certificate");
    ProductDivZStructure prod;
    auto f = map_of(base.final_pairs);
    auto lift = [&](const Element& e) {
        auto [d, z] = ProductDivZStructure::coords(e);
        auto it = f.find(big_str(d));
        if (it == f.end()) return std::optional<Element>();
        return std::optional<Element>(ProductDivZStructure::make(parse_big(it->second), z));
    };
    auto at_zero = [&](const Element& e) {
        return ProductDivZStructure::make(parse_big(e.enc), 0);
    };

    Certificate c;
    c.structure = prod.id();
    c.strategy = "product-lift";
    c.invariant = "none";
    for (const auto& [x, y] : base.seed) c.seed.emplace_back(at_zero(x), at_zero(y));
    c.witness = {at_zero(base.witness.x1), at_zero(base.witness.x2), at_zero(base.witness.y1),
                 at_zero(base.witness.y2)};
    c.final_pairs = c.seed;

    PartialCondensation m;
    for (const auto& [x, y] : c.seed) m.add(x, y);
    for (unsigned long long n = 0; n < prefix; ++n) {
        Element e = prod.at(Big(n));
        if (m.in_dom(e.enc)) continue;
        auto img = lift(e);
        if (!img) continue;
        m.add(e, *img);
        c.steps.push_back({"dom", e, {{e, *img}}});
        c.final_pairs.emplace_back(e, *img);
    }
    finish_lift(prod, c);
    return c;
}

Certificate subset_lift(const Certificate& base, unsigned long long prefix) {
    if (base.structure != "finite-sets")
        throw CapabilityError("subset-lift needs a finite-sets certificate");
    FiniteSetsStructure sets;
    auto f = map_of(base.final_pairs);
    auto doubled = [&](const Element& e) {
        std::vector<long long> ms = FiniteSetsStructure::members(e);
        for (auto& k : ms) k *= 2;
        return FiniteSetsStructure::make(ms);
    };
    // F(A) = doubled(f(halved(A cap evens))) cup (A cap odds), defined when the
    // halved even part lies in dom f.
    auto lift = [&](const Element& e) -> std::optional<Element> {
        std::vector<long long> evens, odds;
        for (long long k : FiniteSetsStructure::members(e))
            (k % 2 == 0 ? evens : odds).push_back(k);
        for (auto& k : evens) k /= 2;
        auto it = f.find(FiniteSetsStructure::make(evens).enc);
        if (it == f.end()) return std::nullopt;
        std::vector<long long> img = FiniteSetsStructure::members(doubled(Element{it->second, 0}));
        img.insert(img.end(), odds.begin(), odds.end());
        std::sort(img.begin(), img.end());
        return FiniteSetsStructure::make(img);
    };

    Certificate c;
    c.structure = sets.id();
    c.strategy = "subset-lift";
    c.invariant = "none";
    for (const auto& [x, y] : base.seed) c.seed.emplace_back(doubled(x), doubled(y));
    c.witness = {doubled(base.witness.x1), doubled(base.witness.x2), doubled(base.witness.y1),
                 doubled(base.witness.y2)};
    c.final_pairs = c.seed;

    PartialCondensation m;
    for (const auto& [x, y] : c.seed) m.add(x, y);
    for (unsigned long long n = 0; n < prefix; ++n) {
        Element e = sets.at(Big(n));
        if (m.in_dom(e.enc)) continue;
        auto img = lift(e);
        if (!img) continue;
        m.add(e, *img);
        c.steps.push_back({"dom", e, {{e, *img}}});
        c.final_pairs.emplace_back(e, *img);
    }
    finish_lift(sets, c);
    return c;
}

}  // namespace revwit
