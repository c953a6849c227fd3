#include "revwit/structure.hpp"

#include <algorithm>

#include "revwit/random_poset.hpp"
#include "revwit/structures.hpp"

namespace revwit {

std::vector<Element> Structure::principal_ideal(const Element&) const {
    throw CapabilityError(id() + ": principal_ideal not supported");
}

Element Structure::upper_bound(const std::vector<Element>&) const {
    throw CapabilityError(id() + ": upper_bound not supported");
}

Element Structure::strict_upper_bound(const std::vector<Element>&) const {
    throw CapabilityError(id() + ": strict_upper_bound not supported");
}

Element Structure::fresh_min_avoiding(const SkipFn&) const {
    throw CapabilityError(id() + ": fresh_min_avoiding not supported");
}

Element Structure::fresh_min_avoiding(const std::unordered_set<std::string>& avoid) const {
    return fresh_min_avoiding(SkipFn([&avoid](const Element& e) { return avoid.count(e.enc) > 0; }));
}

bool Structure::in_minimal_layer(const Element&) const {
    throw CapabilityError(id() + ": in_minimal_layer not supported");
}

void Structure::for_successors(const Element&, const std::function<bool(const Element&)>&) const {
    throw CapabilityError(id() + ": successor iteration not supported");
}

std::vector<Element> Structure::increasing_chain_above(const Element& p,
                                                       const std::unordered_set<std::string>& avoid,
                                                       size_t k) const {
    std::vector<Element> out;
    Element cur = p;
    while (out.size() < k) {
        bool found = false;
        Element next = cur;
        for_successors(cur, [&](const Element& s) {
            if (avoid.count(s.enc)) return true;
            next = s;
            found = true;
            return false;
        });
        if (!found) throw InternalError(id() + ": successor iteration exhausted");
        out.push_back(next);
        cur = next;
    }
    return out;
}

std::vector<std::pair<Element, Element>> Structure::embed_ideal_above(const Element&,
                                                                      const Element&) const {
    throw CapabilityError(id() + ": embed_ideal_above not supported");
}

SuccessorResult Structure::immediate_successors(const Element& x, const Big& budget) const {
    SuccessorResult r;
    r.complete = true;
    for_successors(x, [&](const Element& s) {
        if (s.index >= budget) return false;  // indices ascend; window exhausted
        r.found.push_back(s);
        return true;
    });
    return r;
}

std::vector<Element> down_closure(const Structure& s, const std::vector<Element>& xs) {
    std::vector<Element> out;
    std::unordered_set<std::string> seen;
    for (const auto& x : xs) {
        for (auto& z : s.principal_ideal(x)) {
            if (seen.insert(z.enc).second) out.push_back(std::move(z));
        }
    }
    std::sort(out.begin(), out.end(),
              [](const Element& a, const Element& b) { return a.index < b.index; });
    return out;
}

std::unique_ptr<Structure> make_structure(const std::string& id) {
    if (id == "divisibility") return std::make_unique<DivisibilityStructure>();
    if (id == "finite-sets") return std::make_unique<FiniteSetsStructure>();
    if (id == "level-restricted") return std::make_unique<LevelRestrictedStructure>("");
    if (id.rfind("level-restricted(", 0) == 0 && id.back() == ')') {
        return std::make_unique<LevelRestrictedStructure>(
            id.substr(17, id.size() - 18));
    }
    if (id == "fn-omega") return std::make_unique<FnStructure>(false);
    if (id == "fin-support") return std::make_unique<FnStructure>(true);
    if (id == "half-plane") return std::make_unique<HalfPlaneStructure>();
    if (id == "zxz") return std::make_unique<ZxzStructure>();
    if (id == "qxq") return std::make_unique<QxqStructure>();
    if (id == "random-poset") return std::make_unique<RandomPosetStructure>();
    if (id == "product(divisibility,z)") return std::make_unique<ProductDivZStructure>();
    throw ParseError("unknown structure id: " + id);
}

std::vector<std::string> structure_ids() {
    return {"divisibility", "finite-sets",  "level-restricted", "level-restricted(even)",
            "fn-omega",     "fin-support",  "half-plane",       "zxz",
            "qxq",          "random-poset", "product(divisibility,z)"};
}

}  // namespace revwit
