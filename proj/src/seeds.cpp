#include <sstream>

#include "revwit/random_poset.hpp"
#include "revwit/strategy.hpp"

namespace revwit {

namespace {

// First incomparable pair in enumeration order: scan j ascending, i < j.
std::pair<Element, Element> first_incomparable(const Structure& s) {
    for (Big j = 1; j < 4096; ++j) {
        Element ej = s.at(j);
        for (Big i = 0; i < j; ++i) {
            Element ei = s.at(i);
            if (s.incomparable(ei, ej)) return {ei, ej};
        }
    }
    throw InternalError(s.id() + ": no incomparable pair found in the enumeration prefix");
}

Element least_successor(const Structure& s, const Element& a) {
    return s.increasing_chain_above(a, {}, 1).at(0);
}

std::string seed_shape(const Structure& s, const std::string& strategy_id) {
    if (strategy_id == "universal") return "two-pairs";
    if (strategy_id == "convex") return "swap";
    if (strategy_id == "rooted-directed" && !s.caps().rooted) return "swap";
    return "rooted-swap";  // well-founded, rooted-directed on rooted structures
}

}  // namespace

SeedSpec parse_seed_spec(const std::string& text) {
    SeedSpec spec;
    if (text.empty() || text == "default") return spec;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ';')) {
        auto eq = tok.find('=');
        if (eq == std::string::npos || eq == 0)
            throw SeedError("seed spec entries must be name=encoding: " + tok);
        std::string name = tok.substr(0, eq);
        if (name != "r" && name != "a0" && name != "a1" && name != "b0" && name != "b1")
            throw SeedError("unknown seed component: " + name);
        if (!spec.overrides.emplace(name, tok.substr(eq + 1)).second)
            throw SeedError("seed component repeated: " + name);
    }
    if (spec.overrides.empty()) throw SeedError("empty seed spec");
    return spec;
}

PairList build_seed(Structure& s, const std::string& strategy_id, const SeedSpec& spec) {
    if (!strategy_compatible(s.id(), strategy_id))
        throw CapabilityError("strategy " + strategy_id + " does not apply to " + s.id());
    std::string shape = seed_shape(s, strategy_id);

    std::map<std::string, Element> parts;
    auto [a0, a1] = first_incomparable(s);
    parts.emplace("a0", a0);
    parts.emplace("a1", a1);
    if (shape == "two-pairs") {  // random poset protocol vertices
        parts.emplace("b0", s.at(2));
        parts.emplace("b1", s.at(3));
    } else if (strategy_id == "convex") {
        parts.emplace("b0", s.upper_bound({a0, a1}));
    } else {
        parts.emplace("b0", least_successor(s, a0));
    }
    if (shape == "rooted-swap") parts.emplace("r", s.at(0));

    for (const auto& [name, enc] : spec.overrides) {
        if (!parts.count(name))
            throw SeedError("seed component " + name + " not used by strategy " + strategy_id);
        Element e = s.parse(enc);
        if (auto limit = s.enumeration_limit(); limit && e.index >= *limit)
            throw SeedError("seed element does not exist yet: " + enc);
        parts.at(name) = e;
    }

    PairList seed;
    if (shape == "two-pairs") {
        seed.emplace_back(parts.at("a0"), parts.at("b0"));
        seed.emplace_back(parts.at("a1"), parts.at("b1"));
    } else {
        if (shape == "rooted-swap") seed.emplace_back(parts.at("r"), parts.at("r"));
        seed.emplace_back(parts.at("a0"), parts.at("b0"));
        seed.emplace_back(parts.at("a1"), parts.at("a0"));
    }

    // ---- validation; reject rather than repair ----
    auto rep = verify_pairs(s, seed);
    if (!rep.ok)
        throw SeedError("seed is not an injective order-preserving map (" +
                        rep.violations.front().kind + " violation)");
    if (!find_bad_witness(s, seed))
        throw SeedError("seed admits no witness pair: it embeds rather than condenses");

    if (shape == "rooted-swap") {
        if (parts.at("r").enc != s.at(0).enc)
            throw SeedError("seed root must be the least element " + s.at(0).enc);
        if (!s.lt(parts.at("a0"), parts.at("b0")))
            throw SeedError("seed needs a0 strictly below b0");
        for (const char* n : {"a0", "a1"})
            if (!s.in_minimal_layer(parts.at(n)))
                throw SeedError(std::string("seed component ") + n + " must lie in the minimal layer");
    } else if (shape == "swap" && strategy_id == "rooted-directed") {
        if (!s.lt(parts.at("a0"), parts.at("b0")))
            throw SeedError("seed needs a0 strictly below b0");
        for (const char* n : {"a0", "a1"})
            if (!s.in_minimal_layer(parts.at(n)))
                throw SeedError(std::string("seed component ") + n + " must lie in the minimal layer");
    } else if (strategy_id == "convex") {
        if (!s.incomparable(parts.at("a0"), parts.at("a1")))
            throw SeedError("convex seed domain must be an antichain");
        if (!s.lt(parts.at("a0"), parts.at("b0")))
            throw SeedError("seed needs a0 strictly below b0");
    }

    // open-domain strategies start from a downward-closed domain
    if (strategy_id == "well-founded" || strategy_id == "rooted-directed") {
        std::vector<Element> dom;
        for (const auto& [x, y] : seed) {
            (void)y;
            dom.push_back(x);
        }
        for (const auto& z : down_closure(s, dom)) {
            bool found = false;
            for (const auto& d : dom)
                if (d.enc == z.enc) { found = true; break; }
            if (!found) throw SeedError("seed domain is not downward closed; missing " + z.enc);
        }
    }
    return seed;
}

}  // namespace revwit
