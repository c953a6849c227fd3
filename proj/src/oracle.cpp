#include "revwit/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <unordered_set>

#include "revwit/convex.hpp"
#include "revwit/random_poset.hpp"
#include "revwit/structures.hpp"

namespace revwit {

ScanReport exhaustive_endo_scan(const FinitePoset& fp) {
    if (fp.size() > 8) throw CapabilityError("endomorphism scan is limited to 8 elements");
    size_t n = fp.size();
    ScanReport r;
    r.size = n;
    std::vector<size_t> perm(n);
    std::iota(perm.begin(), perm.end(), size_t(0));
    do {
        ++r.bijections;
        bool hom = true, iso = true;
        for (size_t i = 0; i < n && (hom || iso); ++i)
            for (size_t j = 0; j < n; ++j) {
                if (fp.le[i][j] && !fp.le[perm[i]][perm[j]]) hom = false;
                if (fp.le[i][j] != fp.le[perm[i]][perm[j]]) iso = false;
            }
        if (hom) ++r.hom_bijections;
        if (hom && iso) ++r.automorphisms;
        if (hom && !iso) {
            std::string desc;
            for (size_t i = 0; i < n; ++i)
                desc += fp.elems[i].enc + "->" + fp.elems[perm[i]].enc + (i + 1 < n ? " " : "");
            r.bad.push_back(desc);
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return r;
}

std::vector<FinitePoset> all_labeled_posets(size_t n) {
    if (n > 6) throw CapabilityError("labeled poset generation is limited to 6 points");
    std::vector<std::pair<size_t, size_t>> pairs;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    std::vector<Element> elems;
    for (size_t i = 0; i < n; ++i) elems.push_back(Element{"p" + std::to_string(i), Big(i)});

    std::vector<FinitePoset> out;
    unsigned long long total = 1;
    for (size_t k = 0; k < pairs.size(); ++k) total *= 3;
    for (unsigned long long code = 0; code < total; ++code) {
        std::vector<std::vector<char>> lt(n, std::vector<char>(n, 0));
        unsigned long long c = code;
        for (const auto& [i, j] : pairs) {
            switch (c % 3) {
                case 1: lt[i][j] = 1; break;
                case 2: lt[j][i] = 1; break;
                default: break;
            }
            c /= 3;
        }
        bool transitive = true;
        for (size_t i = 0; i < n && transitive; ++i)
            for (size_t j = 0; j < n && transitive; ++j) {
                if (!lt[i][j]) continue;
                for (size_t k = 0; k < n; ++k)
                    if (lt[j][k] && !lt[i][k]) {
                        transitive = false;
                        break;
                    }
            }
        if (!transitive) continue;
        std::vector<std::vector<char>> le = lt;
        for (size_t i = 0; i < n; ++i) le[i][i] = 1;
        out.push_back(FinitePoset::from_relation(elems, le));
    }
    return out;
}

namespace {

struct Noter {
    OracleReport& r;
    void operator()(const std::string& msg) {
        r.ok = false;
        if (r.failures.size() < 50) r.failures.push_back(msg);
    }
};

void random_poset_trials(RandomPosetStructure& rp, unsigned long long trials, std::mt19937_64& rng,
                         Noter note) {
    auto& st = rp.state();
    for (unsigned long long t = 0; t < trials; ++t) {
        std::string tag = "trial " + std::to_string(t) + ": ";
        std::vector<size_t> L, G, U;
        bool found = false;
        for (int attempt = 0; attempt < 200 && !found; ++attempt) {
            size_t nl = rng() % 3, ng = rng() % 3, nu = rng() % 3;
            std::vector<size_t> ids(st.size());
            std::iota(ids.begin(), ids.end(), size_t(0));
            std::shuffle(ids.begin(), ids.end(), rng);
            if (nl + ng + nu > ids.size()) continue;
            L.assign(ids.begin(), ids.begin() + nl);
            G.assign(ids.begin() + nl, ids.begin() + nl + ng);
            U.assign(ids.begin() + nl + ng, ids.begin() + nl + ng + nu);
            bool fits = true;
            for (size_t l : L)
                for (size_t g : G)
                    if (!st.lt(l, g)) fits = false;
            for (size_t u : U) {
                for (size_t l : L)
                    if (st.lt(u, l)) fits = false;
                for (size_t g : G)
                    if (st.lt(g, u)) fits = false;
            }
            found = fits;
        }
        if (!found) continue;  // no admissible triple sampled; not a failure

        size_t before = st.size();
        size_t p;
        try {
            p = st.add_vertex(L, G, U);
        } catch (const std::exception& e) {
            note(tag + "admissible triple rejected: " + e.what());
            continue;
        }
        if (p != before) note(tag + "vertex id is not the next free id");
        for (size_t l : L)
            if (!st.lt(l, p)) note(tag + "lower witness not below the new vertex");
        for (size_t g : G)
            if (!st.lt(p, g)) note(tag + "upper witness not above the new vertex");
        for (size_t u : U)
            if (st.lt(u, p) || st.lt(p, u)) note(tag + "free witness became comparable");
        // exactness: v < p iff v is forced under L, p < v iff forced over G
        for (size_t v = 0; v < before; ++v) {
            bool under = false, over = false;
            for (size_t l : L)
                if (v == l || st.lt(v, l)) under = true;
            for (size_t g : G)
                if (v == g || st.lt(g, v)) over = true;
            if (st.lt(v, p) != under) note(tag + "unforced relation below the new vertex");
            if (st.lt(p, v) != over) note(tag + "unforced relation above the new vertex");
        }
        if ((t + 1) % 25 == 0 && !st.strict_partial_order())
            note(tag + "state is no longer a strict partial order");
    }
    if (!st.strict_partial_order()) note("final state is not a strict partial order");
}

}  // namespace

OracleReport witness_conformance(Structure& s, unsigned long long trials, unsigned long long seed) {
    OracleReport r;
    r.seed = seed;
    r.trials = trials;
    std::mt19937_64 rng(seed);
    Noter note{r};

    if (auto* rp = dynamic_cast<RandomPosetStructure*>(&s)) {
        random_poset_trials(*rp, trials, rng, note);
        return r;
    }

    Capabilities caps = s.caps();
    std::vector<Element> pool;
    for (Big i = 0; i < 40; ++i) pool.push_back(s.at(i));
    auto pick = [&]() { return pool[rng() % pool.size()]; };

    for (unsigned long long t = 0; t < trials; ++t) {
        std::string tag = "trial " + std::to_string(t) + ": ";
        try {
            std::vector<Element> sample;
            for (size_t k = 0, n = 1 + rng() % 3; k < n; ++k) sample.push_back(pick());

            if (caps.directed) {
                Element ub = s.upper_bound(sample);
                for (const auto& x : sample)
                    if (!s.leq(x, ub)) note(tag + "upper bound misses " + x.enc);
                Element sub = s.strict_upper_bound(sample);
                for (const auto& x : sample)
                    if (!s.lt(x, sub)) note(tag + "strict upper bound does not exceed " + x.enc);
            }

            if (caps.locally_finite_below) {
                const Element& x = sample.front();
                auto ideal = s.principal_ideal(x);
                std::unordered_set<std::string> in_ideal;
                bool has_self = false;
                for (const auto& z : ideal) {
                    if (!s.leq(z, x)) note(tag + "ideal member " + z.enc + " not below " + x.enc);
                    if (!in_ideal.insert(z.enc).second) note(tag + "ideal repeats " + z.enc);
                    if (z.enc == x.enc) has_self = true;
                }
                if (!has_self) note(tag + "ideal misses its generator");
                for (const auto& y : pool)
                    if (s.leq(y, x) && !in_ideal.count(y.enc))
                        note(tag + "ideal misses pool element " + y.enc);
            }

            if (caps.minimal_layer) {
                std::unordered_set<std::string> avoid;
                for (size_t k = 0, n = rng() % 6; k < n; ++k) avoid.insert(pick().enc);
                Element e = s.fresh_min_avoiding(avoid);
                if (avoid.count(e.enc)) note(tag + "fresh minimal pick was not avoided");
                if (!s.in_minimal_layer(e)) note(tag + "fresh pick outside the minimal layer");
                size_t preds = 0;
                for (const auto& y : pool)
                    if (s.lt(y, e)) ++preds;
                if (preds > (caps.rooted ? 1u : 0u))
                    note(tag + "fresh minimal pick has strict predecessors");

                Element p = pick();
                auto chain = s.increasing_chain_above(p, avoid, 1 + rng() % 3);
                const Element* prev = &p;
                for (const auto& link : chain) {
                    if (!s.lt(*prev, link)) note(tag + "chain is not strictly increasing");
                    if (avoid.count(link.enc)) note(tag + "chain hits an avoided element");
                    prev = &link;
                }
            }

            if (caps.self_embedding_above) {
                Element a = pick(), p = pick();
                auto graph = s.embed_ideal_above(a, p);
                std::unordered_set<std::string> doms;
                for (const auto& [z, w] : graph) {
                    doms.insert(z.enc);
                    if (!s.leq(p, w)) note(tag + "embedded image " + w.enc + " below the anchor");
                }
                for (const auto& z : s.principal_ideal(a))
                    if (!doms.count(z.enc)) note(tag + "embedding misses ideal element " + z.enc);
                if (doms.size() != graph.size()) note(tag + "embedding repeats a domain element");
                for (size_t i = 0; i < graph.size(); ++i)
                    for (size_t j = 0; j < graph.size(); ++j)
                        if (s.leq(graph[i].first, graph[j].first) !=
                            s.leq(graph[i].second, graph[j].second))
                            note(tag + "embedding distorts the order");
            }

            if (caps.interval_translations) {
                Element lo = pick();
                Element hi = s.upper_bound({lo, pick()});
                Element ref = pick();
                bool q = s.id() == "qxq";
                auto translate = [&](const std::string& dir) {
                    return q ? qxq_interval_translation(lo, hi, dir, ref)
                             : zxz_interval_translation(lo, hi, dir, ref);
                };
                // the op returns the translation vector; apply it to the
                // interval ends and check where the moved interval lands
                auto shift = [&](const Element& e, const Element& v) {
                    if (q) {
                        auto [a, b] = QxqStructure::coords(e);
                        auto [c, d] = QxqStructure::coords(v);
                        return QxqStructure::make(a + c, b + d);
                    }
                    auto [a, b] = ZxzStructure::coords(e);
                    auto [c, d] = ZxzStructure::coords(v);
                    return ZxzStructure::make(a + c, b + d);
                };
                Element vb = translate("below"), va = translate("above");
                if (shift(hi, vb).enc != ref.enc || !s.leq(shift(lo, vb), ref))
                    note(tag + "below-translation does not land the interval under " + ref.enc);
                if (shift(lo, va).enc != ref.enc || !s.leq(ref, shift(hi, va)))
                    note(tag + "above-translation does not land the interval over " + ref.enc);
                Element corner = q ? qxq_incomparable_to_box(lo, hi) : zxz_incomparable_to_box(lo, hi);
                for (const Element* z : {&lo, &hi})
                    if (!s.incomparable(corner, *z))
                        note(tag + "corner comparable to the box end " + z->enc);
            }
        } catch (const std::exception& e) {
            note(tag + e.what());
        }
    }
    return r;
}

StepReport recheck_step(const Structure& s, const PairList& before, const PairList& added,
                        const std::string& invariant) {
    StepReport r;
    auto note = [&](const std::string& msg) {
        r.ok = false;
        r.failures.push_back(msg);
    };
    auto describe = [](const MapViolation& v) {
        return v.kind + " violation at pairs " + std::to_string(v.i) + ", " + std::to_string(v.j);
    };

    auto base_rep = verify_pairs(s, before);
    if (!base_rep.ok)
        for (const auto& v : base_rep.violations) note("base map: " + describe(v));

    PairList full = before;
    full.insert(full.end(), added.begin(), added.end());
    auto full_rep = verify_pairs(s, full);
    if (!full_rep.ok)
        for (const auto& v : full_rep.violations) note("extended map: " + describe(v));

    std::unordered_set<std::string> dom, ran;
    for (const auto& [x, y] : before) {
        dom.insert(x.enc);
        ran.insert(y.enc);
    }
    for (const auto& [x, y] : added) {
        if (dom.count(x.enc)) note("added pair reuses domain element " + x.enc);
        if (ran.count(y.enc)) note("added pair reuses range element " + y.enc);
    }

    if (invariant.rfind("open-domain", 0) == 0) {
        std::unordered_set<std::string> full_dom;
        for (const auto& [x, y] : full) {
            (void)y;
            full_dom.insert(x.enc);
        }
        try {
            for (const auto& [x, y] : full) {
                (void)y;
                for (const auto& z : s.principal_ideal(x))
                    if (!full_dom.count(z.enc)) {
                        note("domain is not downward closed at " + x.enc + " (misses " + z.enc +
                             ")");
                        break;
                    }
            }
        } catch (const std::exception& e) {
            note(e.what());
        }
    }
    if (invariant == "convex+bounded-field" && s.id() == "zxz") {
        try {
            std::vector<Pt> pts;
            for (const auto& [x, y] : full) {
                (void)y;
                auto [mx, my] = ZxzStructure::coords(x);
                pts.push_back(Pt{Rat(mx), Rat(my)});
            }
            if (!integral_convex_grid(pts)) note("domain is not convex");
        } catch (const std::exception& e) {
            note(e.what());
        }
    }
    return r;
}

nlohmann::json scan_report_json(const ScanReport& r) {
    return {{"size", r.size},
            {"bijections", r.bijections},
            {"hom_bijections", r.hom_bijections},
            {"automorphisms", r.automorphisms},
            {"bad", r.bad}};
}

nlohmann::json oracle_report_json(const OracleReport& r) {
    return {{"ok", r.ok}, {"seed", r.seed}, {"trials", r.trials}, {"failures", r.failures}};
}

}  // namespace revwit
