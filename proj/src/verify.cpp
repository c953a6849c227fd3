#include "revwit/verify.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <random>
#include <sstream>
#include <unordered_set>

#include "revwit/convex.hpp"
#include "revwit/lifts.hpp"
#include "revwit/random_poset.hpp"
#include "revwit/structures.hpp"

namespace revwit {

namespace {

std::string describe(const MapReport& rep) {
    if (rep.ok) return "ok";
    const auto& v = rep.violations.front();
    return v.kind + " violation at pairs " + std::to_string(v.i) + ", " + std::to_string(v.j);
}

bool same_pairs(const PairList& a, const PairList& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i].first.enc != b[i].first.enc || a[i].second.enc != b[i].second.enc) return false;
    return true;
}

}  // namespace

VerifyReport verify_certificate(const Certificate& c) {
    VerifyReport r;
    auto pass = [&](const std::string& name, const std::string& detail = "") {
        r.checks.push_back({name, true, detail});
    };
    auto fail = [&](const std::string& name, const std::string& detail) {
        r.checks.push_back({name, false, detail});
        r.ok = false;
    };

    // ---- identifiers ----
    std::unique_ptr<Structure> sp;
    try {
        sp = make_structure(c.structure);
    } catch (const std::exception& e) {
        fail("identifiers", e.what());
        return r;
    }
    Structure& s = *sp;
    bool lift = is_lift_strategy(c.strategy);
    try {
        if (lift) {
            bool match = (c.strategy == "product-lift" && c.structure == "product(divisibility,z)") ||
                         (c.strategy == "subset-lift" && c.structure == "finite-sets");
            if (!match) {
                fail("identifiers", "lift strategy does not match the structure");
                return r;
            }
            if (c.invariant != "none") {
                fail("identifiers", "lift certificates carry invariant 'none'");
                return r;
            }
        } else {
            if (!strategy_compatible(c.structure, c.strategy)) {
                fail("identifiers", "strategy " + c.strategy + " does not apply to " + c.structure);
                return r;
            }
            if (c.invariant != strategy_invariant(c.strategy)) {
                fail("identifiers", "invariant does not match the strategy");
                return r;
            }
        }
    } catch (const std::exception& e) {
        fail("identifiers", e.what());
        return r;
    }
    pass("identifiers");

    // ---- seed validity ----
    PartialCondensation m;
    try {
        if (c.seed.empty()) {
            fail("seed-map", "seed is empty");
            return r;
        }
        auto rep = verify_pairs(s, c.seed);
        if (!rep.ok) {
            fail("seed-map", describe(rep));
            return r;
        }
        for (const auto& [x, y] : c.seed) m.add(x, y);
    } catch (const std::exception& e) {
        fail("seed-map", e.what());
        return r;
    }
    pass("seed-map");

    // ---- seed shape (base case of the invariant) ----
    try {
        if (c.strategy == "well-founded" || c.strategy == "rooted-directed") {
            for (const auto& [x, y] : c.seed) {
                (void)y;
                for (const auto& z : s.principal_ideal(x))
                    if (!m.in_dom(z.enc)) {
                        fail("seed-shape", "seed domain is not downward closed at " + x.enc);
                        return r;
                    }
            }
        } else if (c.strategy == "convex") {
            for (const auto& [x1, y1] : c.seed)
                for (const auto& [x2, y2] : c.seed) {
                    (void)y1;
                    (void)y2;
                    if (x1.enc != x2.enc && !s.incomparable(x1, x2)) {
                        fail("seed-shape", "seed domain is not an antichain");
                        return r;
                    }
                }
        } else if (c.strategy == "universal") {
            for (const auto& [x, y] : c.seed)
                if (RandomPosetStructure::vertex(x) >= 4 || RandomPosetStructure::vertex(y) >= 4) {
                    fail("seed-shape", "seed references vertices outside the start protocol");
                    return r;
                }
        }
    } catch (const std::exception& e) {
        fail("seed-shape", e.what());
        return r;
    }
    pass("seed-shape");

    // ---- replay state ----
    std::unique_ptr<Strategy> universal;
    std::optional<ConvexDriver> driver;
    std::optional<Element> bound;
    bool bounded = (c.strategy == "rooted-directed");
    try {
        if (c.strategy == "universal") {
            universal = make_strategy(s, "universal");
            universal->init(m);
        } else if (c.strategy == "convex") {
            driver.emplace(s, s.id() == "qxq");
            driver->init(c.seed);
        } else if (bounded) {
            std::vector<Element> field;
            for (const auto& [x, y] : c.seed) {
                field.push_back(x);
                field.push_back(y);
            }
            bound = s.upper_bound(field);
        }
    } catch (const std::exception& e) {
        fail("seed-shape", e.what());
        return r;
    }

    std::function<bool(const Element&)> dom_covered = [&](const Element& e) {
        return driver ? driver->dom_covers(m, e) : m.in_dom(e.enc);
    };
    std::function<bool(const Element&)> ran_covered = [&](const Element& e) {
        return driver ? driver->ran_covers(m, e) : m.in_ran(e.enc);
    };
    Big dom_cur = 0, ran_cur = 0;
    auto advance = [&](Big& cur, const std::function<bool(const Element&)>& covered)
        -> std::optional<Element> {
        for (;;) {
            if (auto limit = s.enumeration_limit(); limit && cur >= *limit) return std::nullopt;
            Element e = s.at(cur);
            if (!covered(e)) return e;
            ++cur;
        }
    };

    // ---- step replay ----
    std::optional<Big> last_lift_target;
    for (size_t k = 0; k < c.steps.size(); ++k) {
        const Step& st = c.steps[k];
        std::string at_step = "step " + std::to_string(k) + ": ";
        try {
            bool dom_side;
            if (lift) {
                dom_side = true;
                if (st.kind != "dom") {
                    fail("schedule", at_step + "lift steps extend the domain only");
                    return r;
                }
                if (last_lift_target && st.target.index <= *last_lift_target) {
                    fail("schedule", at_step + "lift targets must ascend the enumeration");
                    return r;
                }
                last_lift_target = st.target.index;
                if (m.in_dom(st.target.enc)) {
                    fail("schedule", at_step + "target already covered");
                    return r;
                }
                if (st.added.size() != 1 || st.added[0].first.enc != st.target.enc) {
                    fail("schedule", at_step + "lift step must add exactly its target");
                    return r;
                }
            } else {
                dom_side = (k % 2 == 0);
                if (st.kind != (dom_side ? "dom" : "ran")) {
                    fail("schedule", at_step + "sides must alternate starting from the domain");
                    return r;
                }
                auto expect = advance(dom_side ? dom_cur : ran_cur,
                                      dom_side ? dom_covered : ran_covered);
                if (!expect) {
                    fail("schedule", at_step + "enumeration exhausted before the target");
                    return r;
                }
                if (expect->enc != st.target.enc) {
                    fail("schedule", at_step + "target is " + st.target.enc +
                                         " but the least uncovered element is " + expect->enc);
                    return r;
                }
            }

            if (st.added.empty()) {
                fail("extension", at_step + "no pairs added");
                return r;
            }

            // Replay construction strategies before the pair checks: the
            // universal replay is what brings the recorded fresh vertex into
            // existence.
            if (c.strategy == "convex") {
                PairList expected =
                    dom_side ? driver->dom_step(m, st.target) : driver->ran_step(m, st.target);
                if (!same_pairs(expected, st.added)) {
                    fail("construction", at_step + "recorded pairs differ from the replayed step");
                    return r;
                }
            } else if (c.strategy == "universal") {
                PairList expected = dom_side ? universal->extend_dom(m, st.target)
                                             : universal->extend_ran(m, st.target);
                if (!same_pairs(expected, st.added)) {
                    fail("construction", at_step + "recorded pairs differ from the replayed step");
                    return r;
                }
            }

            auto rep = verify_extension(s, m, st.added);
            if (!rep.ok) {
                fail("extension", at_step + describe(rep));
                return r;
            }

            if (c.strategy == "well-founded" || c.strategy == "rooted-directed") {
                if (dom_side) {
                    std::unordered_set<std::string> dset;
                    for (const auto& [x, y] : st.added) {
                        (void)y;
                        dset.insert(x.enc);
                    }
                    size_t missing = 0;
                    for (const auto& z : s.principal_ideal(st.target))
                        if (!m.in_dom(z.enc)) {
                            ++missing;
                            if (!dset.count(z.enc)) {
                                fail("invariant",
                                     at_step + "glue omits ideal element " + z.enc);
                                return r;
                            }
                        }
                    if (missing != st.added.size()) {
                        fail("invariant", at_step + "glue adds elements outside the target ideal");
                        return r;
                    }
                    if (bounded) {
                        Element p2 = s.strict_upper_bound({*bound});
                        std::optional<Element> img_target;
                        for (const auto& [x, w] : st.added) {
                            if (!s.leq(p2, w)) {
                                fail("invariant", at_step + "glue image " + w.enc +
                                                      " is not above the previous bound");
                                return r;
                            }
                            if (x.enc == st.target.enc) img_target = w;
                        }
                        if (!img_target) {
                            fail("invariant", at_step + "glue misses the target");
                            return r;
                        }
                        bound = s.strict_upper_bound({*bound, st.target, *img_target});
                    }
                } else {
                    if (st.added.size() != 1 || st.added[0].second.enc != st.target.enc) {
                        fail("invariant",
                             at_step + "range step must add one preimage of the target");
                        return r;
                    }
                    const Element& a = st.added[0].first;
                    if (bounded && s.leq(a, *bound)) {
                        fail("invariant", at_step + "preimage " + a.enc + " lies under the bound");
                        return r;
                    }
                    for (const auto& z : s.principal_ideal(a))
                        if (z.enc != a.enc && !m.in_dom(z.enc)) {
                            fail("invariant",
                                 at_step + "preimage ideal leaves the domain at " + z.enc);
                            return r;
                        }
                    if (bounded) bound = s.strict_upper_bound({*bound, a, st.target});
                }
            }

            for (const auto& [x, y] : st.added) m.add(x, y);
            if (dom_side ? !dom_covered(st.target) : !ran_covered(st.target)) {
                fail("schedule", at_step + "step did not cover its target");
                return r;
            }

            if (c.strategy == "convex" && s.id() == "zxz") {
                std::vector<Pt> pts;
                for (const auto& [x, y] : m.pairs()) {
                    (void)y;
                    pts.push_back(driver->to_pt(x));
                }
                if (!integral_convex_grid(pts)) {
                    fail("convexity", at_step + "domain stopped being convex");
                    return r;
                }
            }
        } catch (const std::exception& e) {
            fail("steps", at_step + e.what());
            return r;
        }
    }
    pass("steps", std::to_string(c.steps.size()) + " steps replayed");

    // ---- final map ----
    if (!same_pairs(m.pairs(), c.final_pairs)) {
        fail("final", "final pairs are not the seed plus the recorded steps");
        return r;
    }
    pass("final");
    if (c.strategy == "universal") {
        auto* rp = dynamic_cast<RandomPosetStructure*>(&s);
        if (!rp || !rp->state().strict_partial_order()) {
            fail("order", "replayed relations are not a strict partial order");
            return r;
        }
        pass("order");
    }

    // ---- witness ----
    try {
        const BadWitness& w = c.witness;
        if (!m.in_dom(w.x1.enc) || m.image(w.x1.enc).enc != w.y1.enc || !m.in_dom(w.x2.enc) ||
            m.image(w.x2.enc).enc != w.y2.enc) {
            fail("witness", "witness pairs are not part of the map");
            return r;
        }
        if (s.leq(w.x1, w.x2) || !s.leq(w.y1, w.y2)) {
            fail("witness", "recorded pairs do not witness a broken reflection");
            return r;
        }
        if (!lift) {
            auto least = find_bad_witness(s, c.seed);
            if (!least || least->x1.enc != w.x1.enc || least->x2.enc != w.x2.enc ||
                least->y1.enc != w.y1.enc || least->y2.enc != w.y2.enc) {
                fail("witness", "recorded witness is not the least witness of the seed");
                return r;
            }
        }
    } catch (const std::exception& e) {
        fail("witness", e.what());
        return r;
    }
    pass("witness");

    // ---- bounds ----
    try {
        if (c.invariant == "none" || c.invariant == "open-domain") {
            if (c.bounds) {
                fail("bounds", "certificate carries bounds its invariant does not define");
                return r;
            }
        } else if (c.invariant == "open-domain+bounded-field") {
            if (!c.bounds) {
                fail("bounds", "bounded-field certificate lacks bounds");
                return r;
            }
            if (c.bounds->q.enc != bound->enc) {
                fail("bounds", "recorded q differs from the replayed bound");
                return r;
            }
            if (s.caps().rooted) {
                if (!c.bounds->p || c.bounds->p->enc != s.at(0).enc) {
                    fail("bounds", "rooted certificate must record the root as p");
                    return r;
                }
            } else if (c.bounds->p) {
                fail("bounds", "one-sided field must not record p");
                return r;
            }
            for (const auto& [x, y] : m.pairs())
                for (const Element* e : {&x, &y}) {
                    if (!s.leq(*e, c.bounds->q)) {
                        fail("bounds", "field element " + e->enc + " escapes q");
                        return r;
                    }
                    if (c.bounds->p && !s.leq(*c.bounds->p, *e)) {
                        fail("bounds", "field element " + e->enc + " escapes p");
                        return r;
                    }
                }
        } else if (c.invariant == "convex+bounded-field") {
            if (!c.bounds || !c.bounds->p) {
                fail("bounds", "convex certificate must record both corners");
                return r;
            }
            if (c.bounds->p->enc != driver->lower_bound_el().enc ||
                c.bounds->q.enc != driver->upper_bound_el().enc) {
                fail("bounds", "recorded corners differ from the replayed field box");
                return r;
            }
            Pt lo = driver->to_pt(*c.bounds->p), hi = driver->to_pt(c.bounds->q);
            for (const auto& [x, y] : m.pairs())
                for (const Element* e : {&x, &y}) {
                    Pt z = driver->to_pt(*e);
                    if (!(lo.x < z.x && lo.y < z.y && z.x < hi.x && z.y < hi.y)) {
                        fail("bounds", "field element " + e->enc + " is not strictly inside the box");
                        return r;
                    }
                }
        } else {
            fail("bounds", "unknown invariant " + c.invariant);
            return r;
        }
    } catch (const std::exception& e) {
        fail("bounds", e.what());
        return r;
    }
    pass("bounds");

    // ---- coverage ----
    try {
        auto extent = [&](Big cur, const std::function<bool(const Element&)>& covered) {
            for (;;) {
                if (auto limit = s.enumeration_limit(); limit && cur >= *limit) break;
                if (!covered(s.at(cur))) break;
                ++cur;
            }
            return cur.convert_to<unsigned long long>();
        };
        unsigned long long dp = extent(dom_cur, dom_covered);
        unsigned long long rp = extent(ran_cur, ran_covered);
        if (dp != c.dom_prefix || rp != c.ran_prefix) {
            std::ostringstream os;
            os << "recomputed prefixes (" << dp << ", " << rp << ") differ from recorded ("
               << c.dom_prefix << ", " << c.ran_prefix << ")";
            fail("coverage", os.str());
            return r;
        }
    } catch (const std::exception& e) {
        fail("coverage", e.what());
        return r;
    }
    pass("coverage");

    // ---- dense convexity sampling: 100 intermediate points per comparable
    // domain pair, drawn from fixed-seed randomness so reruns agree ----
    if (c.strategy == "convex" && s.id() == "qxq") {
        try {
            std::vector<Pt> pts;
            for (const auto& [x, y] : m.pairs()) {
                (void)y;
                pts.push_back(driver->to_pt(x));
            }
            std::mt19937_64 rng(12345);
            for (size_t i = 0; i < pts.size(); ++i)
                for (size_t j = 0; j < pts.size(); ++j) {
                    if (i == j || !pt_leq(pts[i], pts[j])) continue;
                    Pt d = pt_sub(pts[j], pts[i]);
                    for (int k = 0; k < 100; ++k) {
                        long long den = 2 + (long long)(rng() % 100);
                        long long num = 1 + (long long)(rng() % (uint64_t)(den - 1));
                        Rat t = make_rat(num, den);
                        Pt z{pts[i].x + t * d.x, pts[i].y + t * d.y};
                        if (!driver->in_sandwich(z)) {
                            fail("convexity",
                                 "sampled point between a comparable pair escapes the domain");
                            return r;
                        }
                    }
                }
        } catch (const std::exception& e) {
            fail("convexity", e.what());
            return r;
        }
        pass("convexity");
    } else if (c.strategy == "convex") {
        pass("convexity");
    }

    return r;
}

std::string verify_report_text(const VerifyReport& r) {
    std::ostringstream os;
    for (const auto& ch : r.checks) {
        if (ch.ok)
            os << "ok " << ch.name << (ch.detail.empty() ? "" : " (" + ch.detail + ")") << "\n";
        else
            os << "FAIL " << ch.name << ": " << ch.detail << "\n";
    }
    return os.str();
}

}  // namespace revwit
