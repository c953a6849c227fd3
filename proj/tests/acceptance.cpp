// Acceptance battery: twelve end-to-end checks, one PASS/FAIL line each.
// Exits nonzero when any check fails.  Time limits are pinned here.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "revwit/closure.hpp"
#include "revwit/convex.hpp"
#include "revwit/engine.hpp"
#include "revwit/finite_poset.hpp"
#include "revwit/lifts.hpp"
#include "revwit/oracle.hpp"
#include "revwit/structures.hpp"
#include "revwit/verify.hpp"

using namespace revwit;

namespace {

int g_failures = 0;

void report(int k, bool ok, const std::string& what) {
    std::printf("%s %d: %s\n", ok ? "PASS" : "FAIL", k, what.c_str());
    if (!ok) ++g_failures;
}

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double secs() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
};

std::string fmt_secs(double s) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2fs", s);
    return buf;
}

Certificate run(const std::string& structure, const std::string& strategy, unsigned long long n) {
    auto s = make_structure(structure);
    return run_generic(*s, strategy, SeedSpec{}, n);
}

// Artifacts produced once by the checks below; check 12 reproduces each one
// from scratch and compares bytes.
struct Artifact {
    std::string label;
    std::string dump;
    std::function<std::string()> again;
};
std::vector<Artifact> g_artifacts;

void record(const std::string& label, const Certificate& c, std::function<Certificate()> again) {
    g_artifacts.push_back({label, certificate_dump(c),
                           [again = std::move(again)] { return certificate_dump(again()); }});
}

std::string verify_or_reason(const Certificate& c) {
    auto rep = verify_certificate(c);
    if (rep.ok) return "";
    for (const auto& ch : rep.checks)
        if (!ch.ok) return "verification failed at '" + ch.name + "': " + ch.detail;
    return "verification failed";
}

// ---- 1: brute-force ground truth on every labeled poset with <= 4 points ----
void check_1() {
    Timer t;
    try {
        const size_t expect[] = {0, 1, 3, 19, 219};
        unsigned long long scanned = 0;
        for (size_t n = 1; n <= 4; ++n) {
            auto all = all_labeled_posets(n);
            if (all.size() != expect[n]) {
                report(1, false,
                       "labeled poset count at " + std::to_string(n) + " points is " +
                           std::to_string(all.size()) + ", expected " + std::to_string(expect[n]));
                return;
            }
            for (const auto& fp : all) {
                auto rep = exhaustive_endo_scan(fp);
                ++scanned;
                if (!rep.bad.empty()) {
                    report(1, false, "a poset on " + std::to_string(n) +
                                         " points has a bijective order-preserving non-automorphism: " +
                                         rep.bad.front());
                    return;
                }
                if (rep.hom_bijections != rep.automorphisms) {
                    report(1, false, "bijective homomorphism and automorphism counts disagree on " +
                                         std::to_string(n) + " points");
                    return;
                }
            }
        }
        if (t.secs() >= 10.0) {
            report(1, false, "exhaustive scan exceeded the 10s limit (" + fmt_secs(t.secs()) + ")");
            return;
        }
        report(1, true,
               "all " + std::to_string(scanned) +
                   " labeled posets on <=4 points (1/3/19/219) have zero bad bijections [" +
                   fmt_secs(t.secs()) + "]");
    } catch (const std::exception& e) {
        report(1, false, e.what());
    }
}

// ---- 2: divisibility order, 400 targets, witness pinned at every stage ----
Certificate g_div400;

void check_2() {
    Timer t;
    try {
        g_div400 = run("divisibility", "well-founded", 400);
        if (auto r = verify_or_reason(g_div400); !r.empty()) {
            report(2, false, r);
            return;
        }
        std::set<std::string> dom, ran;
        for (const auto& [x, y] : g_div400.final_pairs) {
            dom.insert(x.enc);
            ran.insert(y.enc);
        }
        for (int v = 1; v <= 200; ++v) {
            std::string enc = std::to_string(v);
            if (!dom.count(enc) || !ran.count(enc)) {
                report(2, false, "value " + enc + " missing from the covered field");
                return;
            }
        }
        const BadWitness& w = g_div400.witness;
        if (w.x1.enc != "3" || w.x2.enc != "2" || w.y1.enc != "2" || w.y2.enc != "4") {
            report(2, false, "witness is (" + w.x1.enc + "," + w.x2.enc + ")->(" + w.y1.enc + "," +
                                 w.y2.enc + "), expected (3,2)->(2,4)");
            return;
        }
        // the witnessing pairs 3 -> 2 and 2 -> 4 must sit inside every stage
        PartialCondensation m;
        for (const auto& [x, y] : g_div400.seed) m.add(x, y);
        auto holds = [&m] {
            return m.in_dom("3") && m.image("3").enc == "2" && m.in_dom("2") &&
                   m.image("2").enc == "4";
        };
        bool ok = holds();
        for (const auto& st : g_div400.steps) {
            for (const auto& [x, y] : st.added) m.add(x, y);
            ok = ok && holds();
        }
        if (!ok) {
            report(2, false, "witness pairs 3->2, 2->4 absent from some stage");
            return;
        }
        if (t.secs() >= 5.0) {
            report(2, false, "run exceeded the 5s limit (" + fmt_secs(t.secs()) + ")");
            return;
        }
        record("divisibility/well-founded/400", g_div400,
               [] { return run("divisibility", "well-founded", 400); });
        report(2, true,
               "400 targets verified; field covers 1..200 on both sides; witness (3,2)->(2,4) held "
               "at all " +
                   std::to_string(g_div400.steps.size()) + " stages [" + fmt_secs(t.secs()) + "]");
    } catch (const std::exception& e) {
        report(2, false, e.what());
    }
}

// ---- 3: finite sets under both strategies; stepwise ideals and bounds ----
Certificate g_fs_wf300;

// D stays downward closed after every stage: closure distributes over unions,
// so it suffices that each stage's new domain points pull their ideals in.
bool domain_stays_open(const Structure& s, const Certificate& c, std::string& why) {
    auto cl = down_closure_operator(s);
    std::set<std::string> dom;
    std::vector<Element> dom_elems;
    auto absorb = [&](const PairList& pl) {
        for (const auto& [x, y] : pl) {
            (void)y;
            if (dom.insert(x.enc).second) dom_elems.push_back(x);
        }
    };
    auto closed_over = [&](const std::vector<Element>& fresh) {
        for (const auto& e : cl.apply(fresh))
            if (!dom.count(e.enc)) {
                why = "domain is not downward closed: misses " + e.enc;
                return false;
            }
        return true;
    };
    absorb(c.seed);
    if (!closed_over(dom_elems)) return false;
    size_t done = dom_elems.size();
    for (const auto& st : c.steps) {
        absorb(st.added);
        std::vector<Element> fresh(dom_elems.begin() + done, dom_elems.end());
        done = dom_elems.size();
        if (!closed_over(fresh)) return false;
    }
    // belt and braces: one full fixed-point check over the final domain
    if (cl.apply(dom_elems).size() != dom_elems.size()) {
        why = "final domain is not a fixed point of the down-closure";
        return false;
    }
    return true;
}

// Replays the bound recurrence and checks the whole field stays under it.
bool bounds_dominate(const Structure& s, const Certificate& c, std::string& why) {
    std::vector<Element> field;
    for (const auto& [x, y] : c.seed) {
        field.push_back(x);
        field.push_back(y);
    }
    Element bound = s.upper_bound(field);
    auto dominated = [&] {
        for (const auto& e : field)
            if (!s.leq(e, bound)) {
                why = "element " + e.enc + " escapes the running bound " + bound.enc;
                return false;
            }
        return true;
    };
    if (!dominated()) return false;
    for (const auto& st : c.steps) {
        if (st.kind == "dom") {
            Element img = st.target;
            bool found = false;
            for (const auto& [x, y] : st.added)
                if (x.enc == st.target.enc) {
                    img = y;
                    found = true;
                }
            if (!found) {
                why = "a domain stage does not add its own target";
                return false;
            }
            bound = s.strict_upper_bound({bound, st.target, img});
        } else {
            if (st.added.size() != 1) {
                why = "a range stage must add exactly one pair";
                return false;
            }
            bound = s.strict_upper_bound({bound, st.added[0].first, st.target});
        }
        for (const auto& [x, y] : st.added) {
            field.push_back(x);
            field.push_back(y);
        }
        if (!dominated()) return false;
    }
    if (!c.bounds || c.bounds->q.enc != bound.enc) {
        why = "recorded upper bound disagrees with the replayed one";
        return false;
    }
    return true;
}

void check_3() {
    try {
        g_fs_wf300 = run("finite-sets", "well-founded", 300);
        Certificate rooted = run("finite-sets", "rooted-directed", 300);
        for (const Certificate* c : {&g_fs_wf300, &rooted})
            if (auto r = verify_or_reason(*c); !r.empty()) {
                report(3, false, c->strategy + ": " + r);
                return;
            }
        auto s = make_structure("finite-sets");
        std::string why;
        for (const Certificate* c : {&g_fs_wf300, &rooted})
            if (!domain_stays_open(*s, *c, why)) {
                report(3, false, c->strategy + ": " + why);
                return;
            }
        if (!bounds_dominate(*s, rooted, why)) {
            report(3, false, "rooted-directed: " + why);
            return;
        }
        if (!rooted.bounds->p || rooted.bounds->p->enc != s->at(0).enc) {
            report(3, false, "rooted-directed: lower bound is not the root");
            return;
        }
        record("finite-sets/well-founded/300", g_fs_wf300,
               [] { return run("finite-sets", "well-founded", 300); });
        record("finite-sets/rooted-directed/300", rooted,
               [] { return run("finite-sets", "rooted-directed", 300); });
        report(3, true,
               "both strategies at 300 targets verified; domains stayed downward closed and the "
               "rooted bound dominated the field at every stage");
    } catch (const std::exception& e) {
        report(3, false, e.what());
    }
}

// ---- 4: size-restricted subsets (even sizes), 200 targets ----
void check_4() {
    try {
        Certificate c = run("level-restricted(even)", "well-founded", 200);
        if (auto r = verify_or_reason(c); !r.empty()) {
            report(4, false, r);
            return;
        }
        record("level-restricted(even)/well-founded/200", c,
               [] { return run("level-restricted(even)", "well-founded", 200); });
        report(4, true, "200 targets on the even-size suborder verified");
    } catch (const std::exception& e) {
        report(4, false, e.what());
    }
}

// ---- 5: finite partial functions; rank formula against computed levels ----
void check_5() {
    try {
        Certificate c = run("fn-omega", "well-founded", 300);
        if (auto r = verify_or_reason(c); !r.empty()) {
            report(5, false, r);
            return;
        }
        auto s = make_structure("fn-omega");
        auto cl = down_closure_operator(*s);
        std::vector<Element> closed;
        for (Big k = 40; closed.size() < 100; k += 20) {
            std::vector<Element> prefix;
            for (Big i = 0; i < k; ++i) prefix.push_back(s->at(i));
            closed = cl.apply(prefix);
        }
        auto fp = FinitePoset::fragment(*s, closed);
        auto lv = fp.levels();
        unsigned long long mismatches = 0;
        for (size_t li = 0; li < lv.size(); ++li)
            for (size_t pos : lv[li]) {
                // rank of a finite map f = |dom f| + sum of its values
                Big he = 0;
                for (const auto& [key, val] : FnStructure::entries(fp.elems[pos])) {
                    (void)key;
                    he += 1 + val;
                }
                if (he != li) ++mismatches;
            }
        if (mismatches != 0) {
            report(5, false, std::to_string(mismatches) + " rank mismatches on a " +
                                 std::to_string(fp.size()) + "-element downward closed fragment");
            return;
        }
        record("fn-omega/well-founded/300", c, [] { return run("fn-omega", "well-founded", 300); });
        report(5, true,
               "300 targets verified; rank formula |dom f| + sum(ran f) matched computed levels on "
               "a " +
                   std::to_string(fp.size()) + "-element downward closed fragment");
    } catch (const std::exception& e) {
        report(5, false, e.what());
    }
}

// ---- 6: finite-support functions under the rooted strategy ----
void check_6() {
    try {
        Certificate c = run("fin-support", "rooted-directed", 300);
        if (auto r = verify_or_reason(c); !r.empty()) {
            report(6, false, r);
            return;
        }
        record("fin-support/rooted-directed/300", c,
               [] { return run("fin-support", "rooted-directed", 300); });
        report(6, true, "300 targets on finite-support functions verified");
    } catch (const std::exception& e) {
        report(6, false, e.what());
    }
}

// ---- 7: half plane m+n >= 0, rootless directed strategy ----
void check_7() {
    try {
        Certificate c = run("half-plane", "rooted-directed", 300);
        if (auto r = verify_or_reason(c); !r.empty()) {
            report(7, false, r);
            return;
        }
        if (c.invariant != "open-domain+bounded-field") {
            report(7, false, "unexpected invariant " + c.invariant);
            return;
        }
        if (!c.bounds || c.bounds->p.has_value()) {
            report(7, false, "rootless run must carry an upper bound and no lower bound");
            return;
        }
        auto s = make_structure("half-plane");
        std::string why;
        if (!domain_stays_open(*s, c, why)) {
            report(7, false, why);
            return;
        }
        if (!bounds_dominate(*s, c, why)) {
            report(7, false, why);
            return;
        }
        record("half-plane/rooted-directed/300", c,
               [] { return run("half-plane", "rooted-directed", 300); });
        report(7, true,
               "300 targets verified; triangle ideals stayed closed and the field stayed bounded");
    } catch (const std::exception& e) {
        report(7, false, e.what());
    }
}

// ---- 8: convex runs on both planes ----

// Exact stage-by-stage convexity on the integer plane: every lattice point of
// every interval between comparable domain points is enumerated.  Incremental
// over stages (the domain only grows, so old intervals stay filled); a final
// full pass over all pairs closes the loop.
bool zxz_intervals_filled(const Certificate& c, std::string& why) {
    std::vector<std::pair<Big, Big>> pts;
    std::set<std::pair<Big, Big>> have;
    unsigned long long enumerated = 0;
    auto box_ok = [&](const std::pair<Big, Big>& lo, const std::pair<Big, Big>& hi) {
        if ((hi.first - lo.first + 1) * (hi.second - lo.second + 1) > 4000000) {
            why = "an interval between comparable domain points is too large to enumerate";
            return false;
        }
        for (Big x = lo.first; x <= hi.first; ++x)
            for (Big y = lo.second; y <= hi.second; ++y) {
                ++enumerated;
                if (!have.count({x, y})) {
                    why = "interval gap at (" + x.str() + "," + y.str() + ")";
                    return false;
                }
            }
        return true;
    };
    auto add_block = [&](const PairList& pl) -> bool {
        size_t first_new = pts.size();
        for (const auto& [x, y] : pl) {
            (void)y;
            auto p = ZxzStructure::coords(x);
            if (have.insert(p).second) pts.push_back(p);
        }
        for (size_t i = first_new; i < pts.size(); ++i)
            for (size_t j = 0; j < pts.size(); ++j) {
                const auto &a = pts[i], &b = pts[j];
                if (a.first <= b.first && a.second <= b.second && !box_ok(a, b)) return false;
                if (b.first <= a.first && b.second <= a.second && !box_ok(b, a)) return false;
            }
        return true;
    };
    if (!add_block(c.seed)) return false;
    for (const auto& st : c.steps)
        if (!add_block(st.added)) return false;
    (void)enumerated;
    std::vector<Pt> final_pts;
    for (const auto& [x, y] : pts) final_pts.push_back({Rat(x), Rat(y)});
    if (!integral_convex_literal(final_pts)) {
        why = "final domain fails the full interval enumeration";
        return false;
    }
    return true;
}

// Replays the rational-plane driver stage by stage, then samples 100 interior
// points per comparable domain pair with a seed distinct from the verifier's.
bool qxq_sampling(const Certificate& c, std::string& why) {
    auto s = make_structure("qxq");
    ConvexDriver driver(*s, true);
    driver.init(c.seed);
    PartialCondensation m;
    for (const auto& [x, y] : c.seed) m.add(x, y);
    for (const auto& st : c.steps) {
        PairList got =
            st.kind == "dom" ? driver.dom_step(m, st.target) : driver.ran_step(m, st.target);
        if (got.size() != st.added.size()) {
            why = "replayed stage disagrees with the recorded one";
            return false;
        }
        for (size_t i = 0; i < got.size(); ++i)
            if (got[i].first.enc != st.added[i].first.enc ||
                got[i].second.enc != st.added[i].second.enc) {
                why = "replayed stage disagrees with the recorded one";
                return false;
            }
        for (const auto& [x, y] : st.added) m.add(x, y);
    }
    std::vector<Pt> pts;
    for (const auto& [x, y] : m.pairs()) {
        (void)y;
        pts.push_back(driver.to_pt(x));
    }
    std::mt19937_64 rng(777);
    unsigned long long pairs = 0, samples = 0;
    for (size_t i = 0; i < pts.size(); ++i)
        for (size_t j = 0; j < pts.size(); ++j) {
            if (i == j || !pt_leq(pts[i], pts[j])) continue;
            ++pairs;
            Pt d = pt_sub(pts[j], pts[i]);
            for (int k = 0; k < 100; ++k) {
                long long den = 2 + (long long)(rng() % 100);
                long long num = 1 + (long long)(rng() % (unsigned long long)(den - 1));
                Rat t = make_rat(num, den);
                Pt z{pts[i].x + t * d.x, pts[i].y + t * d.y};
                ++samples;
                if (!driver.in_sandwich(z)) {
                    why = "a sampled point between a comparable domain pair left the region";
                    return false;
                }
            }
        }
    why = std::to_string(pairs) + " comparable pairs, " + std::to_string(samples) + " samples";
    return true;
}

void check_8() {
    try {
        Certificate z = run("zxz", "convex", 300);
        if (auto r = verify_or_reason(z); !r.empty()) {
            report(8, false, "integer plane: " + r);
            return;
        }
        std::string why;
        if (!zxz_intervals_filled(z, why)) {
            report(8, false, "integer plane: " + why);
            return;
        }
        Certificate q = run("qxq", "convex", 300);
        auto qrep = verify_certificate(q);
        if (!qrep.ok) {
            report(8, false, "rational plane: " + verify_or_reason(q));
            return;
        }
        bool sampled_in_verify = false;
        for (const auto& ch : qrep.checks) sampled_in_verify |= (ch.name == "convexity" && ch.ok);
        if (!sampled_in_verify) {
            report(8, false, "rational plane: verifier ran no convexity sampling");
            return;
        }
        std::string stats;
        if (!qxq_sampling(q, stats)) {
            report(8, false, "rational plane: " + stats);
            return;
        }
        record("zxz/convex/300", z, [] { return run("zxz", "convex", 300); });
        record("qxq/convex/300", q, [] { return run("qxq", "convex", 300); });
        report(8, true,
               "300 convex targets on each plane verified; integer intervals enumerated at every "
               "stage; rational sampling clean (" +
                   stats + ")");
    } catch (const std::exception& e) {
        report(8, false, e.what());
    }
}

// ---- 9: random poset conformance plus the universal strategy ----
void check_9() {
    Timer t;
    try {
        const unsigned long long seed = 20260814;
        auto s = make_structure("random-poset");
        auto rep = witness_conformance(*s, 500, seed);
        if (!rep.ok) {
            report(9, false, "conformance trial failed: " +
                                 (rep.failures.empty() ? "?" : rep.failures.front()));
            return;
        }
        Certificate c = run("random-poset", "universal", 200);
        if (auto r = verify_or_reason(c); !r.empty()) {
            report(9, false, r);
            return;
        }
        if (t.secs() >= 30.0) {
            report(9, false, "exceeded the 30s limit (" + fmt_secs(t.secs()) + ")");
            return;
        }
        record("random-poset/universal/200", c,
               [] { return run("random-poset", "universal", 200); });
        report(9, true,
               "500 extension-axiom trials clean (seed " + std::to_string(seed) +
                   "); 200 universal targets verified [" + fmt_secs(t.secs()) + "]");
    } catch (const std::exception& e) {
        report(9, false, e.what());
    }
}

// ---- 10: componentwise product lift of the divisibility run ----
void check_10() {
    try {
        Certificate lifted = product_lift(g_div400, 200);
        if (auto r = verify_or_reason(lifted); !r.empty()) {
            report(10, false, r);
            return;
        }
        auto s = make_structure("product(divisibility,z)");
        const BadWitness& w = lifted.witness;
        if (w.x1.enc != "(3,0)" || w.x2.enc != "(2,0)") {
            report(10, false, "lifted witness is (" + w.x1.enc + "," + w.x2.enc +
                                  "), expected ((3,0),(2,0))");
            return;
        }
        if (s->leq(w.x1, w.x2) || !s->leq(w.y1, w.y2)) {
            report(10, false, "lifted witness does not witness");
            return;
        }
        record("product-lift/200", lifted, [] {
            return product_lift(run("divisibility", "well-founded", 400), 200);
        });
        report(10, true,
               "divisibility run lifted across the product with the integers on a 200-element "
               "prefix; witness ((3,0),(2,0))->(" +
                   w.y1.enc + "," + w.y2.enc + ") confirmed");
    } catch (const std::exception& e) {
        report(10, false, e.what());
    }
}

// ---- 11: subset lift through the even naturals on bitcodes 0..127 ----
void check_11() {
    try {
        Certificate lifted = subset_lift(g_fs_wf300, 128);
        if (auto r = verify_or_reason(lifted); !r.empty()) {
            report(11, false, r);
            return;
        }
        auto s = make_structure("finite-sets");
        PartialCondensation m;
        for (const auto& [x, y] : lifted.final_pairs) m.add(x, y);
        std::vector<Element> dom, img;
        std::set<std::string> images;
        unsigned long long fixed = 0;
        for (Big code = 0; code < 128; ++code) {
            Element a = s->at(code);
            if (!m.in_dom(a.enc)) {
                report(11, false, "bitcode " + code.str() + " missing from the lifted domain");
                return;
            }
            Element fa = m.image(a.enc);
            dom.push_back(a);
            img.push_back(fa);
            if (!images.insert(fa.enc).second) {
                report(11, false, "lifted map repeats the image " + fa.enc);
                return;
            }
            bool odd_only = true;
            for (long long v : FiniteSetsStructure::members(a)) odd_only &= (v % 2 == 1);
            if (odd_only) {
                if (fa.enc != a.enc) {
                    report(11, false, "set " + a.enc + " avoids the evens but moves to " + fa.enc);
                    return;
                }
                ++fixed;
            }
        }
        for (size_t i = 0; i < dom.size(); ++i)
            for (size_t j = 0; j < dom.size(); ++j)
                if (s->leq(dom[i], dom[j]) && !s->leq(img[i], img[j])) {
                    report(11, false, "order broken at " + dom[i].enc + " <= " + dom[j].enc);
                    return;
                }
        const BadWitness& w = lifted.witness;
        if (s->leq(w.x1, w.x2) || !s->leq(w.y1, w.y2) || !m.in_dom(w.x1.enc) ||
            m.image(w.x1.enc).enc != w.y1.enc || !m.in_dom(w.x2.enc) ||
            m.image(w.x2.enc).enc != w.y2.enc) {
            report(11, false, "lifted witness does not witness");
            return;
        }
        record("subset-lift/128", lifted,
               [] { return subset_lift(run("finite-sets", "well-founded", 300), 128); });
        report(11, true,
               "lift through the evens is injective and order-preserving on all 128 bitcodes; " +
                   std::to_string(fixed) + " even-free sets fixed; witness (" + w.x1.enc + "," +
                   w.x2.enc + ")->(" + w.y1.enc + "," + w.y2.enc + ") confirmed");
    } catch (const std::exception& e) {
        report(11, false, e.what());
    }
}

// ---- 12: every artifact above reruns to the same bytes ----
void check_12() {
    try {
        for (const auto& a : g_artifacts) {
            if (a.again() != a.dump) {
                report(12, false, a.label + " did not reproduce byte-identically");
                return;
            }
        }
        report(12, true, "all " + std::to_string(g_artifacts.size()) +
                             " certificates reproduced byte-identically on a second run");
    } catch (const std::exception& e) {
        report(12, false, e.what());
    }
}

}  // namespace

int main() {
    check_1();
    check_2();
    check_3();
    check_4();
    check_5();
    check_6();
    check_7();
    check_8();
    check_9();
    check_10();
    check_11();
    check_12();
    return g_failures == 0 ? 0 : 1;
}
