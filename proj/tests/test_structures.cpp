#include <doctest.h>

#include <algorithm>
#include <set>

#include "revwit/structures.hpp"

using namespace revwit;

namespace {

std::vector<std::string> encs(const std::vector<Element>& v) {
    std::vector<std::string> out;
    for (const auto& e : v) out.push_back(e.enc);
    return out;
}

}  // namespace

TEST_CASE("enumerations are bijective on a prefix") {
    for (const char* id : {"divisibility", "finite-sets", "level-restricted(even)", "fn-omega",
                           "fin-support", "half-plane", "zxz", "qxq", "product(divisibility,z)"}) {
        auto s = make_structure(id);
        std::set<std::string> seen;
        for (Big n = 0; n < 400; ++n) {
            Element e = s->at(n);
            CHECK(e.index == n);
            Element back = s->parse(e.enc);
            CHECK(back.enc == e.enc);
            CHECK(back.index == n);
            CHECK(seen.insert(e.enc).second);
        }
    }
}

TEST_CASE("prefixes satisfy the partial order laws") {
    for (const char* id : {"divisibility", "finite-sets", "level-restricted(even)", "fn-omega",
                           "fin-support", "half-plane", "zxz", "qxq", "product(divisibility,z)"}) {
        auto s = make_structure(id);
        std::vector<Element> v;
        for (Big n = 0; n < 60; ++n) v.push_back(s->at(n));
        for (const auto& x : v) CHECK(s->leq(x, x));
        for (const auto& x : v)
            for (const auto& y : v) {
                if (s->leq(x, y) && s->leq(y, x)) CHECK(x.enc == y.enc);
                for (const auto& z : v)
                    if (s->leq(x, y) && s->leq(y, z)) CHECK(s->leq(x, z));
            }
    }
}

TEST_CASE("divisibility order and witnesses") {
    auto s = make_structure("divisibility");
    // leq agrees with arithmetic divisibility
    for (Big a = 1; a <= 40; ++a)
        for (Big b = 1; b <= 40; ++b)
            CHECK(s->leq(s->at(a - 1), s->at(b - 1)) == (b % a == 0));
    CHECK(encs(s->principal_ideal(s->parse("12"))) ==
          std::vector<std::string>{"1", "2", "3", "4", "6", "12"});
    CHECK(s->upper_bound({s->parse("4"), s->parse("6")}).enc == "12");
    CHECK(s->strict_upper_bound({s->parse("4"), s->parse("6")}).enc == "24");
    CHECK(s->in_minimal_layer(s->parse("7")));
    CHECK(!s->in_minimal_layer(s->parse("9")));
    CHECK(s->fresh_min_avoiding({std::string("2"), std::string("3")}).enc == "5");
    CHECK(DivisibilityStructure::value(s->parse("18")) == 18);

    auto chain = s->increasing_chain_above(s->parse("4"), {"8"}, 3);
    REQUIRE(chain.size() == 3);
    CHECK(s->lt(s->parse("4"), chain[0]));
    for (size_t i = 0; i + 1 < chain.size(); ++i) CHECK(s->lt(chain[i], chain[i + 1]));
    for (const auto& e : chain) CHECK(e.enc != "8");

    // embed_ideal_above maps (-,6] into [5,-) as an order-embedding
    auto emb = s->embed_ideal_above(s->parse("6"), s->parse("5"));
    CHECK(encs(s->principal_ideal(s->parse("6"))).size() == emb.size());
    for (const auto& [x, y] : emb) CHECK(s->leq(s->parse("5"), y));
    for (const auto& [x1, y1] : emb)
        for (const auto& [x2, y2] : emb) CHECK(s->leq(x1, x2) == s->leq(y1, y2));
}

TEST_CASE("finite sets are ordered by inclusion") {
    auto s = make_structure("finite-sets");
    CHECK(FiniteSetsStructure::make({0, 2}).enc == "{0,2}");
    CHECK(FiniteSetsStructure::make({0, 2}).index == 5);
    CHECK(FiniteSetsStructure::members(s->parse("{1,4}")) == std::vector<long long>{1, 4});
    for (Big a = 0; a < 64; ++a)
        for (Big b = 0; b < 64; ++b)
            CHECK(s->leq(s->at(a), s->at(b)) == ((a & ~b) == 0));
    CHECK(encs(s->principal_ideal(s->parse("{0,2}"))) ==
          std::vector<std::string>{"{}", "{0}", "{2}", "{0,2}"});
    CHECK(s->upper_bound({s->parse("{0}"), s->parse("{2}")}).enc == "{0,2}");
    CHECK(s->strict_upper_bound({s->parse("{0,1}")}).enc == "{0,1,2}");
    CHECK(s->fresh_min_avoiding({std::string("{0}"), std::string("{1}")}).enc == "{2}");
}

TEST_CASE("level-restricted(even) exposes only even sizes") {
    auto s = make_structure("level-restricted(even)");
    auto* lr = dynamic_cast<LevelRestrictedStructure*>(s.get());
    REQUIRE(lr != nullptr);
    CHECK(s->at(0).enc == "{}");
    CHECK(s->at(1).enc == "{0,1}");
    for (Big n = 0; n < 200; ++n)
        CHECK(LevelRestrictedStructure::members(s->at(n)).size() % 2 == 0);
    CHECK(lr->admissible_size(0));
    CHECK(lr->admissible_size(4));
    CHECK(!lr->admissible_size(3));
    CHECK(lr->next_size(0) == 2);
    CHECK(lr->next_size(2) == 4);
    CHECK_THROWS_AS(s->parse("{0}"), ParseError);  // odd size is not an element
    // the minimal layer is the pairs
    CHECK(s->in_minimal_layer(s->parse("{1,3}")));
    CHECK(!s->in_minimal_layer(s->parse("{0,1,2,3}")));
    CHECK(encs(s->principal_ideal(s->parse("{0,1,2,3}"))).size() == 8);
}

TEST_CASE("partial functions are ordered by domain inclusion plus pointwise value order") {
    auto s = make_structure("fn-omega");
    CHECK(s->leq(s->parse("{0:1}"), s->parse("{0:1,1:5}")));
    CHECK(!s->leq(s->parse("{0:2}"), s->parse("{0:1}")));
    CHECK(!s->leq(s->parse("{2:0}"), s->parse("{0:1,1:5}")));
    CHECK(s->principal_ideal(s->parse("{0:1,1:2}")).size() == 12);  // (1+2)*(2+2)
    for (const auto& g : s->principal_ideal(s->parse("{0:1,1:2}")))
        CHECK(s->leq(g, s->parse("{0:1,1:2}")));
    CHECK(s->upper_bound({s->parse("{0:1}"), s->parse("{0:2,1:1}")}).enc == "{0:2,1:1}");
    CHECK(s->in_minimal_layer(s->parse("{3:0}")));
    CHECK(!s->in_minimal_layer(s->parse("{0:1}")));
    CHECK_THROWS_AS(s->parse("{1:0,0:1}"), ParseError);  // keys must ascend

    auto fs = make_structure("fin-support");
    CHECK(fs->principal_ideal(fs->parse("{0:2,1:1}")).size() == 6);  // 3*2
    CHECK(fs->in_minimal_layer(fs->parse("{2:1}")));
    CHECK_THROWS_AS(fs->parse("{0:0}"), ParseError);  // values start at 1
}

TEST_CASE("half plane ideals are finite triangles") {
    auto s = make_structure("half-plane");
    CHECK(HalfPlaneStructure::make(2, -1).enc == "(2,-1)");
    auto [m, n] = HalfPlaneStructure::coords(s->parse("(-3,4)"));
    CHECK(m == -3);
    CHECK(n == 4);
    CHECK_THROWS_AS(s->parse("(1,-2)"), ParseError);  // below the half plane
    CHECK(s->in_minimal_layer(s->parse("(5,-5)")));
    CHECK(!s->in_minimal_layer(s->parse("(1,0)")));
    auto ideal = s->principal_ideal(s->parse("(1,1)"));
    CHECK(ideal.size() == 6);
    for (const auto& e : ideal) CHECK(s->leq(e, s->parse("(1,1)")));
    auto emb = s->embed_ideal_above(s->parse("(1,1)"), s->parse("(2,0)"));
    CHECK(emb.size() == 6);
    for (const auto& [x, y] : emb) CHECK(s->leq(s->parse("(2,0)"), y));
    for (const auto& [x1, y1] : emb)
        for (const auto& [x2, y2] : emb) CHECK(s->leq(x1, x2) == s->leq(y1, y2));
}

TEST_CASE("zxz closed-form shell offsets match a literal shell walk") {
    // reference: within shell s, m zigzags over [-s,s]; a full column for
    // m = +-s, otherwise just (m, s) and (m, -s)
    auto shell = [](const Big& s) {
        std::vector<std::pair<Big, Big>> out;
        for (Big tm = 0; tm <= 2 * s; ++tm) {
            Big m = zig_value(tm);
            if (m == s || m == -s) {
                for (Big tn = 0; tn <= 2 * s; ++tn) out.emplace_back(m, zig_value(tn));
            } else {
                out.emplace_back(m, s);
                out.emplace_back(m, -s);
            }
        }
        return out;
    };
    auto s = make_structure("zxz");
    Big n = 1;
    for (Big r = 1; r <= 12; ++r) {
        for (const auto& [m, k] : shell(r)) {
            CHECK(ZxzStructure::index_of(m, k) == n);
            Element e = s->at(n);
            auto [am, ak] = ZxzStructure::coords(e);
            CHECK(am == m);
            CHECK(ak == k);
            ++n;
        }
    }
    CHECK(ZxzStructure::index_of(0, 0) == 0);
    // far points stay cheap and round-trip
    Big far = Big(1) << 100;
    Element e = ZxzStructure::make(far, -5);
    CHECK(s->at(e.index).enc == e.enc);
    CHECK(s->upper_bound({s->parse("(0,1)"), s->parse("(1,0)")}).enc == "(1,1)");
    CHECK(s->strict_upper_bound({s->parse("(0,1)"), s->parse("(1,0)")}).enc == "(2,2)");
}

TEST_CASE("qxq far points get deterministic stand-in positions") {
    auto s = make_structure("qxq");
    CHECK(s->leq(s->parse("(1/2,1/3)"), s->parse("(1,1)")));
    CHECK(!s->leq(s->parse("(1/2,2)"), s->parse("(1,1)")));
    Rat far(Big(1) << 200);
    Element e = QxqStructure::make(far, make_rat(1, 3));
    CHECK(e.index > (Big(1) << 500));
    CHECK(s->parse(e.enc).index == e.index);
    Element e2 = QxqStructure::make(far + 1, make_rat(1, 3));
    CHECK(e.index != e2.index);
    // the reciprocal of a far point is just as far along the walk
    CHECK(QxqStructure::make(make_rat(1, Big(1) << 200), Rat(0)).index > (Big(1) << 500));
}

TEST_CASE("product order is componentwise") {
    auto s = make_structure("product(divisibility,z)");
    CHECK(ProductDivZStructure::make(3, -2).enc == "(3,-2)");
    CHECK(s->leq(s->parse("(2,-1)"), s->parse("(4,0)")));
    CHECK(!s->leq(s->parse("(2,1)"), s->parse("(4,0)")));
    CHECK(!s->leq(s->parse("(3,0)"), s->parse("(4,0)")));
}

TEST_CASE("plane translation witnesses follow the corner and shift formulas") {
    auto z = make_structure("zxz");
    CHECK(zxz_incomparable_to_box(z->parse("(0,0)"), z->parse("(2,3)")).enc == "(-1,4)");
    auto q = make_structure("qxq");
    CHECK(qxq_interval_translation(q->parse("(0,0)"), q->parse("(1/2,1/2)"), "below",
                                   q->parse("(-1,-1)"))
              .enc == "(-3/2,-3/2)");
    CHECK(qxq_incomparable_to_box(q->parse("(0,0)"), q->parse("(1,1)")).enc == "(-1,2)");
    CHECK(zxz_interval_translation(z->parse("(1,1)"), z->parse("(3,4)"), "above", z->parse("(5,5)"))
              .enc == "(4,4)");
    CHECK_THROWS_AS(zxz_interval_translation(z->parse("(0,0)"), z->parse("(1,1)"), "sideways",
                                             z->parse("(2,2)")),
                    ParseError);
}

TEST_CASE("down closure unions ideals and is idempotent") {
    auto s = make_structure("divisibility");
    auto cl = down_closure(*s, {s->parse("8"), s->parse("12")});
    CHECK(encs(cl) == std::vector<std::string>{"1", "2", "3", "4", "6", "8", "12"});
    CHECK(encs(down_closure(*s, cl)) == encs(cl));
    auto zx = make_structure("zxz");
    CHECK_THROWS_AS(down_closure(*zx, {zx->parse("(1,1)")}), CapabilityError);
}
