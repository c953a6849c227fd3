#include <algorithm>

#include "revwit/structures.hpp"

namespace revwit {

namespace {

// "(a,b)" -> the two component strings.
std::pair<std::string, std::string> split_pair(const std::string& enc, const char* what) {
    if (enc.size() < 3 || enc.front() != '(' || enc.back() != ')')
        throw ParseError(std::string(what) + ": bad encoding: " + enc);
    auto comma = enc.find(',');
    if (comma == std::string::npos || enc.find(',', comma + 1) != std::string::npos)
        throw ParseError(std::string(what) + ": bad encoding: " + enc);
    return {enc.substr(1, comma - 1), enc.substr(comma + 1, enc.size() - comma - 2)};
}

std::string render_pair(const std::string& a, const std::string& b) {
    return "(" + a + "," + b + ")";
}

}  // namespace

// ---- half-plane ----

std::pair<Big, Big> HalfPlaneStructure::coords(const Element& e) {
    auto [a, b] = split_pair(e.enc, "half-plane");
    return {parse_big(a), parse_big(b)};
}

Element HalfPlaneStructure::make(const Big& m, const Big& n) {
    if (m + n < 0) throw ParseError("half-plane: point below the diagonal: " +
                                    render_pair(big_str(m), big_str(n)));
    return Element{render_pair(big_str(m), big_str(n)), cantor_pair(m + n, zig_index(m))};
}

Capabilities HalfPlaneStructure::caps() const {
    Capabilities c;
    c.locally_finite_below = true;
    c.directed = true;
    c.minimal_layer = true;
    c.self_embedding_above = true;
    return c;
}

Element HalfPlaneStructure::parse(const std::string& enc) const {
    auto [a, b] = split_pair(enc, "half-plane");
    Element e = make(parse_big(a), parse_big(b));
    if (e.enc != enc) throw ParseError("half-plane: non-canonical encoding: " + enc);
    return e;
}

Element HalfPlaneStructure::at(const Big& n) const {
    if (n < 0) throw ParseError("half-plane: negative index");
    auto [d, t] = cantor_unpair(n);
    Big m = zig_value(t);
    return make(m, d - m);
}

bool HalfPlaneStructure::leq(const Element& x, const Element& y) const {
    auto [xm, xn] = coords(x);
    auto [ym, yn] = coords(y);
    return xm <= ym && xn <= yn;
}

std::vector<Element> HalfPlaneStructure::principal_ideal(const Element& x) const {
    auto [m, n] = coords(x);
    if (m + n > 20000) throw CapabilityError("half-plane: ideal too large to enumerate");
    std::vector<Element> out;
    for (Big a = -n; a <= m; ++a)
        for (Big b = -a; b <= n; ++b) out.push_back(make(a, b));
    std::sort(out.begin(), out.end(),
              [](const Element& u, const Element& v) { return u.index < v.index; });
    return out;
}

Element HalfPlaneStructure::upper_bound(const std::vector<Element>& xs) const {
    Big m = 0, n = 0;
    bool first = true;
    for (const auto& x : xs) {
        auto [a, b] = coords(x);
        if (first) { m = a; n = b; first = false; }
        else { m = std::max(m, a); n = std::max(n, b); }
    }
    return make(m, n);
}

Element HalfPlaneStructure::strict_upper_bound(const std::vector<Element>& xs) const {
    auto [m, n] = coords(upper_bound(xs));
    return make(m + 1, n + 1);
}

Element HalfPlaneStructure::fresh_min_avoiding(const SkipFn& skip) const {
    for (Big t = 0;; ++t) {
        Big m = zig_value(t);
        Element e = make(m, -m);
        if (!skip(e)) return e;
    }
}

bool HalfPlaneStructure::in_minimal_layer(const Element& x) const {
    auto [m, n] = coords(x);
    return m + n == 0;
}

void HalfPlaneStructure::for_successors(const Element& x,
                                        const std::function<bool(const Element&)>& cb) const {
    auto [m, n] = coords(x);
    Element up1 = make(m + 1, n), up2 = make(m, n + 1);
    if (up2.index < up1.index) std::swap(up1, up2);
    if (!cb(up1)) return;
    cb(up2);
}

std::vector<std::pair<Element, Element>> HalfPlaneStructure::embed_ideal_above(
    const Element& a, const Element& p) const {
    auto [ma, na] = coords(a);
    auto [p0, p1] = coords(p);
    Big t = std::max(p0 + na, p1 + ma);
    if (t < 0) throw InternalError("half-plane: embedding shift negative");
    std::vector<std::pair<Element, Element>> out;
    for (const auto& z : principal_ideal(a)) {
        auto [zm, zn] = coords(z);
        out.emplace_back(z, make(zm + t, zn + t));
    }
    return out;
}

// ---- zxz ----

std::pair<Big, Big> ZxzStructure::coords(const Element& e) {
    auto [a, b] = split_pair(e.enc, "zxz");
    return {parse_big(a), parse_big(b)};
}

// Square shell of radius s >= 1 in within-shell order: m runs over [-s, s] by
// zigzag; |m| < s contributes the two points (m, s), (m, -s), and the two full
// columns m = s, m = -s run their n by zigzag.  Offsets are closed-form so
// far-flung points (glue images live at distance ~2^steps) stay cheap.

Big ZxzStructure::index_of(const Big& m, const Big& n) {
    Big s = std::max(abs(m), abs(n));
    if (s == 0) return 0;
    Big base = (2 * s - 1) * (2 * s - 1);
    if (m == s) return base + 4 * s - 2 + zig_index(n);
    if (m == -s) return base + 6 * s - 1 + zig_index(n);
    return base + 2 * zig_index(m) + (n == s ? 0 : 1);
}

Element ZxzStructure::make(const Big& m, const Big& n) {
    return Element{render_pair(big_str(m), big_str(n)), index_of(m, n)};
}

Capabilities ZxzStructure::caps() const {
    Capabilities c;
    c.directed = true;
    c.interval_translations = true;
    return c;
}

Element ZxzStructure::parse(const std::string& enc) const {
    auto [a, b] = split_pair(enc, "zxz");
    Element e = make(parse_big(a), parse_big(b));
    if (e.enc != enc) throw ParseError("zxz: non-canonical encoding: " + enc);
    return e;
}

Element ZxzStructure::at(const Big& n) const {
    if (n < 0) throw ParseError("zxz: negative index");
    if (n == 0) return make(0, 0);
    Big r = boost::multiprecision::sqrt(n);
    Big s = (r + 1) / 2;
    while (s >= 1 && (2 * s - 1) * (2 * s - 1) > n) --s;
    while ((2 * s + 1) * (2 * s + 1) <= n) ++s;
    Big off = n - (2 * s - 1) * (2 * s - 1);
    Big m, k;
    if (off < 4 * s - 2) {
        m = zig_value(off / 2);
        k = (off % 2 == 0) ? s : -s;
    } else if (off < 6 * s - 1) {
        m = s;
        k = zig_value(off - (4 * s - 2));
    } else {
        m = -s;
        k = zig_value(off - (6 * s - 1));
    }
    return Element{render_pair(big_str(m), big_str(k)), n};
}

bool ZxzStructure::leq(const Element& x, const Element& y) const {
    auto [xm, xn] = coords(x);
    auto [ym, yn] = coords(y);
    return xm <= ym && xn <= yn;
}

Element ZxzStructure::upper_bound(const std::vector<Element>& xs) const {
    Big m = 0, n = 0;
    bool first = true;
    for (const auto& x : xs) {
        auto [a, b] = coords(x);
        if (first) { m = a; n = b; first = false; }
        else { m = std::max(m, a); n = std::max(n, b); }
    }
    return make(m, n);
}

Element ZxzStructure::strict_upper_bound(const std::vector<Element>& xs) const {
    auto [m, n] = coords(upper_bound(xs));
    return make(m + 1, n + 1);
}

void ZxzStructure::for_successors(const Element& x,
                                  const std::function<bool(const Element&)>& cb) const {
    auto [m, n] = coords(x);
    Element up1 = make(m + 1, n), up2 = make(m, n + 1);
    if (up2.index < up1.index) std::swap(up1, up2);
    if (!cb(up1)) return;
    cb(up2);
}

// ---- qxq ----

std::pair<Rat, Rat> QxqStructure::coords(const Element& e) {
    auto [a, b] = split_pair(e.enc, "qxq");
    return {parse_rat(a), parse_rat(b)};
}

namespace {

// A rational's Calkin-Wilf position has as many bits as the sum of its
// continued-fraction coefficients, so the far-flung points the convex glue
// creates (coordinates double with every glue) have positions too large to
// even store.  Elements past the divide only ever need an index that is
// deterministic, injective, and beyond every enumeration budget a run can
// reach, so they get a stand-in above 2^512 instead of the true position.
Big qxq_rat_code(const Rat& r) {
    Big p = abs(numerator(r)), q = denominator(r), steps = 0;
    while (q != 0 && steps <= 256) {
        steps += p / q;
        Big t = p % q;
        p = q;
        q = t;
    }
    if (steps <= 256) return rat_index(r);
    static const Big far_base = Big(1) << 512;
    return far_base + cantor_pair(zig_index(numerator(r)), denominator(r) - 1);
}

}  // namespace

Element QxqStructure::make(const Rat& x, const Rat& y) {
    return Element{render_pair(rat_str(x), rat_str(y)),
                   cantor_pair(qxq_rat_code(x), qxq_rat_code(y))};
}

Capabilities QxqStructure::caps() const {
    Capabilities c;
    c.directed = true;
    c.interval_translations = true;
    return c;
}

Element QxqStructure::parse(const std::string& enc) const {
    auto [a, b] = split_pair(enc, "qxq");
    Element e = make(parse_rat(a), parse_rat(b));
    if (e.enc != enc) throw ParseError("qxq: non-canonical encoding: " + enc);
    return e;
}

Element QxqStructure::at(const Big& n) const {
    if (n < 0) throw ParseError("qxq: negative index");
    auto [i, j] = cantor_unpair(n);
    return make(rat_at(i), rat_at(j));
}

bool QxqStructure::leq(const Element& x, const Element& y) const {
    auto [xa, xb] = coords(x);
    auto [ya, yb] = coords(y);
    return xa <= ya && xb <= yb;
}

Element QxqStructure::upper_bound(const std::vector<Element>& xs) const {
    Rat a = 0, b = 0;
    bool first = true;
    for (const auto& x : xs) {
        auto [u, v] = coords(x);
        if (first) { a = u; b = v; first = false; }
        else { a = std::max(a, u); b = std::max(b, v); }
    }
    return make(a, b);
}

Element QxqStructure::strict_upper_bound(const std::vector<Element>& xs) const {
    auto [a, b] = coords(upper_bound(xs));
    return make(a + 1, b + 1);
}

void QxqStructure::for_successors(const Element&,
                                  const std::function<bool(const Element&)>&) const {
    // dense order: no immediate successors
}

// ---- divisibility x Z ----

std::pair<Big, Big> ProductDivZStructure::coords(const Element& e) {
    auto [a, b] = split_pair(e.enc, "product");
    return {parse_big(a), parse_big(b)};
}

Element ProductDivZStructure::make(const Big& d, const Big& z) {
    if (d < 1) throw ParseError("product: first component must be positive");
    return Element{render_pair(big_str(d), big_str(z)), cantor_pair(d - 1, zig_index(z))};
}

Capabilities ProductDivZStructure::caps() const { return Capabilities{}; }

Element ProductDivZStructure::parse(const std::string& enc) const {
    auto [a, b] = split_pair(enc, "product");
    return make(parse_big(a), parse_big(b));
}

Element ProductDivZStructure::at(const Big& n) const {
    if (n < 0) throw ParseError("product: negative index");
    auto [i, t] = cantor_unpair(n);
    return make(i + 1, zig_value(t));
}

bool ProductDivZStructure::leq(const Element& x, const Element& y) const {
    auto [xd, xz] = coords(x);
    auto [yd, yz] = coords(y);
    return yd % xd == 0 && xz <= yz;
}

// ---- translation witnesses ----

Element zxz_incomparable_to_box(const Element& p, const Element& q) {
    auto [p0, p1] = ZxzStructure::coords(p);
    auto [q0, q1] = ZxzStructure::coords(q);
    (void)p1;
    (void)q0;
    return ZxzStructure::make(p0 - 1, q1 + 1);
}

Element qxq_incomparable_to_box(const Element& p, const Element& q) {
    auto [p0, p1] = QxqStructure::coords(p);
    auto [q0, q1] = QxqStructure::coords(q);
    (void)p1;
    (void)q0;
    return QxqStructure::make(p0 - 1, q1 + 1);
}

Element zxz_interval_translation(const Element& p, const Element& q,
                                 const std::string& direction, const Element& r) {
    auto [p0, p1] = ZxzStructure::coords(p);
    auto [q0, q1] = ZxzStructure::coords(q);
    auto [r0, r1] = ZxzStructure::coords(r);
    if (direction == "below") return ZxzStructure::make(r0 - q0, r1 - q1);
    if (direction == "above") return ZxzStructure::make(r0 - p0, r1 - p1);
    throw ParseError("zxz: direction must be 'below' or 'above'");
}

Element qxq_interval_translation(const Element& p, const Element& q,
                                 const std::string& direction, const Element& r) {
    auto [p0, p1] = QxqStructure::coords(p);
    auto [q0, q1] = QxqStructure::coords(q);
    auto [r0, r1] = QxqStructure::coords(r);
    if (direction == "below") return QxqStructure::make(r0 - q0, r1 - q1);
    if (direction == "above") return QxqStructure::make(r0 - p0, r1 - p1);
    throw ParseError("qxq: direction must be 'below' or 'above'");
}

}  // namespace revwit
