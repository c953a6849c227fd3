#include <algorithm>
#include <sstream>

#include "revwit/structures.hpp"

namespace revwit {

std::vector<long long> bits_of(Big x) {
    if (x < 0) throw InternalError("bits_of: negative");
    std::vector<long long> out;
    long long pos = 0;
    while (x > 0) {
        if ((x & 1) != 0) out.push_back(pos);
        x >>= 1;
        ++pos;
    }
    return out;
}

Big bitcode_of(const std::vector<long long>& members) {
    Big code = 0;
    for (long long m : members) {
        if (m < 0) throw InternalError("bitcode_of: negative member");
        code |= Big(1) << m;
    }
    return code;
}

namespace {

// "{a,b,c}" with strictly ascending canonical naturals; "{}" is empty.
std::vector<long long> parse_member_list(const std::string& enc, const char* what) {
    if (enc.size() < 2 || enc.front() != '{' || enc.back() != '}')
        throw ParseError(std::string(what) + ": bad encoding: " + enc);
    std::vector<long long> out;
    std::string body = enc.substr(1, enc.size() - 2);
    if (body.empty()) return out;
    std::stringstream ss(body);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        Big m = parse_big(tok);
        if (m < 0 || m > 1000000) throw ParseError(std::string(what) + ": member out of range: " + tok);
        long long v = m.convert_to<long long>();
        if (!out.empty() && v <= out.back())
            throw ParseError(std::string(what) + ": members not strictly ascending: " + enc);
        out.push_back(v);
    }
    if (!body.empty() && body.back() == ',') throw ParseError(std::string(what) + ": bad encoding: " + enc);
    return out;
}

std::string render_member_list(const std::vector<long long>& members) {
    std::string s = "{";
    for (size_t i = 0; i < members.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(members[i]);
    }
    return s + "}";
}

bool subset_of(const std::vector<long long>& a, const std::vector<long long>& b) {
    size_t j = 0;
    for (long long x : a) {
        while (j < b.size() && b[j] < x) ++j;
        if (j == b.size() || b[j] != x) return false;
        ++j;
    }
    return true;
}

// Least natural not in the sorted list.
long long least_unused(const std::vector<long long>& sorted) {
    long long c = 0;
    for (long long m : sorted) {
        if (m > c) break;
        if (m == c) ++c;
    }
    return c;
}

// Advances a strictly ascending k-subset of naturals to its colex successor.
void next_colex(std::vector<long long>& v) {
    for (size_t i = 0; i < v.size(); ++i) {
        if (i + 1 == v.size() || v[i] + 1 < v[i + 1]) {
            ++v[i];
            for (size_t j = 0; j < i; ++j) v[j] = static_cast<long long>(j);
            return;
        }
    }
}

// Binomial row C(b, 0..b) summed over admissible j.
Big count_admissible_suffix(long long b, long long ones_above,
                            const std::function<bool(long long)>& adm) {
    Big c = 1;  // C(b, 0)
    Big total = 0;
    for (long long j = 0; j <= b; ++j) {
        if (adm(ones_above + j)) total += c;
        c = c * (b - j) / (j + 1);
    }
    return total;
}

}  // namespace

// ---- divisibility ----

static const Big kDivIdealCap("1000000000000");

Big DivisibilityStructure::value(const Element& e) { return e.index + 1; }

Capabilities DivisibilityStructure::caps() const {
    Capabilities c;
    c.locally_finite_below = true;
    c.rooted = true;
    c.directed = true;
    c.minimal_layer = true;
    c.self_embedding_above = true;
    return c;
}

Element DivisibilityStructure::parse(const std::string& enc) const {
    Big v = parse_big(enc);
    if (v < 1) throw ParseError("divisibility: element must be a positive integer: " + enc);
    return Element{enc, v - 1};
}

Element DivisibilityStructure::at(const Big& n) const {
    if (n < 0) throw ParseError("divisibility: negative index");
    return Element{big_str(n + 1), n};
}

bool DivisibilityStructure::leq(const Element& x, const Element& y) const {
    return value(y) % value(x) == 0;
}

std::vector<Element> DivisibilityStructure::principal_ideal(const Element& x) const {
    Big v = value(x);
    if (v > kDivIdealCap) throw CapabilityError("divisibility: ideal of " + x.enc + " too large to scan");
    std::vector<Big> divs;
    for (Big i = 1; i * i <= v; ++i) {
        if (v % i != 0) continue;
        divs.push_back(i);
        if (i != v / i) divs.push_back(v / i);
    }
    std::sort(divs.begin(), divs.end());
    std::vector<Element> out;
    out.reserve(divs.size());
    for (const Big& d : divs) out.push_back(Element{big_str(d), d - 1});
    return out;
}

Element DivisibilityStructure::upper_bound(const std::vector<Element>& xs) const {
    Big l = 1;
    for (const auto& x : xs) l = boost::multiprecision::lcm(l, value(x));
    return Element{big_str(l), l - 1};
}

Element DivisibilityStructure::strict_upper_bound(const std::vector<Element>& xs) const {
    Big l = 2 * (value(upper_bound(xs)));
    return Element{big_str(l), l - 1};
}

Element DivisibilityStructure::fresh_min_avoiding(const SkipFn& skip) const {
    for (Big p = 2;; ++p) {
        bool prime = true;
        for (Big i = 2; i * i <= p; ++i)
            if (p % i == 0) { prime = false; break; }
        if (!prime) continue;
        Element e{big_str(p), p - 1};
        if (!skip(e)) return e;
    }
}

bool DivisibilityStructure::in_minimal_layer(const Element& x) const {
    Big v = value(x);
    if (v < 2) return false;
    if (v > kDivIdealCap) throw CapabilityError("divisibility: primality scan too large");
    for (Big i = 2; i * i <= v; ++i)
        if (v % i == 0) return false;
    return true;
}

void DivisibilityStructure::for_successors(const Element& x,
                                           const std::function<bool(const Element&)>& cb) const {
    Big v = value(x);
    for (Big p = 2;; ++p) {
        bool prime = true;
        for (Big i = 2; i * i <= p; ++i)
            if (p % i == 0) { prime = false; break; }
        if (!prime) continue;
        Big w = v * p;
        if (!cb(Element{big_str(w), w - 1})) return;
    }
}

std::vector<std::pair<Element, Element>> DivisibilityStructure::embed_ideal_above(
    const Element& a, const Element& p) const {
    Big pv = value(p);
    std::vector<std::pair<Element, Element>> out;
    for (const auto& d : principal_ideal(a)) {
        Big img = value(d) * pv;
        out.emplace_back(d, Element{big_str(img), img - 1});
    }
    return out;
}

// ---- finite sets ----

Capabilities FiniteSetsStructure::caps() const {
    Capabilities c;
    c.locally_finite_below = true;
    c.rooted = true;
    c.directed = true;
    c.minimal_layer = true;
    c.self_embedding_above = true;
    return c;
}

std::vector<long long> FiniteSetsStructure::members(const Element& e) {
    return parse_member_list(e.enc, "finite-sets");
}

Element FiniteSetsStructure::make(const std::vector<long long>& members) {
    return Element{render_member_list(members), bitcode_of(members)};
}

Element FiniteSetsStructure::parse(const std::string& enc) const {
    auto m = parse_member_list(enc, "finite-sets");
    return Element{enc, bitcode_of(m)};
}

Element FiniteSetsStructure::at(const Big& n) const {
    if (n < 0) throw ParseError("finite-sets: negative index");
    return make(bits_of(n));
}

bool FiniteSetsStructure::leq(const Element& x, const Element& y) const {
    return (x.index & ~y.index) == 0;
}

std::vector<Element> FiniteSetsStructure::principal_ideal(const Element& x) const {
    auto m = members(x);
    if (m.size() > 22) throw CapabilityError("finite-sets: ideal too large to enumerate");
    std::vector<Element> out;
    for (unsigned long long mask = 0; mask < (1ull << m.size()); ++mask) {
        std::vector<long long> sub;
        for (size_t i = 0; i < m.size(); ++i)
            if (mask >> i & 1) sub.push_back(m[i]);
        out.push_back(make(sub));
    }
    std::sort(out.begin(), out.end(),
              [](const Element& a, const Element& b) { return a.index < b.index; });
    return out;
}

Element FiniteSetsStructure::upper_bound(const std::vector<Element>& xs) const {
    Big code = 0;
    for (const auto& x : xs) code |= x.index;
    return make(bits_of(code));
}

Element FiniteSetsStructure::strict_upper_bound(const std::vector<Element>& xs) const {
    auto u = members(upper_bound(xs));
    long long fresh = least_unused(u);
    u.insert(std::lower_bound(u.begin(), u.end(), fresh), fresh);
    return make(u);
}

Element FiniteSetsStructure::fresh_min_avoiding(const SkipFn& skip) const {
    for (long long m = 0;; ++m) {
        Element e = make({m});
        if (!skip(e)) return e;
    }
}

bool FiniteSetsStructure::in_minimal_layer(const Element& x) const {
    return members(x).size() == 1;
}

void FiniteSetsStructure::for_successors(const Element& x,
                                         const std::function<bool(const Element&)>& cb) const {
    auto m = members(x);
    for (long long cand = 0;; ++cand) {
        if (std::binary_search(m.begin(), m.end(), cand)) continue;
        auto sup = m;
        sup.insert(std::lower_bound(sup.begin(), sup.end(), cand), cand);
        if (!cb(make(sup))) return;
    }
}

std::vector<std::pair<Element, Element>> FiniteSetsStructure::embed_ideal_above(
    const Element& a, const Element& p) const {
    auto pm = members(p);
    long long shift = pm.empty() ? 0 : pm.back() + 1;
    std::vector<std::pair<Element, Element>> out;
    for (const auto& d : principal_ideal(a)) {
        auto dm = members(d);
        auto im = pm;
        for (long long v : dm) im.push_back(v + shift);
        std::sort(im.begin(), im.end());
        out.emplace_back(d, make(im));
    }
    return out;
}

// ---- level-restricted finite sets ----

LevelRestrictedStructure::LevelRestrictedStructure(const std::string& level_spec) : spec_(level_spec) {
    id_ = level_spec.empty() ? "level-restricted" : "level-restricted(" + level_spec + ")";
    if (level_spec.empty() || level_spec == "all") {
        mod_ = 0;
    } else if (level_spec == "even") {
        mod_ = 2;
        residues_ = {0};
    } else if (level_spec.rfind("mod:", 0) == 0) {
        std::stringstream ss(level_spec.substr(4));
        std::string mtok;
        if (!std::getline(ss, mtok, ':')) throw ParseError("level-restricted: bad spec: " + level_spec);
        mod_ = parse_big(mtok).convert_to<long long>();
        if (mod_ < 1) throw ParseError("level-restricted: modulus must be positive");
        std::string rest;
        std::getline(ss, rest);
        std::stringstream rs(rest);
        std::string rtok;
        while (std::getline(rs, rtok, '|')) {
            long long r = parse_big(rtok).convert_to<long long>();
            if (r < 0 || r >= mod_) throw ParseError("level-restricted: residue out of range");
            residues_.push_back(r);
        }
        std::sort(residues_.begin(), residues_.end());
        residues_.erase(std::unique(residues_.begin(), residues_.end()), residues_.end());
        if (residues_.empty()) throw ParseError("level-restricted: no residues");
    } else {
        throw ParseError("level-restricted: bad spec: " + level_spec);
    }
    if (!admissible_size(0))
        throw ParseError("level-restricted: size 0 must be admissible (the empty set)");
}

bool LevelRestrictedStructure::admissible_size(long long k) const {
    if (mod_ == 0) return true;
    return std::binary_search(residues_.begin(), residues_.end(), k % mod_);
}

long long LevelRestrictedStructure::next_size(long long k) const {
    for (long long c = k + 1;; ++c)
        if (admissible_size(c)) return c;
}

Capabilities LevelRestrictedStructure::caps() const {
    Capabilities c;
    c.locally_finite_below = true;
    c.rooted = true;
    c.directed = true;
    c.minimal_layer = true;
    return c;
}

std::vector<long long> LevelRestrictedStructure::members(const Element& e) {
    return parse_member_list(e.enc, "level-restricted");
}

Big LevelRestrictedStructure::index_of(const std::vector<long long>& m) const {
    // Rank of the bitcode among admissible bitcodes: scan set bits high->low.
    auto adm = [this](long long k) { return admissible_size(k); };
    Big count = 0;
    long long ones_above = 0;
    for (auto it = m.rbegin(); it != m.rend(); ++it) {
        count += count_admissible_suffix(*it, ones_above, adm);
        ++ones_above;
    }
    return count;
}

Element LevelRestrictedStructure::make(const std::vector<long long>& m) const {
    return Element{render_member_list(m), index_of(m)};
}

Element LevelRestrictedStructure::parse(const std::string& enc) const {
    auto m = parse_member_list(enc, "level-restricted");
    if (!admissible_size(static_cast<long long>(m.size())))
        throw ParseError(id_ + ": size " + std::to_string(m.size()) + " not admissible: " + enc);
    return Element{enc, index_of(m)};
}

Element LevelRestrictedStructure::at(const Big& n) const {
    if (n < 0) throw ParseError("level-restricted: negative index");
    auto adm = [this](long long k) { return admissible_size(k); };
    // Count of admissible bitcodes strictly below X.
    auto below = [&](const Big& X) {
        Big count = 0;
        long long ones_above = 0;
        auto bits = bits_of(X);
        for (auto it = bits.rbegin(); it != bits.rend(); ++it) {
            count += count_admissible_suffix(*it, ones_above, adm);
            ++ones_above;
        }
        return count;
    };
    long long B = 4;
    while (below(Big(1) << B) <= n) B *= 2;
    Big lo = 0, hi = Big(1) << B;
    while (hi - lo > 1) {
        Big mid = (lo + hi) / 2;
        if (below(mid) <= n)
            lo = mid;
        else
            hi = mid;
    }
    auto m = bits_of(lo);
    if (!admissible_size(static_cast<long long>(m.size())) || index_of(m) != n)
        throw InternalError("level-restricted: enumeration search failed");
    return Element{render_member_list(m), n};
}

bool LevelRestrictedStructure::leq(const Element& x, const Element& y) const {
    return subset_of(members(x), members(y));
}

std::vector<Element> LevelRestrictedStructure::principal_ideal(const Element& x) const {
    auto m = members(x);
    if (m.size() > 22) throw CapabilityError("level-restricted: ideal too large to enumerate");
    std::vector<Element> out;
    for (unsigned long long mask = 0; mask < (1ull << m.size()); ++mask) {
        std::vector<long long> sub;
        for (size_t i = 0; i < m.size(); ++i)
            if (mask >> i & 1) sub.push_back(m[i]);
        if (admissible_size(static_cast<long long>(sub.size()))) out.push_back(make(sub));
    }
    std::sort(out.begin(), out.end(),
              [](const Element& a, const Element& b) { return a.index < b.index; });
    return out;
}

Element LevelRestrictedStructure::upper_bound(const std::vector<Element>& xs) const {
    Big code = 0;
    for (const auto& x : xs) code |= bitcode_of(members(x));
    auto u = bits_of(code);
    while (!admissible_size(static_cast<long long>(u.size()))) {
        long long fresh = least_unused(u);
        u.insert(std::lower_bound(u.begin(), u.end(), fresh), fresh);
    }
    return make(u);
}

Element LevelRestrictedStructure::strict_upper_bound(const std::vector<Element>& xs) const {
    auto u = members(upper_bound(xs));
    long long target = next_size(static_cast<long long>(u.size()));
    while (static_cast<long long>(u.size()) < target) {
        long long fresh = least_unused(u);
        u.insert(std::lower_bound(u.begin(), u.end(), fresh), fresh);
    }
    return make(u);
}

Element LevelRestrictedStructure::fresh_min_avoiding(const SkipFn& skip) const {
    long long k = next_size(0);
    std::vector<long long> pick(k);
    for (long long i = 0; i < k; ++i) pick[i] = i;
    for (;;) {
        Element e = make(pick);
        if (!skip(e)) return e;
        next_colex(pick);
    }
}

bool LevelRestrictedStructure::in_minimal_layer(const Element& x) const {
    return static_cast<long long>(members(x).size()) == next_size(0);
}

void LevelRestrictedStructure::for_successors(const Element& x,
                                              const std::function<bool(const Element&)>& cb) const {
    auto m = members(x);
    long long jump = next_size(static_cast<long long>(m.size())) - static_cast<long long>(m.size());
    // Iterate jump-subsets of the complement in colex order; the resulting
    // bitcodes (and hence indices) ascend.
    std::vector<long long> pick(jump);
    for (long long i = 0; i < jump; ++i) pick[i] = i;
    auto comp = [&m](long long i) {
        // i-th natural not in m
        long long c = 0, seen = 0;
        size_t j = 0;
        for (;; ++c) {
            if (j < m.size() && m[j] == c) { ++j; continue; }
            if (seen == i) return c;
            ++seen;
        }
    };
    for (;;) {
        auto sup = m;
        for (long long i : pick) sup.push_back(comp(i));
        std::sort(sup.begin(), sup.end());
        if (!cb(make(sup))) return;
        next_colex(pick);
    }
}

}  // namespace revwit
