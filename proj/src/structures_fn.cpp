#include <algorithm>
#include <map>
#include <sstream>

#include "revwit/structures.hpp"

namespace revwit {

namespace {

Big triangle(const Big& n) { return n * (n + 1) / 2; }

std::string render_entries(const FnStructure::Rep& rep) {
    std::string s = "{";
    for (size_t i = 0; i < rep.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(rep[i].first) + ":" + big_str(rep[i].second);
    }
    return s + "}";
}

}  // namespace

FnStructure::Rep FnStructure::entries(const Element& e) {
    const std::string& enc = e.enc;
    if (enc.size() < 2 || enc.front() != '{' || enc.back() != '}')
        throw ParseError("fn: bad encoding: " + enc);
    Rep out;
    std::string body = enc.substr(1, enc.size() - 2);
    if (body.empty()) return out;
    if (body.back() == ',') throw ParseError("fn: bad encoding: " + enc);
    std::stringstream ss(body);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        auto colon = tok.find(':');
        if (colon == std::string::npos) throw ParseError("fn: bad entry: " + tok);
        Big k = parse_big(tok.substr(0, colon));
        Big v = parse_big(tok.substr(colon + 1));
        if (k < 0 || k > 1000000) throw ParseError("fn: key out of range: " + tok);
        long long key = k.convert_to<long long>();
        if (!out.empty() && key <= out.back().first)
            throw ParseError("fn: keys not strictly ascending: " + enc);
        out.emplace_back(key, v);
    }
    return out;
}

Element FnStructure::make(const Rep& rep) const {
    long long offset = fin_ ? 1 : 0;
    if (rep.empty()) return Element{"{}", 0};
    std::vector<long long> keys;
    std::vector<Big> vals;
    for (const auto& [k, v] : rep) {
        if (v < offset) throw InternalError("fn: value below minimum");
        keys.push_back(k);
        vals.push_back(v - offset);
    }
    Big i = bitcode_of(keys) - 1;
    Big j = tuple_code(vals);
    return Element{render_entries(rep), 1 + cantor_pair(i, j)};
}

Capabilities FnStructure::caps() const {
    Capabilities c;
    c.locally_finite_below = true;
    c.rooted = true;
    c.directed = true;
    c.minimal_layer = true;
    c.self_embedding_above = fin_;
    return c;
}

Element FnStructure::parse(const std::string& enc) const {
    Element probe{enc, 0};
    Rep rep = entries(probe);
    long long offset = fin_ ? 1 : 0;
    for (const auto& [k, v] : rep) {
        (void)k;
        if (v < offset)
            throw ParseError(id() + ": value must be at least " + std::to_string(offset) + ": " + enc);
    }
    return make(rep);
}

Element FnStructure::at(const Big& n) const {
    if (n < 0) throw ParseError("fn: negative index");
    if (n == 0) return Element{"{}", 0};
    auto [i, j] = cantor_unpair(n - 1);
    auto keys = bits_of(i + 1);
    auto vals = tuple_decode(j, keys.size());
    long long offset = fin_ ? 1 : 0;
    Rep rep;
    for (size_t t = 0; t < keys.size(); ++t) rep.emplace_back(keys[t], vals[t] + offset);
    return make(rep);
}

bool FnStructure::leq(const Element& x, const Element& y) const {
    Rep fx = entries(x), fy = entries(y);
    size_t j = 0;
    for (const auto& [k, v] : fx) {
        while (j < fy.size() && fy[j].first < k) ++j;
        if (j == fy.size() || fy[j].first != k || fy[j].second < v) return false;
    }
    return true;
}

std::vector<Element> FnStructure::principal_ideal(const Element& x) const {
    Rep f = entries(x);
    long long offset = fin_ ? 1 : 0;
    Big total = 1;
    for (const auto& [k, v] : f) {
        (void)k;
        total *= (v - offset + 2);  // absent, or each admissible value up to v
        if (total > 200000) throw CapabilityError("fn: ideal too large to enumerate");
    }
    std::vector<Element> out;
    Rep cur;
    std::function<void(size_t)> rec = [&](size_t t) {
        if (t == f.size()) {
            out.push_back(make(cur));
            return;
        }
        rec(t + 1);  // key absent
        for (Big v = offset; v <= f[t].second; ++v) {
            cur.emplace_back(f[t].first, v);
            rec(t + 1);
            cur.pop_back();
        }
    };
    rec(0);
    std::sort(out.begin(), out.end(),
              [](const Element& a, const Element& b) { return a.index < b.index; });
    return out;
}

Element FnStructure::upper_bound(const std::vector<Element>& xs) const {
    std::map<long long, Big> acc;
    for (const auto& x : xs)
        for (const auto& [k, v] : entries(x)) {
            auto it = acc.find(k);
            if (it == acc.end() || it->second < v) acc[k] = v;
        }
    Rep rep(acc.begin(), acc.end());
    return make(rep);
}

Element FnStructure::strict_upper_bound(const std::vector<Element>& xs) const {
    Rep u = entries(upper_bound(xs));
    long long fresh = 0;
    for (const auto& [k, v] : u) {
        (void)v;
        if (k > fresh) break;
        if (k == fresh) ++fresh;
    }
    u.emplace_back(fresh, fin_ ? 1 : 0);
    std::sort(u.begin(), u.end());
    return make(u);
}

bool FnStructure::in_minimal_layer(const Element& x) const {
    Rep f = entries(x);
    return f.size() == 1 && f[0].second == (fin_ ? 1 : 0);
}

void FnStructure::for_successors(const Element& x,
                                 const std::function<bool(const Element&)>& cb) const {
    Rep f = entries(x);
    long long offset = fin_ ? 1 : 0;
    std::vector<Element> cands;
    for (size_t t = 0; t < f.size(); ++t) {
        Rep bump = f;
        bump[t].second += 1;
        cands.push_back(make(bump));
    }
    long long A = -1;
    auto has_key = [&f](long long k) {
        return std::any_of(f.begin(), f.end(), [k](const auto& e) { return e.first == k; });
    };
    auto extend_lb = [](long long alpha) {
        Big i = (Big(1) << alpha) - 1;
        return 1 + triangle(i);
    };
    auto push_next_extend = [&]() {
        ++A;
        if (!has_key(A)) {
            Rep ext = f;
            ext.emplace_back(A, offset);
            std::sort(ext.begin(), ext.end());
            cands.push_back(make(ext));
        }
    };
    for (;;) {
        while (cands.empty()) push_next_extend();
        size_t best = 0;
        for (size_t i = 1; i < cands.size(); ++i)
            if (cands[i].index < cands[best].index) best = i;
        // pull in any pending extends that could still undercut the current best
        while (extend_lb(A + 1) <= cands[best].index) {
            push_next_extend();
            for (size_t i = 0; i < cands.size(); ++i)
                if (cands[i].index < cands[best].index) best = i;
        }
        if (!cb(cands[best])) return;
        cands.erase(cands.begin() + static_cast<long>(best));
    }
}

Element FnStructure::fresh_min_avoiding(const SkipFn& skip) const {
    long long offset = fin_ ? 1 : 0;
    for (long long alpha = 0;; ++alpha) {
        Element e = make({{alpha, Big(offset)}});
        if (!skip(e)) return e;
    }
}

std::vector<std::pair<Element, Element>> FnStructure::embed_ideal_above(const Element& a,
                                                                        const Element& p) const {
    if (!fin_) throw CapabilityError("fn-omega: embed_ideal_above not supported");
    Rep pr = entries(p);
    std::vector<std::pair<Element, Element>> out;
    for (const auto& d : principal_ideal(a)) {
        std::map<long long, Big> sum(pr.begin(), pr.end());
        for (const auto& [k, v] : entries(d)) sum[k] += v;
        Rep img(sum.begin(), sum.end());
        out.emplace_back(d, make(img));
    }
    return out;
}

}  // namespace revwit
