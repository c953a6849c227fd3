#include "revwit/closure.hpp"

#include <algorithm>
#include <set>

namespace revwit {

namespace {

std::set<std::string> enc_set(const std::vector<Element>& xs) {
    std::set<std::string> out;
    for (const auto& x : xs) out.insert(x.enc);
    return out;
}

std::vector<Element> merged(const std::vector<Element>& a, const std::vector<Element>& b) {
    std::vector<Element> u = a;
    auto have = enc_set(a);
    for (const auto& x : b)
        if (!have.count(x.enc)) {
            u.push_back(x);
            have.insert(x.enc);
        }
    std::sort(u.begin(), u.end(),
              [](const Element& x, const Element& y) { return x.index < y.index; });
    return u;
}

std::string render(const std::set<std::string>& s) {
    std::string out = "{";
    for (const auto& e : s) {
        if (out.size() > 1) out += ", ";
        out += e;
    }
    return out + "}";
}

}  // namespace

ClosureOperator down_closure_operator(const Structure& s) {
    return {"down-closure",
            [&s](const std::vector<Element>& xs) { return down_closure(s, xs); }};
}

ClosureOperator identity_operator() {
    return {"identity", [](const std::vector<Element>& xs) { return xs; }};
}

ClosureOperator adjoin_root_operator(const Structure& s) {
    return {"adjoin-root", [&s](const std::vector<Element>& xs) {
                Element root = s.at(0);
                for (const auto& x : xs)
                    if (x.enc == root.enc) return xs;
                std::vector<Element> out = xs;
                out.push_back(root);
                std::sort(out.begin(), out.end(),
                          [](const Element& a, const Element& b) { return a.index < b.index; });
                return out;
            }};
}

ClosureReport check_closure_laws(const ClosureOperator& cl,
                                 const std::vector<std::vector<Element>>& samples) {
    ClosureReport r;
    auto note = [&](const std::string& msg) {
        r.ok = false;
        r.failures.push_back(cl.name + ": " + msg);
    };
    for (size_t i = 0; i < samples.size(); ++i) {
        auto closed = enc_set(cl.apply(samples[i]));
        for (const auto& x : samples[i])
            if (!closed.count(x.enc)) {
                note("(cl1) fails on sample " + std::to_string(i) + ": " + x.enc +
                     " missing from " + render(closed));
                break;
            }
    }
    for (size_t i = 0; i < samples.size(); ++i)
        for (size_t j = i; j < samples.size(); ++j) {
            auto lhs = enc_set(cl.apply(merged(samples[i], samples[j])));
            auto a = enc_set(cl.apply(samples[i]));
            for (const auto& e : enc_set(cl.apply(samples[j]))) a.insert(e);
            if (lhs != a)
                note("(cl2) fails on samples " + std::to_string(i) + ", " + std::to_string(j) +
                     ": closure of the union is " + render(lhs) + ", union of closures is " +
                     render(a));
        }
    return r;
}

}  // namespace revwit
