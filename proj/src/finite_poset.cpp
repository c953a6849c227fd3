#include "revwit/finite_poset.hpp"

#include <algorithm>

namespace revwit {

FinitePoset FinitePoset::from_relation(std::vector<Element> elems,
                                       std::vector<std::vector<char>> le) {
    size_t n = elems.size();
    if (le.size() != n) throw ParseError("finite poset: relation size mismatch");
    for (size_t i = 0; i < n; ++i) {
        if (le[i].size() != n) throw ParseError("finite poset: relation size mismatch");
        if (!le[i][i]) throw ParseError("finite poset: not reflexive");
    }
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            if (i != j && le[i][j] && le[j][i])
                throw ParseError("finite poset: not antisymmetric");
            if (!le[i][j]) continue;
            for (size_t k = 0; k < n; ++k)
                if (le[j][k] && !le[i][k]) throw ParseError("finite poset: not transitive");
        }
    FinitePoset fp;
    fp.elems = std::move(elems);
    fp.le = std::move(le);
    return fp;
}

FinitePoset FinitePoset::fragment(const Structure& s, const std::vector<Element>& elems) {
    size_t n = elems.size();
    std::vector<std::vector<char>> le(n, std::vector<char>(n, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) le[i][j] = s.leq(elems[i], elems[j]) ? 1 : 0;
    return from_relation(elems, std::move(le));
}

std::vector<std::vector<size_t>> FinitePoset::levels() const {
    size_t n = size();
    std::vector<char> placed(n, 0);
    std::vector<std::vector<size_t>> out;
    size_t done = 0;
    while (done < n) {
        std::vector<size_t> level;
        for (size_t i = 0; i < n; ++i) {
            if (placed[i]) continue;
            bool minimal = true;
            for (size_t j = 0; j < n; ++j)
                if (j != i && !placed[j] && le[j][i]) { minimal = false; break; }
            if (minimal) level.push_back(i);
        }
        if (level.empty()) throw InternalError("finite poset: level peeling stalled");
        for (size_t i : level) placed[i] = 1;
        done += level.size();
        out.push_back(std::move(level));
    }
    return out;
}

std::vector<size_t> FinitePoset::linear_extension() const {
    size_t n = size();
    std::vector<char> placed(n, 0);
    std::vector<size_t> out;
    while (out.size() < n) {
        size_t best = n;
        for (size_t i = 0; i < n; ++i) {
            if (placed[i]) continue;
            bool ready = true;
            for (size_t j = 0; j < n; ++j)
                if (j != i && !placed[j] && le[j][i]) { ready = false; break; }
            if (!ready) continue;
            if (best == n || elems[i].index < elems[best].index) best = i;
        }
        if (best == n) throw InternalError("finite poset: linear extension stalled");
        placed[best] = 1;
        out.push_back(best);
    }
    return out;
}

}  // namespace revwit
