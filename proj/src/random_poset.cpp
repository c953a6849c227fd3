#include "revwit/random_poset.hpp"

#include <algorithm>

namespace revwit {

bool RandomPosetState::lt(size_t x, size_t y) const {
    if (x >= size() || y >= size()) throw ParseError("random-poset: vertex does not exist");
    return bit(below_[y], x);
}

size_t RandomPosetState::add_vertex(const std::vector<size_t>& L, const std::vector<size_t>& G,
                                    const std::vector<size_t>& U) {
    size_t n = size();
    auto in_range = [&](const std::vector<size_t>& v) {
        return std::all_of(v.begin(), v.end(), [&](size_t x) { return x < n; });
    };
    if (!in_range(L) || !in_range(G) || !in_range(U))
        throw InternalError("random-poset: witness call references missing vertex");
    std::vector<char> mark(n, 0);
    for (size_t l : L) mark[l] |= 1;
    for (size_t g : G) mark[g] |= 2;
    for (size_t u : U) mark[u] |= 4;
    for (size_t v = 0; v < n; ++v)
        if (mark[v] & (mark[v] - 1))
            throw InternalError("random-poset: witness sets not disjoint");
    for (size_t l : L)
        for (size_t g : G)
            if (!lt(l, g)) throw InternalError("random-poset: (c1) violated: L not below G");
    for (size_t u : U) {
        for (size_t l : L)
            if (lt(u, l)) throw InternalError("random-poset: (c2) violated: U below L");
        for (size_t g : G)
            if (lt(g, u)) throw InternalError("random-poset: (c3) violated: G below U");
    }

    size_t words = n / 64 + 1;
    std::vector<uint64_t> below(words, 0), above(words, 0);
    for (size_t l : L) {
        set_bit(below, l);
        for (size_t w = 0; w < below_[l].size(); ++w) below[w] |= below_[l][w];
    }
    for (size_t g : G) {
        set_bit(above, g);
        for (size_t w = 0; w < above_[g].size(); ++w) above[w] |= above_[g][w];
    }
    for (size_t w = 0; w < words; ++w)
        if (below[w] & above[w]) throw InternalError("random-poset: closure not disjoint");
    for (size_t u : U)
        if (bit(below, u) || bit(above, u))
            throw InternalError("random-poset: U reached by closure");
    for (size_t x = 0; x < n; ++x) {
        if (!bit(below, x)) continue;
        for (size_t y = 0; y < n; ++y)
            if (bit(above, y) && !lt(x, y))
                throw InternalError("random-poset: closure would break transitivity");
    }

    below_.push_back(below);
    above_.push_back(above);
    for (size_t x = 0; x < n; ++x) {
        if (bit(below, x)) set_bit(above_[x], n);
        if (bit(above, x)) set_bit(below_[x], n);
    }
    return n;
}

bool RandomPosetState::strict_partial_order() const {
    size_t n = size();
    for (size_t v = 0; v < n; ++v) {
        if (bit(below_[v], v) || bit(above_[v], v)) return false;
        for (size_t x = 0; x < n; ++x) {
            if (bit(below_[v], x) != bit(above_[x], v)) return false;
            if (!bit(below_[v], x)) continue;
            // transitivity: below(x) must be contained in below(v)
            for (size_t w = 0; w < below_[x].size(); ++w) {
                uint64_t lhs = below_[x][w];
                uint64_t rhs = w < below_[v].size() ? below_[v][w] : 0;
                if (lhs & ~rhs) return false;
            }
        }
    }
    return true;
}

std::vector<std::pair<size_t, size_t>> RandomPosetState::strict_pairs() const {
    std::vector<std::pair<size_t, size_t>> out;
    for (size_t y = 0; y < size(); ++y)
        for (size_t x = 0; x < size(); ++x)
            if (bit(below_[y], x)) out.emplace_back(x, y);
    return out;
}

RandomPosetStructure::RandomPosetStructure() : state_(std::make_shared<RandomPosetState>()) {
    state_->add_vertex({}, {}, {});         // v0
    state_->add_vertex({}, {}, {0});        // v1
    state_->add_vertex({}, {}, {0, 1});     // v2
    state_->add_vertex({2}, {}, {0, 1});    // v3: v2 < v3
}

Capabilities RandomPosetStructure::caps() const {
    Capabilities c;
    c.extension_axioms = true;
    return c;
}

size_t RandomPosetStructure::vertex(const Element& e) {
    if (e.enc.size() < 2 || e.enc[0] != 'v') throw ParseError("random-poset: bad element: " + e.enc);
    return static_cast<size_t>(e.index.convert_to<unsigned long long>());
}

Element RandomPosetStructure::vertex_element(size_t k) const {
    return Element{"v" + std::to_string(k), Big(k)};
}

Element RandomPosetStructure::parse(const std::string& enc) const {
    if (enc.size() < 2 || enc[0] != 'v') throw ParseError("random-poset: bad element: " + enc);
    Big k = parse_big(enc.substr(1));
    if (k < 0) throw ParseError("random-poset: bad element: " + enc);
    return Element{enc, k};
}

Element RandomPosetStructure::at(const Big& n) const {
    if (n < 0 || n >= Big(state_->size()))
        throw ParseError("random-poset: vertex index out of range");
    return vertex_element(n.convert_to<size_t>());
}

bool RandomPosetStructure::leq(const Element& x, const Element& y) const {
    return state_->leq(vertex(x), vertex(y));
}

std::optional<Big> RandomPosetStructure::enumeration_limit() const {
    return Big(state_->size());
}

SuccessorResult RandomPosetStructure::immediate_successors(const Element& x, const Big& budget) const {
    SuccessorResult r;
    r.complete = false;  // more vertices can always appear later
    size_t v = vertex(x);
    size_t lim = std::min<size_t>(state_->size(),
                                  budget < 0 ? 0 : budget.convert_to<size_t>());
    for (size_t y = 0; y < lim; ++y) {
        if (!state_->lt(v, y)) continue;
        bool immediate = true;
        for (size_t z = 0; z < state_->size() && immediate; ++z)
            if (state_->lt(v, z) && state_->lt(z, y)) immediate = false;
        if (immediate) r.found.push_back(vertex_element(y));
    }
    return r;
}

}  // namespace revwit
