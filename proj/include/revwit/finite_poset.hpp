#pragma once

#include <vector>

#include "revwit/structure.hpp"

namespace revwit {

// An explicit finite poset: elements plus the full reflexive order matrix.
struct FinitePoset {
    std::vector<Element> elems;
    std::vector<std::vector<char>> le;  // le[i][j] = (elems[i] <= elems[j])

    size_t size() const { return elems.size(); }

    // Validates reflexivity, antisymmetry and transitivity; throws ParseError.
    static FinitePoset from_relation(std::vector<Element> elems,
                                     std::vector<std::vector<char>> le);

    // The restriction of a structure to a finite element list.
    static FinitePoset fragment(const Structure& s, const std::vector<Element>& elems);

    // Rank levels: level 0 = minimal elements, level k+1 = minimal after
    // removing levels <= k.  Returns element positions grouped by level.
    std::vector<std::vector<size_t>> levels() const;

    // Kahn topological order; ties broken by least enumeration index.
    std::vector<size_t> linear_extension() const;
};

}  // namespace revwit
