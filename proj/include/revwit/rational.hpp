#pragma once

#include <string>

#include "revwit/big.hpp"
#include "revwit/element.hpp"

namespace revwit {

// Exact rationals in the canonical grammar: "p/q" reduced with q > 1, plain
// decimal integers (incl. "0") when the denominator is 1.
Rat make_rat(const Big& num, const Big& den);
Rat parse_rat(const std::string& s);
std::string rat_str(const Rat& r);

// Heap position of a positive reduced fraction in the Calkin-Wilf tree
// (root 1/1 at position 1; children a/(a+b), (a+b)/b at 2k, 2k+1).
Big calkin_wilf_index(const Big& num, const Big& den);
std::pair<Big, Big> calkin_wilf_value(Big k);

// Q enumerated as 0, 1, -1, 1/2, -1/2, 2, -2, ... (sign-interleaved
// Calkin-Wilf order with zero first).
Rat rat_at(const Big& n);
Big rat_index(const Rat& r);

}  // namespace revwit
