#pragma once

#include <functional>
#include <string>
#include <vector>

#include "revwit/structure.hpp"

namespace revwit {

// A named operator on finite element sets, expected to satisfy
//   (cl1)  S is contained in apply(S), and
//   (cl2)  apply(A + B) = apply(A) + apply(B)   (union on both sides).
struct ClosureOperator {
    std::string name;
    std::function<std::vector<Element>(const std::vector<Element>&)> apply;
};

ClosureOperator down_closure_operator(const Structure& s);
ClosureOperator identity_operator();
// Adjoins the least element of the structure to every set.
ClosureOperator adjoin_root_operator(const Structure& s);

struct ClosureReport {
    bool ok = true;
    std::vector<std::string> failures;
};

// Checks (cl1) on every sample and (cl2) on every pair of samples.
ClosureReport check_closure_laws(const ClosureOperator& cl,
                                 const std::vector<std::vector<Element>>& samples);

}  // namespace revwit
