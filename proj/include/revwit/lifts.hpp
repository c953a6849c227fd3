#pragma once

#include "revwit/engine.hpp"

namespace revwit {

// Transports a base certificate on divisibility to the product with the
// integer chain: F(d, k) = (f(d), k).  The result is itself a certificate
// (strategy "product-lift", invariant "none") whose steps evaluate F on the
// first `prefix` product elements, skipping seed entries and points whose
// first component the base map does not cover.
Certificate product_lift(const Certificate& base, unsigned long long prefix);

// Transports a base certificate on finite-sets along the even numbers:
// tau(n) = 2n embeds the base copy, F(A) = tau(f(tau^-1(A cap even))) cup
// (A minus even).  Steps evaluate F on the first `prefix` set encodings where
// the even part has a base image (strategy "subset-lift", invariant "none").
Certificate subset_lift(const Certificate& base, unsigned long long prefix);

bool is_lift_strategy(const std::string& strategy_id);

}  // namespace revwit
