#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "revwit/condensation.hpp"
#include "revwit/strategy.hpp"

namespace revwit {

struct Step {
    std::string kind;  // "dom" | "ran"
    Element target;
    PairList added;
};

struct Certificate {
    std::string structure;
    std::string strategy;
    std::string invariant;
    PairList seed;
    std::vector<Step> steps;
    PairList final_pairs;
    BadWitness witness;
    std::optional<FieldBounds> bounds;
    unsigned long long dom_prefix = 0;
    unsigned long long ran_prefix = 0;
};

// Runs the back-and-forth driver: alternating dom/ran steps starting with dom,
// each step extending at the least-index element not yet covered.
Certificate run_generic(Structure& s, const std::string& strategy_id, const SeedSpec& seed_spec,
                        unsigned long long n_targets);

nlohmann::json certificate_to_json(const Certificate& c);

// Strict schema: exactly the documented keys and shapes; element encodings are
// validated against the named structure.
Certificate certificate_from_json(const nlohmann::json& j);

// Canonical bytes: two-space indent, sorted keys, trailing newline.
std::string certificate_dump(const Certificate& c);

}  // namespace revwit
