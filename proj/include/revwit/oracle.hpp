#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "revwit/condensation.hpp"
#include "revwit/finite_poset.hpp"

namespace revwit {

struct ScanReport {
    size_t size = 0;
    unsigned long long bijections = 0;
    unsigned long long hom_bijections = 0;
    unsigned long long automorphisms = 0;
    std::vector<std::string> bad;  // order-preserving bijections that are not automorphisms
};

// Classifies every bijection of the ground set; guard: size <= 8.
ScanReport exhaustive_endo_scan(const FinitePoset& fp);

// Every strict order table on n labeled points (three states per unordered
// pair, transitivity-filtered); guard: n <= 6.
std::vector<FinitePoset> all_labeled_posets(size_t n);

struct OracleReport {
    bool ok = true;
    unsigned long long seed = 0;
    unsigned long long trials = 0;
    std::vector<std::string> failures;
};

// Draws `trials` random small samples from the early enumeration and asserts
// the defining property of every witness operation the structure advertises;
// on the random poset each trial grows a fresh extension vertex and the order
// is re-scanned periodically.
OracleReport witness_conformance(Structure& s, unsigned long long trials, unsigned long long seed);

struct StepReport {
    bool ok = true;
    std::vector<std::string> failures;
};

// From-scratch re-check of one recorded step: the base and the extended pair
// lists are verified in full, with no incremental state, plus the parts of the
// named invariant decidable from the pairs alone.
StepReport recheck_step(const Structure& s, const PairList& before, const PairList& added,
                        const std::string& invariant);

nlohmann::json scan_report_json(const ScanReport& r);
nlohmann::json oracle_report_json(const OracleReport& r);

}  // namespace revwit
