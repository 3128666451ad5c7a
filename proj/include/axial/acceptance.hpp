#pragma once

// The reproducibility battery: thirteen criteria, each an exact or numeric
// gate with a time budget.

#include "axial/io.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace axial {

struct AcceptanceOptions {
    std::uint64_t seed = 0;
    /// Worker threads for the larger sweeps; results are reduced in order.
    int threads = 1;
};

struct CriterionResult {
    int id = 0;
    std::string name;
    bool exact = true;
    bool pass = false;
    /// Correctness alone, ignoring the time budget.
    bool correct = false;
    double seconds = 0.0;
    double budget_seconds = 0.0;
    /// One-line summary of what was measured.
    std::string detail;
    /// Counts, maxima and flags for the JSON report.
    Json data;
};

/// Criterion ids 1..13.
std::vector<int> criterion_ids(bool exact_only);

/// Throws std::out_of_range for an unknown id.
CriterionResult run_criterion(int id, const AcceptanceOptions& opt);

/// `exact_only` restricts to criteria without quadrature.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt, bool exact_only,
                                            const std::function<void(const CriterionResult&)>& on_result = {});

/// Thread count from AXIAL_THREADS (default: hardware concurrency, at least 1).
int threads_from_env();

/// Runs body(i) for i in [0, n) on up to `threads` workers.
void parallel_for(int n, int threads, const std::function<void(int)>& body);

/// "PASS [id] name (t s): detail" or "FAIL …".
std::string summary_line(const CriterionResult& r);

}  // namespace axial
