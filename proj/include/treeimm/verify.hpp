#pragma once

/*
 * The machine-checking sweep: batches of per-item verdicts over the trees
 * and cover pairs of GTS_n, reduced into a deterministic report.
 */

#include "treeimm/bipoly.hpp"
#include "treeimm/symchar.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace treeimm {

struct VerifyItem {
    std::string kind;
    std::string pair_lower, pair_upper;  // canonical codes; empty when absent
    std::string lambda;                  // "2,1,1" or empty
    int r = -1;                          // -1 when absent
    bool ok = false;
    long unverifiable = 0;
    std::string detail;
};

struct VerifySummary {
    long total = 0;
    long ok = 0;
    long failed = 0;
    long unverifiable = 0;
};

struct VerifyReport {
    std::string suite;
    int n = 0;
    std::vector<VerifyItem> items;
    VerifySummary summary;
    bool all_ok() const { return summary.failed == 0; }
};

struct VerifyOptions {
    int jobs = 0;                 // 0 = hardware concurrency
    int max_n = 8;                // full-verify guard
    bool max_n_override = false;  // allow n = 9 (and up to enumeration limits)
    std::optional<Partition> lambda_filter;
    std::optional<int> r_filter;
    std::optional<Rational> extra_q0;  // added to the pointwise sample points
};

// suite: main | identities | injections | moments | ed | all
VerifyReport run_verify(const std::string& suite, int n, const VerifyOptions& opts);

std::string report_to_json(const VerifyReport& rep);
std::string report_to_text(const VerifyReport& rep);

// Run fn(i) for i in [0, count) on `jobs` threads; items must be
// independent.  Used so reports are reduced in canonical index order.
void parallel_for(size_t count, int jobs, const std::function<void(size_t)>& fn);

}  // namespace treeimm
