#pragma once

#include <string>
#include <vector>

#include "parkspan/extension.hpp"
#include "parkspan/span.hpp"

namespace parkspan {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

struct VerifyOptions {
  int max_n = 5;      // top n for the (1,1) span family
  int tri_max_n = 6;  // top n for the triangularity sweep
  int threads = 1;
  long long node_budget = kDefaultNodeBudget;
  unsigned seed = 20250814u;  // sampler seed (fixed: reports are reproducible)
  bool full_invariance_check = false;
  bool stretch = false;  // include the big-group searches in "all"/"extremes"
};

// One entry per acceptance check; each is independent and self-timing.
CheckResult check_dimensions(const VerifyOptions&);            // span dims (n+1)^{n-1}
CheckResult check_golden_tables(const VerifyOptions&);         // printed tables
CheckResult check_degree_modules(const VerifyOptions&);        // per-degree coset sums
CheckResult check_unit_extremes(const VerifyOptions&);         // trivial/reflection/sym/top
CheckResult check_general_lm(const VerifyOptions&);            // two-parameter family
CheckResult check_triangular_family(const VerifyOptions&);     // leading terms + projection rank
CheckResult check_initial_coefficients(const VerifyOptions&);  // Hilbert head + coboundary gap
CheckResult check_hilbert_tutte(const VerifyOptions&);         // Hilbert vs Tutte specialization
CheckResult check_extension_verdicts(const VerifyOptions&);    // feasibility verdicts
CheckResult check_stretch_extension(const VerifyOptions&);     // the big-group searches
CheckResult check_property_suites(const VerifyOptions&);       // randomized/exhaustive properties

// Suites: main, extremes, triangularity, tutte, bijection, all.
// Throws std::invalid_argument for an unknown suite name.
std::vector<CheckResult> run_suite(const std::string& suite, const VerifyOptions& opts);
const std::vector<std::string>& suite_names();

// Spans built by the checks are cached per (n, l, m); tests may reset.
void reset_verify_cache();

}  // namespace parkspan
