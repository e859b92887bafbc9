// Command-line surface: graded Frobenius tables, verification suites, and
// extension feasibility searches, as plain-text or JSON reports.
//
// Exit codes: 0 success / all verdicts true / feasible
//             1 failed verdict or infeasible target
//             2 usage error
//             3 search ended inconclusively (node budget)
//
// Reports are byte-identical across repeated runs with the same parameters;
// wall-clock fields are only added under --timing.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "parkspan/characters.hpp"
#include "parkspan/extension.hpp"
#include "parkspan/span.hpp"
#include "parkspan/symfunc.hpp"
#include "parkspan/verify.hpp"

using namespace parkspan;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInconclusive = 3;

struct Output {
  std::string text;
  json record;
  bool as_json = false;
  bool timing = false;
  std::string path;

  int emit() const {
    std::string body = as_json ? record.dump(2) + "\n" : text;
    if (path.empty()) {
      std::cout << body;
      return kExitOk;
    }
    std::ofstream out(path);
    if (!out) {
      std::cerr << "cannot write to " << path << "\n";
      return kExitUsage;
    }
    out << body;
    return kExitOk;
  }
};

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

Partition parse_partition(const std::string& s) {
  Partition p;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    size_t pos = 0;
    int v = std::stoi(item, &pos);
    if (pos != item.size() || v < 1) throw std::invalid_argument("bad part: " + item);
    p.parts.push_back(v);
  }
  if (p.parts.empty() || !p.valid())
    throw std::invalid_argument("not a partition (need weakly decreasing positive parts): " + s);
  return p;
}

long long budget_from(long long flag_value, bool flag_given) {
  if (flag_given) return flag_value;
  if (const char* env = std::getenv("PARKSPAN_NODE_BUDGET")) return std::atoll(env);
  return kDefaultNodeBudget;
}

json symfunc_terms(const GradedSymFunc& g) {
  json terms = json::array();
  for (size_t k = 0; k < g.pieces.size(); ++k)
    for (auto& [lam, c] : g.pieces[k].coeffs)
      terms.push_back({{"partition", lam.str()},
                       {"coeff", c.get_str()},
                       {"degree", k}});
  return terms;
}

int cmd_grfrob(int n, int ell, int m, std::string basis, bool restricted,
               const SpanOptions& sopt, Output& out) {
  if (basis.empty()) basis = restricted ? "h" : "s";
  if (basis != "s" && basis != "h") {
    std::cerr << "basis must be s or h\n";
    return kExitUsage;
  }
  if (!restricted && ell != m) {
    std::cerr << "the unrestricted table needs equal multiplicities (the larger group "
                 "only acts when ell == m); pass --restricted for the restricted table\n";
    return kExitUsage;
  }

  Stopwatch sw;
  GradedSpan span = build_span(n, ell, m, sopt);
  GradedSymFunc table;
  table.n = restricted ? n : n + 1;
  table.basis = basis == "s" ? Basis::s : Basis::h;
  for (int k = 0; k < static_cast<int>(span.pieces.size()); ++k) {
    ClassFunction chi = degree_character(
        span, k, restricted ? GroupSide::Sn : GroupSide::Snp1, sopt);
    table.pieces.push_back(convert(frobenius(chi), table.basis));
  }

  std::ostringstream doc;
  doc << "command: grfrob\n"
      << "n: " << n << "\nell: " << ell << "\nm: " << m << "\nbasis: " << basis
      << "\nrestricted: " << (restricted ? "true" : "false")
      << "\ndimension: " << span.dim() << "\n";
  if (out.timing) doc << "seconds: " << sw.seconds() << "\n";
  doc << "\n";
  for (size_t k = 0; k < table.pieces.size(); ++k)
    doc << "degree " << k << ": " << table.pieces[k].str() << "\n";
  out.text = doc.str();

  out.record = {{"command", "grfrob"},
                {"n", n},
                {"ell", ell},
                {"m", m},
                {"restricted", restricted},
                {"dimension", span.dim()},
                {"basis", basis},
                {"terms", symfunc_terms(table)}};
  if (out.timing) out.record["seconds"] = sw.seconds();
  return out.emit();
}

int cmd_verify(const std::string& suite, const VerifyOptions& opts, Output& out) {
  std::vector<CheckResult> results;
  try {
    results = run_suite(suite, opts);
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }

  bool all_pass = true;
  std::ostringstream doc;
  doc << "command: verify\nsuite: " << suite << "\nmax-n: " << opts.max_n
      << "\ntri-max-n: " << opts.tri_max_n << "\nseed: " << opts.seed << "\n\n";
  json verdicts = json::array();
  for (auto& r : results) {
    all_pass = all_pass && r.pass;
    doc << "check " << r.name << ": " << (r.pass ? "pass" : "FAIL");
    if (out.timing) doc << " (" << r.seconds << "s)";
    if (!r.detail.empty()) doc << "  " << r.detail;
    doc << "\n";
    json v = {{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}};
    if (out.timing) v["seconds"] = r.seconds;
    verdicts.push_back(v);
  }
  doc << "\nresult: " << (all_pass ? "pass" : "FAIL") << "\n";
  out.text = doc.str();
  out.record = {{"command", "verify"},
                {"suite", suite},
                {"max_n", opts.max_n},
                {"tri_max_n", opts.tri_max_n},
                {"seed", opts.seed},
                {"verdicts", verdicts},
                {"pass", all_pass}};
  int rc = out.emit();
  if (rc != kExitOk) return rc;
  return all_pass ? kExitOk : kExitFail;
}

int cmd_extend(const std::string& park, const std::string& coset, const std::string& irrep,
               int N, const std::string& mode, long long budget, Output& out) {
  int given = (park.empty() ? 0 : 1) + (coset.empty() ? 0 : 1) + (irrep.empty() ? 0 : 1);
  if (given != 1) {
    std::cerr << "pick exactly one target: --park n, --coset parts, or --irrep parts\n";
    return kExitUsage;
  }
  if (mode != "irreducible" && mode != "coset") {
    std::cerr << "mode must be irreducible or coset\n";
    return kExitUsage;
  }

  std::string target_desc;
  int n = 0;
  ClassFunction chi;
  try {
    if (!park.empty()) {
      size_t pos = 0;
      n = std::stoi(park, &pos);
      if (pos != park.size() || n < 1) throw std::invalid_argument("need a size n >= 1");
      chi = park_character_direct(n);
      target_desc = "park " + park;
    } else if (!coset.empty()) {
      Partition lam = parse_partition(coset);
      n = lam.size();
      chi = coset_character(n, lam);
      target_desc = "coset " + lam.str();
    } else {
      Partition lam = parse_partition(irrep);
      n = lam.size();
      chi = irreducible_character(n, lam);
      target_desc = "irrep " + lam.str();
    }
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }
  if (N < n) {
    std::cerr << "need N >= n\n";
    return kExitUsage;
  }

  Stopwatch sw;
  FeasibilityResult r;
  try {
    if (mode == "coset")
      r = extends_as_coset_sum(m_basis_decomposition(chi), n, N, budget);
    else
      r = extends_to(chi, N, budget);
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }

  const char* verdict = r.verdict == Verdict::Feasible     ? "feasible"
                        : r.verdict == Verdict::Infeasible ? "infeasible"
                                                           : "inconclusive";
  std::ostringstream doc;
  doc << "command: extend\ntarget: " << target_desc << "\nn: " << n << "\nN: " << N
      << "\nmode: " << mode << "\nnode-budget: " << budget << "\n\nverdict: " << verdict
      << "\nnodes-explored: " << r.nodes_explored << "\n";
  if (out.timing) doc << "seconds: " << sw.seconds() << "\n";
  json witness = json::array();
  if (r.feasible()) {
    for (auto& [part, count] : r.witness) {
      doc << "witness " << part.str() << ": " << count << "\n";
      witness.push_back({{"partition", part.str()}, {"count", count}});
    }
  }
  out.text = doc.str();
  out.record = {{"command", "extend"},   {"target", target_desc},
                {"n", n},                {"N", N},
                {"mode", mode},          {"node_budget", budget},
                {"verdict", verdict},    {"nodes_explored", r.nodes_explored},
                {"witness", witness}};
  if (out.timing) out.record["seconds"] = sw.seconds();
  int rc = out.emit();
  if (rc != kExitOk) return rc;
  if (r.verdict == Verdict::Feasible) return kExitOk;
  if (r.verdict == Verdict::Infeasible) return kExitFail;
  return kExitInconclusive;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact graded spans, characters, and extension searches"};
  app.require_subcommand(1);

  Output out;
  app.add_flag("--json", out.as_json, "emit one JSON record instead of text");
  app.add_flag("--timing", out.timing, "include wall-clock fields in the report");
  app.add_option("--out", out.path, "write the report to this path instead of stdout");

  auto* grfrob = app.add_subcommand("grfrob", "graded character table of a span");
  grfrob->fallthrough();
  int n = 3, ell = 1, m = 1;
  std::string basis;
  bool restricted = false;
  SpanOptions sopt;
  grfrob->add_option("--n", n, "size parameter")->required()->check(CLI::PositiveNumber);
  grfrob->add_option("--ell", ell, "boundary edge multiplicity")->check(CLI::PositiveNumber);
  grfrob->add_option("--m", m, "interior edge multiplicity")->check(CLI::PositiveNumber);
  grfrob->add_option("--basis", basis, "s or h (default: s, or h when restricted)");
  grfrob->add_flag("--restricted", restricted, "table for the small-group action");
  grfrob->add_option("--threads", sopt.threads, "worker cap")->check(CLI::PositiveNumber);
  grfrob->add_option("--guard-n", sopt.max_n_unit, "largest size admitted at ell = m = 1");
  grfrob->add_option("--max-products", sopt.max_products,
                     "bail out if a basis build would expand more products than this");

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->fallthrough();
  std::string suite = "all";
  VerifyOptions vopts;
  long long budget_flag = kDefaultNodeBudget;
  {
    std::string names;
    for (auto& s : suite_names()) names += (names.empty() ? "" : ", ") + s;
    verify->add_option("suite", suite, "one of: " + names);
  }
  verify->add_option("--max-n", vopts.max_n, "top size for the unit-multiplicity family");
  verify->add_option("--tri-max-n", vopts.tri_max_n, "top size for the leading-term sweep");
  verify->add_option("--threads", vopts.threads, "worker cap")->check(CLI::PositiveNumber);
  verify->add_option("--seed", vopts.seed, "sampler seed");
  auto* vbudget = verify->add_option("--node-budget", budget_flag, "search node budget");
  verify->add_flag("--stretch", vopts.stretch, "include the large-group searches");
  verify->add_flag("--full-invariance-check", vopts.full_invariance_check,
                   "check invariance of every basis row, not a sample");

  auto* extend = app.add_subcommand("extend", "extension feasibility search");
  extend->fallthrough();
  std::string park, coset, irrep, mode = "irreducible";
  int bigN = 0;
  extend->add_option("--park", park, "parking target: size n");
  extend->add_option("--coset", coset, "permutation-module target: comma-separated parts");
  extend->add_option("--irrep", irrep, "irreducible target: comma-separated parts");
  extend->add_option("--N", bigN, "group to extend through")->required();
  extend->add_option("--mode", mode, "irreducible (default) or coset");
  auto* ebudget = extend->add_option("--node-budget", budget_flag, "search node budget");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (grfrob->parsed()) return cmd_grfrob(n, ell, m, basis, restricted, sopt, out);
    if (verify->parsed()) {
      vopts.node_budget = budget_from(budget_flag, vbudget->count() > 0);
      return cmd_verify(suite, vopts, out);
    }
    if (extend->parsed()) {
      long long budget = budget_from(budget_flag, ebudget->count() > 0);
      return cmd_extend(park, coset, irrep, bigN, mode, budget, out);
    }
  } catch (const GuardError& e) {
    std::cerr << "guard exceeded: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}
