#include "parkspan/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "parkspan/multigraph.hpp"
#include "parkspan/symfunc.hpp"

namespace parkspan {

namespace {

struct Stopwatch {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  double secs() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  }
};

// accumulates sub-verdicts; keeps the first failure message
struct Verdicts {
  bool ok = true;
  int checks = 0;
  int failures = 0;
  std::string first_fail;

  void expect(bool c, const std::string& what) {
    ++checks;
    if (!c) {
      ++failures;
      if (ok) {
        ok = false;
        first_fail = what;
      }
    }
  }
};

CheckResult finish(const std::string& name, const Stopwatch& sw, const Verdicts& v,
                   const std::string& extra = "") {
  CheckResult r;
  r.name = name;
  r.pass = v.ok;
  r.seconds = sw.secs();
  std::ostringstream os;
  if (v.ok) {
    os << v.checks << " checks";
    if (!extra.empty()) os << "; " << extra;
  } else {
    os << v.failures << " of " << v.checks << " checks failed; first: " << v.first_fail;
  }
  r.detail = os.str();
  return r;
}

SpanOptions span_opts(const VerifyOptions& o) {
  SpanOptions s;
  s.threads = o.threads;
  s.full_invariance_check = o.full_invariance_check;
  return s;
}

// ---------- caches ----------

std::map<std::tuple<int, int, int>, GradedSpan>& span_cache() {
  static std::map<std::tuple<int, int, int>, GradedSpan> c;
  return c;
}

GradedSpan& cached_span(int n, int ell, int m, const VerifyOptions& o) {
  auto key = std::make_tuple(n, ell, m);
  auto it = span_cache().find(key);
  if (it == span_cache().end())
    it = span_cache().emplace(key, build_span(n, ell, m, span_opts(o))).first;
  return it->second;
}

std::map<std::tuple<int, int, int, int, int>, ClassFunction>& char_cache() {
  static std::map<std::tuple<int, int, int, int, int>, ClassFunction> c;
  return c;
}

ClassFunction cached_degree_char(int n, int ell, int m, int k, GroupSide side,
                                 const VerifyOptions& o) {
  auto key = std::make_tuple(n, ell, m, k, static_cast<int>(side));
  auto it = char_cache().find(key);
  if (it == char_cache().end()) {
    GradedSpan& s = cached_span(n, ell, m, o);
    it = char_cache().emplace(key, degree_character(s, k, side, span_opts(o))).first;
  }
  return it->second;
}

// Sum of coset characters over paths of each area, indexed by area.
std::vector<ClassFunction> dyck_sum_characters(int n, int ell, int m) {
  int top = staircase(n, ell, m).size();
  std::vector<ClassFunction> out(top + 1, ClassFunction(n));
  std::map<Partition, ClassFunction> coset_memo;
  for (auto& d : enum_dyck_paths(n, ell, m)) {
    PathStats st = path_stats(d);
    auto it = coset_memo.find(st.lambda);
    if (it == coset_memo.end())
      it = coset_memo.emplace(st.lambda, coset_character(n, st.lambda)).first;
    out[st.area] += it->second;
  }
  return out;
}

// ---------- table literals ----------

SymFunc sf(int n, Basis b, std::initializer_list<std::pair<std::vector<int>, long>> terms) {
  SymFunc f(n, b);
  for (auto& [parts, c] : terms) f.add(Partition(parts).stripped(), c);
  return f;
}

GradedSymFunc gsf(int n, Basis b, std::vector<SymFunc> pieces) {
  GradedSymFunc g;
  g.n = n;
  g.basis = b;
  g.pieces = std::move(pieces);
  return g;
}

GradedSymFunc expected_v3_s() {
  return gsf(4, Basis::s,
             {sf(4, Basis::s, {{{4}, 1}}),
              sf(4, Basis::s, {{{3, 1}, 1}}),
              sf(4, Basis::s, {{{4}, 1}, {{3, 1}, 1}, {{2, 2}, 1}}),
              sf(4, Basis::s, {{{3, 1}, 1}, {{2, 1, 1}, 1}})});
}

GradedSymFunc expected_v4_s() {
  return gsf(
      5, Basis::s,
      {sf(5, Basis::s, {{{5}, 1}}),
       sf(5, Basis::s, {{{4, 1}, 1}}),
       sf(5, Basis::s, {{{5}, 1}, {{4, 1}, 1}, {{3, 2}, 1}}),
       sf(5, Basis::s, {{{5}, 1}, {{4, 1}, 2}, {{3, 2}, 1}, {{3, 1, 1}, 1}}),
       sf(5, Basis::s, {{{5}, 1}, {{4, 1}, 2}, {{3, 2}, 2}, {{3, 1, 1}, 1}, {{2, 2, 1}, 1}}),
       sf(5, Basis::s, {{{5}, 1}, {{4, 1}, 2}, {{3, 2}, 2}, {{3, 1, 1}, 2}, {{2, 2, 1}, 1}}),
       sf(5, Basis::s,
          {{{4, 1}, 1}, {{3, 2}, 1}, {{3, 1, 1}, 1}, {{2, 2, 1}, 1}, {{2, 1, 1, 1}, 1}})});
}

GradedSymFunc expected_res_v3_h() {
  return gsf(3, Basis::h,
             {sf(3, Basis::h, {{{3}, 1}}), sf(3, Basis::h, {{{2, 1}, 1}}),
              sf(3, Basis::h, {{{2, 1}, 2}}), sf(3, Basis::h, {{{1, 1, 1}, 1}})});
}

GradedSymFunc expected_res_v3_22_h() {
  return gsf(3, Basis::h,
             {sf(3, Basis::h, {{{3}, 1}}),
              sf(3, Basis::h, {{{2, 1}, 1}}),
              sf(3, Basis::h, {{{2, 1}, 2}}),
              sf(3, Basis::h, {{{3}, 1}, {{2, 1}, 1}, {{1, 1, 1}, 1}}),
              sf(3, Basis::h, {{{2, 1}, 3}, {{1, 1, 1}, 1}}),
              sf(3, Basis::h, {{{2, 1}, 3}, {{1, 1, 1}, 2}}),
              sf(3, Basis::h, {{{2, 1}, 2}, {{1, 1, 1}, 3}}),
              sf(3, Basis::h, {{{2, 1}, 2}, {{1, 1, 1}, 3}}),
              sf(3, Basis::h, {{{1, 1, 1}, 3}}),
              sf(3, Basis::h, {{{1, 1, 1}, 1}})});
}

// ---------- samplers ----------

Multigraph random_full_support(std::mt19937& rng, int vmin, int vmax, int max_mult) {
  std::uniform_int_distribution<int> dv(vmin, vmax);
  std::uniform_int_distribution<int> dm(1, max_mult);
  Multigraph g;
  g.v = dv(rng);
  for (int i = 1; i <= g.v; ++i)
    for (int j = i + 1; j <= g.v; ++j) g.add_edge(i, j, dm(rng));
  return g;
}

Multigraph random_sparse(std::mt19937& rng, int vmin, int vmax, int max_copies) {
  std::uniform_int_distribution<int> dv(vmin, vmax);
  std::uniform_int_distribution<int> coin(0, 2);
  std::uniform_int_distribution<int> dm(1, 2);
  Multigraph g;
  g.v = dv(rng);
  int copies = 0;
  for (int i = 1; i <= g.v; ++i)
    for (int j = i + 1; j <= g.v; ++j) {
      if (coin(rng) == 0) continue;  // leave out a third of the slots
      int mult = dm(rng);
      if (copies + mult > max_copies) break;
      g.add_edge(i, j, mult);
      copies += mult;
    }
  return g;
}

// Whitney rank expansion: T(x,y) = sum over copy subsets A of
// (x-1)^{r(E)-r(A)} (y-1)^{|A|-r(A)} with r(A) = v - components(A).
BivarPoly whitney_rank_poly(const Multigraph& g) {
  auto cps = g.copies();
  int ec = static_cast<int>(cps.size());
  if (ec > 16) throw GuardError("whitney_rank_poly: too many edge copies");
  auto components = [&](unsigned long mask) {
    std::vector<int> parent(g.v + 1);
    for (int i = 0; i <= g.v; ++i) parent[i] = i;
    std::function<int(int)> find = [&](int x) {
      return parent[x] == x ? x : parent[x] = find(parent[x]);
    };
    int comps = g.v;
    for (int b = 0; b < ec; ++b)
      if (mask >> b & 1) {
        int a = find(cps[b].first), c = find(cps[b].second);
        if (a != c) {
          parent[a] = c;
          --comps;
        }
      }
    return comps;
  };
  unsigned long all = ec == 0 ? 0UL : (~0UL >> (64 - ec));
  int rE = g.v - components(all);
  BivarPoly xm1 = BivarPoly::monomial(1, 0) + BivarPoly::constant(-1);
  BivarPoly ym1 = BivarPoly::monomial(0, 1) + BivarPoly::constant(-1);
  std::vector<BivarPoly> xp{BivarPoly::constant(1)}, yp{BivarPoly::constant(1)};
  for (int i = 1; i <= g.v + ec; ++i) {
    xp.push_back(xp.back() * xm1);
    yp.push_back(yp.back() * ym1);
  }
  BivarPoly total = BivarPoly::zero();
  for (unsigned long mask = 0; mask < (1UL << ec); ++mask) {
    int rA = g.v - components(mask);
    int sz = __builtin_popcountl(mask);
    total = total + xp[rE - rA] * yp[sz - rA];
  }
  return total;
}

std::string tuple_tag(int n, int ell, int m) {
  std::ostringstream os;
  os << "(" << n << "," << ell << "," << m << ")";
  return os.str();
}

const std::vector<std::tuple<int, int, int>>& lm_tuples() {
  static const std::vector<std::tuple<int, int, int>> t = {
      {3, 2, 2}, {3, 1, 2}, {3, 3, 2}, {4, 2, 2}};
  return t;
}

}  // namespace

void reset_verify_cache() {
  span_cache().clear();
  char_cache().clear();
}

CheckResult check_dimensions(const VerifyOptions& o) {
  Stopwatch sw;
  Verdicts v;
  std::ostringstream dims;
  for (int n = 2; n <= std::min(o.max_n, 5); ++n) {
    long d = cached_span(n, 1, 1, o).dim();
    dims << (n > 2 ? " " : "") << "dim(" << n << ")=" << d;
    v.expect(Int(d) == ipow(Int(n + 1), n - 1),
             "dim V_" + std::to_string(n) + " = " + std::to_string(d));
  }
  return finish("dimensions", sw, v, dims.str());
}

CheckResult check_golden_tables(const VerifyOptions& o) {
  Stopwatch sw;
  Verdicts v;

  auto span_s_table = [&](int n) {
    GradedSpan& s = cached_span(n, 1, 1, o);
    GradedSymFunc g;
    g.n = n + 1;
    g.basis = Basis::s;
    for (int k = 0; k < static_cast<int>(s.pieces.size()); ++k)
      g.pieces.push_back(frobenius(cached_degree_char(n, 1, 1, k, GroupSide::Snp1, o)));
    return g;
  };
  auto span_res_h_table = [&](int n, int ell, int m) {
    GradedSpan& s = cached_span(n, ell, m, o);
    GradedSymFunc g;
    g.n = n;
    g.basis = Basis::h;
    for (int k = 0; k < static_cast<int>(s.pieces.size()); ++k)
      g.pieces.push_back(
          convert(frobenius(cached_degree_char(n, ell, m, k, GroupSide::Sn, o)), Basis::h));
    return g;
  };

  GradedSymFunc v2 = gsf(3, Basis::s,
                         {sf(3, Basis::s, {{{3}, 1}}), sf(3, Basis::s, {{{2, 1}, 1}})});
  v.expect(span_s_table(2) == v2, "graded table for n=2");
  v.expect(span_s_table(3) == expected_v3_s(), "graded table for n=3");
  v.expect(span_s_table(4) == expected_v4_s(), "graded table for n=4");
  v.expect(span_res_h_table(3, 1, 1) == expected_res_v3_h(), "restricted table for n=3");
  v.expect(span_res_h_table(3, 2, 2) == expected_res_v3_22_h(),
           "restricted table for (3,2,2)");

  SymFunc park3 = sf(3, Basis::h, {{{3}, 1}, {{2, 1}, 3}, {{1, 1, 1}, 1}});
  v.expect(convert(frobenius(park_character_direct(3)), Basis::h) == park3,
           "parking character for n=3");
  v.expect(park_grfrob(3, 1, 1).total() == park3, "path-sum total for n=3");
  return finish("golden-tables", sw, v);
}

CheckResult check_degree_modules(const VerifyOptions& o) {
  Stopwatch sw;
  Verdicts v;
  for (int n = 1; n <= std::min(o.max_n, 5); ++n) {
    GradedSpan& s = cached_span(n, 1, 1, o);
    auto sums = dyck_sum_characters(n, 1, 1);
    v.expect(s.pieces.size() == sums.size(),
             "degree count for n=" + std::to_string(n));
    for (int k = 0; k < static_cast<int>(s.pieces.size()); ++k) {
      ClassFunction res =
          restrict_character(cached_degree_char(n, 1, 1, k, GroupSide::Snp1, o), n);
      v.expect(res == sums[k],
               "coset sum at n=" + std::to_string(n) + " k=" + std::to_string(k));
    }
  }
  return finish("degree-modules", sw, v);
}

CheckResult check_unit_extremes(const VerifyOptions& o) {
  Stopwatch sw;
  Verdicts v;
  for (int n = 2; n <= std::min(o.max_n, 5); ++n) {
    auto chi = [&](int k) { return cached_degree_char(n, 1, 1, k, GroupSide::Snp1, o); };
    v.expect(chi(0) == trivial_character(n + 1), "degree 0 at n=" + std::to_string(n));
    v.expect(chi(1) == reflection_character(n + 1), "degree 1 at n=" + std::to_string(n));
    ClassFunction refl = chi(1);
    for (int k = 0; k < n; ++k)
      v.expect(chi(k) == sym_power(refl, k),
               "symmetric power at n=" + std::to_string(n) + " k=" + std::to_string(k));
    v.expect(!(chi(n) == sym_power(refl, n)),
             "symmetric power equality should break at k=n=" + std::to_string(n));
    int top = n * (n - 1) / 2;
    v.expect(chi(top) == lie_character(n) * sign_character(n + 1),
             "top degree at n=" + std::to_string(n));
  }
  return finish("unit-extremes", sw, v);
}

CheckResult check_general_lm(const VerifyOptions& o) {
  Stopwatch sw;
  Verdicts v;
  for (auto& [n, ell, m] : lm_tuples()) {
    std::string tag = tuple_tag(n, ell, m);
    GradedSpan& s = cached_span(n, ell, m, o);
    v.expect(Int(s.dim()) == Int(ell) * ipow(Int(m * n + ell), n - 1), "dimension " + tag);
    auto sums = dyck_sum_characters(n, ell, m);
    v.expect(s.pieces.size() == sums.size(), "degree count " + tag);
    for (int k = 0; k < static_cast<int>(s.pieces.size()); ++k)
      v.expect(cached_degree_char(n, ell, m, k, GroupSide::Sn, o) == sums[k],
               "coset sum " + tag + " k=" + std::to_string(k));
    if (ell == m) {
      ClassFunction refl = cached_degree_char(n, ell, m, 1, GroupSide::Snp1, o);
      v.expect(refl == reflection_character(n + 1), "degree 1 " + tag);
      for (int k = 0; k < n; ++k)
        v.expect(cached_degree_char(n, ell, m, k, GroupSide::Snp1, o) == sym_power(refl, k),
                 "symmetric power " + tag + " k=" + std::to_string(k));
      int top = static_cast<int>(s.pieces.size()) - 1;
      ClassFunction expected = lie_character(n);
      if (ell % 2 == 1) expected = expected * sign_character(n + 1);
      v.expect(cached_degree_char(n, ell, m, top, GroupSide::Snp1, o) == expected,
               "top degree " + tag);
    }
  }
  return finish("general-lm", sw, v);
}

CheckResult check_triangular_family(const VerifyOptions& o) {
  Stopwatch sw;
  Verdicts v;
  long paths = 0;
  auto sweep = [&](int n, int ell, int m) {
    for (auto& d : enum_dyck_paths(n, ell, m)) {
      ++paths;
      auto [ok, lead] = check_triangularity(d);
      v.expect(ok && lead == exp_of(d.mu.parts),
               "leading term for mu=" + d.mu.str() + " at " + tuple_tag(n, ell, m));
    }
  };
  for (int n = 1; n <= o.tri_max_n; ++n) sweep(n, 1, 1);
  for (auto& [n, ell, m] : lm_tuples()) sweep(n, ell, m);
  sweep(4, 3, 2);

  for (int n = 1; n <= std::min(o.max_n, 5); ++n)
    v.expect(phi_is_isomorphism(cached_span(n, 1, 1, o)),
             "projection rank " + tuple_tag(n, 1, 1));
  for (auto& [n, ell, m] : lm_tuples())
    v.expect(phi_is_isomorphism(cached_span(n, ell, m, o)),
             "projection rank " + tuple_tag(n, ell, m));
  return finish("triangularity", sw, v, std::to_string(paths) + " paths");
}

CheckResult check_initial_coefficients(const VerifyOptions& o) {
  Stopwatch sw;
  Verdicts v;
  for (int n = 1; n <= 5; ++n)
    v.expect(initial_coefficients_check(Multigraph::complete(n + 1)),
             "head coefficients of K_" + std::to_string(n + 1));
  std::mt19937 rng(o.seed);
  for (int t = 0; t < 20; ++t) {
    Multigraph g = random_full_support(rng, 3, 6, 3);
    v.expect(initial_coefficients_check(g),
             "head coefficients of sample " + std::to_string(t));
  }

  auto coboundary_gap = [&](const Multigraph& g, int lambda, const std::string& tag) {
    int e = g.edge_total();
    auto c = coboundary_coefficients(g, lambda);
    Int total = 0;
    for (auto& ci : c) total += ci;
    v.expect(total == ipow(Int(lambda), g.v), "census size " + tag);
    v.expect(c.at(e) == lambda, "monochromatic count " + tag);
    for (int i = e - g.v + 2; i < e; ++i)
      v.expect(c.at(i) == 0, "gap at " + std::to_string(i) + " " + tag);
  };
  for (int lambda = 1; lambda <= 3; ++lambda) {
    for (int vv = 3; vv <= 5; ++vv)
      coboundary_gap(Multigraph::complete(vv), lambda,
                     "K_" + std::to_string(vv) + " colors=" + std::to_string(lambda));
    for (int t = 0; t < 5; ++t)
      coboundary_gap(random_full_support(rng, 3, 5, 3), lambda,
                     "sample " + std::to_string(t) + " colors=" + std::to_string(lambda));
  }
  return finish("initial-coefficients", sw, v);
}

CheckResult check_hilbert_tutte(const VerifyOptions& o) {
  Stopwatch sw;
  Verdicts v;
  auto compare = [&](int n, int ell, int m) {
    GradedSpan& s = cached_span(n, ell, m, o);
    auto from_span = s.hilbert();
    auto from_tutte = tutte_hilbert(Multigraph::complete_lm(n, ell, m));
    bool same = from_span.size() == from_tutte.size();
    for (size_t i = 0; same && i < from_span.size(); ++i)
      same = Int(from_span[i]) == from_tutte[i];
    v.expect(same, "series " + tuple_tag(n, ell, m));
  };
  for (int n = 2; n <= std::min(o.max_n, 5); ++n) compare(n, 1, 1);
  for (auto& [n, ell, m] : lm_tuples()) compare(n, ell, m);
  return finish("hilbert-tutte", sw, v);
}

CheckResult check_extension_verdicts(const VerifyOptions& o) {
  Stopwatch sw;
  Verdicts v;
  long long nodes = 0;

  FeasibilityResult r = extends_to(coset_character(7, Partition{3, 2, 2}), 8, o.node_budget);
  nodes += r.nodes_explored;
  v.expect(r.verdict == Verdict::Infeasible, "the (3,2,2) permutation character at N=8");

  for (int n = 1; n <= 6; ++n)
    for (auto& lam : enum_partitions(n)) {
      r = extends_to(coset_character(n, lam), n + 1, o.node_budget);
      nodes += r.nodes_explored;
      v.expect(r.feasible(), "permutation character " + lam.str() + " at N=" +
                                 std::to_string(n + 1));
    }

  auto md = m_basis_decomposition(park_character_direct(4));
  std::map<Partition, Int> expected{{Partition{1, 1, 1, 1}, 1},
                                    {Partition{2, 1, 1}, 6},
                                    {Partition{2, 2}, 2},
                                    {Partition{3, 1}, 4},
                                    {Partition{4}, 1}};
  v.expect(md == expected, "permutation-basis decomposition of the n=4 parking character");
  r = extends_as_coset_sum(md, 4, 5, o.node_budget);
  nodes += r.nodes_explored;
  v.expect(r.verdict == Verdict::Infeasible, "parking n=4 as a sum of permutation modules");

  for (int n = 1; n <= 7; ++n)
    for (auto& lam : enum_partitions(n)) {
      r = extends_to(irreducible_character(n, lam), n + 1, o.node_budget);
      nodes += r.nodes_explored;
      v.expect(r.verdict != Verdict::Inconclusive,
               "budget hit for irreducible " + lam.str());
      v.expect(r.feasible() == near_rectangle(lam),
               "irreducible " + lam.str() + " extendability");
    }
  return finish("extension-verdicts", sw, v, std::to_string(nodes) + " nodes");
}

CheckResult check_stretch_extension(const VerifyOptions& o) {
  Stopwatch sw;
  Verdicts v;
  ClassFunction park5 = park_character_direct(5);
  FeasibilityResult r10 = extends_to(park5, 10, o.node_budget);
  v.expect(r10.verdict == Verdict::Feasible,
           std::string("parking n=5 at N=10: ") +
               (r10.verdict == Verdict::Inconclusive ? "budget exhausted" : "infeasible"));
  FeasibilityResult r11 = extends_to(park5, 11, o.node_budget);
  v.expect(r11.verdict == Verdict::Infeasible,
           std::string("parking n=5 at N=11: ") +
               (r11.verdict == Verdict::Inconclusive ? "budget exhausted" : "feasible"));
  return finish("stretch-extension", sw, v,
                std::to_string(r10.nodes_explored + r11.nodes_explored) + " nodes");
}

CheckResult check_property_suites(const VerifyOptions& o) {
  Stopwatch sw;
  Verdicts v;

  for (int n = 1; n <= 7; ++n) {
    const auto& parts = enum_partitions(n);
    for (size_t a = 0; a < parts.size(); ++a)
      for (size_t b = a; b < parts.size(); ++b) {
        Rat ip = inner_product(irreducible_character(n, parts[a]),
                               irreducible_character(n, parts[b]));
        v.expect(ip == Rat(a == b ? 1 : 0),
                 "orthonormality " + parts[a].str() + " / " + parts[b].str());
      }
  }

  auto glue = [](const Partition& a, const Partition& b) {
    std::vector<int> parts;
    for (int p : a.parts) parts.push_back(p);
    for (int p : b.parts) parts.push_back(p);
    std::sort(parts.rbegin(), parts.rend());
    return Partition(parts);
  };
  std::vector<std::pair<Partition, Partition>> pairs = {
      {Partition{2, 1}, Partition{2}},
      {Partition{1, 1}, Partition{2, 2}},
      {Partition{3}, Partition{2, 1}}};
  for (auto& [a, b] : pairs) {
    ClassFunction lhs = induction_product(coset_character(a.size(), a),
                                          coset_character(b.size(), b));
    Partition c = glue(a, b);
    v.expect(lhs == coset_character(c.size(), c),
             "product of permutation characters " + a.str() + " * " + b.str());
  }
  ClassFunction pieri = induction_product(irreducible_character(2, Partition{1, 1}),
                                          irreducible_character(1, Partition{1}));
  v.expect(pieri == irreducible_character(3, Partition{2, 1}) +
                        irreducible_character(3, Partition{1, 1, 1}),
           "column product rule");
  for (int n = 1; n <= 5; ++n)
    for (auto& lam : enum_partitions(n)) {
      SymFunc h(n, Basis::h);
      h.add(lam.stripped(), 1);
      v.expect(convert(frobenius(coset_character(n, lam)), Basis::h) == h,
               "permutation character image " + lam.str());
    }

  auto run_stat = [&](int n, int ell, int m) {
    for (auto& d : enum_dyck_paths(n, ell, m)) {
      std::vector<int> lens;
      for (auto& r : vertical_runs(d)) lens.push_back(r.len);
      std::sort(lens.rbegin(), lens.rend());
      Partition from_runs(lens);
      int total = 0;
      for (int x : lens) total += x;
      v.expect(total == n && from_runs == path_stats(d).lambda &&
                   from_runs == mult_partition(d.mu),
               "run statistic at " + tuple_tag(n, ell, m) + " mu=" + d.mu.str());
    }
  };
  for (int n = 1; n <= 6; ++n) run_stat(n, 1, 1);
  for (auto& [n, ell, m] : lm_tuples()) run_stat(n, ell, m);

  for (int n = 1; n <= 6; ++n) {
    auto labeled = enum_labeled_paths(n);
    auto parks = enum_parking_functions(n);
    v.expect(Int(static_cast<long>(labeled.size())) == ipow(Int(n + 1), n - 1),
             "labeled path count n=" + std::to_string(n));
    v.expect(labeled.size() == parks.size(), "parking count n=" + std::to_string(n));
    std::set<ParkingFunction> seen;
    for (auto& lp : labeled) {
      ParkingFunction a = parking_from_labeled(lp);
      v.expect(is_parking_function(a), "image is a parking function");
      seen.insert(a);
    }
    v.expect(seen.size() == parks.size(), "images exhaust parking functions");
  }

  for (int n = 1; n <= 7; ++n)
    v.expect(restrict_character(lie_character(n), n) == regular_character(n),
             "cyclic induction restricts to the regular character, n=" + std::to_string(n));

  std::mt19937 rng(o.seed + 1);
  std::vector<Multigraph> graphs = {Multigraph::complete(3), Multigraph::complete(4)};
  {
    Multigraph k3m;
    k3m.v = 3;
    k3m.add_edge(1, 2, 2);
    k3m.add_edge(1, 3, 1);
    k3m.add_edge(2, 3, 1);
    graphs.push_back(k3m);
    Multigraph c4;
    c4.v = 4;
    c4.add_edge(1, 2);
    c4.add_edge(2, 3);
    c4.add_edge(3, 4);
    c4.add_edge(1, 4);
    graphs.push_back(c4);
  }
  for (int t = 0; t < 5; ++t) graphs.push_back(random_sparse(rng, 3, 5, 10));
  for (size_t i = 0; i < graphs.size(); ++i)
    v.expect(tutte(graphs[i]) == whitney_rank_poly(graphs[i]),
             "rank expansion oracle, graph " + std::to_string(i));

  return finish("property-suites", sw, v);
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"main",  "extremes", "triangularity",
                                                 "tutte", "bijection", "all"};
  return names;
}

std::vector<CheckResult> run_suite(const std::string& suite, const VerifyOptions& opts) {
  std::vector<CheckResult> out;
  auto add = [&](CheckResult r) { out.push_back(std::move(r)); };
  if (suite == "main") {
    add(check_dimensions(opts));
    add(check_golden_tables(opts));
    add(check_degree_modules(opts));
    add(check_general_lm(opts));
  } else if (suite == "extremes") {
    add(check_unit_extremes(opts));
    add(check_extension_verdicts(opts));
    if (opts.stretch) add(check_stretch_extension(opts));
  } else if (suite == "triangularity") {
    add(check_triangular_family(opts));
  } else if (suite == "tutte") {
    add(check_initial_coefficients(opts));
    add(check_hilbert_tutte(opts));
  } else if (suite == "bijection") {
    add(check_property_suites(opts));
  } else if (suite == "all") {
    add(check_dimensions(opts));
    add(check_golden_tables(opts));
    add(check_degree_modules(opts));
    add(check_unit_extremes(opts));
    add(check_general_lm(opts));
    add(check_triangular_family(opts));
    add(check_initial_coefficients(opts));
    add(check_hilbert_tutte(opts));
    add(check_extension_verdicts(opts));
    if (opts.stretch) add(check_stretch_extension(opts));
    add(check_property_suites(opts));
  } else {
    throw std::invalid_argument("unknown suite: " + suite);
  }
  return out;
}

}  // namespace parkspan
