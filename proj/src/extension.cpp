#include "parkspan/extension.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "parkspan/symfunc.hpp"

namespace parkspan {

RestrictionMatrix restriction_matrix(int N, int n) {
  if (n < 1 || n > N || N > kMaxBigGroup)
    throw GuardError("restriction_matrix: need 1 <= n <= N <= 11");
  RestrictionMatrix rm;
  rm.N = N;
  rm.n = n;
  rm.rows = enum_partitions(N);
  rm.cols = enum_partitions(n);
  rm.B.assign(rm.rows.size(), std::vector<long>(rm.cols.size(), 0));
  std::vector<ClassFunction> small_irr;
  small_irr.reserve(rm.cols.size());
  for (auto& mu : rm.cols) small_irr.push_back(irreducible_character(n, mu));
  for (size_t r = 0; r < rm.rows.size(); ++r) {
    ClassFunction res = restrict_character(irreducible_character(N, rm.rows[r]), n);
    for (size_t c = 0; c < rm.cols.size(); ++c) {
      Rat ip = inner_product(res, small_irr[c]);
      Int num = ip.get_num();
      if (ip.get_den() != 1 || num < 0)
        throw std::logic_error("restriction_matrix: non-integral multiplicity");
      rm.B[r][c] = to_long(num);
    }
  }
  return rm;
}

std::vector<long> irreducible_multiplicities(const ClassFunction& chi) {
  const auto parts = enum_partitions(chi.n);
  std::vector<long> m;
  m.reserve(parts.size());
  for (auto& mu : parts) {
    Rat ip = inner_product(chi, irreducible_character(chi.n, mu));
    if (ip.get_den() != 1 || ip.get_num() < 0)
      throw std::invalid_argument("irreducible_multiplicities: not a character");
    m.push_back(to_long(ip.get_num()));
  }
  return m;
}

namespace {

// Shared DFS over x in N^vars with sum_v x_v * row_v = target.
//   - variables visited in the given order (callers pre-sort by decreasing
//     dimension, ties by the partition order);
//   - upper bound floor(min residual/entry) over positive entries;
//   - a variable suffix that cannot touch a still-positive coordinate prunes.
// Exhaustive unless the node budget is hit, so Infeasible is a certificate.
FeasibilityResult solve_nonneg(const std::vector<Partition>& vars,
                               const std::vector<std::vector<long>>& rows,
                               std::vector<long> target, long long node_budget) {
  size_t V = vars.size(), M = target.empty() ? 0 : target.size();
  for (long t : target)
    if (t < 0) {
      FeasibilityResult res;
      res.verdict = Verdict::Infeasible;
      return res;
    }
  std::vector<std::vector<char>> covers(V + 1, std::vector<char>(M, 0));
  for (size_t i = V; i-- > 0;)
    for (size_t c = 0; c < M; ++c)
      covers[i][c] = covers[i + 1][c] || rows[i][c] > 0;

  FeasibilityResult res;
  std::vector<long> x(V, 0);
  bool out_of_budget = false;

  std::function<bool(size_t)> dfs = [&](size_t i) -> bool {
    bool done = std::all_of(target.begin(), target.end(), [](long t) { return t == 0; });
    if (done) {
      for (size_t v = 0; v < i; ++v)
        if (x[v] > 0) res.witness.emplace(vars[v], x[v]);
      return true;
    }
    if (i == V) return false;
    for (size_t c = 0; c < M; ++c)
      if (target[c] > 0 && !covers[i][c]) return false;
    long ub = -1;
    for (size_t c = 0; c < M; ++c)
      if (rows[i][c] > 0) {
        long b = target[c] / rows[i][c];
        if (ub < 0 || b < ub) ub = b;
      }
    if (ub < 0) ub = 0;  // row is all zero; only x_i = 0 makes sense
    for (long v = ub; v >= 0; --v) {
      if (++res.nodes_explored > node_budget) {
        out_of_budget = true;
        return false;
      }
      if (v != 0)
        for (size_t c = 0; c < M; ++c) target[c] -= v * rows[i][c];
      x[i] = v;
      bool ok = dfs(i + 1);
      if (v != 0)
        for (size_t c = 0; c < M; ++c) target[c] += v * rows[i][c];
      x[i] = 0;
      if (ok) return true;
      if (out_of_budget) return false;
    }
    return false;
  };

  bool found = dfs(0);
  res.verdict = found              ? Verdict::Feasible
                : out_of_budget    ? Verdict::Inconclusive
                                   : Verdict::Infeasible;
  if (!found) res.witness.clear();
  return res;
}

void sort_by_dim_desc(std::vector<Partition>& vars, std::vector<std::vector<long>>& rows,
                      const std::vector<long>& dims) {
  std::vector<size_t> order(vars.size());
  std::iota(order.begin(), order.end(), size_t{0});
  std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    if (dims[a] != dims[b]) return dims[a] > dims[b];
    int len = std::max(vars[a].length(), vars[b].length());
    return grevlex_less(vars[a].padded(len), vars[b].padded(len));
  });
  std::vector<Partition> v2;
  std::vector<std::vector<long>> r2;
  v2.reserve(vars.size());
  r2.reserve(rows.size());
  for (size_t i : order) {
    v2.push_back(vars[i]);
    r2.push_back(std::move(rows[i]));
  }
  vars = std::move(v2);
  rows = std::move(r2);
}

// verify sum x_v row_v == target exactly
void assert_witness(const FeasibilityResult& res, const std::vector<Partition>& vars,
                    const std::vector<std::vector<long>>& rows,
                    const std::vector<long>& target) {
  if (!res.feasible()) return;
  std::vector<long> acc(target.size(), 0);
  for (size_t v = 0; v < vars.size(); ++v) {
    auto it = res.witness.find(vars[v]);
    if (it == res.witness.end()) continue;
    for (size_t c = 0; c < target.size(); ++c) acc[c] += it->second * rows[v][c];
  }
  if (acc != target) throw std::logic_error("feasibility witness failed its check");
}

}  // namespace

FeasibilityResult extends_to(const ClassFunction& chi, int N, long long node_budget) {
  std::vector<long> target = irreducible_multiplicities(chi);
  RestrictionMatrix rm = restriction_matrix(N, chi.n);
  std::vector<long> dims(rm.rows.size(), 0);
  const auto& small_parts = enum_partitions(chi.n);
  std::vector<long> small_dims;
  small_dims.reserve(small_parts.size());
  for (auto& mu : small_parts)
    small_dims.push_back(to_long(irreducible_character(chi.n, mu).dim()));
  for (size_t r = 0; r < rm.rows.size(); ++r)
    for (size_t c = 0; c < rm.cols.size(); ++c) dims[r] += rm.B[r][c] * small_dims[c];
  std::vector<Partition> vars = rm.rows;
  std::vector<std::vector<long>> rows = rm.B;
  sort_by_dim_desc(vars, rows, dims);
  FeasibilityResult res = solve_nonneg(vars, rows, target, node_budget);
  assert_witness(res, vars, rows, target);
  return res;
}

std::map<Partition, Int> m_basis_decomposition(const ClassFunction& chi) {
  SymFunc f = convert(frobenius(chi), Basis::h);
  std::map<Partition, Int> out;
  for (auto& [lam, c] : f.coeffs) out.emplace(lam.stripped(), c);
  return out;
}

std::map<Partition, long> coset_restriction_step(const Partition& lam) {
  std::map<Partition, long> out;
  const auto& ps = lam.parts;
  for (size_t i = 0; i < ps.size(); ++i) {
    if (ps[i] <= 0) continue;
    std::vector<int> next = ps;
    next[i] -= 1;
    std::sort(next.rbegin(), next.rend());
    out[Partition{next}.stripped()] += 1;
  }
  return out;
}

std::map<Partition, long> coset_restriction(const Partition& lam, int n) {
  int N = lam.size();
  if (n > N) throw std::invalid_argument("coset_restriction: n exceeds |lam|");
  std::map<Partition, long> cur{{lam.stripped(), 1}};
  for (int level = N; level > n; --level) {
    std::map<Partition, long> next;
    for (auto& [p, mult] : cur)
      for (auto& [q, m2] : coset_restriction_step(p)) next[q] += mult * m2;
    cur = std::move(next);
  }
  return cur;
}

FeasibilityResult extends_as_coset_sum(const std::map<Partition, Int>& target_m, int n,
                                       int N, long long node_budget) {
  if (n < 1 || n > N || N > kMaxBigGroup)
    throw GuardError("extends_as_coset_sum: need 1 <= n <= N <= 11");
  const auto cols = enum_partitions(n);
  std::vector<long> target(cols.size(), 0);
  auto col_index = [&](const Partition& p) {
    auto it = std::find_if(cols.begin(), cols.end(),
                           [&](const Partition& q) { return q.stripped() == p; });
    if (it == cols.end())
      throw std::invalid_argument("coset target: " + p.str() + " is not a partition of n");
    return static_cast<size_t>(it - cols.begin());
  };
  for (auto& [p, c] : target_m) {
    if (p.size() != n) throw std::invalid_argument("coset target: wrong partition size");
    target[col_index(p.stripped())] = to_long(c);
  }
  std::vector<Partition> vars = enum_partitions(N);
  std::vector<std::vector<long>> rows(vars.size(), std::vector<long>(cols.size(), 0));
  std::vector<long> dims(vars.size(), 0);
  for (size_t v = 0; v < vars.size(); ++v) {
    auto res = coset_restriction(vars[v], n);
    for (auto& [p, mult] : res) {
      rows[v][col_index(p)] = mult;
      Int d = factorial(n);
      for (int part : p.parts) d /= factorial(part);
      dims[v] += mult * to_long(d);
    }
  }
  sort_by_dim_desc(vars, rows, dims);
  FeasibilityResult res = solve_nonneg(vars, rows, target, node_budget);
  assert_witness(res, vars, rows, target);
  return res;
}

bool near_rectangle(const Partition& lam) {
  int n = lam.size();
  Partition key = lam.stripped();
  for (int a = 1; a <= n + 1; ++a) {
    if ((n + 1) % a != 0) continue;
    int b = (n + 1) / a;
    std::vector<int> shape;
    for (int r = 0; r < a - 1; ++r) shape.push_back(b);
    if (b - 1 > 0) shape.push_back(b - 1);
    if (Partition{shape}.stripped() == key) return true;
  }
  return false;
}

}  // namespace parkspan
