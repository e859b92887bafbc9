#include "parkspan/span.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <thread>
#include <unordered_map>

#include "parkspan/multigraph.hpp"

namespace parkspan {

namespace {

// ---------- coefficient helpers for the echelon engine ----------

using I128 = __int128;

inline I128 gcd128(I128 a, I128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b) {
    I128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

constexpr I128 kI64Min = std::numeric_limits<long long>::min();
constexpr I128 kI64Max = std::numeric_limits<long long>::max();

template <class C>
using RowT = std::vector<std::pair<Exp, C>>;

// q := (lead(r) * q - cq * r) / content.  r's pivot cancels out of q exactly
// (cq is q's coefficient there).  Rows stay primitive with positive leading
// coefficient, which keeps entries small in practice.
template <class C>
void eliminate(RowT<C>& q, const RowT<C>& r, const C& cq, int nvars) {
  const C& lr = r[0].second;
  if constexpr (std::is_same_v<C, long long>) {
    std::vector<std::pair<Exp, I128>> acc;
    acc.reserve(q.size() + r.size());
    size_t i = 0, j = 0;
    I128 g = 0;
    auto push = [&](Exp e, I128 v) {
      if (v == 0) return;
      acc.emplace_back(e, v);
      g = g ? gcd128(g, v) : (v < 0 ? -v : v);
    };
    while (i < q.size() || j < r.size()) {
      int cmp;
      if (i == q.size())
        cmp = -1;
      else if (j == r.size())
        cmp = 1;
      else
        cmp = grevlex_cmp(q[i].first, r[j].first, nvars);
      if (cmp > 0) {
        push(q[i].first, static_cast<I128>(lr) * q[i].second);
        ++i;
      } else if (cmp < 0) {
        push(r[j].first, -static_cast<I128>(cq) * r[j].second);
        ++j;
      } else {
        push(q[i].first,
             static_cast<I128>(lr) * q[i].second - static_cast<I128>(cq) * r[j].second);
        ++i, ++j;
      }
    }
    q.clear();
    q.reserve(acc.size());
    for (auto& [e, v] : acc) {
      I128 d = v / g;
      if (d < kI64Min || d > kI64Max) throw ArithmeticOverflow();
      q.emplace_back(e, static_cast<long long>(d));
    }
  } else {
    RowT<C> acc;
    acc.reserve(q.size() + r.size());
    size_t i = 0, j = 0;
    Int g = 0;
    auto push = [&](Exp e, Int v) {
      if (v == 0) return;
      if (g == 0)
        g = abs(v);
      else
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
      acc.emplace_back(e, std::move(v));
    };
    while (i < q.size() || j < r.size()) {
      int cmp;
      if (i == q.size())
        cmp = -1;
      else if (j == r.size())
        cmp = 1;
      else
        cmp = grevlex_cmp(q[i].first, r[j].first, nvars);
      if (cmp > 0) {
        push(q[i].first, lr * q[i].second);
        ++i;
      } else if (cmp < 0) {
        push(r[j].first, -cq * r[j].second);
        ++j;
      } else {
        push(q[i].first, lr * q[i].second - cq * r[j].second);
        ++i, ++j;
      }
    }
    q.clear();
    q.reserve(acc.size());
    for (auto& [e, v] : acc) q.emplace_back(e, v / g);
  }
}

template <class C>
void make_primitive(RowT<C>& q) {
  if (q.empty()) return;
  if constexpr (std::is_same_v<C, long long>) {
    I128 g = 0;
    for (auto& [e, c] : q) g = g ? gcd128(g, c) : (c < 0 ? I128(-c) : I128(c));
    long long gg = static_cast<long long>(g);
    bool flip = q[0].second < 0;
    for (auto& [e, c] : q) {
      c /= gg;
      if (flip) c = -c;
    }
  } else {
    Int g = 0;
    for (auto& [e, c] : q)
      if (g == 0)
        g = abs(c);
      else
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    bool flip = q[0].second < 0;
    for (auto& [e, c] : q) {
      c /= g;
      if (flip) c = -c;
    }
  }
}

template <class C>
C coeff_at(const RowT<C>& row, Exp e, int nvars) {
  auto it = std::lower_bound(row.begin(), row.end(), e, [&](const auto& t, Exp key) {
    return grevlex_cmp(t.first, key, nvars) > 0;
  });
  if (it != row.end() && it->first == e) return it->second;
  return C(0);
}

// Row-echelon accumulator: pivots unique, rows primitive.
template <class C>
struct Ech {
  int nvars;
  std::vector<RowT<C>> rows;
  std::unordered_map<Exp, size_t> by_pivot;

  explicit Ech(int nv) : nvars(nv) {}

  // Reduce q against the rows; if independent, install it as a new row.
  // Returns true if the rank grew.
  bool insert(RowT<C>&& q) {
    while (!q.empty()) {
      auto it = by_pivot.find(q[0].first);
      if (it == by_pivot.end()) {
        make_primitive(q);
        by_pivot.emplace(q[0].first, rows.size());
        rows.push_back(std::move(q));
        return true;
      }
      eliminate<C>(q, rows[it->second], q[0].second, nvars);
    }
    return false;
  }

  bool reduces_to_zero(RowT<C>&& q) const {
    while (!q.empty()) {
      auto it = by_pivot.find(q[0].first);
      if (it == by_pivot.end()) return false;
      eliminate<C>(q, rows[it->second], q[0].second, nvars);
    }
    return true;
  }

  // Back-eliminate every pivot from every other row (ascending pivot order).
  void to_rref() {
    std::vector<size_t> order(rows.size());
    std::iota(order.begin(), order.end(), size_t{0});
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
      return grevlex_cmp(rows[a][0].first, rows[b][0].first, nvars) > 0;
    });
    std::vector<RowT<C>> sorted;
    sorted.reserve(rows.size());
    for (size_t idx : order) sorted.push_back(std::move(rows[idx]));
    rows = std::move(sorted);
    by_pivot.clear();
    for (size_t i = 0; i < rows.size(); ++i) by_pivot.emplace(rows[i][0].first, i);
    for (size_t i = rows.size(); i-- > 0;) {
      for (size_t j = 0; j < i; ++j) {
        C c = coeff_at(rows[j], rows[i][0].first, nvars);
        if (c != 0) eliminate<C>(rows[j], rows[i], c, nvars);
      }
    }
  }
};

template <class C>
RowT<C> poly_to_row(const TPoly<C>& p) {
  return p.terms;
}

RowT<Int> widen_row(const RowT<long long>& r) {
  RowT<Int> out;
  out.reserve(r.size());
  for (auto& [e, c] : r) out.emplace_back(e, Int(static_cast<long>(c)));
  return out;
}

}  // namespace

// ---------- DegreePiece / GradedSpan ----------

Polynomial DegreePiece::row_poly(size_t r, int nvars) const {
  Polynomial p(nvars);
  if (wide) {
    p.terms = rows_z[r];
  } else {
    p.terms.reserve(rows_i[r].size());
    for (auto& [e, c] : rows_i[r]) p.terms.emplace_back(e, Int(static_cast<long>(c)));
  }
  return p;
}

long GradedSpan::dim() const {
  long d = 0;
  for (auto& p : pieces) d += p.rank();
  return d;
}

std::vector<long> GradedSpan::hilbert() const {
  std::vector<long> h;
  for (auto& p : pieces) h.push_back(p.rank());
  while (!h.empty() && h.back() == 0) h.pop_back();
  return h;
}

// ---------- slim subgraph enumeration ----------

std::vector<std::tuple<int, int, int>> edge_slots(int n, int ell, int m) {
  auto g = Multigraph::complete_lm(n, ell, m);
  std::vector<std::tuple<int, int, int>> slots;
  for (auto& [k, cap] : g.em) slots.push_back({k.first, k.second, cap});
  return slots;
}

std::vector<std::vector<int>> enum_slim(int n, int ell, int m, const SpanOptions& opts) {
  if (ell == 1 && m == 1 && n > opts.max_n_unit)
    throw GuardError("enum_slim: n exceeds the (1,1) guard");
  auto slots = edge_slots(n, ell, m);
  long prod = 1;
  for (auto& [i, j, cap] : slots) {
    prod *= cap + 1;
    if (prod > opts.max_products)
      throw GuardError("enum_slim: capacity product exceeds guard");
  }
  int v = n + 1;
  std::vector<std::vector<int>> out;
  std::vector<int> g(slots.size(), 0);
  std::function<void(size_t)> rec = [&](size_t s) {
    if (s == slots.size()) {
      // complement support: slots where some copy remains
      std::vector<int> parent(v + 1);
      std::iota(parent.begin(), parent.end(), 0);
      std::function<int(int)> find = [&](int x) {
        return parent[x] == x ? x : parent[x] = find(parent[x]);
      };
      int comps = v;
      for (size_t t = 0; t < slots.size(); ++t) {
        if (g[t] >= std::get<2>(slots[t])) continue;
        int a = find(std::get<0>(slots[t])), b = find(std::get<1>(slots[t]));
        if (a != b) {
          parent[a] = b;
          --comps;
        }
      }
      if (comps == 1) out.push_back(g);
      return;
    }
    for (int c = 0; c <= std::get<2>(slots[s]); ++c) {
      g[s] = c;
      rec(s + 1);
    }
    g[s] = 0;
  };
  rec(0);
  return out;
}

// ---------- build ----------

namespace {

template <class C>
bool build_piece(const std::vector<std::tuple<int, int, int>>& slots,
                 const std::vector<const std::vector<int>*>& vecs, int nvars,
                 DegreePiece& piece) {
  Ech<C> ech(nvars);
  try {
    for (const auto* gv : vecs) {
      std::vector<std::tuple<int, int, int>> edges;
      for (size_t s = 0; s < slots.size(); ++s)
        if ((*gv)[s] > 0)
          edges.push_back({std::get<0>(slots[s]), std::get<1>(slots[s]), (*gv)[s]});
      TPoly<C> p = graph_weight_t<C>(edges, nvars);
      ech.insert(poly_to_row(p));
    }
  } catch (const ArithmeticOverflow&) {
    return false;
  }
  if constexpr (std::is_same_v<C, long long>) {
    piece.rows_i = std::move(ech.rows);
    piece.wide = false;
  } else {
    piece.rows_z = std::move(ech.rows);
    piece.wide = true;
  }
  return true;
}

}  // namespace

GradedSpan build_span(int n, int ell, int m, const SpanOptions& opts) {
  GradedSpan span;
  span.n = n;
  span.ell = ell;
  span.m = m;
  span.nvars = n + 1;
  if (span.nvars > kMaxVars) throw GuardError("build_span: too many vertices");

  auto slots = edge_slots(n, ell, m);
  auto slim = enum_slim(n, ell, m, opts);

  int maxdeg = 0;
  for (auto& g : slim) maxdeg = std::max(maxdeg, std::accumulate(g.begin(), g.end(), 0));
  span.pieces.resize(maxdeg + 1);
  for (int k = 0; k <= maxdeg; ++k) span.pieces[k].degree = k;

  std::vector<std::vector<const std::vector<int>*>> by_degree(maxdeg + 1);
  for (auto& g : slim) by_degree[std::accumulate(g.begin(), g.end(), 0)].push_back(&g);
  if (opts.reverse_insertion)
    for (auto& bucket : by_degree) std::reverse(bucket.begin(), bucket.end());

  auto work = [&](int k) {
    if (!build_piece<long long>(slots, by_degree[k], span.nvars, span.pieces[k]))
      if (!build_piece<Int>(slots, by_degree[k], span.nvars, span.pieces[k]))
        throw std::logic_error("exact rebuild overflowed");  // unreachable
  };

  int workers = std::max(1, opts.threads);
  if (workers == 1) {
    for (int k = 0; k <= maxdeg; ++k) work(k);
  } else {
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    for (int t = 0; t < std::min(workers, maxdeg + 1); ++t)
      pool.emplace_back([&] {
        for (int k; (k = next.fetch_add(1)) <= maxdeg;) work(k);
      });
    for (auto& th : pool) th.join();
  }
  return span;
}

// ---------- reduced form + characters ----------

namespace {

void finalize_piece(DegreePiece& piece, int nvars) {
  if (piece.rref) return;
  if (!piece.wide) {
    Ech<long long> ech(nvars);
    ech.rows = piece.rows_i;  // copy: rollback on overflow
    for (size_t i = 0; i < ech.rows.size(); ++i) ech.by_pivot.emplace(ech.rows[i][0].first, i);
    try {
      ech.to_rref();
      piece.rows_i = std::move(ech.rows);
      piece.rref = true;
      return;
    } catch (const ArithmeticOverflow&) {
      // promote the untouched original rows and redo below
      Ech<Int> wide(nvars);
      for (auto& r : piece.rows_i) wide.rows.push_back(widen_row(r));
      for (size_t i = 0; i < wide.rows.size(); ++i) wide.by_pivot.emplace(wide.rows[i][0].first, i);
      wide.to_rref();
      piece.rows_z = std::move(wide.rows);
      piece.rows_i.clear();
      piece.wide = true;
      piece.rref = true;
      return;
    }
  }
  Ech<Int> ech(nvars);
  ech.rows = piece.rows_z;
  for (size_t i = 0; i < ech.rows.size(); ++i) ech.by_pivot.emplace(ech.rows[i][0].first, i);
  ech.to_rref();
  piece.rows_z = std::move(ech.rows);
  piece.rref = true;
}

std::vector<int> invert_perm(const std::vector<int>& w) {
  std::vector<int> inv(w.size());
  for (size_t v = 0; v < w.size(); ++v) inv[w[v] - 1] = static_cast<int>(v + 1);
  return inv;
}

// permuted row, re-sorted, with Int coefficients
RowT<Int> permute_row(const DegreePiece& piece, size_t r, const std::vector<int>& w,
                      int nvars) {
  RowT<Int> out;
  if (piece.wide) {
    out.reserve(piece.rows_z[r].size());
    for (auto& [e, c] : piece.rows_z[r]) out.emplace_back(exp_permute(e, w), c);
  } else {
    out.reserve(piece.rows_i[r].size());
    for (auto& [e, c] : piece.rows_i[r])
      out.emplace_back(exp_permute(e, w), Int(static_cast<long>(c)));
  }
  std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
    return grevlex_cmp(a.first, b.first, nvars) > 0;
  });
  return out;
}

Rat row_coeff_at(const DegreePiece& piece, size_t r, Exp e, int nvars) {
  if (piece.wide) return Rat(coeff_at(piece.rows_z[r], e, nvars));
  return Rat(static_cast<long>(coeff_at(piece.rows_i[r], e, nvars)));
}

Rat row_lead(const DegreePiece& piece, size_t r) {
  if (piece.wide) return Rat(piece.rows_z[r][0].second);
  return Rat(static_cast<long>(piece.rows_i[r][0].second));
}

}  // namespace

std::vector<int> class_rep_perm(const Partition& tau) {
  std::vector<int> w;
  int start = 1;
  for (int p : tau.parts) {
    if (p <= 0) continue;
    for (int o = 0; o < p; ++o) w.push_back(start + (o + 1) % p);
    start += p;
  }
  return w;
}

ClassFunction degree_character(GradedSpan& s, int k, GroupSide side,
                               const SpanOptions& opts) {
  int N = side == GroupSide::Sn ? s.n : s.n + 1;
  if (side == GroupSide::Snp1 && s.ell != s.m)
    throw std::invalid_argument("degree_character: the full group needs l == m");
  ClassFunction out(N);
  if (k < 0 || k >= static_cast<int>(s.pieces.size())) return out;
  DegreePiece& piece = s.pieces[k];
  if (piece.rank() == 0) return out;
  finalize_piece(piece, s.nvars);

  // membership oracle for the invariance spot-check
  Ech<Int> member(s.nvars);
  for (size_t r = 0; r < static_cast<size_t>(piece.rank()); ++r) {
    RowT<Int> row = piece.wide ? piece.rows_z[r] : widen_row(piece.rows_i[r]);
    member.by_pivot.emplace(row[0].first, member.rows.size());
    member.rows.push_back(std::move(row));
  }

  size_t rank = static_cast<size_t>(piece.rank());
  std::vector<size_t> check_rows;
  if (opts.full_invariance_check || rank <= 64) {
    check_rows.resize(rank);
    std::iota(check_rows.begin(), check_rows.end(), size_t{0});
  } else {
    check_rows = {0, rank / 2, rank - 1};
  }

  const auto& ci = ClassIndex::get(N);
  for (size_t t = 0; t < ci.types.size(); ++t) {
    std::vector<int> w = class_rep_perm(ci.types[t]);
    w.resize(s.nvars);
    for (int v = static_cast<int>(ci.types[t].size()); v < s.nvars; ++v) w[v] = v + 1;
    std::vector<int> winv = invert_perm(w);

    Rat trace = 0;
    for (size_t r = 0; r < rank; ++r) {
      Exp preimage = exp_permute(piece.pivot(r), winv);
      trace += row_coeff_at(piece, r, preimage, s.nvars) / row_lead(piece, r);
    }
    trace.canonicalize();
    out.v[t] = trace;

    for (size_t r : check_rows)
      if (!member.reduces_to_zero(permute_row(piece, r, w, s.nvars)))
        throw std::runtime_error("degree_character: piece is not invariant under the group");
  }
  return out;
}

// ---------- box labels, path polynomials, phi ----------

std::vector<std::vector<std::pair<int, int>>> box_labeling(int n, int ell, int m) {
  if (n < 1 || ell < 1 || m < 1) throw std::invalid_argument("box_labeling: need n, l, m >= 1");
  std::vector<std::vector<std::pair<int, int>>> rows(n);
  for (int i = 1; i <= n; ++i) {
    auto& row = rows[i - 1];
    for (int j = n + 1; j > i; --j) {
      int full = (j == n + 1) ? ell : m;
      int copies = (j == i + 1) ? full - 1 : full;
      for (int c = 0; c < copies; ++c) row.push_back({i, j});
    }
  }
  return rows;
}

std::vector<std::tuple<int, int, int>> path_graph(const DyckPath& d) {
  auto rows = box_labeling(d.n, d.ell, d.m);
  std::map<std::pair<int, int>, int> mult;
  for (int i = 0; i < d.n; ++i) {
    int take = d.mu.parts.at(i);
    if (take > static_cast<int>(rows[i].size()))
      throw std::invalid_argument("path_graph: area row exceeds box row");
    for (int b = 0; b < take; ++b) ++mult[rows[i][b]];
  }
  std::vector<std::tuple<int, int, int>> edges;
  for (auto& [e, c] : mult) edges.push_back({e.first, e.second, c});
  return edges;
}

Polynomial path_poly(const DyckPath& d) { return graph_weight(path_graph(d), d.n + 1); }

Polynomial phi(const Polynomial& p, int n, int ell, int m) {
  Partition stair = staircase(n, ell, m);
  Polynomial out(p.nvars);
  for (auto& [e, c] : p.terms) {
    if (exp_get(e, n + 1) != 0) continue;
    if (!young_contains(stair, exponent_partition(e, n))) continue;
    out.terms.emplace_back(e, c);
  }
  return out;
}

std::pair<bool, Exp> check_triangularity(const DyckPath& d) {
  Polynomial q = phi(path_poly(d), d.n, d.ell, d.m);
  if (q.terms.empty()) return {false, 0};
  Exp lead = q.terms[0].first;
  Exp target = exp_of(d.mu.parts);
  if (lead != target || q.terms[0].second != 1) return {false, lead};
  for (size_t t = 1; t < q.terms.size(); ++t) {
    Partition part = exponent_partition(q.terms[t].first, d.n);
    if (!grevlex_less(part, d.mu)) return {false, lead};
  }
  return {true, lead};
}

bool phi_is_isomorphism(const GradedSpan& s) {
  Ech<Int> image(s.nvars);
  long rank = 0;
  for (auto& piece : s.pieces) {
    for (size_t r = 0; r < static_cast<size_t>(piece.rank()); ++r) {
      Polynomial img = phi(piece.row_poly(r, s.nvars), s.n, s.ell, s.m);
      if (image.insert(std::move(img.terms))) ++rank;
    }
  }
  Int monomials = sub_staircase_monomial_count(s.n, s.ell, s.m);
  return Int(rank) == monomials && rank == s.dim();
}

std::vector<Polynomial> external_activity_basis(int n, const SpanOptions& opts) {
  if (n > opts.max_n_unit) throw GuardError("external_activity_basis: n exceeds guard");
  Multigraph g = Multigraph::complete(n + 1);
  auto cps = g.copies();
  std::vector<Polynomial> out;
  for (auto& tree : spanning_trees(g)) {
    auto ext = external_activity(g, tree);
    std::vector<bool> removed(cps.size(), false);
    for (int ci : tree) removed[ci] = true;
    for (int ci : ext) removed[ci] = true;
    std::vector<std::tuple<int, int, int>> edges;
    for (size_t ci = 0; ci < cps.size(); ++ci)
      if (!removed[ci]) edges.push_back({cps[ci].first, cps[ci].second, 1});
    out.push_back(graph_weight(edges, n + 1));
  }
  return out;
}

long rank_of(const std::vector<Polynomial>& polys, int nvars) {
  Ech<Int> ech(nvars);
  long rank = 0;
  for (auto& p : polys) {
    RowT<Int> row = p.terms;
    if (ech.insert(std::move(row))) ++rank;
  }
  return rank;
}

}  // namespace parkspan
