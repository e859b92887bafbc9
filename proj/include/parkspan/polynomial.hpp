#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "parkspan/partition.hpp"

namespace parkspan {

// Monomial exponent vector packed into one machine word: byte v-1 holds the
// exponent of x_v, so up to 8 variables and per-variable exponent <= 255.
// Desk-scale degrees stay far below both limits.
using Exp = std::uint64_t;
constexpr int kMaxVars = 8;

// Raised by the int64 coefficient fast path; callers redo the work with
// arbitrary-precision integers.
struct ArithmeticOverflow : std::runtime_error {
  ArithmeticOverflow() : std::runtime_error("int64 coefficient overflow") {}
};

inline int exp_get(Exp e, int v) { return static_cast<int>((e >> (8 * (v - 1))) & 0xff); }

inline Exp exp_of(const std::vector<int>& exps) {
  if (exps.size() > kMaxVars) throw std::invalid_argument("too many variables");
  Exp e = 0;
  for (size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] < 0 || exps[i] > 255) throw std::invalid_argument("exponent out of range");
    e |= static_cast<Exp>(exps[i]) << (8 * i);
  }
  return e;
}

inline int total_degree(Exp e) {
  int d = 0;
  while (e) {
    d += static_cast<int>(e & 0xff);
    e >>= 8;
  }
  return d;
}

inline Exp exp_mul(Exp a, Exp b) {
  Exp s = a + b;
  // detect per-byte carries: (a + b) xor a xor b has a bit set past a byte
  // boundary iff some byte overflowed
  if (((a ^ b ^ s) & 0x0101010101010100ULL) != 0 || s < a)
    throw std::overflow_error("monomial exponent overflow");
  return s;
}

// w is a 1-based permutation of 1..nvars acting as x_v -> x_{w[v-1]}.
inline Exp exp_permute(Exp e, const std::vector<int>& w) {
  Exp r = 0;
  for (size_t v = 0; v < w.size(); ++v)
    r |= static_cast<Exp>((e >> (8 * v)) & 0xff) << (8 * (w[v] - 1));
  return r;
}

// Graded reverse lexicographic, total over distinct exponent vectors:
// +1 if a > b.  Higher total degree wins; at equal degree the monomial with
// the smaller exponent at the last differing variable is the larger one.
inline int grevlex_cmp(Exp a, Exp b, int nvars) {
  if (a == b) return 0;
  int da = total_degree(a), db = total_degree(b);
  if (da != db) return da > db ? 1 : -1;
  for (int v = nvars; v >= 1; --v) {
    int ea = exp_get(a, v), eb = exp_get(b, v);
    if (ea != eb) return ea < eb ? 1 : -1;
  }
  return 0;
}

// Exponents of x_1..x_nfirst sorted decreasingly (the "exponent partition").
inline Partition exponent_partition(Exp e, int nfirst) {
  std::vector<int> p(nfirst);
  for (int v = 1; v <= nfirst; ++v) p[v - 1] = exp_get(e, v);
  std::sort(p.rbegin(), p.rend());
  return Partition(std::move(p));
}

// ---------- coefficient traits ----------

template <class Z>
struct CoeffOps;

template <>
struct CoeffOps<long long> {
  static long long add(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r)) throw ArithmeticOverflow();
    return r;
  }
  static long long mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r)) throw ArithmeticOverflow();
    return r;
  }
  static long long neg(long long a) {
    if (a == std::numeric_limits<long long>::min()) throw ArithmeticOverflow();
    return -a;
  }
};

template <>
struct CoeffOps<Int> {
  static Int add(const Int& a, const Int& b) { return a + b; }
  static Int mul(const Int& a, const Int& b) { return a * b; }
  static Int neg(const Int& a) { return -a; }
};

// ---------- sparse polynomial ----------

// Terms sorted descending in grevlex; no zero coefficients.
template <class Z>
struct TPoly {
  int nvars = 0;
  std::vector<std::pair<Exp, Z>> terms;

  TPoly() = default;
  explicit TPoly(int nv) : nvars(nv) {
    if (nv < 1 || nv > kMaxVars) throw std::invalid_argument("bad variable count");
  }

  static TPoly constant(int nv, Z c) {
    TPoly p(nv);
    if (c != 0) p.terms.emplace_back(0, std::move(c));
    return p;
  }
  // x_i - x_j for 1-based labels i < j
  static TPoly edge(int nv, int i, int j) {
    if (!(1 <= i && i < j && j <= nv)) throw std::invalid_argument("edge(i,j): need 1 <= i < j <= nvars");
    TPoly p(nv);
    Exp xi = exp_of_var(i), xj = exp_of_var(j);
    if (grevlex_cmp(xi, xj, nv) > 0) {
      p.terms.emplace_back(xi, Z(1));
      p.terms.emplace_back(xj, Z(-1));
    } else {
      p.terms.emplace_back(xj, Z(-1));
      p.terms.emplace_back(xi, Z(1));
    }
    return p;
  }
  static Exp exp_of_var(int v) { return static_cast<Exp>(1) << (8 * (v - 1)); }

  bool zero() const { return terms.empty(); }
  int degree() const { return terms.empty() ? -1 : total_degree(terms.front().first); }
  bool homogeneous() const {
    if (terms.empty()) return true;
    int d = total_degree(terms.front().first);
    for (auto& [e, c] : terms)
      if (total_degree(e) != d) return false;
    return true;
  }

  void sort_combine() {
    std::sort(terms.begin(), terms.end(), [&](const auto& a, const auto& b) {
      return grevlex_cmp(a.first, b.first, nvars) > 0;
    });
    size_t w = 0;
    for (size_t r = 0; r < terms.size();) {
      Exp e = terms[r].first;
      Z c = terms[r].second;
      ++r;
      while (r < terms.size() && terms[r].first == e) {
        c = CoeffOps<Z>::add(c, terms[r].second);
        ++r;
      }
      if (c != 0) terms[w++] = {e, std::move(c)};
    }
    terms.resize(w);
  }

  // terms are kept sorted with no zero coefficients, so structural equality
  // is mathematical equality
  bool operator==(const TPoly& o) const {
    if (nvars != o.nvars || terms.size() != o.terms.size()) return false;
    for (size_t i = 0; i < terms.size(); ++i)
      if (terms[i].first != o.terms[i].first || terms[i].second != o.terms[i].second)
        return false;
    return true;
  }
  bool operator!=(const TPoly& o) const { return !(*this == o); }

  Z coefficient_of(Exp e) const {
    auto it = std::lower_bound(terms.begin(), terms.end(), e, [&](const auto& t, Exp key) {
      return grevlex_cmp(t.first, key, nvars) > 0;
    });
    if (it != terms.end() && it->first == e) return it->second;
    return Z(0);
  }

  TPoly operator+(const TPoly& o) const {
    TPoly r(nvars);
    r.terms.reserve(terms.size() + o.terms.size());
    size_t i = 0, j = 0;
    while (i < terms.size() || j < o.terms.size()) {
      if (j == o.terms.size() ||
          (i < terms.size() && grevlex_cmp(terms[i].first, o.terms[j].first, nvars) > 0)) {
        r.terms.push_back(terms[i++]);
      } else if (i == terms.size() ||
                 grevlex_cmp(o.terms[j].first, terms[i].first, nvars) > 0) {
        r.terms.push_back(o.terms[j++]);
      } else {
        Z c = CoeffOps<Z>::add(terms[i].second, o.terms[j].second);
        if (c != 0) r.terms.emplace_back(terms[i].first, std::move(c));
        ++i, ++j;
      }
    }
    return r;
  }

  TPoly operator-() const {
    TPoly r = *this;
    for (auto& [e, c] : r.terms) c = CoeffOps<Z>::neg(c);
    return r;
  }
  TPoly operator-(const TPoly& o) const { return *this + (-o); }

  TPoly operator*(const TPoly& o) const {
    TPoly r(nvars);
    if (terms.empty() || o.terms.empty()) return r;
    r.terms.reserve(terms.size() * o.terms.size());
    for (auto& [ea, ca] : terms)
      for (auto& [eb, cb] : o.terms)
        r.terms.emplace_back(exp_mul(ea, eb), CoeffOps<Z>::mul(ca, cb));
    r.sort_combine();
    return r;
  }

  TPoly permuted(const std::vector<int>& w) const {
    TPoly r(nvars);
    r.terms.reserve(terms.size());
    for (auto& [e, c] : terms) r.terms.emplace_back(exp_permute(e, w), c);
    r.sort_combine();
    return r;
  }

  // substitute x_v = 0
  TPoly with_var_zero(int v) const {
    TPoly r(nvars);
    for (auto& [e, c] : terms)
      if (exp_get(e, v) == 0) r.terms.emplace_back(e, c);
    return r;
  }

  std::string str() const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [e, c] : terms) {
      std::ostringstream cs;
      cs << c;
      std::string cstr = cs.str();
      bool negative = cstr[0] == '-';
      if (negative) cstr = cstr.substr(1);
      os << (first ? (negative ? "-" : "") : (negative ? " - " : " + "));
      bool unit = cstr == "1";
      bool constant = e == 0;
      if (!unit || constant) os << cstr;
      if (!constant) {
        for (int v = 1; v <= nvars; ++v) {
          int ex = exp_get(e, v);
          if (!ex) continue;
          os << "x" << v;
          if (ex > 1) os << '^' << ex;
        }
      }
      first = false;
    }
    return os.str();
  }
};

using Polynomial = TPoly<Int>;

// prod over stored edges (i<j, multiplicity g) of (x_i - x_j)^g.
template <class Z>
TPoly<Z> graph_weight_t(const std::vector<std::tuple<int, int, int>>& edges, int nvars) {
  TPoly<Z> acc = TPoly<Z>::constant(nvars, Z(1));
  for (auto& [i, j, g] : edges) {
    if (g < 0) throw std::invalid_argument("negative multiplicity");
    // (x_i - x_j)^g by the binomial theorem, then one sparse multiply
    if (g == 0) continue;
    TPoly<Z> pw(nvars);
    for (int t = g; t >= 0; --t) {
      Int b = binomial(g, t);
      if ((g - t) % 2) b = -b;
      std::vector<int> ev(nvars, 0);
      ev[i - 1] = t;
      ev[j - 1] = g - t;
      Z coeff;
      if constexpr (std::is_same_v<Z, Int>)
        coeff = b;
      else {
        if (!b.fits_slong_p()) throw ArithmeticOverflow();
        coeff = static_cast<Z>(b.get_si());
      }
      pw.terms.emplace_back(exp_of(ev), std::move(coeff));
    }
    pw.sort_combine();
    acc = acc * pw;
  }
  return acc;
}

Polynomial graph_weight(const std::vector<std::tuple<int, int, int>>& edges, int nvars);

}  // namespace parkspan
