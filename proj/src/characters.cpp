#include "parkspan/characters.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

namespace parkspan {

Int z_of(const Partition& tau) {
  std::map<int, int> mult;
  for (int p : tau.parts)
    if (p > 0) ++mult[p];
  Int z = 1;
  for (auto& [len, m] : mult) z *= ipow(len, m) * factorial(m);
  return z;
}

Int class_size(int n, const Partition& tau) { return factorial(n) / z_of(tau); }

int ClassIndex::index_of(const Partition& tau) const {
  Partition s = tau.stripped();
  for (size_t i = 0; i < types.size(); ++i)
    if (types[i] == s) return static_cast<int>(i);
  throw std::invalid_argument("not a cycle type of S_" + std::to_string(n) + ": " + tau.str());
}

const ClassIndex& ClassIndex::get(int n) {
  static std::map<int, ClassIndex> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  ClassIndex ci;
  ci.n = n;
  ci.types = enum_partitions(n);
  for (auto& t : ci.types) {
    ci.zs.push_back(z_of(t));
    ci.sizes.push_back(class_size(n, t));
  }
  return cache.emplace(n, std::move(ci)).first->second;
}

ClassFunction::ClassFunction(int n_) : n(n_), v(ClassIndex::get(n_).types.size(), Rat(0)) {}

const Rat& ClassFunction::at(const Partition& tau) const {
  return v[ClassIndex::get(n).index_of(tau)];
}
Rat& ClassFunction::at(const Partition& tau) {
  return v[ClassIndex::get(n).index_of(tau)];
}

bool ClassFunction::integral() const {
  return std::all_of(v.begin(), v.end(), [](const Rat& q) { return is_integer(q); });
}

ClassFunction& ClassFunction::operator+=(const ClassFunction& o) {
  if (n != o.n) throw std::invalid_argument("class function degree mismatch");
  for (size_t i = 0; i < v.size(); ++i) v[i] += o.v[i];
  return *this;
}
ClassFunction& ClassFunction::operator-=(const ClassFunction& o) {
  if (n != o.n) throw std::invalid_argument("class function degree mismatch");
  for (size_t i = 0; i < v.size(); ++i) v[i] -= o.v[i];
  return *this;
}
ClassFunction ClassFunction::operator*(const ClassFunction& o) const {
  if (n != o.n) throw std::invalid_argument("class function degree mismatch");
  ClassFunction r(n);
  for (size_t i = 0; i < v.size(); ++i) r.v[i] = v[i] * o.v[i];
  return r;
}
ClassFunction& ClassFunction::scale(const Rat& c) {
  for (auto& x : v) x *= c;
  return *this;
}

Rat inner_product(const ClassFunction& a, const ClassFunction& b) {
  if (a.n != b.n) throw std::invalid_argument("inner product: degree mismatch");
  const auto& ci = ClassIndex::get(a.n);
  Rat acc = 0;
  for (size_t i = 0; i < ci.types.size(); ++i) acc += Rat(ci.sizes[i]) * a.v[i] * b.v[i];
  acc /= Rat(factorial(a.n));
  acc.canonicalize();
  return acc;
}

// ---------- Murnaghan-Nakayama ----------

namespace {

// Value of chi^lambda at cycle type tau, both as sorted vectors.  Border
// strips are removed via the beta-number model: removing a strip of length t
// replaces a beta number b by b-t; the sign is (-1)^{#betas in (b-t, b)}.
long long mn_value(std::vector<int> lam, std::vector<int> tau,
                   std::map<std::pair<std::vector<int>, std::vector<int>>, long long>& memo) {
  while (!lam.empty() && lam.back() == 0) lam.pop_back();
  if (lam.empty()) return tau.empty() ? 1 : 0;
  if (tau.empty()) return 0;
  auto key = std::make_pair(lam, tau);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;

  int t = tau.front();
  std::vector<int> rest(tau.begin() + 1, tau.end());
  int L = static_cast<int>(lam.size());
  std::vector<int> beta(L);
  for (int i = 0; i < L; ++i) beta[i] = lam[i] + (L - 1 - i);  // strictly decreasing

  long long total = 0;
  std::set<int> bset(beta.begin(), beta.end());
  for (int i = 0; i < L; ++i) {
    int b = beta[i];
    if (b < t || bset.count(b - t)) continue;
    int height = 0;
    for (int x : beta)
      if (x > b - t && x < b) ++height;
    std::vector<int> nb = beta;
    nb[i] = b - t;
    std::sort(nb.rbegin(), nb.rend());
    std::vector<int> nl(L);
    for (int j = 0; j < L; ++j) nl[j] = nb[j] - (L - 1 - j);
    long long sub = mn_value(nl, rest, memo);
    total += (height % 2 ? -sub : sub);
  }
  memo[key] = total;
  return total;
}

std::map<std::pair<std::vector<int>, std::vector<int>>, long long> mn_memo;

}  // namespace

ClassFunction irreducible_character(int n, const Partition& lambda) {
  Partition lam = lambda.stripped();
  if (lam.size() != n || !lam.valid())
    throw std::invalid_argument("irreducible_character: not a partition of n");
  const auto& ci = ClassIndex::get(n);
  ClassFunction chi(n);
  for (size_t i = 0; i < ci.types.size(); ++i)
    chi.v[i] = static_cast<long>(mn_value(lam.parts, ci.types[i].parts, mn_memo));
  return chi;
}

// ---------- coset modules ----------

namespace {

// Number of ways to distribute the cycles (multiset lens -> count) among the
// ordered blocks of lambda so each block's lengths sum to its size.
Int coset_fixed(const std::vector<int>& blocks, size_t bi, std::map<int, int>& cycles) {
  if (bi == blocks.size()) return 1;
  int want = blocks[bi];
  // choose a sub-multiset of cycles summing to `want`
  std::vector<int> lens;
  for (auto& [len, c] : cycles)
    if (c > 0) lens.push_back(len);
  Int total = 0;
  std::function<void(size_t, int, Int)> rec = [&](size_t li, int rem, Int ways) {
    if (rem == 0) {
      total += ways * coset_fixed(blocks, bi + 1, cycles);
      return;
    }
    if (li == lens.size()) return;
    int len = lens[li];
    int avail = cycles[len];
    int maxk = std::min(avail, rem / len);
    for (int k = 0; k <= maxk; ++k) {
      if (k > 0) cycles[len] -= k;
      rec(li + 1, rem - k * len, ways * binomial(avail, k));
      if (k > 0) cycles[len] += k;
    }
  };
  rec(0, want, 1);
  return total;
}

}  // namespace

ClassFunction coset_character(int n, const Partition& lambda) {
  Partition lam = lambda.stripped();
  if (lam.size() != n || !lam.valid())
    throw std::invalid_argument("coset_character: not a partition of n");
  const auto& ci = ClassIndex::get(n);
  ClassFunction chi(n);
  for (size_t i = 0; i < ci.types.size(); ++i) {
    std::map<int, int> cycles;
    for (int p : ci.types[i].parts) ++cycles[p];
    chi.v[i] = coset_fixed(lam.parts, 0, cycles);
  }
  return chi;
}

// ---------- named characters ----------

ClassFunction trivial_character(int n) {
  ClassFunction c(n);
  for (auto& x : c.v) x = 1;
  return c;
}

ClassFunction sign_character(int n) {
  const auto& ci = ClassIndex::get(n);
  ClassFunction c(n);
  for (size_t i = 0; i < ci.types.size(); ++i) {
    int transp = n - ci.types[i].positive_count();
    c.v[i] = (transp % 2 ? -1 : 1);
  }
  return c;
}

ClassFunction reflection_character(int n) {
  const auto& ci = ClassIndex::get(n);
  ClassFunction c(n);
  for (size_t i = 0; i < ci.types.size(); ++i) {
    int fixed = 0;
    for (int p : ci.types[i].parts)
      if (p == 1) ++fixed;
    c.v[i] = fixed - 1;
  }
  return c;
}

ClassFunction regular_character(int n) {
  ClassFunction c(n);
  c.v[0] = factorial(n);
  return c;
}

namespace {
int moebius(int d) {
  int result = 1;
  for (int p = 2; p * p <= d; ++p) {
    if (d % p == 0) {
      d /= p;
      if (d % p == 0) return 0;
      result = -result;
    }
  }
  if (d > 1) result = -result;
  return result;
}
}  // namespace

ClassFunction lie_character(int n) {
  // Ind_{C_{n+1}}^{S_{n+1}} of a faithful cyclic character: supported on the
  // classes (d^{(n+1)/d}), d | n+1, with value mu(d) z(tau) / (n+1).
  int N = n + 1;
  const auto& ci = ClassIndex::get(N);
  ClassFunction c(N);
  for (size_t i = 0; i < ci.types.size(); ++i) {
    const auto& parts = ci.types[i].parts;
    int d = parts[0];
    bool uniform = std::all_of(parts.begin(), parts.end(), [&](int p) { return p == d; });
    if (!uniform || N % d != 0) continue;
    c.v[i] = Rat(moebius(d) * Rat(ci.zs[i])) / N;
    c.v[i].canonicalize();
  }
  return c;
}

ClassFunction named_character(const std::string& name, int n) {
  if (name == "trivial") return trivial_character(n);
  if (name == "sign") return sign_character(n);
  if (name == "reflection") return reflection_character(n);
  if (name == "regular") return regular_character(n);
  if (name == "lie") return lie_character(n);
  throw std::invalid_argument("unknown character name: " + name);
}

// ---------- operations ----------

ClassFunction induction_product(const ClassFunction& chi, const ClassFunction& psi) {
  int a = chi.n, b = psi.n, N = a + b;
  const auto& ci = ClassIndex::get(N);
  ClassFunction out(N);
  for (size_t i = 0; i < ci.types.size(); ++i) {
    std::map<int, int> mult;
    for (int p : ci.types[i].parts) ++mult[p];
    std::vector<std::pair<int, int>> lens(mult.begin(), mult.end());
    Rat acc = 0;
    // split the cycle multiset: k[j] cycles of lens[j] go to the S_a side
    std::vector<int> k(lens.size(), 0);
    std::function<void(size_t, int)> rec = [&](size_t j, int got) {
      if (got > a) return;
      if (j == lens.size()) {
        if (got != a) return;
        std::vector<int> t1, t2;
        for (size_t u = 0; u < lens.size(); ++u) {
          for (int c = 0; c < k[u]; ++c) t1.push_back(lens[u].first);
          for (int c = 0; c < lens[u].second - k[u]; ++c) t2.push_back(lens[u].first);
        }
        std::sort(t1.rbegin(), t1.rend());
        std::sort(t2.rbegin(), t2.rend());
        Partition p1{std::vector<int>(t1)}, p2{std::vector<int>(t2)};
        Rat term = Rat(ci.zs[i]) / Rat(z_of(p1) * z_of(p2));
        term *= chi.at(p1) * psi.at(p2);
        acc += term;
      } else {
        for (k[j] = 0; k[j] <= lens[j].second; ++k[j]) rec(j + 1, got + k[j] * lens[j].first);
        k[j] = 0;
      }
    };
    rec(0, 0);
    acc.canonicalize();
    out.v[i] = acc;
  }
  return out;
}

ClassFunction restrict_character(const ClassFunction& chi, int n) {
  if (n > chi.n) throw std::invalid_argument("restrict: target bigger than source");
  const auto& ci = ClassIndex::get(n);
  ClassFunction out(n);
  for (size_t i = 0; i < ci.types.size(); ++i) {
    std::vector<int> padded = ci.types[i].parts;
    padded.resize(padded.size() + (chi.n - n), 1);
    std::sort(padded.rbegin(), padded.rend());
    out.v[i] = chi.at(Partition{std::vector<int>(padded)});
  }
  return out;
}

Partition power_cycle_type(const Partition& tau, long i) {
  std::vector<int> out;
  for (int d : tau.parts) {
    if (d <= 0) continue;
    long g = std::gcd(static_cast<long>(d), i);
    for (long c = 0; c < g; ++c) out.push_back(d / static_cast<int>(g));
  }
  std::sort(out.rbegin(), out.rend());
  return Partition(std::move(out));
}

ClassFunction sym_power(const ClassFunction& chi, int k) {
  const auto& ci = ClassIndex::get(chi.n);
  ClassFunction out(chi.n);
  for (size_t t = 0; t < ci.types.size(); ++t) {
    // Newton recurrence per class; chi(g^i) looked up by power cycle type
    std::vector<Rat> sym(k + 1);
    sym[0] = 1;
    for (int j = 1; j <= k; ++j) {
      Rat acc = 0;
      for (int i = 1; i <= j; ++i)
        acc += chi.at(power_cycle_type(ci.types[t], i)) * sym[j - i];
      sym[j] = acc / j;
      sym[j].canonicalize();
    }
    out.v[t] = sym[k];
  }
  return out;
}

ClassFunction park_character_direct(int n) {
  const auto& ci = ClassIndex::get(n);
  ClassFunction out(n);
  for (size_t t = 0; t < ci.types.size(); ++t) {
    const auto& cyc = ci.types[t].parts;  // cycle lengths
    int r = static_cast<int>(cyc.size());
    // assign one preference value per cycle; check the parking condition on
    // the resulting multiset
    std::vector<int> val(r, 1);
    long long fixed = 0;
    std::function<void(int)> rec = [&](int j) {
      if (j == r) {
        std::vector<int> cnt(n + 1, 0);
        for (int u = 0; u < r; ++u) cnt[val[u]] += cyc[u];
        int seen = 0;
        for (int kk = 1; kk <= n; ++kk) {
          seen += cnt[kk];
          if (seen < kk) return;
        }
        ++fixed;
        return;
      }
      for (int v = 1; v <= n; ++v) {
        val[j] = v;
        rec(j + 1);
      }
    };
    rec(0);
    out.v[t] = static_cast<long>(fixed);
  }
  return out;
}

}  // namespace parkspan
