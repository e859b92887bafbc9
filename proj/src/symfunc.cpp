#include "parkspan/symfunc.hpp"

#include <algorithm>
#include <sstream>

#include "parkspan/combinatorics.hpp"

namespace parkspan {

void SymFunc::add(const Partition& lam, const Int& c) {
  if (c == 0) return;
  Partition key = lam.stripped();
  auto [it, fresh] = coeffs.emplace(key, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) coeffs.erase(it);
  }
}

namespace {

std::string basis_letter(Basis b) { return b == Basis::s ? "s" : "h"; }

std::vector<const std::pair<const Partition, Int>*> sorted_terms(const SymFunc& f) {
  std::vector<const std::pair<const Partition, Int>*> terms;
  for (auto& kv : f.coeffs) terms.push_back(&kv);
  std::sort(terms.begin(), terms.end(), [&](auto* a, auto* b) {
    return grevlex_cmp_vec(a->first.padded(f.n).parts, b->first.padded(f.n).parts) > 0;
  });
  return terms;
}

}  // namespace

std::string SymFunc::str() const {
  if (coeffs.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto* kv : sorted_terms(*this)) {
    const Int& c = kv->second;
    if (first) {
      if (c < 0) os << "- ";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    Int a = abs(c);
    if (a != 1) os << a.get_str() << ' ';
    os << basis_letter(basis) << '(' << kv->first.str() << ')';
    first = false;
  }
  return os.str();
}

Int kostka(int n, const Partition& mu, const Partition& lambda) {
  static std::map<int, std::map<std::pair<Partition, Partition>, Int>> cache;
  auto& tab = cache[n];
  auto key = std::make_pair(mu.stripped(), lambda.stripped());
  auto it = tab.find(key);
  if (it != tab.end()) return it->second;
  Rat k = inner_product(coset_character(n, lambda), irreducible_character(n, mu));
  Int v = to_int(k);
  tab.emplace(key, v);
  return v;
}

SymFunc frobenius(const ClassFunction& chi) {
  SymFunc f(chi.n, Basis::s);
  for (const auto& mu : enum_partitions(chi.n)) {
    Rat c = inner_product(chi, irreducible_character(chi.n, mu));
    f.add(mu, to_int(c));  // throws if not integral
  }
  return f;
}

SymFunc frob_h(int n, const std::map<Partition, Int>& coset_mults) {
  SymFunc f(n, Basis::h);
  for (auto& [lam, c] : coset_mults) f.add(lam, c);
  return f;
}

SymFunc convert(const SymFunc& f, Basis target) {
  if (f.basis == target) return f;
  SymFunc out(f.n, target);
  if (f.basis == Basis::h) {  // h -> s via Kostka columns
    for (auto& [lam, c] : f.coeffs)
      for (const auto& mu : enum_partitions(f.n)) out.add(mu, c * kostka(f.n, mu, lam));
    return out;
  }
  // s -> h: solve t_mu = sum_lambda c_lambda K_{mu,lambda}; K is unitriangular
  // with K_{mu,lambda} = 0 unless lambda <= mu (dominance, refined by grevlex),
  // so ascending grevlex back-substitution works.
  const auto& parts = enum_partitions(f.n);
  std::map<Partition, Int> c;
  for (const auto& mu : parts) {
    Int t = 0;
    auto it = f.coeffs.find(mu);
    if (it != f.coeffs.end()) t = it->second;
    for (const auto& lam : parts) {
      if (lam == mu) break;  // ascending order: strictly smaller handled already
      auto jt = c.find(lam);
      if (jt != c.end() && jt->second != 0) t -= jt->second * kostka(f.n, mu, lam);
    }
    c[mu] = t;
  }
  for (auto& [lam, v] : c) out.add(lam, v);
  return out;
}

ClassFunction to_class_function(const SymFunc& f) {
  ClassFunction chi(f.n);
  for (auto& [lam, c] : f.coeffs) {
    ClassFunction base = f.basis == Basis::s ? irreducible_character(f.n, lam)
                                             : coset_character(f.n, lam);
    chi += base.scale(Rat(c));
  }
  return chi;
}

SymFunc GradedSymFunc::total() const {
  SymFunc t(n, basis);
  for (auto& p : pieces)
    for (auto& [lam, c] : p.coeffs) t.add(lam, c);
  return t;
}

std::string GradedSymFunc::str() const {
  std::ostringstream os;
  for (size_t k = 0; k < pieces.size(); ++k) {
    if (pieces[k].coeffs.empty()) continue;
    os << "q^" << k << ": " << pieces[k].str() << '\n';
  }
  return os.str();
}

GradedSymFunc park_grfrob(int n, int ell, int m) {
  GradedSymFunc g;
  g.n = n;
  g.basis = Basis::h;
  int top = staircase(n, ell, m).size();
  g.pieces.assign(top + 1, SymFunc(n, Basis::h));
  for (const auto& d : enum_dyck_paths(n, ell, m)) {
    auto st = path_stats(d);
    g.pieces[st.area].add(st.lambda, 1);
  }
  return g;
}

}  // namespace parkspan
