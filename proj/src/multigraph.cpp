#include "parkspan/multigraph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace parkspan {

// ---------- BivarPoly ----------

BivarPoly BivarPoly::constant(const Int& k) { return monomial(0, 0, k); }

BivarPoly BivarPoly::monomial(int i, int j, const Int& k) {
  BivarPoly p;
  if (k != 0) p.set(i, j, k);
  return p;
}

Int BivarPoly::coeff(int i, int j) const {
  if (i < 0 || i >= static_cast<int>(c.size())) return 0;
  if (j < 0 || j >= static_cast<int>(c[i].size())) return 0;
  return c[i][j];
}

void BivarPoly::set(int i, int j, const Int& k) {
  if (i >= static_cast<int>(c.size())) c.resize(i + 1);
  if (j >= static_cast<int>(c[i].size())) c[i].resize(j + 1, 0);
  c[i][j] = k;
}

BivarPoly BivarPoly::operator+(const BivarPoly& o) const {
  BivarPoly r = *this;
  for (int i = 0; i < static_cast<int>(o.c.size()); ++i)
    for (int j = 0; j < static_cast<int>(o.c[i].size()); ++j)
      if (o.c[i][j] != 0) r.set(i, j, r.coeff(i, j) + o.c[i][j]);
  return r;
}

BivarPoly BivarPoly::operator*(const BivarPoly& o) const {
  BivarPoly r;
  for (int i = 0; i < static_cast<int>(c.size()); ++i)
    for (int j = 0; j < static_cast<int>(c[i].size()); ++j) {
      if (c[i][j] == 0) continue;
      for (int k = 0; k < static_cast<int>(o.c.size()); ++k)
        for (int l = 0; l < static_cast<int>(o.c[k].size()); ++l) {
          if (o.c[k][l] == 0) continue;
          r.set(i + k, j + l, r.coeff(i + k, j + l) + c[i][j] * o.c[k][l]);
        }
    }
  return r;
}

bool BivarPoly::operator==(const BivarPoly& o) const {
  int mi = std::max(c.size(), o.c.size());
  for (int i = 0; i < mi; ++i) {
    size_t mj = 0;
    if (i < static_cast<int>(c.size())) mj = c[i].size();
    if (i < static_cast<int>(o.c.size())) mj = std::max(mj, o.c[i].size());
    for (int j = 0; j < static_cast<int>(mj); ++j)
      if (coeff(i, j) != o.coeff(i, j)) return false;
  }
  return true;
}

Int BivarPoly::eval(const Int& x, const Int& y) const {
  Int acc = 0;
  for (int i = 0; i < static_cast<int>(c.size()); ++i)
    for (int j = 0; j < static_cast<int>(c[i].size()); ++j)
      if (c[i][j] != 0) acc += c[i][j] * ipow(x, i) * ipow(y, j);
  return acc;
}

std::vector<Int> BivarPoly::at_x1() const {
  std::vector<Int> out;
  for (auto& row : c)
    for (size_t j = 0; j < row.size(); ++j) {
      if (j >= out.size()) out.resize(j + 1, 0);
      out[j] += row[j];
    }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

std::string BivarPoly::str() const {
  std::ostringstream os;
  bool first = true;
  for (int i = static_cast<int>(c.size()); i-- > 0;)
    for (int j = static_cast<int>(c[i].size()); j-- > 0;) {
      if (c[i][j] == 0) continue;
      if (!first) os << " + ";
      if (c[i][j] != 1 || (i == 0 && j == 0)) os << c[i][j].get_str();
      if (i) os << "x" << (i > 1 ? "^" + std::to_string(i) : "");
      if (j) os << "y" << (j > 1 ? "^" + std::to_string(j) : "");
      first = false;
    }
  if (first) os << "0";
  return os.str();
}

// ---------- Multigraph ----------

Multigraph Multigraph::complete(int v) {
  Multigraph g;
  g.v = v;
  for (int i = 1; i <= v; ++i)
    for (int j = i + 1; j <= v; ++j) g.em[{i, j}] = 1;
  return g;
}

Multigraph Multigraph::complete_lm(int n, int ell, int m) {
  if (n < 1 || ell < 1 || m < 1) throw std::invalid_argument("complete_lm: need n, l, m >= 1");
  Multigraph g;
  g.v = n + 1;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) g.em[{i, j}] = m;
    g.em[{i, n + 1}] = ell;
  }
  return g;
}

void Multigraph::add_edge(int u, int w, int mult) {
  if (u == w) throw std::invalid_argument("loops not supported");
  if (u > w) std::swap(u, w);
  if (w > v) throw std::invalid_argument("vertex out of range");
  em[{u, w}] += mult;
  if (em[{u, w}] <= 0) em.erase({u, w});
}

int Multigraph::edge_total() const {
  int e = 0;
  for (auto& [k, m] : em) e += m;
  return e;
}

std::string Multigraph::str() const {
  std::ostringstream os;
  os << "V=" << v << ";";
  for (auto& [k, m] : em) os << ' ' << k.first << '-' << k.second << 'x' << m;
  return os.str();
}

std::vector<std::pair<int, int>> Multigraph::copies() const {
  std::vector<std::pair<int, int>> out;
  for (auto& [k, m] : em)
    for (int c = 0; c < m; ++c) out.push_back(k);
  return out;
}

namespace {

struct Dsu {
  std::vector<int> p;
  explicit Dsu(int n) : p(n + 1) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
  bool unite(int a, int b) {
    a = find(a), b = find(b);
    if (a == b) return false;
    p[a] = b;
    return true;
  }
};

}  // namespace

bool is_connected(const Multigraph& g) {
  if (g.v <= 1) return true;
  Dsu d(g.v);
  int comps = g.v;
  for (auto& [k, m] : g.em)
    if (d.unite(k.first, k.second)) --comps;
  return comps == 1;
}

// ---------- Tutte ----------

namespace {

// geometric sum 1 + y + ... + y^{k-1}
BivarPoly y_geom(int k) {
  BivarPoly p;
  for (int j = 0; j < k; ++j) p.set(0, j, 1);
  return p;
}

using EdgeList = std::vector<std::tuple<int, int, int>>;  // compact form, u<w

// Deterministic relabeling: vertices sorted by (weighted degree, multiset of
// incident (mult, neighbor degree)), descending, ties by old label.  Folds
// many equal-by-relabeling subproblems; correctness never depends on it.
EdgeList normalize(const EdgeList& edges) {
  std::map<int, long> wdeg;
  for (auto& [u, w, m] : edges) {
    wdeg[u] += m;
    wdeg[w] += m;
  }
  std::map<int, std::vector<std::pair<int, long>>> nbr;
  for (auto& [u, w, m] : edges) {
    nbr[u].push_back({m, wdeg[w]});
    nbr[w].push_back({m, wdeg[u]});
  }
  std::vector<int> verts;
  for (auto& [x, d] : wdeg) verts.push_back(x);
  for (auto& [x, vec] : nbr) std::sort(vec.begin(), vec.end());
  std::sort(verts.begin(), verts.end(), [&](int a, int b) {
    if (wdeg[a] != wdeg[b]) return wdeg[a] > wdeg[b];
    if (nbr[a] != nbr[b]) return nbr[a] > nbr[b];
    return a < b;
  });
  std::map<int, int> newlab;
  for (size_t i = 0; i < verts.size(); ++i) newlab[verts[i]] = static_cast<int>(i + 1);
  EdgeList out;
  for (auto& [u, w, m] : edges) {
    int a = newlab[u], b = newlab[w];
    if (a > b) std::swap(a, b);
    out.push_back({a, b, m});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string key_of(const EdgeList& edges) {
  std::ostringstream os;
  for (auto& [u, w, m] : edges) os << u << ',' << w << ',' << m << ';';
  return os.str();
}

struct TutteMemo {
  std::unordered_map<std::string, BivarPoly> map;
};

BivarPoly tutte_rec(const EdgeList& edges, TutteMemo& memo);

// product over connected components (isolated vertices contribute 1)
BivarPoly tutte_components(const EdgeList& edges, TutteMemo& memo) {
  if (edges.empty()) return BivarPoly::constant(1);
  std::map<int, int> comp;
  {
    std::map<int, int> parent;
    std::function<int(int)> find = [&](int x) {
      if (!parent.count(x)) parent[x] = x;
      return parent[x] == x ? x : parent[x] = find(parent[x]);
    };
    for (auto& [u, w, m] : edges) parent[find(u)] = find(w);
    for (auto& [u, w, m] : edges) {
      comp[u] = find(u);
      comp[w] = find(w);
    }
  }
  std::map<int, EdgeList> parts;
  for (auto& e : edges) parts[comp[std::get<0>(e)]].push_back(e);
  BivarPoly acc = BivarPoly::constant(1);
  for (auto& [root, part] : parts) acc = acc * tutte_rec(part, memo);
  return acc;
}

BivarPoly tutte_rec(const EdgeList& edges, TutteMemo& memo) {
  if (edges.empty()) return BivarPoly::constant(1);
  EdgeList norm = normalize(edges);
  std::string key = key_of(norm);
  auto it = memo.map.find(key);
  if (it != memo.map.end()) return it->second;

  auto [u, w, k] = norm.front();
  EdgeList rest(norm.begin() + 1, norm.end());

  // is the bundle a bridge of the support?
  std::map<int, int> parent;
  std::function<int(int)> find = [&](int x) {
    if (!parent.count(x)) parent[x] = x;
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  for (auto& [a, b, m] : rest) parent[find(a)] = find(b);
  (void)find(u), (void)find(w);
  bool bridge = find(u) != find(w);

  // contraction: w merges into u, parallel classes re-bundle
  EdgeList contracted;
  {
    std::map<std::pair<int, int>, int> acc;
    for (auto& [a, b, m] : rest) {
      int x = (a == w) ? u : a, y = (b == w) ? u : b;
      if (x == y) throw std::logic_error("unexpected loop in contraction");
      if (x > y) std::swap(x, y);
      acc[{x, y}] += m;
    }
    for (auto& [key2, m] : acc) contracted.push_back({key2.first, key2.second, m});
  }

  BivarPoly result;
  if (bridge) {
    // T = (x + y [k-1]_y) T(G/bundle)
    BivarPoly factor = BivarPoly::monomial(1, 0);
    BivarPoly ygeo = y_geom(k - 1);
    factor = factor + BivarPoly::monomial(0, 1) * ygeo;
    result = factor * tutte_components(contracted, memo);
  } else {
    // T = T(G - bundle) + [k]_y T(G/bundle)
    result = tutte_components(rest, memo) + y_geom(k) * tutte_components(contracted, memo);
  }
  memo.map.emplace(std::move(key), result);
  return result;
}

}  // namespace

BivarPoly tutte(const Multigraph& g) {
  EdgeList edges;
  for (auto& [k, m] : g.em) edges.push_back({k.first, k.second, m});
  TutteMemo memo;
  return tutte_components(edges, memo);
}

std::vector<Int> tutte_hilbert(const Multigraph& g) {
  if (!is_connected(g)) throw std::invalid_argument("tutte_hilbert: graph must be connected");
  int shift = g.edge_total() - g.v + 1;
  auto ty = tutte(g).at_x1();  // T(1, y) coefficients
  std::vector<Int> h(shift + 1, 0);
  for (int d = 0; d <= shift; ++d) {
    int j = shift - d;
    if (j < static_cast<int>(ty.size())) h[d] = ty[j];
  }
  return h;
}

bool initial_coefficients_check(const Multigraph& g) {
  auto h = tutte_hilbert(g);
  for (int k = 0; k <= g.v - 2; ++k) {
    Int have = k < static_cast<int>(h.size()) ? h[k] : Int(0);
    if (have != binomial(g.v + k - 2, k)) return false;
  }
  return true;
}

std::vector<Int> coboundary_coefficients(const Multigraph& g, int lambda) {
  if (lambda < 0) throw std::invalid_argument("lambda must be >= 0");
  int e = g.edge_total();
  std::vector<Int> c(e + 1, 0);
  std::vector<int> color(g.v + 1, 0);
  std::function<void(int)> rec = [&](int vert) {
    if (vert > g.v) {
      int mono = 0;
      for (auto& [k, m] : g.em)
        if (color[k.first] == color[k.second]) mono += m;
      c[mono] += 1;
      return;
    }
    for (int col = 1; col <= lambda; ++col) {
      color[vert] = col;
      rec(vert + 1);
    }
  };
  rec(1);
  return c;
}

std::vector<std::vector<int>> spanning_trees(const Multigraph& g) {
  auto cps = g.copies();
  int need = g.v - 1;
  std::vector<std::vector<int>> out;
  std::vector<int> chosen;
  std::function<void(int, Dsu&)> rec = [&](int from, Dsu& d) {
    if (static_cast<int>(chosen.size()) == need) {
      out.push_back(chosen);
      return;
    }
    int remaining = need - static_cast<int>(chosen.size());
    for (int i = from; i + remaining <= static_cast<int>(cps.size()); ++i) {
      Dsu d2 = d;
      if (!d2.unite(cps[i].first, cps[i].second)) continue;
      chosen.push_back(i);
      rec(i + 1, d2);
      chosen.pop_back();
    }
  };
  Dsu d(g.v);
  rec(0, d);
  return out;
}

namespace {

// path between a and b inside the tree (as copy indices); empty if none
std::vector<int> tree_path(const std::vector<std::pair<int, int>>& cps,
                           const std::vector<int>& tree, int a, int b) {
  std::map<int, std::vector<std::pair<int, int>>> adj;  // vertex -> (nbr, copy)
  for (int ci : tree) {
    adj[cps[ci].first].push_back({cps[ci].second, ci});
    adj[cps[ci].second].push_back({cps[ci].first, ci});
  }
  std::map<int, std::pair<int, int>> from;  // vertex -> (prev vertex, copy)
  std::vector<int> stack{a};
  std::map<int, bool> seen{{a, true}};
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    if (x == b) break;
    for (auto& [y, ci] : adj[x]) {
      if (seen[y]) continue;
      seen[y] = true;
      from[y] = {x, ci};
      stack.push_back(y);
    }
  }
  std::vector<int> path;
  if (!seen[b]) return path;
  for (int x = b; x != a;) {
    auto [px, ci] = from[x];
    path.push_back(ci);
    x = px;
  }
  return path;
}

}  // namespace

std::vector<int> external_activity(const Multigraph& g, const std::vector<int>& tree) {
  auto cps = g.copies();
  std::vector<bool> in_tree(cps.size(), false);
  for (int ci : tree) in_tree[ci] = true;
  std::vector<int> active;
  for (int f = 0; f < static_cast<int>(cps.size()); ++f) {
    if (in_tree[f]) continue;
    auto path = tree_path(cps, tree, cps[f].first, cps[f].second);
    bool minimal = true;
    for (int ci : path)
      if (ci < f) {
        minimal = false;
        break;
      }
    if (minimal) active.push_back(f);
  }
  return active;
}

std::vector<int> internal_activity(const Multigraph& g, const std::vector<int>& tree) {
  auto cps = g.copies();
  std::vector<int> active;
  for (int e : tree) {
    // two sides of the cut when e is removed from the tree
    Dsu d(g.v);
    for (int ci : tree)
      if (ci != e) d.unite(cps[ci].first, cps[ci].second);
    int sa = d.find(cps[e].first), sb = d.find(cps[e].second);
    bool minimal = true;
    for (int f = 0; f < static_cast<int>(cps.size()) && minimal; ++f) {
      if (f == e) continue;
      int fa = d.find(cps[f].first), fb = d.find(cps[f].second);
      bool crosses = (fa == sa && fb == sb) || (fa == sb && fb == sa);
      if (crosses && f < e) minimal = false;
    }
    if (minimal) active.push_back(e);
  }
  return active;
}

}  // namespace parkspan
