#include "parkspan/partition.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

namespace parkspan {

int Partition::size() const {
  int s = 0;
  for (int p : parts) s += p;
  return s;
}

int Partition::positive_count() const {
  int c = 0;
  for (int p : parts)
    if (p > 0) ++c;
  return c;
}

bool Partition::valid() const {
  for (size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 0) return false;
    if (i > 0 && parts[i] > parts[i - 1]) return false;
  }
  return true;
}

Partition Partition::stripped() const {
  Partition r = *this;
  while (!r.parts.empty() && r.parts.back() == 0) r.parts.pop_back();
  return r;
}

Partition Partition::padded(int len) const {
  if (len < length()) throw std::invalid_argument("padded: target shorter than stored length");
  Partition r = *this;
  r.parts.resize(len, 0);
  return r;
}

std::string Partition::str() const {
  std::ostringstream os;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) os << ',';
    os << parts[i];
  }
  return os.str();
}

Partition mult_partition(const Partition& lam) {
  std::map<int, int> count;
  for (int p : lam.parts) ++count[p];
  std::vector<int> m;
  m.reserve(count.size());
  for (auto& [v, c] : count) {
    (void)v;
    m.push_back(c);
  }
  std::sort(m.rbegin(), m.rend());
  return Partition(std::move(m));
}

bool young_contains(const Partition& outer, const Partition& inner) {
  for (size_t i = 0; i < inner.parts.size(); ++i) {
    if (inner.parts[i] == 0) continue;
    if (i >= outer.parts.size() || inner.parts[i] > outer.parts[i]) return false;
  }
  return true;
}

int grevlex_cmp_vec(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("grevlex: stored lengths differ");
  long sa = 0, sb = 0;
  for (int x : a) sa += x;
  for (int x : b) sb += x;
  if (sa != sb) return sa < sb ? -1 : 1;
  for (size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;  // last difference positive => smaller
  }
  return 0;
}

bool grevlex_less(const Partition& lam, const Partition& mu) {
  return grevlex_cmp_vec(lam.parts, mu.parts) < 0;
}

const std::vector<Partition>& enum_partitions(int n) {
  static std::map<int, std::vector<Partition>> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rem, int maxp) {
    if (rem == 0) {
      out.emplace_back(Partition{std::vector<int>(cur)});
      return;
    }
    for (int p = std::min(rem, maxp); p >= 1; --p) {
      cur.push_back(p);
      rec(rem - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  std::sort(out.begin(), out.end(), [n](const Partition& a, const Partition& b) {
    return grevlex_cmp_vec(a.padded(n).parts, b.padded(n).parts) < 0;
  });
  return cache.emplace(n, std::move(out)).first->second;
}

std::vector<Partition> partitions_under(const std::vector<int>& bound) {
  std::vector<Partition> out;
  int n = static_cast<int>(bound.size());
  std::vector<int> cur(n, 0);
  std::function<void(int, int)> rec = [&](int i, int prev) {
    if (i == n) {
      out.emplace_back(Partition{std::vector<int>(cur)});
      return;
    }
    int hi = std::min(prev, bound[i]);
    for (int v = 0; v <= hi; ++v) {
      cur[i] = v;
      rec(i + 1, v);
    }
    cur[i] = 0;
  };
  rec(0, n == 0 ? 0 : bound[0] + 1);
  std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
    return grevlex_cmp_vec(a.parts, b.parts) < 0;
  });
  return out;
}

}  // namespace parkspan
