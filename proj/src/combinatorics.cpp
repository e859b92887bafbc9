#include "parkspan/combinatorics.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace parkspan {

Partition staircase(int n, int ell, int m) {
  if (n < 1 || ell < 1 || m < 1) throw std::invalid_argument("staircase: need n, l, m >= 1");
  std::vector<int> b(n);
  for (int i = 1; i <= n; ++i) b[i - 1] = ell - 1 + m * (n - i);
  return Partition(std::move(b));
}

std::vector<DyckPath> enum_dyck_paths(int n, int ell, int m) {
  auto bound = staircase(n, ell, m);
  std::vector<DyckPath> out;
  for (auto& mu : partitions_under(bound.parts)) out.push_back({n, ell, m, mu});
  return out;
}

PathStats path_stats(const DyckPath& d) {
  return {mult_partition(d.mu), d.mu.size()};
}

std::vector<Run> vertical_runs(const DyckPath& d) {
  std::vector<Run> runs;
  for (int p : d.mu.parts) {
    if (!runs.empty() && runs.back().x == p)
      ++runs.back().len;
    else
      runs.push_back({p, 1});
  }
  return runs;
}

bool is_parking_function(const ParkingFunction& a) {
  int n = static_cast<int>(a.size());
  std::vector<int> cnt(n + 2, 0);
  for (int x : a) {
    if (x < 1 || x > n) return false;
    ++cnt[x];
  }
  int seen = 0;
  for (int k = 1; k <= n; ++k) {
    seen += cnt[k];
    if (seen < k) return false;
  }
  return true;
}

std::vector<ParkingFunction> enum_parking_functions(int n) {
  std::vector<ParkingFunction> out;
  ParkingFunction a(n, 1);
  std::function<void(int)> rec = [&](int i) {
    if (i == n) {
      if (is_parking_function(a)) out.push_back(a);
      return;
    }
    for (int v = 1; v <= n; ++v) {
      a[i] = v;
      rec(i + 1);
    }
  };
  if (n >= 0) rec(0);
  return out;
}

ParkingFunction permute_parking(const ParkingFunction& a, const std::vector<int>& w) {
  // w is 1-based: result_i = a_{w(i)}
  ParkingFunction r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[w[i] - 1];
  return r;
}

ParkingFunction parking_from_labeled(const LabeledPath& lp) {
  auto runs = vertical_runs(lp.path);
  if (runs.size() != lp.blocks.size())
    throw std::invalid_argument("labeled path: block count != run count");
  ParkingFunction a(lp.path.n, 0);
  for (size_t r = 0; r < runs.size(); ++r) {
    if (static_cast<int>(lp.blocks[r].size()) != runs[r].len)
      throw std::invalid_argument("labeled path: block size != run length");
    for (int car : lp.blocks[r]) a[car - 1] = 1 + runs[r].x;
  }
  return a;
}

std::vector<LabeledPath> enum_labeled_paths(int n) {
  std::vector<LabeledPath> out;
  for (auto& d : enum_dyck_paths(n, 1, 1)) {
    auto runs = vertical_runs(d);
    // distribute labels 1..n over the runs, block sizes = run lengths
    std::vector<std::vector<int>> blocks(runs.size());
    std::function<void(size_t, std::vector<int>&)> rec = [&](size_t r, std::vector<int>& pool) {
      if (r == runs.size()) {
        out.push_back({d, blocks});
        return;
      }
      int len = runs[r].len;
      // choose `len` labels from pool (combinations in increasing order)
      std::vector<int> idx(len);
      std::function<void(int, int)> choose = [&](int start, int got) {
        if (got == len) {
          std::vector<int> rest;
          blocks[r].clear();
          std::vector<bool> used(pool.size(), false);
          for (int t = 0; t < len; ++t) {
            blocks[r].push_back(pool[idx[t]]);
            used[idx[t]] = true;
          }
          for (size_t t = 0; t < pool.size(); ++t)
            if (!used[t]) rest.push_back(pool[t]);
          rec(r + 1, rest);
          return;
        }
        for (int s = start; s < static_cast<int>(pool.size()); ++s) {
          idx[got] = s;
          choose(s + 1, got + 1);
        }
      };
      choose(0, 0);
    };
    std::vector<int> pool(n);
    for (int i = 0; i < n; ++i) pool[i] = i + 1;
    rec(0, pool);
  }
  return out;
}

std::vector<Partition> sub_staircase_partitions(int n, int ell, int m) {
  return partitions_under(staircase(n, ell, m).parts);
}

Int sub_staircase_monomial_count(int n, int ell, int m) {
  // number of distinct rearrangements of each sub-staircase partition
  Int total = 0;
  for (auto& lam : sub_staircase_partitions(n, ell, m)) {
    Int ways = factorial(n);
    for (int c : mult_partition(lam).parts) ways /= factorial(c);
    total += ways;
  }
  return total;
}

}  // namespace parkspan
