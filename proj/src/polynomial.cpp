#include "parkspan/polynomial.hpp"

namespace parkspan {

Polynomial graph_weight(const std::vector<std::tuple<int, int, int>>& edges, int nvars) {
  return graph_weight_t<Int>(edges, nvars);
}

}  // namespace parkspan
