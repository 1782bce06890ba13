#include "szx/indices.hpp"

#include <stdexcept>

namespace szx {

namespace {

void require_connected(const Graph& g) {
  if (!is_connected(g))
    throw std::invalid_argument("index is defined for connected graphs only");
}

}  // namespace

std::string QuarterValue::to_decimal() const {
  std::int64_t whole = q / 4;
  int rem = static_cast<int>(q % 4);
  if (rem < 0) {
    rem += 4;
    --whole;
  }
  std::string out = std::to_string(whole);
  switch (rem) {
    case 1: out += ".25"; break;
    case 2: out += ".5"; break;
    case 3: out += ".75"; break;
    default: break;
  }
  return out;
}

std::string QuarterValue::to_fraction() const {
  return std::to_string(q) + "/4";
}

EdgePartition edge_partition(const Graph& g, int u, int v,
                             const DistanceMatrix& dist) {
  if (!g.has_edge(u, v))
    throw std::invalid_argument("edge " + std::to_string(u) + "-" +
                                std::to_string(v) + " not in graph");
  EdgePartition p{u, v, 0, 0, 0};
  for (int w = 0; w < g.vertex_count(); ++w) {
    int du = dist.at(u, w);
    int dv = dist.at(v, w);
    if (du < dv)
      ++p.n_u;
    else if (dv < du)
      ++p.n_v;
    else
      ++p.n_0;
  }
  return p;
}

std::vector<EdgePartition> all_edge_partitions(const Graph& g) {
  require_connected(g);
  auto dist = all_pairs_distances(g);
  std::vector<EdgePartition> out;
  out.reserve(g.edge_count());
  for (auto [u, v] : g.edges()) out.push_back(edge_partition(g, u, v, dist));
  return out;
}

std::int64_t wiener(const Graph& g) {
  require_connected(g);
  auto dist = all_pairs_distances(g);
  std::int64_t sum = 0;
  for (int u = 0; u < g.vertex_count(); ++u)
    for (int v = u + 1; v < g.vertex_count(); ++v) sum += dist.at(u, v);
  return sum;
}

std::int64_t szeged(const Graph& g) {
  std::int64_t sum = 0;
  for (const auto& p : all_edge_partitions(g))
    sum += static_cast<std::int64_t>(p.n_u) * p.n_v;
  return sum;
}

QuarterValue revised_szeged_x4(const Graph& g) {
  std::int64_t sum = 0;
  for (const auto& p : all_edge_partitions(g))
    sum += static_cast<std::int64_t>(2 * p.n_u + p.n_0) * (2 * p.n_v + p.n_0);
  return QuarterValue{sum};
}

std::int64_t deviation_sum(const Graph& g) {
  std::int64_t sum = 0;
  for (const auto& p : all_edge_partitions(g)) {
    std::int64_t d = p.deviation();
    sum += d * d;
  }
  return sum;
}

QuarterValue conjecture_bound_x4(int n) {
  if (n < 6)
    throw std::invalid_argument(
        "conjectured bound is stated for n >= 6, got n = " + std::to_string(n));
  std::int64_t nn = n;
  std::int64_t q = nn * nn * nn + nn * nn - nn;
  if (n % 2 == 1) q -= 1;
  return QuarterValue{q};
}

std::int64_t eq1_residual(const Graph& g) {
  std::int64_t n = g.vertex_count();
  if (g.edge_count() != n + 1)
    throw std::invalid_argument("eq1_residual requires m = n+1");
  return revised_szeged_x4(g).q - (n * n * n + n * n - deviation_sum(g));
}

}  // namespace szx
