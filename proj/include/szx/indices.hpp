#ifndef SZX_INDICES_HPP
#define SZX_INDICES_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "szx/graph.hpp"

namespace szx {

// Vertex partition of a connected graph with respect to edge uv: strictly
// closer to u, strictly closer to v, or equidistant.
struct EdgePartition {
  int u = -1;
  int v = -1;
  int n_u = 0;
  int n_v = 0;
  int n_0 = 0;

  int deviation() const noexcept { return n_u - n_v; }
};

// Exact index value stored as an integer number of quarter-units. Per-edge
// revised Szeged terms are quarter-integers, so 4x scaling keeps the whole
// pipeline in integer arithmetic.
struct QuarterValue {
  std::int64_t q = 0;

  friend auto operator<=>(const QuarterValue&, const QuarterValue&) = default;

  // Exact decimal rendering: "61.5", "23.25", plain "16" for whole values.
  std::string to_decimal() const;
  // Raw quarter-units with an explicit marker: "246/4".
  std::string to_fraction() const;
};

EdgePartition edge_partition(const Graph& g, int u, int v,
                             const DistanceMatrix& dist);

// Partitions for every edge off one shared distance matrix.
std::vector<EdgePartition> all_edge_partitions(const Graph& g);

// W(G): sum of distances over unordered vertex pairs.
std::int64_t wiener(const Graph& g);

// Sz(G): sum over edges of n_u * n_v.
std::int64_t szeged(const Graph& g);

// 4*Sz*(G) = sum over edges of (2 n_u + n_0)(2 n_v + n_0).
QuarterValue revised_szeged_x4(const Graph& g);

// Sum over edges of (n_u - n_v)^2.
std::int64_t deviation_sum(const Graph& g);

// 4x the conjectured maximum of Sz* over connected bicyclic graphs of order
// n >= 6: n^3+n^2-n-1 for odd n, n^3+n^2-n for even n.
QuarterValue conjecture_bound_x4(int n);

// 4*Sz*(G) - (n^3 + n^2 - deviation_sum(G)) for a bicyclic graph; zero by
// the m = n+1 identity.
std::int64_t eq1_residual(const Graph& g);

}  // namespace szx

#endif  // SZX_INDICES_HPP
