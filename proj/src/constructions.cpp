#include "szx/constructions.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace szx {

namespace {

void check_theta_shape(int a, int b, int c) {
  if (a < 1 || a > b || b > c)
    throw std::invalid_argument("theta shape requires 1 <= a <= b <= c");
  if (b < 2)
    throw std::invalid_argument(
        "theta shape requires b >= 2 (two length-1 paths would be parallel edges)");
}

}  // namespace

int skeleton_vertex_count(const SkeletonShape& shape) {
  return std::visit([](const auto& s) { return s.vertex_count(); }, shape);
}

Graph build_bn(int n) {
  if (n < 5)
    throw std::invalid_argument(
        "B_n needs n >= 5 so the duplicated vertex keeps the graph simple");
  Graph g(n);
  for (int v = 0; v + 1 < n - 1; ++v) g.add_edge(v, v + 1);
  g.add_edge(n - 2, 0);
  // Duplicate vertex 0: the new vertex picks up both of its cycle neighbors.
  g.add_edge(n - 1, 1);
  g.add_edge(n - 1, n - 2);
  return g;
}

Graph build_theta(const ThetaShape& shape) {
  return build_theta(shape.a, shape.b, shape.c);
}

Graph build_theta(int a, int b, int c) {
  check_theta_shape(a, b, c);
  int n = a + b + c - 1;
  Graph g(n);
  int next = 2;
  for (int len : {a, b, c}) {
    int prev = 0;  // hub x
    for (int step = 1; step < len; ++step) {
      g.add_edge(prev, next);
      prev = next++;
    }
    g.add_edge(prev, 1);  // hub y
  }
  return g;
}

int theta_path_vertex(const ThetaShape& shape, int path, int position) {
  check_theta_shape(shape.a, shape.b, shape.c);
  const int lens[3] = {shape.a, shape.b, shape.c};
  if (path < 0 || path > 2) throw std::invalid_argument("path index must be 0..2");
  int len = lens[path];
  if (position < 0 || position > len)
    throw std::invalid_argument("position must be 0..path length");
  if (position == 0) return 0;
  if (position == len) return 1;
  int base = 2;
  for (int p = 0; p < path; ++p) base += lens[p] - 1;
  return base + position - 1;
}

Graph build_dumbbell(int p, int q, int t) {
  if (p < 3 || q < 3)
    throw std::invalid_argument("dumbbell cycles need length >= 3");
  if (p > q) throw std::invalid_argument("dumbbell shape requires p <= q");
  if (t < 0) throw std::invalid_argument("dumbbell path length must be >= 0");
  int n = p + q + t - 1;
  Graph g(n);
  for (int v = 0; v + 1 < p; ++v) g.add_edge(v, v + 1);
  g.add_edge(p - 1, 0);
  if (t == 0) {
    // Second cycle through the shared junction 0.
    int prev = 0;
    for (int v = p; v < p + q - 1; ++v) {
      g.add_edge(prev, v);
      prev = v;
    }
    g.add_edge(prev, 0);
  } else {
    for (int v = p; v + 1 < p + q; ++v) g.add_edge(v, v + 1);
    g.add_edge(p + q - 1, p);
    // Path of length t from junction 0 to junction p.
    int prev = 0;
    for (int v = p + q; v < n; ++v) {
      g.add_edge(prev, v);
      prev = v;
    }
    g.add_edge(prev, p);
  }
  return g;
}

Graph attach_pendant(const Graph& g, int at) {
  int n = g.vertex_count();
  if (at < 0 || at >= n)
    throw std::invalid_argument("pendant attachment vertex out of range");
  Graph out(n + 1);
  for (auto [u, v] : g.edges()) out.add_edge(u, v);
  out.add_edge(at, n);
  return out;
}

const char* to_string(ThetaEdgeCase c) {
  switch (c) {
    case ThetaEdgeCase::DifferentSets: return "different-sets";
    case ThetaEdgeCase::SameSet: return "same-set";
    case ThetaEdgeCase::HubEquidistant: return "hub-equidistant";
  }
  return "?";
}

namespace {

// Locates edge uv of build_theta(shape): which path it lies on and the edge
// slot 1..L counted from hub x.
struct EdgeLocus {
  int path;
  int slot;
};

EdgeLocus locate_theta_edge(const ThetaShape& shape, int u, int v) {
  const int lens[3] = {shape.a, shape.b, shape.c};
  for (int path = 0; path < 3; ++path) {
    for (int slot = 1; slot <= lens[path]; ++slot) {
      int a = theta_path_vertex(shape, path, slot - 1);
      int b = theta_path_vertex(shape, path, slot);
      if ((a == u && b == v) || (a == v && b == u)) return {path, slot};
    }
  }
  throw std::invalid_argument("edge " + std::to_string(u) + "-" +
                              std::to_string(v) + " not in theta graph");
}

}  // namespace

ThetaEdgeAnalysis analyze_theta_edge(const ThetaShape& shape, int u, int v) {
  Graph g = build_theta(shape);
  auto locus = locate_theta_edge(shape, u, v);
  auto dist = all_pairs_distances(g);
  auto part = edge_partition(g, u, v, dist);

  ThetaEdgeAnalysis out;
  out.u = u;
  out.v = v;
  out.actual = std::abs(part.deviation());
  out.hub_dist_x = std::min(dist.at(0, u), dist.at(0, v));
  out.hub_dist_y = std::min(dist.at(1, u), dist.at(1, v));
  out.cycle_len = shortest_cycle_through_edge(g, u, v);

  const int lens[3] = {shape.a, shape.b, shape.c};
  int len = lens[locus.path];
  out.middle_of_odd_path = (len % 2 == 1) && (locus.slot == (len + 1) / 2);

  auto side = [&](int hub) {
    int du = dist.at(hub, u);
    int dv = dist.at(hub, v);
    return du < dv ? -1 : (dv < du ? 1 : 0);
  };
  int sx = side(0);
  int sy = side(1);
  if (sx == 0 || sy == 0) {
    out.kind = ThetaEdgeCase::HubEquidistant;
    out.predicted = shape.a - 1;
    out.predicted_is_lower_bound = true;
  } else if (sx == sy) {
    out.kind = ThetaEdgeCase::SameSet;
    out.predicted = g.vertex_count() - out.cycle_len;
  } else {
    out.kind = ThetaEdgeCase::DifferentSets;
    out.predicted = std::abs(out.hub_dist_y - out.hub_dist_x);
  }
  return out;
}

std::vector<ThetaEdgeAnalysis> analyze_theta_edges(const ThetaShape& shape) {
  Graph g = build_theta(shape);
  std::vector<ThetaEdgeAnalysis> out;
  out.reserve(g.edge_count());
  for (auto [u, v] : g.edges()) out.push_back(analyze_theta_edge(shape, u, v));
  return out;
}

}  // namespace szx
