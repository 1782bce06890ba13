#include "szx/graph.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <stdexcept>

namespace szx {

namespace {

std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

std::uint64_t full_mask(int n) {
  return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

int pop_lowest(std::uint64_t& mask) {
  int v = std::countr_zero(mask);
  mask &= mask - 1;
  return v;
}

}  // namespace

Graph::Graph(int n) : n_(n), adj_(static_cast<std::size_t>(std::max(n, 0))) {
  if (n < 0 || n > kMaxVertices)
    throw std::invalid_argument("vertex count must be between 0 and " +
                                std::to_string(kMaxVertices));
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_)
    throw std::invalid_argument("vertex " + std::to_string(v) +
                                " out of range for graph on " +
                                std::to_string(n_) + " vertices");
}

bool Graph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return (adj_[u] >> v) & 1;
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("self-loops are not allowed");
  if ((adj_[u] >> v) & 1)
    throw std::invalid_argument("parallel edge " + std::to_string(u) + "-" +
                                std::to_string(v));
  adj_[u] |= bit(v);
  adj_[v] |= bit(u);
  ++m_;
}

std::uint64_t Graph::neighbors(int v) const {
  check_vertex(v);
  return adj_[v];
}

int Graph::degree(int v) const {
  check_vertex(v);
  return std::popcount(adj_[v]);
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(m_);
  for (int u = 0; u < n_; ++u) {
    std::uint64_t higher = adj_[u] & ~(full_mask(std::min(u + 1, 64)));
    while (higher) out.emplace_back(u, pop_lowest(higher));
  }
  return out;
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
  int n = g.vertex_count();
  if (static_cast<int>(perm.size()) != n)
    throw std::invalid_argument("permutation size mismatch");
  Graph out(n);
  for (auto [u, v] : g.edges()) out.add_edge(perm[u], perm[v]);
  return out;
}

DistanceMatrix::DistanceMatrix(int n, std::vector<int> data)
    : n_(n), data_(std::move(data)) {
  if (data_.size() != static_cast<std::size_t>(n) * n)
    throw std::invalid_argument("distance matrix size mismatch");
}

std::vector<int> bfs_distances(const Graph& g, int source) {
  int n = g.vertex_count();
  if (source < 0 || source >= n)
    throw std::invalid_argument("BFS source out of range");
  std::vector<int> dist(n, kUnreachable);
  dist[source] = 0;
  std::uint64_t seen = bit(source);
  std::uint64_t frontier = seen;
  int d = 0;
  while (frontier) {
    std::uint64_t next = 0;
    for (std::uint64_t f = frontier; f;) next |= g.neighbors(pop_lowest(f));
    next &= ~seen;
    ++d;
    for (std::uint64_t f = next; f;) dist[pop_lowest(f)] = d;
    seen |= next;
    frontier = next;
  }
  return dist;
}

DistanceMatrix all_pairs_distances(const Graph& g) {
  int n = g.vertex_count();
  std::vector<int> data;
  data.reserve(static_cast<std::size_t>(n) * n);
  for (int v = 0; v < n; ++v) {
    auto row = bfs_distances(g, v);
    data.insert(data.end(), row.begin(), row.end());
  }
  return DistanceMatrix(n, std::move(data));
}

bool is_connected(const Graph& g) {
  int n = g.vertex_count();
  if (n <= 1) return true;
  std::uint64_t seen = 1, frontier = 1;
  while (frontier) {
    std::uint64_t next = 0;
    for (std::uint64_t f = frontier; f;) next |= g.neighbors(pop_lowest(f));
    frontier = next & ~seen;
    seen |= frontier;
  }
  return seen == full_mask(n);
}

std::vector<int> cut_vertices(const Graph& g) {
  if (!is_connected(g)) throw std::invalid_argument("graph is not connected");
  int n = g.vertex_count();
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<bool> is_cut(n, false);
  int timer = 0;

  std::function<void(int, int)> dfs = [&](int u, int parent) {
    disc[u] = low[u] = timer++;
    int children = 0;
    std::uint64_t nbrs = g.neighbors(u);
    while (nbrs) {
      int v = pop_lowest(nbrs);
      if (disc[v] < 0) {
        ++children;
        dfs(v, u);
        low[u] = std::min(low[u], low[v]);
        if (parent >= 0 && low[v] >= disc[u]) is_cut[u] = true;
      } else if (v != parent) {
        low[u] = std::min(low[u], disc[v]);
      }
    }
    if (parent < 0 && children > 1) is_cut[u] = true;
  };
  if (n > 0) dfs(0, -1);

  std::vector<int> out;
  for (int v = 0; v < n; ++v)
    if (is_cut[v]) out.push_back(v);
  return out;
}

int min_degree(const Graph& g) {
  int n = g.vertex_count();
  if (n == 0) throw std::invalid_argument("empty graph has no minimum degree");
  int d = n;
  for (int v = 0; v < n; ++v) d = std::min(d, g.degree(v));
  return d;
}

const char* to_string(BicyclicClass::Kind kind) {
  switch (kind) {
    case BicyclicClass::Kind::Pendant: return "pendant";
    case BicyclicClass::Kind::CutVertex: return "cut-vertex";
    case BicyclicClass::Kind::Theta: return "theta";
  }
  return "?";
}

BicyclicClass classify_bicyclic(const Graph& g) {
  int n = g.vertex_count();
  if (g.edge_count() != n + 1)
    throw std::invalid_argument("not bicyclic: m != n+1");
  if (!is_connected(g)) throw std::invalid_argument("not bicyclic: graph is disconnected");

  BicyclicClass cls;
  for (int v = 0; v < n; ++v) {
    if (g.degree(v) == 1) {
      cls.kind = BicyclicClass::Kind::Pendant;
      cls.witness = v;
      return cls;
    }
  }

  auto cuts = cut_vertices(g);
  if (!cuts.empty()) {
    cls.kind = BicyclicClass::Kind::CutVertex;
    cls.witness = cuts.front();
    return cls;
  }

  // 2-connected bicyclic: a theta graph with exactly two degree-3 hubs.
  cls.kind = BicyclicClass::Kind::Theta;
  cls.hub_x = cls.hub_y = -1;
  for (int v = 0; v < n; ++v) {
    if (g.degree(v) == 3) {
      if (cls.hub_x < 0)
        cls.hub_x = v;
      else if (cls.hub_y < 0)
        cls.hub_y = v;
      else
        throw std::invalid_argument("not bicyclic: more than two degree-3 vertices");
    } else if (g.degree(v) != 2) {
      throw std::invalid_argument("not bicyclic: unexpected degree in 2-connected case");
    }
  }
  if (cls.hub_y < 0)
    throw std::invalid_argument("not bicyclic: missing theta hubs");

  // Walk the three degree-2 chains out of hub_x; each must end at hub_y.
  int k = 0;
  std::uint64_t nbrs = g.neighbors(cls.hub_x);
  while (nbrs) {
    int prev = cls.hub_x;
    int cur = pop_lowest(nbrs);
    int len = 1;
    while (cur != cls.hub_y) {
      std::uint64_t step = g.neighbors(cur) & ~bit(prev);
      prev = cur;
      cur = std::countr_zero(step);
      ++len;
    }
    cls.path_lengths[k++] = len;
  }
  std::sort(cls.path_lengths.begin(), cls.path_lengths.end());
  return cls;
}

int shortest_cycle_through_edge(const Graph& g, int u, int v) {
  if (!g.has_edge(u, v))
    throw std::invalid_argument("edge " + std::to_string(u) + "-" +
                                std::to_string(v) + " not in graph");
  // BFS from u to v in G minus the edge.
  std::uint64_t seen = bit(u), frontier = seen;
  int d = 0;
  while (frontier) {
    std::uint64_t next = 0;
    for (std::uint64_t f = frontier; f;) {
      int w = pop_lowest(f);
      std::uint64_t nb = g.neighbors(w);
      if (w == u) nb &= ~bit(v);
      if (w == v) nb &= ~bit(u);
      next |= nb;
    }
    next &= ~seen;
    ++d;
    if (next & bit(v)) return d + 1;
    seen |= next;
    frontier = next;
  }
  throw std::invalid_argument("edge " + std::to_string(u) + "-" +
                              std::to_string(v) +
                              " is a bridge: no cycle contains it");
}

namespace {

// Packs the upper-triangle bits produced by `next_bit` into graph6 bytes.
std::string pack_graph6(int n, const std::function<int()>& next_bit) {
  std::string out;
  out += static_cast<char>(n + 63);
  int total = n * (n - 1) / 2;
  int acc = 0, filled = 0;
  for (int i = 0; i < total; ++i) {
    acc = (acc << 1) | next_bit();
    if (++filled == 6) {
      out += static_cast<char>(acc + 63);
      acc = 0;
      filled = 0;
    }
  }
  if (filled) out += static_cast<char>((acc << (6 - filled)) + 63);
  return out;
}

}  // namespace

std::string to_graph6(const Graph& g) {
  int n = g.vertex_count();
  if (n < 1 || n > 62)
    throw std::invalid_argument("graph6 encoding supports 1..62 vertices, got " +
                                std::to_string(n));
  int i = 0, j = 1;
  return pack_graph6(n, [&]() {
    int b = static_cast<int>((g.neighbors(j) >> i) & 1);
    if (++i == j) {
      i = 0;
      ++j;
    }
    return b;
  });
}

Graph from_graph6(std::string_view text) {
  if (text.empty()) throw DecodeError("empty graph6 input", 0);
  int header = static_cast<unsigned char>(text[0]);
  if (header == 126)
    throw DecodeError("extended graph6 size header not supported", 0);
  if (header < 63 || header > 125)
    throw DecodeError("malformed graph6 header byte", 0);
  int n = header - 63;
  if (n < 1) throw DecodeError("graph6 header encodes an empty vertex set", 0);

  int total = n * (n - 1) / 2;
  std::size_t need = static_cast<std::size_t>((total + 5) / 6);
  if (text.size() < 1 + need)
    throw DecodeError("truncated graph6 encoding", text.size());
  if (text.size() > 1 + need)
    throw DecodeError("trailing garbage after graph6 encoding", 1 + need);

  Graph g(n);
  int i = 0, j = 1;
  for (std::size_t byte = 0; byte < need; ++byte) {
    int c = static_cast<unsigned char>(text[1 + byte]);
    if (c < 63 || c > 126)
      throw DecodeError("graph6 data byte out of range", 1 + byte);
    int bits = c - 63;
    for (int k = 5; k >= 0; --k) {
      int b = (bits >> k) & 1;
      if (j >= n) {
        if (b) throw DecodeError("nonzero graph6 padding bits", 1 + byte);
        continue;
      }
      if (b) g.add_edge(i, j);
      if (++i == j) {
        i = 0;
        ++j;
      }
    }
  }
  return g;
}

namespace detail {

bool connected_masks(const std::uint64_t* adj, int n) {
  if (n <= 1) return true;
  std::uint64_t seen = 1, frontier = 1;
  while (frontier) {
    std::uint64_t next = 0;
    for (std::uint64_t f = frontier; f;) next |= adj[pop_lowest(f)];
    frontier = next & ~seen;
    seen |= frontier;
  }
  return seen == full_mask(n);
}

namespace {

// Branch-and-bound over vertex orderings. The objective string is the
// upper-triangle bit string in graph6 column order; choosing the vertex at
// depth d appends one column of d bits, packed MSB-first into an int so
// lexicographic comparison is integer comparison. Column values of unplaced
// vertices are maintained incrementally as the ordering grows.
struct CanonSearch {
  const std::uint64_t* adj;
  int n;
  std::uint64_t used = 0;
  std::array<std::uint32_t, 16> cols{};       // column value per unplaced vertex
  std::array<std::uint32_t, 16> twin_mask{};  // vertices interchangeable with v
  std::array<std::uint32_t, 16> cur_cols{};
  std::array<std::uint32_t, 16> best_cols{};
  bool have_best = false;

  void init_twins() {
    for (int u = 0; u < n; ++u)
      for (int w = u + 1; w < n; ++w) {
        std::uint64_t drop = ~(std::uint64_t{1} << u) & ~(std::uint64_t{1} << w);
        if ((adj[u] & drop) == (adj[w] & drop)) {
          twin_mask[u] |= std::uint32_t{1} << w;
          twin_mask[w] |= std::uint32_t{1} << u;
        }
      }
  }

  // eq: the current prefix equals best's prefix (when a best exists).
  void search(int depth, bool eq) {
    if (depth == n) {
      best_cols = cur_cols;
      have_best = true;
      return;
    }
    struct Cand {
      std::uint32_t col;
      int w;
    };
    std::array<Cand, 16> cands;
    int count = 0;
    std::uint64_t unplaced = full_mask(n) & ~used;
    for (std::uint64_t rest = unplaced; rest;) {
      int w = pop_lowest(rest);
      cands[count++] = {cols[w], w};
    }
    std::sort(cands.begin(), cands.begin() + count,
              [](const Cand& a, const Cand& b) {
                return a.col != b.col ? a.col < b.col : a.w < b.w;
              });

    std::uint32_t tried = 0;
    bool first = true;
    for (int idx = 0; idx < count; ++idx) {
      auto [col, w] = cands[idx];
      if (twin_mask[w] & tried) continue;

      bool child_eq = false;
      if (have_best && (eq || !first)) {
        if (col > best_cols[depth]) break;  // candidates sorted ascending
        child_eq = col == best_cols[depth];
      }
      cur_cols[depth] = col;
      used |= std::uint64_t{1} << w;
      std::uint64_t others = unplaced & ~(std::uint64_t{1} << w);
      for (std::uint64_t rest = others; rest;) {
        int x = pop_lowest(rest);
        cols[x] = (cols[x] << 1) |
                  static_cast<std::uint32_t>((adj[w] >> x) & 1);
      }
      search(depth + 1, child_eq);
      for (std::uint64_t rest = others; rest;) cols[pop_lowest(rest)] >>= 1;
      used &= ~(std::uint64_t{1} << w);
      tried |= std::uint32_t{1} << w;
      first = false;
    }
  }
};

}  // namespace

std::string canonical_graph6(const std::uint64_t* adj, int n) {
  if (n < 1 || n > 16)
    throw std::invalid_argument("canonical_form supports 1..16 vertices, got " +
                                std::to_string(n));
  CanonSearch s{adj, n};
  s.init_twins();
  s.search(0, false);

  int i = 0, j = 1;
  return pack_graph6(n, [&]() {
    int b = static_cast<int>((s.best_cols[j] >> (j - 1 - i)) & 1);
    if (++i == j) {
      i = 0;
      ++j;
    }
    return b;
  });
}

}  // namespace detail

std::string canonical_form(const Graph& g) {
  int n = g.vertex_count();
  std::array<std::uint64_t, 16> adj{};
  if (n < 1 || n > 16)
    throw std::invalid_argument("canonical_form supports 1..16 vertices, got " +
                                std::to_string(n));
  for (int v = 0; v < n; ++v) adj[v] = g.neighbors(v);
  return detail::canonical_graph6(adj.data(), n);
}

}  // namespace szx
