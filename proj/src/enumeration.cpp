#include "szx/enumeration.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <utility>

namespace szx {

const char* to_string(EnumMethod m) {
  return m == EnumMethod::Naive ? "naive" : "structural";
}

EnumMethod parse_enum_method(const std::string& name) {
  if (name == "naive") return EnumMethod::Naive;
  if (name == "structural") return EnumMethod::Structural;
  throw std::invalid_argument("unknown enumeration method: " + name);
}

std::vector<SkeletonShape> skeletons(int n) {
  if (n < 4) throw std::invalid_argument("bicyclic skeletons need n >= 4");
  std::vector<SkeletonShape> out;
  for (int a = 1; a + 4 <= n + 1; ++a)
    for (int b = std::max(a, 2); a + 2 * b <= n + 1; ++b)
      for (int c = b; a + b + c <= n + 1; ++c)
        out.push_back(ThetaShape{a, b, c});
  for (int p = 3; 2 * p <= n + 1; ++p)
    for (int q = p; p + q <= n + 1; ++q)
      for (int t = 0; p + q + t <= n + 1; ++t)
        out.push_back(DumbbellShape{p, q, t});
  return out;
}

namespace {

void check_jobs(int jobs) {
  if (jobs < 1) throw std::invalid_argument("jobs must be >= 1");
}

// Enumerates (n+1)-subsets of K_n's edges whose smallest member is e0,
// collecting canonical forms of the connected ones.
struct NaiveWorker {
  int n;
  std::vector<std::pair<int, int>> edge_list;
  std::array<std::uint64_t, 16> adj{};
  std::set<std::string> found;

  void set_edge(int idx, bool on) {
    auto [u, v] = edge_list[idx];
    if (on) {
      adj[u] |= std::uint64_t{1} << v;
      adj[v] |= std::uint64_t{1} << u;
    } else {
      adj[u] &= ~(std::uint64_t{1} << v);
      adj[v] &= ~(std::uint64_t{1} << u);
    }
  }

  void choose(int idx, int left) {
    if (left == 0) {
      if (detail::connected_masks(adj.data(), n))
        found.insert(detail::canonical_graph6(adj.data(), n));
      return;
    }
    if (static_cast<int>(edge_list.size()) - idx < left) return;
    set_edge(idx, true);
    choose(idx + 1, left - 1);
    set_edge(idx, false);
    choose(idx + 1, left);
  }

  void run_slice(int e0, int e1, int want) {
    set_edge(e0, true);
    set_edge(e1, true);
    choose(e1 + 1, want - 2);
    set_edge(e1, false);
    set_edge(e0, false);
  }
};

}  // namespace

IsoClassSet enumerate_naive(int n, int jobs) {
  check_jobs(jobs);
  if (n < kNaiveBudgetMin || n > kNaiveBudgetMax)
    throw BudgetError("naive enumeration supports n = " +
                      std::to_string(kNaiveBudgetMin) + ".." +
                      std::to_string(kNaiveBudgetMax) + ", got n = " +
                      std::to_string(n));

  std::vector<std::pair<int, int>> edge_list;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edge_list.emplace_back(u, v);
  int total = static_cast<int>(edge_list.size());
  int want = n + 1;

  // Slices fix the two smallest edge indices of a subset; workers pull
  // slices off a shared counter. Slice sizes are skewed, so the dynamic
  // dispatch is what keeps the workers busy; the merged result is a set
  // union and does not depend on who processed what.
  std::vector<std::pair<int, int>> slices;
  for (int e0 = 0; e0 + want <= total; ++e0)
    for (int e1 = e0 + 1; e1 + want - 1 <= total; ++e1)
      slices.emplace_back(e0, e1);
  std::atomic<std::size_t> next{0};

  auto run_worker = [&]() {
    NaiveWorker w;
    w.n = n;
    w.edge_list = edge_list;
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= slices.size()) break;
      w.run_slice(slices[i].first, slices[i].second, want);
    }
    return std::move(w.found);
  };

  IsoClassSet result;
  result.n = n;
  if (jobs == 1) {
    result.forms = run_worker();
    return result;
  }
  std::vector<std::set<std::string>> partial(jobs);
  std::vector<std::thread> threads;
  threads.reserve(jobs);
  for (int w = 0; w < jobs; ++w)
    threads.emplace_back([&, w]() { partial[w] = run_worker(); });
  for (auto& t : threads) t.join();
  for (auto& p : partial) result.forms.merge(p);
  return result;
}

const std::vector<RootedTree>& rooted_trees(int size) {
  if (size < 1) throw std::invalid_argument("rooted trees need size >= 1");
  static std::map<int, std::vector<RootedTree>> cache;
  static std::mutex cache_mutex;
  std::lock_guard lock(cache_mutex);

  // Recursive canonical generation: a rooted tree is a root plus a multiset
  // of child subtrees, emitted as a non-increasing sequence of (size, rank)
  // over trees already generated, so each multiset appears exactly once.
  std::function<const std::vector<RootedTree>&(int)> gen =
      [&](int k) -> const std::vector<RootedTree>& {
    auto it = cache.find(k);
    if (it != cache.end()) return it->second;

    std::vector<RootedTree> trees;
    if (k == 1) {
      trees.push_back(RootedTree{{-1}});
    } else {
      // Children chosen with non-increasing (size, rank).
      struct Choice {
        int size;
        int rank;
      };
      std::vector<Choice> children;
      std::function<void(int, int, int)> pick = [&](int remaining, int max_size,
                                                    int max_rank_for_max_size) {
        if (remaining == 0) {
          RootedTree t;
          t.parent.push_back(-1);
          for (const auto& ch : children) {
            const RootedTree& sub = gen(ch.size)[ch.rank];
            int offset = t.size();
            t.parent.push_back(0);  // subtree root hangs off the root
            for (int v = 1; v < sub.size(); ++v)
              t.parent.push_back(sub.parent[v] + offset);
          }
          trees.push_back(std::move(t));
          return;
        }
        for (int s = std::min(remaining, max_size); s >= 1; --s) {
          int rank_cap = (s == max_size)
                             ? max_rank_for_max_size
                             : static_cast<int>(gen(s).size()) - 1;
          for (int r = rank_cap; r >= 0; --r) {
            children.push_back({s, r});
            pick(remaining - s, s, r);
            children.pop_back();
          }
        }
      };
      pick(k - 1, k - 1, static_cast<int>(gen(k - 1).size()) - 1);
    }
    return cache.emplace(k, std::move(trees)).first->second;
  };
  return gen(size);
}

namespace {

// All attachments of rooted forests with `extra` total vertices onto the
// skeleton graph, canonical forms collected into `found`.
void attach_forests(const Graph& skeleton, int extra,
                    std::set<std::string>& found) {
  int s = skeleton.vertex_count();
  int n = s + extra;
  std::array<std::uint64_t, 16> adj{};
  for (int v = 0; v < s; ++v) adj[v] = skeleton.neighbors(v);

  int next_free = s;
  std::function<void(int, int)> assign = [&](int vertex, int remaining) {
    if (vertex == s) {
      if (remaining == 0) found.insert(detail::canonical_graph6(adj.data(), n));
      return;
    }
    for (int k = 0; k <= remaining; ++k) {
      for (const RootedTree& tree : rooted_trees(k + 1)) {
        // Map tree vertex 0 onto the skeleton vertex, the rest onto fresh ids.
        std::array<int, 16> map{};
        map[0] = vertex;
        int base = next_free;
        for (int tv = 1; tv <= k; ++tv) map[tv] = base + tv - 1;
        next_free += k;
        for (int tv = 1; tv <= k; ++tv) {
          int a = map[tree.parent[tv]];
          int b = map[tv];
          adj[a] |= std::uint64_t{1} << b;
          adj[b] |= std::uint64_t{1} << a;
        }
        assign(vertex + 1, remaining - k);
        for (int tv = 1; tv <= k; ++tv) {
          int a = map[tree.parent[tv]];
          int b = map[tv];
          adj[a] &= ~(std::uint64_t{1} << b);
          adj[b] &= ~(std::uint64_t{1} << a);
        }
        next_free -= k;
      }
    }
  };
  assign(0, extra);
}

}  // namespace

IsoClassSet enumerate_structural(int n, int jobs) {
  check_jobs(jobs);
  if (n < kStructuralBudgetMin || n > kStructuralBudgetMax)
    throw BudgetError("structural enumeration supports n = " +
                      std::to_string(kStructuralBudgetMin) + ".." +
                      std::to_string(kStructuralBudgetMax) + ", got n = " +
                      std::to_string(n));

  // Pre-warm the rooted tree cache so worker threads only read it.
  rooted_trees(n - 4 + 1);

  std::vector<Graph> bases;
  for (const SkeletonShape& shape : skeletons(n)) {
    if (const auto* theta = std::get_if<ThetaShape>(&shape)) {
      bases.push_back(build_theta(*theta));
    } else {
      const auto& db = std::get<DumbbellShape>(shape);
      bases.push_back(build_dumbbell(db.p, db.q, db.t));
    }
  }

  auto run_worker = [&](int worker) {
    std::set<std::string> found;
    for (std::size_t i = worker; i < bases.size(); i += jobs)
      attach_forests(bases[i], n - bases[i].vertex_count(), found);
    return found;
  };

  IsoClassSet result;
  result.n = n;
  if (jobs == 1) {
    result.forms = run_worker(0);
    return result;
  }
  std::vector<std::set<std::string>> partial(jobs);
  std::vector<std::thread> threads;
  threads.reserve(jobs);
  for (int w = 0; w < jobs; ++w)
    threads.emplace_back([&, w]() { partial[w] = run_worker(w); });
  for (auto& t : threads) t.join();
  for (auto& p : partial) result.forms.merge(p);
  return result;
}

IsoClassSet enumerate_bicyclic(int n, EnumMethod method, int jobs) {
  return method == EnumMethod::Naive ? enumerate_naive(n, jobs)
                                     : enumerate_structural(n, jobs);
}

}  // namespace szx
