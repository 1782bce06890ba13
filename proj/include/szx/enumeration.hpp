#ifndef SZX_ENUMERATION_HPP
#define SZX_ENUMERATION_HPP

#include <set>
#include <string>
#include <vector>

#include "szx/constructions.hpp"
#include "szx/graph.hpp"

namespace szx {

enum class EnumMethod { Naive, Structural };

const char* to_string(EnumMethod m);
EnumMethod parse_enum_method(const std::string& name);

// All connected bicyclic graphs of one order, as a deduplicated set of
// canonical graph6 forms. Each form is its own representative.
struct IsoClassSet {
  int n = 0;
  std::set<std::string> forms;

  std::size_t size() const noexcept { return forms.size(); }
  bool contains(const std::string& form) const { return forms.count(form) > 0; }
};

inline constexpr int kNaiveBudgetMin = 4;
inline constexpr int kNaiveBudgetMax = 9;
inline constexpr int kStructuralBudgetMin = 4;
inline constexpr int kStructuralBudgetMax = 12;

// All bicyclic skeleton shapes on at most n vertices, thetas first, each
// exactly once under its normalization (a <= b <= c resp. p <= q).
std::vector<SkeletonShape> skeletons(int n);

// Iterates every (n+1)-subset of the edges of K_n, keeps the connected ones
// and dedups by canonical form. Complete by construction; feasible for
// 4 <= n <= 9. Workers split the subset space by first edge index.
IsoClassSet enumerate_naive(int n, int jobs = 1);

// Skeletons plus all rooted-forest attachments totaling n - s extra
// vertices, deduped by canonical form. Feasible for 4 <= n <= 12.
IsoClassSet enumerate_structural(int n, int jobs = 1);

IsoClassSet enumerate_bicyclic(int n, EnumMethod method, int jobs = 1);

// Rooted tree on `size` vertices as a parent array: vertex 0 is the root
// (parent -1) and every other parent precedes its child.
struct RootedTree {
  std::vector<int> parent;

  int size() const noexcept { return static_cast<int>(parent.size()); }
};

// All rooted trees on `size` vertices up to rooted isomorphism. Memoized.
const std::vector<RootedTree>& rooted_trees(int size);

}  // namespace szx

#endif  // SZX_ENUMERATION_HPP
