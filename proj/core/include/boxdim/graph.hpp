#pragma once

#include <map>
#include <string>
#include <vector>

#include "boxdim/report.hpp"

namespace boxdim {

// Finite simple graph on vertex ids 0..n-1.
class Graph {
 public:
  Graph() : n_(0) {}
  explicit Graph(int n);
  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return m_; }
  bool has_edge(int u, int v) const;
  void add_edge(int u, int v);  // rejects loops; duplicate adds are no-ops
  const std::vector<int>& neighbors(int v) const;
  std::vector<std::pair<int, int>> edges() const;  // sorted, u < v

  bool operator==(const Graph& o) const;

 private:
  int n_ = 0;
  int m_ = 0;
  std::vector<std::vector<bool>> adj_;
  std::vector<std::vector<int>> adj_list_;
};

// Sorted vertex set, pairwise adjacent in its host graph. The empty clique
// is allowed (it serves as a root clique).
using Clique = std::vector<int>;

bool is_clique(const Graph& g, const Clique& c);

// All cliques including the empty one, in lexicographic order of the sorted
// vertex vectors. Throws if the count would exceed `cap` (0 = use the
// BOXDIM_CLIQUE_CAP environment variable, default 1<<20).
std::vector<Clique> enumerate_cliques(const Graph& g, size_t cap = 0);

// Exact clique number by branch and bound.
int max_clique_size(const Graph& g);

enum class ColoringKind { Proper, Star };

struct Coloring {
  std::vector<int> colors;  // vertex -> color, colors start at 1
  ColoringKind kind = ColoringKind::Proper;

  int color_count() const;
};

// The greedy rule scans pairs j < i and forbids c(v_j) when v_j v_i is an
// edge or some v_m with m > j is adjacent to both. `AnyLater` takes m > j
// literally (the default); `Between` restricts to j < m < i.
enum class StarGreedyRule { AnyLater, Between };

Coloring greedy_star_coloring(const Graph& g, const std::vector<int>& order,
                              StarGreedyRule rule = StarGreedyRule::AnyLater);
Coloring greedy_proper_coloring(const Graph& g, const std::vector<int>& order);

// Proper: adjacent vertices differ. Star: additionally no bicolored path on
// four vertices; violations carry the witness path.
Report verify_coloring(const Graph& g, const Coloring& c);

// Rooted tree of bags. parent[x] == -1 marks the root.
struct TreeDecomp {
  std::vector<int> parent;
  std::vector<std::vector<int>> bags;  // each bag sorted

  int node_count() const { return static_cast<int>(parent.size()); }
};

// Checks both tree-decomposition axioms for g restricted to `present`
// (nullptr = all vertices). Vertices outside `present` must not appear in
// any bag; vertices inside must appear and induce a connected subtree.
Report verify_tree_decomposition(const Graph& g, const TreeDecomp& td,
                                 const std::vector<bool>* present = nullptr);

int width(const TreeDecomp& td);  // max bag size - 1

struct KTreeStep {
  Clique clique;  // existing k-clique to attach to
  int vertex;     // the new vertex id
};

// Replaying base (a clique of size <= k+1) and then the steps yields a
// k-tree.
struct KTreeBuildPlan {
  int k = 0;
  std::vector<int> base;
  std::vector<KTreeStep> steps;
};

// Replays the plan, validating each attachment set is a k-clique.
Graph ktree_realize(const KTreeBuildPlan& plan);

// Completes g into a k-tree T with a root clique of k fresh vertices
// (ids n..n+k-1) such that g is a subgraph of T minus the root.
struct KTreeEmbedding {
  KTreeBuildPlan plan;  // realizes T
  Clique root;          // the fresh root clique
  Graph supergraph;     // T itself
};
KTreeEmbedding ktree_embed(const Graph& g, const TreeDecomp& td);

// Exact treewidth by elimination-order dynamic programming; capped at
// n <= 12 (test oracle scale).
int exact_treewidth(const Graph& g);

Graph induced_subgraph(const Graph& g, const std::vector<int>& keep);

}  // namespace boxdim
