#pragma once

#include <string>

#include "boxdim/representation.hpp"

namespace boxdim {

// Adds an apex vertex (id n) adjacent to `neighbors`, raising the dimension
// by one. Pre: r verified comparable.
TouchingRep apex_add(const TouchingRep& r, const std::vector<int>& neighbors);

// Left factor: any comparable representation. Right factor: unit hypercubes.
struct ProductPlan {
  TouchingRep left;
  TouchingRep right;
};

// Strong product graph on ids (u, v) -> u * |V(H)| + v.
Graph strong_product_graph(const Graph& g, const Graph& h);

// Product representation of the strong product, dimension d_G + d_H.
TouchingRep strong_product(const ProductPlan& plan);

// Path on unit intervals [i, i+1]; clique on m corner hypercubes with sides
// from {[-1,0],[0,1]} in dimension max(1, ceil(log2 m)).
TouchingRep unit_rep_path(int n);
TouchingRep unit_rep_clique(int m);

// K_{2n} minus a perfect matching by 2n unit hypercubes in R^n. Vertex
// (i, sigma) has id 2i + sigma; the matched pair (i,0),(i,1) is non-adjacent.
TouchingRep cocktail_party(int n);

// Representation of the spanning subgraph keeping only E(keep), adding one
// dimension per color pair of the star coloring. Pre: r comparable, star
// valid on r.graph, V(keep) = V(r.graph), E(keep) subset of E(r.graph).
TouchingRep subgraph_extend(const TouchingRep& r, const Graph& keep, const Coloring& star);

// One dimension higher: roots get [0,1], other boxes [0,1/2], points 1/4.
CsRep pad_dimension(const CsRep& c);

// Full clique-sum gluing c2 (via its root clique) onto the clique `glue` of
// c1. `glue` and `root_match` are parallel: glue[i] in c1 is identified with
// root vertex root_match[i] of c2. Result keeps c1's ids; c2's non-root
// vertices are appended in id order, reported through g2_vertex_map.
struct CliqueSumResult {
  CsRep cert;
  std::vector<int> g2_vertex_map;  // c2 id -> result id
};
CliqueSumResult clique_sum(const CsRep& c1, const std::vector<int>& glue,
                           const CsRep& c2, const std::vector<int>& root_match);

// Roots an empty-rooted certificate on a fresh clique of size k =
// root_neighbors.size(); new root ids are appended. root_neighbors[i] lists
// the existing vertices adjacent to the i-th root vertex.
CsRep promote_root(const CsRep& c, const std::vector<std::vector<int>>& root_neighbors);

// Empty-rooted certificate from any comparable representation and a proper
// coloring, adding one dimension per color. The output is fully touching.
CsRep make_cs_extendable(const TouchingRep& r, const Coloring& proper);

// Certificate of the k-tree in R^{k+1}, rooted at the first k base vertices.
// Pre: plan base has exactly k+1 vertices.
CsRep ktree_cs_rep(const KTreeBuildPlan& plan);

// Comparable representation of g in R^{k+1} from a width-k tree
// decomposition: embeds g into a k-tree, builds the certificate, drops the
// fresh root, and shrinks boxes of deleted edges.
TouchingRep treewidth_rep(const Graph& g, const TreeDecomp& td);

// Recipes for clique-sum pipeline leaves.
struct Recipe {
  enum class Kind { Ktree, KtreeGrid, ExtendedKtreeGrid, FromRep };
  Kind kind = Kind::Ktree;
  KTreeBuildPlan plan;                    // ktree variants
  int path_length = 1;                    // grid variants
  std::vector<std::vector<int>> apexes;   // extended: neighbor lists, applied in order
  TouchingRep rep;                        // FromRep
};

// Realizes the node graph and a comparable touching representation.
struct RealizedLeaf {
  Graph graph;
  TouchingRep rep;
};
RealizedLeaf realize_recipe(const Recipe& recipe);

struct CsTreeNode {
  std::string id;
  Recipe recipe;
  Clique root_clique;  // node-local ids; order matches `glue`
  int parent = -1;     // node index, -1 for the tree root
  Clique glue;         // clique in the parent's node-local ids
};

struct CliqueSumTree {
  std::vector<CsTreeNode> nodes;  // parents precede children
};

struct PipelineResult {
  TouchingRep rep;                              // final representation
  std::vector<std::vector<int>> vertex_map;     // node index -> local id -> final id
  std::vector<std::pair<std::string, int>> dims;  // per-node certificate dimensions
};

// Folds the clique-sum tree bottom-up; every intermediate certificate is
// verified. Child certificates are obtained by rooting each leaf on its glue
// clique (direct k-tree certificates where the root matches, otherwise the
// proper-coloring promotion route).
PipelineResult pipeline_clique_sums(const CliqueSumTree& t);

// pipeline_clique_sums followed by a star-coloring subgraph step keeping
// only E(final_edges); final_edges is given in final pipeline ids.
TouchingRep pipeline_minor(const CliqueSumTree& t, const Graph& final_edges);

}  // namespace boxdim
