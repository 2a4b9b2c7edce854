#pragma once

#include <map>
#include <optional>
#include <variant>

#include "boxdim/geometry.hpp"
#include "boxdim/graph.hpp"
#include "boxdim/report.hpp"

namespace boxdim {

// Touching representation: vertex -> box, interiors pairwise disjoint,
// boxes intersect exactly for edges.
struct TouchingRep {
  Graph graph;
  int dim = 0;
  std::vector<BoxNd> boxes;  // indexed by vertex id
};

// pass iff no pair overlaps in the interior, Touch <=> edge, and (when
// required) all pairs comparable.
Report verify_touching_rep(const TouchingRep& r, bool require_comparable);

// Restriction to a vertex subset (ids relabeled by rank in `keep`).
TouchingRep sub_rep(const TouchingRep& r, const std::vector<int>& keep);

using CliquePointMap = std::map<Clique, PointNd>;

// Clique-sum-extendable certificate: a touching representation plus a root
// clique whose boxes are pinned to unit shape, and an injective clique-point
// map whose epsilon-cubes meet exactly the clique's boxes on facets.
struct CsRep {
  TouchingRep base;
  Clique root;                      // sorted; may be empty
  std::map<int, int> root_dims;     // root vertex -> its reserved dimension (0-based)
  Rational epsilon;                 // witnessed scale; conditions hold here and at half
  CliquePointMap clique_points;     // every clique of the graph, including {}
};

// Checks (v0)-(v2), clique-point membership, (c1) and (c2) at epsilon and
// epsilon/2, plus the underlying touching representation (comparable when
// `require_comparable`).
Report verify_cs_rep(const CsRep& c, bool require_comparable = true);

// Largest safe epsilon for the certificate's clique cubes, computed by a
// constraint sweep and halved. nullopt (with report) when no positive
// epsilon exists.
std::optional<Rational> max_valid_epsilon(const CsRep& c, Report* why = nullptr);

// Renames vertices: perm[old] = new. Boxes, root, cliques all follow.
CsRep relabel_cs(const CsRep& c, const std::vector<int>& perm);

// Drops the root vertices: the remaining boxes and clique points form an
// empty-rooted certificate of the graph minus the root. Kept vertices are
// relabeled by rank; the mapping old->new is returned through `old_of_new`
// when non-null.
CsRep cs_drop_root(const CsRep& c, std::vector<int>* old_of_new = nullptr);

// Inner set of an envelope representation: a box, or a declared ball that is
// carried as metadata (exact intersection tests only).
using InnerSet = std::variant<BoxNd, Ball>;

// Ordered (inner, outer) pairs: later outer boxes fit fraction-1/s into
// earlier inner sets; thickness bounds pointwise overlap of inner sets.
struct EnvelopeRep {
  Graph graph;
  int dim = 0;
  std::vector<int> order;        // v_1..v_n as vertex ids
  std::vector<InnerSet> inner;   // indexed by vertex id
  std::vector<BoxNd> outer;      // indexed by vertex id
  long s = 1;
  long t = 1;
};

// Containment, the ordered fit condition, the edge-intersection condition,
// and exact thickness. Ball inner sets skip the fit/thickness checks and are
// flagged as declared.
Report verify_envelope_rep(const EnvelopeRep& e);

// (f, f) with the non-increasing volume order, s = 1 and exact thickness.
// Pre: r verified comparable.
EnvelopeRep envelope_from_boxes(const TouchingRep& r);

// Exact maximum number of boxes sharing a point.
int max_point_overlap(const std::vector<BoxNd>& boxes);

// Volume order used throughout: non-increasing volume, ties by vertex id.
std::vector<int> volume_order(const TouchingRep& r);

}  // namespace boxdim
