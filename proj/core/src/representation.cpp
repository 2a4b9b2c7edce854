#include "boxdim/representation.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace boxdim {

namespace {

std::string pair_str(int u, int v) {
  return std::to_string(u) + "," + std::to_string(v);
}

std::string clique_str(const Clique& c) {
  std::string s = "{";
  for (size_t i = 0; i < c.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(c[i]);
  }
  return s + "}";
}

}  // namespace

Report verify_touching_rep(const TouchingRep& r, bool require_comparable) {
  Report rep;
  int n = r.graph.vertex_count();
  if (static_cast<int>(r.boxes.size()) != n) {
    rep.fail("shape", "box count differs from vertex count");
    return rep;
  }
  for (int v = 0; v < n; ++v)
    if (r.boxes[static_cast<size_t>(v)].dim() != r.dim) {
      rep.fail("shape", "box of vertex " + std::to_string(v) + " has wrong dimension");
      return rep;
    }
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      const BoxNd& a = r.boxes[static_cast<size_t>(u)];
      const BoxNd& b = r.boxes[static_cast<size_t>(v)];
      BoxRelation rel = box_relation(a, b);
      if (rel == BoxRelation::InteriorOverlap)
        rep.fail("interior-overlap", "boxes of " + pair_str(u, v) + " overlap");
      else if (rel == BoxRelation::Touch && !r.graph.has_edge(u, v))
        rep.fail("nonedge-touching", "boxes of non-edge " + pair_str(u, v) + " touch");
      else if (rel == BoxRelation::Disjoint && r.graph.has_edge(u, v))
        rep.fail("edge-not-touching", "boxes of edge " + pair_str(u, v) + " are disjoint");
      if (require_comparable && box_comparable(a, b) == Comparability::Incomparable)
        rep.fail("incomparable", "boxes of " + pair_str(u, v) + " are incomparable");
    }
  }
  return rep;
}

TouchingRep sub_rep(const TouchingRep& r, const std::vector<int>& keep) {
  TouchingRep out;
  out.graph = induced_subgraph(r.graph, keep);
  out.dim = r.dim;
  out.boxes.reserve(keep.size());
  for (int v : keep) out.boxes.push_back(r.boxes.at(static_cast<size_t>(v)));
  return out;
}

namespace {

// Pairwise-disjointness of the cubes [p, p+eps]: sweep along the dimension
// with the widest spread, compare pairs inside an eps window.
bool cubes_pairwise_disjoint(const std::vector<const PointNd*>& pts, int d,
                             const Rational& eps, std::string* witness) {
  size_t m = pts.size();
  if (m < 2) return true;
  int sweep_dim = 0;
  Rational best_range(-1);
  for (int j = 0; j < d; ++j) {
    Rational lo = (*pts[0])[static_cast<size_t>(j)], hi = lo;
    for (size_t i = 1; i < m; ++i) {
      const Rational& x = (*pts[i])[static_cast<size_t>(j)];
      if (x < lo) lo = x;
      if (x > hi) hi = x;
    }
    if (hi - lo > best_range) {
      best_range = hi - lo;
      sweep_dim = j;
    }
  }
  std::vector<size_t> idx(m);
  std::iota(idx.begin(), idx.end(), size_t{0});
  std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
    return (*pts[a])[static_cast<size_t>(sweep_dim)] < (*pts[b])[static_cast<size_t>(sweep_dim)];
  });
  size_t lo_i = 0;
  for (size_t i = 1; i < m; ++i) {
    const PointNd& p = *pts[idx[i]];
    while ((p[static_cast<size_t>(sweep_dim)] -
            (*pts[idx[lo_i]])[static_cast<size_t>(sweep_dim)]) > eps)
      ++lo_i;
    for (size_t w = lo_i; w < i; ++w) {
      const PointNd& q = *pts[idx[w]];
      bool separated = false;
      for (int j = 0; j < d; ++j) {
        Rational diff = p[static_cast<size_t>(j)] - q[static_cast<size_t>(j)];
        if (diff > eps || diff < -eps) {
          separated = true;
          break;
        }
      }
      if (!separated) {
        if (witness) *witness = "cube pair overlaps";
        return false;
      }
    }
  }
  return true;
}

struct FacetCase {
  bool member_ok = false;      // v in C satisfies the case formula shape
  int facet_dim = -1;          // unique point dimension when member_ok
  bool structurally_bad = false;
};

// For v in C: classify against the displayed case formula. `eps_budget`
// collects the smallest positive slack when requested.
FacetCase facet_case(const BoxNd& box, const PointNd& p, Rational* eps_budget) {
  FacetCase fc;
  int touch = -1;
  for (int j = 0; j < box.dim(); ++j) {
    const Rational& pj = p[static_cast<size_t>(j)];
    if (pj < box[j].lo || pj > box[j].hi) {
      fc.structurally_bad = true;  // p not in the box at all
      return fc;
    }
    if (box[j].hi == pj) {
      if (touch != -1) {
        fc.structurally_bad = true;  // two point dims: corner, not a facet
        return fc;
      }
      touch = j;
    } else if (eps_budget) {
      Rational slack = box[j].hi - pj;
      if (*eps_budget < 0 || slack < *eps_budget) *eps_budget = slack;
    }
  }
  if (touch == -1) {
    fc.structurally_bad = true;  // cube would sit inside the box
    return fc;
  }
  fc.member_ok = true;
  fc.facet_dim = touch;
  return fc;
}

// For v not in C: budget before the cube would enter the box. Negative
// result means no separating dimension exists at any positive epsilon;
// the Rational(-1) sentinel encodes +infinity... we use an optional instead.
struct SeparationBudget {
  bool separated_always = false;  // some dim has box strictly below p
  Rational budget = Rational(0); // else: largest lo - p over dims above
};

SeparationBudget separation_budget(const BoxNd& box, const PointNd& p) {
  SeparationBudget sb;
  for (int j = 0; j < box.dim(); ++j) {
    const Rational& pj = p[static_cast<size_t>(j)];
    if (box[j].hi < pj) {
      sb.separated_always = true;
      return sb;
    }
    if (box[j].lo > pj) {
      Rational b = box[j].lo - pj;
      if (b > sb.budget) sb.budget = b;
    }
  }
  return sb;
}

bool cube_box_case_at(const BoxNd& box, const PointNd& p, const Rational& eps,
                      bool member, std::string* why) {
  if (!member) {
    for (int j = 0; j < box.dim(); ++j) {
      const Rational& pj = p[static_cast<size_t>(j)];
      if (box[j].hi < pj || box[j].lo > pj + eps) return true;
    }
    if (why) *why = "box of a non-member intersects the clique cube";
    return false;
  }
  int touch = -1;
  for (int j = 0; j < box.dim(); ++j) {
    const Rational& pj = p[static_cast<size_t>(j)];
    Rational top = pj + eps;
    Rational ilo = std::max(box[j].lo, pj);
    Rational ihi = std::min(box[j].hi, top);
    if (ilo == pj && ihi == top) continue;  // full cube interval
    if (ilo == pj && ihi == pj && touch == -1) {
      touch = j;
      continue;
    }
    if (why) *why = "dimension " + std::to_string(j) + " is neither a facet nor full";
    return false;
  }
  if (touch == -1) {
    if (why) *why = "no facet dimension";
    return false;
  }
  return true;
}

}  // namespace

Report verify_cs_rep(const CsRep& c, bool require_comparable) {
  Report rep = verify_touching_rep(c.base, require_comparable);
  int n = c.base.graph.vertex_count();
  int d = c.base.dim;

  if (!std::is_sorted(c.root.begin(), c.root.end()) ||
      std::adjacent_find(c.root.begin(), c.root.end()) != c.root.end())
    rep.fail("root", "root clique must be a sorted set");
  for (int v : c.root)
    if (v < 0 || v >= n) rep.fail("root", "root vertex out of range");
  if (!rep.ok()) return rep;
  if (!is_clique(c.base.graph, c.root)) rep.fail("root", "root set is not a clique");

  if (sgn(c.epsilon) <= 0) rep.fail("epsilon", "epsilon must be positive");

  // (v0) reserved dimensions are distinct
  std::set<int> used_dims;
  for (int v : c.root) {
    auto it = c.root_dims.find(v);
    if (it == c.root_dims.end()) {
      rep.fail("v0", "root vertex " + std::to_string(v) + " has no reserved dimension");
      continue;
    }
    if (it->second < 0 || it->second >= d)
      rep.fail("v0", "reserved dimension out of range for vertex " + std::to_string(v));
    else if (!used_dims.insert(it->second).second)
      rep.fail("v0", "reserved dimension used twice");
  }
  if (c.root_dims.size() != c.root.size())
    rep.fail("v0", "root_dims does not match the root clique");

  // (v1) root boxes have the pinned unit shape
  std::vector<bool> is_root(static_cast<size_t>(n), false);
  for (int v : c.root) is_root[static_cast<size_t>(v)] = true;
  Rational zero(0), one(1), minus_one(-1);
  for (int v : c.root) {
    auto it = c.root_dims.find(v);
    if (it == c.root_dims.end()) continue;
    const BoxNd& b = c.base.boxes[static_cast<size_t>(v)];
    for (int j = 0; j < d; ++j) {
      const Rational& want_lo = (j == it->second) ? minus_one : zero;
      const Rational& want_hi = (j == it->second) ? zero : one;
      if (b[j].lo != want_lo || b[j].hi != want_hi) {
        rep.fail("v1", "root box of vertex " + std::to_string(v) + " has wrong shape");
        break;
      }
    }
  }

  // (v2) every other box sits inside [0,1)^d
  for (int v = 0; v < n; ++v) {
    if (is_root[static_cast<size_t>(v)]) continue;
    const BoxNd& b = c.base.boxes[static_cast<size_t>(v)];
    for (int j = 0; j < d; ++j) {
      if (b[j].lo < zero || b[j].hi >= one) {
        rep.fail("v2", "box of vertex " + std::to_string(v) + " leaves [0,1)^d");
        break;
      }
    }
  }

  // clique points cover exactly the cliques of the graph
  std::vector<Clique> cliques = enumerate_cliques(c.base.graph);
  {
    std::set<Clique> have;
    for (const auto& [cl, p] : c.clique_points) have.insert(cl);
    for (const auto& cl : cliques)
      if (!have.count(cl)) rep.fail("cliques", "missing point for clique " + clique_str(cl));
    std::set<Clique> want(cliques.begin(), cliques.end());
    for (const auto& [cl, p] : c.clique_points)
      if (!want.count(cl)) rep.fail("cliques", "point for non-clique " + clique_str(cl));
  }
  if (!rep.ok()) return rep;

  // membership: p(C) in [0,1)^d and in every member's box
  for (const auto& [cl, p] : c.clique_points) {
    if (static_cast<int>(p.size()) != d) {
      rep.fail("cliques", "point of " + clique_str(cl) + " has wrong dimension");
      continue;
    }
    for (int j = 0; j < d; ++j)
      if (p[static_cast<size_t>(j)] < zero || p[static_cast<size_t>(j)] >= one) {
        rep.fail("cliques", "point of " + clique_str(cl) + " leaves [0,1)^d");
        break;
      }
    for (int v : cl)
      if (!c.base.boxes[static_cast<size_t>(v)].contains_point(p)) {
        rep.fail("cliques",
                 "point of " + clique_str(cl) + " outside box of member " + std::to_string(v));
        break;
      }
  }
  if (!rep.ok()) return rep;

  // (c1) distinct points, cubes pairwise disjoint at eps and eps/2
  {
    std::vector<const PointNd*> pts;
    std::vector<const Clique*> keys;
    pts.reserve(c.clique_points.size());
    for (const auto& [cl, p] : c.clique_points) {
      pts.push_back(&p);
      keys.push_back(&cl);
    }
    std::vector<size_t> idx(pts.size());
    std::iota(idx.begin(), idx.end(), size_t{0});
    std::sort(idx.begin(), idx.end(),
              [&](size_t a, size_t b) { return *pts[a] < *pts[b]; });
    for (size_t i = 1; i < idx.size(); ++i)
      if (*pts[idx[i - 1]] == *pts[idx[i]])
        rep.fail("c1", "cliques " + clique_str(*keys[idx[i - 1]]) + " and " +
                           clique_str(*keys[idx[i]]) + " share a point");
    if (rep.ok()) {
      std::string w;
      if (!cubes_pairwise_disjoint(pts, d, c.epsilon, &w)) rep.fail("c1", w + " at epsilon");
      if (!cubes_pairwise_disjoint(pts, d, c.epsilon / 2, &w))
        rep.fail("c1", w + " at epsilon/2");
    }
  }

  // (c2) the facet case analysis, verbatim, at eps and eps/2
  std::vector<bool> member(static_cast<size_t>(n));
  for (const auto& [cl, p] : c.clique_points) {
    std::fill(member.begin(), member.end(), false);
    for (int v : cl) member[static_cast<size_t>(v)] = true;
    for (int v = 0; v < n; ++v) {
      const BoxNd& b = c.base.boxes[static_cast<size_t>(v)];
      std::string why;
      if (!cube_box_case_at(b, p, c.epsilon, member[static_cast<size_t>(v)], &why)) {
        rep.fail("c2", "clique " + clique_str(cl) + ", vertex " + std::to_string(v) +
                           " at epsilon: " + why);
        if (rep.violations.size() > 64) return rep;
        continue;
      }
      if (!cube_box_case_at(b, p, c.epsilon / 2, member[static_cast<size_t>(v)], &why)) {
        rep.fail("c2", "clique " + clique_str(cl) + ", vertex " + std::to_string(v) +
                           " at epsilon/2: " + why);
        if (rep.violations.size() > 64) return rep;
      }
    }
  }
  return rep;
}

std::optional<Rational> max_valid_epsilon(const CsRep& c, Report* why) {
  Report local;
  Report& rep = why ? *why : local;
  int n = c.base.graph.vertex_count();
  int d = c.base.dim;

  std::vector<bool> member(static_cast<size_t>(n));
  Rational budget(-1);  // -1 = unbounded so far
  auto tighten = [&budget](const Rational& b) {
    if (budget < 0 || b < budget) budget = b;
  };

  for (const auto& [cl, p] : c.clique_points) {
    if (static_cast<int>(p.size()) != d) {
      rep.fail("structure", "point of " + clique_str(cl) + " has wrong dimension");
      return std::nullopt;
    }
    std::fill(member.begin(), member.end(), false);
    for (int v : cl) member[static_cast<size_t>(v)] = true;
    for (int v = 0; v < n; ++v) {
      const BoxNd& b = c.base.boxes[static_cast<size_t>(v)];
      if (member[static_cast<size_t>(v)]) {
        Rational slack(-1);
        FacetCase fc = facet_case(b, p, &slack);
        if (fc.structurally_bad) {
          rep.fail("structure", "clique " + clique_str(cl) + ", member " +
                                    std::to_string(v) + ": no single facet dimension");
          return std::nullopt;
        }
        if (slack >= 0) tighten(slack);
      } else {
        SeparationBudget sb = separation_budget(b, p);
        if (!sb.separated_always) {
          if (sgn(sb.budget) <= 0) {
            rep.fail("structure", "clique " + clique_str(cl) + " point not separable from vertex " +
                                      std::to_string(v));
            return std::nullopt;
          }
          tighten(sb.budget);
        }
      }
    }
  }

  // point distinctness, then shrink until the cubes separate
  std::vector<const PointNd*> pts;
  pts.reserve(c.clique_points.size());
  for (const auto& [cl, p] : c.clique_points) pts.push_back(&p);
  {
    std::vector<size_t> idx(pts.size());
    std::iota(idx.begin(), idx.end(), size_t{0});
    std::sort(idx.begin(), idx.end(),
              [&](size_t a, size_t b) { return *pts[a] < *pts[b]; });
    for (size_t i = 1; i < idx.size(); ++i)
      if (*pts[idx[i - 1]] == *pts[idx[i]]) {
        rep.fail("structure", "duplicate clique points");
        return std::nullopt;
      }
  }

  if (budget < 0) budget = Rational(1);  // no box constraints at all
  Rational eps = budget / 2;
  for (int rounds = 0; rounds < 4096; ++rounds) {
    if (cubes_pairwise_disjoint(pts, d, eps, nullptr)) return eps;
    eps /= 2;
  }
  rep.fail("structure", "could not separate clique cubes");
  return std::nullopt;
}

CsRep relabel_cs(const CsRep& c, const std::vector<int>& perm) {
  int n = c.base.graph.vertex_count();
  if (static_cast<int>(perm.size()) != n)
    throw std::invalid_argument("relabel_cs: permutation size mismatch");
  CsRep out;
  out.base.dim = c.base.dim;
  out.base.graph = Graph(n);
  for (auto [u, v] : c.base.graph.edges())
    out.base.graph.add_edge(perm[static_cast<size_t>(u)], perm[static_cast<size_t>(v)]);
  std::vector<int> inv(static_cast<size_t>(n), -1);
  for (int v = 0; v < n; ++v) {
    int nv = perm[static_cast<size_t>(v)];
    if (nv < 0 || nv >= n || inv[static_cast<size_t>(nv)] != -1)
      throw std::invalid_argument("relabel_cs: not a permutation");
    inv[static_cast<size_t>(nv)] = v;
  }
  out.base.boxes.reserve(static_cast<size_t>(n));
  for (int nv = 0; nv < n; ++nv)
    out.base.boxes.push_back(c.base.boxes[static_cast<size_t>(inv[static_cast<size_t>(nv)])]);
  for (int v : c.root) out.root.push_back(perm[static_cast<size_t>(v)]);
  std::sort(out.root.begin(), out.root.end());
  for (const auto& [v, dim] : c.root_dims) out.root_dims[perm[static_cast<size_t>(v)]] = dim;
  out.epsilon = c.epsilon;
  for (const auto& [cl, p] : c.clique_points) {
    Clique mapped;
    mapped.reserve(cl.size());
    for (int v : cl) mapped.push_back(perm[static_cast<size_t>(v)]);
    std::sort(mapped.begin(), mapped.end());
    out.clique_points.emplace(std::move(mapped), p);
  }
  return out;
}

CsRep cs_drop_root(const CsRep& c, std::vector<int>* old_of_new) {
  int n = c.base.graph.vertex_count();
  std::vector<bool> is_root(static_cast<size_t>(n), false);
  for (int v : c.root) is_root[static_cast<size_t>(v)] = true;
  std::vector<int> keep;
  std::vector<int> new_id(static_cast<size_t>(n), -1);
  for (int v = 0; v < n; ++v)
    if (!is_root[static_cast<size_t>(v)]) {
      new_id[static_cast<size_t>(v)] = static_cast<int>(keep.size());
      keep.push_back(v);
    }
  CsRep out;
  out.base = sub_rep(c.base, keep);
  out.epsilon = c.epsilon;
  for (const auto& [cl, p] : c.clique_points) {
    bool inside = true;
    for (int v : cl)
      if (is_root[static_cast<size_t>(v)]) {
        inside = false;
        break;
      }
    if (!inside) continue;
    Clique mapped;
    mapped.reserve(cl.size());
    for (int v : cl) mapped.push_back(new_id[static_cast<size_t>(v)]);
    out.clique_points.emplace(std::move(mapped), p);
  }
  if (old_of_new) *old_of_new = keep;
  return out;
}

std::vector<int> volume_order(const TouchingRep& r) {
  int n = r.graph.vertex_count();
  std::vector<Rational> vol;
  vol.reserve(static_cast<size_t>(n));
  for (int v = 0; v < n; ++v) vol.push_back(volume(r.boxes[static_cast<size_t>(v)]));
  std::vector<int> order(static_cast<size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    int cmp_result = cmp(vol[static_cast<size_t>(a)], vol[static_cast<size_t>(b)]);
    if (cmp_result != 0) return cmp_result > 0;  // larger volume first
    return a < b;
  });
  return order;
}

namespace {

int max_overlap_rec(const std::vector<const BoxNd*>& boxes, const std::vector<size_t>& idx,
                    int j, int d) {
  if (j == d) return static_cast<int>(idx.size());
  std::vector<Rational> candidates;
  candidates.reserve(idx.size());
  for (size_t i : idx) candidates.push_back((*boxes[i])[j].lo);
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  int best = 0;
  for (const Rational& c : candidates) {
    std::vector<size_t> next;
    for (size_t i : idx)
      if ((*boxes[i])[j].contains(c)) next.push_back(i);
    if (static_cast<int>(next.size()) <= best) continue;
    best = std::max(best, max_overlap_rec(boxes, next, j + 1, d));
  }
  return best;
}

}  // namespace

int max_point_overlap(const std::vector<BoxNd>& boxes) {
  if (boxes.empty()) return 0;
  int d = boxes[0].dim();
  std::vector<const BoxNd*> ptrs;
  ptrs.reserve(boxes.size());
  for (const auto& b : boxes) ptrs.push_back(&b);
  std::vector<size_t> idx(boxes.size());
  std::iota(idx.begin(), idx.end(), size_t{0});
  return max_overlap_rec(ptrs, idx, 0, d);
}

EnvelopeRep envelope_from_boxes(const TouchingRep& r) {
  Report rep = verify_touching_rep(r, true);
  if (!rep.ok())
    throw std::invalid_argument("envelope_from_boxes: representation not comparable: " +
                                rep.summary());
  EnvelopeRep e;
  e.graph = r.graph;
  e.dim = r.dim;
  e.order = volume_order(r);
  e.inner.reserve(r.boxes.size());
  for (const auto& b : r.boxes) e.inner.emplace_back(b);
  e.outer = r.boxes;
  e.s = 1;
  e.t = max_point_overlap(r.boxes);
  if (r.graph.vertex_count() > 0 && e.t == 0) e.t = 1;
  return e;
}

Report verify_envelope_rep(const EnvelopeRep& e) {
  Report rep;
  int n = e.graph.vertex_count();
  if (static_cast<int>(e.order.size()) != n ||
      static_cast<int>(e.inner.size()) != n || static_cast<int>(e.outer.size()) != n) {
    rep.fail("shape", "order/inner/outer must cover all vertices");
    return rep;
  }
  {
    std::vector<bool> seen(static_cast<size_t>(n), false);
    for (int v : e.order) {
      if (v < 0 || v >= n || seen[static_cast<size_t>(v)]) {
        rep.fail("shape", "order is not a permutation");
        return rep;
      }
      seen[static_cast<size_t>(v)] = true;
    }
  }
  if (e.s < 1) rep.fail("shape", "s must be a positive integer");
  if (e.t < 1) rep.fail("shape", "t must be a positive integer");

  bool has_ball = false;
  for (int v = 0; v < n; ++v) {
    const BoxNd& out = e.outer[static_cast<size_t>(v)];
    if (out.dim() != e.dim) {
      rep.fail("shape", "outer box of " + std::to_string(v) + " has wrong dimension");
      return rep;
    }
    if (const BoxNd* ib = std::get_if<BoxNd>(&e.inner[static_cast<size_t>(v)])) {
      if (ib->dim() != e.dim) {
        rep.fail("shape", "inner box of " + std::to_string(v) + " has wrong dimension");
        return rep;
      }
      if (!out.contains_box(*ib))
        rep.fail("containment", "inner set of " + std::to_string(v) + " leaves its outer box");
    } else {
      has_ball = true;
      const Ball& ball = std::get<Ball>(e.inner[static_cast<size_t>(v)]);
      if (sgn(ball.radius2) <= 0)
        rep.fail("shape", "inner ball of " + std::to_string(v) + " must have positive radius");
      else if (!ball_inside_box(ball, out))
        rep.fail("containment", "inner ball of " + std::to_string(v) + " leaves its outer box");
    }
  }

  if (has_ball)
    rep.note("ball inner sets present: fit condition and thickness are declared, unverified");

  for (int i = 0; i < n; ++i) {
    int vi = e.order[static_cast<size_t>(i)];
    const BoxNd* inner_i = std::get_if<BoxNd>(&e.inner[static_cast<size_t>(vi)]);
    const Ball* ball_i =
        inner_i ? nullptr : &std::get<Ball>(e.inner[static_cast<size_t>(vi)]);
    for (int j = i + 1; j < n; ++j) {
      int vj = e.order[static_cast<size_t>(j)];
      const BoxNd& outer_j = e.outer[static_cast<size_t>(vj)];
      if (inner_i && !box_sqsubseteq_s(outer_j, *inner_i, e.s))
        rep.fail("fit", "outer box of " + std::to_string(vj) +
                            " does not s-fit into inner of " + std::to_string(vi));
      if (e.graph.has_edge(vi, vj)) {
        bool meets = inner_i ? box_intersection(outer_j, *inner_i).has_value()
                             : ball_intersects_box(*ball_i, outer_j);
        if (!meets)
          rep.fail("edge-miss", "edge " + pair_str(vi, vj) +
                                    ": outer of the later vertex misses the earlier inner set");
      }
    }
  }

  if (!has_ball) {
    std::vector<BoxNd> inner_boxes;
    inner_boxes.reserve(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v)
      inner_boxes.push_back(std::get<BoxNd>(e.inner[static_cast<size_t>(v)]));
    int thickness = max_point_overlap(inner_boxes);
    if (thickness > e.t)
      rep.fail("thickness", "observed thickness " + std::to_string(thickness) +
                                " exceeds declared t=" + std::to_string(e.t));
  }
  return rep;
}

}  // namespace boxdim
