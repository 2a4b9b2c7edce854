#include "boxdim/construct.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace boxdim {

namespace {

void require_verified(const TouchingRep& r, bool comparable, const char* who) {
  Report rep = verify_touching_rep(r, comparable);
  if (!rep.ok())
    throw std::invalid_argument(std::string(who) + ": input representation invalid:\n" +
                                rep.summary());
}

Rational abs_max_coordinate(const TouchingRep& r) {
  Rational m(0);
  for (const auto& b : r.boxes)
    for (const auto& s : b.sides) {
      Rational lo = abs(s.lo), hi = abs(s.hi);
      if (lo > m) m = lo;
      if (hi > m) m = hi;
    }
  return m;
}

}  // namespace

TouchingRep apex_add(const TouchingRep& r, const std::vector<int>& neighbors) {
  require_verified(r, true, "apex_add");
  int n = r.graph.vertex_count();
  std::vector<bool> is_nb(static_cast<size_t>(n), false);
  for (int v : neighbors) {
    if (v < 0 || v >= n) throw std::invalid_argument("apex_add: neighbor out of range");
    is_nb[static_cast<size_t>(v)] = true;
  }
  Rational m = abs_max_coordinate(r) + 1;

  TouchingRep out;
  out.dim = r.dim + 1;
  out.graph = Graph(n + 1);
  for (auto [u, v] : r.graph.edges()) out.graph.add_edge(u, v);
  for (int v = 0; v < n; ++v)
    if (is_nb[static_cast<size_t>(v)]) out.graph.add_edge(v, n);

  out.boxes.reserve(static_cast<size_t>(n + 1));
  for (int v = 0; v < n; ++v) {
    std::vector<Interval> sides;
    sides.reserve(static_cast<size_t>(out.dim));
    if (is_nb[static_cast<size_t>(v)])
      sides.emplace_back(Rational(0), Rational(1));
    else
      sides.emplace_back(make_rational(1, 2), make_rational(3, 2));
    for (const auto& s : r.boxes[static_cast<size_t>(v)].sides) sides.push_back(s);
    out.boxes.emplace_back(std::move(sides));
  }
  std::vector<Interval> apex;
  apex.emplace_back(Rational(-1), Rational(0));
  for (int j = 0; j < r.dim; ++j) apex.emplace_back(-m, m);
  out.boxes.emplace_back(std::move(apex));
  return out;
}

Graph strong_product_graph(const Graph& g, const Graph& h) {
  int ng = g.vertex_count(), nh = h.vertex_count();
  Graph out(ng * nh);
  for (int u = 0; u < ng; ++u)
    for (int v = 0; v < nh; ++v)
      for (int u2 = u; u2 < ng; ++u2)
        for (int v2 = 0; v2 < nh; ++v2) {
          if (u2 == u && v2 <= v) continue;
          bool gu = (u == u2) || g.has_edge(u, u2);
          bool hv = (v == v2) || h.has_edge(v, v2);
          if (gu && hv) out.add_edge(u * nh + v, u2 * nh + v2);
        }
  return out;
}

TouchingRep strong_product(const ProductPlan& plan) {
  require_verified(plan.left, true, "strong_product(left)");
  require_verified(plan.right, false, "strong_product(right)");
  for (const auto& b : plan.right.boxes)
    for (const auto& s : b.sides)
      if (s.length() != 1)
        throw std::invalid_argument("strong_product: right factor must use unit hypercubes");

  TouchingRep out;
  out.dim = plan.left.dim + plan.right.dim;
  out.graph = strong_product_graph(plan.left.graph, plan.right.graph);
  int nh = plan.right.graph.vertex_count();
  out.boxes.reserve(static_cast<size_t>(out.graph.vertex_count()));
  for (int u = 0; u < plan.left.graph.vertex_count(); ++u)
    for (int v = 0; v < nh; ++v)
      out.boxes.push_back(cartesian_product(plan.left.boxes[static_cast<size_t>(u)],
                                            plan.right.boxes[static_cast<size_t>(v)]));
  return out;
}

TouchingRep unit_rep_path(int n) {
  if (n < 1) throw std::invalid_argument("unit_rep_path: n >= 1 required");
  TouchingRep out;
  out.dim = 1;
  out.graph = Graph(n);
  for (int i = 0; i + 1 < n; ++i) out.graph.add_edge(i, i + 1);
  for (int i = 0; i < n; ++i)
    out.boxes.push_back(BoxNd({Interval(Rational(i), Rational(i + 1))}));
  return out;
}

TouchingRep unit_rep_clique(int m) {
  if (m < 1) throw std::invalid_argument("unit_rep_clique: m >= 1 required");
  int d = 0;
  while ((1 << d) < m) ++d;
  d = std::max(d, 1);
  TouchingRep out;
  out.dim = d;
  out.graph = Graph(m);
  for (int u = 0; u < m; ++u)
    for (int v = u + 1; v < m; ++v) out.graph.add_edge(u, v);
  for (int u = 0; u < m; ++u) {
    std::vector<Interval> sides;
    for (int j = 0; j < d; ++j) {
      if ((u >> j) & 1)
        sides.emplace_back(Rational(0), Rational(1));
      else
        sides.emplace_back(Rational(-1), Rational(0));
    }
    out.boxes.emplace_back(std::move(sides));
  }
  return out;
}

TouchingRep cocktail_party(int n) {
  if (n < 1) throw std::invalid_argument("cocktail_party: n >= 1 required");
  TouchingRep out;
  out.dim = n;
  out.graph = Graph(2 * n);
  for (int a = 0; a < 2 * n; ++a)
    for (int b = a + 1; b < 2 * n; ++b)
      if (!(a / 2 == b / 2)) out.graph.add_edge(a, b);
  for (int i = 0; i < n; ++i) {
    for (int sigma = 0; sigma < 2; ++sigma) {
      std::vector<Interval> sides;
      for (int j = 0; j < n; ++j) {
        if (j == i) {
          if (sigma == 0)
            sides.emplace_back(Rational(-1), Rational(0));
          else
            sides.emplace_back(Rational(1), Rational(2));
        } else {
          sides.emplace_back(Rational(0), Rational(1));
        }
      }
      out.boxes.emplace_back(std::move(sides));
    }
  }
  return out;
}

TouchingRep subgraph_extend(const TouchingRep& r, const Graph& keep, const Coloring& star) {
  require_verified(r, true, "subgraph_extend");
  int n = r.graph.vertex_count();
  if (keep.vertex_count() != n)
    throw std::invalid_argument("subgraph_extend: vertex sets differ");
  for (auto [u, v] : keep.edges())
    if (!r.graph.has_edge(u, v))
      throw std::invalid_argument("subgraph_extend: kept edge absent from host graph");
  {
    Coloring check = star;
    check.kind = ColoringKind::Star;
    Report rep = verify_coloring(r.graph, check);
    if (!rep.ok())
      throw std::invalid_argument("subgraph_extend: star coloring invalid:\n" + rep.summary());
  }

  int c = star.color_count();
  // deleted-edge witness sets: A[i][j] = vertices of color i losing an edge
  // to some vertex of color j
  std::vector<std::vector<std::set<int>>> A(
      static_cast<size_t>(c + 1), std::vector<std::set<int>>(static_cast<size_t>(c + 1)));
  for (auto [u, v] : r.graph.edges()) {
    if (keep.has_edge(u, v)) continue;
    int cu = star.colors[static_cast<size_t>(u)];
    int cv = star.colors[static_cast<size_t>(v)];
    A[static_cast<size_t>(cu)][static_cast<size_t>(cv)].insert(u);
    A[static_cast<size_t>(cv)][static_cast<size_t>(cu)].insert(v);
  }

  TouchingRep out;
  out.graph = keep;
  out.dim = r.dim + c * (c - 1) / 2;
  Rational third = make_rational(1, 3), four_thirds = make_rational(4, 3);
  Rational half = make_rational(1, 2);
  out.boxes.reserve(static_cast<size_t>(n));
  for (int v = 0; v < n; ++v) {
    std::vector<Interval> sides = r.boxes[static_cast<size_t>(v)].sides;
    for (int i = 1; i <= c; ++i)
      for (int j = i + 1; j <= c; ++j) {
        if (A[static_cast<size_t>(i)][static_cast<size_t>(j)].count(v))
          sides.emplace_back(third, four_thirds);
        else if (A[static_cast<size_t>(j)][static_cast<size_t>(i)].count(v))
          sides.emplace_back(-four_thirds, -third);
        else
          sides.emplace_back(-half, half);
      }
    out.boxes.emplace_back(std::move(sides));
  }
  return out;
}

CsRep pad_dimension(const CsRep& c) {
  CsRep out = c;
  out.base.dim = c.base.dim + 1;
  std::vector<bool> is_root(static_cast<size_t>(c.base.graph.vertex_count()), false);
  for (int v : c.root) is_root[static_cast<size_t>(v)] = true;
  for (int v = 0; v < c.base.graph.vertex_count(); ++v) {
    auto& sides = out.base.boxes[static_cast<size_t>(v)].sides;
    if (is_root[static_cast<size_t>(v)])
      sides.emplace_back(Rational(0), Rational(1));
    else
      sides.emplace_back(Rational(0), make_rational(1, 2));
  }
  Rational quarter = make_rational(1, 4);
  for (auto& [cl, p] : out.clique_points) p.push_back(quarter);
  if (out.epsilon > quarter) out.epsilon = quarter;
  return out;
}

namespace {

// Facet dimension of vertex v against clique point p: the unique dimension
// where the box ends exactly at p.
int facet_dim_of(const BoxNd& box, const PointNd& p) {
  int found = -1;
  for (int j = 0; j < box.dim(); ++j) {
    const Rational& pj = p[static_cast<size_t>(j)];
    if (pj < box[j].lo || pj > box[j].hi)
      throw std::logic_error("facet_dim_of: point outside member box");
    if (box[j].hi == pj) {
      if (found != -1) throw std::logic_error("facet_dim_of: two touch dimensions");
      found = j;
    }
  }
  if (found == -1) throw std::logic_error("facet_dim_of: no touch dimension");
  return found;
}

Rational min_box_side(const TouchingRep& r) {
  Rational m(-1);
  for (const auto& b : r.boxes)
    for (const auto& s : b.sides) {
      Rational len = s.length();
      if (m < 0 || len < m) m = len;
    }
  return m;
}

struct GlueOutcome {
  CsRep cert;  // epsilon not yet final
  std::vector<int> map2;
  std::vector<Clique> new_cliques;  // keys of the freshly mapped entries
  Rational eps_glue;
};

// The geometric core of the full clique-sum: scale and translate c2 into the
// glue clique's cube of c1, permuting dimensions so reserved root dimensions
// land on the glue vertices' facet dimensions.
GlueOutcome glue_assemble(const CsRep& c1_in, const std::vector<int>& glue,
                          const CsRep& c2_in, const std::vector<int>& root_match) {
  CsRep c1 = c1_in;
  CsRep c2 = c2_in;
  while (c1.base.dim < c2.base.dim) c1 = pad_dimension(c1);
  while (c2.base.dim < c1.base.dim) c2 = pad_dimension(c2);
  int d = c1.base.dim;
  int k = static_cast<int>(glue.size());
  if (static_cast<int>(root_match.size()) != k)
    throw std::invalid_argument("clique_sum: glue/root_match size mismatch");
  {
    Clique rm = root_match;
    std::sort(rm.begin(), rm.end());
    if (rm != c2.root)
      throw std::invalid_argument("clique_sum: root_match must enumerate the root clique of c2");
  }
  Clique glue_sorted = glue;
  std::sort(glue_sorted.begin(), glue_sorted.end());
  auto it = c1.clique_points.find(glue_sorted);
  if (it == c1.clique_points.end())
    throw std::invalid_argument("clique_sum: glue set is not a clique of the host");
  const PointNd p1 = it->second;

  // dimension permutation: reserved dim of root_match[i] -> facet dim of glue[i]
  std::vector<int> pi(static_cast<size_t>(d), -1);
  std::vector<bool> target_used(static_cast<size_t>(d), false);
  for (int i = 0; i < k; ++i) {
    int facet = facet_dim_of(c1.base.boxes[static_cast<size_t>(glue[static_cast<size_t>(i)])], p1);
    int rdim = c2.root_dims.at(root_match[static_cast<size_t>(i)]);
    if (pi[static_cast<size_t>(rdim)] != -1 || target_used[static_cast<size_t>(facet)])
      throw std::invalid_argument("clique_sum: no dimension permutation aligns the glue");
    pi[static_cast<size_t>(rdim)] = facet;
    target_used[static_cast<size_t>(facet)] = true;
  }
  {
    std::vector<int> free_src, free_dst;
    for (int j = 0; j < d; ++j) {
      if (pi[static_cast<size_t>(j)] == -1) free_src.push_back(j);
      if (!target_used[static_cast<size_t>(j)]) free_dst.push_back(j);
    }
    for (size_t i = 0; i < free_src.size(); ++i)
      pi[static_cast<size_t>(free_src[i])] = free_dst[i];
  }
  std::vector<int> inv_pi(static_cast<size_t>(d));
  for (int j = 0; j < d; ++j) inv_pi[static_cast<size_t>(pi[static_cast<size_t>(j)])] = j;

  // epsilon for the glue cube: cliques conditions hold, cube inside [0,1)^d,
  // cube fits in every host box
  Rational budget = c1.epsilon;
  for (int j = 0; j < d; ++j) {
    Rational room = 1 - p1[static_cast<size_t>(j)];
    if (room < budget) budget = room;
  }
  {
    Rational side = min_box_side(c1.base);
    if (side >= 0 && side < budget) budget = side;
  }
  if (sgn(budget) <= 0) throw std::logic_error("clique_sum: no positive glue scale");
  Rational eps = largest_pow2_at_most(budget / 2);

  int n1 = c1.base.graph.vertex_count();
  int n2 = c2.base.graph.vertex_count();
  std::vector<bool> is_root2(static_cast<size_t>(n2), false);
  for (int v : c2.root) is_root2[static_cast<size_t>(v)] = true;
  std::vector<int> map2(static_cast<size_t>(n2), -1);
  for (int i = 0; i < k; ++i)
    map2[static_cast<size_t>(root_match[static_cast<size_t>(i)])] = glue[static_cast<size_t>(i)];
  int next_id = n1;
  for (int v = 0; v < n2; ++v)
    if (!is_root2[static_cast<size_t>(v)]) map2[static_cast<size_t>(v)] = next_id++;

  GlueOutcome out;
  out.map2 = map2;
  out.eps_glue = eps;
  CsRep& res = out.cert;
  res.base.dim = d;
  res.base.graph = Graph(next_id);
  for (auto [u, v] : c1.base.graph.edges()) res.base.graph.add_edge(u, v);
  for (auto [u, v] : c2.base.graph.edges())
    res.base.graph.add_edge(map2[static_cast<size_t>(u)], map2[static_cast<size_t>(v)]);

  res.base.boxes = c1.base.boxes;
  for (int v = 0; v < n2; ++v) {
    if (is_root2[static_cast<size_t>(v)]) continue;
    std::vector<Interval> sides;
    sides.reserve(static_cast<size_t>(d));
    for (int t = 0; t < d; ++t) {
      const Interval& src =
          c2.base.boxes[static_cast<size_t>(v)][inv_pi[static_cast<size_t>(t)]];
      sides.emplace_back(p1[static_cast<size_t>(t)] + eps * src.lo,
                         p1[static_cast<size_t>(t)] + eps * src.hi);
    }
    res.base.boxes.emplace_back(std::move(sides));
  }

  res.root = c1.root;
  res.root_dims = c1.root_dims;

  res.clique_points = c1.clique_points;
  // subcliques of the glue take the c2-side points
  for (unsigned mask = 0; mask < (1u << k); ++mask) {
    Clique sub;
    for (int i = 0; i < k; ++i)
      if (mask & (1u << i)) sub.push_back(glue_sorted[static_cast<size_t>(i)]);
    res.clique_points.erase(sub);
  }
  for (const auto& [cl, p2] : c2.clique_points) {
    Clique mapped;
    mapped.reserve(cl.size());
    for (int v : cl) mapped.push_back(map2[static_cast<size_t>(v)]);
    std::sort(mapped.begin(), mapped.end());
    PointNd p(static_cast<size_t>(d));
    for (int t = 0; t < d; ++t)
      p[static_cast<size_t>(t)] =
          p1[static_cast<size_t>(t)] + eps * p2[static_cast<size_t>(inv_pi[static_cast<size_t>(t)])];
    out.new_cliques.push_back(mapped);
    res.clique_points[std::move(mapped)] = std::move(p);
  }
  return out;
}

}  // namespace

CliqueSumResult clique_sum(const CsRep& c1, const std::vector<int>& glue,
                           const CsRep& c2, const std::vector<int>& root_match) {
  GlueOutcome out = glue_assemble(c1, glue, c2, root_match);
  Report why;
  auto eps = max_valid_epsilon(out.cert, &why);
  if (!eps)
    throw std::logic_error("clique_sum: assembled certificate is degenerate:\n" + why.summary());
  out.cert.epsilon = *eps;
  return {std::move(out.cert), std::move(out.map2)};
}

namespace {

// K_{k+1} certificate rooted at the first k vertices, exact coordinates.
CsRep ktree_base_cert(int k) {
  CsRep c;
  c.base.dim = k + 1;
  c.base.graph = Graph(k + 1);
  for (int u = 0; u <= k; ++u)
    for (int v = u + 1; v <= k; ++v) c.base.graph.add_edge(u, v);
  Rational half = make_rational(1, 2), quarter = make_rational(1, 4);
  Rational three_quarters = make_rational(3, 4);
  for (int v = 0; v < k; ++v) {
    std::vector<Interval> sides;
    for (int j = 0; j <= k; ++j) {
      if (j == v)
        sides.emplace_back(Rational(-1), Rational(0));
      else
        sides.emplace_back(Rational(0), Rational(1));
    }
    c.base.boxes.emplace_back(std::move(sides));
    c.root.push_back(v);
    c.root_dims[v] = v;
  }
  {
    std::vector<Interval> sides;
    for (int j = 0; j <= k; ++j) sides.emplace_back(Rational(0), half);
    c.base.boxes.emplace_back(std::move(sides));
  }
  for (unsigned mask = 0; mask < (1u << (k + 1)); ++mask) {
    Clique cl;
    for (int v = 0; v <= k; ++v)
      if (mask & (1u << v)) cl.push_back(v);
    PointNd p(static_cast<size_t>(k + 1));
    for (int i = 0; i < k; ++i)
      p[static_cast<size_t>(i)] = (mask & (1u << i)) ? Rational(0) : quarter;
    p[static_cast<size_t>(k)] = (mask & (1u << k)) ? half : three_quarters;
    c.clique_points.emplace(std::move(cl), std::move(p));
  }
  Report why;
  auto eps = max_valid_epsilon(c, &why);
  if (!eps) throw std::logic_error("ktree_base_cert: degenerate base:\n" + why.summary());
  c.epsilon = *eps;
  return c;
}

Rational min_pairwise_linf_gap(const CliquePointMap& pts) {
  Rational best(-1);
  for (auto it = pts.begin(); it != pts.end(); ++it) {
    auto jt = it;
    for (++jt; jt != pts.end(); ++jt) {
      Rational gap(0);
      for (size_t j = 0; j < it->second.size(); ++j) {
        Rational diff = abs(it->second[j] - jt->second[j]);
        if (diff > gap) gap = diff;
      }
      if (best < 0 || gap < best) best = gap;
    }
  }
  return best;
}

}  // namespace

CsRep ktree_cs_rep(const KTreeBuildPlan& plan) {
  int k = plan.k;
  if (static_cast<int>(plan.base.size()) != k + 1)
    throw std::invalid_argument("ktree_cs_rep: plan base must have exactly k+1 vertices");
  Graph target = ktree_realize(plan);  // validates the plan
  int n = target.vertex_count();

  CsRep piece = ktree_base_cert(k);
  Rational piece_delta = min_pairwise_linf_gap(piece.clique_points);  // 1/4
  Rational piece_min_side = make_rational(1, 2);

  // fold in internal ids: base -> 0..k, step t's vertex -> k+1+t
  std::vector<int> internal_of(static_cast<size_t>(n), -1);
  std::vector<int> plan_of;  // internal -> plan id
  for (int i = 0; i <= k; ++i) {
    internal_of[static_cast<size_t>(plan.base[static_cast<size_t>(i)])] = i;
    plan_of.push_back(plan.base[static_cast<size_t>(i)]);
  }

  CsRep cur = piece;
  Rational min_side = min_box_side(cur.base);
  Rational delta = piece_delta;

  std::vector<bool> member;
  for (const auto& st : plan.steps) {
    std::vector<int> glue;
    glue.reserve(st.clique.size());
    for (int v : st.clique) {
      int iv = internal_of[static_cast<size_t>(v)];
      if (iv == -1) throw std::logic_error("ktree_cs_rep: attachment vertex not yet placed");
      glue.push_back(iv);
    }
    std::sort(glue.begin(), glue.end());
    std::vector<int> root_match(static_cast<size_t>(k));
    std::iota(root_match.begin(), root_match.end(), 0);  // piece root i has dim i

    Rational prev_eps = cur.epsilon;
    GlueOutcome out = glue_assemble(cur, glue, piece, root_match);
    int new_id = out.map2[static_cast<size_t>(k)];
    if (new_id != static_cast<int>(plan_of.size()))
      throw std::logic_error("ktree_cs_rep: unexpected vertex numbering");
    internal_of[static_cast<size_t>(st.vertex)] = new_id;
    plan_of.push_back(st.vertex);

    // maintained epsilon: old pairs hold below prev_eps; cross pairs swept
    // directly; point gaps bounded by the scale chain
    const Rational& eps_glue = out.eps_glue;
    Rational new_delta = std::min(delta, Rational(prev_eps / 2));
    {
      Rational dd = eps_glue * piece_delta;
      if (dd < new_delta) new_delta = dd;
    }
    Rational cross(-1);
    auto tighten = [&cross](const Rational& b) {
      if (cross < 0 || b < cross) cross = b;
    };
    const CsRep& res = out.cert;
    int rn = res.base.graph.vertex_count();
    member.assign(static_cast<size_t>(rn), false);
    for (const auto& cl : out.new_cliques) {
      const PointNd& p = res.clique_points.at(cl);
      std::fill(member.begin(), member.end(), false);
      for (int v : cl) member[static_cast<size_t>(v)] = true;
      for (int v = 0; v < rn; ++v) {
        const BoxNd& b = res.base.boxes[static_cast<size_t>(v)];
        if (member[static_cast<size_t>(v)]) {
          for (int j = 0; j < b.dim(); ++j) {
            const Rational& pj = p[static_cast<size_t>(j)];
            if (b[j].hi != pj) tighten(Rational(b[j].hi - pj));
          }
        } else {
          Rational best(0);
          bool always = false;
          for (int j = 0; j < b.dim(); ++j) {
            const Rational& pj = p[static_cast<size_t>(j)];
            if (b[j].hi < pj) {
              always = true;
              break;
            }
            if (b[j].lo > pj) {
              Rational bd = b[j].lo - pj;
              if (bd > best) best = bd;
            }
          }
          if (!always) {
            if (sgn(best) <= 0)
              throw std::logic_error("ktree_cs_rep: clique point not separable");
            tighten(best);
          }
        }
      }
    }
    {
      // surviving host cliques against the one new vertex
      std::set<Clique> fresh(out.new_cliques.begin(), out.new_cliques.end());
      const BoxNd& nb = res.base.boxes[static_cast<size_t>(new_id)];
      for (const auto& [cl, p] : res.clique_points) {
        if (fresh.count(cl)) continue;
        Rational best(0);
        bool always = false;
        for (int j = 0; j < nb.dim(); ++j) {
          const Rational& pj = p[static_cast<size_t>(j)];
          if (nb[j].hi < pj) {
            always = true;
            break;
          }
          if (nb[j].lo > pj) {
            Rational bd = nb[j].lo - pj;
            if (bd > best) best = bd;
          }
        }
        if (!always) {
          if (sgn(best) <= 0)
            throw std::logic_error("ktree_cs_rep: new vertex not separable from host cliques");
          tighten(best);
        }
      }
    }

    cur = std::move(out.cert);
    delta = new_delta;
    {
      Rational cand = prev_eps;
      if (cross >= 0 && cross / 2 < cand) cand = cross / 2;
      if (delta / 2 < cand) cand = delta / 2;
      cur.epsilon = cand;
    }
    {
      Rational ns = eps_glue * piece_min_side;
      if (ns < min_side) min_side = ns;
    }
  }

  return relabel_cs(cur, [&] {
    std::vector<int> perm(plan_of.size());
    for (size_t i = 0; i < plan_of.size(); ++i) perm[i] = plan_of[i];
    return perm;
  }());
}

CsRep promote_root(const CsRep& c, const std::vector<std::vector<int>>& root_neighbors) {
  if (!c.root.empty())
    throw std::invalid_argument("promote_root: input must be empty-rooted");
  int k = static_cast<int>(root_neighbors.size());
  if (k == 0) return c;
  int n = c.base.graph.vertex_count();
  int d0 = c.base.dim;
  int d = k + d0;

  Rational m = abs_max_coordinate(c.base);
  Rational alpha =
      sgn(m) > 0 ? largest_pow2_at_most(Rational(1) / (2 * m)) : make_rational(1, 2);
  if (alpha > make_rational(1, 2)) alpha = make_rational(1, 2);

  CsRep out;
  out.base.dim = d;
  out.base.graph = Graph(n + k);
  for (auto [u, v] : c.base.graph.edges()) out.base.graph.add_edge(u, v);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) out.base.graph.add_edge(n + i, n + j);
  for (int i = 0; i < k; ++i)
    for (int u : root_neighbors[static_cast<size_t>(i)]) {
      if (u < 0 || u >= n)
        throw std::invalid_argument("promote_root: neighbor out of range");
      out.base.graph.add_edge(u, n + i);
    }

  Rational quarter = make_rational(1, 4), half = make_rational(1, 2);
  Rational three_quarters = make_rational(3, 4);
  out.base.boxes.reserve(static_cast<size_t>(n + k));
  for (int u = 0; u < n; ++u) {
    std::vector<Interval> sides;
    sides.reserve(static_cast<size_t>(d));
    for (int i = 0; i < k; ++i) {
      if (out.base.graph.has_edge(u, n + i))
        sides.emplace_back(Rational(0), half);
      else
        sides.emplace_back(quarter, three_quarters);
    }
    for (const auto& s : c.base.boxes[static_cast<size_t>(u)].sides)
      sides.emplace_back(alpha * s.lo, alpha * s.hi);
    out.base.boxes.emplace_back(std::move(sides));
  }
  for (int i = 0; i < k; ++i) {
    std::vector<Interval> sides;
    for (int j = 0; j < d; ++j) {
      if (j == i)
        sides.emplace_back(Rational(-1), Rational(0));
      else
        sides.emplace_back(Rational(0), Rational(1));
    }
    out.base.boxes.emplace_back(std::move(sides));
    out.root.push_back(n + i);
    out.root_dims[n + i] = i;
  }

  for (const Clique& cl : enumerate_cliques(out.base.graph)) {
    Clique tail;  // the part below the new root
    std::vector<bool> has_root(static_cast<size_t>(k), false);
    for (int v : cl) {
      if (v >= n)
        has_root[static_cast<size_t>(v - n)] = true;
      else
        tail.push_back(v);
    }
    auto it = c.clique_points.find(tail);
    if (it == c.clique_points.end())
      throw std::logic_error("promote_root: missing clique point in the input certificate");
    PointNd p(static_cast<size_t>(d));
    for (int i = 0; i < k; ++i)
      p[static_cast<size_t>(i)] = has_root[static_cast<size_t>(i)] ? Rational(0) : quarter;
    for (int j = 0; j < d0; ++j)
      p[static_cast<size_t>(k + j)] = alpha * it->second[static_cast<size_t>(j)];
    out.clique_points.emplace(cl, std::move(p));
  }

  Report why;
  auto eps = max_valid_epsilon(out, &why);
  if (!eps) throw std::logic_error("promote_root: degenerate output:\n" + why.summary());
  out.epsilon = *eps;
  return out;
}

CsRep make_cs_extendable(const TouchingRep& r, const Coloring& proper) {
  require_verified(r, true, "make_cs_extendable");
  {
    Coloring check = proper;
    check.kind = ColoringKind::Proper;
    Report rep = verify_coloring(r.graph, check);
    if (!rep.ok())
      throw std::invalid_argument("make_cs_extendable: coloring invalid:\n" + rep.summary());
  }
  int n = r.graph.vertex_count();
  int d = r.dim;
  int chi = proper.color_count();
  if (n == 0) throw std::invalid_argument("make_cs_extendable: empty graph");

  // scale each dimension into [1/4, 3/4]
  TouchingRep scaled;
  scaled.graph = r.graph;
  scaled.dim = d;
  {
    std::vector<Rational> lo(static_cast<size_t>(d)), hi(static_cast<size_t>(d));
    for (int j = 0; j < d; ++j) {
      lo[static_cast<size_t>(j)] = r.boxes[0][j].lo;
      hi[static_cast<size_t>(j)] = r.boxes[0][j].hi;
    }
    for (const auto& b : r.boxes)
      for (int j = 0; j < d; ++j) {
        if (b[j].lo < lo[static_cast<size_t>(j)]) lo[static_cast<size_t>(j)] = b[j].lo;
        if (b[j].hi > hi[static_cast<size_t>(j)]) hi[static_cast<size_t>(j)] = b[j].hi;
      }
    std::vector<Rational> scale(static_cast<size_t>(d)), shift(static_cast<size_t>(d));
    Rational quarter = make_rational(1, 4);
    for (int j = 0; j < d; ++j) {
      Rational span = hi[static_cast<size_t>(j)] - lo[static_cast<size_t>(j)];
      scale[static_cast<size_t>(j)] = Rational(1) / (2 * span);
      shift[static_cast<size_t>(j)] =
          quarter - lo[static_cast<size_t>(j)] * scale[static_cast<size_t>(j)];
    }
    for (const auto& b : r.boxes) scaled.boxes.push_back(box_affine(b, scale, shift));
  }

  // inflate by alpha, keeping non-adjacent boxes disjoint
  Rational alpha = make_rational(1, 16);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      if (r.graph.has_edge(u, v)) continue;
      const BoxNd& a = scaled.boxes[static_cast<size_t>(u)];
      const BoxNd& b = scaled.boxes[static_cast<size_t>(v)];
      Rational gap(0);
      for (int j = 0; j < d; ++j) {
        Rational g = std::max(Rational(a[j].lo - b[j].hi), Rational(b[j].lo - a[j].hi));
        if (g > gap) gap = g;
      }
      if (sgn(gap) <= 0) continue;  // touching non-edge impossible in a verified rep
      Rational cand = gap / 4;
      if (cand < alpha) alpha = cand;
    }
  std::vector<BoxNd> inflated;
  inflated.reserve(static_cast<size_t>(n));
  for (const auto& b : scaled.boxes) {
    std::vector<Interval> sides;
    sides.reserve(static_cast<size_t>(d));
    for (const auto& s : b.sides) sides.emplace_back(s.lo - alpha, s.hi + alpha);
    inflated.emplace_back(std::move(sides));
  }

  std::vector<Clique> cliques = enumerate_cliques(r.graph);

  // clique intersections of the inflated boxes
  std::vector<BoxNd> intersections;
  intersections.reserve(cliques.size());
  Rational min_half_side(-1);
  for (const auto& cl : cliques) {
    std::vector<Interval> sides;
    if (cl.empty()) {
      for (int j = 0; j < d; ++j)
        sides.emplace_back(make_rational(3, 8), make_rational(5, 8));
    } else {
      for (int j = 0; j < d; ++j) {
        Rational lo = inflated[static_cast<size_t>(cl[0])][j].lo;
        Rational hi = inflated[static_cast<size_t>(cl[0])][j].hi;
        for (int v : cl) {
          if (inflated[static_cast<size_t>(v)][j].lo > lo)
            lo = inflated[static_cast<size_t>(v)][j].lo;
          if (inflated[static_cast<size_t>(v)][j].hi < hi)
            hi = inflated[static_cast<size_t>(v)][j].hi;
        }
        if (lo >= hi)
          throw std::logic_error("make_cs_extendable: clique intersection degenerate");
        sides.emplace_back(lo, hi);
      }
    }
    BoxNd box(std::move(sides));
    for (int j = 0; j < d; ++j) {
      Rational h = box[j].length() / 2;
      if (min_half_side < 0 || h < min_half_side) min_half_side = h;
    }
    intersections.push_back(std::move(box));
  }

  // ranked diagonal perturbation of the centers, halved until injective
  size_t pc = cliques.size();
  Rational delta = min_half_side / (2 * Rational(static_cast<long>(pc) + 1));
  std::vector<PointNd> leading(pc);
  for (int round = 0;; ++round) {
    for (size_t i = 0; i < pc; ++i) {
      PointNd p = intersections[i].center();
      for (auto& x : p) x += Rational(static_cast<long>(i)) * delta;
      leading[i] = std::move(p);
    }
    std::set<PointNd> uniq(leading.begin(), leading.end());
    if (uniq.size() == pc) break;
    if (round > 64 + static_cast<int>(pc * pc))
      throw std::logic_error("make_cs_extendable: cannot make clique points distinct");
    delta /= 2;
  }

  CsRep out;
  out.base.graph = r.graph;
  out.base.dim = d + chi;
  Rational fifth = make_rational(1, 5), two_fifths = make_rational(2, 5);
  Rational three_fifths = make_rational(3, 5), four_fifths = make_rational(4, 5);
  Rational half = make_rational(1, 2);
  for (int u = 0; u < n; ++u) {
    std::vector<Interval> sides = inflated[static_cast<size_t>(u)].sides;
    int cu = proper.colors[static_cast<size_t>(u)];
    for (int i = 1; i <= chi; ++i) {
      if (cu < i)
        sides.emplace_back(fifth, three_fifths);
      else if (cu == i)
        sides.emplace_back(Rational(0), two_fifths);
      else
        sides.emplace_back(two_fifths, four_fifths);
    }
    out.base.boxes.emplace_back(std::move(sides));
  }
  for (size_t i = 0; i < pc; ++i) {
    PointNd p = leading[i];
    std::set<int> colors;
    for (int v : cliques[i]) colors.insert(proper.colors[static_cast<size_t>(v)]);
    for (int ci = 1; ci <= chi; ++ci)
      p.push_back(colors.count(ci) ? two_fifths : half);
    out.clique_points.emplace(cliques[i], std::move(p));
  }

  Report why;
  auto eps = max_valid_epsilon(out, &why);
  if (!eps) throw std::logic_error("make_cs_extendable: degenerate output:\n" + why.summary());
  out.epsilon = *eps;
  return out;
}

namespace {

// Per-vertex shrink of the dropped k-tree representation: deleted edges
// retreat at the smaller cube's minimum corner, retained contacts keep
// their slack.
TouchingRep shrink_deleted_edges(const TouchingRep& rep, const Graph& target) {
  int n = rep.graph.vertex_count();
  std::vector<Rational> side(static_cast<size_t>(n));
  for (int v = 0; v < n; ++v) {
    const BoxNd& b = rep.boxes[static_cast<size_t>(v)];
    side[static_cast<size_t>(v)] = b[0].length();
    for (int j = 1; j < b.dim(); ++j)
      if (b[j].length() != side[static_cast<size_t>(v)])
        throw std::logic_error("treewidth_rep: expected hypercubes");
  }

  std::vector<std::set<int>> shrink_dims(static_cast<size_t>(n));
  for (auto [u, v] : rep.graph.edges()) {
    if (target.has_edge(u, v)) continue;
    int small = side[static_cast<size_t>(u)] < side[static_cast<size_t>(v)] ? u : v;
    int big = small == u ? v : u;
    if (side[static_cast<size_t>(small)] == side[static_cast<size_t>(big)])
      throw std::logic_error("treewidth_rep: equal cube sizes on a deleted edge");
    const BoxNd& sb = rep.boxes[static_cast<size_t>(small)];
    const BoxNd& bb = rep.boxes[static_cast<size_t>(big)];
    int contact = -1;
    for (int j = 0; j < sb.dim(); ++j)
      if (interval_relation(sb[j], bb[j]) == IntervalRelation::TouchPoint) {
        if (contact != -1)
          throw std::logic_error("treewidth_rep: corner contact on a tree edge");
        contact = j;
      }
    if (contact == -1 || bb[contact].hi != sb[contact].lo)
      throw std::logic_error("treewidth_rep: contact is not at the small cube's minimum corner");
    shrink_dims[static_cast<size_t>(small)].insert(contact);
  }

  // slack budgets from retained touchings
  std::vector<Rational> budget(static_cast<size_t>(n), Rational(-1));
  auto tighten = [&](int v, const Rational& b) {
    auto& cur = budget[static_cast<size_t>(v)];
    if (cur < 0 || b < cur) cur = b;
  };
  for (auto [u, v] : rep.graph.edges()) {
    if (!target.has_edge(u, v)) continue;
    const BoxNd& a = rep.boxes[static_cast<size_t>(u)];
    const BoxNd& b = rep.boxes[static_cast<size_t>(v)];
    for (int j = 0; j < a.dim(); ++j) {
      Rational hi = std::min(a[j].hi, b[j].hi);
      if (shrink_dims[static_cast<size_t>(u)].count(j)) {
        Rational slack = hi - a[j].lo;
        if (sgn(slack) <= 0)
          throw std::logic_error("treewidth_rep: zero slack on a retained touching");
        tighten(u, slack);
      }
      if (shrink_dims[static_cast<size_t>(v)].count(j)) {
        Rational slack = hi - b[j].lo;
        if (sgn(slack) <= 0)
          throw std::logic_error("treewidth_rep: zero slack on a retained touching");
        tighten(v, slack);
      }
    }
  }

  // distinct powers of 1/2, each under its own budget
  std::set<Rational> used;
  TouchingRep out = rep;
  out.graph = target;
  for (int v = 0; v < n; ++v) {
    if (shrink_dims[static_cast<size_t>(v)].empty()) continue;
    Rational cap = side[static_cast<size_t>(v)] / 2;
    if (budget[static_cast<size_t>(v)] >= 0 && budget[static_cast<size_t>(v)] < cap)
      cap = budget[static_cast<size_t>(v)];
    Rational gamma = largest_pow2_at_most(cap / 2) / side[static_cast<size_t>(v)];
    // keep gamma a power of 1/2 and globally distinct
    gamma = largest_pow2_at_most(gamma);
    while (used.count(gamma)) gamma /= 2;
    used.insert(gamma);
    Rational delta = gamma * side[static_cast<size_t>(v)];
    for (int j : shrink_dims[static_cast<size_t>(v)]) {
      Interval& s = out.boxes[static_cast<size_t>(v)][j];
      s = Interval(s.lo + delta, s.hi);
    }
  }
  return out;
}

}  // namespace

TouchingRep treewidth_rep(const Graph& g, const TreeDecomp& td) {
  Report check = verify_tree_decomposition(g, td);
  if (!check.ok())
    throw std::invalid_argument("treewidth_rep: invalid decomposition:\n" + check.summary());
  KTreeEmbedding emb = ktree_embed(g, td);
  CsRep cs = ktree_cs_rep(emb.plan);
  std::vector<int> kept;
  CsRep dropped = cs_drop_root(cs, &kept);
  for (int v = 0; v < g.vertex_count(); ++v)
    if (kept[static_cast<size_t>(v)] != v)
      throw std::logic_error("treewidth_rep: unexpected vertex order after dropping the root");
  TouchingRep out = shrink_deleted_edges(dropped.base, g);
  Report rep = verify_touching_rep(out, true);
  if (!rep.ok())
    throw std::logic_error("treewidth_rep: output failed verification:\n" + rep.summary());
  return out;
}

RealizedLeaf realize_recipe(const Recipe& recipe) {
  RealizedLeaf leaf;
  switch (recipe.kind) {
    case Recipe::Kind::Ktree: {
      CsRep cs = ktree_cs_rep(recipe.plan);
      leaf.rep = cs.base;
      leaf.graph = leaf.rep.graph;
      break;
    }
    case Recipe::Kind::KtreeGrid:
    case Recipe::Kind::ExtendedKtreeGrid: {
      CsRep cs = ktree_cs_rep(recipe.plan);
      ProductPlan plan{cs.base, unit_rep_path(recipe.path_length)};
      leaf.rep = strong_product(plan);
      if (recipe.kind == Recipe::Kind::ExtendedKtreeGrid)
        for (const auto& nbrs : recipe.apexes) leaf.rep = apex_add(leaf.rep, nbrs);
      leaf.graph = leaf.rep.graph;
      break;
    }
    case Recipe::Kind::FromRep: {
      require_verified(recipe.rep, true, "realize_recipe");
      leaf.rep = recipe.rep;
      leaf.graph = leaf.rep.graph;
      break;
    }
  }
  return leaf;
}

namespace {

CsRep cert_for_node(const CsTreeNode& node, const RealizedLeaf& leaf) {
  int n = leaf.graph.vertex_count();
  Clique cstar_sorted = node.root_clique;
  std::sort(cstar_sorted.begin(), cstar_sorted.end());
  if (!is_clique(leaf.graph, cstar_sorted))
    throw std::invalid_argument("pipeline: declared root clique is not a clique of node " +
                                node.id);

  if (node.recipe.kind == Recipe::Kind::Ktree &&
      static_cast<int>(node.recipe.plan.base.size()) == node.recipe.plan.k + 1) {
    Clique natural(node.recipe.plan.base.begin(),
                   node.recipe.plan.base.begin() + node.recipe.plan.k);
    std::sort(natural.begin(), natural.end());
    if (natural == cstar_sorted) return ktree_cs_rep(node.recipe.plan);
  }

  if (node.root_clique.empty()) {
    Coloring col = greedy_proper_coloring(leaf.graph, volume_order(leaf.rep));
    return make_cs_extendable(leaf.rep, col);
  }

  // promotion route: strip the root, extend, and promote it back
  std::vector<bool> in_root(static_cast<size_t>(n), false);
  for (int v : cstar_sorted) in_root[static_cast<size_t>(v)] = true;
  std::vector<int> keep;
  std::vector<int> rank(static_cast<size_t>(n), -1);
  for (int v = 0; v < n; ++v)
    if (!in_root[static_cast<size_t>(v)]) {
      rank[static_cast<size_t>(v)] = static_cast<int>(keep.size());
      keep.push_back(v);
    }
  TouchingRep stripped = sub_rep(leaf.rep, keep);
  Coloring col = greedy_proper_coloring(stripped.graph, volume_order(stripped));
  CsRep cs0 = make_cs_extendable(stripped, col);
  std::vector<std::vector<int>> nbrs;
  nbrs.reserve(node.root_clique.size());
  for (int rv : node.root_clique) {
    std::vector<int> lst;
    for (int u : leaf.graph.neighbors(rv))
      if (!in_root[static_cast<size_t>(u)]) lst.push_back(rank[static_cast<size_t>(u)]);
    std::sort(lst.begin(), lst.end());
    nbrs.push_back(std::move(lst));
  }
  CsRep promoted = promote_root(cs0, nbrs);
  std::vector<int> perm(static_cast<size_t>(n));
  for (size_t i = 0; i < keep.size(); ++i) perm[i] = keep[i];
  for (size_t i = 0; i < node.root_clique.size(); ++i)
    perm[keep.size() + i] = node.root_clique[i];
  CsRep cert = relabel_cs(promoted, perm);
  if (!(cert.base.graph == leaf.graph))
    throw std::logic_error("pipeline: promoted certificate graph mismatch at node " + node.id);
  return cert;
}

struct SubtreeCert {
  CsRep cert;
  std::map<int, std::vector<int>> maps;  // node index -> local -> cert id
};

SubtreeCert build_subtree(const CliqueSumTree& t, int idx,
                          const std::vector<std::vector<int>>& children,
                          std::vector<std::pair<std::string, int>>& dims) {
  const CsTreeNode& node = t.nodes[static_cast<size_t>(idx)];
  RealizedLeaf leaf = realize_recipe(node.recipe);
  SubtreeCert out;
  out.cert = cert_for_node(node, leaf);
  dims.emplace_back(node.id, out.cert.base.dim);
  {
    std::vector<int> ident(static_cast<size_t>(leaf.graph.vertex_count()));
    std::iota(ident.begin(), ident.end(), 0);
    out.maps[idx] = std::move(ident);
  }
  {
    Report rep = verify_cs_rep(out.cert);
    if (!rep.ok())
      throw std::logic_error("pipeline: node certificate failed verification at " + node.id +
                             ":\n" + rep.summary());
  }
  for (int child_idx : children[static_cast<size_t>(idx)]) {
    const CsTreeNode& child = t.nodes[static_cast<size_t>(child_idx)];
    SubtreeCert sub = build_subtree(t, child_idx, children, dims);
    CliqueSumResult glued =
        clique_sum(out.cert, child.glue, sub.cert, child.root_clique);
    out.cert = std::move(glued.cert);
    for (auto& [nidx, m] : sub.maps) {
      std::vector<int> composed(m.size());
      for (size_t i = 0; i < m.size(); ++i)
        composed[i] = glued.g2_vertex_map[static_cast<size_t>(m[i])];
      out.maps[nidx] = std::move(composed);
    }
    Report rep = verify_cs_rep(out.cert);
    if (!rep.ok())
      throw std::logic_error("pipeline: glued certificate failed verification below " +
                             node.id + ":\n" + rep.summary());
  }
  return out;
}

}  // namespace

PipelineResult pipeline_clique_sums(const CliqueSumTree& t) {
  if (t.nodes.empty()) throw std::invalid_argument("pipeline: empty tree");
  int root = -1;
  std::vector<std::vector<int>> children(t.nodes.size());
  for (size_t i = 0; i < t.nodes.size(); ++i) {
    int p = t.nodes[i].parent;
    if (p == -1) {
      if (root != -1) throw std::invalid_argument("pipeline: multiple roots");
      root = static_cast<int>(i);
    } else {
      if (p < 0 || p >= static_cast<int>(i))
        throw std::invalid_argument("pipeline: parents must precede children");
      children[static_cast<size_t>(p)].push_back(static_cast<int>(i));
    }
  }
  if (root == -1) throw std::invalid_argument("pipeline: no root node");

  PipelineResult result;
  if (children[static_cast<size_t>(root)].empty()) {
    RealizedLeaf leaf = realize_recipe(t.nodes[static_cast<size_t>(root)].recipe);
    Report rep = verify_touching_rep(leaf.rep, true);
    if (!rep.ok())
      throw std::logic_error("pipeline: leaf representation failed verification:\n" +
                             rep.summary());
    result.rep = leaf.rep;
    result.dims.emplace_back(t.nodes[static_cast<size_t>(root)].id, leaf.rep.dim);
    std::vector<int> ident(static_cast<size_t>(leaf.graph.vertex_count()));
    std::iota(ident.begin(), ident.end(), 0);
    result.vertex_map.assign(1, std::move(ident));
    return result;
  }

  SubtreeCert sc = build_subtree(t, root, children, result.dims);
  result.rep = sc.cert.base;
  result.vertex_map.resize(t.nodes.size());
  for (auto& [idx, m] : sc.maps) result.vertex_map[static_cast<size_t>(idx)] = std::move(m);
  return result;
}

TouchingRep pipeline_minor(const CliqueSumTree& t, const Graph& final_edges) {
  PipelineResult pr = pipeline_clique_sums(t);
  Coloring star = greedy_star_coloring(pr.rep.graph, volume_order(pr.rep));
  TouchingRep out = subgraph_extend(pr.rep, final_edges, star);
  Report rep = verify_touching_rep(out, true);
  if (!rep.ok())
    throw std::logic_error("pipeline_minor: output failed verification:\n" + rep.summary());
  return out;
}

}  // namespace boxdim
