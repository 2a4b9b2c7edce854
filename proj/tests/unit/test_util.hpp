#pragma once

#include <algorithm>
#include <numeric>
#include <set>

#include "boxdim/construct.hpp"
#include "boxdim/graph.hpp"
#include "boxdim/representation.hpp"
#include "boxdim/rng.hpp"

namespace testutil {

using namespace boxdim;

inline Rational random_rational(DyadicRng& rng, long span = 8) {
  long num = static_cast<long>(rng.next_u32() % (2 * span + 1)) - span;
  long den = static_cast<long>(rng.next_u32() % span) + 1;
  return make_rational(num, den);
}

inline Interval random_interval(DyadicRng& rng, long span = 8) {
  Rational a = random_rational(rng, span);
  Rational len = random_rational(rng, span);
  if (sgn(len) <= 0) len = make_rational(1, static_cast<long>(rng.next_u32() % 7) + 1);
  return Interval(a, a + len);
}

inline BoxNd random_box(DyadicRng& rng, int dim, long span = 8) {
  std::vector<Interval> sides;
  for (int j = 0; j < dim; ++j) sides.push_back(random_interval(rng, span));
  return BoxNd(std::move(sides));
}

inline Graph random_graph(DyadicRng& rng, int n, int percent) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (static_cast<int>(rng.next_u32() % 100) < percent) g.add_edge(u, v);
  return g;
}

inline std::vector<int> random_order(DyadicRng& rng, int n) {
  std::vector<int> order(static_cast<size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  for (int i = n - 1; i > 0; --i)
    std::swap(order[static_cast<size_t>(i)],
              order[static_cast<size_t>(rng.next_u32() % (i + 1))]);
  return order;
}

// Independent oracle for the s-fit predicate: exact per-anchor optimum
// minimized over a dense grid of anchors in b (includes all corners, where
// the optimum is attained).
inline bool sqsubseteq_s_oracle(const BoxNd& a, const BoxNd& b, long s, int grid = 2) {
  int d = a.dim();
  Rational vol_a = volume(a);
  std::vector<std::vector<Rational>> anchors(static_cast<size_t>(d));
  for (int j = 0; j < d; ++j)
    for (int g = 0; g <= grid; ++g)
      anchors[static_cast<size_t>(j)].push_back(
          b[j].lo + Rational(g) * b[j].length() / grid);

  std::vector<size_t> pick(static_cast<size_t>(d), 0);
  while (true) {
    Rational best(1);
    for (int j = 0; j < d; ++j) {
      const Rational& x = anchors[static_cast<size_t>(j)][pick[static_cast<size_t>(j)]];
      Rational alpha = a[j].length();
      // best overlap of a length-alpha interval containing x with b[j]
      std::vector<Rational> starts{Rational(x - alpha), x, b[j].lo, Rational(b[j].hi - alpha)};
      Rational dim_best(0);
      for (Rational t : starts) {
        if (t < x - alpha) t = x - alpha;
        if (t > x) t = x;
        Rational lo = std::max(t, b[j].lo);
        Rational hi = std::min(Rational(t + alpha), b[j].hi);
        if (hi > lo && hi - lo > dim_best) dim_best = hi - lo;
      }
      best *= dim_best;
    }
    if (best * s < vol_a) return false;
    int j = 0;
    while (j < d) {
      if (++pick[static_cast<size_t>(j)] < anchors[static_cast<size_t>(j)].size()) break;
      pick[static_cast<size_t>(j)] = 0;
      ++j;
    }
    if (j == d) break;
  }
  return true;
}

// Brute-force strong product adjacency, kept separate from the builder.
inline bool strong_product_adjacent(const Graph& g, const Graph& h, int a, int b) {
  int nh = h.vertex_count();
  int u1 = a / nh, v1 = a % nh, u2 = b / nh, v2 = b % nh;
  if (u1 == u2 && v1 == v2) return false;
  bool gu = u1 == u2 || g.has_edge(u1, u2);
  bool hv = v1 == v2 || h.has_edge(v1, v2);
  return gu && hv;
}

// Exhaustive isomorphism check for tiny graphs.
inline bool isomorphic(const Graph& a, const Graph& b) {
  int n = a.vertex_count();
  if (n != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  std::vector<int> perm(static_cast<size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int u = 0; u < n && ok; ++u)
      for (int v = u + 1; v < n && ok; ++v)
        if (a.has_edge(u, v) !=
            b.has_edge(perm[static_cast<size_t>(u)], perm[static_cast<size_t>(v)]))
          ok = false;
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// Smallest number of colors in any proper coloring (exponential; tiny n).
inline int chromatic_number(const Graph& g) {
  int n = g.vertex_count();
  for (int c = 1; c <= n; ++c) {
    std::vector<int> col(static_cast<size_t>(n), 0);
    auto rec = [&](auto&& self, int v) -> bool {
      if (v == n) return true;
      for (int x = 1; x <= c; ++x) {
        bool ok = true;
        for (int u : g.neighbors(v))
          if (u < v && col[static_cast<size_t>(u)] == x) ok = false;
        if (!ok) continue;
        col[static_cast<size_t>(v)] = x;
        if (self(self, v + 1)) return true;
      }
      col[static_cast<size_t>(v)] = 0;
      return false;
    };
    if (rec(rec, 0)) return c;
  }
  return n;
}

inline KTreeBuildPlan random_ktree_plan(DyadicRng& rng, int k, int n) {
  KTreeBuildPlan plan;
  plan.k = k;
  plan.base.resize(static_cast<size_t>(k + 1));
  std::iota(plan.base.begin(), plan.base.end(), 0);
  std::vector<Clique> kcliques;
  for (int drop = 0; drop <= k; ++drop) {
    Clique q;
    for (int v = 0; v <= k; ++v)
      if (v != drop) q.push_back(v);
    kcliques.push_back(std::move(q));
  }
  for (int v = k + 1; v < n; ++v) {
    const Clique q = kcliques[rng.next_u32() % kcliques.size()];
    plan.steps.push_back({q, v});
    for (int i = 0; i < k; ++i) {
      Clique fresh;
      for (int j = 0; j < k; ++j)
        if (j != i) fresh.push_back(q[static_cast<size_t>(j)]);
      fresh.push_back(v);
      std::sort(fresh.begin(), fresh.end());
      kcliques.push_back(std::move(fresh));
    }
  }
  return plan;
}

// Clique-tree decomposition of a realized k-tree plan: one node per
// attachment, bags are the (k+1)-cliques.
inline TreeDecomp ktree_plan_decomposition(const KTreeBuildPlan& plan) {
  TreeDecomp td;
  int n = 0;
  for (int v : plan.base) n = std::max(n, v + 1);
  for (const auto& st : plan.steps) n = std::max(n, st.vertex + 1);
  std::vector<int> intro(static_cast<size_t>(n), 0);
  td.parent.push_back(-1);
  td.bags.push_back(plan.base);
  std::sort(td.bags[0].begin(), td.bags[0].end());
  int node = 1;
  std::vector<int> intro_time(static_cast<size_t>(n), 0);
  for (size_t t = 0; t < plan.steps.size(); ++t) {
    const auto& st = plan.steps[t];
    int parent = 0;
    int latest = -1;
    for (int q : st.clique)
      if (intro_time[static_cast<size_t>(q)] > latest) {
        latest = intro_time[static_cast<size_t>(q)];
        parent = intro[static_cast<size_t>(q)];
      }
    std::vector<int> bag = st.clique;
    bag.push_back(st.vertex);
    std::sort(bag.begin(), bag.end());
    td.parent.push_back(parent);
    td.bags.push_back(std::move(bag));
    intro[static_cast<size_t>(st.vertex)] = node;
    intro_time[static_cast<size_t>(st.vertex)] = static_cast<int>(t) + 1;
    ++node;
  }
  return td;
}

// Random partial 2-tree: a 2-tree with edges dropped, plus a width-2
// decomposition inherited from the 2-tree.
struct PartialKTree {
  Graph graph;
  TreeDecomp td;
};

inline PartialKTree random_partial_2tree(DyadicRng& rng, int n, int drop_percent) {
  KTreeBuildPlan plan = random_ktree_plan(rng, 2, n);
  Graph full = ktree_realize(plan);
  PartialKTree out;
  out.graph = Graph(full.vertex_count());
  for (auto [u, v] : full.edges())
    if (static_cast<int>(rng.next_u32() % 100) >= drop_percent) out.graph.add_edge(u, v);
  out.td = ktree_plan_decomposition(plan);
  return out;
}

}  // namespace testutil
