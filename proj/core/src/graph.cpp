#include "boxdim/graph.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>
#include <stdexcept>

namespace boxdim {

Graph::Graph(int n) : n_(n), m_(0) {
  if (n < 0) throw std::invalid_argument("graph: negative vertex count");
  adj_.assign(static_cast<size_t>(n), std::vector<bool>(static_cast<size_t>(n), false));
  adj_list_.assign(static_cast<size_t>(n), {});
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

bool Graph::has_edge(int u, int v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) return false;
  return adj_[static_cast<size_t>(u)][static_cast<size_t>(v)];
}

void Graph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_)
    throw std::out_of_range("graph: vertex id out of range");
  if (u == v) throw std::invalid_argument("graph: loops not allowed");
  if (adj_[static_cast<size_t>(u)][static_cast<size_t>(v)]) return;
  adj_[static_cast<size_t>(u)][static_cast<size_t>(v)] = true;
  adj_[static_cast<size_t>(v)][static_cast<size_t>(u)] = true;
  adj_list_[static_cast<size_t>(u)].push_back(v);
  adj_list_[static_cast<size_t>(v)].push_back(u);
  ++m_;
}

const std::vector<int>& Graph::neighbors(int v) const {
  return adj_list_.at(static_cast<size_t>(v));
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<size_t>(m_));
  for (int u = 0; u < n_; ++u)
    for (int v : adj_list_[static_cast<size_t>(u)])
      if (u < v) out.emplace_back(u, v);
  std::sort(out.begin(), out.end());
  return out;
}

bool Graph::operator==(const Graph& o) const {
  return n_ == o.n_ && m_ == o.m_ && edges() == o.edges();
}

bool is_clique(const Graph& g, const Clique& c) {
  for (size_t i = 0; i < c.size(); ++i)
    for (size_t j = i + 1; j < c.size(); ++j)
      if (!g.has_edge(c[i], c[j])) return false;
  return true;
}

namespace {

size_t clique_cap_from_env() {
  if (const char* s = std::getenv("BOXDIM_CLIQUE_CAP")) {
    long v = std::atol(s);
    if (v > 0) return static_cast<size_t>(v);
  }
  return size_t{1} << 20;
}

void extend_cliques(const Graph& g, Clique& cur, int next_min, size_t cap,
                    std::vector<Clique>& out) {
  out.push_back(cur);
  if (out.size() > cap)
    throw std::runtime_error("enumerate_cliques: clique cap exceeded");
  for (int v = next_min; v < g.vertex_count(); ++v) {
    bool ok = true;
    for (int u : cur)
      if (!g.has_edge(u, v)) {
        ok = false;
        break;
      }
    if (!ok) continue;
    cur.push_back(v);
    extend_cliques(g, cur, v + 1, cap, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Clique> enumerate_cliques(const Graph& g, size_t cap) {
  if (cap == 0) cap = clique_cap_from_env();
  std::vector<Clique> out;
  Clique cur;
  extend_cliques(g, cur, 0, cap, out);
  return out;
}

namespace {

void max_clique_rec(const Graph& g, std::vector<int>& cand, int cur_size, int& best) {
  if (cur_size + static_cast<int>(cand.size()) <= best) return;
  if (cand.empty()) {
    best = std::max(best, cur_size);
    return;
  }
  int v = cand.back();
  cand.pop_back();
  // branch including v
  std::vector<int> next;
  next.reserve(cand.size());
  for (int u : cand)
    if (g.has_edge(u, v)) next.push_back(u);
  max_clique_rec(g, next, cur_size + 1, best);
  // branch excluding v
  max_clique_rec(g, cand, cur_size, best);
  cand.push_back(v);
}

}  // namespace

int max_clique_size(const Graph& g) {
  std::vector<int> cand(static_cast<size_t>(g.vertex_count()));
  std::iota(cand.begin(), cand.end(), 0);
  int best = 0;
  max_clique_rec(g, cand, 0, best);
  return best;
}

int Coloring::color_count() const {
  int c = 0;
  for (int x : colors) c = std::max(c, x);
  return c;
}

namespace {

void check_order(const Graph& g, const std::vector<int>& order) {
  int n = g.vertex_count();
  if (static_cast<int>(order.size()) != n)
    throw std::invalid_argument("coloring order: not a permutation");
  std::vector<bool> seen(static_cast<size_t>(n), false);
  for (int v : order) {
    if (v < 0 || v >= n || seen[static_cast<size_t>(v)])
      throw std::invalid_argument("coloring order: not a permutation");
    seen[static_cast<size_t>(v)] = true;
  }
}

}  // namespace

Coloring greedy_star_coloring(const Graph& g, const std::vector<int>& order,
                              StarGreedyRule rule) {
  check_order(g, order);
  int n = g.vertex_count();
  std::vector<int> pos(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) pos[static_cast<size_t>(order[static_cast<size_t>(i)])] = i;

  Coloring col;
  col.kind = ColoringKind::Star;
  col.colors.assign(static_cast<size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    int vi = order[static_cast<size_t>(i)];
    std::set<int> forbidden;
    for (int j = 0; j < i; ++j) {
      int vj = order[static_cast<size_t>(j)];
      bool conflict = g.has_edge(vj, vi);
      if (!conflict) {
        int m_limit = (rule == StarGreedyRule::Between) ? i : n;
        for (int vm : g.neighbors(vj)) {
          int m = pos[static_cast<size_t>(vm)];
          if (m > j && m < m_limit && g.has_edge(vm, vi)) {
            conflict = true;
            break;
          }
        }
      }
      if (conflict) forbidden.insert(col.colors[static_cast<size_t>(vj)]);
    }
    int c = 1;
    while (forbidden.count(c)) ++c;
    col.colors[static_cast<size_t>(vi)] = c;
  }
  return col;
}

Coloring greedy_proper_coloring(const Graph& g, const std::vector<int>& order) {
  check_order(g, order);
  Coloring col;
  col.kind = ColoringKind::Proper;
  col.colors.assign(static_cast<size_t>(g.vertex_count()), 0);
  for (int v : order) {
    std::set<int> forbidden;
    for (int u : g.neighbors(v)) {
      int cu = col.colors[static_cast<size_t>(u)];
      if (cu > 0) forbidden.insert(cu);
    }
    int c = 1;
    while (forbidden.count(c)) ++c;
    col.colors[static_cast<size_t>(v)] = c;
  }
  return col;
}

Report verify_coloring(const Graph& g, const Coloring& c) {
  Report rep;
  int n = g.vertex_count();
  if (static_cast<int>(c.colors.size()) != n) {
    rep.fail("size", "coloring does not cover all vertices");
    return rep;
  }
  for (int v = 0; v < n; ++v)
    if (c.colors[static_cast<size_t>(v)] <= 0)
      rep.fail("color-range", "vertex " + std::to_string(v) + " has non-positive color");
  for (auto [u, v] : g.edges())
    if (c.colors[static_cast<size_t>(u)] == c.colors[static_cast<size_t>(v)])
      rep.fail("proper", "edge " + std::to_string(u) + "-" + std::to_string(v) +
                             " monochromatic");
  if (c.kind == ColoringKind::Star && rep.ok()) {
    // scan all paths a-b-c-d for bicolored witnesses
    for (auto [b, cc] : g.edges()) {
      for (int pass = 0; pass < 2; ++pass) {
        int x = pass == 0 ? b : cc;
        int y = pass == 0 ? cc : b;
        if (c.colors[static_cast<size_t>(x)] == c.colors[static_cast<size_t>(y)]) continue;
        for (int a : g.neighbors(x)) {
          if (a == y) continue;
          if (c.colors[static_cast<size_t>(a)] != c.colors[static_cast<size_t>(y)]) continue;
          for (int d : g.neighbors(y)) {
            if (d == x || d == a) continue;
            if (c.colors[static_cast<size_t>(d)] == c.colors[static_cast<size_t>(x)]) {
              rep.fail("star", "bicolored P4 " + std::to_string(a) + "-" +
                                   std::to_string(x) + "-" + std::to_string(y) + "-" +
                                   std::to_string(d));
              return rep;
            }
          }
        }
      }
    }
  }
  return rep;
}

Report verify_tree_decomposition(const Graph& g, const TreeDecomp& td,
                                 const std::vector<bool>* present) {
  Report rep;
  int n = g.vertex_count();
  int t = td.node_count();
  if (static_cast<int>(td.bags.size()) != t) {
    rep.fail("shape", "parent/bags size mismatch");
    return rep;
  }
  auto active = [&](int v) { return present == nullptr || (*present)[static_cast<size_t>(v)]; };

  // tree structure: exactly one root, no cycles
  int roots = 0;
  for (int x = 0; x < t; ++x) {
    int p = td.parent[static_cast<size_t>(x)];
    if (p == -1)
      ++roots;
    else if (p < 0 || p >= t)
      rep.fail("tree", "node " + std::to_string(x) + " has invalid parent");
  }
  if (t > 0 && roots != 1) rep.fail("tree", "expected exactly one root");
  {
    std::vector<int> depth(static_cast<size_t>(t), -1);
    for (int x = 0; x < t && rep.ok(); ++x) {
      int steps = 0, y = x;
      while (y != -1 && depth[static_cast<size_t>(y)] == -1 && steps <= t) {
        y = td.parent[static_cast<size_t>(y)];
        ++steps;
      }
      if (steps > t) {
        rep.fail("tree", "parent pointers contain a cycle");
        break;
      }
      y = x;
      while (y != -1 && depth[static_cast<size_t>(y)] == -1) {
        depth[static_cast<size_t>(y)] = 0;
        y = td.parent[static_cast<size_t>(y)];
      }
    }
  }
  if (!rep.ok()) return rep;

  std::vector<std::vector<int>> nodes_of(static_cast<size_t>(n));
  for (int x = 0; x < t; ++x) {
    for (int v : td.bags[static_cast<size_t>(x)]) {
      if (v < 0 || v >= n) {
        rep.fail("bag-range", "node " + std::to_string(x) + " contains unknown vertex " +
                                  std::to_string(v));
        continue;
      }
      if (!active(v))
        rep.fail("bag-deleted", "node " + std::to_string(x) + " contains deleted vertex " +
                                    std::to_string(v));
      nodes_of[static_cast<size_t>(v)].push_back(x);
    }
  }

  for (auto [u, v] : g.edges()) {
    if (!active(u) || !active(v)) continue;
    bool covered = false;
    for (int x : nodes_of[static_cast<size_t>(u)]) {
      const auto& bag = td.bags[static_cast<size_t>(x)];
      if (std::binary_search(bag.begin(), bag.end(), v)) {
        covered = true;
        break;
      }
    }
    if (!covered)
      rep.fail("edge-uncovered",
               "edge " + std::to_string(u) + "-" + std::to_string(v) + " in no bag");
  }

  for (int v = 0; v < n; ++v) {
    if (!active(v)) continue;
    const auto& nodes = nodes_of[static_cast<size_t>(v)];
    if (nodes.empty()) {
      rep.fail("vertex-missing", "vertex " + std::to_string(v) + " in no bag");
      continue;
    }
    // connectivity: climbing from each node toward the root must stay in the
    // set until reaching its unique top element
    std::vector<bool> in_set(static_cast<size_t>(t), false);
    for (int x : nodes) in_set[static_cast<size_t>(x)] = true;
    int tops = 0;
    for (int x : nodes) {
      int p = td.parent[static_cast<size_t>(x)];
      if (p == -1 || !in_set[static_cast<size_t>(p)]) ++tops;
    }
    if (tops != 1)
      rep.fail("vertex-disconnected",
               "vertex " + std::to_string(v) + " induces a disconnected node set");
  }
  return rep;
}

int width(const TreeDecomp& td) {
  int w = -1;
  for (const auto& bag : td.bags) w = std::max(w, static_cast<int>(bag.size()) - 1);
  return w;
}

Graph ktree_realize(const KTreeBuildPlan& plan) {
  int k = plan.k;
  if (k < 0) throw std::invalid_argument("ktree plan: negative k");
  if (plan.base.empty() || static_cast<int>(plan.base.size()) > k + 1)
    throw std::invalid_argument("ktree plan: base must have 1..k+1 vertices");
  int n = 0;
  for (int v : plan.base) n = std::max(n, v + 1);
  for (const auto& st : plan.steps) n = std::max(n, st.vertex + 1);

  Graph g(n);
  std::vector<bool> placed(static_cast<size_t>(n), false);
  for (size_t i = 0; i < plan.base.size(); ++i) {
    int v = plan.base[i];
    if (placed[static_cast<size_t>(v)])
      throw std::invalid_argument("ktree plan: duplicate base vertex");
    placed[static_cast<size_t>(v)] = true;
    for (size_t j = 0; j < i; ++j) g.add_edge(plan.base[j], v);
  }
  for (const auto& st : plan.steps) {
    if (static_cast<int>(st.clique.size()) != k)
      throw std::invalid_argument("ktree plan: attachment set is not a k-set");
    for (int u : st.clique)
      if (u < 0 || u >= n || !placed[static_cast<size_t>(u)])
        throw std::invalid_argument("ktree plan: attachment vertex not placed yet");
    if (!is_clique(g, st.clique))
      throw std::invalid_argument("ktree plan: attachment set not a clique");
    if (placed[static_cast<size_t>(st.vertex)])
      throw std::invalid_argument("ktree plan: vertex placed twice");
    placed[static_cast<size_t>(st.vertex)] = true;
    for (int u : st.clique) g.add_edge(u, st.vertex);
  }
  for (int v = 0; v < n; ++v)
    if (!placed[static_cast<size_t>(v)])
      throw std::invalid_argument("ktree plan: vertex ids must be contiguous");
  return g;
}

namespace {

struct SmoothNode {
  std::vector<int> bag;  // sorted
  int parent = -1;
};

// Pads bags to exactly k+1 vertices and splits parent-child transitions into
// single-vertex swaps. Assumes a valid decomposition of width <= k over at
// least k+1 vertices.
std::vector<SmoothNode> smooth_decomposition(const Graph& g, const TreeDecomp& td, int k) {
  int t = td.node_count();
  std::vector<std::vector<int>> bags(static_cast<size_t>(t));
  std::vector<std::vector<int>> children(static_cast<size_t>(t));
  int root = 0;
  for (int x = 0; x < t; ++x) {
    bags[static_cast<size_t>(x)] = td.bags[static_cast<size_t>(x)];
    std::sort(bags[static_cast<size_t>(x)].begin(), bags[static_cast<size_t>(x)].end());
    int p = td.parent[static_cast<size_t>(x)];
    if (p == -1)
      root = x;
    else
      children[static_cast<size_t>(p)].push_back(x);
  }

  // pad bags from neighbors until all have k+1 vertices
  bool progress = true;
  auto deficient = [&]() {
    for (int x = 0; x < t; ++x)
      if (static_cast<int>(bags[static_cast<size_t>(x)].size()) < k + 1) return true;
    return false;
  };
  while (deficient() && progress) {
    progress = false;
    for (int x = 0; x < t; ++x) {
      auto& bag = bags[static_cast<size_t>(x)];
      if (static_cast<int>(bag.size()) >= k + 1) continue;
      std::vector<int> nb;
      if (td.parent[static_cast<size_t>(x)] != -1)
        nb.push_back(td.parent[static_cast<size_t>(x)]);
      for (int c : children[static_cast<size_t>(x)]) nb.push_back(c);
      for (int y : nb) {
        for (int v : bags[static_cast<size_t>(y)]) {
          if (!std::binary_search(bag.begin(), bag.end(), v)) {
            bag.insert(std::lower_bound(bag.begin(), bag.end(), v), v);
            progress = true;
            break;
          }
        }
        if (static_cast<int>(bag.size()) >= k + 1) break;
      }
    }
  }
  if (deficient())
    throw std::invalid_argument("ktree_embed: cannot pad bags to width k");

  // preorder from the root, inserting swap chains
  std::vector<SmoothNode> out;
  std::vector<std::pair<int, int>> stack;  // (td node, parent index in out)
  stack.emplace_back(root, -1);
  while (!stack.empty()) {
    auto [x, pidx] = stack.back();
    stack.pop_back();
    const auto& target = bags[static_cast<size_t>(x)];
    int attach = pidx;
    if (pidx == -1) {
      out.push_back({target, -1});
      attach = static_cast<int>(out.size()) - 1;
    } else {
      std::vector<int> cur = out[static_cast<size_t>(pidx)].bag;
      std::vector<int> drop, add;
      std::set_difference(cur.begin(), cur.end(), target.begin(), target.end(),
                          std::back_inserter(drop));
      std::set_difference(target.begin(), target.end(), cur.begin(), cur.end(),
                          std::back_inserter(add));
      for (size_t i = 0; i < add.size(); ++i) {
        auto it = std::find(cur.begin(), cur.end(), drop[i]);
        cur.erase(it);
        cur.insert(std::lower_bound(cur.begin(), cur.end(), add[i]), add[i]);
        out.push_back({cur, attach});
        attach = static_cast<int>(out.size()) - 1;
      }
      if (add.empty()) attach = pidx;  // bag equal to parent's: reuse
    }
    for (int c : children[static_cast<size_t>(x)]) stack.emplace_back(c, attach);
  }
  return out;
}

}  // namespace

KTreeEmbedding ktree_embed(const Graph& g, const TreeDecomp& td) {
  Report check = verify_tree_decomposition(g, td);
  if (!check.ok())
    throw std::invalid_argument("ktree_embed: invalid tree decomposition: " +
                                check.summary());
  int k = width(td);
  if (k < 0) throw std::invalid_argument("ktree_embed: empty decomposition");
  int n = g.vertex_count();

  KTreeEmbedding emb;
  emb.plan.k = k;
  emb.root.resize(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) emb.root[static_cast<size_t>(i)] = n + i;

  // pyramid over an initial vertex set S (|S| <= k+1): attach s_i to
  // {s_0..s_{i-1}} plus a prefix of the fresh root clique
  auto pyramid = [&](const std::vector<int>& s) {
    emb.plan.base = emb.root;
    if (!s.empty()) emb.plan.base.push_back(s[0]);
    for (size_t i = 1; i < s.size(); ++i) {
      KTreeStep st;
      for (size_t j = 0; j < i; ++j) st.clique.push_back(s[j]);
      for (int c = 0; c < k - static_cast<int>(i); ++c)
        st.clique.push_back(emb.root[static_cast<size_t>(c)]);
      std::sort(st.clique.begin(), st.clique.end());
      st.vertex = s[i];
      emb.plan.steps.push_back(std::move(st));
    }
  };

  if (n <= k + 1) {
    std::vector<int> all(static_cast<size_t>(n));
    std::iota(all.begin(), all.end(), 0);
    pyramid(all);
  } else {
    auto smooth = smooth_decomposition(g, td, k);
    pyramid(smooth[0].bag);
    std::vector<bool> placed(static_cast<size_t>(n), false);
    for (int v : smooth[0].bag) placed[static_cast<size_t>(v)] = true;
    for (size_t x = 1; x < smooth.size(); ++x) {
      const auto& bag = smooth[x].bag;
      const auto& pbag = smooth[static_cast<size_t>(smooth[x].parent)].bag;
      std::vector<int> fresh;
      std::set_difference(bag.begin(), bag.end(), pbag.begin(), pbag.end(),
                          std::back_inserter(fresh));
      if (fresh.size() != 1)
        throw std::logic_error("ktree_embed: smoothing produced a non-unit step");
      int v = fresh[0];
      if (placed[static_cast<size_t>(v)])
        throw std::logic_error("ktree_embed: vertex introduced twice");
      placed[static_cast<size_t>(v)] = true;
      KTreeStep st;
      for (int u : bag)
        if (u != v) st.clique.push_back(u);
      st.vertex = v;
      emb.plan.steps.push_back(std::move(st));
    }
    for (int v = 0; v < n; ++v)
      if (!placed[static_cast<size_t>(v)])
        throw std::logic_error("ktree_embed: vertex never introduced");
  }

  emb.supergraph = ktree_realize(emb.plan);
  // sanity: G must be a subgraph of T - root
  for (auto [u, v] : g.edges())
    if (!emb.supergraph.has_edge(u, v))
      throw std::logic_error("ktree_embed: input edge missing from supergraph");
  return emb;
}

int exact_treewidth(const Graph& g) {
  int n = g.vertex_count();
  if (n > 12) throw std::invalid_argument("exact_treewidth: capped at n <= 12");
  if (n == 0) return -1;
  // f(S) = best over elimination orders starting with the vertices of S:
  // eliminating v from S costs |reach(v) through S\{v}| neighbors outside.
  int full = 1 << n;
  std::vector<int> f(static_cast<size_t>(full), n);
  f[0] = -1;
  auto q_value = [&](int mask_without_v, int v) {
    // neighbors of v outside S reachable through S (S = mask_without_v)
    std::vector<bool> seen(static_cast<size_t>(n), false);
    std::vector<int> stack{v};
    seen[static_cast<size_t>(v)] = true;
    int cnt = 0;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y : g.neighbors(x)) {
        if (seen[static_cast<size_t>(y)]) continue;
        seen[static_cast<size_t>(y)] = true;
        if (mask_without_v & (1 << y))
          stack.push_back(y);
        else
          ++cnt;
      }
    }
    return cnt;
  };
  for (int s = 1; s < full; ++s) {
    for (int v = 0; v < n; ++v) {
      if (!(s & (1 << v))) continue;
      int rest = s & ~(1 << v);
      int cand = std::max(f[static_cast<size_t>(rest)], q_value(rest, v));
      f[static_cast<size_t>(s)] = std::min(f[static_cast<size_t>(s)], cand);
    }
  }
  return f[static_cast<size_t>(full - 1)];
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& keep) {
  std::vector<int> new_id(static_cast<size_t>(g.vertex_count()), -1);
  for (size_t i = 0; i < keep.size(); ++i) new_id[static_cast<size_t>(keep[i])] = static_cast<int>(i);
  Graph out(static_cast<int>(keep.size()));
  for (auto [u, v] : g.edges()) {
    int nu = new_id[static_cast<size_t>(u)], nv = new_id[static_cast<size_t>(v)];
    if (nu != -1 && nv != -1) out.add_edge(nu, nv);
  }
  return out;
}

}  // namespace boxdim
