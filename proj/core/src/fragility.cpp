#include "boxdim/fragility.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <set>

namespace boxdim {

namespace {

BoxNd outer_of(const EnvelopeRep& e, int v) { return e.outer[static_cast<size_t>(v)]; }

// Bounding interval of the inner set in one dimension (exact for boxes; for
// balls callers use the squared-distance tests instead).
bool inner_is_box(const EnvelopeRep& e, int v) {
  return std::holds_alternative<BoxNd>(e.inner[static_cast<size_t>(v)]);
}

}  // namespace

std::vector<std::vector<Rational>> grid_spacings(const EnvelopeRep& e, int k) {
  if (k < 2) throw std::invalid_argument("grid_spacings: k >= 2 required");
  int n = e.graph.vertex_count();
  int d = e.dim;
  Rational ksd = Rational(k) * e.s * d;
  std::vector<std::vector<Rational>> ell;
  ell.reserve(static_cast<size_t>(n));
  for (int pos = 0; pos < n; ++pos) {
    int v = e.order[static_cast<size_t>(pos)];
    std::vector<Rational> row(static_cast<size_t>(d));
    for (int j = 0; j < d; ++j) {
      Rational w = outer_of(e, v)[j].length();
      Rational target = ksd * w;
      if (pos == 0) {
        row[static_cast<size_t>(j)] = target;
      } else {
        const Rational& prev = ell[static_cast<size_t>(pos - 1)][static_cast<size_t>(j)];
        if (prev < target) {
          row[static_cast<size_t>(j)] = prev;
        } else {
          BigInt b = rational_floor_quotient(prev, target);
          if (b < 1) b = 1;
          row[static_cast<size_t>(j)] = prev / Rational(b);
        }
      }
    }
    ell.push_back(std::move(row));
  }
  return ell;
}

GridSchedule build_schedule(const EnvelopeRep& e, int k, uint64_t seed) {
  GridSchedule sched;
  sched.k = k;
  sched.s = e.s;
  sched.t = e.t;
  sched.d = e.dim;
  sched.seed = seed;
  sched.ell = grid_spacings(e, k);
  DyadicRng rng(seed);
  sched.offsets.reserve(static_cast<size_t>(e.dim));
  for (int j = 0; j < e.dim; ++j) {
    uint32_t m = rng.next_u32();
    Rational frac(static_cast<unsigned long>(m));
    frac /= pow2(32);
    Rational base = sched.ell.empty() ? Rational(1) : sched.ell[0][static_cast<size_t>(j)];
    sched.offsets.push_back(frac * base);
  }
  return sched;
}

namespace {

// exists integer m with x + m*ell inside [lo, hi]
bool lattice_hits_interval(const Rational& x, const Rational& ell, const Rational& lo,
                           const Rational& hi) {
  BigInt first = rational_ceil(Rational((lo - x) / ell));
  BigInt last = rational_floor(Rational((hi - x) / ell));
  return first <= last;
}

}  // namespace

DeletionSample sample_deletion(const EnvelopeRep& e, const GridSchedule& sched) {
  int n = e.graph.vertex_count();
  DeletionSample out;
  out.seed = sched.seed;
  out.deleted.assign(static_cast<size_t>(n), false);
  for (int pos = 0; pos < n; ++pos) {
    int v = e.order[static_cast<size_t>(pos)];
    const BoxNd& w = e.outer[static_cast<size_t>(v)];
    for (int j = 0; j < e.dim; ++j) {
      if (lattice_hits_interval(sched.offsets[static_cast<size_t>(j)],
                                sched.ell[static_cast<size_t>(pos)][static_cast<size_t>(j)],
                                w[j].lo, w[j].hi)) {
        out.deleted[static_cast<size_t>(v)] = true;
        break;
      }
    }
  }
  return out;
}

bool deletion_recheck(const EnvelopeRep& e, const GridSchedule& sched, int vertex) {
  int pos = -1;
  for (int p = 0; p < e.graph.vertex_count(); ++p)
    if (e.order[static_cast<size_t>(p)] == vertex) {
      pos = p;
      break;
    }
  if (pos < 0) throw std::invalid_argument("deletion_recheck: unknown vertex");
  const BoxNd& w = e.outer[static_cast<size_t>(vertex)];
  for (int j = 0; j < e.dim; ++j) {
    const Rational& x = sched.offsets[static_cast<size_t>(j)];
    const Rational& ell = sched.ell[static_cast<size_t>(pos)][static_cast<size_t>(j)];
    BigInt m = rational_ceil(Rational((w[j].lo - x) / ell));
    Rational plane = x + Rational(m) * ell;
    if (plane <= w[j].hi) return true;
  }
  return false;
}

namespace {

struct StageInfo {
  int first_pos = 0;  // 0-based position range [first_pos, last_pos]
  int last_pos = 0;
  const std::vector<Rational>* ell = nullptr;
};

std::vector<StageInfo> collect_stages(const GridSchedule& sched) {
  std::vector<StageInfo> stages;
  int n = static_cast<int>(sched.ell.size());
  for (int pos = 0; pos < n; ++pos) {
    if (!stages.empty() && *stages.back().ell == sched.ell[static_cast<size_t>(pos)]) {
      stages.back().last_pos = pos;
    } else {
      StageInfo s;
      s.first_pos = s.last_pos = pos;
      s.ell = &sched.ell[static_cast<size_t>(pos)];
      stages.push_back(s);
    }
  }
  return stages;
}

// Cell coordinates of the stage cell containing the inner set, or nullopt if
// a stage hyperplane cuts (or touches) it.
std::optional<std::vector<BigInt>> cell_containing(const InnerSet& inner,
                                                   const GridSchedule& sched,
                                                   const std::vector<Rational>& ell) {
  int d = sched.d;
  std::vector<BigInt> coords(static_cast<size_t>(d));
  if (const BoxNd* box = std::get_if<BoxNd>(&inner)) {
    for (int j = 0; j < d; ++j) {
      const Rational& x = sched.offsets[static_cast<size_t>(j)];
      const Rational& lj = ell[static_cast<size_t>(j)];
      BigInt m = rational_floor(Rational(((*box)[j].lo - x) / lj));
      Rational below = x + Rational(m) * lj;
      Rational above = below + lj;
      if (!((*box)[j].lo > below && (*box)[j].hi < above)) return std::nullopt;
      coords[static_cast<size_t>(j)] = m;
    }
    return coords;
  }
  const Ball& ball = std::get<Ball>(inner);
  for (int j = 0; j < d; ++j) {
    const Rational& x = sched.offsets[static_cast<size_t>(j)];
    const Rational& lj = ell[static_cast<size_t>(j)];
    const Rational& c = ball.center[static_cast<size_t>(j)];
    BigInt m = rational_floor(Rational((c - x) / lj));
    Rational below = x + Rational(m) * lj;
    Rational above = below + lj;
    Rational dl = c - below, da = above - c;
    if (!(dl * dl > ball.radius2 && da * da > ball.radius2)) return std::nullopt;
    coords[static_cast<size_t>(j)] = m;
  }
  return coords;
}

// inner set meets the open cell (x + m*ell, x + (m+1)*ell)
bool inner_meets_cell(const InnerSet& inner, const GridSchedule& sched,
                      const std::vector<Rational>& ell, const std::vector<BigInt>& coords) {
  int d = sched.d;
  if (const BoxNd* box = std::get_if<BoxNd>(&inner)) {
    for (int j = 0; j < d; ++j) {
      Rational below = sched.offsets[static_cast<size_t>(j)] +
                       Rational(coords[static_cast<size_t>(j)]) * ell[static_cast<size_t>(j)];
      Rational above = below + ell[static_cast<size_t>(j)];
      if (!((*box)[j].hi > below && (*box)[j].lo < above)) return false;
    }
    return true;
  }
  const Ball& ball = std::get<Ball>(inner);
  Rational dist2(0);
  for (int j = 0; j < d; ++j) {
    Rational below = sched.offsets[static_cast<size_t>(j)] +
                     Rational(coords[static_cast<size_t>(j)]) * ell[static_cast<size_t>(j)];
    Rational above = below + ell[static_cast<size_t>(j)];
    const Rational& c = ball.center[static_cast<size_t>(j)];
    Rational gap(0);
    if (c <= below)
      gap = below - c;
    else if (c >= above)
      gap = c - above;
    dist2 += gap * gap;
  }
  // closed ball vs open box: at distance exactly r only the boundary touches
  return dist2 < ball.radius2;
}

}  // namespace

CellTree build_cell_tree(const EnvelopeRep& e, const GridSchedule& sched,
                         const DeletionSample& sample) {
  int n = e.graph.vertex_count();
  CellTree ct;
  if (n == 0) return ct;
  std::vector<StageInfo> stages = collect_stages(sched);

  struct Key {
    int stage;
    std::vector<BigInt> coords;
    bool operator<(const Key& o) const {
      if (stage != o.stage) return stage < o.stage;
      for (size_t i = 0; i < coords.size(); ++i) {
        int c = cmp(coords[i], o.coords[i]);
        if (c != 0) return c < 0;
      }
      return false;
    }
  };
  std::map<Key, int> cell_index;  // -> max_level (redundant; all cells of a stage share it)

  std::vector<int> survivors;
  for (int pos = 0; pos < n; ++pos) {
    int v = e.order[static_cast<size_t>(pos)];
    if (sample.deleted[static_cast<size_t>(v)]) continue;
    survivors.push_back(v);
    const InnerSet& inner = e.inner[static_cast<size_t>(v)];
    for (size_t s = 0; s < stages.size(); ++s) {
      auto coords = cell_containing(inner, sched, *stages[s].ell);
      if (!coords) {
        if (stages[s].first_pos <= pos)
          throw std::logic_error("build_cell_tree: surviving inner set crosses its own grid");
        break;
      }
      cell_index.insert({Key{static_cast<int>(s), std::move(*coords)}, 0});
      if (stages[s].last_pos >= n - 1) break;
    }
  }
  ct.survivors = static_cast<int>(survivors.size());

  // materialize in deterministic (stage, coords) order
  std::vector<Key> keys;
  keys.reserve(cell_index.size());
  for (auto& [key, idx] : cell_index) keys.push_back(key);
  for (size_t i = 0; i < keys.size(); ++i) cell_index[keys[i]] = static_cast<int>(i);

  std::vector<CellTree::Cell> cells(keys.size());
  for (size_t i = 0; i < keys.size(); ++i) {
    CellTree::Cell& c = cells[i];
    c.stage = keys[i].stage;
    c.coords = keys[i].coords;
    c.max_level = stages[static_cast<size_t>(c.stage)].last_pos + 1;  // 1-based
  }

  // parents: nearest materialized ancestor by exact coordinate division
  for (size_t i = 0; i < cells.size(); ++i) {
    CellTree::Cell& c = cells[i];
    c.parent = -1;
    for (int s = c.stage - 1; s >= 0; --s) {
      std::vector<BigInt> up(static_cast<size_t>(sched.d));
      bool ok = true;
      for (int j = 0; j < sched.d; ++j) {
        Rational ratio = (*stages[static_cast<size_t>(s)].ell)[static_cast<size_t>(j)] /
                         (*stages[static_cast<size_t>(c.stage)].ell)[static_cast<size_t>(j)];
        if (ratio.get_den() != 1) {
          ok = false;
          break;
        }
        up[static_cast<size_t>(j)] = floor_div(c.coords[static_cast<size_t>(j)],
                                               BigInt(ratio.get_num()));
      }
      if (!ok) throw std::logic_error("build_cell_tree: spacings do not nest");
      auto it = cell_index.find(Key{s, std::move(up)});
      if (it != cell_index.end()) {
        c.parent = it->second;
        break;
      }
    }
  }

  // bags: the honest membership rule
  for (size_t i = 0; i < cells.size(); ++i) {
    CellTree::Cell& c = cells[i];
    for (int pos = 0; pos < n && pos + 1 <= c.max_level; ++pos) {
      int v = e.order[static_cast<size_t>(pos)];
      if (sample.deleted[static_cast<size_t>(v)]) continue;
      if (inner_meets_cell(e.inner[static_cast<size_t>(v)], sched,
                           *stages[static_cast<size_t>(c.stage)].ell, c.coords))
        c.bag.push_back(v);
    }
    std::sort(c.bag.begin(), c.bag.end());
  }

  // prune empty bags, re-link by transitive containment
  std::vector<int> new_index(cells.size(), -1);
  std::vector<CellTree::Cell> kept;
  for (size_t i = 0; i < cells.size(); ++i) {
    if (cells[i].bag.empty()) continue;
    new_index[i] = static_cast<int>(kept.size());
    kept.push_back(cells[i]);
  }
  for (auto& c : kept) {
    int p = c.parent;
    while (p != -1 && new_index[static_cast<size_t>(p)] == -1)
      p = cells[static_cast<size_t>(p)].parent;
    c.parent = p == -1 ? -1 : new_index[static_cast<size_t>(p)];
  }
  ct.cells = std::move(kept);
  return ct;
}

TreeDecomp build_decomposition(const CellTree& ct) {
  TreeDecomp td;
  td.parent.assign(ct.cells.size() + 1, -1);
  td.bags.assign(ct.cells.size() + 1, {});
  for (size_t i = 0; i < ct.cells.size(); ++i) {
    td.parent[i + 1] = ct.cells[i].parent + 1;  // virtual root is node 0
    td.bags[i + 1] = ct.cells[i].bag;
  }
  return td;
}

Rational fragility_width_bound(int k, long s, long t, int d) {
  Rational base = Rational(2) * k * s * d + 2;
  Rational f(1);
  for (int j = 0; j < d; ++j) f *= base;
  f *= s;
  f *= t;
  return f;
}

namespace {

Rational discretization_slack(const GridSchedule& sched) {
  // per-vertex analytic slack: sum_j gcd(ell_1/ell_a, 2^32) / 2^32
  Rational worst(0);
  BigInt two32 = BigInt(1) << 32;
  for (size_t pos = 0; pos < sched.ell.size(); ++pos) {
    Rational total(0);
    for (int j = 0; j < sched.d; ++j) {
      Rational ratio = sched.ell[0][static_cast<size_t>(j)] /
                       sched.ell[pos][static_cast<size_t>(j)];
      if (ratio.get_den() != 1) continue;  // spacings nest; defensive
      BigInt q(ratio.get_num());
      BigInt g;
      mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), two32.get_mpz_t());
      total += Rational(g) / Rational(two32);
    }
    if (total > worst) worst = total;
  }
  return worst;
}

}  // namespace

ExperimentReport fragility_experiment(const EnvelopeRep& e, int k, int N, uint64_t seed) {
  auto t0 = std::chrono::steady_clock::now();
  ExperimentReport rep;
  rep.k = k;
  rep.samples = N;
  rep.seed = seed;
  rep.n = e.graph.vertex_count();
  rep.d = e.dim;
  rep.s = e.s;
  rep.t = e.t;
  rep.bag_bound = fragility_width_bound(k, e.s, e.t, e.dim) + 1;
  rep.deletion_counts.assign(static_cast<size_t>(rep.n), 0);

  GridSchedule sched;
  sched.k = k;
  sched.s = e.s;
  sched.t = e.t;
  sched.d = e.dim;
  sched.ell = grid_spacings(e, k);
  rep.discretization_slack = discretization_slack(sched);

  for (int it = 0; it < N; ++it) {
    uint64_t rep_seed = derive_seed(seed, static_cast<uint64_t>(it));
    DyadicRng rng(rep_seed);
    sched.seed = rep_seed;
    sched.offsets.clear();
    for (int j = 0; j < e.dim; ++j) {
      Rational frac(static_cast<unsigned long>(rng.next_u32()));
      frac /= pow2(32);
      sched.offsets.push_back(frac * sched.ell[0][static_cast<size_t>(j)]);
    }

    DeletionSample sample = sample_deletion(e, sched);
    std::vector<bool> present(static_cast<size_t>(rep.n));
    for (int v = 0; v < rep.n; ++v) {
      if (sample.deleted[static_cast<size_t>(v)]) ++rep.deletion_counts[static_cast<size_t>(v)];
      present[static_cast<size_t>(v)] = !sample.deleted[static_cast<size_t>(v)];
      if (deletion_recheck(e, sched, v) != sample.deleted[static_cast<size_t>(v)])
        rep.violations.push_back("sample " + std::to_string(it) + ": deletion recheck mismatch at vertex " +
                                 std::to_string(v));
    }

    CellTree ct = build_cell_tree(e, sched, sample);
    TreeDecomp td = build_decomposition(ct);
    Report check = verify_tree_decomposition(e.graph, td, &present);
    if (!check.ok())
      rep.violations.push_back("sample " + std::to_string(it) +
                               ": invalid decomposition: " + check.summary());
    int w = width(td);
    ++rep.width_histogram[w];
    if (w > rep.max_width) rep.max_width = w;
    for (const auto& cell : ct.cells)
      if (Rational(static_cast<long>(cell.bag.size())) > rep.bag_bound)
        rep.violations.push_back("sample " + std::to_string(it) + ": bag of size " +
                                 std::to_string(cell.bag.size()) + " exceeds the bound");
  }
  auto t1 = std::chrono::steady_clock::now();
  rep.wall_clock_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
  return rep;
}

SeparatorResult balanced_separator(const EnvelopeRep& e, int k, uint64_t seed) {
  int n = e.graph.vertex_count();
  SeparatorResult out;
  GridSchedule sched;
  sched.k = k;
  sched.s = e.s;
  sched.t = e.t;
  sched.d = e.dim;
  sched.ell = grid_spacings(e, k);

  std::optional<DeletionSample> chosen;
  int chosen_size = n + 1;
  for (int draw = 0; draw < 64; ++draw) {
    uint64_t rep_seed = derive_seed(seed, static_cast<uint64_t>(draw));
    DyadicRng rng(rep_seed);
    sched.seed = rep_seed;
    sched.offsets.clear();
    for (int j = 0; j < e.dim; ++j) {
      Rational frac(static_cast<unsigned long>(rng.next_u32()));
      frac /= pow2(32);
      sched.offsets.push_back(frac * sched.ell[0][static_cast<size_t>(j)]);
    }
    DeletionSample sample = sample_deletion(e, sched);
    int deleted = static_cast<int>(std::count(sample.deleted.begin(), sample.deleted.end(), true));
    out.draws = draw + 1;
    if (deleted < chosen_size) {
      chosen = sample;
      chosen_size = deleted;
      sched.seed = rep_seed;
    }
    if (static_cast<long>(deleted) * k <= n) break;  // |X| <= n/k
    if (draw == 63) out.flagged = true;
  }
  // rebuild the schedule of the chosen sample
  {
    DyadicRng rng(chosen->seed);
    sched.seed = chosen->seed;
    sched.offsets.clear();
    for (int j = 0; j < e.dim; ++j) {
      Rational frac(static_cast<unsigned long>(rng.next_u32()));
      frac /= pow2(32);
      sched.offsets.push_back(frac * sched.ell[0][static_cast<size_t>(j)]);
    }
  }

  for (int v = 0; v < n; ++v)
    if (chosen->deleted[static_cast<size_t>(v)]) out.deleted.push_back(v);

  CellTree ct = build_cell_tree(e, sched, *chosen);
  TreeDecomp td = build_decomposition(ct);

  std::vector<int> survivors;
  for (int v = 0; v < n; ++v)
    if (!chosen->deleted[static_cast<size_t>(v)]) survivors.push_back(v);
  long half_bound = static_cast<long>(survivors.size());  // 2*|comp| <= survivors

  // centroid bag: split components of (G - X) - S by BFS over survivors
  auto max_component = [&](const std::vector<int>& bag) {
    std::set<int> blocked(bag.begin(), bag.end());
    std::vector<bool> seen(static_cast<size_t>(n), false);
    for (int v : out.deleted) seen[static_cast<size_t>(v)] = true;
    for (int v : bag) seen[static_cast<size_t>(v)] = true;
    long biggest = 0;
    for (int v : survivors) {
      if (seen[static_cast<size_t>(v)]) continue;
      long size = 0;
      std::vector<int> stack{v};
      seen[static_cast<size_t>(v)] = true;
      while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        ++size;
        for (int y : e.graph.neighbors(x)) {
          if (seen[static_cast<size_t>(y)] || chosen->deleted[static_cast<size_t>(y)]) continue;
          seen[static_cast<size_t>(y)] = true;
          stack.push_back(y);
        }
      }
      biggest = std::max(biggest, size);
    }
    return biggest;
  };

  for (const auto& bag : td.bags) {
    long biggest = max_component(bag);
    if (2 * biggest <= half_bound) {
      out.separator = bag;
      out.remainder_max_component = static_cast<int>(biggest);
      return out;
    }
  }
  // a balancing bag always exists; keep the last resort deterministic
  out.separator = td.bags.empty() ? std::vector<int>{} : td.bags.back();
  out.remainder_max_component = static_cast<int>(max_component(out.separator));
  out.flagged = true;
  return out;
}

}  // namespace boxdim
