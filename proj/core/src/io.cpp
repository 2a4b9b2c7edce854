#include "boxdim/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace boxdim {

using json = nlohmann::ordered_json;

namespace {

[[noreturn]] void parse_fail(const std::string& what) {
  throw std::invalid_argument("parse error: " + what);
}

void check_fields(const json& obj, const std::vector<std::string>& allowed,
                  const std::string& where, const IoOptions& opts) {
  if (!obj.is_object()) parse_fail(where + ": expected an object");
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    if (std::find(allowed.begin(), allowed.end(), it.key()) == allowed.end()) {
      if (opts.strict)
        parse_fail(where + ": unknown field '" + it.key() + "'");
      else if (opts.warnings)
        opts.warnings->push_back(where + ": ignoring unknown field '" + it.key() + "'");
    }
  }
}

const json& need(const json& obj, const std::string& key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) parse_fail(where + ": missing field '" + key + "'");
  return *it;
}

int as_int(const json& v, const std::string& where) {
  if (!v.is_number_integer()) parse_fail(where + ": expected an integer");
  return v.get<int>();
}

long as_long(const json& v, const std::string& where) {
  if (!v.is_number_integer()) parse_fail(where + ": expected an integer");
  return v.get<long>();
}

Rational as_rational(const json& v, const std::string& where) {
  if (!v.is_string()) parse_fail(where + ": rationals serialize as strings");
  try {
    return parse_rational(v.get<std::string>());
  } catch (const std::exception& ex) {
    parse_fail(where + ": " + ex.what());
  }
}

int vertex_key(const std::string& key, const std::string& where) {
  try {
    size_t used = 0;
    int v = std::stoi(key, &used);
    if (used != key.size() || v < 0) parse_fail(where + ": bad vertex key '" + key + "'");
    return v;
  } catch (const std::invalid_argument&) {
    parse_fail(where + ": bad vertex key '" + key + "'");
  } catch (const std::out_of_range&) {
    parse_fail(where + ": bad vertex key '" + key + "'");
  }
}

json box_to_json(const BoxNd& b) {
  json arr = json::array();
  for (const auto& s : b.sides)
    arr.push_back(json::array({rational_to_string(s.lo), rational_to_string(s.hi)}));
  return arr;
}

BoxNd box_from_json(const json& v, const std::string& where) {
  if (!v.is_array() || v.empty()) parse_fail(where + ": a box is a non-empty array of [lo,hi]");
  std::vector<Interval> sides;
  for (const auto& side : v) {
    if (!side.is_array() || side.size() != 2) parse_fail(where + ": box side must be [lo,hi]");
    Rational lo = as_rational(side[0], where);
    Rational hi = as_rational(side[1], where);
    if (lo >= hi) parse_fail(where + ": box side needs lo < hi");
    sides.emplace_back(std::move(lo), std::move(hi));
  }
  return BoxNd(std::move(sides));
}

json point_to_json(const PointNd& p) {
  json arr = json::array();
  for (const auto& x : p) arr.push_back(rational_to_string(x));
  return arr;
}

PointNd point_from_json(const json& v, const std::string& where) {
  if (!v.is_array()) parse_fail(where + ": a point is an array of rationals");
  PointNd p;
  for (const auto& x : v) p.push_back(as_rational(x, where));
  return p;
}

json graph_to_json_obj(const Graph& g) {
  json obj;
  obj["n"] = g.vertex_count();
  json edges = json::array();
  for (auto [u, v] : g.edges()) edges.push_back(json::array({u, v}));
  obj["edges"] = std::move(edges);
  return obj;
}

Graph graph_from_json_obj(const json& obj, const IoOptions& opts, const std::string& where) {
  check_fields(obj, {"n", "edges"}, where, opts);
  int n = as_int(need(obj, "n", where), where + ".n");
  if (n < 0) parse_fail(where + ".n: negative");
  Graph g(n);
  const json& edges = need(obj, "edges", where);
  if (!edges.is_array()) parse_fail(where + ".edges: expected an array");
  for (const auto& e : edges) {
    if (!e.is_array() || e.size() != 2) parse_fail(where + ".edges: entries are [u,v]");
    int u = as_int(e[0], where + ".edges"), v = as_int(e[1], where + ".edges");
    if (u < 0 || v < 0 || u >= n || v >= n || u == v)
      parse_fail(where + ".edges: bad edge endpoint");
    g.add_edge(u, v);
  }
  return g;
}

json boxes_to_json(const std::vector<BoxNd>& boxes) {
  json obj = json::object();
  for (size_t v = 0; v < boxes.size(); ++v) obj[std::to_string(v)] = box_to_json(boxes[v]);
  return obj;
}

std::vector<BoxNd> boxes_from_json(const json& v, int n, int dim, const std::string& where) {
  if (!v.is_object()) parse_fail(where + ": expected an object keyed by vertex");
  std::vector<std::optional<BoxNd>> tmp(static_cast<size_t>(n));
  for (auto it = v.begin(); it != v.end(); ++it) {
    int vert = vertex_key(it.key(), where);
    if (vert >= n) parse_fail(where + ": vertex key out of range");
    BoxNd b = box_from_json(*it, where);
    if (b.dim() != dim) parse_fail(where + ": box dimension mismatch");
    tmp[static_cast<size_t>(vert)] = std::move(b);
  }
  std::vector<BoxNd> out;
  out.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    if (!tmp[static_cast<size_t>(i)]) parse_fail(where + ": missing box for vertex " + std::to_string(i));
    out.push_back(std::move(*tmp[static_cast<size_t>(i)]));
  }
  return out;
}

json touching_to_json_obj(const TouchingRep& r) {
  json obj;
  obj["graph"] = graph_to_json_obj(r.graph);
  obj["dim"] = r.dim;
  obj["boxes"] = boxes_to_json(r.boxes);
  return obj;
}

TouchingRep touching_from_json_obj(const json& obj, const IoOptions& opts,
                                   const std::string& where) {
  check_fields(obj, {"graph", "dim", "boxes"}, where, opts);
  TouchingRep r;
  r.graph = graph_from_json_obj(need(obj, "graph", where), opts, where + ".graph");
  r.dim = as_int(need(obj, "dim", where), where + ".dim");
  if (r.dim < 1) parse_fail(where + ".dim: must be >= 1");
  r.boxes = boxes_from_json(need(obj, "boxes", where), r.graph.vertex_count(), r.dim,
                            where + ".boxes");
  return r;
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << content;
}

std::string graph_to_json(const Graph& g) { return graph_to_json_obj(g).dump(2) + "\n"; }

Graph graph_from_json(const std::string& text, const IoOptions& opts) {
  json obj = json::parse(text, nullptr, true, true);
  return graph_from_json_obj(obj, opts, "graph");
}

std::string tree_decomp_to_json(const TreeDecomp& td) {
  json obj;
  json nodes = json::array();
  for (int x = 0; x < td.node_count(); ++x) nodes.push_back(x);
  obj["nodes"] = std::move(nodes);
  json parent = json::object();
  for (int x = 0; x < td.node_count(); ++x) {
    if (td.parent[static_cast<size_t>(x)] == -1)
      parent[std::to_string(x)] = nullptr;
    else
      parent[std::to_string(x)] = td.parent[static_cast<size_t>(x)];
  }
  obj["parent"] = std::move(parent);
  json bags = json::object();
  for (int x = 0; x < td.node_count(); ++x) bags[std::to_string(x)] = td.bags[static_cast<size_t>(x)];
  obj["bags"] = std::move(bags);
  return obj.dump(2) + "\n";
}

TreeDecomp tree_decomp_from_json(const std::string& text, const IoOptions& opts) {
  json obj = json::parse(text, nullptr, true, true);
  check_fields(obj, {"nodes", "parent", "bags"}, "tree_decomp", opts);
  const json& nodes = need(obj, "nodes", "tree_decomp");
  if (!nodes.is_array()) parse_fail("tree_decomp.nodes: expected an array");
  int m = static_cast<int>(nodes.size());
  for (int i = 0; i < m; ++i)
    if (as_int(nodes[static_cast<size_t>(i)], "tree_decomp.nodes") != i)
      parse_fail("tree_decomp.nodes: must be 0..m-1 in order");
  TreeDecomp td;
  td.parent.assign(static_cast<size_t>(m), -1);
  td.bags.assign(static_cast<size_t>(m), {});
  const json& parent = need(obj, "parent", "tree_decomp");
  if (!parent.is_object()) parse_fail("tree_decomp.parent: expected an object");
  for (auto it = parent.begin(); it != parent.end(); ++it) {
    int x = vertex_key(it.key(), "tree_decomp.parent");
    if (x >= m) parse_fail("tree_decomp.parent: node out of range");
    if (it->is_null())
      td.parent[static_cast<size_t>(x)] = -1;
    else
      td.parent[static_cast<size_t>(x)] = as_int(*it, "tree_decomp.parent");
  }
  const json& bags = need(obj, "bags", "tree_decomp");
  if (!bags.is_object()) parse_fail("tree_decomp.bags: expected an object");
  for (auto it = bags.begin(); it != bags.end(); ++it) {
    int x = vertex_key(it.key(), "tree_decomp.bags");
    if (x >= m) parse_fail("tree_decomp.bags: node out of range");
    if (!it->is_array()) parse_fail("tree_decomp.bags: bag must be an array");
    std::vector<int> bag;
    for (const auto& v : *it) bag.push_back(as_int(v, "tree_decomp.bags"));
    std::sort(bag.begin(), bag.end());
    bag.erase(std::unique(bag.begin(), bag.end()), bag.end());
    td.bags[static_cast<size_t>(x)] = std::move(bag);
  }
  return td;
}

std::string touching_rep_to_json(const TouchingRep& r) {
  return touching_to_json_obj(r).dump(2) + "\n";
}

TouchingRep touching_rep_from_json(const std::string& text, const IoOptions& opts) {
  json obj = json::parse(text, nullptr, true, true);
  return touching_from_json_obj(obj, opts, "rep");
}

std::string cs_rep_to_json(const CsRep& c) {
  json obj = touching_to_json_obj(c.base);
  obj["root"] = c.root;
  json rd = json::object();
  for (const auto& [v, dim] : c.root_dims) rd[std::to_string(v)] = dim;
  obj["root_dims"] = std::move(rd);
  obj["epsilon"] = rational_to_string(c.epsilon);
  json cps = json::array();
  for (const auto& [cl, p] : c.clique_points) {
    json entry;
    entry["clique"] = cl;
    entry["point"] = point_to_json(p);
    cps.push_back(std::move(entry));
  }
  obj["clique_points"] = std::move(cps);
  return obj.dump(2) + "\n";
}

CsRep cs_rep_from_json(const std::string& text, const IoOptions& opts) {
  json obj = json::parse(text, nullptr, true, true);
  check_fields(obj, {"graph", "dim", "boxes", "root", "root_dims", "epsilon", "clique_points"},
               "cs_rep", opts);
  CsRep c;
  c.base = touching_from_json_obj(
      json{{"graph", need(obj, "graph", "cs_rep")},
           {"dim", need(obj, "dim", "cs_rep")},
           {"boxes", need(obj, "boxes", "cs_rep")}},
      opts, "cs_rep");
  const json& root = need(obj, "root", "cs_rep");
  if (!root.is_array()) parse_fail("cs_rep.root: expected an array");
  for (const auto& v : root) c.root.push_back(as_int(v, "cs_rep.root"));
  std::sort(c.root.begin(), c.root.end());
  const json& rd = need(obj, "root_dims", "cs_rep");
  if (!rd.is_object()) parse_fail("cs_rep.root_dims: expected an object");
  for (auto it = rd.begin(); it != rd.end(); ++it)
    c.root_dims[vertex_key(it.key(), "cs_rep.root_dims")] = as_int(*it, "cs_rep.root_dims");
  c.epsilon = as_rational(need(obj, "epsilon", "cs_rep"), "cs_rep.epsilon");
  const json& cps = need(obj, "clique_points", "cs_rep");
  if (!cps.is_array()) parse_fail("cs_rep.clique_points: expected an array");
  for (const auto& entry : cps) {
    check_fields(entry, {"clique", "point"}, "cs_rep.clique_points", opts);
    Clique cl;
    for (const auto& v : need(entry, "clique", "cs_rep.clique_points"))
      cl.push_back(as_int(v, "cs_rep.clique_points.clique"));
    std::sort(cl.begin(), cl.end());
    PointNd p = point_from_json(need(entry, "point", "cs_rep.clique_points"),
                                "cs_rep.clique_points.point");
    if (!c.clique_points.emplace(std::move(cl), std::move(p)).second)
      parse_fail("cs_rep.clique_points: duplicate clique");
  }
  return c;
}

std::string envelope_rep_to_json(const EnvelopeRep& e) {
  json obj;
  obj["graph"] = graph_to_json_obj(e.graph);
  obj["dim"] = e.dim;
  obj["order"] = e.order;
  json inner = json::object();
  for (size_t v = 0; v < e.inner.size(); ++v) {
    if (const BoxNd* b = std::get_if<BoxNd>(&e.inner[v])) {
      inner[std::to_string(v)] = box_to_json(*b);
    } else {
      const Ball& ball = std::get<Ball>(e.inner[v]);
      json bj;
      bj["center"] = point_to_json(ball.center);
      bj["radius2"] = rational_to_string(ball.radius2);
      inner[std::to_string(v)] = std::move(bj);
    }
  }
  obj["inner"] = std::move(inner);
  obj["outer"] = boxes_to_json(e.outer);
  obj["s"] = e.s;
  obj["t"] = e.t;
  return obj.dump(2) + "\n";
}

EnvelopeRep envelope_rep_from_json(const std::string& text, const IoOptions& opts) {
  json obj = json::parse(text, nullptr, true, true);
  check_fields(obj, {"graph", "dim", "order", "inner", "outer", "s", "t"}, "envelope", opts);
  EnvelopeRep e;
  e.graph = graph_from_json_obj(need(obj, "graph", "envelope"), opts, "envelope.graph");
  e.dim = as_int(need(obj, "dim", "envelope"), "envelope.dim");
  if (e.dim < 1) parse_fail("envelope.dim: must be >= 1");
  int n = e.graph.vertex_count();
  for (const auto& v : need(obj, "order", "envelope"))
    e.order.push_back(as_int(v, "envelope.order"));
  e.outer =
      boxes_from_json(need(obj, "outer", "envelope"), n, e.dim, "envelope.outer");
  const json& inner = need(obj, "inner", "envelope");
  if (!inner.is_object()) parse_fail("envelope.inner: expected an object");
  std::vector<std::optional<InnerSet>> tmp(static_cast<size_t>(n));
  for (auto it = inner.begin(); it != inner.end(); ++it) {
    int vert = vertex_key(it.key(), "envelope.inner");
    if (vert >= n) parse_fail("envelope.inner: vertex key out of range");
    if (it->is_array()) {
      BoxNd b = box_from_json(*it, "envelope.inner");
      if (b.dim() != e.dim) parse_fail("envelope.inner: box dimension mismatch");
      tmp[static_cast<size_t>(vert)] = InnerSet(std::move(b));
    } else if (it->is_object()) {
      check_fields(*it, {"center", "radius2"}, "envelope.inner", opts);
      Ball ball;
      ball.center = point_from_json(need(*it, "center", "envelope.inner"), "envelope.inner.center");
      ball.radius2 = as_rational(need(*it, "radius2", "envelope.inner"), "envelope.inner.radius2");
      if (static_cast<int>(ball.center.size()) != e.dim)
        parse_fail("envelope.inner: ball dimension mismatch");
      if (sgn(ball.radius2) <= 0) parse_fail("envelope.inner: radius2 must be positive");
      tmp[static_cast<size_t>(vert)] = InnerSet(std::move(ball));
    } else {
      parse_fail("envelope.inner: entry must be a box or a ball");
    }
  }
  for (int v = 0; v < n; ++v) {
    if (!tmp[static_cast<size_t>(v)])
      parse_fail("envelope.inner: missing entry for vertex " + std::to_string(v));
    e.inner.push_back(std::move(*tmp[static_cast<size_t>(v)]));
  }
  e.s = as_long(need(obj, "s", "envelope"), "envelope.s");
  e.t = as_long(need(obj, "t", "envelope"), "envelope.t");
  if (e.s < 1 || e.t < 1) parse_fail("envelope: s and t must be positive");
  return e;
}

std::string ktree_plan_to_json(const KTreeBuildPlan& plan) {
  json obj;
  obj["k"] = plan.k;
  obj["base"] = plan.base;
  json steps = json::array();
  for (const auto& st : plan.steps) {
    json entry;
    entry["clique"] = st.clique;
    entry["vertex"] = st.vertex;
    steps.push_back(std::move(entry));
  }
  obj["steps"] = std::move(steps);
  return obj.dump(2) + "\n";
}

KTreeBuildPlan ktree_plan_from_json(const std::string& text, const IoOptions& opts) {
  json obj = json::parse(text, nullptr, true, true);
  check_fields(obj, {"k", "base", "steps"}, "plan", opts);
  KTreeBuildPlan plan;
  plan.k = as_int(need(obj, "k", "plan"), "plan.k");
  for (const auto& v : need(obj, "base", "plan")) plan.base.push_back(as_int(v, "plan.base"));
  for (const auto& st : need(obj, "steps", "plan")) {
    check_fields(st, {"clique", "vertex"}, "plan.steps", opts);
    KTreeStep step;
    for (const auto& v : need(st, "clique", "plan.steps"))
      step.clique.push_back(as_int(v, "plan.steps.clique"));
    std::sort(step.clique.begin(), step.clique.end());
    step.vertex = as_int(need(st, "vertex", "plan.steps"), "plan.steps.vertex");
    plan.steps.push_back(std::move(step));
  }
  return plan;
}

std::string cs_tree_to_json(const CliqueSumTree& t) {
  json nodes = json::array();
  for (const auto& node : t.nodes) {
    json nj;
    nj["id"] = node.id;
    json rj;
    switch (node.recipe.kind) {
      case Recipe::Kind::Ktree:
        rj["kind"] = "ktree";
        rj["plan"] = json::parse(ktree_plan_to_json(node.recipe.plan));
        break;
      case Recipe::Kind::KtreeGrid:
        rj["kind"] = "ktree_grid";
        rj["plan"] = json::parse(ktree_plan_to_json(node.recipe.plan));
        rj["path_length"] = node.recipe.path_length;
        break;
      case Recipe::Kind::ExtendedKtreeGrid:
        rj["kind"] = "extended_ktree_grid";
        rj["plan"] = json::parse(ktree_plan_to_json(node.recipe.plan));
        rj["path_length"] = node.recipe.path_length;
        rj["apexes"] = node.recipe.apexes;
        break;
      case Recipe::Kind::FromRep:
        rj["kind"] = "from_rep";
        rj["cert"] = touching_to_json_obj(node.recipe.rep);
        break;
    }
    nj["recipe"] = std::move(rj);
    nj["root_clique"] = node.root_clique;
    if (node.parent == -1)
      nj["parent"] = nullptr;
    else
      nj["parent"] = t.nodes[static_cast<size_t>(node.parent)].id;
    nj["glue"] = node.glue;
    nodes.push_back(std::move(nj));
  }
  json obj;
  obj["nodes"] = std::move(nodes);
  return obj.dump(2) + "\n";
}

CliqueSumTree cs_tree_from_json(const std::string& text, const IoOptions& opts) {
  json obj = json::parse(text, nullptr, true, true);
  check_fields(obj, {"nodes"}, "cs_tree", opts);
  CliqueSumTree t;
  std::map<std::string, int> index_of;
  const json& nodes = need(obj, "nodes", "cs_tree");
  if (!nodes.is_array()) parse_fail("cs_tree.nodes: expected an array");
  for (const auto& nj : nodes) {
    check_fields(nj, {"id", "recipe", "root_clique", "parent", "glue"}, "cs_tree.node", opts);
    CsTreeNode node;
    node.id = need(nj, "id", "cs_tree.node").get<std::string>();
    if (index_of.count(node.id)) parse_fail("cs_tree: duplicate node id " + node.id);
    const json& rj = need(nj, "recipe", "cs_tree.node");
    std::string kind = need(rj, "kind", "cs_tree.recipe").get<std::string>();
    if (kind == "ktree") {
      check_fields(rj, {"kind", "plan"}, "cs_tree.recipe", opts);
      node.recipe.kind = Recipe::Kind::Ktree;
      node.recipe.plan = ktree_plan_from_json(need(rj, "plan", "cs_tree.recipe").dump(), opts);
    } else if (kind == "ktree_grid" || kind == "extended_ktree_grid") {
      std::vector<std::string> allowed{"kind", "plan", "path_length"};
      if (kind == "extended_ktree_grid") allowed.push_back("apexes");
      check_fields(rj, allowed, "cs_tree.recipe", opts);
      node.recipe.kind = kind == "ktree_grid" ? Recipe::Kind::KtreeGrid
                                              : Recipe::Kind::ExtendedKtreeGrid;
      node.recipe.plan = ktree_plan_from_json(need(rj, "plan", "cs_tree.recipe").dump(), opts);
      node.recipe.path_length =
          as_int(need(rj, "path_length", "cs_tree.recipe"), "cs_tree.recipe.path_length");
      if (kind == "extended_ktree_grid") {
        for (const auto& ap : need(rj, "apexes", "cs_tree.recipe")) {
          std::vector<int> nbrs;
          for (const auto& v : ap) nbrs.push_back(as_int(v, "cs_tree.recipe.apexes"));
          node.recipe.apexes.push_back(std::move(nbrs));
        }
      }
    } else if (kind == "from_rep") {
      check_fields(rj, {"kind", "cert"}, "cs_tree.recipe", opts);
      node.recipe.kind = Recipe::Kind::FromRep;
      node.recipe.rep =
          touching_from_json_obj(need(rj, "cert", "cs_tree.recipe"), opts, "cs_tree.recipe.cert");
    } else {
      parse_fail("cs_tree.recipe: unknown kind '" + kind + "'");
    }
    for (const auto& v : need(nj, "root_clique", "cs_tree.node"))
      node.root_clique.push_back(as_int(v, "cs_tree.node.root_clique"));
    const json& pj = need(nj, "parent", "cs_tree.node");
    if (pj.is_null()) {
      node.parent = -1;
    } else {
      std::string pid = pj.get<std::string>();
      auto it = index_of.find(pid);
      if (it == index_of.end()) parse_fail("cs_tree: parent '" + pid + "' must precede its child");
      node.parent = it->second;
    }
    for (const auto& v : need(nj, "glue", "cs_tree.node"))
      node.glue.push_back(as_int(v, "cs_tree.node.glue"));
    index_of[node.id] = static_cast<int>(t.nodes.size());
    t.nodes.push_back(std::move(node));
  }
  return t;
}

CertKind detect_cert_kind(const std::string& text) {
  json obj = json::parse(text, nullptr, true, true);
  if (!obj.is_object()) parse_fail("certificate: expected an object");
  if (obj.contains("order")) return CertKind::Envelope;
  if (obj.contains("clique_points")) return CertKind::Cs;
  return CertKind::Touching;
}

std::string experiment_report_to_json(const ExperimentReport& rep, bool include_timing) {
  json obj;
  obj["k"] = rep.k;
  obj["samples"] = rep.samples;
  obj["seed"] = rep.seed;
  obj["n"] = rep.n;
  obj["d"] = rep.d;
  obj["s"] = rep.s;
  obj["t"] = rep.t;
  obj["bag_bound"] = rational_to_string(rep.bag_bound);
  obj["offset_resolution"] = "4294967296";
  obj["discretization_slack"] = rational_to_string(rep.discretization_slack);
  json freq = json::object();
  for (size_t v = 0; v < rep.deletion_counts.size(); ++v) {
    Rational f = Rational(rep.deletion_counts[v]) / std::max(rep.samples, 1);
    freq[std::to_string(v)] = rational_to_string(f);
  }
  obj["deletion_frequencies"] = std::move(freq);
  json hist = json::object();
  for (const auto& [w, count] : rep.width_histogram) hist[std::to_string(w)] = count;
  obj["width_histogram"] = std::move(hist);
  obj["max_width"] = rep.max_width;
  obj["violations"] = rep.violations;
  if (include_timing) obj["wall_clock_ms"] = rep.wall_clock_ms;
  return obj.dump(2) + "\n";
}

std::string separator_result_to_json(const SeparatorResult& res, int k, uint64_t seed) {
  json obj;
  obj["k"] = k;
  obj["seed"] = seed;
  obj["draws"] = res.draws;
  obj["flagged"] = res.flagged;
  obj["deleted"] = res.deleted;
  obj["separator"] = res.separator;
  obj["remainder_max_component"] = res.remainder_max_component;
  json sizes;
  sizes["deleted"] = res.deleted.size();
  sizes["separator"] = res.separator.size();
  sizes["union"] = res.deleted.size() + res.separator.size();
  obj["sizes"] = std::move(sizes);
  return obj.dump(2) + "\n";
}

}  // namespace boxdim
