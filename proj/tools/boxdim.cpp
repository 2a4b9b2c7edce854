// boxdim: build, verify and experiment with touching-box certificates.
//
// Exit codes: 0 success, 1 verification failure, 2 usage/parse error.

#include <iostream>

#include "CLI11.hpp"
#include "boxdim/construct.hpp"
#include "boxdim/fragility.hpp"
#include "boxdim/io.hpp"
#include "boxdim/svg.hpp"

namespace {

using namespace boxdim;

constexpr int kExitOk = 0;
constexpr int kExitVerification = 1;
constexpr int kExitParse = 2;

struct CliState {
  bool lax = false;
  std::vector<std::string> warnings;

  IoOptions io() { return IoOptions{!lax, &warnings}; }
};

EnvelopeRep load_envelope(CliState& st, const std::string& path) {
  std::string text = read_file(path);
  switch (detect_cert_kind(text)) {
    case CertKind::Envelope:
      return envelope_rep_from_json(text, st.io());
    case CertKind::Cs:
      return envelope_from_boxes(cs_rep_from_json(text, st.io()).base);
    case CertKind::Touching:
      return envelope_from_boxes(touching_rep_from_json(text, st.io()));
  }
  throw std::logic_error("unreachable");
}

TouchingRep load_touching(CliState& st, const std::string& path) {
  std::string text = read_file(path);
  switch (detect_cert_kind(text)) {
    case CertKind::Cs:
      return cs_rep_from_json(text, st.io()).base;
    case CertKind::Touching:
      return touching_rep_from_json(text, st.io());
    default:
      throw std::invalid_argument(path + ": expected a touching representation");
  }
}

int write_touching_checked(const TouchingRep& rep, const std::string& out) {
  Report check = verify_touching_rep(rep, true);
  if (!check.ok()) {
    std::cerr << "refusing to write an invalid certificate:\n" << check.summary();
    return kExitVerification;
  }
  write_file(out, touching_rep_to_json(rep));
  std::cout << "wrote " << out << " (n=" << rep.graph.vertex_count() << ", dim=" << rep.dim
            << ")\n";
  return kExitOk;
}

int write_cs_checked(const CsRep& cert, const std::string& out) {
  Report check = verify_cs_rep(cert);
  if (!check.ok()) {
    std::cerr << "refusing to write an invalid certificate:\n" << check.summary();
    return kExitVerification;
  }
  write_file(out, cs_rep_to_json(cert));
  std::cout << "wrote " << out << " (n=" << cert.base.graph.vertex_count()
            << ", dim=" << cert.base.dim << ", epsilon=" << rational_to_string(cert.epsilon)
            << ")\n";
  return kExitOk;
}

std::vector<int> parse_id_list(const std::string& text) {
  std::vector<int> out;
  std::string cur;
  for (char ch : text + ",") {
    if (ch == ',') {
      if (!cur.empty()) out.push_back(std::stoi(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"touching representations by comparable boxes: builders, verifiers, fragility"};
  app.require_subcommand(1);
  CliState st;
  app.add_flag("--lax", st.lax, "warn about unknown certificate fields instead of rejecting");

  std::string in_path, out_path, left_path, right_path, graph_path, td_path, tree_path,
      plan_path, keep_path, final_path, neighbors_csv, axes_csv = "0,1";
  int k = 2, param_n = 1, param_m = 1, samples = 100;
  uint64_t seed = 1;
  bool timing = false;
  std::string verify_type = "auto";
  bool no_comparable = false;

  auto* verify = app.add_subcommand("verify", "verify a certificate file");
  verify->add_option("cert", in_path, "certificate file")->required();
  verify->add_option("--type", verify_type, "touching|cs|envelope|auto")
      ->check(CLI::IsMember({"touching", "cs", "envelope", "auto"}));
  verify->add_flag("--no-comparable", no_comparable, "skip the comparability check");

  auto* info = app.add_subcommand("info", "print a certificate summary");
  info->add_option("cert", in_path, "certificate file")->required();

  auto* build = app.add_subcommand("build", "construct certificates");
  build->require_subcommand(1);

  auto* b_apex = build->add_subcommand("apex", "add an apex vertex");
  b_apex->add_option("--in", in_path)->required();
  b_apex->add_option("--neighbors", neighbors_csv, "comma-separated vertex ids");
  b_apex->add_option("-o,--out", out_path)->required();

  auto* b_prod = build->add_subcommand("product", "strong product with a unit-cube factor");
  b_prod->add_option("--left", left_path)->required();
  b_prod->add_option("--right", right_path)->required();
  b_prod->add_option("-o,--out", out_path)->required();

  auto* b_sub = build->add_subcommand("subgraph", "keep a subset of edges");
  b_sub->add_option("--in", in_path)->required();
  b_sub->add_option("--keep", keep_path, "graph file with the kept edges")->required();
  b_sub->add_option("-o,--out", out_path)->required();

  auto* b_ktree = build->add_subcommand("ktree", "k-tree certificate from a build plan");
  b_ktree->add_option("--plan", plan_path)->required();
  b_ktree->add_option("-o,--out", out_path)->required();

  auto* b_tw = build->add_subcommand("treewidth", "representation from a tree decomposition");
  b_tw->add_option("--graph", graph_path)->required();
  b_tw->add_option("--td", td_path)->required();
  b_tw->add_option("-o,--out", out_path)->required();

  auto* b_cs = build->add_subcommand("cliquesum", "fold a clique-sum tree");
  b_cs->add_option("--tree", tree_path)->required();
  b_cs->add_option("-o,--out", out_path)->required();

  auto* b_cocktail = build->add_subcommand("cocktail", "complete graph minus a perfect matching");
  b_cocktail->add_option("--n", param_n, "half the vertex count")->required();
  b_cocktail->add_option("-o,--out", out_path)->required();

  auto* b_minor = build->add_subcommand("minor-pipeline",
                                        "clique-sum fold followed by a subgraph step");
  b_minor->add_option("--tree", tree_path)->required();
  b_minor->add_option("--final", final_path, "graph file with the final edge set")->required();
  b_minor->add_option("-o,--out", out_path)->required();

  auto* b_env = build->add_subcommand("envelope", "envelope representation from boxes");
  b_env->add_option("--from", in_path)->required();
  b_env->add_option("-o,--out", out_path)->required();

  auto* b_path = build->add_subcommand("path", "unit-interval path");
  b_path->add_option("--n", param_n)->required();
  b_path->add_option("-o,--out", out_path)->required();

  auto* b_clique = build->add_subcommand("clique", "corner-hypercube clique");
  b_clique->add_option("--m", param_m)->required();
  b_clique->add_option("-o,--out", out_path)->required();

  auto* sample = app.add_subcommand("sample", "one deletion sample plus its decomposition");
  sample->add_option("--cert", in_path)->required();
  sample->add_option("--k", k)->required();
  sample->add_option("--seed", seed);
  sample->add_option("-o,--out", out_path)->required();

  auto* experiment = app.add_subcommand("experiment", "repeated sampling with verification");
  experiment->add_option("--cert", in_path)->required();
  experiment->add_option("--k", k)->required();
  experiment->add_option("--samples", samples)->required();
  experiment->add_option("--seed", seed);
  experiment->add_flag("--timing", timing, "include wall-clock in the report");
  experiment->add_option("-o,--out", out_path)->required();

  auto* separate = app.add_subcommand("separate", "balanced separator from deletion + centroid bag");
  separate->add_option("--cert", in_path)->required();
  separate->add_option("--k", k)->required();
  separate->add_option("--seed", seed);
  separate->add_option("-o,--out", out_path)->required();

  auto* plot = app.add_subcommand("plot", "SVG drawing of a representation");
  plot->add_option("--cert", in_path)->required();
  plot->add_option("--axes", axes_csv, "two projection axes, e.g. 0,2");
  plot->add_option("-o,--out", out_path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp")
      return app.exit(e);
    app.exit(e);
    return kExitParse;
  }

  try {
    if (*verify) {
      std::string text = read_file(in_path);
      CertKind kind = detect_cert_kind(text);
      if (verify_type == "touching") kind = CertKind::Touching;
      if (verify_type == "cs") kind = CertKind::Cs;
      if (verify_type == "envelope") kind = CertKind::Envelope;
      Report rep;
      switch (kind) {
        case CertKind::Touching:
          rep = verify_touching_rep(touching_rep_from_json(text, st.io()), !no_comparable);
          break;
        case CertKind::Cs:
          rep = verify_cs_rep(cs_rep_from_json(text, st.io()), !no_comparable);
          break;
        case CertKind::Envelope:
          rep = verify_envelope_rep(envelope_rep_from_json(text, st.io()));
          break;
      }
      for (const auto& w : st.warnings) std::cerr << "warning: " << w << "\n";
      for (const auto& note : rep.notes) std::cout << "note: " << note << "\n";
      if (rep.ok()) {
        std::cout << "ok\n";
        return kExitOk;
      }
      std::cout << rep.summary();
      return kExitVerification;
    }

    if (*info) {
      std::string text = read_file(in_path);
      switch (detect_cert_kind(text)) {
        case CertKind::Touching: {
          TouchingRep r = touching_rep_from_json(text, st.io());
          std::cout << "touching representation: n=" << r.graph.vertex_count()
                    << " edges=" << r.graph.edge_count() << " dim=" << r.dim << "\n";
          break;
        }
        case CertKind::Cs: {
          CsRep c = cs_rep_from_json(text, st.io());
          std::cout << "clique-sum extendable certificate: n=" << c.base.graph.vertex_count()
                    << " edges=" << c.base.graph.edge_count() << " dim=" << c.base.dim
                    << " root_size=" << c.root.size() << " cliques=" << c.clique_points.size()
                    << " epsilon=" << rational_to_string(c.epsilon) << "\n";
          break;
        }
        case CertKind::Envelope: {
          EnvelopeRep e = envelope_rep_from_json(text, st.io());
          std::cout << "envelope representation: n=" << e.graph.vertex_count()
                    << " edges=" << e.graph.edge_count() << " dim=" << e.dim << " s=" << e.s
                    << " t=" << e.t << "\n";
          break;
        }
      }
      return kExitOk;
    }

    if (*b_apex)
      return write_touching_checked(
          apex_add(load_touching(st, in_path), parse_id_list(neighbors_csv)), out_path);
    if (*b_prod)
      return write_touching_checked(
          strong_product({load_touching(st, left_path), load_touching(st, right_path)}),
          out_path);
    if (*b_sub) {
      TouchingRep rep = load_touching(st, in_path);
      Graph keep = graph_from_json(read_file(keep_path), st.io());
      Coloring star = greedy_star_coloring(rep.graph, volume_order(rep));
      return write_touching_checked(subgraph_extend(rep, keep, star), out_path);
    }
    if (*b_ktree)
      return write_cs_checked(
          ktree_cs_rep(ktree_plan_from_json(read_file(plan_path), st.io())), out_path);
    if (*b_tw)
      return write_touching_checked(
          treewidth_rep(graph_from_json(read_file(graph_path), st.io()),
                        tree_decomp_from_json(read_file(td_path), st.io())),
          out_path);
    if (*b_cs) {
      PipelineResult pr = pipeline_clique_sums(cs_tree_from_json(read_file(tree_path), st.io()));
      for (const auto& [id, dim] : pr.dims)
        std::cout << "node " << id << ": dim " << dim << "\n";
      return write_touching_checked(pr.rep, out_path);
    }
    if (*b_cocktail) return write_touching_checked(cocktail_party(param_n), out_path);
    if (*b_minor) {
      CliqueSumTree tree = cs_tree_from_json(read_file(tree_path), st.io());
      Graph final_edges = graph_from_json(read_file(final_path), st.io());
      return write_touching_checked(pipeline_minor(tree, final_edges), out_path);
    }
    if (*b_env) {
      EnvelopeRep e = envelope_from_boxes(load_touching(st, in_path));
      Report check = verify_envelope_rep(e);
      if (!check.ok()) {
        std::cerr << "refusing to write an invalid certificate:\n" << check.summary();
        return kExitVerification;
      }
      write_file(out_path, envelope_rep_to_json(e));
      std::cout << "wrote " << out_path << " (s=" << e.s << ", t=" << e.t << ")\n";
      return kExitOk;
    }
    if (*b_path) return write_touching_checked(unit_rep_path(param_n), out_path);
    if (*b_clique) return write_touching_checked(unit_rep_clique(param_m), out_path);

    if (*sample) {
      EnvelopeRep e = load_envelope(st, in_path);
      GridSchedule sched = build_schedule(e, k, seed);
      DeletionSample ds = sample_deletion(e, sched);
      CellTree ct = build_cell_tree(e, sched, ds);
      TreeDecomp td = build_decomposition(ct);
      std::vector<bool> present(static_cast<size_t>(e.graph.vertex_count()));
      for (int v = 0; v < e.graph.vertex_count(); ++v)
        present[static_cast<size_t>(v)] = !ds.deleted[static_cast<size_t>(v)];
      Report check = verify_tree_decomposition(e.graph, td, &present);
      std::vector<int> deleted_ids;
      for (int v = 0; v < e.graph.vertex_count(); ++v)
        if (ds.deleted[static_cast<size_t>(v)]) deleted_ids.push_back(v);
      std::string td_json = tree_decomp_to_json(td);
      std::string payload = "{\n  \"seed\": " + std::to_string(seed) +
                            ",\n  \"k\": " + std::to_string(k) + ",\n  \"deleted\": [";
      for (size_t i = 0; i < deleted_ids.size(); ++i)
        payload += (i ? "," : "") + std::to_string(deleted_ids[i]);
      payload += "],\n  \"width\": " + std::to_string(width(td)) +
                 ",\n  \"valid\": " + (check.ok() ? "true" : "false") +
                 ",\n  \"decomposition\": " + td_json + "}\n";
      write_file(out_path, payload);
      std::cout << "wrote " << out_path << " (|X|=" << deleted_ids.size()
                << ", width=" << width(td) << ")\n";
      return check.ok() ? kExitOk : kExitVerification;
    }

    if (*experiment) {
      EnvelopeRep e = load_envelope(st, in_path);
      ExperimentReport rep = fragility_experiment(e, k, samples, seed);
      write_file(out_path, experiment_report_to_json(rep, timing));
      std::cout << "wrote " << out_path << " (max width " << rep.max_width << ", "
                << rep.violations.size() << " violations)\n";
      return rep.violations.empty() ? kExitOk : kExitVerification;
    }

    if (*separate) {
      EnvelopeRep e = load_envelope(st, in_path);
      SeparatorResult res = balanced_separator(e, k, seed);
      write_file(out_path, separator_result_to_json(res, k, seed));
      std::cout << "wrote " << out_path << " (|X|=" << res.deleted.size()
                << ", |S|=" << res.separator.size() << ")\n";
      return res.flagged ? kExitVerification : kExitOk;
    }

    if (*plot) {
      TouchingRep rep = load_touching(st, in_path);
      std::vector<int> axes = parse_id_list(axes_csv);
      if (axes.size() != 2) throw std::invalid_argument("--axes needs two indices");
      write_file(out_path, render_svg(rep, axes[0], axes[1]));
      std::cout << "wrote " << out_path << "\n";
      return kExitOk;
    }
  } catch (const std::invalid_argument& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kExitParse;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kExitVerification;
  }
  return kExitParse;
}
