#pragma once

#include <string>
#include <vector>

#include "boxdim/construct.hpp"
#include "boxdim/fragility.hpp"
#include "boxdim/representation.hpp"

namespace boxdim {

// Unknown fields are rejected in strict mode and collected as warnings
// otherwise.
struct IoOptions {
  bool strict = true;
  std::vector<std::string>* warnings = nullptr;
};

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

std::string graph_to_json(const Graph& g);
Graph graph_from_json(const std::string& text, const IoOptions& opts = {});

std::string tree_decomp_to_json(const TreeDecomp& td);
TreeDecomp tree_decomp_from_json(const std::string& text, const IoOptions& opts = {});

std::string touching_rep_to_json(const TouchingRep& r);
TouchingRep touching_rep_from_json(const std::string& text, const IoOptions& opts = {});

std::string cs_rep_to_json(const CsRep& c);
CsRep cs_rep_from_json(const std::string& text, const IoOptions& opts = {});

std::string envelope_rep_to_json(const EnvelopeRep& e);
EnvelopeRep envelope_rep_from_json(const std::string& text, const IoOptions& opts = {});

std::string ktree_plan_to_json(const KTreeBuildPlan& plan);
KTreeBuildPlan ktree_plan_from_json(const std::string& text, const IoOptions& opts = {});

std::string cs_tree_to_json(const CliqueSumTree& t);
CliqueSumTree cs_tree_from_json(const std::string& text, const IoOptions& opts = {});

enum class CertKind { Touching, Cs, Envelope };
CertKind detect_cert_kind(const std::string& text);

// Deterministic payload; wall-clock only on request so reruns with the same
// seed stay byte-identical.
std::string experiment_report_to_json(const ExperimentReport& rep, bool include_timing);
std::string separator_result_to_json(const SeparatorResult& res, int k, uint64_t seed);

}  // namespace boxdim
