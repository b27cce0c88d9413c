// Copyright 2026 The symbreak Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end: corpus generation, theorem sweeps, transforms,
// invariants, automorphism groups and the explicit colouring constructions.

#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "symbreak/checks.h"
#include "symbreak/constructions.h"
#include "symbreak/corpus.h"
#include "symbreak/error.h"
#include "symbreak/graph6.h"
#include "symbreak/invariants.h"
#include "symbreak/named_graphs.h"
#include "symbreak/report.h"
#include "symbreak/symmetry.h"
#include "symbreak/transforms.h"

namespace symbreak {
namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitPass = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

// "K3,3", "C6", "K5+" (endline graph of K5) or a graph6 string.
Graph ResolveGraph(const std::string& text) {
  std::string base = text;
  bool endline = false;
  if (!base.empty() && base.back() == '+') {
    endline = true;
    base.pop_back();
  }
  Graph g;
  try {
    g = NamedGraph(ParseNamedGraphSpec(base));
  } catch (const ContractError&) {
    if (endline) throw;
    return ParseGraph6(text);
  }
  return endline ? EndlineGraph(g) : g;
}

// Reads --graph6 (a graph6 string or a name) if given, otherwise the first
// non-empty stdin line.
Graph GraphFromArgOrStdin(const std::string& arg) {
  if (!arg.empty()) return ResolveGraph(arg);
  std::vector<Graph> graphs = ReadGraph6Stream(std::cin);
  if (graphs.empty()) throw MalformedInputError("no graph6 input on stdin");
  return graphs.front();
}

Json ColoringJson(const Graph& g, const VertexColoring& c) {
  Json out = Json::object();
  for (int v = 0; v < g.order(); ++v) out[g.label(v).ToString()] = c.colors[v];
  return out;
}

Json ColoringJson(const EdgeColoring& c) {
  Json out = Json::object();
  for (std::size_t k = 0; k < c.edges.size(); ++k) {
    out[std::to_string(c.edges[k].first) + "-" +
        std::to_string(c.edges[k].second)] = c.colors[k];
  }
  return out;
}

Json WitnessJson(const Graph& g, const AnyColoring& witness) {
  if (const auto* v = std::get_if<VertexColoring>(&witness)) {
    return ColoringJson(g, *v);
  }
  if (const auto* e = std::get_if<EdgeColoring>(&witness)) {
    return ColoringJson(*e);
  }
  const auto& t = std::get<TotalColoring>(witness);
  Json out;
  out["vertices"] = ColoringJson(g, t.vertex);
  out["edges"] = ColoringJson(t.edge);
  return out;
}

Json CertificationJson(const Certification& c) {
  Json out;
  out["proper"] = c.proper;
  out["distinguishing"] = c.distinguishing;
  out["fallback_used"] = c.fallback_used;
  return out;
}

std::vector<std::string> SplitCommas(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

struct GenArgs {
  int max_order = 0;
  int min_order = 1;
  bool connected = false;
  bool non_cycle = false;
  std::string out;
};

int RunGen(const GenArgs& args) {
  CorpusSpec spec = CorpusSpec::Builtin(args.max_order, args.connected);
  spec.min_order = args.min_order;
  spec.non_cycle = args.non_cycle;
  std::string text;
  for (const Graph& g : EnumerateCorpus(spec)) text += ToGraph6(g) + "\n";
  if (args.out.empty() || args.out == "-") {
    std::cout << text;
    return kExitPass;
  }
  std::ofstream out(args.out, std::ios::binary);
  if (!out || !(out << text)) {
    throw IoError("cannot write '" + args.out + "'");
  }
  return kExitPass;
}

struct VerifyArgs {
  std::string theorem;
  std::string corpus;
  int builtin = 0;
  int jobs = 1;
  std::string out;
  std::string format = "json";
  bool timing = false;
};

int RunVerify(const VerifyArgs& args) {
  const TheoremId id = ParseTheoremId(args.theorem);
  ReportOptions options;
  options.format = ParseReportFormat(args.format);
  options.include_timing = args.timing;
  const CorpusSpec spec = args.corpus.empty()
                              ? CorpusSpec::Builtin(args.builtin)
                              : CorpusSpec::File(args.corpus);
  const VerificationReport report = RunCheck(id, spec, args.jobs);
  EmitReport(report, options, args.out);
  return report.summary.failed == 0 ? kExitPass : kExitCounterexample;
}

struct TransformArgs {
  std::string op;
  std::string graph6;
  bool labels = false;
};

int RunTransform(const TransformArgs& args) {
  const Graph g = GraphFromArgOrStdin(args.graph6);
  Graph out;
  if (args.op == "line") {
    out = LineGraph(g);
  } else if (args.op == "endline") {
    out = EndlineGraph(g);
  } else if (args.op == "subdivision") {
    out = SubdivisionGraph(g);
  } else if (args.op == "middle") {
    out = MiddleGraph(g);
  } else {
    throw ContractError("unknown --op '" + args.op + "'");
  }
  std::cout << ToGraph6(out) << "\n";
  if (args.labels) {
    Json map = Json::object();
    for (int v = 0; v < out.order(); ++v) {
      map[std::to_string(v)] = out.label(v).ToString();
    }
    std::cout << map.dump() << "\n";
  }
  return kExitPass;
}

struct InvariantArgs {
  std::string which = "all";
  std::string graph6;
  bool witness = false;
  bool upper_bound_only = false;
};

int RunInvariant(const InvariantArgs& args) {
  const Graph g = GraphFromArgOrStdin(args.graph6);
  std::vector<InvariantKind> kinds;
  for (const std::string& name : SplitCommas(args.which)) {
    if (name == "all") {
      kinds.insert(kinds.end(), AllKinds().begin(), AllKinds().end());
    } else {
      kinds.push_back(ParseKind(name));
    }
  }
  InvariantOptions options;
  options.upper_bound_only = args.upper_bound_only;
  const AutGroup group = AutomorphismGroup(g, options.limits);
  for (InvariantKind kind : kinds) {
    Json line;
    line["kind"] = std::string(KindName(kind));
    try {
      const InvariantValue v = ComputeInvariant(group, kind, options);
      line["value"] = v.value;
      line["certified"] = v.certified;
      if (args.witness) line["witness"] = WitnessJson(g, v.witness);
    } catch (const UndefinedInvariantError& e) {
      line["value"] = nullptr;
      line["undefined"] = e.what();
    }
    std::cout << line.dump() << "\n";
  }
  return kExitPass;
}

struct AutArgs {
  std::string graph6;
  bool list = false;
};

int RunAut(const AutArgs& args) {
  const AutGroup group = AutomorphismGroup(GraphFromArgOrStdin(args.graph6));
  std::cout << group.order() << "\n";
  if (args.list) {
    for (const Permutation& p : group.elements()) {
      std::cout << p.ToString() << "\n";
    }
  }
  return kExitPass;
}

struct ConstructArgs {
  std::string which;
  std::string graph;
};

int RunConstruct(const ConstructArgs& args) {
  const Graph g = ResolveGraph(args.graph);
  Json out;
  out["which"] = args.which;
  out["graph"] = ToGraph6(g);
  if (args.which == "exceptional" || args.which == "thm28") {
    const EdgeConstruction built = args.which == "exceptional" ||
                                           MatchEndlineException(g)
                                       ? ExceptionalEndlineColoring(g)
                                       : EndlineExtensionColoring(g);
    out["target"] = ToGraph6(built.graph);
    out["palette"] = built.coloring.palette;
    out["edges"] = ColoringJson(built.coloring);
    out["certification"] = CertificationJson(built.certification);
  } else if (args.which == "lift") {
    const InvariantValue total = TotalDistinguishingNumber(g);
    const auto& f = std::get<TotalColoring>(total.witness);
    const Graph s = SubdivisionGraph(g);
    const VertexColoring lifted = LiftTotalToSubdivision(g, f);
    Certification cert;
    cert.proper = IsProper(s, lifted);
    cert.distinguishing = IsDistinguishing(s, lifted);
    out["target"] = ToGraph6(s);
    out["palette"] = lifted.palette;
    out["vertices"] = ColoringJson(s, lifted);
    out["certification"] = CertificationJson(cert);
  } else if (args.which == "thm47") {
    const VertexConstruction built = SubdivisionProperDistinguishing(g);
    out["target"] = ToGraph6(built.graph);
    out["palette"] = built.coloring.palette;
    out["vertices"] = ColoringJson(built.graph, built.coloring);
    out["certification"] = CertificationJson(built.certification);
  } else {
    throw ContractError("unknown --which '" + args.which +
                        "' (expected exceptional, thm28, lift or thm47)");
  }
  std::cout << out.dump(2) << "\n";
  return kExitPass;
}

int Main(int argc, char** argv) {
  CLI::App app{"Symmetry-breaking invariants of small graphs"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Enumerate small graphs as graph6");
  gen_cmd->add_option("--max-order", gen.max_order, "Largest order (<= 6)")
      ->required();
  gen_cmd->add_option("--min-order", gen.min_order, "Smallest order");
  gen_cmd->add_flag("--connected", gen.connected, "Connected graphs only");
  gen_cmd->add_flag("--non-cycle", gen.non_cycle, "Drop cycles");
  gen_cmd->add_option("--out", gen.out, "Output file (default stdout)");

  VerifyArgs verify;
  auto* verify_cmd =
      app.add_subcommand("verify", "Check a statement over a corpus");
  verify_cmd->add_option("--theorem", verify.theorem, "Statement id")
      ->required();
  auto* corpus_opt =
      verify_cmd->add_option("--corpus", verify.corpus, "graph6 corpus file");
  auto* builtin_opt = verify_cmd->add_option(
      "--builtin", verify.builtin, "Enumerate connected graphs up to order K");
  corpus_opt->excludes(builtin_opt);
  verify_cmd->add_option("--jobs", verify.jobs, "Worker threads");
  verify_cmd->add_option("--out", verify.out, "Report file (default stdout)");
  verify_cmd->add_option("--format", verify.format, "json or tsv");
  verify_cmd->add_flag("--timing", verify.timing, "Include wall time");

  TransformArgs transform;
  auto* transform_cmd = app.add_subcommand("transform", "Apply a transform");
  transform_cmd
      ->add_option("--op", transform.op, "line, endline, subdivision, middle")
      ->required();
  transform_cmd->add_option("--graph6", transform.graph6, "Input graph");
  transform_cmd->add_flag("--labels", transform.labels,
                          "Also print the vertex label map");

  InvariantArgs invariant;
  auto* invariant_cmd =
      app.add_subcommand("invariant", "Compute invariants as JSON lines");
  invariant_cmd->add_option("--which", invariant.which,
                            "Comma list of chi,D,chiD,Dp,chiDp,Dpp, or all");
  invariant_cmd->add_option("--graph6", invariant.graph6, "Input graph");
  invariant_cmd->add_flag("--witness", invariant.witness,
                          "Include an optimal colouring");
  invariant_cmd->add_flag("--upper-bound-only", invariant.upper_bound_only,
                          "Stop at a node budget; values may be uncertified");

  AutArgs aut;
  auto* aut_cmd = app.add_subcommand("aut", "Automorphism group order");
  aut_cmd->add_option("--graph6", aut.graph6, "Input graph");
  aut_cmd->add_flag("--list", aut.list, "List every automorphism");

  ConstructArgs construct;
  auto* construct_cmd =
      app.add_subcommand("construct", "Run an explicit colouring construction");
  construct_cmd
      ->add_option("--which", construct.which,
                   "exceptional, thm28, lift or thm47")
      ->required();
  construct_cmd
      ->add_option("--graph", construct.graph,
                   "Name (C6, K3,3, K5+, ...) or graph6")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (*gen_cmd) return RunGen(gen);
    if (*verify_cmd) {
      if (verify.corpus.empty() && verify.builtin == 0) {
        throw ContractError("verify needs --corpus FILE or --builtin K");
      }
      return RunVerify(verify);
    }
    if (*transform_cmd) return RunTransform(transform);
    if (*invariant_cmd) return RunInvariant(invariant);
    if (*aut_cmd) return RunAut(aut);
    if (*construct_cmd) return RunConstruct(construct);
  } catch (const Error& e) {
    std::cerr << "symbreak: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "symbreak: internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}

}  // namespace
}  // namespace symbreak

int main(int argc, char** argv) { return symbreak::Main(argc, argv); }
