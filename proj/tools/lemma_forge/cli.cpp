// Copyright 2026 The Lemma Forge Authors.
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

#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "lemma_forge/graph.hpp"
#include "lemma_forge/metrics.hpp"
#include "lemma_forge/normalize.hpp"
#include "lemma_forge/scenarios.hpp"
#include "lemma_forge/select.hpp"
#include "lemma_forge/synthetic.hpp"
#include "lemma_forge/trace_io.hpp"

namespace lemma_forge::cli {
namespace {

namespace fs = std::filesystem;

struct Options {
  std::string trace;
  std::string names;
  std::string normal_forms;
  std::string axiom_tags;
  std::string out;
  std::string names_out;
  std::string edge_list;
  std::string best;
  std::string provable;
  std::string metric = "q1";
  std::string mode = "almost-honest";
  double damping = 0.85;
  double pr_tol = 1e-12;
  int pr_iters = 200;
  unsigned threads = 0;
  std::size_t top = 10;
  std::size_t count = 0;
  std::size_t checkpoint_every = 0;
  std::size_t step = 10;
  std::size_t lemmas = 1'000'000;
  std::uint64_t seed = 1;
  bool prune = false;
  bool from_scratch = false;
  bool extend = false;
};

class Session {
 public:
  Session(const Options& opt, std::ostream& out, std::ostream& err)
      : opt_(opt), out_(out), err_(err) {}

  WarningSink warner() const {
    return [this](const std::string& w) { err_ << "warning: " << w << '\n'; };
  }

  std::ifstream open_input(const std::string& path) const {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open '" + path + "'");
    return in;
  }

  ProofTrace load_trace() const {
    if (opt_.trace.empty()) throw InputError("--trace is required");
    auto in = open_input(opt_.trace);
    ParseOptions parse;
    parse.progress = [this](std::size_t n) {
      err_ << "parsed " << n << " lemmas\n";
    };
    try {
      return parse_trace(in, parse);
    } catch (const TraceParseError& e) {
      throw InputError(opt_.trace + ": " + e.what());
    }
  }

  NamedMap load_names_file(const std::string& path) const {
    if (path.empty()) return {};
    auto in = open_input(path);
    return load_names(in, warner());
  }

  NormalFormMap load_normal_forms_file() const {
    if (opt_.normal_forms.empty()) return {};
    auto in = open_input(opt_.normal_forms);
    return load_normal_forms(in, warner());
  }

  std::vector<LemmaIndex> load_indices(const std::string& path) const {
    auto in = open_input(path);
    return load_index_list(in);
  }

  ProofGraph load_graph() const {
    AxiomTags tags;
    try {
      tags = AxiomTags(opt_.axiom_tags);
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
    return build_graph(load_trace(), load_names_file(opt_.names), tags);
  }

  MetricParams metric_params(Metric& metric) const {
    MetricParams params;
    params.damping = opt_.damping;
    params.pr_tolerance = opt_.pr_tol;
    params.pr_max_iters = opt_.pr_iters;
    params.threads = threads();
    try {
      metric = parse_metric(opt_.metric, params);
      params.validate();
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
    return params;
  }

  unsigned threads() const {
    if (opt_.threads > 0) return opt_.threads;
    if (const char* env = std::getenv("LEMMA_FORGE_THREADS")) {
      char* end = nullptr;
      const long v = std::strtol(env, &end, 10);
      if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
      err_ << "warning: ignoring LEMMA_FORGE_THREADS='" << env << "'\n";
    }
    return std::max(1u, std::thread::hardware_concurrency());
  }

  // Writes to `path`, or to the output stream when path is empty or "-".
  // File output goes through a temporary so readers never see a partial
  // file.
  void write_output(const std::string& path,
                    const std::function<void(std::ostream&)>& body) const {
    if (path.empty() || path == "-") {
      body(out_);
      out_.flush();
      return;
    }
    refuse_input_overwrite(path);
    const std::string tmp = path + ".tmp";
    {
      std::ofstream file(tmp, std::ios::binary | std::ios::trunc);
      if (!file) throw InputError("cannot write '" + path + "'");
      body(file);
      if (!file.flush()) throw InputError("write to '" + path + "' failed");
    }
    fs::rename(tmp, path);
  }

 private:
  void refuse_input_overwrite(const std::string& path) const {
    for (const std::string* input :
         {&opt_.trace, &opt_.names, &opt_.normal_forms, &opt_.best,
          &opt_.provable}) {
      if (input->empty() || !fs::exists(*input) || !fs::exists(path)) continue;
      if (fs::equivalent(*input, path)) {
        throw InputError("refusing to overwrite input file '" + path + "'");
      }
    }
  }

  const Options& opt_;
  std::ostream& out_;
  std::ostream& err_;
};

std::string synthetic_name(std::size_t k) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "LEMMA_%05zu", k);
  return buf;
}

void write_selection(const SelectionResult& result, std::ostream& out) {
  std::size_t rank = 0;
  for (const auto& s : result.chosen) {
    ++rank;
    out << rank << '\t' << s.index << '\t' << format_score(s.score) << '\t'
        << synthetic_name(rank) << '\n';
  }
}

NamedMap selection_names(const NamedMap& base, const SelectionResult& result) {
  NamedMap names = base;
  std::size_t rank = 0;
  for (const auto& s : result.chosen) names[s.index] = synthetic_name(++rank);
  return names;
}

int cmd_parse_check(const Options& opt, Session& s, std::ostream& out) {
  const ProofTrace trace = s.load_trace();
  out << "lemmas\t" << trace.size() << '\n'
      << "edges\t" << trace.edge_count() << '\n';
  if (!opt.edge_list.empty()) {
    s.write_output(opt.edge_list,
                   [&](std::ostream& o) { write_edge_list(trace, o); });
  }
  return kExitOk;
}

int cmd_stats(const Options& opt, Session& s) {
  const ProofGraph graph = s.load_graph();
  const CorpusStats st = stats(graph, s.load_normal_forms_file());
  s.write_output(opt.out, [&](std::ostream& o) { write_stats(st, o); });
  return kExitOk;
}

int cmd_normalize(const Options& opt, Session& s) {
  if (opt.normal_forms.empty()) throw InputError("--normal-forms is required");
  const ProofTrace trace = s.load_trace();
  const NormalFormMap forms = s.load_normal_forms_file();
  if (!opt.prune) {
    const ProofTrace merged = merge_alpha_variants(trace, forms);
    s.write_output(opt.out, [&](std::ostream& o) { write_trace(merged, o); });
    return kExitOk;
  }
  const NamedMap names = s.load_names_file(opt.names);
  const PrunedTrace pruned = prune_variant_proofs(trace, forms, names);
  s.write_output(opt.out,
                 [&](std::ostream& o) { write_trace(pruned.trace, o); });
  if (!opt.names_out.empty()) {
    const NamedMap remapped = remap_names(names, pruned.new_index);
    s.write_output(opt.names_out,
                   [&](std::ostream& o) { write_names(remapped, o); });
  }
  return kExitOk;
}

int cmd_rank(const Options& opt, Session& s) {
  Metric metric;
  const MetricParams params = s.metric_params(metric);
  const ProofGraph graph = s.load_graph();
  if (graph.empty()) return kExitOk;
  const ScoreVector scores = compute_metric(graph, metric, params);
  s.write_output(opt.out, [&](std::ostream& o) {
    export_ranking(scores, graph.names(), opt.top, o);
  });
  return kExitOk;
}

int cmd_select(const Options& opt, Session& s, std::ostream& err) {
  Metric metric;
  const MetricParams params = s.metric_params(metric);
  const ProofGraph graph = s.load_graph();
  const std::vector<LemmaIndex> named0 =
      opt.from_scratch ? std::vector<LemmaIndex>{} : graph.named_indices();
  const NamedMap base = opt.from_scratch ? NamedMap{} : graph.names();
  const std::size_t every =
      opt.checkpoint_every == 0 ? std::max<std::size_t>(opt.count, 1)
                                : opt.checkpoint_every;

  SelectionResult final_result;
  select_schedule(
      graph, metric, params, named0, opt.count, every,
      [&](const SelectionResult& r) {
        final_result = r;
        if (opt.checkpoint_every == 0) return;
        err << "selected " << r.chosen.size() << " lemmas\n";
        if (!opt.out.empty() && opt.out != "-") {
          s.write_output(opt.out,
                         [&](std::ostream& o) { write_selection(r, o); });
        }
      },
      s.warner());
  s.write_output(opt.out,
                 [&](std::ostream& o) { write_selection(final_result, o); });
  if (!opt.names_out.empty()) {
    const NamedMap names = selection_names(base, final_result);
    s.write_output(opt.names_out,
                   [&](std::ostream& o) { write_names(names, o); });
  }
  return kExitOk;
}

// NewThms = names file (OrigThms) + best lemmas list.
DerivedGraph derive_from_options(const Options& opt, Session& s,
                                 const ProofGraph& graph,
                                 std::vector<LemmaIndex>& orig) {
  orig = graph.named_indices();
  std::vector<LemmaIndex> members = orig;
  if (!opt.best.empty()) {
    for (LemmaIndex i : s.load_indices(opt.best)) {
      if (i > graph.size()) {
        throw InputError("best lemma " + std::to_string(i) +
                         " outside the trace");
      }
      members.push_back(i);
    }
  }
  return derive_new_graph(graph, members);
}

int cmd_derive(const Options& opt, Session& s) {
  const ProofGraph graph = s.load_graph();
  std::vector<LemmaIndex> orig;
  const DerivedGraph dg = derive_from_options(opt, s, graph, orig);
  s.write_output(opt.out, [&](std::ostream& o) {
    for (std::size_t k = 0; k < dg.members.size(); ++k) {
      for (LemmaIndex p : dg.parents[k]) o << dg.members[k] << ' ' << p << '\n';
    }
  });
  return kExitOk;
}

int cmd_problems(const Options& opt, Session& s) {
  ProblemMode mode;
  if (opt.mode == "cheating") {
    mode = ProblemMode::kCheating;
  } else if (opt.mode == "almost-honest") {
    mode = ProblemMode::kAlmostHonest;
  } else {
    throw InputError("unknown --mode '" + opt.mode + "'");
  }
  const ProofGraph graph = s.load_graph();
  std::vector<LemmaIndex> orig;
  const DerivedGraph dg = derive_from_options(opt, s, graph, orig);
  const ProblemSet problems = emit_problems(graph, dg, orig, mode);
  s.write_output(opt.out,
                 [&](std::ostream& o) { write_problems(problems, o); });
  return kExitOk;
}

int cmd_chrono_export(const Options& opt, Session& s) {
  const ProofGraph graph = s.load_graph();
  std::vector<LemmaIndex> orig;
  const DerivedGraph dg = derive_from_options(opt, s, graph, orig);
  s.write_output(opt.out,
                 [&](std::ostream& o) { export_chrono_dataset(graph, dg, o); });
  return kExitOk;
}

int cmd_honest_run(const Options& opt, Session& s, std::ostream& err) {
  Metric metric;
  const MetricParams params = s.metric_params(metric);
  const ProofGraph graph = s.load_graph();
  s.write_output(opt.out, [&](std::ostream& o) {
    fully_honest_schedule(
        graph, metric, params, opt.step, opt.count,
        [&](LemmaIndex j, const SelectionResult& r) {
          std::size_t rank = 0;
          for (const auto& sel : r.chosen) {
            o << j << '\t' << ++rank << '\t' << sel.index << '\t'
              << format_score(sel.score) << '\n';
          }
          err << "theorem " << j << ": " << r.chosen.size() << " lemmas\n";
        },
        {});
  });
  return kExitOk;
}

int cmd_chain_levels(const Options& opt, Session& s) {
  if (opt.provable.empty()) throw InputError("--provable is required");
  const NamedMap names = s.load_names_file(opt.names);
  std::vector<LemmaIndex> orig;
  for (const auto& entry : names) orig.push_back(entry.first);
  auto in = s.open_input(opt.provable);
  const ChainLevels levels = chain_closure(orig, load_provable(in));
  s.write_output(opt.out,
                 [&](std::ostream& o) { write_chain_levels(levels, o); });
  return kExitOk;
}

int cmd_generate(const Options& opt, Session& s) {
  SyntheticOptions gen;
  gen.lemmas = opt.lemmas;
  gen.seed = opt.seed;
  const SyntheticCorpus corpus = generate_synthetic_corpus(gen);
  s.write_output(opt.out,
                 [&](std::ostream& o) { write_trace(corpus.trace, o); });
  if (!opt.names_out.empty()) {
    s.write_output(opt.names_out,
                   [&](std::ostream& o) { write_names(corpus.names, o); });
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  Options opt;
  CLI::App app{"lemma-forge: mine useful lemmas from proof traces",
               "lemma-forge"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for all subcommands");

  auto add_trace = [&](CLI::App* cmd) {
    cmd->add_option("--trace", opt.trace, "Proof trace file")->required();
  };
  auto add_graph = [&](CLI::App* cmd) {
    add_trace(cmd);
    cmd->add_option("--names", opt.names, "Names file (INDEX NAME)");
    cmd->add_option("--axiom-tags", opt.axiom_tags,
                    "Inference tags treated as axioms, e.g. AX");
  };
  auto add_out = [&](CLI::App* cmd) {
    cmd->add_option("--out", opt.out, "Output file (default: stdout)");
  };
  auto add_metric = [&](CLI::App* cmd) {
    cmd->add_option("--metric", opt.metric,
                    "q1, q1r:<r>, q2, q3, eq1, eq2, pr1..pr5")
        ->capture_default_str();
    cmd->add_option("--damping", opt.damping, "PageRank damping factor")
        ->capture_default_str();
    cmd->add_option("--pr-tol", opt.pr_tol, "PageRank L1 tolerance")
        ->capture_default_str();
    cmd->add_option("--pr-iters", opt.pr_iters, "PageRank iteration cap")
        ->capture_default_str();
    cmd->add_option("--threads", opt.threads,
                    "Worker threads (default: LEMMA_FORGE_THREADS or cores)");
  };
  auto add_best = [&](CLI::App* cmd) {
    cmd->add_option("--best", opt.best,
                    "Selected lemmas (index list or names file)");
  };

  auto* parse_check = app.add_subcommand("parse-check", "Validate a trace");
  add_trace(parse_check);
  parse_check->add_option("--edge-list", opt.edge_list,
                          "Also write the edge list (I J per edge)");

  auto* stats_cmd = app.add_subcommand("stats", "Corpus statistics");
  add_graph(stats_cmd);
  stats_cmd->add_option("--normal-forms", opt.normal_forms,
                        "Normal forms file (INDEX<TAB>FORM)");
  add_out(stats_cmd);

  auto* normalize_cmd =
      app.add_subcommand("normalize", "Merge alpha-variant references");
  add_trace(normalize_cmd);
  normalize_cmd->add_option("--normal-forms", opt.normal_forms)->required();
  normalize_cmd->add_flag("--prune", opt.prune,
                          "Drop variant proofs nothing refers to");
  normalize_cmd->add_option("--names", opt.names,
                            "Names kept alive and renumbered by --prune");
  normalize_cmd->add_option("--names-out", opt.names_out,
                            "Renumbered names file (with --prune)");
  add_out(normalize_cmd);

  auto* rank_cmd = app.add_subcommand("rank", "Rank lemmas by a metric");
  add_graph(rank_cmd);
  add_metric(rank_cmd);
  rank_cmd->add_option("--top", opt.top, "Number of lines")
      ->capture_default_str();
  add_out(rank_cmd);

  auto* select_cmd = app.add_subcommand("select", "Greedy best-lemma selection");
  add_graph(select_cmd);
  add_metric(select_cmd);
  select_cmd->add_option("--count", opt.count, "Lemmas to select")->required();
  auto* scratch = select_cmd->add_flag(
      "--from-scratch", opt.from_scratch, "Start from an empty named set");
  auto* extend = select_cmd->add_flag(
      "--extend", opt.extend, "Start from the names file (default)");
  scratch->excludes(extend);
  select_cmd->add_option("--checkpoint-every", opt.checkpoint_every,
                         "Rewrite outputs every K selections");
  select_cmd->add_option("--names-out", opt.names_out,
                         "Names file extended with LEMMA_nnnnn entries");
  add_out(select_cmd);

  auto* derive_cmd =
      app.add_subcommand("derive", "Edges of the derived NewThms graph");
  add_graph(derive_cmd);
  add_best(derive_cmd);
  add_out(derive_cmd);

  auto* problems_cmd =
      app.add_subcommand("problems", "Premise problems for named theorems");
  add_graph(problems_cmd);
  add_best(problems_cmd);
  problems_cmd->add_option("--mode", opt.mode, "cheating | almost-honest")
      ->capture_default_str();
  add_out(problems_cmd);

  auto* honest_cmd = app.add_subcommand(
      "honest-run", "Selections on prefix graphs of sampled theorems");
  add_graph(honest_cmd);
  add_metric(honest_cmd);
  honest_cmd->add_option("--step", opt.step, "Use every step-th theorem")
      ->capture_default_str();
  honest_cmd->add_option("--count", opt.count, "Lemmas per run")->required();
  add_out(honest_cmd);

  auto* chrono_cmd = app.add_subcommand(
      "chrono-export", "NewThms with parents in trace order");
  add_graph(chrono_cmd);
  add_best(chrono_cmd);
  add_out(chrono_cmd);

  auto* chain_cmd = app.add_subcommand(
      "chain-levels", "Chained-conjecturing levels from ATP round results");
  chain_cmd->add_option("--names", opt.names, "Original theorems");
  chain_cmd->add_option("--provable", opt.provable,
                        "Proved rounds per lemma (INDEX ROUND...)")
      ->required();
  add_out(chain_cmd);

  auto* generate_cmd =
      app.add_subcommand("generate", "Write a synthetic trace");
  generate_cmd->add_option("--lemmas", opt.lemmas, "Trace length")
      ->capture_default_str();
  generate_cmd->add_option("--seed", opt.seed, "Random seed")
      ->capture_default_str();
  generate_cmd->add_option("--names-out", opt.names_out,
                           "Also write the named theorems");
  add_out(generate_cmd);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitInputError;
  }

  Session session(opt, out, err);
  try {
    if (parse_check->parsed()) return cmd_parse_check(opt, session, out);
    if (stats_cmd->parsed()) return cmd_stats(opt, session);
    if (normalize_cmd->parsed()) return cmd_normalize(opt, session);
    if (rank_cmd->parsed()) return cmd_rank(opt, session);
    if (select_cmd->parsed()) return cmd_select(opt, session, err);
    if (derive_cmd->parsed()) return cmd_derive(opt, session);
    if (problems_cmd->parsed()) return cmd_problems(opt, session);
    if (honest_cmd->parsed()) return cmd_honest_run(opt, session, err);
    if (chrono_cmd->parsed()) return cmd_chrono_export(opt, session);
    if (chain_cmd->parsed()) return cmd_chain_levels(opt, session);
    if (generate_cmd->parsed()) return cmd_generate(opt, session);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternalError;
  }
  err << "internal error: no subcommand dispatched\n";
  return kExitInternalError;
}

}  // namespace lemma_forge::cli
