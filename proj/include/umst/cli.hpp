#pragma once

// Command-line front end. Subcommands: run | opt | ratio | gen | batch |
// witness-check. Exit codes: 0 ok, 2 input error, 3 inconsistent truth,
// 4 oracle bound exceeded, 5 ratio bound assertion failed.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <iomanip>

#include <CLI11.hpp>

#include "umst/io.hpp"

namespace umst::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 2;
inline constexpr int kExitInconsistent = 3;
inline constexpr int kExitOracleBound = 4;
inline constexpr int kExitRatioBound = 5;

inline int exit_code_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::NotARealization:
    case ErrorCode::InconsistentReveal:
      return kExitInconsistent;
    case ErrorCode::InstanceTooLarge:
      return kExitOracleBound;
    default:
      return kExitInput;
  }
}

inline OracleLimits oracle_limits(int bound_flag) {
  OracleLimits limits;
  if (const char* env = std::getenv("UMST_ORACLE_BOUND"); env && *env)
    limits.max_nontrivial = std::atoi(env);
  if (bound_flag > 0) limits.max_nontrivial = bound_flag;
  return limits;
}

struct Report {
  std::string instance;
  std::string model;
  int updates = 0;
  std::optional<int> opt;
  double runtime_ms = 0;
  std::string event_log;

  double ratio() const { return opt ? static_cast<double>(updates) / std::max(*opt, 1) : 0.0; }

  Json to_json() const {
    Json j{{"instance", instance}, {"model", model}, {"updates", updates},
           {"runtime_ms", runtime_ms}};
    if (opt) {
      j["opt"] = *opt;
      j["ratio"] = ratio();
    }
    if (!event_log.empty()) j["event_log"] = event_log;
    return j;
  }
};

namespace detail {

struct RunOutcome {
  Report report;
  std::vector<std::string> tree_edges;
  std::string events_jsonl;
};

inline RunOutcome run_any(const AnyInstance& any, const std::string& name) {
  RunOutcome out;
  out.report.instance = name;
  auto t0 = std::chrono::steady_clock::now();
  if (const auto* inst = std::get_if<Instance>(&any)) {
    out.report.model = "edge";
    RunResult r = run_u_red(*inst);
    out.report.updates = r.trace.count();
    std::vector<std::string> edge_names;
    for (const auto& e : inst->graph.edges) edge_names.push_back(e.name);
    for (EdgeIndex e : r.tree.edges) out.tree_edges.push_back(inst->graph.edges[e].name);
    out.events_jsonl = events_to_jsonl(r.events, edge_names, inst->graph.vertex_names);
  } else {
    const auto& vi = std::get<VertexInstance>(any);
    out.report.model = "vertex";
    VertexRunResult r = run_vertex_u_red(vi);
    out.report.updates = static_cast<int>(r.trace.size());
    std::vector<std::string> edge_names;
    for (auto [u, v] : vi.edge_list) edge_names.push_back(vi.names[u] + "--" + vi.names[v]);
    for (EdgeIndex e : r.tree.edges) out.tree_edges.push_back(edge_names[e]);
    out.events_jsonl = events_to_jsonl(r.events, edge_names, vi.names);
  }
  out.report.runtime_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return out;
}

inline int opt_any(const AnyInstance& any, const OracleLimits& limits) {
  if (const auto* inst = std::get_if<Instance>(&any)) return opt_updates(*inst, limits);
  return vertex_opt(std::get<VertexInstance>(any), limits);
}

inline std::string instance_stem(const std::string& path) {
  return std::filesystem::path(path).stem().string();
}

inline std::vector<std::string> split_names(const std::string& csv) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : csv) {
    if (c == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

inline void print_report(std::ostream& os, const Report& rep, bool as_json,
                         const std::vector<std::string>& tree_edges) {
  if (as_json) {
    Json j = rep.to_json();
    if (!tree_edges.empty()) j["tree"] = tree_edges;
    os << j.dump() << "\n";
    return;
  }
  os << "instance  " << rep.instance << "\n";
  os << "model     " << rep.model << "\n";
  os << "updates   " << rep.updates << "\n";
  if (rep.opt) {
    os << "opt       " << *rep.opt << "\n";
    if (rep.updates == 0 && *rep.opt == 0)
      os << "ratio     verified-without-updates\n";
    else
      os << "ratio     " << rep.ratio() << "\n";
  }
  if (!tree_edges.empty()) {
    os << "tree     ";
    for (const auto& e : tree_edges) os << " " << e;
    os << "\n";
  }
  if (!rep.event_log.empty()) os << "event-log " << rep.event_log << "\n";
}

}  // namespace detail

// Runs the whole CLI; flags are parsed from `args` (without argv[0]).
inline int dispatch(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"minimum spanning trees under explorable uncertainty"};
  app.require_subcommand(1);

  std::string path, log_path, set_csv, after_csv, family, out_path, transcript_path, dir;
  bool as_json = false, want_sets = false, bipartite = false, half_open = false,
       adversarial = false;
  int bound = 0, k = 1, pos = 1, copies = 1, n = 6;
  double assert_bound = 0, edge_prob = 0.5, trivial_frac = 0.3, width_min = 0.5, width_max = 3.0;
  std::uint64_t seed = 1;

  CLI::App* c_run = app.add_subcommand("run", "run the update algorithm on an instance file");
  c_run->add_option("file", path)->required();
  c_run->add_option("--log", log_path, "write the event log (JSON lines) here");
  c_run->add_flag("--json", as_json);

  CLI::App* c_opt = app.add_subcommand("opt", "brute-force minimum verifying update set");
  c_opt->add_option("file", path)->required();
  c_opt->add_flag("--sets", want_sets, "also print all minimal verifying sets");
  c_opt->add_option("--bound", bound, "override the oracle size bound");

  CLI::App* c_ratio = app.add_subcommand("ratio", "algorithm updates versus OPT");
  c_ratio->add_option("file", path)->required();
  c_ratio->add_option("--assert-bound", assert_bound, "exit 5 when the ratio exceeds this");
  c_ratio->add_option("--bound", bound);
  c_ratio->add_flag("--json", as_json);

  CLI::App* c_gen = app.add_subcommand("gen", "write a paper construction or random instance");
  c_gen->add_option("family", family,
                    "gadget-path | star | half-open-cycle | vertex-lb | random")->required();
  c_gen->add_option("--out", out_path)->required();
  c_gen->add_option("--k", k);
  c_gen->add_option("--pos", pos);
  c_gen->add_option("--copies", copies);
  c_gen->add_option("--seed", seed);
  c_gen->add_option("--n", n);
  c_gen->add_option("--edge-prob", edge_prob);
  c_gen->add_option("--trivial-frac", trivial_frac);
  c_gen->add_option("--width-min", width_min);
  c_gen->add_option("--width-max", width_max);
  c_gen->add_flag("--bipartite", bipartite);
  c_gen->add_flag("--half-open", half_open);
  c_gen->add_flag("--adversarial", adversarial,
                  "play the paired adversary against the algorithm; write the induced instance");
  c_gen->add_option("--transcript", transcript_path, "event-log path for the adversarial play");

  CLI::App* c_batch = app.add_subcommand("batch", "run + opt over every .json in a directory");
  c_batch->add_option("dir", dir)->required();
  c_batch->add_option("--bound", bound);

  CLI::App* c_witness = app.add_subcommand("witness-check",
                                           "is the given edge set a witness set of the view");
  c_witness->add_option("file", path)->required();
  c_witness->add_option("--set", set_csv, "comma-separated edge ids")->required();
  c_witness->add_option("--after", after_csv, "edges updated (to truth) before the check");
  c_witness->add_option("--bound", bound);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help();
      return kExitOk;
    }
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }

  try {
    OracleLimits limits = oracle_limits(bound);

    if (c_run->parsed()) {
      auto any = load_instance_file(path);
      auto outcome = detail::run_any(any, detail::instance_stem(path));
      if (!log_path.empty()) {
        std::ofstream log(log_path);
        if (!log) throw Error(ErrorCode::BadInput, "cannot write '" + log_path + "'");
        log << outcome.events_jsonl;
        outcome.report.event_log = log_path;
      }
      detail::print_report(out, outcome.report, as_json, outcome.tree_edges);
      return kExitOk;
    }

    if (c_opt->parsed()) {
      auto any = load_instance_file(path);
      int opt = detail::opt_any(any, limits);
      out << "OPT " << opt << "\n";
      if (want_sets) {
        Json sets = Json::array();
        if (const auto* inst = std::get_if<Instance>(&any)) {
          for (const auto& s : minimal_verifying_sets(*inst, limits)) {
            Json one = Json::array();
            for (EdgeIndex e : s) one.push_back(inst->graph.edges[e].name);
            sets.push_back(std::move(one));
          }
        } else {
          const auto& vi = std::get<VertexInstance>(any);
          for (const auto& s : vertex_minimal_verifying_sets(vi, limits)) {
            Json one = Json::array();
            for (VertexIndex v : s) one.push_back(vi.names[v]);
            sets.push_back(std::move(one));
          }
        }
        out << "sets " << sets.dump() << "\n";
      }
      return kExitOk;
    }

    if (c_ratio->parsed()) {
      auto any = load_instance_file(path);
      auto outcome = detail::run_any(any, detail::instance_stem(path));
      outcome.report.opt = detail::opt_any(any, limits);
      detail::print_report(out, outcome.report, as_json, {});
      if (assert_bound > 0 && outcome.report.ratio() > assert_bound) {
        err << "ratio " << outcome.report.ratio() << " exceeds bound " << assert_bound << "\n";
        return kExitRatioBound;
      }
      return kExitOk;
    }

    if (c_gen->parsed()) {
      if (adversarial && family != "gadget-path" && family != "vertex-lb")
        throw Error(ErrorCode::BadInput, "no paired adversary for family '" + family + "'");
      Json file_json;
      std::string transcript;
      if (family == "gadget-path") {
        Instance inst = gen_gadget_path(k);
        if (adversarial) {
          GadgetAdversary adv;
          RunResult r = run_u_red(inst.graph, adv.reveal_fn(inst.graph));
          std::vector<std::string> edge_names;
          for (const auto& e : inst.graph.edges) edge_names.push_back(e.name);
          transcript = events_to_jsonl(r.events, edge_names, inst.graph.vertex_names);
          inst = adv.induced(inst.graph);
          out << "adversarial updates " << r.trace.count() << "\n";
        }
        file_json = instance_to_json(inst);
      } else if (family == "star") {
        file_json = instance_to_json(gen_star(k, pos, bipartite, half_open));
      } else if (family == "half-open-cycle") {
        file_json = instance_to_json(gen_half_open_cycle(k, pos));
      } else if (family == "vertex-lb") {
        VertexInstance vi = gen_vertex_lb(copies);
        if (adversarial) {
          VertexLbAdversary adv(vi);
          VertexRunResult r = run_vertex_u_red(vi, adv.reveal_fn());
          std::vector<std::string> edge_names;
          for (auto [u, v] : vi.edge_list) edge_names.push_back(vi.names[u] + "--" + vi.names[v]);
          transcript = events_to_jsonl(r.events, edge_names, vi.names);
          vi = adv.induced();
          out << "adversarial updates " << r.trace.size() << "\n";
        }
        file_json = vertex_instance_to_json(vi);
      } else if (family == "random") {
        RandomInstanceParams p;
        p.seed = seed;
        p.n = n;
        p.edge_prob = edge_prob;
        p.trivial_frac = trivial_frac;
        p.width_min = width_min;
        p.width_max = width_max;
        file_json = instance_to_json(gen_random(p));
      } else {
        throw Error(ErrorCode::BadInput, "unknown family '" + family + "'");
      }
      write_json_file(out_path, file_json);
      out << "wrote " << out_path << "\n";
      if (!transcript_path.empty()) {
        std::ofstream t(transcript_path);
        if (!t) throw Error(ErrorCode::BadInput, "cannot write '" + transcript_path + "'");
        t << transcript;
        out << "wrote " << transcript_path << "\n";
      }
      return kExitOk;
    }

    if (c_batch->parsed()) {
      std::vector<std::string> files;
      for (const auto& entry : std::filesystem::directory_iterator(dir))
        if (entry.path().extension() == ".json") files.push_back(entry.path().string());
      std::sort(files.begin(), files.end());
      out << "instance\tmodel\tupdates\topt\tratio\n";
      for (const auto& f : files) {
        auto any = load_instance_file(f);
        auto outcome = detail::run_any(any, detail::instance_stem(f));
        std::string opt_text = "NA", ratio_text = "NA";
        try {
          outcome.report.opt = detail::opt_any(any, limits);
          opt_text = std::to_string(*outcome.report.opt);
          std::ostringstream r;
          r << outcome.report.ratio();
          ratio_text = r.str();
        } catch (const Error& e) {
          if (e.code() != ErrorCode::InstanceTooLarge) throw;
        }
        out << outcome.report.instance << "\t" << outcome.report.model << "\t"
            << outcome.report.updates << "\t" << opt_text << "\t" << ratio_text << "\n";
      }
      return kExitOk;
    }

    if (c_witness->parsed()) {
      auto any = load_instance_file(path);
      const auto* inst = std::get_if<Instance>(&any);
      if (!inst)
        throw Error(ErrorCode::BadInput, "witness-check expects an edge-model instance");
      auto resolve = [&](const std::string& name) {
        auto e = inst->graph.edge_by_name(name);
        if (!e) throw Error(ErrorCode::BadInput, "no edge '" + name + "'");
        return *e;
      };
      AlgoView view = make_view(inst->graph);
      for (const auto& name : detail::split_names(after_csv))
        update_edge(view, *inst, resolve(name));
      std::vector<EdgeIndex> w;
      for (const auto& name : detail::split_names(set_csv)) w.push_back(resolve(name));
      bool witness = is_witness_set(*inst, view.areas, w, limits);
      out << (witness ? "witness-set" : "not-a-witness-set") << "\n";
      return kExitOk;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}

}  // namespace umst::cli
