#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "intnfa/errors.hpp"
#include "intnfa/locks.hpp"
#include "intnfa/model.hpp"
#include "intnfa/nfa.hpp"
#include "intnfa/trace.hpp"
#include "intnfa/translator.hpp"

namespace intnfa::cli {

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t micros_since(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - start).count();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << text;
}

Model load_model(const std::string& path) {
  try {
    return parse_model(read_file(path));
  } catch (const ParseError& e) {
    throw InputError(path + ":" + e.what());
  }
}

// The automaton of `m` with every action renamed into `target`, which must
// declare all lifelines and messages of `m`.
Nfa nfa_over(const Model& m, const Signature& target) {
  auto a = build_nfa(m.signature, m.term).nfa;
  std::vector<Transition> ts;
  auto rename = [&](const Action& act) {
    return Action{*target.find_lifeline(m.signature.lifeline_name(act.lifeline)), act.direction,
                  *target.find_message(m.signature.message_name(act.message))};
  };
  for (const auto& t : a.transitions()) ts.push_back({t.source, rename(t.action), t.target});
  return Nfa(target.alphabet(), a.state_count(), a.initial(), a.accepting_states(), ts);
}

Signature merge_signatures(const Signature& a, const Signature& b) {
  auto lifelines = a.lifelines();
  for (const auto& l : b.lifelines()) {
    if (!a.find_lifeline(l)) lifelines.push_back(l);
  }
  auto messages = a.messages();
  for (const auto& m : b.messages()) {
    if (!a.find_message(m)) messages.push_back(m);
  }
  return Signature(std::move(lifelines), std::move(messages));
}

struct Options {
  std::string model;
  std::string model_b;
  std::string traces;
  bool raw = false;
  std::string dot_path;
  std::string states_path;
  std::string stats_path;
  std::string algo = "hopcroft";
  std::string method = "interaction";
  std::string mode = "exact";
  double timeout_s = 10.0;
  bool no_timing = false;
  std::size_t accepted = 0;
  std::size_t errors = 0;
  std::size_t min_len = 0;
  std::size_t max_len = 20;
  std::uint64_t seed = 0;
  std::string topology = "chain:1";
  bool sp = false;
};

Mode parse_mode(const std::string& s) { return s == "prefix" ? Mode::Prefix : Mode::Exact; }

int cmd_validate(const Options& o, std::ostream& out) {
  auto m = load_model(o.model);
  out << "ok: " << m.signature.lifeline_count() << " lifelines, "
      << m.signature.message_count() << " messages, " << m.term.size() << " nodes\n";
  return Ok;
}

int cmd_generate(const Options& o, std::ostream& out) {
  auto m = load_model(o.model);
  auto start = Clock::now();
  TranslationOptions topts;
  topts.simplified = !o.raw;
  auto t = build_nfa(m.signature, m.term, topts);
  auto elapsed = micros_since(start);
  out << "states: " << t.nfa.state_count() << "\n";
  out << "transitions: " << t.nfa.transition_count() << "\n";
  out << "accepting: " << t.nfa.accepting_count() << "\n";
  if (!o.dot_path.empty()) write_file(o.dot_path, to_dot(t.nfa, m.signature));
  if (!o.states_path.empty()) write_file(o.states_path, dump_states(t, m.signature));
  if (!o.stats_path.empty()) write_file(o.stats_path, stats_json(t.nfa, elapsed) + "\n");
  return Ok;
}

int cmd_mindfa(const Options& o, std::ostream& out) {
  auto m = load_model(o.model);
  auto nfa = build_nfa(m.signature, m.term).nfa;
  auto algo = o.algo == "brzozowski" ? MinimizeAlgorithm::Brzozowski : MinimizeAlgorithm::Hopcroft;
  auto dfa = minimize_dfa(determinize(nfa), algo);
  out << "nfa_states: " << nfa.state_count() << "\n";
  out << "states: " << dfa.state_count() << "\n";
  out << "transitions: " << dfa.nfa().transition_count() << "\n";
  return Ok;
}

int cmd_compo(const Options& o, std::ostream& out) {
  auto m = load_model(o.model);
  auto a = compo(m.signature, m.term);
  out << "states: " << a.state_count() << "\n";
  out << "transitions: " << a.transition_count() << "\n";
  return Ok;
}

int cmd_analyze(const Options& o, std::ostream& out) {
  auto m = load_model(o.model);
  auto traces = parse_trace_file(m.signature, read_file(o.traces));
  AnalysisOptions opts;
  opts.mode = parse_mode(o.mode);
  opts.timeout = std::chrono::duration_cast<std::chrono::nanoseconds>(
      std::chrono::duration<double>(o.timeout_s));
  std::optional<NfaRunner> runner;
  if (o.method == "nfa") runner.emplace(build_nfa(m.signature, m.term).nfa);
  bool all_pass = true;
  for (std::size_t k = 0; k < traces.size(); ++k) {
    auto v = runner ? runner->analyze(traces[k], opts)
                    : analyze_interaction(m.signature, m.term, traces[k], opts);
    if (o.no_timing) v.elapsed = {};
    all_pass = all_pass && v.outcome == Outcome::Pass;
    out << verdict_json(k, v) << "\n";
  }
  return all_pass ? Ok : Failed;
}

int cmd_gentraces(const Options& o, std::ostream& out) {
  auto m = load_model(o.model);
  auto nfa = trim(build_nfa(m.signature, m.term).nfa);
  auto accepted = gen_accepted(nfa, o.accepted, o.min_len, o.max_len, o.seed);
  out << "# accepted\n";
  for (const auto& t : accepted) out << m.signature.format(t) << "\n";
  if (o.errors > 0) {
    auto base = gen_accepted(nfa, o.errors, o.min_len, o.max_len, ~o.seed);
    ErrorGenOptions eopts;
    eopts.mode = parse_mode(o.mode);
    auto errors = gen_errors(nfa, base, o.seed, eopts);
    out << "# errors\n";
    for (const auto& t : errors) out << m.signature.format(t) << "\n";
  }
  return Ok;
}

int cmd_equiv(const Options& o, std::ostream& out) {
  auto a = load_model(o.model);
  auto b = load_model(o.model_b);
  auto sig = merge_signatures(a.signature, b.signature);
  bool same = equivalent(nfa_over(a, sig), nfa_over(b, sig));
  out << (same ? "equivalent" : "not equivalent") << "\n";
  return same ? Ok : Failed;
}

int cmd_bench_locks(const Options& o, std::ostream& out) {
  LockSpec spec;
  parse_topology(o.topology, spec);
  spec.scheduling = o.sp ? Scheduling::StrictPar : Scheduling::Seq;
  auto m = lock_model(spec);

  nlohmann::ordered_json row;
  row["schema"] = 1;
  row["topology"] = topology_name(spec);
  row["scheduling"] = o.sp ? "sp" : "seq";

  auto start = Clock::now();
  auto simplified = build_nfa(m.signature, m.term).nfa;
  row["nfa_s"] = simplified.state_count();
  row["nfa_s_us"] = micros_since(start);

  TranslationOptions raw_opts;
  raw_opts.simplified = false;
  start = Clock::now();
  auto raw = build_nfa(m.signature, m.term, raw_opts).nfa;
  row["nfa_raw"] = raw.state_count();
  row["nfa_raw_us"] = micros_since(start);

  start = Clock::now();
  auto dfa = minimize_dfa(determinize(simplified));
  row["min_dfa"] = dfa.state_count();
  row["min_dfa_us"] = micros_since(start);

  if (o.sp) {
    start = Clock::now();
    auto c = compo(m.signature, m.term);
    row["compo"] = c.state_count();
    row["compo_us"] = micros_since(start);
    row["compo_equivalent"] = equivalent(c, simplified);
  }
  if (o.no_timing) {
    for (auto key : {"nfa_s_us", "nfa_raw_us", "min_dfa_us", "compo_us"}) {
      if (row.contains(key)) row[key] = 0;
    }
  }
  out << row.dump() << "\n";
  return Ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Interaction models to finite automata, and trace analysis", "intnfa"};
  app.require_subcommand(1);
  Options o;

  auto* validate = app.add_subcommand("validate", "Parse and check a model file");
  validate->add_option("model", o.model, "Model file")->required();

  auto* generate = app.add_subcommand("generate", "Build the NFA of a model");
  generate->add_option("model", o.model, "Model file")->required();
  generate->add_flag("--raw", o.raw, "Do not merge states up to normal form");
  generate->add_option("--dot", o.dot_path, "Write the automaton as Graphviz");
  generate->add_option("--states-dump", o.states_path, "Write one 'id<TAB>term' line per state");
  generate->add_option("--stats", o.stats_path, "Write JSON statistics");

  auto* mindfa = app.add_subcommand("mindfa", "Determinize and minimize the NFA of a model");
  mindfa->add_option("model", o.model, "Model file")->required();
  mindfa->add_option("--algo", o.algo, "Minimization algorithm")
      ->check(CLI::IsMember({"hopcroft", "brzozowski"}));

  auto* compo_cmd = app.add_subcommand("compo", "Compositional NFA of a model");
  compo_cmd->add_option("model", o.model, "Model file")->required();

  auto* analyze = app.add_subcommand("analyze", "Check traces against a model");
  analyze->add_option("model", o.model, "Model file")->required();
  analyze->add_option("traces", o.traces, "Trace file")->required();
  analyze->add_option("--method", o.method, "Analysis method")
      ->check(CLI::IsMember({"interaction", "nfa"}));
  analyze->add_option("--mode", o.mode, "Membership or prefix membership")
      ->check(CLI::IsMember({"exact", "prefix"}));
  analyze->add_option("--timeout", o.timeout_s, "Per-trace timeout in seconds")
      ->check(CLI::PositiveNumber);
  analyze->add_flag("--no-timing", o.no_timing, "Report elapsed_us as 0");

  auto* gentraces = app.add_subcommand("gentraces", "Generate accepted and error traces");
  gentraces->add_option("model", o.model, "Model file")->required();
  gentraces->add_option("--accepted", o.accepted, "Number of accepted traces");
  gentraces->add_option("--errors", o.errors, "Number of error traces");
  gentraces->add_option("--min-len", o.min_len, "Minimum accepted-trace length");
  gentraces->add_option("--max-len", o.max_len, "Maximum accepted-trace length");
  gentraces->add_option("--seed", o.seed, "Random seed");
  gentraces->add_option("--mode", o.mode, "Mode the error traces must fail")
      ->check(CLI::IsMember({"exact", "prefix"}));

  auto* equiv = app.add_subcommand("equiv", "Compare the languages of two models");
  equiv->add_option("model_a", o.model, "First model file")->required();
  equiv->add_option("model_b", o.model_b, "Second model file")->required();

  auto* bench = app.add_subcommand("bench", "Benchmark model families");
  bench->require_subcommand(1);
  auto* locks = bench->add_subcommand("locks", "Digital-lock networks");
  locks->add_option("--topology", o.topology, "chain:N, diamond4 or diamond8");
  locks->add_flag("--sp", o.sp, "Strict/par scheduling between locks");
  locks->add_flag("--no-timing", o.no_timing, "Report timings as 0");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? Ok : UsageError;
  }

  try {
    if (validate->parsed()) return cmd_validate(o, out);
    if (generate->parsed()) return cmd_generate(o, out);
    if (mindfa->parsed()) return cmd_mindfa(o, out);
    if (compo_cmd->parsed()) return cmd_compo(o, out);
    if (analyze->parsed()) return cmd_analyze(o, out);
    if (gentraces->parsed()) return cmd_gentraces(o, out);
    if (equiv->parsed()) return cmd_equiv(o, out);
    if (locks->parsed()) return cmd_bench_locks(o, out);
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << "\n";
    return ResourceExceeded;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return UsageError;
  }
  return UsageError;
}

}  // namespace intnfa::cli
