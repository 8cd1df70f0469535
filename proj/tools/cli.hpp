#pragma once

// Command-line front end. Kept in a header so tests can drive it in-process.

#include <algorithm>
#include <cstdint>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hamcon/hamcon.hpp"

namespace hamcon::cli {

inline constexpr int kOk = 0;
inline constexpr int kNegative = 1;      // oracle false, theorem mismatch, counterexample
inline constexpr int kInconclusive = 2;
inline constexpr int kUsage = 64;
inline constexpr int kDataError = 65;    // malformed or oversized input graph

using nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline json big_to_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(v);
  }
  return v.str();
}

inline json edge_json(const Edge& e) { return json::array({e.first, e.second}); }

inline std::vector<Graph> read_graphs(std::istream& in) {
  std::vector<Graph> graphs;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    graphs.push_back(decode_graph6(line));
  }
  if (graphs.empty()) throw UsageError("no graph6 input on stdin");
  return graphs;
}

inline std::vector<Vertex> parse_set(const std::string& text) {
  std::vector<Vertex> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(item, &used);
    } catch (const std::exception&) {
      throw UsageError("--set: '" + item + "' is not a vertex index");
    }
    if (used != item.size()) throw UsageError("--set: '" + item + "' is not a vertex index");
    out.push_back(static_cast<Vertex>(v));
  }
  return out;
}

inline json verdict_json(const Verdict& v) {
  json j{{"outcome", std::string(to_string(v.outcome))}};
  std::visit(
      [&](const auto& w) {
        using W = std::decay_t<decltype(w)>;
        if constexpr (std::is_same_v<W, OreWitness>) {
          j["test"] = "ore";
          j["violating_pair"] = w.violating_pair ? edge_json(*w.violating_pair) : json(nullptr);
        } else if constexpr (std::is_same_v<W, LickWitness>) {
          j["test"] = "lick";
          j["index"] = w.index ? json(*w.index) : json(nullptr);
        } else if constexpr (std::is_same_v<W, SizeWitness>) {
          j["test"] = "size";
          j["edges"] = w.edges;
          j["min_degree"] = w.min_degree;
          j["half_degree_clause"] = w.half_degree_clause;
          j["phi"] = w.phi ? big_to_json(*w.phi) : json(nullptr);
        } else {
          j["test"] = "separator";
          j["set"] = w.set;
          j["components"] = w.components;
        }
      },
      v.witness);
  return j;
}

inline json report_json(const ExtremalReport& r) {
  json soundness{{"checked", r.soundness.checked},
                 {"ore_certified", r.soundness.ore_certified},
                 {"ore_wrong", r.soundness.ore_wrong},
                 {"lick_certified", r.soundness.lick_certified},
                 {"lick_wrong", r.soundness.lick_wrong},
                 {"size_certified", r.soundness.size_certified},
                 {"size_wrong", r.soundness.size_wrong},
                 {"separator_certified", r.soundness.separator_certified},
                 {"separator_wrong", r.soundness.separator_wrong}};
  return json{{"n", r.n},
              {"delta", r.delta},
              {"s", r.s},
              {"observed_max", r.observed_max ? json(*r.observed_max) : json(nullptr)},
              {"predicted", big_to_json(r.predicted)},
              {"maximizer_classes", r.maximizer_classes},
              {"expected_classes", r.expected_classes},
              {"matches_theorem", r.matches_theorem},
              {"constructions_coincide", r.constructions_coincide},
              {"graphs_enumerated", r.graphs_enumerated},
              {"oracle_calls", r.oracle_calls},
              {"nhc_found", r.nhc_found},
              {"soundness", soundness}};
}

inline json sample_json(const SampleReport& r) {
  return json{{"n", r.n},
              {"delta", r.delta},
              {"trials", r.trials},
              {"seed", r.seed},
              {"counterexamples", r.counterexamples},
              {"rejections", r.rejections},
              {"first_counterexample",
               r.first_counterexample ? json(*r.first_counterexample) : json(nullptr)}};
}

inline std::pair<std::size_t, std::size_t> parse_range(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw UsageError("--n-range expects A:B");
  try {
    std::size_t used_a = 0, used_b = 0;
    const std::string a = text.substr(0, colon), b = text.substr(colon + 1);
    const auto lo = std::stoull(a, &used_a);
    const auto hi = std::stoull(b, &used_b);
    if (used_a != a.size() || used_b != b.size() || lo > hi) throw UsageError("");
    return {lo, hi};
  } catch (const std::exception&) {
    throw UsageError("--n-range expects A:B with A <= B");
  }
}

/// Runs one invocation. `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
               std::ostream& err) {
  CLI::App app{"Non-hamiltonian-connected extremal graphs: constructions, bounds and checks",
               "hamcon"};
  app.require_subcommand(1);
  app.fallthrough();

  std::optional<std::string> format;
  std::size_t dp_cap = 24;
  std::size_t threads = 1;
  std::uint64_t seed = 1;
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"graph6", "dot", "json", "csv", "text"}));
  app.add_option("--dp-cap", dp_cap, "Largest order accepted by the exact oracle")
      ->check(CLI::Range(std::size_t{2}, OracleOptions::kHardCap));
  app.add_option("--threads", threads, "Worker threads for oracle and sampling")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", seed, "Random seed");

  // construct
  auto* construct = app.add_subcommand("construct", "Build an extremal graph");
  std::string family_name;
  std::size_t n = 0, delta = 0;
  construct->add_option("--family", family_name, "F|G|ore-nh-a|ore-nh-b|ore-nhc-a|ore-nhc-b")
      ->required()
      ->check(CLI::IsMember({"F", "G", "ore-nh-a", "ore-nh-b", "ore-nhc-a", "ore-nhc-b"}));
  construct->add_option("--n", n, "Order")->required();
  construct->add_option("--delta", delta, "Minimum degree (F and G)");

  // cliques
  auto* cliques = app.add_subcommand("cliques", "Clique formulas and exact counts");
  std::size_t s = 2;
  std::optional<std::string> formula;
  std::optional<std::int64_t> x;
  cliques->add_option("--s", s, "Clique size")->check(CLI::PositiveNumber);
  cliques->add_option("--formula", formula, "f|g|lambda")->check(CLI::IsMember({"f", "g", "lambda"}));
  cliques->add_option("--n", n, "Order");
  cliques->add_option("--delta", delta, "Minimum degree");
  cliques->add_option("--x", x, "Argument of lambda (defaults to --delta)");
  auto* cliques_count = cliques->add_subcommand("count", "Count s-cliques of graph6 input");

  // bounds
  auto* bounds = app.add_subcommand("bounds", "Evaluate a closed-form bound");
  std::string kind_name;
  std::int64_t bn = 0, bdelta = 0, bs = 2;
  bounds->add_option("--kind", kind_name,
                     "ore-nh|erdos|zhang|sh-pancyclic|ore-nhc|ho|phi-s|phi|cor2");
  bounds->add_option("--n", bn, "Order");
  bounds->add_option("--delta", bdelta, "Minimum degree (k for cor2)");
  bounds->add_option("--s", bs, "Clique size for phi-s and cor2");
  auto* table = bounds->add_subcommand("table", "Tabulate phi and reference bounds");
  std::string n_range;
  table->add_option("--n-range", n_range, "A:B")->required();

  // closure / core
  auto* closure = app.add_subcommand("closure", "Hamiltonian-connected closure of graph6 input");
  std::optional<std::size_t> protect;
  closure->add_option("--protect", protect, "Vertex excluded from added edges");

  auto* core = app.add_subcommand("core", "t-disintegration of graph6 input");
  std::size_t t = 0;
  std::optional<std::size_t> first;
  core->add_option("--t", t, "Deletion threshold")->required();
  core->add_option("--first", first, "Vertex deleted first");

  // check
  auto* check = app.add_subcommand("check", "One-sided sufficiency tests");
  std::string test_name;
  std::string set_text;
  check->add_option("test", test_name, "ore|lick|size|separator")
      ->required()
      ->check(CLI::IsMember({"ore", "lick", "size", "separator"}));
  check->add_option("--set", set_text, "Comma-separated separator vertices");

  // oracle
  auto* oracle = app.add_subcommand("oracle", "Exact Hamilton path/cycle decisions");
  std::string question;
  std::optional<std::size_t> pu, pv;
  bool matrix = false;
  oracle->add_option("question", question, "hc|ham-cycle|ham-path")
      ->required()
      ->check(CLI::IsMember({"hc", "ham-cycle", "ham-path"}));
  oracle->add_option("--u", pu, "Path start");
  oracle->add_option("--v", pv, "Path end");
  oracle->add_flag("--matrix", matrix, "Emit the full pair matrix as JSON");

  // verify
  auto* verify = app.add_subcommand("verify", "Reproduce the extremal results at small order");
  verify->require_subcommand(1);
  auto* exhaustive = verify->add_subcommand("exhaustive", "Exhaustive search at n <= 8");
  std::size_t vs = 2;
  exhaustive->add_option("--n", n, "Order")->required();
  exhaustive->add_option("--delta", delta, "Minimum degree")->required();
  exhaustive->add_option("--s", vs, "Clique size (2 = edges)");
  auto* sample = verify->add_subcommand("sample", "Randomized probe above phi(n, delta)");
  std::uint64_t trials = 0;
  sample->add_option("--n", n, "Order")->required();
  sample->add_option("--delta", delta, "Minimum degree")->required();
  sample->add_option("--trials", trials, "Number of accepted samples")->required();

  for (auto* sub : {construct, cliques, cliques_count, bounds, table, closure, core, check, oracle,
                    verify, exhaustive, sample}) {
    sub->fallthrough();
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "hamcon: " << e.what() << "\n" << "Run 'hamcon --help' for usage.\n";
    return kUsage;
  }

  auto format_or = [&](const char* fallback, std::initializer_list<const char*> allowed) {
    const std::string f = format.value_or(fallback);
    if (std::find_if(allowed.begin(), allowed.end(), [&](const char* a) { return f == a; }) ==
        allowed.end()) {
      throw UsageError("--format " + f + " is not supported by this command");
    }
    return f;
  };

  auto emit_graph = [&](const Graph& g, const std::string& f) {
    if (f == "dot") {
      out << export_dot(g);
    } else {
      out << encode_graph6(g) << "\n";
    }
  };

  try {
    if (construct->parsed()) {
      const std::string f = format_or("graph6", {"graph6", "dot"});
      ConstructionSpec spec{*parse_family(family_name), n, delta};
      emit_graph(build_classical(spec), f);
      return kOk;
    }

    if (cliques->parsed()) {
      if (s < 1) throw UsageError("--s must be at least 1");
      if (cliques_count->parsed()) {
        const std::string f = format_or("text", {"text", "json"});
        for (const Graph& g : read_graphs(in)) {
          const auto c = count_cliques(g, s);
          if (f == "json") {
            out << json{{"s", c.s}, {"count", c.count}}.dump() << "\n";
          } else {
            out << c.count << "\n";
          }
        }
        return kOk;
      }
      const std::string f = format_or("text", {"text", "json"});
      const auto ni = static_cast<std::int64_t>(n);
      const auto di = static_cast<std::int64_t>(delta);
      const auto si = static_cast<std::int64_t>(s);
      json j{{"n", n}, {"s", s}};
      if (!formula || *formula == "f") j["f"] = big_to_json(f_s_formula(ni, di, si));
      if (!formula || *formula == "g") j["g"] = big_to_json(g_s_formula(ni, di, si));
      if (formula && *formula == "lambda") {
        const std::int64_t arg = x.value_or(di);
        j["x"] = arg;
        j["lambda"] = big_to_json(lambda_s(ni, arg, si));
      } else {
        j["delta"] = delta;
      }
      if (!formula) {
        const auto r = phi_s(ni, di, si);
        j["phi_s"] = big_to_json(r.value);
        j["regime"] = std::string(to_string(r.regime));
      }
      if (f == "json") {
        out << j.dump() << "\n";
      } else {
        for (const char* key : {"f", "g", "lambda", "phi_s", "regime"}) {
          if (!j.contains(key)) continue;
          const auto& v = j[key];
          out << key << " " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
        }
      }
      return kOk;
    }

    if (bounds->parsed()) {
      if (table->parsed()) {
        const std::string f = format_or("csv", {"csv", "json"});
        auto [lo, hi] = parse_range(n_range);
        json rows = json::array();
        if (f == "csv") out << "n,delta,f2,g2,phi,regime,families,ho,erdos,zhang\n";
        for (std::size_t nn = lo; nn <= hi; ++nn) {
          const auto ni = static_cast<std::int64_t>(nn);
          for (std::int64_t d = 3; d <= ni / 2; ++d) {
            const auto p = phi(ni, d);
            const std::string ho = reference_bound(BoundKind::kHo, ni, d).value.str();
            const std::string erdos =
                d <= (ni - 1) / 2 ? reference_bound(BoundKind::kErdos, ni, d).value.str() : "";
            const std::string zhang = reference_bound(BoundKind::kZhang, ni, d).value.str();
            const std::string f2 = f_s_formula(ni, d, 2).str();
            const std::string g2 = g_s_formula(ni, d, 2).str();
            const std::string fam = to_string(extremal_family(ni, d));
            if (f == "csv") {
              out << nn << "," << d << "," << f2 << "," << g2 << "," << p.value.str() << ","
                  << to_string(p.regime) << ",\"" << fam << "\"," << ho << "," << erdos << ","
                  << zhang << "\n";
            } else {
              rows.push_back({{"n", nn}, {"delta", d}, {"f2", f2}, {"g2", g2},
                              {"phi", p.value.str()}, {"regime", to_string(p.regime)},
                              {"families", fam}, {"ho", ho}, {"erdos", erdos}, {"zhang", zhang}});
            }
          }
        }
        if (f == "json") out << rows.dump(2) << "\n";
        return kOk;
      }
      const std::string f = format_or("text", {"text", "json"});
      if (kind_name.empty()) throw UsageError("bounds: --kind is required");
      auto kind = parse_bound_kind(kind_name);
      if (!kind) throw UsageError("bounds: unknown --kind '" + kind_name + "'");
      const auto r = reference_bound(*kind, bn, bdelta, bs);
      if (f == "json") {
        out << json{{"kind", std::string(to_string(r.kind))},
                    {"n", bn},
                    {"delta", bdelta},
                    {"s", bs},
                    {"value", big_to_json(r.value)},
                    {"regime", std::string(to_string(r.regime))}}
                   .dump()
            << "\n";
      } else {
        out << r.value.str() << " " << to_string(r.regime) << "\n";
      }
      return kOk;
    }

    if (closure->parsed()) {
      const std::string f = format_or("graph6", {"graph6", "dot", "json"});
      for (const Graph& g : read_graphs(in)) {
        const auto r = hc_closure(g, protect);
        if (f == "json") {
          json added = json::array();
          for (const auto& e : r.added_edges) added.push_back(edge_json(e));
          out << json{{"graph6", encode_graph6(r.graph)}, {"added_edges", added}}.dump() << "\n";
        } else {
          emit_graph(r.graph, f);
        }
      }
      return kOk;
    }

    if (core->parsed()) {
      const std::string f = format_or("graph6", {"graph6", "dot", "json"});
      for (const Graph& g : read_graphs(in)) {
        const auto r = t_disintegration(g, t, first);
        if (f == "json") {
          json deleted = json::array();
          for (const auto& step : r.deleted) deleted.push_back({{"vertex", step.vertex}, {"degree", step.degree}});
          out << json{{"t", r.t},
                      {"deleted", deleted},
                      {"core_vertices", r.core_vertices},
                      {"core", encode_graph6(r.core)}}
                     .dump()
              << "\n";
        } else {
          emit_graph(r.core, f);
        }
      }
      return kOk;
    }

    if (check->parsed()) {
      const std::string f = format_or("text", {"text", "json"});
      const auto set = parse_set(set_text);
      if (test_name == "separator" && set.empty()) throw UsageError("check separator needs --set");
      int code = kOk;
      for (const Graph& g : read_graphs(in)) {
        Verdict v;
        if (test_name == "ore") v = ore_test(g);
        else if (test_name == "lick") v = lick_test(g);
        else if (test_name == "size") v = size_test(g);
        else v = separator_certificate(g, set);
        if (!v.certified()) code = kInconclusive;
        if (f == "json") {
          out << verdict_json(v).dump() << "\n";
        } else {
          out << to_string(v.outcome) << "\n";
        }
      }
      return code;
    }

    if (oracle->parsed()) {
      const std::string f = format_or(matrix ? "json" : "text", {"text", "json"});
      if (question == "ham-path" && (!pu || !pv)) throw UsageError("oracle ham-path needs --u and --v");
      int code = kOk;
      for (const Graph& g : read_graphs(in)) {
        json j;
        bool answer = false;
        if (question == "hc") {
          OracleOptions opts;
          opts.dp_cap = dp_cap;
          opts.threads = threads;
          opts.full_matrix = matrix;
          const auto r = hamiltonian_connected(g, opts);
          answer = r.is_hc;
          j = {{"is_hc", r.is_hc},
               {"failing_pair", r.failing_pair ? edge_json(*r.failing_pair) : json(nullptr)}};
          if (r.pair_matrix) j["pair_matrix"] = *r.pair_matrix;
        } else if (question == "ham-cycle") {
          answer = hamilton_cycle(g, dp_cap);
          j = {{"hamiltonian", answer}};
        } else {
          answer = hamilton_path(g, *pu, *pv, dp_cap);
          j = {{"u", *pu}, {"v", *pv}, {"path", answer}};
        }
        if (!answer) code = kNegative;
        if (f == "json") {
          out << j.dump() << "\n";
        } else {
          out << (answer ? "true" : "false") << "\n";
        }
      }
      return code;
    }

    if (exhaustive->parsed()) {
      format_or("json", {"json"});
      ExhaustiveOptions opts;
      opts.s = vs;
      const auto r = exhaustive_extremal(n, delta, opts);
      out << report_json(r).dump(2) << "\n";
      err << "n=" << r.n << " delta=" << r.delta << " s=" << r.s << ": observed max "
          << (r.observed_max ? std::to_string(*r.observed_max) : "none") << ", predicted "
          << r.predicted.str() << ", " << r.maximizer_classes.size() << " maximizer class(es), "
          << (r.matches_theorem ? "matches" : "DOES NOT match") << "\n";
      return r.matches_theorem ? kOk : kNegative;
    }

    if (sample->parsed()) {
      format_or("json", {"json"});
      SampleOptions opts;
      opts.threads = threads;
      opts.dp_cap = dp_cap;
      const auto r = sample_above_phi(n, delta, trials, seed, opts);
      out << sample_json(r).dump(2) << "\n";
      err << "n=" << r.n << " delta=" << r.delta << ": " << r.counterexamples
          << " counterexample(s) in " << r.trials << " trials (" << r.rejections
          << " rejected draws)\n";
      return r.counterexamples == 0 ? kOk : kNegative;
    }
  } catch (const UsageError& e) {
    err << "hamcon: " << e.what() << "\n";
    return kUsage;
  } catch (const RangeError& e) {
    err << "hamcon: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    err << "hamcon: malformed graph6: " << e.what() << "\n";
    return kDataError;
  } catch (const Error& e) {
    err << "hamcon: " << e.what() << "\n";
    return kDataError;
  }
  err << "hamcon: no command\n";
  return kUsage;
}

}  // namespace hamcon::cli
