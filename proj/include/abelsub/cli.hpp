#pragma once

// Command-line front end. run() is kept separate from main() so that tests can
// drive the command surface in-process.
//
// Exit codes: 0 success or pass, 1 property refuted, 2 configuration error,
// 3 resource cap reached. ABELSUB_STATE_CAP overrides the default cap on
// search states.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "abelsub/abelsub.hpp"

namespace abelsub::cli {

enum ExitCode { kOk = 0, kRefuted = 1, kConfig = 2, kResource = 3 };

inline std::size_t default_state_cap() {
  if (const char* env = std::getenv("ABELSUB_STATE_CAP")) {
    try {
      const long long v = std::stoll(env);
      if (v > 0) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
    throw ConfigError(std::string("ABELSUB_STATE_CAP must be a positive integer, got '") + env + "'");
  }
  return std::size_t{1} << 24;
}

namespace detail {

struct Args {
  std::string spec;
  std::size_t length = 0;
  std::string out_file;
  std::string what;
  std::size_t window = 0;
  std::size_t sample = 0;
  std::string format;
  std::string op;
  std::string alpha;
  std::string C;
  std::string mode = "upper";
  std::string lemma;
  std::uint64_t seed = 1;
  std::size_t depth = 3;
  bool json_errors = false;
};

inline void write_corridor(std::ostream& out, const CorridorProfile& p, const std::string& format) {
  if (format == "json") out << report::to_json(p).dump(2) << '\n';
  else out << report::corridor_tsv(p);
}

inline int analyze(const Args& a, std::ostream& out) {
  const InfiniteWordSpec w = InfiniteWordSpec::parse(a.spec);
  const std::size_t N = a.window;
  if (N == 0) throw ConfigError("--window must be positive");
  const std::size_t M = a.sample ? a.sample : default_sample(N);
  const bool json = a.format == "json";
  if (a.format == "dot" && !a.what.starts_with("rauzy:")) throw ConfigError("--format dot applies to rauzy graphs only");

  if (a.what == "corridor") {
    write_corridor(out, corridor_profile(w, N, M), a.format);
  } else if (a.what == "complexity" || a.what == "abelian-complexity") {
    const bool abelian = a.what == "abelian-complexity";
    const FiniteWord s = w.prefix(M);
    report::json rows = report::json::array();
    if (!json) out << "n\t" << (abelian ? "abelian" : "factors") << '\n';
    for (std::size_t n = 1; n <= N; ++n) {
      const std::size_t v = abelian ? abelian_complexity(s.view(), n) : factor_complexity(s.view(), n);
      if (json) rows.push_back({n, v});
      else out << n << '\t' << v << '\n';
    }
    if (json) {
      auto j = report::document(a.what);
      j["sample"] = M;
      j["rows"] = rows;
      out << j.dump(2) << '\n';
    }
  } else if (a.what == "balance") {
    const FiniteWord s = w.prefix(M);
    const long long b = balance_coefficient(s.view(), N);
    const auto up = shortest_unbalanced_pair(s.view(), N);
    if (json) {
      auto j = report::document("balance");
      j["window"] = N;
      j["sample"] = M;
      j["balance_coefficient"] = b;
      if (up) j["shortest_unbalanced_pair"] = {{"length", up->length}, {"middle", up->middle.str()}};
      else j["shortest_unbalanced_pair"] = nullptr;
      out << j.dump(2) << '\n';
    } else {
      out << "balance_coefficient\t" << b << '\n';
      out << "shortest_unbalanced_pair\t" << (up ? std::to_string(up->length) : "none") << '\n';
      if (up) out << "middle\t" << up->middle.str() << '\n';
    }
  } else if (a.what == "graph") {
    const WordGraph g = word_graph(w, N);
    if (json) {
      auto j = report::document("word-graph");
      j["g"] = g.g;
      out << j.dump(2) << '\n';
    } else {
      out << g.to_tsv();
    }
  } else if (a.what.starts_with("rauzy:")) {
    const auto orders = abelsub::detail::parse_int_list(std::string_view(a.what).substr(6));
    if (orders.size() != 1 || orders[0] < 0) throw ConfigError("rauzy order must be a single nonnegative integer");
    const RauzyGraph g = rauzy_graph(w, static_cast<std::size_t>(orders[0]), M);
    if (json) {
      out << report::to_json(g).dump(2) << '\n';
    } else if (a.format == "dot") {
      out << g.to_dot();
    } else {
      out << "from\tto\tfactor\n";
      for (const auto& e : g.edges)
        out << g.vertices[e.from].str() << '\t' << g.vertices[e.to].str() << '\t' << e.factor.str() << '\n';
    }
  } else if (a.what == "frequency") {
    const FrequencyBounds fb = frequency_bounds(corridor_profile(w, N, M));
    if (json) {
      out << report::to_json(fb).dump(2) << '\n';
    } else {
      out << "n\tlower\tupper\n";
      for (std::size_t n = 1; n < fb.upper.size(); ++n)
        out << n << '\t' << to_string(fb.lower[n]) << '\t' << to_string(fb.upper[n]) << '\n';
    }
  } else {
    throw ConfigError("unknown analysis '" + a.what + "'");
  }
  return kOk;
}

inline int transform(const Args& a, std::ostream& out) {
  const InfiniteWordSpec w = InfiniteWordSpec::parse(a.spec);
  const std::size_t n = a.length;
  FiniteWord result;
  if (a.op == "T") {
    result = traffic_T(w, n);
  } else if (a.op == "F") {
    result = traffic_F(w, n);
  } else if (a.op == "squeeze") {
    std::optional<Quadratic> alpha = a.alpha.empty() ? w.frequency() : std::optional(Slope::parse(a.alpha).value());
    if (!alpha) throw ConfigError("squeeze needs --alpha: the frequency of " + w.render() + " is not known exactly");
    if (a.C.empty()) throw ConfigError("squeeze needs --C");
    if (a.mode != "upper" && a.mode != "both") throw ConfigError("--mode must be upper or both");
    const SqueezeParams params{*alpha, parse_quadratic(a.C),
                               a.mode == "upper" ? SqueezeMode::upper : SqueezeMode::two_sided};
    result = squeeze(w, params, n);
  } else if (a.op.starts_with("morph:")) {
    result = apply_morphism(parse_morphism(a.op), w, n);
  } else if (a.op.starts_with("flip-family:")) {
    const auto* d = std::get_if<InfiniteWordSpec::Directive>(&w.kind());
    if (!d) throw ConfigError("flip-family needs a directive or fib spec, got " + w.render());
    auto [k, bits] = abelsub::detail::split_field(std::string_view(a.op).substr(12), "flip-family");
    const auto ks = abelsub::detail::parse_int_list(k);
    if (ks.size() != 1 || ks[0] < 1) throw ConfigError("flip-family level must be a positive integer");
    result = flipping_family(d->dir, static_cast<std::size_t>(ks[0]), std::string(bits), n);
  } else {
    throw ConfigError("unknown transform '" + a.op + "'");
  }
  out << result.str() << '\n';
  return kOk;
}

inline int verify(const Args& a, std::ostream& out) {
  SuiteOptions o;
  if (!a.spec.empty()) o.spec = InfiniteWordSpec::parse(a.spec);
  o.window = a.window ? a.window : 256;
  o.seed = a.seed;
  o.state_cap = default_state_cap();
  const SuiteResult r = run_suite(a.lemma, o);
  if (a.format == "json") {
    auto j = report::document("suite");
    j["id"] = r.id;
    j["result"] = r.passed ? "pass" : "fail";
    j["checks"] = r.checks;
    j["sound"] = r.sound;
    j["seed"] = o.seed;
    j["failures"] = r.failures;
    out << j.dump(2) << '\n';
  } else {
    out << r.id << ": " << (r.passed ? "pass" : "fail") << " (" << r.checks << " checks"
        << (r.sound ? "" : ", empirical references") << ")\n";
    for (const auto& f : r.failures) out << "  " << f << '\n';
  }
  return r.passed ? kOk : kRefuted;
}

inline int family(const Args& a, std::ostream& out) {
  FamilyOptions fo;
  fo.depth = a.depth;
  if (a.window) fo.window = a.window;
  const InfiniteWordSpec seed = a.spec == "default" ? default_family_seed() : InfiniteWordSpec::parse(a.spec);
  const FamilyResult fr = construct_family(seed, fo);
  std::optional<DistinctnessReport> dist;
  if (fr.stages.size() >= 2) dist = verify_distinct(fr.stages);
  const bool ok = !fr.failure && dist && dist->all_distinct;
  if (a.format == "json") {
    out << report::to_json(fr, dist ? &*dist : nullptr).dump(2) << '\n';
  } else {
    out << "seed\t" << fr.seed << (fr.seed_exchanged ? " (exchanged)" : "") << '\n';
    out << "n\tpair_length\tpair\tpsi\texchanged\tisolation_steps\n";
    for (const auto& s : fr.stages)
      out << s.index << '\t' << s.pair_length << '\t' << s.pair.x.str() << ',' << s.pair.y.str() << '\t'
          << s.psi.render() << '\t' << (s.exchanged ? "yes" : "no") << '\t' << s.isolation_steps << '\n';
    if (dist)
      for (const auto& p : dist->pairs) out << "x" << p.m << " vs x" << p.n << "\t" << to_string(p.verdict) << '\n';
    if (fr.failure) out << "failure\t" << *fr.failure << '\n';
  }
  return ok ? kOk : kRefuted;
}

inline int report_error(const Args& a, std::ostream& err, const std::string& category, const std::string& msg, int code) {
  if (a.json_errors) err << report::error_json(category, msg).dump() << '\n';
  else err << "abelsub: " << category << ": " << msg << '\n';
  return code;
}

}  // namespace detail

inline int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  detail::Args a;
  CLI::App app{"Abelian closures of binary words: generation, analysis, transforms and verification suites"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json-errors", a.json_errors, "Print errors as JSON on stderr");

  auto* gen = app.add_subcommand("gen", "Emit a prefix of an infinite word");
  gen->add_option("spec", a.spec, "Word spec")->required();
  gen->add_option("--length", a.length, "Number of letters")->required();
  gen->add_option("--out", a.out_file, "Write to a file instead of stdout");

  auto* an = app.add_subcommand("analyze", "Corridor, complexities, balance, graphs, frequency bounds");
  an->add_option("spec", a.spec, "Word spec")->required();
  an->add_option("--what", a.what, "corridor|complexity|abelian-complexity|balance|graph|rauzy:<n>|frequency")->required();
  an->add_option("--window", a.window, "Window length N")->required();
  an->add_option("--sample", a.sample, "Sample prefix length M (default 4N+64)");
  a.format = "tsv";
  an->add_option("--format", a.format, "tsv|json (dot for rauzy)")->check(CLI::IsMember({"tsv", "json", "dot"}));

  auto* tr = app.add_subcommand("transform", "Apply T, F, squeezing, a morphism or a flipping family");
  tr->add_option("spec", a.spec, "Word spec")->required();
  tr->add_option("--op", a.op, "T|F|squeeze|morph:<literal>|flip-family:<k>:<bits>")->required();
  tr->add_option("--alpha", a.alpha, "Slope for squeezing (default: the exact frequency of the spec)");
  tr->add_option("--C", a.C, "Squeeze offset, a field element >= 0");
  tr->add_option("--mode", a.mode, "upper|both");
  tr->add_option("--length", a.length, "Number of output letters")->required();

  auto* ve = app.add_subcommand("verify", "Run a named property suite");
  ve->add_option("lemma", a.lemma, "Lemma id")->required();
  ve->add_option("--spec", a.spec, "Word spec for suites that take one");
  ve->add_option("--window", a.window, "Window length (default 256)");
  ve->add_option("--seed", a.seed, "Seed for randomized suites");
  ve->add_option("--format", a.format, "text|json")->check(CLI::IsMember({"text", "json"}));

  auto* fa = app.add_subcommand("family", "Build the family x_0, x_1, ... and compare the stages");
  fa->add_option("seed", a.spec, "Seed word spec, or \"default\"")->required();
  fa->add_option("--depth", a.depth, "Last stage index");
  fa->add_option("--window", a.window, "Seed window length");
  fa->add_option("--format", a.format, "text|json")->check(CLI::IsMember({"text", "json"}));

  std::vector<std::string> rev(argv.rbegin(), argv.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    return detail::report_error(a, err, "config", e.what(), kConfig);
  }

  try {
    if (*gen) {
      const FiniteWord w = InfiniteWordSpec::parse(a.spec).prefix(a.length);
      if (a.out_file.empty()) {
        out << w.str() << '\n';
      } else {
        std::ofstream f(a.out_file);
        if (!f) throw ConfigError("cannot write " + a.out_file);
        f << w.str() << '\n';
      }
      return kOk;
    }
    if (*an) return detail::analyze(a, out);
    if (*tr) return detail::transform(a, out);
    if (*ve) return detail::verify(a, out);
    if (*fa) return detail::family(a, out);
  } catch (const ResourceError& e) {
    return detail::report_error(a, err, "resource", e.what(), kResource);
  } catch (const ConfigError& e) {
    return detail::report_error(a, err, "config", e.what(), kConfig);
  } catch (const DomainError& e) {
    return detail::report_error(a, err, "domain", e.what(), kConfig);
  } catch (const RangeError& e) {
    return detail::report_error(a, err, "range", e.what(), kConfig);
  } catch (const BoundaryError& e) {
    return detail::report_error(a, err, "boundary", e.what(), kConfig);
  }
  return kConfig;
}

}  // namespace abelsub::cli
