#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <optional>
#include <string>

#include "mixcons/consequence.hpp"
#include "mixcons/decomposition.hpp"
#include "mixcons/duality.hpp"
#include "mixcons/oracle.hpp"
#include "mixcons/parser.hpp"
#include "mixcons/report.hpp"
#include "mixcons/semantics.hpp"

namespace mixcons::cli {
namespace {

using report::json;

struct Streams {
  std::ostream& out;
  std::ostream& err;
  bool as_json = false;
};

// Raised inside a verb to abort with a usage-level diagnostic.
struct UsageError {
  std::string message;
};

void print_parse_error(std::ostream& err, std::string_view input, const ParseError& e) {
  err << "error: " << e.what() << '\n';
  err << "  " << input << '\n';
  err << "  " << std::string(e.column() > 0 ? e.column() - 1 : 0, ' ') << "^\n";
}

std::string verdict_word(bool holds, bool anti) {
  if (anti) return holds ? "ANTIVALID" : "NOT-ANTIVALID";
  return holds ? "VALID" : "INVALID";
}

int cmd_check(Streams& io, const std::string& logic_name, bool anti, const std::string& text) {
  const Logic logic = *parse_logic(logic_name);
  const Inference inf = parse_sequent(text);
  const Verdict v = anti ? antivalid(logic, inf) : valid(logic, inf);
  if (io.as_json) {
    io.out << report::verdict(logic, inf, v, anti).dump() << '\n';
  } else {
    io.out << verdict_word(v.holds, anti) << '\n';
    if (v.countermodel) io.out << "countermodel: " << v.countermodel->render() << '\n';
  }
  return v.holds ? kSuccess : kNegative;
}

void print_check(std::ostream& out, Logic logic, const Inference& inf, const Verdict& v) {
  out << "check " << to_string(logic) << ": " << inf.text() << "  " << verdict_word(v.holds, false)
      << '\n';
}

int print_product(Streams& io, const Inference& inf, const ProductOutcome& outcome, bool lpk3) {
  if (io.as_json) {
    io.out << (lpk3 ? report::lpk3_product(inf, outcome) : report::st_product(inf, outcome)).dump()
           << '\n';
    return outcome.succeeded() ? kSuccess : kNegative;
  }
  if (!outcome.succeeded()) {
    io.out << "NOT-MEMBER\n";
    if (outcome.countermodel) io.out << "countermodel: " << outcome.countermodel->render() << '\n';
    return kNegative;
  }
  const ProductWitness& w = *outcome.witness;
  io.out << "MEMBER\nconnector: " << w.connector.text() << '\n';
  io.out << "atom-sharing: " << (is_atom_sharing(w.connector, inf) ? "yes" : "no") << '\n';
  print_check(io.out, w.left_logic, Inference{inf.premises, {w.connector}}, w.left_check);
  print_check(io.out, w.right_logic, Inference{{w.connector}, inf.conclusions}, w.right_check);
  return kSuccess;
}

int print_sum(Streams& io, const Inference& inf, const SumDecision& d) {
  if (io.as_json) {
    io.out << report::ts_sum(inf, d).dump() << '\n';
    return d.member ? kSuccess : kNegative;
  }
  if (const auto* p = std::get_if<AlwaysFalsePremise>(&d.reason)) {
    io.out << "MEMBER\nreason: premise " << p->premise.text() << " is 0 under every valuation\n";
  } else if (const auto* c = std::get_if<AlwaysTrueConclusion>(&d.reason)) {
    io.out << "MEMBER\nreason: conclusion " << c->conclusion.text()
           << " is 1 under every valuation\n";
  } else {
    const auto& r = std::get<SumRefutation>(d.reason);
    io.out << "NOT-MEMBER\npivot: " << r.pivot.text() << '\n';
    io.out << "LP fails " << Inference{inf.premises, {r.pivot}}.text() << " at "
           << r.left_fail.render() << '\n';
    io.out << "K3 fails " << Inference{{r.pivot}, inf.conclusions}.text() << " at "
           << r.right_fail.render() << '\n';
  }
  return d.member ? kSuccess : kNegative;
}

int cmd_decompose(Streams& io, const std::string& mode, const std::string& text) {
  const Inference inf = parse_sequent(text);
  if (mode == "st-product") return print_product(io, inf, st_connecting_formula(inf), false);
  if (mode == "ts-sum") return print_sum(io, inf, ts_sum_decision(inf));
  if (contains_lambda(inf))
    throw UsageError{
        "lpk3-product accepts only lambda-free sequents\n"
        "hint: with L in the language every inference is in LP+ | K3+, since L itself "
        "connects any premises to any conclusions"};
  return print_product(io, inf, lp_k3_connector_lambda_free(inf), true);
}

int cmd_dualize(Streams& io, const std::string& map, const std::string& text) {
  std::string result;
  if (looks_like_sequent(text)) {
    const Inference inf = parse_sequent(text);
    if (map == "op")
      result = op_dual_inference(inf).text();
    else if (map == "neg")
      result = neg_dual_inference(inf).text();
    else
      result = invert(inf).text();
  } else {
    const Formula f = parse_formula(text);
    if (map == "op")
      result = op_dual(f).text();
    else if (map == "neg")
      result = Formula::negation(f).text();
    else
      throw UsageError{"--map invert applies to sequents only"};
  }
  if (io.as_json)
    io.out << json{{"map", map}, {"input", text}, {"output", result}}.dump() << '\n';
  else
    io.out << result << '\n';
  return kSuccess;
}

int cmd_interpolate(Streams& io, const std::string& text) {
  const Inference inf = parse_sequent(text);
  if (inf.premises.size() != 1 || inf.conclusions.size() != 1)
    throw UsageError{"interpolate expects exactly one premise and one conclusion"};
  const Formula& premise = *inf.premises.begin();
  const Formula& conclusion = *inf.conclusions.begin();
  const auto result = milne_interpolant(premise, conclusion);
  if (io.as_json) {
    io.out << report::milne(premise, conclusion, result).dump() << '\n';
  } else if (const auto* i = std::get_if<Interpolant>(&result)) {
    io.out << "INTERPOLANT\nconnector: " << i->formula.text() << '\n';
    print_check(io.out, Logic::K3, Inference{{premise}, {i->formula}}, i->k3_check);
    print_check(io.out, Logic::LP, Inference{{i->formula}, {conclusion}}, i->lp_check);
  } else {
    io.out << "NO-INTERPOLANT\nreason: " << to_string(std::get<InterpolationFailure>(result))
           << '\n';
  }
  return std::holds_alternative<Interpolant>(result) ? kSuccess : kNegative;
}

int cmd_truthtable(Streams& io, const std::string& text, int cap) {
  const Formula f = parse_formula(text);
  const AtomSet domain = atoms(f);
  const std::vector<std::string> vars = variables(domain);
  if (static_cast<int>(vars.size()) > cap)
    throw UsageError{"formula has " + std::to_string(vars.size()) +
                     " variables, more than the truth table cap of " + std::to_string(cap) +
                     " (raise it with --max-vars)"};
  if (!io.as_json) {
    for (const auto& name : vars) io.out << name << ' ';
    io.out << "| " << f.text() << '\n';
  }
  for (const Valuation& v : enumerate_valuations(domain)) {
    const TruthValue value = eval(f, v);
    if (io.as_json) {
      io.out << json{{"valuation", report::valuation(v)}, {"value", std::string(to_string(value))}}
                    .dump()
             << '\n';
      continue;
    }
    for (const auto& name : vars) io.out << to_string(*v.lookup(name)) << ' ';
    io.out << "| " << to_string(value) << '\n';
  }
  return kSuccess;
}

int cmd_oracle(Streams& io, oracle::Options options, std::optional<std::uint64_t> seed) {
  if (options.max_vars < 1 || options.max_depth < 1 || options.samples < 1)
    throw UsageError{"--max-vars and --max-depth must be positive and --samples at least 1"};
  if (seed) {
    options.seed = *seed;
  } else if (const char* env = std::getenv("MIXCONS_SEED")) {
    try {
      options.seed = std::stoull(env);
    } catch (const std::exception&) {
      throw UsageError{"MIXCONS_SEED is not a non-negative integer"};
    }
  }
  const oracle::Report report = oracle::run(options);
  int passed = 0;
  for (const auto& r : report.results) {
    if (!r.failure) ++passed;
    if (io.as_json) {
      io.out << json{{"property", r.name},
                     {"checked", r.checked},
                     {"passed", !r.failure},
                     {"failure", r.failure ? json(*r.failure) : json(nullptr)},
                     {"minimized", r.minimized ? json(r.minimized->text()) : json(nullptr)}}
                    .dump()
             << '\n';
    } else if (r.failure) {
      io.out << "FAIL " << r.name << ": " << *r.failure << '\n'
             << "  minimized: " << r.minimized->text() << '\n';
    } else {
      io.out << "PASS " << r.name << " (" << r.checked << " checked)\n";
    }
  }
  const int total = static_cast<int>(report.results.size());
  if (io.as_json)
    io.out << json{{"seed", options.seed}, {"passed", passed}, {"total", total}}.dump() << '\n';
  else
    io.out << passed << '/' << total << " properties passed (seed " << options.seed << ")\n";
  return report.all_passed() ? kSuccess : kNegative;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Mixed-consequence toolkit over strong Kleene logic", "mixcons"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "Emit one JSON object per line");

  auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", as_json, "Emit JSON"); };
  std::string input;

  std::string logic_name = "st";
  bool anti = false;
  auto* check = app.add_subcommand("check", "Decide validity or antivalidity of a sequent");
  check->add_option("--logic", logic_name, "k3, lp, st or ts")
      ->check(CLI::IsMember({"k3", "lp", "st", "ts"}, CLI::ignore_case));
  check->add_flag("--anti", anti, "Check antivalidity instead");
  check->add_option("sequent", input)->required();
  add_json(check);

  std::string mode = "st-product";
  auto* decompose = app.add_subcommand("decompose", "Split a sequent as a product or sum");
  decompose->add_option("--mode", mode)->check(
      CLI::IsMember({"st-product", "ts-sum", "lpk3-product"}));
  decompose->add_option("sequent", input)->required();
  add_json(decompose);

  std::string map = "op";
  auto* dualize = app.add_subcommand("dualize", "Apply a duality map to a formula or sequent");
  dualize->add_option("--map", map)->check(CLI::IsMember({"op", "neg", "invert"}));
  dualize->add_option("input", input)->required();
  add_json(dualize);

  auto* interpolate =
      app.add_subcommand("interpolate", "Atom-sharing connector for a one-to-one sequent");
  interpolate->add_option("sequent", input)->required();
  add_json(interpolate);

  int cap = 6;
  auto* truthtable = app.add_subcommand("truthtable", "Print the strong Kleene truth table");
  truthtable->add_option("--max-vars", cap, "Largest number of variables accepted");
  truthtable->add_option("formula", input)->required();
  add_json(truthtable);

  oracle::Options options;
  std::optional<std::uint64_t> seed;
  auto* oracle_cmd = app.add_subcommand("oracle", "Run the randomized property suites");
  oracle_cmd->add_option("--max-vars", options.max_vars);
  oracle_cmd->add_option("--max-depth", options.max_depth);
  oracle_cmd->add_option("--samples", options.samples);
  oracle_cmd->add_option("--seed", seed, "Defaults to MIXCONS_SEED, then 1");
  oracle_cmd->add_flag("--corrupt-standard", options.corrupt_standard)->group("");
  add_json(oracle_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  Streams io{out, err, as_json};
  try {
    if (check->parsed()) return cmd_check(io, logic_name, anti, input);
    if (decompose->parsed()) return cmd_decompose(io, mode, input);
    if (dualize->parsed()) return cmd_dualize(io, map, input);
    if (interpolate->parsed()) return cmd_interpolate(io, input);
    if (truthtable->parsed()) return cmd_truthtable(io, input, cap);
    return cmd_oracle(io, options, seed);
  } catch (const ParseError& e) {
    print_parse_error(err, input, e);
  } catch (const UsageError& e) {
    err << "error: " << e.message << '\n';
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
  }
  return kUsageError;
}

}  // namespace mixcons::cli
