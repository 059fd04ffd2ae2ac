#include "mixcons/oracle.hpp"

#include <algorithm>
#include <sstream>

#include "mixcons/decomposition.hpp"
#include "mixcons/duality.hpp"
#include "mixcons/parser.hpp"
#include "mixcons/random.hpp"
#include "mixcons/semantics.hpp"

namespace mixcons::oracle {

const LogicStandard& Context::of(Logic logic) const {
  switch (logic) {
    case Logic::K3:
      return k3;
    case Logic::LP:
      return lp;
    case Logic::ST:
      return st;
    case Logic::TS:
      return ts;
  }
  throw std::logic_error("unknown logic");
}

Context Context::corrupted() {
  Context c;
  c.st.conclusion_designated = kStrict;
  return c;
}

bool Report::all_passed() const {
  return std::all_of(results.begin(), results.end(),
                     [](const PropertyResult& r) { return !r.failure; });
}

namespace {

using Outcome = std::optional<std::string>;

std::vector<Formula> members(const Inference& inf) {
  std::vector<Formula> out(inf.premises.begin(), inf.premises.end());
  out.insert(out.end(), inf.conclusions.begin(), inf.conclusions.end());
  return out;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

Outcome st_product(const Context& ctx, const Inference& inf) {
  const bool direct = valid(ctx.st, inf).holds;
  ProductOutcome outcome = st_connecting_formula(inf);
  if (outcome.succeeded() != direct)
    return "ST-valid: " + yes_no(direct) + ", connector found: " + yes_no(outcome.succeeded());
  if (outcome.succeeded() && !outcome.witness->verified())
    return "connector " + outcome.witness->connector.text() + " fails a component check";
  return {};
}

Outcome ts_sum(const Context& ctx, const Inference& inf) {
  const bool direct = valid(ctx.ts, inf).holds;
  SumDecision d = ts_sum_decision(inf);
  if (d.member != direct)
    return "TS-valid: " + yes_no(direct) + ", sum member: " + yes_no(d.member);
  if (const auto* r = std::get_if<SumRefutation>(&d.reason)) {
    if (satisfies(ctx.lp, r->left_fail, Inference{inf.premises, {r->pivot}}))
      return "left refutation " + r->left_fail.render() + " does not falsify LP";
    if (satisfies(ctx.k3, r->right_fail, Inference{{r->pivot}, inf.conclusions}))
      return "right refutation " + r->right_fail.render() + " does not falsify K3";
  }
  return {};
}

Outcome dnf_equivalence(const Context& ctx, const Inference& inf) {
  if (inf.premises.empty()) return {};
  const Formula d = k3_dnf(inf.premises);
  if (!valid(ctx.k3, Inference{inf.premises, {d}}).holds) return "premises do not K3-entail " + d.text();
  if (!valid(ctx.k3, Inference{{d}, {conjoin(inf.premises)}}).holds)
    return d.text() + " does not K3-entail the conjunction of the premises";
  return {};
}

Outcome strict_truth_witness(const Context&, const Inference& inf) {
  if (inf.premises.empty()) return {};
  for (const Valuation& v : enumerate_valuations(atoms_of_set(inf.premises))) {
    const bool strict = std::all_of(inf.premises.begin(), inf.premises.end(),
                                    [&](const Formula& g) { return eval(g, v) == TruthValue::One; });
    if (!strict) continue;
    const Formula c = gamma_v_conjunction(inf.premises, v);
    if (eval(c, v) != TruthValue::One) return c.text() + " is not 1 under " + v.render();
  }
  return {};
}

Outcome monotonicity(const Context&, const Inference& inf) {
  for (const Formula& f : members(inf)) {
    const AtomSet domain = atoms(f);
    const ValuationSpace space = enumerate_valuations(domain);
    for (const Valuation& v : space) {
      const TruthValue value = eval(f, v);
      if (!is_classical(value)) continue;
      for (const Valuation& sharp : space)
        if (is_partial_sharpening(sharp, v, domain) && eval(f, sharp) != value)
          return f.text() + " changes value from " + v.render() + " to " + sharp.render();
    }
  }
  return {};
}

Outcome sharpening_closure(const Context&, const Inference& inf) {
  const AtomSet sigma = atoms_of_set(inf.premises);
  const AtomSet theta = atoms_of_set(inf.conclusions);
  AtomSet both = sigma;
  both.insert(theta.begin(), theta.end());
  const ValuationSpace space = enumerate_valuations(both);
  std::vector<AtomSet> subsets;
  for (const auto& a : sigma) subsets.push_back(AtomSet{a});
  subsets.push_back({});
  for (const Valuation& v : space)
    for (const Valuation& w : space) {
      const bool on_sigma = is_partial_sharpening(w, v, sigma);
      const bool on_theta = is_partial_sharpening(w, v, theta);
      if (on_sigma)
        for (const auto& sub : subsets)
          if (!is_partial_sharpening(w, v, sub))
            return "sharpening not inherited by a subset: " + w.render() + " of " + v.render();
      if (on_sigma && on_theta && !is_partial_sharpening(w, v, both))
        return "sharpening not closed under union: " + w.render() + " of " + v.render();
    }
  return {};
}

Outcome half_maximality(const Context&, const Inference& inf) {
  const Valuation half = all_half_valuation();
  for (const Formula& f : members(inf)) {
    bool some_nonzero = false, some_nonone = false;
    for (const Valuation& v : enumerate_valuations(atoms(f))) {
      const TruthValue value = eval(f, v);
      some_nonzero = some_nonzero || value != TruthValue::Zero;
      some_nonone = some_nonone || value != TruthValue::One;
    }
    const TruthValue at_half = eval(f, half);
    if (some_nonzero && at_half == TruthValue::Zero) return f.text() + " is 0 at all-1/2";
    if (some_nonone && at_half == TruthValue::One) return f.text() + " is 1 at all-1/2";
  }
  return {};
}

Outcome dual_valuations(const Context&, const Inference& inf) {
  for (const Formula& f : members(inf)) {
    const Formula dual = op_dual(f);
    for (const Valuation& v : enumerate_valuations(atoms(f))) {
      const TruthValue a = eval(f, v);
      const TruthValue b = eval(dual, dual_valuation(v));
      if ((a == TruthValue::Zero) != (b == TruthValue::One) ||
          (a == TruthValue::One) != (b == TruthValue::Zero))
        return f.text() + " and its dual disagree under " + v.render();
    }
  }
  return {};
}

Outcome lattice(const Context& ctx, const Inference& inf) {
  const bool k3 = valid(ctx.k3, inf).holds, lp = valid(ctx.lp, inf).holds;
  const bool st = valid(ctx.st, inf).holds, ts = valid(ctx.ts, inf).holds;
  if (ts && !k3) return std::string("TS-valid but not K3-valid");
  if (ts && !lp) return std::string("TS-valid but not LP-valid");
  if (k3 && !st) return std::string("K3-valid but not ST-valid");
  if (lp && !st) return std::string("LP-valid but not ST-valid");
  return {};
}

Outcome structural_duality(const Context& ctx, const Inference& inf) {
  const Inference inverse = invert(inf);
  const std::pair<Logic, Logic> pairs[] = {
      {Logic::ST, Logic::TS}, {Logic::TS, Logic::ST}, {Logic::K3, Logic::K3}, {Logic::LP, Logic::LP}};
  for (auto [l1, l2] : pairs)
    if (valid(ctx.of(l1), inf).holds != antivalid(ctx.of(l2), inverse).holds)
      return std::string(to_string(l1)) + "-validity differs from " + std::string(to_string(l2)) +
             "-antivalidity of the inverse";
  return {};
}

Outcome operational_duality(const Context& ctx, const Inference& inf) {
  const Inference dual = op_dual_inference(inf);
  if (valid(ctx.k3, inf).holds != valid(ctx.lp, dual).holds)
    return "K3 and LP of the operational dual disagree: " + dual.text();
  if (valid(ctx.lp, inf).holds != valid(ctx.k3, dual).holds)
    return "LP and K3 of the operational dual disagree: " + dual.text();
  if (valid(ctx.st, inf).holds != valid(ctx.st, dual).holds)
    return "ST not self-dual on " + dual.text();
  if (valid(ctx.ts, inf).holds != valid(ctx.ts, dual).holds)
    return "TS not self-dual on " + dual.text();
  return {};
}

Outcome negation_duality(const Context& ctx, const Inference& inf) {
  const Inference by_op = op_dual_pointwise(inf);
  const Inference by_neg = negate_pointwise(inf);
  for (Logic l : kAllLogics)
    if (valid(ctx.of(l), by_op).holds != valid(ctx.of(l), by_neg).holds)
      return std::string(to_string(l)) + " separates " + by_op.text() + " and " + by_neg.text();
  const Inference flipped = neg_dual_inference(inf);
  if (valid(ctx.st, inf).holds != valid(ctx.st, flipped).holds)
    return "ST not negation self-dual on " + flipped.text();
  if (valid(ctx.ts, inf).holds != valid(ctx.ts, flipped).holds)
    return "TS not negation self-dual on " + flipped.text();
  if (valid(ctx.k3, inf).holds != valid(ctx.lp, flipped).holds)
    return "K3 and LP not negation dual on " + flipped.text();
  return {};
}

bool direct_in(const Context& ctx, InferenceSet set, const Inference& inf) {
  switch (set) {
    case InferenceSet::K3Plus:
      return valid(ctx.k3, inf).holds;
    case InferenceSet::LPPlus:
      return valid(ctx.lp, inf).holds;
    case InferenceSet::STPlus:
      return valid(ctx.st, inf).holds;
    case InferenceSet::TSPlus:
      return valid(ctx.ts, inf).holds;
    case InferenceSet::K3Minus:
      return antivalid(ctx.k3, inf).holds;
    case InferenceSet::LPMinus:
      return antivalid(ctx.lp, inf).holds;
    case InferenceSet::STMinus:
      return antivalid(ctx.st, inf).holds;
    case InferenceSet::TSMinus:
      return antivalid(ctx.ts, inf).holds;
  }
  return false;
}

Outcome routes(const Context& ctx, const Inference& inf) {
  for (std::string_view route : route_names()) {
    const InferenceSet target = *route_target(route);
    if (dual_set_membership(target, inf, route) != direct_in(ctx, target, inf))
      return "route " + std::string(route) + " disagrees with direct membership";
  }
  return {};
}

Outcome lambda_products(const Context& ctx, const Inference& inf) {
  if (contains_lambda(inf)) {
    ProductWitness w = lp_k3_product_universal_witness(inf);
    if (!w.verified()) return std::string("universal L witness fails a component check");
    return {};
  }
  ProductOutcome lpk3 = lp_k3_connector_lambda_free(inf);
  const bool st = valid(ctx.st, inf).holds;
  if (lpk3.succeeded() != st)
    return "ST-valid: " + yes_no(st) + ", LP|K3 connector found: " + yes_no(lpk3.succeeded());
  if (lpk3.succeeded() && !lpk3.witness->verified())
    return "LP|K3 connector " + lpk3.witness->connector.text() + " fails a component check";
  return {};
}

Outcome sum_identities(const Context& ctx, const Inference& inf) {
  const bool k3_lp = sum_equals_antitheorems_plus_theorems(Logic::K3, Logic::LP, inf);
  const bool st_parts = is_antitheorem(ctx.st, inf.premises) || is_theorem(ctx.st, inf.conclusions);
  if (k3_lp != st_parts) return std::string("K3+ dagger LP+ differs from ST antitheorems and theorems");
  const bool lp_k3 = sum_equals_antitheorems_plus_theorems(Logic::LP, Logic::K3, inf);
  if (lp_k3 != valid(ctx.ts, inf).holds) return std::string("LP+ dagger K3+ differs from TS+");
  return {};
}

Outcome countermodels(const Context& ctx, const Inference& inf) {
  for (Logic l : kAllLogics) {
    const LogicStandard& s = ctx.of(l);
    Verdict v = valid(s, inf);
    if (v.holds == v.countermodel.has_value()) return std::string("verdict shape broken");
    if (v.countermodel && satisfies(s, *v.countermodel, inf))
      return std::string(to_string(l)) + " countermodel " + v.countermodel->render() + " satisfies";
    Verdict a = antivalid(s, inf);
    if (a.countermodel && antisatisfies(s, *a.countermodel, inf))
      return std::string(to_string(l)) + " anti-witness " + a.countermodel->render() +
             " antisatisfies";
  }
  return {};
}

Outcome locality(const Context& ctx, const Inference& inf) {
  AtomSet wider = inf.atoms();
  wider.insert(fresh_variable(wider));
  for (Logic l : kAllLogics)
    if (valid(ctx.of(l), inf).holds != valid_over(ctx.of(l), inf, wider).holds)
      return std::string(to_string(l)) + "-validity depends on an extra variable";
  return {};
}

Outcome st_classical(const Context& ctx, const Inference& inf) {
  if (contains_lambda(inf)) return {};
  if (valid(ctx.st, inf).holds != classically_valid(inf).holds)
    return std::string("ST-validity differs from classical validity");
  return {};
}

Outcome minus_decisions(const Context& ctx, const Inference& inf) {
  if (st_minus_sum_decision(inf) != antivalid(ctx.st, inf).holds)
    return std::string("ST- sum decision differs from ST-antivalidity");
  TsMinusDecision d = ts_minus_product_decision(inf);
  if (d.member != antivalid(ctx.ts, inf).holds)
    return std::string("TS- product decision differs from TS-antivalidity");
  if (d.member && !(d.lp_anti_check->holds && d.k3_anti_check->holds))
    return "TS- connector " + d.connector->text() + " fails an antivalidity check";
  return {};
}

Outcome antitheorem_facts(const Context& ctx, const Inference& inf) {
  for (Logic l : kAllLogics) {
    if (!antitheorem_equivalences_hold(ctx.of(l), inf.premises))
      return "antitheorem characterizations disagree in " + std::string(to_string(l));
    if (!theorem_equivalences_hold(ctx.of(l), inf.conclusions))
      return "theorem characterizations disagree in " + std::string(to_string(l));
  }
  return {};
}

Outcome interpolation(const Context&, const Inference& inf) {
  const Formula phi = conjoin(inf.premises);
  const Formula psi = disjoin(std::vector<Formula>(inf.conclusions.begin(), inf.conclusions.end()));
  auto result = milne_interpolant(phi, psi);
  const auto* found = std::get_if<Interpolant>(&result);
  if (!found) return {};
  if (!found->k3_check.holds || !found->lp_check.holds)
    return "interpolant " + found->formula.text() + " fails a component check";
  const AtomSet left = atoms(phi), right = atoms(psi);
  for (const auto& a : atoms(found->formula))
    if (!left.contains(a) || !right.contains(a))
      return "interpolant " + found->formula.text() + " uses unshared atom " + a.text();
  return {};
}

Outcome involutions(const Context&, const Inference& inf) {
  for (const Formula& f : members(inf))
    if (op_dual(op_dual(f)) != f) return "op_dual not involutive on " + f.text();
  if (op_dual_inference(op_dual_inference(inf)) != inf) return std::string("dual inference not involutive");
  if (invert(invert(inf)) != inf) return std::string("invert not involutive");
  if (op_dual_inference(invert(inf)) != invert(op_dual_inference(inf)))
    return std::string("operational dual does not commute with inversion");
  if (invert(op_dual_pointwise(inf)) != op_dual_pointwise(invert(inf)))
    return std::string("pointwise dual does not commute with inversion");
  return {};
}

Outcome round_trip(const Context&, const Inference& inf) {
  for (const Formula& f : members(inf))
    if (parse_formula(print_formula(f)) != f) return "round trip changes " + f.text();
  if (parse_sequent(inf.text()) != inf) return "sequent round trip changes " + inf.text();
  return {};
}

}  // namespace

const std::vector<Property>& properties() {
  static const std::vector<Property> all = {
      {"st-product", st_product},
      {"ts-sum", ts_sum},
      {"dnf-equivalence", dnf_equivalence},
      {"strict-truth-witness", strict_truth_witness},
      {"monotonicity", monotonicity},
      {"sharpening-closure", sharpening_closure},
      {"half-maximality", half_maximality},
      {"dual-valuation", dual_valuations},
      {"lattice", lattice},
      {"structural-duality", structural_duality},
      {"operational-duality", operational_duality},
      {"negation-duality", negation_duality},
      {"routes", routes},
      {"lpk3-product", lambda_products},
      {"sum-identities", sum_identities},
      {"countermodels", countermodels},
      {"locality", locality},
      {"st-classical", st_classical},
      {"minus-decisions", minus_decisions},
      {"antitheorem-facts", antitheorem_facts},
      {"interpolation", interpolation},
      {"involutions", involutions},
      {"round-trip", round_trip},
  };
  return all;
}

namespace {

void formula_shrinks(const Formula& f, std::vector<Formula>& out) {
  switch (f.kind()) {
    case Kind::Not: {
      out.push_back(f.sub());
      std::vector<Formula> inner;
      formula_shrinks(f.sub(), inner);
      for (auto& s : inner) out.push_back(Formula::negation(s));
      break;
    }
    case Kind::And:
    case Kind::Or: {
      out.push_back(f.left());
      out.push_back(f.right());
      const bool is_and = f.kind() == Kind::And;
      auto rebuild = [&](const Formula& l, const Formula& r) {
        return is_and ? Formula::conj(l, r) : Formula::disj(l, r);
      };
      std::vector<Formula> lefts, rights;
      formula_shrinks(f.left(), lefts);
      formula_shrinks(f.right(), rights);
      for (auto& l : lefts) out.push_back(rebuild(l, f.right()));
      for (auto& r : rights) out.push_back(rebuild(f.left(), r));
      break;
    }
    default:
      break;
  }
}

void side_shrinks(const FormulaSet& side, const std::function<void(FormulaSet)>& emit) {
  for (const auto& f : side) {
    FormulaSet without = side;
    without.erase(f);
    emit(without);
  }
  for (const auto& f : side) {
    std::vector<Formula> smaller;
    formula_shrinks(f, smaller);
    for (const auto& s : smaller) {
      FormulaSet replaced = side;
      replaced.erase(f);
      replaced.insert(s);
      emit(replaced);
    }
  }
}

std::uint64_t mix(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

std::vector<Inference> shrink_candidates(const Inference& inf) {
  std::vector<Inference> out;
  side_shrinks(inf.premises, [&](FormulaSet s) { out.push_back(Inference{std::move(s), inf.conclusions}); });
  side_shrinks(inf.conclusions, [&](FormulaSet s) { out.push_back(Inference{inf.premises, std::move(s)}); });
  return out;
}

PropertyResult run_property(const Property& property, const Context& context,
                            const Options& options, std::uint64_t seed) {
  GeneratorOptions gen;
  gen.max_vars = options.max_vars;
  gen.max_depth = options.max_depth;
  FormulaGenerator generator(gen, seed);

  PropertyResult result{property.name, 0, std::nullopt, std::nullopt};
  auto failure_of = [&](const Inference& inf) -> Outcome {
    try {
      return property.check(context, inf);
    } catch (const std::exception& e) {
      return std::string("exception: ") + e.what();
    }
  };

  for (int i = 0; i < options.samples; ++i) {
    Inference inf = generator.inference();
    ++result.checked;
    Outcome failure = failure_of(inf);
    if (!failure) continue;

    bool progress = true;
    while (progress) {
      progress = false;
      for (const Inference& candidate : shrink_candidates(inf)) {
        if (Outcome smaller = failure_of(candidate)) {
          inf = candidate;
          failure = std::move(smaller);
          progress = true;
          break;
        }
      }
    }
    result.failure = std::move(failure);
    result.minimized = std::move(inf);
    break;
  }
  return result;
}

Report run(const Options& options) {
  const Context context = options.corrupt_standard ? Context::corrupted() : Context{};
  Report report;
  const auto& all = properties();
  for (std::size_t i = 0; i < all.size(); ++i)
    report.results.push_back(run_property(all[i], context, options, mix(options.seed, i)));
  return report;
}

}  // namespace mixcons::oracle
