#include "mixcons/decomposition.hpp"

#include <algorithm>
#include <functional>
#include <vector>

namespace mixcons {

namespace {

bool all_strictly_true(const FormulaSet& formulas, const Valuation& v) {
  return std::all_of(formulas.begin(), formulas.end(),
                     [&](const Formula& f) { return eval(f, v) == TruthValue::One; });
}

std::vector<Formula> literals(const AtomSet& over, const Valuation& v) {
  std::vector<Formula> out;
  for (const auto& a : over) {
    TruthValue value = v.value_of(a);
    if (value == TruthValue::One) out.push_back(a.to_formula());
    if (value == TruthValue::Zero) out.push_back(Formula::negation(a.to_formula()));
  }
  return out;
}

// Disjunction over strictly satisfying valuations of the literal conjunction
// restricted to `keep`. Duplicates keep their first position.
Formula restricted_dnf(const FormulaSet& premises, const AtomSet& keep) {
  std::vector<Formula> disjuncts;
  for (const Valuation& v : enumerate_valuations(atoms_of_set(premises))) {
    if (!all_strictly_true(premises, v)) continue;
    Formula conjunct = conjoin(literals(keep, v));
    if (std::find(disjuncts.begin(), disjuncts.end(), conjunct) == disjuncts.end())
      disjuncts.push_back(std::move(conjunct));
  }
  return disjoin(disjuncts);
}

Inference swapped(const Inference& inf) { return Inference{inf.conclusions, inf.premises}; }

}  // namespace

Formula gamma_v_conjunction(const FormulaSet& premises, const Valuation& v) {
  if (premises.empty()) throw PreconditionError("gamma_v_conjunction needs a nonempty premise set");
  if (!all_strictly_true(premises, v))
    throw PreconditionError("some premise is not strictly true under " + v.render());
  return conjoin(literals(atoms_of_set(premises), v));
}

Formula k3_dnf(const FormulaSet& premises) {
  if (premises.empty()) throw PreconditionError("k3_dnf needs a nonempty premise set");
  return restricted_dnf(premises, atoms_of_set(premises));
}

ProductOutcome st_connecting_formula(const Inference& inf) {
  Verdict st = valid(Logic::ST, inf);
  if (!st.holds) return ProductOutcome{std::nullopt, st.countermodel};

  Formula connector = inf.premises.empty() ? Formula::top() : k3_dnf(inf.premises);
  ProductWitness witness{connector,
                         Logic::K3,
                         Logic::LP,
                         valid(Logic::K3, Inference{inf.premises, {connector}}),
                         valid(Logic::LP, Inference{{connector}, inf.conclusions})};
  return ProductOutcome{std::move(witness), std::nullopt};
}

SumDecision ts_sum_decision(const Inference& inf) {
  Verdict ts = valid(Logic::TS, inf);
  if (ts.holds) {
    for (const auto& g : inf.premises)
      if (constant_valued(g) == TruthValue::Zero) return SumDecision{true, AlwaysFalsePremise{g}};
    for (const auto& d : inf.conclusions)
      if (constant_valued(d) == TruthValue::One) return SumDecision{true, AlwaysTrueConclusion{d}};
    throw std::logic_error("TS-valid inference without a constant premise or conclusion: " +
                           inf.text());
  }

  const Atom pivot = fresh_variable(inf.atoms());
  const Valuation& base = *ts.countermodel;
  SumRefutation refutation{pivot.to_formula(), base.with(pivot.name, TruthValue::Zero),
                           base.with(pivot.name, TruthValue::One)};
  return SumDecision{false, std::move(refutation)};
}

ProductOutcome lp_k3_connector_lambda_free(const Inference& inf) {
  if (contains_lambda(inf)) throw LambdaPresent();
  Verdict st = valid(Logic::ST, inf);
  if (!st.holds) return ProductOutcome{std::nullopt, st.countermodel};

  Formula connector = Formula::bot();
  if (!is_antitheorem(Logic::LP, inf.premises)) {
    if (is_theorem(Logic::K3, inf.conclusions)) {
      connector = Formula::top();
    } else {
      std::vector<Formula> parts(inf.premises.begin(), inf.premises.end());
      for (const auto& a : atoms_of_set(inf.conclusions)) {
        Formula atom = a.to_formula();
        parts.push_back(Formula::disj(atom, Formula::negation(atom)));
      }
      connector = conjoin(parts);
    }
  }
  ProductWitness witness{connector,
                         Logic::LP,
                         Logic::K3,
                         valid(Logic::LP, Inference{inf.premises, {connector}}),
                         valid(Logic::K3, Inference{{connector}, inf.conclusions})};
  return ProductOutcome{std::move(witness), std::nullopt};
}

ProductWitness lp_k3_product_universal_witness(const Inference& inf) {
  const Formula connector = Formula::lambda();
  return ProductWitness{connector, Logic::LP, Logic::K3,
                        valid(Logic::LP, Inference{inf.premises, {connector}}),
                        valid(Logic::K3, Inference{{connector}, inf.conclusions})};
}

std::string_view to_string(InterpolationFailure failure) {
  switch (failure) {
    case InterpolationFailure::LambdaPresent:
      return "lambda present";
    case InterpolationFailure::NotClassicallyValid:
      return "inference is not classically valid";
    case InterpolationFailure::PremiseContradiction:
      return "premise is a classical contradiction";
    case InterpolationFailure::ConclusionTautology:
      return "conclusion is a classical tautology";
  }
  return "?";
}

std::variant<Interpolant, InterpolationFailure> milne_interpolant(const Formula& premise,
                                                                  const Formula& conclusion) {
  if (contains_lambda(premise) || contains_lambda(conclusion))
    return InterpolationFailure::LambdaPresent;
  if (!classically_valid(Inference{{premise}, {conclusion}}).holds)
    return InterpolationFailure::NotClassicallyValid;
  if (classically_valid(Inference{{premise}, {}}).holds)
    return InterpolationFailure::PremiseContradiction;
  if (classically_valid(Inference{{}, {conclusion}}).holds)
    return InterpolationFailure::ConclusionTautology;

  AtomSet shared;
  const AtomSet right = atoms(conclusion);
  for (const auto& a : atoms(premise))
    if (right.contains(a)) shared.insert(a);

  Formula chi = restricted_dnf({premise}, shared);
  return Interpolant{chi, valid(Logic::K3, Inference{{premise}, {chi}}),
                     valid(Logic::LP, Inference{{chi}, {conclusion}})};
}

bool st_minus_sum_decision(const Inference& inf) {
  const bool antivalid_st = antivalid(Logic::ST, inf).holds;
  const bool inverse_ts = valid(Logic::TS, swapped(inf)).holds;
  if (antivalid_st != inverse_ts)
    throw std::logic_error("ST-antivalidity and inverse TS-validity disagree on " + inf.text());
  return antivalid_st;
}

TsMinusDecision ts_minus_product_decision(const Inference& inf) {
  TsMinusDecision decision;
  decision.member = antivalid(Logic::TS, inf).holds;
  if (!decision.member) return decision;

  ProductOutcome inverse = st_connecting_formula(swapped(inf));
  if (!inverse.succeeded())
    throw std::logic_error("TS-antivalid inference whose inverse is not ST-valid: " + inf.text());
  const Formula& chi = inverse.witness->connector;
  decision.connector = chi;
  decision.lp_anti_check = antivalid(Logic::LP, Inference{inf.premises, {chi}});
  decision.k3_anti_check = antivalid(Logic::K3, Inference{{chi}, inf.conclusions});
  return decision;
}

bool sum_equals_antitheorems_plus_theorems(Logic left, Logic right, const Inference& inf) {
  return is_antitheorem(left, inf.premises) || is_theorem(right, inf.conclusions);
}

bool is_atom_sharing(const Formula& connector, const Inference& inf) {
  const AtomSet left = atoms_of_set(inf.premises), right = atoms_of_set(inf.conclusions);
  for (const auto& a : atoms(connector))
    if (!left.contains(a) || !right.contains(a)) return false;
  return true;
}

}  // namespace mixcons
