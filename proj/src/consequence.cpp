#include "mixcons/consequence.hpp"

#include <algorithm>
#include <cctype>
#include <vector>

namespace mixcons {

std::string_view to_string(Logic logic) {
  switch (logic) {
    case Logic::K3:
      return "K3";
    case Logic::LP:
      return "LP";
    case Logic::ST:
      return "ST";
    case Logic::TS:
      return "TS";
  }
  return "?";
}

std::optional<Logic> parse_logic(std::string_view text) {
  std::string lowered(text);
  std::transform(lowered.begin(), lowered.end(), lowered.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lowered == "k3") return Logic::K3;
  if (lowered == "lp") return Logic::LP;
  if (lowered == "st") return Logic::ST;
  if (lowered == "ts") return Logic::TS;
  return std::nullopt;
}

std::string DesignatedSet::text() const {
  std::string out = "{";
  for (auto v : kAllValues) {
    if (!contains(v)) continue;
    if (out.size() > 1) out += ", ";
    out += to_string(v);
  }
  return out + "}";
}

LogicStandard LogicStandard::of(Logic logic) {
  switch (logic) {
    case Logic::K3:
      return {"K3", kStrict, kStrict};
    case Logic::LP:
      return {"LP", kTolerant, kTolerant};
    case Logic::ST:
      return {"ST", kStrict, kTolerant};
    case Logic::TS:
      return {"TS", kTolerant, kStrict};
  }
  throw std::logic_error("unknown logic");
}

bool satisfies(const LogicStandard& logic, const Valuation& v, const Inference& inf) {
  for (const auto& g : inf.premises)
    if (!logic.premise_designated.contains(eval(g, v))) return true;
  for (const auto& d : inf.conclusions)
    if (logic.conclusion_designated.contains(eval(d, v))) return true;
  return false;
}

bool antisatisfies(const LogicStandard& logic, const Valuation& v, const Inference& inf) {
  for (const auto& g : inf.premises)
    if (logic.premise_designated.contains(eval(g, v))) return true;
  for (const auto& d : inf.conclusions)
    if (!logic.conclusion_designated.contains(eval(d, v))) return true;
  return false;
}

namespace {

template <typename Check>
Verdict sweep(const ValuationSpace& space, Check check) {
  for (Valuation v : space)
    if (!check(v)) return Verdict{false, std::move(v)};
  return Verdict{};
}

}  // namespace

Verdict valid_over(const LogicStandard& logic, const Inference& inf, const AtomSet& domain) {
  return sweep(enumerate_valuations(domain),
               [&](const Valuation& v) { return satisfies(logic, v, inf); });
}

Verdict valid(const LogicStandard& logic, const Inference& inf) {
  return valid_over(logic, inf, inf.atoms());
}

Verdict valid(Logic logic, const Inference& inf) { return valid(LogicStandard::of(logic), inf); }

Verdict antivalid(const LogicStandard& logic, const Inference& inf) {
  return sweep(enumerate_valuations(inf.atoms()),
               [&](const Valuation& v) { return antisatisfies(logic, v, inf); });
}

Verdict antivalid(Logic logic, const Inference& inf) {
  return antivalid(LogicStandard::of(logic), inf);
}

Verdict classically_valid(const Inference& inf) {
  // on classical valuations strict and tolerant designation coincide
  const LogicStandard classical{"CL", kStrict, kStrict};
  return sweep(enumerate_classical_valuations(inf.atoms()),
               [&](const Valuation& v) { return satisfies(classical, v, inf); });
}

bool is_antitheorem(const LogicStandard& logic, const FormulaSet& premises) {
  return valid(logic, Inference{premises, {}}).holds;
}

bool is_antitheorem(Logic logic, const FormulaSet& premises) {
  return is_antitheorem(LogicStandard::of(logic), premises);
}

bool is_theorem(const LogicStandard& logic, const FormulaSet& conclusions) {
  return valid(logic, Inference{{}, conclusions}).holds;
}

bool is_theorem(Logic logic, const FormulaSet& conclusions) {
  return is_theorem(LogicStandard::of(logic), conclusions);
}

std::optional<TruthValue> constant_valued(const Formula& f) {
  std::optional<TruthValue> seen;
  for (const Valuation& v : enumerate_valuations(atoms(f))) {
    TruthValue value = eval(f, v);
    if (seen && *seen != value) return std::nullopt;
    seen = value;
  }
  return seen;
}

bool is_trivial_theorem_or_antitheorem(const FormulaSet& formulas) {
  return std::any_of(formulas.begin(), formulas.end(),
                     [](const Formula& f) { return constant_valued(f).has_value(); });
}

namespace {

// Formulas standing in for "every formula": the fresh variable plus constants,
// simple compounds of it, and material drawn from the fixed side.
std::vector<Formula> formula_sample(const FormulaSet& fixed, const Formula& fresh) {
  std::vector<Formula> sample = {fresh,
                                 Formula::negation(fresh),
                                 Formula::conj(fresh, Formula::negation(fresh)),
                                 Formula::disj(fresh, Formula::negation(fresh)),
                                 Formula::top(),
                                 Formula::bot(),
                                 Formula::lambda()};
  for (const auto& a : atoms_of_set(fixed)) sample.push_back(a.to_formula());
  for (const auto& f : fixed) {
    sample.push_back(f);
    sample.push_back(Formula::negation(f));
  }
  return sample;
}

std::vector<FormulaSet> set_sample(const FormulaSet& fixed, const Formula& fresh) {
  std::vector<FormulaSet> sets = {{},
                                  {fresh},
                                  {Formula::bot()},
                                  {Formula::lambda()},
                                  {fresh, Formula::negation(fresh)},
                                  fixed};
  for (const auto& f : fixed) sets.push_back({Formula::negation(f), fresh});
  return sets;
}

}  // namespace

bool antitheorem_equivalences_hold(const LogicStandard& logic, const FormulaSet& premises) {
  const Formula fresh = fresh_variable(atoms_of_set(premises)).to_formula();
  const bool antitheorem = is_antitheorem(logic, premises);

  bool every_set = true;
  for (const auto& delta : set_sample(premises, fresh))
    every_set = every_set && valid(logic, Inference{premises, delta}).holds;

  bool every_formula = true;
  for (const auto& phi : formula_sample(premises, fresh))
    every_formula = every_formula && valid(logic, Inference{premises, {phi}}).holds;

  const bool fresh_conclusion = valid(logic, Inference{premises, {fresh}}).holds;
  return antitheorem == every_set && every_set == every_formula &&
         every_formula == fresh_conclusion;
}

bool theorem_equivalences_hold(const LogicStandard& logic, const FormulaSet& conclusions) {
  const Formula fresh = fresh_variable(atoms_of_set(conclusions)).to_formula();
  const bool theorem = is_theorem(logic, conclusions);

  bool every_set = true;
  for (const auto& gamma : set_sample(conclusions, fresh))
    every_set = every_set && valid(logic, Inference{gamma, conclusions}).holds;

  bool every_formula = true;
  for (const auto& phi : formula_sample(conclusions, fresh))
    every_formula = every_formula && valid(logic, Inference{{phi}, conclusions}).holds;

  const bool fresh_premise = valid(logic, Inference{{fresh}, conclusions}).holds;
  return theorem == every_set && every_set == every_formula && every_formula == fresh_premise;
}

}  // namespace mixcons
