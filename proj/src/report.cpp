#include "mixcons/report.hpp"

namespace mixcons::report {

json valuation(const Valuation& v) {
  json out = json::object();
  for (const auto& [name, value] : v.assignments()) out[name] = std::string(to_string(value));
  if (v.fallback()) out["*"] = std::string(to_string(*v.fallback()));
  return out;
}

json verdict(Logic logic, const Inference& inf, const Verdict& verdict, bool anti) {
  json out;
  out["logic"] = std::string(to_string(logic));
  out["sequent"] = inf.text();
  out[anti ? "antivalid" : "valid"] = verdict.holds;
  out["countermodel"] = verdict.countermodel ? valuation(*verdict.countermodel) : json(nullptr);
  return out;
}

json check(Logic logic, const Inference& inf, const Verdict& verdict) {
  return json{{"logic", std::string(to_string(logic))},
              {"sequent", inf.text()},
              {"valid", verdict.holds}};
}

namespace {

json product(const Inference& inf, const ProductOutcome& outcome, std::string_view mode) {
  json out;
  out["sequent"] = inf.text();
  out["mode"] = std::string(mode);
  out["checks"] = json::array();
  if (outcome.succeeded()) {
    const ProductWitness& w = *outcome.witness;
    out["result"] = {{"member", true},
                     {"connector", w.connector.text()},
                     {"atom_sharing", is_atom_sharing(w.connector, inf)}};
    out["checks"].push_back(
        check(w.left_logic, Inference{inf.premises, {w.connector}}, w.left_check));
    out["checks"].push_back(
        check(w.right_logic, Inference{{w.connector}, inf.conclusions}, w.right_check));
  } else {
    out["result"] = {{"member", false},
                     {"countermodel", outcome.countermodel ? valuation(*outcome.countermodel)
                                                           : json(nullptr)}};
  }
  return out;
}

}  // namespace

json st_product(const Inference& inf, const ProductOutcome& outcome) {
  return product(inf, outcome, "st-product");
}

json lpk3_product(const Inference& inf, const ProductOutcome& outcome) {
  return product(inf, outcome, "lpk3-product");
}

json ts_sum(const Inference& inf, const SumDecision& decision) {
  json out;
  out["sequent"] = inf.text();
  out["mode"] = "ts-sum";
  out["checks"] = json::array();
  json result{{"member", decision.member}};
  if (const auto* p = std::get_if<AlwaysFalsePremise>(&decision.reason)) {
    result["reason"] = "premise-always-0";
    result["formula"] = p->premise.text();
  } else if (const auto* c = std::get_if<AlwaysTrueConclusion>(&decision.reason)) {
    result["reason"] = "conclusion-always-1";
    result["formula"] = c->conclusion.text();
  } else {
    const auto& r = std::get<SumRefutation>(decision.reason);
    result["reason"] = "refutation";
    result["pivot"] = r.pivot.text();
    result["left_fail"] = valuation(r.left_fail);
    result["right_fail"] = valuation(r.right_fail);
    Inference left{inf.premises, {r.pivot}};
    Inference right{{r.pivot}, inf.conclusions};
    out["checks"].push_back(check(Logic::LP, left, valid(Logic::LP, left)));
    out["checks"].push_back(check(Logic::K3, right, valid(Logic::K3, right)));
  }
  out["result"] = std::move(result);
  return out;
}

json milne(const Formula& premise, const Formula& conclusion,
           const std::variant<Interpolant, InterpolationFailure>& result) {
  json out;
  out["sequent"] = Inference{{premise}, {conclusion}}.text();
  out["mode"] = "milne";
  out["checks"] = json::array();
  if (const auto* i = std::get_if<Interpolant>(&result)) {
    out["result"] = {{"member", true}, {"connector", i->formula.text()}};
    out["checks"].push_back(check(Logic::K3, Inference{{premise}, {i->formula}}, i->k3_check));
    out["checks"].push_back(check(Logic::LP, Inference{{i->formula}, {conclusion}}, i->lp_check));
  } else {
    out["result"] = {{"member", false},
                     {"failure", std::string(to_string(std::get<InterpolationFailure>(result)))}};
  }
  return out;
}

}  // namespace mixcons::report
