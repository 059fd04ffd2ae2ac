#pragma once

#include <optional>
#include <stdexcept>
#include <string_view>
#include <variant>

#include "mixcons/consequence.hpp"
#include "mixcons/formula.hpp"
#include "mixcons/semantics.hpp"

namespace mixcons {

/// A middle formula connecting the two sides of an inference, with the
/// verdicts of `left_logic`: premises => connector and
/// `right_logic`: connector => conclusions.
struct ProductWitness {
  Formula connector;
  Logic left_logic;
  Logic right_logic;
  Verdict left_check;
  Verdict right_check;

  bool verified() const { return left_check.holds && right_check.holds; }
};

/// Either a witness, or the countermodel showing the inference is outside
/// the product.
struct ProductOutcome {
  std::optional<ProductWitness> witness;
  std::optional<Valuation> countermodel;

  bool succeeded() const { return witness.has_value(); }
};

/// Fresh pivot p with two valuations: left_fail refutes LP-validity of
/// premises => p (p is 0), right_fail refutes K3-validity of p => conclusions
/// (p is 1).
struct SumRefutation {
  Formula pivot;
  Valuation left_fail;
  Valuation right_fail;
};

struct AlwaysFalsePremise {
  Formula premise;
};
struct AlwaysTrueConclusion {
  Formula conclusion;
};

struct SumDecision {
  bool member = false;
  std::variant<AlwaysFalsePremise, AlwaysTrueConclusion, SumRefutation> reason;
};

class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class LambdaPresent : public PreconditionError {
 public:
  LambdaPresent() : PreconditionError("the lambda constant is not allowed here") {}
};

/// Conjunction, in atom order, of the literals a (value 1) and ~a (value 0)
/// over the atoms of the premises that are classical under v. Requires every
/// premise to be strictly true under v.
Formula gamma_v_conjunction(const FormulaSet& premises, const Valuation& v);

/// K3 disjunctive normal form of the conjunction of the premises: the
/// disjunction of gamma_v_conjunction over every valuation (in enumeration
/// order) making all premises 1, duplicates dropped; F if there is none.
Formula k3_dnf(const FormulaSet& premises);

/// ST-valid inferences factor through K3 then LP: the connector is T for
/// empty premises and k3_dnf(premises) otherwise.
ProductOutcome st_connecting_formula(const Inference& inf);

/// TS-validity as membership in the relative sum of LP and K3.
SumDecision ts_sum_decision(const Inference& inf);

/// On the lambda-free fragment ST-valid inferences also factor through LP
/// then K3. Throws LambdaPresent.
ProductOutcome lp_k3_connector_lambda_free(const Inference& inf);

/// With lambda available every inference factors through LP then K3 via L.
ProductWitness lp_k3_product_universal_witness(const Inference& inf);

enum class InterpolationFailure {
  LambdaPresent,
  NotClassicallyValid,
  PremiseContradiction,
  ConclusionTautology,
};

std::string_view to_string(InterpolationFailure failure);

struct Interpolant {
  Formula formula;
  Verdict k3_check;  // premise => interpolant
  Verdict lp_check;  // interpolant => conclusion
};

/// k3_dnf of the premise with every disjunct restricted to the atoms shared
/// by premise and conclusion; an emptied disjunct becomes T.
std::variant<Interpolant, InterpolationFailure> milne_interpolant(const Formula& premise,
                                                                  const Formula& conclusion);

/// Membership in K3- dagger LP-, decided as ST-antivalidity and cross-checked
/// against TS-validity of the inverse. Throws std::logic_error if the two
/// routes disagree.
bool st_minus_sum_decision(const Inference& inf);

struct TsMinusDecision {
  bool member = false;
  /// Connector of the inverse ST product, in mirrored position.
  std::optional<Formula> connector;
  std::optional<Verdict> lp_anti_check;  // antivalid(LP, premises => connector)
  std::optional<Verdict> k3_anti_check;  // antivalid(K3, connector => conclusions)
};

/// Membership in LP- | K3-, decided as TS-antivalidity.
TsMinusDecision ts_minus_product_decision(const Inference& inf);

/// Decision procedure for membership in L1+ dagger L2+: an L1 antitheorem
/// on the left or an L2 theorem on the right.
bool sum_equals_antitheorems_plus_theorems(Logic left, Logic right, const Inference& inf);

/// Whether every atom of the connector, constants included, occurs on both
/// sides. A connector with this property is an interpolant; the constructions
/// above do not guarantee it (T => L has only T as a connector).
bool is_atom_sharing(const Formula& connector, const Inference& inf);

}  // namespace mixcons
