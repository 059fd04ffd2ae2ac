#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

#include "mixcons/consequence.hpp"
#include "mixcons/formula.hpp"

namespace mixcons {

enum class DualityMap { Operational, Negation };

/// The operational dual: variables, L and ~ fixed; T and F exchanged; & and | exchanged.
Formula op_dual(const Formula& f);
FormulaSet op_dual(const FormulaSet& formulas);

/// ~Gamma => ~Delta, without swapping sides. This is the map applied to the
/// members of a set of inferences.
Inference op_dual_pointwise(const Inference& inf);
/// ~Delta => ~Gamma.
Inference op_dual_inference(const Inference& inf);
/// ~Delta => ~Gamma with ~ read as object-language negation (no simplification).
Inference neg_dual_inference(const Inference& inf);
/// Negation prefixed to every member, sides kept.
Inference negate_pointwise(const Inference& inf);
Inference invert(const Inference& inf);

/// The eight sets of valid (+) and antivalid (-) inferences.
enum class InferenceSet { K3Plus, LPPlus, STPlus, TSPlus, K3Minus, LPMinus, STMinus, TSMinus };

std::string_view to_string(InferenceSet set);
bool direct_membership(InferenceSet set, const Inference& inf);

class UnknownRoute : public std::invalid_argument {
 public:
  explicit UnknownRoute(const std::string& route)
      : std::invalid_argument("unknown or mismatched route: " + route) {}
};

/// The identity strings accepted by dual_set_membership.
std::span<const std::string_view> route_names();
/// Left-hand side of a route, if the route is known.
std::optional<InferenceSet> route_target(std::string_view route);

/// Membership of inf in `target`, computed through the right-hand side of the
/// named identity: dualized sets by transforming the inference; products by
/// checking the constructive connector in both component sets; sums by
/// checking a fresh pivot variable against both component sets.
bool dual_set_membership(InferenceSet target, const Inference& inf, std::string_view route);

}  // namespace mixcons
