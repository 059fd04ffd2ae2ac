#pragma once

#include <nlohmann/json.hpp>
#include <string_view>

#include "mixcons/consequence.hpp"
#include "mixcons/decomposition.hpp"
#include "mixcons/semantics.hpp"

namespace mixcons::report {

using nlohmann::json;

/// {"p": "1", "q": "1/2"}; a default value appears under "*".
json valuation(const Valuation& v);

/// {logic, sequent, valid|antivalid: bool, countermodel: map or null}
json verdict(Logic logic, const Inference& inf, const Verdict& verdict, bool anti);

/// {logic, sequent, valid}
json check(Logic logic, const Inference& inf, const Verdict& verdict);

/// Decomposition reports share the shape
/// {sequent, mode, result: {...}, checks: [{logic, sequent, valid}]}.
json st_product(const Inference& inf, const ProductOutcome& outcome);
json lpk3_product(const Inference& inf, const ProductOutcome& outcome);
json ts_sum(const Inference& inf, const SumDecision& decision);
json milne(const Formula& premise, const Formula& conclusion,
           const std::variant<Interpolant, InterpolationFailure>& result);

}  // namespace mixcons::report
