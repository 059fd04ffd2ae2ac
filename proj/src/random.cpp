#include "mixcons/random.hpp"

#include <algorithm>
#include <map>

namespace mixcons {

std::string pool_variable(int index) {
  static const char* names[] = {"p", "q", "r", "s", "t", "u"};
  if (index >= 0 && index < 6) return names[index];
  return "v" + std::to_string(index);
}

Formula FormulaGenerator::leaf() {
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  if (options_.max_vars <= 0 || coin(rng_) < options_.constant_weight) {
    std::uniform_int_distribution<int> pick(0, options_.allow_lambda ? 2 : 1);
    switch (pick(rng_)) {
      case 0:
        return Formula::top();
      case 1:
        return Formula::bot();
      default:
        return Formula::lambda();
    }
  }
  std::uniform_int_distribution<int> var(0, options_.max_vars - 1);
  return Formula::var(pool_variable(var(rng_)));
}

Formula FormulaGenerator::formula(int depth) {
  if (depth <= 0) return leaf();
  std::uniform_int_distribution<int> pick(0, 3);
  switch (pick(rng_)) {
    case 0:
      return leaf();
    case 1:
      return Formula::negation(formula(depth - 1));
    case 2: {
      Formula l = formula(depth - 1);
      return Formula::conj(l, formula(depth - 1));
    }
    default: {
      Formula l = formula(depth - 1);
      return Formula::disj(l, formula(depth - 1));
    }
  }
}

FormulaSet FormulaGenerator::side(int min_size) {
  std::uniform_int_distribution<int> count(min_size, std::max(min_size, options_.max_side));
  FormulaSet out;
  const int n = count(rng_);
  for (int i = 0; i < n; ++i) out.insert(formula());
  return out;
}

Inference FormulaGenerator::inference() {
  FormulaSet premises = side();
  return Inference{std::move(premises), side()};
}

Valuation FormulaGenerator::valuation(const AtomSet& domain) {
  std::uniform_int_distribution<int> value(0, 2);
  std::map<std::string, TruthValue> assignment;
  for (const auto& name : variables(domain))
    assignment.emplace(name, static_cast<TruthValue>(value(rng_)));
  return Valuation(std::move(assignment));
}

}  // namespace mixcons
