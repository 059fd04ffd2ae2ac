#pragma once

#include <cstdint>
#include <random>

#include "mixcons/formula.hpp"
#include "mixcons/semantics.hpp"

namespace mixcons {

struct GeneratorOptions {
  int max_vars = 3;
  int max_depth = 4;
  int max_side = 2;
  /// Probability that a leaf is a constant rather than a variable.
  double constant_weight = 0.15;
  bool allow_lambda = true;
};

/// Random formulas: at each level a constructor is chosen uniformly among
/// leaf, ~, &, | until the depth budget is spent. Variables come from the
/// pool p, q, r, s, ... of size max_vars.
class FormulaGenerator {
 public:
  FormulaGenerator(GeneratorOptions options, std::uint64_t seed)
      : options_(options), rng_(seed) {}

  Formula formula() { return formula(options_.max_depth); }
  Formula formula(int depth);
  FormulaSet side(int min_size = 0);
  Inference inference();
  Valuation valuation(const AtomSet& domain);

  const GeneratorOptions& options() const { return options_; }
  std::mt19937_64& engine() { return rng_; }

 private:
  Formula leaf();

  GeneratorOptions options_;
  std::mt19937_64 rng_;
};

/// Name of the i-th pool variable: p, q, r, s, t, u, then v6, v7, ...
std::string pool_variable(int index);

}  // namespace mixcons
