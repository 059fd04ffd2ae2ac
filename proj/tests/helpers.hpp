#pragma once

#include <string_view>

#include "mixcons/formula.hpp"
#include "mixcons/parser.hpp"
#include "mixcons/semantics.hpp"

namespace testing {

inline mixcons::Formula F(std::string_view text) { return mixcons::parse_formula(text); }
inline mixcons::Inference S(std::string_view text) { return mixcons::parse_sequent(text); }

inline mixcons::AtomSet vars(std::initializer_list<const char*> names) {
  mixcons::AtomSet out;
  for (const char* n : names) out.insert(mixcons::Atom::var(n));
  return out;
}

constexpr auto Zero = mixcons::TruthValue::Zero;
constexpr auto Half = mixcons::TruthValue::Half;
constexpr auto One = mixcons::TruthValue::One;

}  // namespace testing
