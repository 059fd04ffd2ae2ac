#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "mixcons/consequence.hpp"
#include "mixcons/formula.hpp"

namespace mixcons::oracle {

/// Standards the properties compare against. The test hook swaps in a
/// deliberately wrong ST so that the harness can be seen to fail.
struct Context {
  LogicStandard k3 = LogicStandard::of(Logic::K3);
  LogicStandard lp = LogicStandard::of(Logic::LP);
  LogicStandard st = LogicStandard::of(Logic::ST);
  LogicStandard ts = LogicStandard::of(Logic::TS);

  const LogicStandard& of(Logic logic) const;
  static Context corrupted();
};

/// Returns a description of the violation, or nothing if the property holds.
using Check = std::function<std::optional<std::string>(const Context&, const Inference&)>;

struct Property {
  std::string name;
  Check check;
};

/// Every property of the toolkit, each a check on one random inference.
const std::vector<Property>& properties();

struct Options {
  int max_vars = 3;
  int max_depth = 4;
  int samples = 1000;
  std::uint64_t seed = 1;
  bool corrupt_standard = false;
};

struct PropertyResult {
  std::string name;
  int checked = 0;
  std::optional<std::string> failure;
  std::optional<Inference> minimized;
};

struct Report {
  std::vector<PropertyResult> results;
  bool all_passed() const;
};

/// Runs `samples` random instances of every property; deterministic in the seed.
Report run(const Options& options);

/// Runs one property; on a violation the failing inference is greedily shrunk.
PropertyResult run_property(const Property& property, const Context& context,
                            const Options& options, std::uint64_t seed);

/// Smaller inferences derived from inf: a member dropped, or a subformula
/// replaced by one of its operands.
std::vector<Inference> shrink_candidates(const Inference& inf);

}  // namespace mixcons::oracle
