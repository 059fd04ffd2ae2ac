#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "mixcons/formula.hpp"
#include "mixcons/semantics.hpp"

namespace mixcons {

enum class Logic : std::uint8_t { K3, LP, ST, TS };

inline constexpr Logic kAllLogics[] = {Logic::K3, Logic::LP, Logic::ST, Logic::TS};

std::string_view to_string(Logic logic);
/// Accepts "k3", "lp", "st", "ts" in either case.
std::optional<Logic> parse_logic(std::string_view text);

/// Subset of {0, 1/2, 1}.
class DesignatedSet {
 public:
  constexpr DesignatedSet() = default;
  constexpr DesignatedSet(std::initializer_list<TruthValue> values) {
    for (auto v : values) bits_ |= bit(v);
  }

  constexpr bool contains(TruthValue v) const { return (bits_ & bit(v)) != 0; }
  std::string text() const;

  friend constexpr bool operator==(DesignatedSet, DesignatedSet) = default;

 private:
  static constexpr std::uint8_t bit(TruthValue v) {
    return static_cast<std::uint8_t>(1u << static_cast<unsigned>(v));
  }
  std::uint8_t bits_ = 0;
};

inline constexpr DesignatedSet kStrict{TruthValue::One};
inline constexpr DesignatedSet kTolerant{TruthValue::Half, TruthValue::One};

/// Pair of designated sets: D1 for premises, D2 for conclusions.
struct LogicStandard {
  std::string name;
  DesignatedSet premise_designated;
  DesignatedSet conclusion_designated;

  static LogicStandard of(Logic logic);
};

/// Outcome of a validity or antivalidity check. `holds` is false exactly when
/// a countermodel is present; the countermodel is the first failing valuation
/// in enumeration order.
struct Verdict {
  bool holds = true;
  std::optional<Valuation> countermodel;

  explicit operator bool() const { return holds; }
};

bool satisfies(const LogicStandard& logic, const Valuation& v, const Inference& inf);
bool antisatisfies(const LogicStandard& logic, const Valuation& v, const Inference& inf);

Verdict valid(const LogicStandard& logic, const Inference& inf);
Verdict valid(Logic logic, const Inference& inf);
/// Same check, enumerating valuations over an explicit variable domain that
/// must cover the inference's variables.
Verdict valid_over(const LogicStandard& logic, const Inference& inf, const AtomSet& domain);

Verdict antivalid(const LogicStandard& logic, const Inference& inf);
Verdict antivalid(Logic logic, const Inference& inf);

/// Two-valued validity: enumeration restricted to {0, 1}.
Verdict classically_valid(const Inference& inf);

bool is_antitheorem(const LogicStandard& logic, const FormulaSet& premises);
bool is_antitheorem(Logic logic, const FormulaSet& premises);
bool is_theorem(const LogicStandard& logic, const FormulaSet& conclusions);
bool is_theorem(Logic logic, const FormulaSet& conclusions);

/// Whether the formula takes one and the same value under every valuation
/// of its variables; returns that value.
std::optional<TruthValue> constant_valued(const Formula& f);
bool is_trivial_theorem_or_antitheorem(const FormulaSet& formulas);

/// Checks that the four characterizations of an antitheorem (empty
/// conclusions; every conclusion set; every single conclusion; a fresh
/// variable) agree. The universally quantified clauses are checked on a
/// bounded sample that always includes a fresh variable.
bool antitheorem_equivalences_hold(const LogicStandard& logic, const FormulaSet& premises);
bool theorem_equivalences_hold(const LogicStandard& logic, const FormulaSet& conclusions);

}  // namespace mixcons
