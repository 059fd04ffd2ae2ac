#pragma once

#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mixcons/formula.hpp"

namespace mixcons {

/// Strong Kleene truth values, ordered 0 < 1/2 < 1.
enum class TruthValue : std::uint8_t { Zero = 0, Half = 1, One = 2 };

constexpr TruthValue complement(TruthValue v) {
  return static_cast<TruthValue>(2 - static_cast<int>(v));
}
constexpr TruthValue meet(TruthValue a, TruthValue b) { return a < b ? a : b; }
constexpr TruthValue join(TruthValue a, TruthValue b) { return a < b ? b : a; }
constexpr bool is_classical(TruthValue v) { return v != TruthValue::Half; }

/// "0", "1/2" or "1".
std::string_view to_string(TruthValue v);
std::optional<TruthValue> parse_truth_value(std::string_view text);

inline constexpr TruthValue kAllValues[] = {TruthValue::Zero, TruthValue::Half, TruthValue::One};
inline constexpr TruthValue kClassicalValues[] = {TruthValue::Zero, TruthValue::One};

class UnmappedVariable : public std::runtime_error {
 public:
  explicit UnmappedVariable(const std::string& name)
      : std::runtime_error("variable '" + name + "' has no value under the valuation"),
        name_(name) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

/// Assignment of truth values to variables, optionally total through a
/// default value for every unmapped variable. Constants are never stored.
class Valuation {
 public:
  Valuation() = default;
  explicit Valuation(std::map<std::string, TruthValue> assignments,
                     std::optional<TruthValue> fallback = std::nullopt)
      : assignments_(std::move(assignments)), default_(fallback) {}
  Valuation(std::initializer_list<std::pair<const std::string, TruthValue>> init)
      : assignments_(init) {}

  const std::map<std::string, TruthValue>& assignments() const { return assignments_; }
  const std::optional<TruthValue>& fallback() const { return default_; }

  /// Value of a variable, if mapped or covered by the default.
  std::optional<TruthValue> lookup(const std::string& name) const;
  /// Throws UnmappedVariable for a variable outside the valuation.
  TruthValue value_of(const Atom& atom) const;

  /// Copy with one variable reassigned.
  Valuation with(const std::string& name, TruthValue value) const;
  /// Copy restricted to the given variables (constants are ignored).
  Valuation restricted_to(const AtomSet& domain) const;

  /// "p=1 q=1/2", sorted by variable; a default renders as a trailing "*=v".
  std::string render() const;

  friend bool operator==(const Valuation&, const Valuation&) = default;

 private:
  std::map<std::string, TruthValue> assignments_;
  std::optional<TruthValue> default_;
};

TruthValue constant_value(Kind constant);
TruthValue eval(const Formula& f, const Valuation& v);

/// Every assignment of the given values to the variables of a domain, in
/// lexicographic order: variables sorted by name, the first one most
/// significant, values in the order supplied (0 < 1/2 < 1 by default).
class ValuationSpace {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Valuation;
    using difference_type = std::ptrdiff_t;
    using pointer = const Valuation*;
    using reference = Valuation;

    iterator() = default;
    Valuation operator*() const { return space_->at(index_); }
    iterator& operator++() {
      ++index_;
      return *this;
    }
    iterator operator++(int) {
      iterator old = *this;
      ++index_;
      return old;
    }
    friend bool operator==(const iterator& a, const iterator& b) { return a.index_ == b.index_; }

   private:
    friend class ValuationSpace;
    iterator(const ValuationSpace* space, std::uint64_t index) : space_(space), index_(index) {}
    const ValuationSpace* space_ = nullptr;
    std::uint64_t index_ = 0;
  };

  explicit ValuationSpace(const AtomSet& domain,
                          std::vector<TruthValue> values = {kAllValues[0], kAllValues[1],
                                                            kAllValues[2]});

  std::uint64_t size() const { return size_; }
  const std::vector<std::string>& variables() const { return variables_; }
  Valuation at(std::uint64_t index) const;

  iterator begin() const { return iterator(this, 0); }
  iterator end() const { return iterator(this, size_); }

 private:
  std::vector<std::string> variables_;
  std::vector<TruthValue> values_;
  std::uint64_t size_ = 1;
};

/// All 3^n valuations over the variables of the domain.
ValuationSpace enumerate_valuations(const AtomSet& domain);
/// All 2^n classical valuations over the variables of the domain.
ValuationSpace enumerate_classical_valuations(const AtomSet& domain);

/// True iff every atom of sigma that is classical under `base` keeps its
/// value under `sharpened`. Constants compare by their fixed values.
bool is_partial_sharpening(const Valuation& sharpened, const Valuation& base, const AtomSet& sigma);

Valuation all_half_valuation();
Valuation dual_valuation(const Valuation& v);

}  // namespace mixcons
