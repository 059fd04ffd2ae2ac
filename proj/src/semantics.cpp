#include "mixcons/semantics.hpp"

#include <limits>

namespace mixcons {

std::string_view to_string(TruthValue v) {
  switch (v) {
    case TruthValue::Zero:
      return "0";
    case TruthValue::Half:
      return "1/2";
    case TruthValue::One:
      return "1";
  }
  return "?";
}

std::optional<TruthValue> parse_truth_value(std::string_view text) {
  if (text == "0") return TruthValue::Zero;
  if (text == "1/2") return TruthValue::Half;
  if (text == "1") return TruthValue::One;
  return std::nullopt;
}

std::optional<TruthValue> Valuation::lookup(const std::string& name) const {
  if (auto it = assignments_.find(name); it != assignments_.end()) return it->second;
  return default_;
}

TruthValue Valuation::value_of(const Atom& atom) const {
  if (!atom.is_variable()) return constant_value(atom.kind);
  if (auto v = lookup(atom.name)) return *v;
  throw UnmappedVariable(atom.name);
}

Valuation Valuation::with(const std::string& name, TruthValue value) const {
  Valuation copy = *this;
  copy.assignments_[name] = value;
  return copy;
}

Valuation Valuation::restricted_to(const AtomSet& domain) const {
  std::map<std::string, TruthValue> kept;
  for (const auto& a : domain) {
    if (!a.is_variable()) continue;
    if (auto v = lookup(a.name)) kept.emplace(a.name, *v);
  }
  return Valuation(std::move(kept));
}

std::string Valuation::render() const {
  std::string out;
  for (const auto& [name, value] : assignments_) {
    if (!out.empty()) out += ' ';
    out += name;
    out += '=';
    out += to_string(value);
  }
  if (default_) {
    if (!out.empty()) out += ' ';
    out += "*=";
    out += to_string(*default_);
  }
  return out;
}

TruthValue constant_value(Kind constant) {
  switch (constant) {
    case Kind::Top:
      return TruthValue::One;
    case Kind::Bot:
      return TruthValue::Zero;
    case Kind::Lambda:
      return TruthValue::Half;
    default:
      throw std::logic_error("constant_value on a non-constant kind");
  }
}

TruthValue eval(const Formula& f, const Valuation& v) {
  switch (f.kind()) {
    case Kind::Var:
      if (auto value = v.lookup(f.name())) return *value;
      throw UnmappedVariable(f.name());
    case Kind::Top:
    case Kind::Bot:
    case Kind::Lambda:
      return constant_value(f.kind());
    case Kind::Not:
      return complement(eval(f.sub(), v));
    case Kind::And:
      return meet(eval(f.left(), v), eval(f.right(), v));
    case Kind::Or:
      return join(eval(f.left(), v), eval(f.right(), v));
  }
  throw std::logic_error("unknown formula kind");
}

ValuationSpace::ValuationSpace(const AtomSet& domain, std::vector<TruthValue> values)
    : variables_(mixcons::variables(domain)), values_(std::move(values)) {
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    if (size_ > std::numeric_limits<std::uint64_t>::max() / values_.size())
      throw std::length_error("valuation space too large");
    size_ *= values_.size();
  }
}

Valuation ValuationSpace::at(std::uint64_t index) const {
  std::map<std::string, TruthValue> assignment;
  const std::uint64_t base = values_.size();
  for (std::size_t i = variables_.size(); i-- > 0;) {
    assignment.emplace(variables_[i], values_[index % base]);
    index /= base;
  }
  return Valuation(std::move(assignment));
}

ValuationSpace enumerate_valuations(const AtomSet& domain) { return ValuationSpace(domain); }

ValuationSpace enumerate_classical_valuations(const AtomSet& domain) {
  return ValuationSpace(domain, {TruthValue::Zero, TruthValue::One});
}

bool is_partial_sharpening(const Valuation& sharpened, const Valuation& base, const AtomSet& sigma) {
  for (const auto& a : sigma) {
    TruthValue original = base.value_of(a);
    if (is_classical(original) && sharpened.value_of(a) != original) return false;
  }
  return true;
}

Valuation all_half_valuation() { return Valuation({}, TruthValue::Half); }

Valuation dual_valuation(const Valuation& v) {
  std::map<std::string, TruthValue> flipped;
  for (const auto& [name, value] : v.assignments()) flipped.emplace(name, complement(value));
  std::optional<TruthValue> fallback;
  if (v.fallback()) fallback = complement(*v.fallback());
  return Valuation(std::move(flipped), fallback);
}

}  // namespace mixcons
