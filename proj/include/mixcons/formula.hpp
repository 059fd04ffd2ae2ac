#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <vector>

namespace mixcons {

enum class Kind : std::uint8_t { Var, Top, Bot, Lambda, Not, And, Or };

/// Immutable formula over variables, the constants T/F/L and ~, &, |.
///
/// Nodes are shared; copying a Formula is a pointer copy. Every node carries
/// its canonical printing, and since printing is injective (it round-trips
/// through the parser) two formulas are structurally equal exactly when
/// their canonical texts are equal. Ordering is by canonical text.
class Formula {
 public:
  static Formula var(std::string name);
  static Formula top();
  static Formula bot();
  static Formula lambda();
  static Formula negation(Formula sub);
  static Formula conj(Formula left, Formula right);
  static Formula disj(Formula left, Formula right);

  Kind kind() const;
  bool is_constant() const;
  bool is_atomic() const;

  /// Variable name; empty for every other kind.
  const std::string& name() const;
  /// Operand of a negation.
  const Formula& sub() const;
  const Formula& left() const;
  const Formula& right() const;

  const std::string& text() const;
  std::size_t depth() const;
  std::size_t size() const;

  friend bool operator==(const Formula& a, const Formula& b) {
    return a.node_ == b.node_ || a.text() == b.text();
  }
  friend std::strong_ordering operator<=>(const Formula& a, const Formula& b) {
    return a.text() <=> b.text();
  }

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

struct Formula::Node {
  Kind kind;
  std::string name;
  std::vector<Formula> children;
  std::string text;
  std::size_t depth = 0;
  std::size_t size = 1;
};

inline Kind Formula::kind() const { return node_->kind; }
inline const std::string& Formula::name() const { return node_->name; }
inline const std::string& Formula::text() const { return node_->text; }
inline std::size_t Formula::depth() const { return node_->depth; }
inline std::size_t Formula::size() const { return node_->size; }

/// A variable or one of the three constants. Variables sort before
/// constants; variables sort by name.
struct Atom {
  Kind kind = Kind::Var;
  std::string name;

  static Atom var(std::string n) { return Atom{Kind::Var, std::move(n)}; }
  static Atom top() { return Atom{Kind::Top, {}}; }
  static Atom bot() { return Atom{Kind::Bot, {}}; }
  static Atom lambda() { return Atom{Kind::Lambda, {}}; }

  bool is_variable() const { return kind == Kind::Var; }
  Formula to_formula() const;
  std::string text() const;

  friend bool operator==(const Atom&, const Atom&) = default;
  friend auto operator<=>(const Atom&, const Atom&) = default;
};

using AtomSet = std::set<Atom>;

/// Duplicate-free, sorted by canonical printing.
using FormulaSet = std::set<Formula>;

/// An inference Gamma => Delta over finite formula sets; either side may be empty.
struct Inference {
  FormulaSet premises;
  FormulaSet conclusions;

  std::string text() const;
  AtomSet atoms() const;

  friend bool operator==(const Inference&, const Inference&) = default;
};

AtomSet atoms(const Formula& f);
AtomSet atoms_of_set(const FormulaSet& formulas);
std::vector<std::string> variables(const AtomSet& atoms);
bool contains_lambda(const Formula& f);
bool contains_lambda(const Inference& inf);

std::string print_formula(const Formula& f);
std::string print_formula_set(const FormulaSet& formulas);

/// Smallest unused name in p0, p1, p2, ...
Atom fresh_variable(const AtomSet& avoid);

/// Left-nested folds; the empty conjunction is T and the empty disjunction F.
Formula conjoin(const std::vector<Formula>& parts);
Formula disjoin(const std::vector<Formula>& parts);
Formula conjoin(const FormulaSet& parts);

}  // namespace mixcons
