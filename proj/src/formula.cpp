#include "mixcons/formula.hpp"

#include <algorithm>
#include <stdexcept>

namespace mixcons {

namespace {

int precedence(const Formula& f) {
  switch (f.kind()) {
    case Kind::Or:
      return 1;
    case Kind::And:
      return 2;
    default:
      return 3;
  }
}

std::string wrap_if(const Formula& f, bool parens) {
  return parens ? "(" + f.text() + ")" : f.text();
}

}  // namespace

Formula Formula::var(std::string name) {
  if (name.empty()) throw std::invalid_argument("variable name must not be empty");
  auto node = std::make_shared<Node>();
  node->kind = Kind::Var;
  node->text = name;
  node->name = std::move(name);
  return Formula(std::move(node));
}

Formula Formula::top() {
  static const Formula t(std::make_shared<const Node>(Node{Kind::Top, {}, {}, "T"}));
  return t;
}

Formula Formula::bot() {
  static const Formula f(std::make_shared<const Node>(Node{Kind::Bot, {}, {}, "F"}));
  return f;
}

Formula Formula::lambda() {
  static const Formula l(std::make_shared<const Node>(Node{Kind::Lambda, {}, {}, "L"}));
  return l;
}

Formula Formula::negation(Formula sub) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Not;
  node->text = "~" + wrap_if(sub, precedence(sub) < 3);
  node->depth = sub.depth() + 1;
  node->size = sub.size() + 1;
  node->children.push_back(std::move(sub));
  return Formula(std::move(node));
}

Formula Formula::conj(Formula left, Formula right) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::And;
  node->text = wrap_if(left, precedence(left) < 2) + " & " + wrap_if(right, precedence(right) <= 2);
  node->depth = std::max(left.depth(), right.depth()) + 1;
  node->size = left.size() + right.size() + 1;
  node->children = {std::move(left), std::move(right)};
  return Formula(std::move(node));
}

Formula Formula::disj(Formula left, Formula right) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Or;
  node->text = left.text() + " | " + wrap_if(right, precedence(right) <= 1);
  node->depth = std::max(left.depth(), right.depth()) + 1;
  node->size = left.size() + right.size() + 1;
  node->children = {std::move(left), std::move(right)};
  return Formula(std::move(node));
}

bool Formula::is_constant() const {
  return kind() == Kind::Top || kind() == Kind::Bot || kind() == Kind::Lambda;
}

bool Formula::is_atomic() const { return kind() == Kind::Var || is_constant(); }

const Formula& Formula::sub() const {
  if (kind() != Kind::Not) throw std::logic_error("sub() on a non-negation: " + text());
  return node_->children[0];
}

const Formula& Formula::left() const {
  if (kind() != Kind::And && kind() != Kind::Or)
    throw std::logic_error("left() on a non-binary formula: " + text());
  return node_->children[0];
}

const Formula& Formula::right() const {
  if (kind() != Kind::And && kind() != Kind::Or)
    throw std::logic_error("right() on a non-binary formula: " + text());
  return node_->children[1];
}

Formula Atom::to_formula() const {
  switch (kind) {
    case Kind::Var:
      return Formula::var(name);
    case Kind::Top:
      return Formula::top();
    case Kind::Bot:
      return Formula::bot();
    case Kind::Lambda:
      return Formula::lambda();
    default:
      throw std::logic_error("atom with a connective kind");
  }
}

std::string Atom::text() const { return to_formula().text(); }

namespace {

void collect_atoms(const Formula& f, AtomSet& out) {
  switch (f.kind()) {
    case Kind::Var:
      out.insert(Atom::var(f.name()));
      break;
    case Kind::Top:
      out.insert(Atom::top());
      break;
    case Kind::Bot:
      out.insert(Atom::bot());
      break;
    case Kind::Lambda:
      out.insert(Atom::lambda());
      break;
    case Kind::Not:
      collect_atoms(f.sub(), out);
      break;
    case Kind::And:
    case Kind::Or:
      collect_atoms(f.left(), out);
      collect_atoms(f.right(), out);
      break;
  }
}

std::string join_texts(const FormulaSet& formulas) {
  std::string out;
  for (const auto& f : formulas) {
    if (!out.empty()) out += ", ";
    out += f.text();
  }
  return out;
}

}  // namespace

AtomSet atoms(const Formula& f) {
  AtomSet out;
  collect_atoms(f, out);
  return out;
}

AtomSet atoms_of_set(const FormulaSet& formulas) {
  AtomSet out;
  for (const auto& f : formulas) collect_atoms(f, out);
  return out;
}

std::vector<std::string> variables(const AtomSet& atoms) {
  std::vector<std::string> names;
  for (const auto& a : atoms)
    if (a.is_variable()) names.push_back(a.name);
  return names;
}

bool contains_lambda(const Formula& f) { return atoms(f).contains(Atom::lambda()); }

bool contains_lambda(const Inference& inf) { return inf.atoms().contains(Atom::lambda()); }

std::string Inference::text() const {
  std::string lhs = join_texts(premises);
  std::string rhs = join_texts(conclusions);
  std::string out = lhs;
  if (!lhs.empty()) out += " ";
  out += "=>";
  if (!rhs.empty()) out += " " + rhs;
  return out;
}

AtomSet Inference::atoms() const {
  AtomSet out = atoms_of_set(premises);
  out.merge(atoms_of_set(conclusions));
  return out;
}

std::string print_formula(const Formula& f) { return f.text(); }

std::string print_formula_set(const FormulaSet& formulas) { return join_texts(formulas); }

Atom fresh_variable(const AtomSet& avoid) {
  for (std::size_t i = 0;; ++i) {
    Atom candidate = Atom::var("p" + std::to_string(i));
    if (!avoid.contains(candidate)) return candidate;
  }
}

Formula conjoin(const std::vector<Formula>& parts) {
  if (parts.empty()) return Formula::top();
  Formula acc = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) acc = Formula::conj(acc, parts[i]);
  return acc;
}

Formula disjoin(const std::vector<Formula>& parts) {
  if (parts.empty()) return Formula::bot();
  Formula acc = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) acc = Formula::disj(acc, parts[i]);
  return acc;
}

Formula conjoin(const FormulaSet& parts) {
  return conjoin(std::vector<Formula>(parts.begin(), parts.end()));
}

}  // namespace mixcons
