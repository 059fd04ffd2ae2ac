#include "mixcons/duality.hpp"

#include <algorithm>
#include <array>

#include "mixcons/decomposition.hpp"

namespace mixcons {

Formula op_dual(const Formula& f) {
  switch (f.kind()) {
    case Kind::Var:
    case Kind::Lambda:
      return f;
    case Kind::Top:
      return Formula::bot();
    case Kind::Bot:
      return Formula::top();
    case Kind::Not:
      return Formula::negation(op_dual(f.sub()));
    case Kind::And:
      return Formula::disj(op_dual(f.left()), op_dual(f.right()));
    case Kind::Or:
      return Formula::conj(op_dual(f.left()), op_dual(f.right()));
  }
  throw std::logic_error("unknown formula kind");
}

FormulaSet op_dual(const FormulaSet& formulas) {
  FormulaSet out;
  for (const auto& f : formulas) out.insert(op_dual(f));
  return out;
}

Inference op_dual_pointwise(const Inference& inf) {
  return Inference{op_dual(inf.premises), op_dual(inf.conclusions)};
}

Inference op_dual_inference(const Inference& inf) {
  return Inference{op_dual(inf.conclusions), op_dual(inf.premises)};
}

namespace {

FormulaSet negate_all(const FormulaSet& formulas) {
  FormulaSet out;
  for (const auto& f : formulas) out.insert(Formula::negation(f));
  return out;
}

}  // namespace

Inference neg_dual_inference(const Inference& inf) {
  return Inference{negate_all(inf.conclusions), negate_all(inf.premises)};
}

Inference negate_pointwise(const Inference& inf) {
  return Inference{negate_all(inf.premises), negate_all(inf.conclusions)};
}

Inference invert(const Inference& inf) { return Inference{inf.conclusions, inf.premises}; }

std::string_view to_string(InferenceSet set) {
  switch (set) {
    case InferenceSet::K3Plus:
      return "K3+";
    case InferenceSet::LPPlus:
      return "LP+";
    case InferenceSet::STPlus:
      return "ST+";
    case InferenceSet::TSPlus:
      return "TS+";
    case InferenceSet::K3Minus:
      return "K3-";
    case InferenceSet::LPMinus:
      return "LP-";
    case InferenceSet::STMinus:
      return "ST-";
    case InferenceSet::TSMinus:
      return "TS-";
  }
  return "?";
}

bool direct_membership(InferenceSet set, const Inference& inf) {
  switch (set) {
    case InferenceSet::K3Plus:
      return valid(Logic::K3, inf).holds;
    case InferenceSet::LPPlus:
      return valid(Logic::LP, inf).holds;
    case InferenceSet::STPlus:
      return valid(Logic::ST, inf).holds;
    case InferenceSet::TSPlus:
      return valid(Logic::TS, inf).holds;
    case InferenceSet::K3Minus:
      return antivalid(Logic::K3, inf).holds;
    case InferenceSet::LPMinus:
      return antivalid(Logic::LP, inf).holds;
    case InferenceSet::STMinus:
      return antivalid(Logic::ST, inf).holds;
    case InferenceSet::TSMinus:
      return antivalid(Logic::TS, inf).holds;
  }
  throw std::logic_error("unknown inference set");
}

namespace {

using enum InferenceSet;

struct Term {
  bool dualized;
  InferenceSet base;

  bool contains(const Inference& inf) const {
    return direct_membership(base, dualized ? op_dual_pointwise(inf) : inf);
  }
};

enum class Shape { Dual, Product, Sum };

// Products of validities come from the ST construction on the inference
// itself; products of antivalidities from the same construction on its inverse.
enum class ConnectorSource { Forward, Inverse };

struct Route {
  std::string_view name;
  InferenceSet target;
  Shape shape;
  Term left;
  Term right;  // unused for Dual
  ConnectorSource source = ConnectorSource::Forward;
};

constexpr std::array<Route, 16> kRoutes = {{
    {"K3+=~LP-", K3Plus, Shape::Dual, {true, LPMinus}, {}},
    {"LP+=~K3-", LPPlus, Shape::Dual, {true, K3Minus}, {}},
    {"ST+=~TS-", STPlus, Shape::Dual, {true, TSMinus}, {}},
    {"TS+=~ST-", TSPlus, Shape::Dual, {true, STMinus}, {}},
    {"K3-=~LP+", K3Minus, Shape::Dual, {true, LPPlus}, {}},
    {"LP-=~K3+", LPMinus, Shape::Dual, {true, K3Plus}, {}},
    {"ST-=~TS+", STMinus, Shape::Dual, {true, TSPlus}, {}},
    {"TS-=~ST+", TSMinus, Shape::Dual, {true, STPlus}, {}},
    {"ST+=K3+|~K3-", STPlus, Shape::Product, {false, K3Plus}, {true, K3Minus}},
    {"ST+=~LP-|LP+", STPlus, Shape::Product, {true, LPMinus}, {false, LPPlus}},
    {"TS+=~K3-+K3+", TSPlus, Shape::Sum, {true, K3Minus}, {false, K3Plus}},
    {"TS+=LP++~LP-", TSPlus, Shape::Sum, {false, LPPlus}, {true, LPMinus}},
    {"ST-=K3-+~K3+", STMinus, Shape::Sum, {false, K3Minus}, {true, K3Plus}},
    {"ST-=~LP++LP-", STMinus, Shape::Sum, {true, LPPlus}, {false, LPMinus}},
    {"TS-=~K3+|K3-", TSMinus, Shape::Product, {true, K3Plus}, {false, K3Minus},
     ConnectorSource::Inverse},
    {"TS-=LP-|~LP+", TSMinus, Shape::Product, {false, LPMinus}, {true, LPPlus},
     ConnectorSource::Inverse},
}};

constexpr auto kRouteNames = [] {
  std::array<std::string_view, kRoutes.size()> names{};
  for (std::size_t i = 0; i < kRoutes.size(); ++i) names[i] = kRoutes[i].name;
  return names;
}();

const Route* find_route(std::string_view name) {
  auto it = std::find_if(kRoutes.begin(), kRoutes.end(),
                         [&](const Route& r) { return r.name == name; });
  return it == kRoutes.end() ? nullptr : &*it;
}

bool through_product(const Route& route, const Inference& inf) {
  const Inference source = route.source == ConnectorSource::Forward ? inf : invert(inf);
  ProductOutcome outcome = st_connecting_formula(source);
  if (!outcome.succeeded()) return false;
  const Formula& middle = outcome.witness->connector;
  return route.left.contains(Inference{inf.premises, {middle}}) &&
         route.right.contains(Inference{{middle}, inf.conclusions});
}

bool through_sum(const Route& route, const Inference& inf) {
  const Formula pivot = fresh_variable(inf.atoms()).to_formula();
  return route.left.contains(Inference{inf.premises, {pivot}}) ||
         route.right.contains(Inference{{pivot}, inf.conclusions});
}

}  // namespace

std::span<const std::string_view> route_names() { return kRouteNames; }

std::optional<InferenceSet> route_target(std::string_view route) {
  if (const Route* r = find_route(route)) return r->target;
  return std::nullopt;
}

bool dual_set_membership(InferenceSet target, const Inference& inf, std::string_view route) {
  const Route* r = find_route(route);
  if (r == nullptr || r->target != target) throw UnknownRoute(std::string(route));
  switch (r->shape) {
    case Shape::Dual:
      return r->left.contains(inf);
    case Shape::Product:
      return through_product(*r, inf);
    case Shape::Sum:
      return through_sum(*r, inf);
  }
  throw std::logic_error("unknown route shape");
}

}  // namespace mixcons
