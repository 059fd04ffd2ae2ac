#include <doctest.h>

#include "brute.hpp"
#include "helpers.hpp"
#include "mixcons/consequence.hpp"
#include "mixcons/random.hpp"

using namespace mixcons;
using namespace testing;

namespace {

const Inference kBridge = S("p | (q & ~q) => p & (q | ~q)");

brute::Standard reference(Logic l) {
  switch (l) {
    case Logic::K3:
      return brute::K3;
    case Logic::LP:
      return brute::LP;
    case Logic::ST:
      return brute::ST;
    case Logic::TS:
      return brute::TS;
  }
  return brute::K3;
}

}  // namespace

TEST_CASE("standards") {
  CHECK(LogicStandard::of(Logic::ST).premise_designated == kStrict);
  CHECK(LogicStandard::of(Logic::ST).conclusion_designated == kTolerant);
  CHECK(LogicStandard::of(Logic::TS).premise_designated == kTolerant);
  CHECK(parse_logic("Lp") == Logic::LP);
  CHECK_FALSE(parse_logic("s4").has_value());
}

TEST_CASE("satisfaction on the bridge inference") {
  CHECK_FALSE(satisfies(LogicStandard::of(Logic::K3), Valuation{{"p", One}, {"q", Half}}, kBridge));
  CHECK_FALSE(satisfies(LogicStandard::of(Logic::LP), Valuation{{"p", Zero}, {"q", Half}}, kBridge));
  for (Logic l : kAllLogics) {
    CHECK_FALSE(satisfies(LogicStandard::of(l), Valuation{}, S("=>")));
    CHECK_FALSE(antisatisfies(LogicStandard::of(l), Valuation{}, S("=>")));
  }
}

TEST_CASE("validity examples") {
  CHECK(valid(Logic::ST, kBridge).holds);
  CHECK_FALSE(valid(Logic::K3, kBridge).holds);
  CHECK_FALSE(valid(Logic::LP, kBridge).holds);

  const Verdict ts = valid(Logic::TS, S("p => p"));
  CHECK_FALSE(ts.holds);
  CHECK(ts.countermodel == Valuation{{"p", Half}});

  CHECK_FALSE(valid(Logic::K3, S("=> p | ~p")).holds);
  CHECK(valid(Logic::LP, S("=> p | ~p")).holds);
}

TEST_CASE("countermodel is the first failing valuation") {
  const Verdict k3 = valid(Logic::K3, kBridge);
  REQUIRE(k3.countermodel);
  CHECK(*k3.countermodel == Valuation{{"p", One}, {"q", Half}});
  const Verdict lp = valid(Logic::LP, kBridge);
  CHECK(*lp.countermodel == Valuation{{"p", Zero}, {"q", Half}});
}

TEST_CASE("ST is not transitive") {
  CHECK(valid(Logic::ST, S("T => L")).holds);
  CHECK(valid(Logic::ST, S("L => F")).holds);
  CHECK_FALSE(valid(Logic::ST, S("T => F")).holds);
}

TEST_CASE("TS is not reflexive") {
  CHECK_FALSE(valid(Logic::TS, S("p => p")).holds);
  CHECK(valid(Logic::TS, S("p & F => q")).holds);
}

TEST_CASE("antisatisfaction and antivalidity") {
  const Inference inf = S("p => p & q");
  CHECK_FALSE(antisatisfies(LogicStandard::of(Logic::ST), Valuation{{"p", Half}, {"q", Half}}, inf));
  CHECK(antisatisfies(LogicStandard::of(Logic::LP), Valuation{{"p", Zero}, {"q", One}}, inf));
  CHECK(antivalid(Logic::LP, inf).holds);
  const Verdict st = antivalid(Logic::ST, inf);
  CHECK_FALSE(st.holds);
  REQUIRE(st.countermodel);
  CHECK(eval(F("p"), *st.countermodel) == eval(F("q"), *st.countermodel));
  CHECK(antivalid(Logic::TS, S("p => p")).holds);
}

TEST_CASE("theorems and antitheorems") {
  CHECK(is_antitheorem(Logic::K3, {F("p & ~p")}));
  CHECK_FALSE(is_antitheorem(Logic::LP, {F("p & ~p")}));
  CHECK(is_antitheorem(Logic::LP, {F("p & F")}));
  CHECK(is_theorem(Logic::LP, {F("p | ~p")}));
  CHECK_FALSE(is_theorem(Logic::K3, {F("p | ~p")}));
  CHECK(is_theorem(Logic::K3, {F("q | T")}));
}

TEST_CASE("constant-valued members") {
  CHECK(constant_valued(F("p & F")) == Zero);
  CHECK_FALSE(constant_valued(F("p | ~p")).has_value());
  CHECK(constant_valued(F("L")) == Half);
  CHECK(is_trivial_theorem_or_antitheorem({F("p & F")}));
  CHECK_FALSE(is_trivial_theorem_or_antitheorem({F("p | ~p")}));
  CHECK(is_trivial_theorem_or_antitheorem({F("p"), F("L")}));
}

TEST_CASE("antitheorem characterizations agree") {
  CHECK(antitheorem_equivalences_hold(LogicStandard::of(Logic::K3), {F("p & ~p")}));
  CHECK(antitheorem_equivalences_hold(LogicStandard::of(Logic::LP), {F("p")}));
  CHECK(antitheorem_equivalences_hold(LogicStandard::of(Logic::ST), {F("F")}));
  CHECK(theorem_equivalences_hold(LogicStandard::of(Logic::LP), {F("p | ~p")}));
}

TEST_CASE("classical validity") {
  CHECK(classically_valid(S("=> p | ~p")).holds);
  CHECK_FALSE(classically_valid(S("p => q")).holds);
  CHECK(classically_valid(kBridge).holds);
}

TEST_CASE("validity and antivalidity agree with the reference checker") {
  FormulaGenerator gen({}, 21);
  for (int i = 0; i < 500; ++i) {
    const Inference inf = gen.inference();
    for (Logic l : kAllLogics) {
      REQUIRE(valid(l, inf).holds == brute::valid(reference(l), inf));
      REQUIRE(antivalid(l, inf).holds == brute::antivalid(reference(l), inf));
    }
  }
}

TEST_CASE("extra variables do not change validity") {
  const Inference inf = S("p => p | q");
  AtomSet wide = inf.atoms();
  wide.insert(Atom::var("z"));
  for (Logic l : kAllLogics)
    CHECK(valid(l, inf).holds == valid_over(LogicStandard::of(l), inf, wide).holds);
}
