#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

#include <optional>
#include <string>
#include <vector>

using namespace rsn;

namespace {

DeMorganAlgebra trivial_algebra() {
  return DeMorganAlgebra(validate_lattice({"z"}, {Bitset(1, 1)}), {0});
}

template <class F>
std::string precondition_law(F&& f) {
  try {
    f();
  } catch (const PreconditionError& e) {
    return e.law();
  }
  return "(no PreconditionError)";
}

}  // namespace

TEST_CASE("rough-set families materialize as lattices and algebras") {
  RoughSetLattice rs = enumerate_rs_generated(support::chain_relation(2));
  FiniteLattice l = to_finite_lattice(rs);
  CHECK(l.names() == std::vector<std::string>{"({},{})", "({},{1})", "({2},{1,2})",
                                              "({1,2},{1,2})"});
  DeMorganAlgebra a = rs_algebra(rs);
  CHECK(a.neg(0) == 3);  // c(emptyset pair) = top
  CHECK(a.neg(1) == 2);  // c((emptyset,{1})) = ({2},{1,2})
  CHECK(verify_algebra(a).nelson);

  DeMorganAlgebra abs = as_abstract(rs, "e");
  CHECK(abs.name(0) == "e0");
  CHECK(abs.name(3) == "e3");
  CHECK(abs.negation() == a.negation());
}

TEST_CASE("the constructed relation of the eight-element nelson algebra") {
  // this is the central oracle: R_J computed from the abstract algebra must
  // equal the hand-written double-cycle quasiorder, name for name
  CHECK(build_rj(support::nelson8_algebra()) == support::quasi5_relation());

  CHECK(precondition_law([] { build_rj(support::m3_algebra()); }) == "kleene");
}

TEST_CASE("full representation of the eight-element nelson algebra") {
  Representation rep = represent(support::nelson8_algebra());

  CHECK(rep.report.nelson);
  CHECK(!rep.report.lukasiewicz);
  CHECK(rep.j_list == std::vector<std::size_t>{1, 2, 4, 5, 6});
  CHECK(rep.rho == std::vector<std::size_t>{1, 2, 4, 1, 2});  // a b d a b
  CHECK(rep.universe.names() == std::vector<std::string>{"a", "b", "d", "e", "f"});
  CHECK(rep.relation == support::quasi5_relation());

  REQUIRE(rep.rs.size() == 8);
  const std::vector<std::string> expected = {"({},{})",
                                             "({},{a,e})",
                                             "({},{b,f})",
                                             "({},{a,b,e,f})",
                                             "({d},{a,b,d,e,f})",
                                             "({a,d,e},{a,b,d,e,f})",
                                             "({b,d,f},{a,b,d,e,f})",
                                             "({a,b,d,e,f},{a,b,d,e,f})"};
  for (std::size_t i = 0; i < expected.size(); ++i) CHECK(rep.rs.pair_name(i) == expected[i]);

  REQUIRE(rep.phi.size() == 5);
  CHECK(rep.phi[0] == RoughPair{make_bitset(5), make_bitset(5, {0, 3})});     // (∅,{a,e})
  CHECK(rep.phi[1] == RoughPair{make_bitset(5), make_bitset(5, {1, 4})});     // (∅,{b,f})
  CHECK(rep.phi[2] == RoughPair{make_bitset(5, {2}), support::letters(5).full_set()});
  CHECK(rep.phi[3] == RoughPair{make_bitset(5, {0, 2, 3}), support::letters(5).full_set()});
  CHECK(rep.phi[4] == RoughPair{make_bitset(5, {1, 2, 4}), support::letters(5).full_set()});

  // the canonical RS order happens to make the isomorphism the identity map
  CHECK(rep.iso == std::vector<std::size_t>{0, 1, 2, 3, 4, 5, 6, 7});

  CHECK(rep.verdicts.quasiorder);
  CHECK(rep.verdicts.order_iso);
  CHECK(rep.verdicts.star_compatible);
  CHECK(rep.verdicts.classes_match);
  CHECK(rep.verdicts.algebra_iso);
  CHECK(rep.verdicts.minimality);
  CHECK(rep.verdicts.all());
  CHECK(minimality_check(rep).ok());
}

TEST_CASE("representation preconditions name the first broken law") {
  CHECK(precondition_law([] { represent(support::kleene7_algebra()); }) == "condition_m");
  CHECK(precondition_law([] { represent(support::m3_algebra()); }) == "kleene");
  CHECK(precondition_law([] { represent(trivial_algebra()); }) == "nontrivial");
  CHECK(precondition_law([] { build_rj(trivial_algebra()); }) == "nontrivial");
}

TEST_CASE("three-element chain represents over the full relation on two points") {
  Representation rep = represent(support::chain3_algebra());
  CHECK(rep.universe.names() == std::vector<std::string>{"m", "1"});
  BinaryRelation expected =
      build_relation(rep.universe, {{"m", "1"}, {"1", "m"}}, ClosureMode::reflexive);
  CHECK(rep.relation == expected);
  CHECK(rep.rs.size() == 3);
  CHECK(rep.iso == std::vector<std::size_t>{0, 1, 2});
  CHECK(rep.verdicts.all());
  CHECK(rep.report.lukasiewicz);
}

TEST_CASE("boolean degeneracy, four criteria evaluated independently") {
  SUBCASE("boolean algebras: identity relation, powerset family") {
    Representation rep = represent(support::boolean_algebra(2));
    CHECK(rep.relation.is_partial_order());
    for (std::size_t x = 0; x < rep.relation.size(); ++x)
      CHECK(rep.relation.successors(x).count() == 1);  // identity relation
    CHECK(rep.rs.size() == 4);
    CHECK(rep.verdicts.all());

    BooleanCharacterization one = boolean_characterization(support::boolean_algebra(1));
    CHECK(one.all());
    BooleanCharacterization two = boolean_characterization(support::boolean_algebra(2));
    CHECK(two.all());
    BooleanCharacterization three = boolean_characterization(support::boolean_algebra(3));
    CHECK(three.all());
  }
  SUBCASE("non-boolean nelson algebras fail all four criteria") {
    BooleanCharacterization c = boolean_characterization(support::nelson8_algebra());
    CHECK(!c.r_partial_order);
    CHECK(!c.r_identity);
    CHECK(!c.rs_powerset);
    CHECK(!c.algebra_boolean);
    CHECK(!c.all());

    BooleanCharacterization chain = boolean_characterization(support::chain3_algebra());
    CHECK(!chain.all());
    CHECK(!chain.r_identity);
  }
}

TEST_CASE("minimality check rejects oversized kernel classes") {
  Representation rep = represent(support::nelson8_algebra());
  CHECK(minimality_check(rep).ok());

  // swap in a non-minimal relation over the same universe: one kernel class
  rep.relation = BinaryRelation(rep.universe, std::vector<Bitset>(5, rep.universe.full_set()));
  LawCheck broken = minimality_check(rep);
  CHECK(broken.status == CheckStatus::fail);
  CHECK(broken.witness == std::vector<std::string>{"a"});
}

TEST_CASE("semisimplicity is exactly the existence of delta") {
  CHECK(semisimple_check(support::chain3_algebra()).ok());

  RoughSetLattice rs =
      enumerate_rs_generated(support::equivalence_from_blocks(3, {{0}, {1, 2}}));
  CHECK(semisimple_check(rs_algebra(rs)).ok());
  CHECK(semisimple_check(support::boolean_algebra(2)).ok());

  CHECK(precondition_law([] { semisimple_check(support::nelson8_algebra()); }) == "semisimple");
  CHECK(precondition_law([] { semisimple_check(support::kleene7_algebra()); }) == "semisimple");
}

TEST_CASE("round trip: every small rough-set algebra represents cleanly") {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (const BinaryRelation& r : enumerate_preorders(support::letters(n))) {
      RoughSetLattice rs = enumerate_rs_generated(r);
      DeMorganAlgebra a = as_abstract(rs);  // opaque names: nothing leaks from r
      Representation rep = represent(a);
      CHECK(rep.verdicts.all());
      CHECK(rep.rs.size() == rs.size());
      // delta exists exactly when the reconstructed relation is an equivalence
      CHECK(rep.report.lukasiewicz == rep.relation.is_equivalence());
    }
  }
}
