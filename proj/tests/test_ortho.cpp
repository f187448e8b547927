#include <string>

#include <doctest.h>

#include "preflab/ortho.hpp"

using namespace preflab;

TEST_CASE("boolean algebras have the expected shape") {
  for (int k = 1; k <= 3; ++k) {
    const OrthoLattice b = boolean_algebra(k);
    CHECK(b.size == (1 << (1 << k)));
    CHECK(b.bot == 0);
    CHECK(b.top == b.size - 1);
    for (int i = 0; i < k; ++i) {
      const int atom = boolean_atom(k, i);
      CHECK(atom > 0);
      CHECK(atom < b.size);
      CHECK(b.meet(atom, b.neg(atom)) == b.bot);
      CHECK(b.join(atom, b.neg(atom)) == b.top);
    }
  }
  CHECK(boolean_algebra(1).size == 4);
  CHECK(boolean_algebra(2).size == 16);
  CHECK(boolean_algebra(3).size == 256);
}

TEST_CASE("boolean algebras satisfy every lattice law including antitonicity") {
  for (int k = 1; k <= 3; ++k) {
    const LawReport rep = check_lattice_laws(boolean_algebra(k));
    for (const auto& law : rep.results) {
      INFO(law.law, " ", law.witness);
      CHECK(law.holds);
    }
    CHECK(rep.all_hold);
    CHECK(rep.complement_antitone);
  }
}

TEST_CASE("the preference lattice keeps the laws but loses antitonicity at m=3") {
  const PrefLattice two(AlternativeSet::letters(2));
  const LawReport rep2 = check_lattice_laws(preference_ortho_view(two));
  CHECK(rep2.all_hold);
  CHECK(rep2.complement_antitone);

  const PrefLattice three(AlternativeSet::letters(3));
  const LawReport rep3 = check_lattice_laws(preference_ortho_view(three));
  for (const auto& law : rep3.results) {
    INFO(law.law, " ", law.witness);
    CHECK(law.holds);
  }
  CHECK(rep3.all_hold);
  CHECK_FALSE(rep3.complement_antitone);
  CHECK_FALSE(rep3.antitone_witness.empty());
}

TEST_CASE("profile spaces inherit the laws coordinatewise") {
  const PrefLattice lat(AlternativeSet::letters(2));
  const ProfileSpace space(lat, 2);
  const LawReport rep = check_lattice_laws(profile_ortho_view(space));
  CHECK(rep.all_hold);
  CHECK(rep.complement_antitone);

  const PrefLattice lat3(AlternativeSet::letters(3));
  const ProfileSpace space3(lat3, 2);
  const LawReport rep3 = check_lattice_laws(profile_ortho_view(space3));
  CHECK(rep3.all_hold);
  CHECK_FALSE(rep3.complement_antitone);
}

TEST_CASE("meet-bottom and complement-order agree exactly on boolean algebras") {
  for (int k = 1; k <= 3; ++k) {
    const OrthoLattice b = boolean_algebra(k);
    const ClassicalLemmaReport rep = check_classical_lemma(b);
    CHECK(rep.holds);
    CHECK(rep.pairs_checked == static_cast<long long>(b.size) * b.size);
    CHECK(rep.witness.empty());
  }
}

TEST_CASE("the agreement fails on the preference lattice from m=3") {
  const PrefLattice two(AlternativeSet::letters(2));
  CHECK(check_classical_lemma(preference_ortho_view(two)).holds);

  const PrefLattice three(AlternativeSet::letters(3));
  const OrthoLattice view = preference_ortho_view(three);
  const ClassicalLemmaReport rep = check_classical_lemma(view);
  CHECK_FALSE(rep.holds);
  CHECK_FALSE(rep.witness.empty());

  // a concrete disagreeing pair, checked from first principles: the two
  // linear orders clash on (a,b) so their meet collapses, yet the first is
  // not below the complement of the second
  const int x = three.parse("a<b<c");
  const int y = three.parse("b<a<c");
  CHECK(three.meet(x, y) == three.cycle_id());
  CHECK(three.negate(y) == three.parse("c<a<b"));
  CHECK_FALSE(three.leq(x, three.negate(y)));
}

TEST_CASE("law checking reports a witness when a law is broken") {
  // a deliberately wrong complement: identity instead of an involution pair
  OrthoLattice b = boolean_algebra(1);
  b.neg = [](int x) { return x; };
  const LawReport rep = check_lattice_laws(b);
  CHECK_FALSE(rep.all_hold);
  bool complement_law_failed = false;
  for (const auto& law : rep.results) {
    if (!law.holds) {
      CHECK_FALSE(law.witness.empty());
      if (law.law.find("complement") != std::string::npos) complement_law_failed = true;
    }
  }
  CHECK(complement_law_failed);
}
