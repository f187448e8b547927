#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "preflab/profile.hpp"

namespace preflab {

/** A finite bounded lattice with a complement, presented operationally.
 *
 * Elements are dense ids 0..size-1. The structure carries its claimed
 * order, meet, join and complement; `check_lattice_laws` verifies which
 * laws actually hold, including glb/lub correctness against a brute-force
 * scan of the order relation.
 */
struct OrthoLattice {
  int size = 0;
  std::function<std::string(int)> name;
  std::function<bool(int, int)> leq;
  std::function<int(int, int)> meet;
  std::function<int(int, int)> join;
  std::function<int(int)> neg;
  int bot = 0;
  int top = 0;
};

// The 2^(2^k) truth functions on k atoms (1 <= k <= 4), ordered pointwise.
// Element ids are the truth tables themselves, read as bitmasks over the
// 2^k assignments. atom(i) is the projection onto input bit i.
OrthoLattice boolean_algebra(int atoms);
int boolean_atom(int atoms, int i);

// View of the extended preference lattice for the generic checkers.
OrthoLattice preference_ortho_view(const PrefLattice& lat);

// Coordinatewise view of a profile space over full handles. The space must
// outlive the view.
OrthoLattice profile_ortho_view(const ProfileSpace& space);

struct LawResult {
  std::string law;
  bool holds = true;
  std::string witness;  // first counterexample, rendered with element names
};

struct LawReport {
  std::vector<LawResult> results;
  bool all_hold = true;
  // Antitonicity of the complement is reported separately: the preference
  // lattice keeps every other law yet its negation is monotone, not
  // antitone, as soon as m >= 3.
  bool complement_antitone = true;
  std::string antitone_witness;
};

/** Checks, by exhaustive enumeration: partial-order laws, meet/join equal
 * brute-force glb/lub, commutativity, associativity, idempotence,
 * absorption, bounds, complement laws, involution and the order relation's
 * agreement with meet and join. Also evaluates complement antitonicity and
 * reports it on the side.
 */
LawReport check_lattice_laws(const OrthoLattice& l);

struct ClassicalLemmaReport {
  bool holds = true;
  long long pairs_checked = 0;
  std::string witness;  // first pair where A^B=bot and A<=~B disagree
};

// Whether "A ^ B = bot  iff  A <= ~B" holds for every pair. True in every
// Boolean algebra; fails on the preference lattice from m = 3 up.
ClassicalLemmaReport check_classical_lemma(const OrthoLattice& l);

}  // namespace preflab
