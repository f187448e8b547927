#pragma once

#include <string>

#include "preflab/srs.hpp"
#include "preflab/swf.hpp"

namespace preflab {

/** The three application families of the social-choice self-reference
 * systems. Each acts on a profile p and a relation r at one distinguished
 * coordinate i:
 *   kPlus   p becomes (p_1, ..., p_i + r, ..., p_N)
 *   kMeet   p becomes (p_1, ..., p_i ^ r, ..., p_N)
 *   kOmega  p becomes (c,  ..., p_i ^ r, ..., c)
 * where + is the contradiction-absorbing join and c the contradictory
 * element.
 */
enum class FamilyKind { kPlus, kMeet, kOmega };

struct AppFamily {
  FamilyKind kind = FamilyKind::kOmega;
  int i = 0;  // distinguished coordinate, 0-based
};

std::string family_name(const AppFamily& fam);  // "+1", "^1", "omega_1" (1-based index)
AppFamily parse_family(std::string_view name, int n);

/** Builds the self-reference system whose expressions are all extended
 * profiles of w's space (full handles), whose constants are the relation
 * ids, whose encoding is w itself, and whose application is the family
 * action. star(p, q) = app(p, w(q)).
 */
Srs make_srs(const Swf& w, const AppFamily& fam);

// Full handle of the indicator (c, ..., top, ..., c) with top at i.
int indicator_handle(const ProfileSpace& space, int i);

struct ProfileEmbedding {
  std::vector<int> emb;                 // relation id -> full handle (c,...,r,...,c)
  std::function<int(int, int)> comp;    // coordinatewise meet of full handles
};

/** The embedding pinned to coordinate i: emb_i(r) spikes r at i over
 * contradictory fill, comp is the coordinatewise meet. Its composition is
 * associative because the lattice meet is; the pair satisfies the
 * embedding equation for the kOmega family under any rule.
 */
ProfileEmbedding make_embedding(const ProfileSpace& space, int i);

// make_srs output packaged with make_embedding's pair.
EmbeddableSrs make_embeddable_srs(const Swf& w, const AppFamily& fam);

/** Evaluates [every valid p satisfies star(p, p) = p in (w, +_i)] and
 * [w has a dictator at i]; returns whether the two agree. Agreement is a
 * theorem, so a false return indicates an implementation fault.
 */
bool check_dictator_iff_fixed_point(const Swf& w, int i);

/** Evaluates [every valid p satisfies star(Y_i, p) = star(p, p) in
 * (w, Omega_i), Y_i the indicator] and [w has a dictator at i]; returns
 * whether the two agree. Agreement is a theorem.
 */
bool check_dictator_iff_diagonaliser(const Swf& w, int i);

}  // namespace preflab
