#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "preflab/ortho.hpp"
#include "preflab/srs.hpp"

namespace preflab {

/** A set of valid elements inside a lattice-structured carrier: a subset
 * excluding the bottom element. Two elements are consistent when their meet
 * is again a member. The host supplies meet, negation and order for the
 * quasi checks; only meet and membership matter for consistency itself.
 */
struct ValidSubset {
  OrthoLattice host;
  std::vector<std::uint8_t> member;  // one flag per host element

  bool contains(int x) const { return member[static_cast<std::size_t>(x)] != 0; }
  std::vector<int> members() const;
  long long member_count() const;
};

// Throws DimensionError when the bottom element is included or a member is
// out of range.
ValidSubset make_valid_subset(OrthoLattice host, std::span<const int> members);

// Members are exactly the valid profiles (every coordinate a weak order).
ValidSubset valid_profiles_subset(const ProfileSpace& space);

/** Members are the profiles whose i-th coordinate is a weak order; other
 * coordinates are unconstrained. Consistency then tests only the
 * distinguished coordinate, matching rules that read nothing else.
 */
ValidSubset coordinate_order_subset(const ProfileSpace& space, int i);

// meet(s, t) is a member.
bool consistent(const ValidSubset& d, int s, int t);

struct ConsistencyRespectReport {
  bool holds = true;
  // First member pair (in scan order d <= d') where the biconditional
  // breaks, with the direction that failed.
  std::optional<std::pair<int, int>> witness;
  // True: the pair is consistent but the star images are not.
  // False: the pair is inconsistent but the star images are consistent.
  bool forward_failed = false;
};

/** Whether star(y, d) preserves and reflects consistency:
 * consistent(d, d') iff consistent(star(y,d), star(y,d')) over every
 * unordered member pair, diagonal included.
 */
ConsistencyRespectReport is_consistency_respecting(const Srs& s, int y, const ValidSubset& d);

struct QuasiFlags {
  bool quasi_consistent = false;     // d <= neg(star(y, neg d))
  bool quasi_godel_sentence = false; // d <= neg(star(y, d))
  bool quasi_complete = false;       // neg(star(y,d)) inconsistent with neg(star(y, neg d))
};

QuasiFlags quasi_flags(const Srs& s, int y, int d, const ValidSubset& sub);

struct QuasiGodelianReport {
  bool quasi_godelian = false;
  std::optional<int> witness;  // first member that is a quasi-Godel sentence
                               // without both remaining flags holding
};

/** Whether some member d is a quasi-Godel sentence with respect to y while
 * quasi-consistency and quasi-completeness fail to hold jointly for (y, d).
 */
QuasiGodelianReport is_quasi_godelian(const Srs& s, int y, const ValidSubset& sub);

}  // namespace preflab
