#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "preflab/preference.hpp"

namespace preflab {

/** The extended preference lattice over m alternatives: all weak orders
 * plus the contradictory element as bottom and full indifference as top.
 *
 * The order is by strictness: r <= s when r has at least every strict
 * preference of s. Bottom is the contradictory element, top the
 * all-indifferent order. Meet is the glb, join the lub; both always exist.
 */

bool leq(const PreferenceRelation& r, const PreferenceRelation& s);

// Glb: intersection of the two weak-preference relations when it is
// complete, otherwise the contradictory element.
PreferenceRelation meet(const PreferenceRelation& r, const PreferenceRelation& s);

// Lub: transitive closure of the union of the weak-preference relations.
PreferenceRelation join(const PreferenceRelation& r, const PreferenceRelation& s);

// Join on orders; full indifference as soon as either side is
// contradictory. Not the lub: it skips every order above a contradiction.
PreferenceRelation join_plus(const PreferenceRelation& r, const PreferenceRelation& s);

// Swaps bottom and top; otherwise flips every strict preference while
// keeping indifferences. An involution, and a complement for meet/join.
PreferenceRelation negate(const PreferenceRelation& r);

// All weak orders over the given alternatives in lexicographic level-vector
// order. Counts by m: 1, 3, 13, 75, 541, ...
std::vector<WeakOrder> enumerate_weak_orders(const AlternativeSet& alts);

/** Table-backed carrier for one alternative set.
 *
 * Ids 0..num_orders()-1 name the weak orders in enumeration order and
 * cycle_id() == num_orders() names the contradictory element. All lattice
 * operations become O(1) lookups; exhaustive verifiers work on ids.
 */
class PrefLattice {
 public:
  explicit PrefLattice(AlternativeSet alts);

  const AlternativeSet& alternatives() const { return alts_; }
  int num_orders() const { return n_orders_; }
  int num_relations() const { return n_orders_ + 1; }
  int cycle_id() const { return n_orders_; }
  int top_id() const { return top_id_; }
  int pair_count() const { return alts_.pair_count(); }
  const std::vector<std::pair<int, int>>& pair_layout() const { return layout_; }

  const PreferenceRelation& relation(int id) const { return relations_[static_cast<size_t>(id)]; }
  int id_of(const PreferenceRelation& r) const;

  int meet(int a, int b) const { return meet_[idx(a, b)]; }
  int join(int a, int b) const { return join_[idx(a, b)]; }
  int join_plus(int a, int b) const { return join_plus_[idx(a, b)]; }
  int negate(int a) const { return neg_[static_cast<size_t>(a)]; }
  bool leq(int a, int b) const { return leq_[idx(a, b)] != 0; }

  bool is_order(int id) const { return id != cycle_id(); }

  // Digit of an order at one layout position; orders only.
  Digit digit(int order_id, int pair) const {
    return digits_[static_cast<size_t>(order_id) * static_cast<size_t>(npairs_) +
                   static_cast<size_t>(pair)];
  }
  // Id of the relation a digit tuple decodes to (cycle_id for intransitive).
  int decode_digits(std::span<const Digit> digits) const;

  std::string format(int id) const;
  int parse(std::string_view chain) const;

 private:
  size_t idx(int a, int b) const {
    return static_cast<size_t>(a) * static_cast<size_t>(n_orders_ + 1) + static_cast<size_t>(b);
  }

  AlternativeSet alts_;
  int n_orders_ = 0;
  int npairs_ = 0;
  int top_id_ = 0;
  std::vector<std::pair<int, int>> layout_;
  std::vector<PreferenceRelation> relations_;
  std::vector<int> meet_, join_, join_plus_, neg_;
  std::vector<std::uint8_t> leq_;
  std::vector<Digit> digits_;
  std::map<std::vector<std::uint8_t>, int> id_by_levels_;
  std::vector<int> decode_table_;  // packed base-3 digit key -> id, when small
};

}  // namespace preflab
