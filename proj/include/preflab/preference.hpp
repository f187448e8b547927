#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "preflab/alternatives.hpp"

namespace preflab {

/** A weak order (total preorder) over m alternatives, stored as its
 * normalized level vector: level 0 holds the most preferred alternatives
 * and the set of used levels is exactly {0, ..., depth()-1}.
 *
 * The level vector is the canonical form; equality and the enumeration
 * order are both plain lexicographic comparison of level vectors.
 */
class WeakOrder {
 public:
  // Dense-ranks an arbitrary rank vector (lower rank = more preferred).
  static WeakOrder from_levels(std::span<const int> ranks);

  static WeakOrder indifferent(int m);

  int size() const { return static_cast<int>(levels_.size()); }
  int level(int a) const { return levels_[static_cast<size_t>(a)]; }
  // Number of distinct indifference classes.
  int depth() const { return depth_; }

  bool prefers(int a, int b) const { return level(a) < level(b); }
  bool ties(int a, int b) const { return level(a) == level(b); }

  // True when this order has every strict preference of `coarser`.
  bool refines(const WeakOrder& coarser) const;

  // Same indifference classes, reversed class order.
  WeakOrder reversed() const;

  const std::vector<std::uint8_t>& levels() const { return levels_; }

  bool operator==(const WeakOrder&) const = default;
  // Lexicographic on level vectors; fixes the enumeration order.
  bool operator<(const WeakOrder& o) const { return levels_ < o.levels_; }

 private:
  explicit WeakOrder(std::vector<std::uint8_t> lv);

  std::vector<std::uint8_t> levels_;
  int depth_ = 0;
};

/** Either a weak order or the single collapsed contradictory element.
 *
 * Every finite preference cycle is identified with one bottom element per
 * alternative count; it carries no internal structure of its own.
 */
class PreferenceRelation {
 public:
  PreferenceRelation(WeakOrder w) : m_(w.size()), order_(std::move(w)) {}

  static PreferenceRelation cycle(int m);

  bool is_cycle() const { return !order_.has_value(); }
  bool is_order() const { return order_.has_value(); }
  const WeakOrder& order() const;
  int size() const { return m_; }

  bool operator==(const PreferenceRelation&) const = default;

 private:
  PreferenceRelation(int m, std::optional<WeakOrder> w)
      : m_(m), order_(std::move(w)) {}

  int m_ = 0;
  std::optional<WeakOrder> order_;
};

/** Chain notation: labels joined by '<' between levels and '~' inside a
 * level ("a<b~c"); the contradictory element renders as "CYCLE". Parsing
 * requires every alternative exactly once.
 */
std::string format_chain(const PreferenceRelation& r, const AlternativeSet& alts);
std::string format_chain(const WeakOrder& w, const AlternativeSet& alts);
PreferenceRelation parse_chain(std::string_view text, const AlternativeSet& alts);

/// One trit per unordered alternative pair.
enum class Digit : std::uint8_t {
  kFirst = 0,   // the pair's first alternative is strictly preferred
  kSecond = 1,  // the pair's second alternative is strictly preferred
  kTie = 2,     // indifference
};

char digit_char(Digit d);
std::optional<Digit> digit_of_char(char c);

/** The fixed pair layout used by digit tuples.
 *
 * Pairs are oriented and listed cyclically: first all (x, x+1 mod m) steps,
 * then longer strides. At m = 3 the layout is (a,b), (b,c), (c,a), which
 * makes the all-zero tuple the canonical three-cycle a<b, b<c, c<a.
 */
std::vector<std::pair<int, int>> digit_pair_layout(int m);

struct TernaryDigits {
  int m = 0;
  std::vector<Digit> digits;  // digit_pair_layout(m).size() entries

  bool operator==(const TernaryDigits&) const = default;
};

// Orders only; the contradictory element has no digit tuple.
TernaryDigits digits_encode(const PreferenceRelation& r);
TernaryDigits digits_encode(const WeakOrder& w);

// Total: intransitive tuples collapse to the contradictory element.
PreferenceRelation digits_decode(const TernaryDigits& t);

std::string format_digits(const TernaryDigits& t);   // e.g. "e01"
TernaryDigits parse_digits(std::string_view s, int m);

}  // namespace preflab
