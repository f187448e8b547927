#pragma once

#include <string>
#include <vector>

#include "preflab/profile.hpp"

namespace preflab {

enum class SwfKind { kPairwiseMajority, kProjection, kConstant, kBorda, kTable };

/** A social welfare function: a total map from profiles (including invalid
 * ones) to preference relations, over a fixed ProfileSpace.
 *
 * Built-in aggregations send any profile with a contradictory coordinate to
 * the contradictory element, except projection, which returns its
 * individual's coordinate verbatim, and constants. Table rules list one
 * output per valid profile and also send invalid profiles to the
 * contradictory element.
 *
 * The space must outlive the rule. Evaluations over the whole carrier are
 * materialized once; eval is a table lookup.
 */
class Swf {
 public:
  static Swf pairwise_majority(const ProfileSpace& space);
  static Swf projection(const ProfileSpace& space, int i);
  static Swf constant(const ProfileSpace& space, int rel_id);
  static Swf borda(const ProfileSpace& space);
  // One output relation id per valid index, covering every valid profile.
  static Swf table(const ProfileSpace& space, std::vector<int> outputs);

  SwfKind kind() const { return kind_; }
  const std::string& name() const { return name_; }
  const ProfileSpace& space() const { return *space_; }
  // Index parameter of a projection rule.
  int projection_index() const { return param_; }

  int eval(int full_handle) const { return image_[static_cast<size_t>(full_handle)]; }
  PreferenceRelation eval(const Profile& p) const;

  /** Pre-collapse digit form on valid profiles: the digit the aggregation
   * assigns to one layout pair before transitivity is tested. Defined for
   * every built-in aggregation (for constants only when the constant is an
   * order); table rules have none and fall back to comparing outcomes.
   */
  bool has_digit_form() const;
  Digit aggregate_digit(int full_handle, int pair) const;

 private:
  Swf(const ProfileSpace& space, SwfKind kind, std::string name, int param);

  void materialize();
  int eval_uncached(int full_handle) const;

  const ProfileSpace* space_;
  SwfKind kind_;
  std::string name_;
  int param_ = -1;                // projection index or constant relation id
  std::vector<int> table_;       // by valid index, table rules only
  std::vector<int> image_;       // by full handle
};

/** Builds a rule from a selector string: "majority", "borda",
 * "projection:K" with a 1-based individual K, or "constant:CHAIN" with a
 * chain like "a<b~c" or "CYCLE". Throws ParseError on anything else.
 */
Swf make_rule(const ProfileSpace& space, std::string_view selector);

}  // namespace preflab
