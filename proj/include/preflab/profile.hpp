#pragma once

#include <span>
#include <string>
#include <vector>

#include "preflab/lattice.hpp"

namespace preflab {

/** One preference relation per individual, all over the same alternatives.
 * A profile is valid when every coordinate is a weak order.
 */
class Profile {
 public:
  explicit Profile(std::vector<PreferenceRelation> coords);

  int individuals() const { return static_cast<int>(coords_.size()); }
  int alternatives() const { return coords_.front().size(); }
  const PreferenceRelation& at(int i) const { return coords_[static_cast<size_t>(i)]; }
  const std::vector<PreferenceRelation>& coords() const { return coords_; }

  bool valid() const;

  bool operator==(const Profile&) const = default;

 private:
  std::vector<PreferenceRelation> coords_;
};

Profile coordinatewise_meet(const Profile& p, const Profile& q);
Profile coordinatewise_join(const Profile& p, const Profile& q);
Profile coordinatewise_join_plus(const Profile& p, const Profile& q);
Profile coordinatewise_negate(const Profile& p);

/** The space of N-coordinate profiles over one preference lattice, with
 * dense integer handles.
 *
 * Handles are mixed-radix numbers, coordinate 0 most significant, so
 * handle order is lexicographic coordinate order. Two numberings exist:
 * full handles range over all relation tuples, valid handles over weak
 * order tuples only. Coordinate decodes are cached for every full handle.
 */
class ProfileSpace {
 public:
  // Guards the full-carrier size; verifiers materialize per-handle arrays.
  static constexpr long long kMaxFullCarrier = 1 << 21;

  ProfileSpace(const PrefLattice& lat, int n);

  const PrefLattice& lattice() const { return *lat_; }
  int individuals() const { return n_; }
  long long num_valid() const { return num_valid_; }
  long long num_full() const { return num_full_; }

  std::span<const int> coords(int full_handle) const {
    return {coords_.data() + static_cast<size_t>(full_handle) * static_cast<size_t>(n_),
            static_cast<size_t>(n_)};
  }
  int handle(std::span<const int> coords) const;
  int coordinate(int full_handle, int i) const { return coords(full_handle)[static_cast<size_t>(i)]; }
  // Copy of full_handle with relation `rel` at coordinate i.
  int with_coordinate(int full_handle, int i, int rel) const;
  bool is_valid(int full_handle) const { return valid_[static_cast<size_t>(full_handle)] != 0; }

  // Bijection between 0..num_valid-1 and the valid full handles, in order.
  int full_of_valid(long long valid_index) const;
  long long valid_of_full(int full_handle) const;

  // Coordinatewise lattice structure on full handles.
  int meet(int x, int y) const;
  int join(int x, int y) const;
  int join_plus(int x, int y) const;
  int negate(int x) const;
  bool leq(int x, int y) const;
  int bottom() const { return bottom_; }
  int top() const { return top_; }

  // Profile with relation `rel` at coordinate i and `fill` elsewhere.
  int spike(int i, int rel, int fill) const;

  Profile profile(int full_handle) const;
  int handle_of_profile(const Profile& p) const;
  std::string format(int full_handle) const;
  std::vector<std::string> chains(int full_handle) const;

 private:
  const PrefLattice* lat_;
  int n_ = 0;
  long long num_valid_ = 0;
  long long num_full_ = 0;
  int bottom_ = 0;
  int top_ = 0;
  std::vector<int> coords_;          // num_full * n, cached decodes
  std::vector<std::uint8_t> valid_;  // num_full
  std::vector<int> full_of_valid_;   // num_valid
  std::vector<long long> valid_of_full_;
};

}  // namespace preflab
