#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace preflab {

/** An ordered, duplicate-free set of alternative labels.
 *
 * The label order is canonical: it fixes the coordinate order of level
 * vectors, the pair layout of ternary digit tuples and the grouping order
 * inside rendered chains. Labels are restricted to [A-Za-z0-9_]+ so that
 * chain notation ("a<b~c") stays unambiguous.
 */
class AlternativeSet {
 public:
  explicit AlternativeSet(std::vector<std::string> names);

  // "a", "b", ... for m <= 26.
  static AlternativeSet letters(int m);

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int a) const { return names_[static_cast<size_t>(a)]; }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<int> index_of(std::string_view label) const;

  int pair_count() const { return size() * (size() - 1) / 2; }

  bool operator==(const AlternativeSet&) const = default;

 private:
  std::vector<std::string> names_;
};

}  // namespace preflab
