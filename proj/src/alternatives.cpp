#include "preflab/alternatives.hpp"

#include <cctype>

#include "preflab/errors.hpp"

namespace preflab {
namespace {

bool valid_label(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

}  // namespace

AlternativeSet::AlternativeSet(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) throw DimensionError("alternative set must not be empty");
  for (const auto& n : names_) {
    if (!valid_label(n))
      throw ParseError("invalid alternative label '" + n + "' (want [A-Za-z0-9_]+)");
  }
  for (size_t i = 0; i < names_.size(); ++i)
    for (size_t j = i + 1; j < names_.size(); ++j)
      if (names_[i] == names_[j])
        throw ParseError("duplicate alternative label '" + names_[i] + "'");
}

AlternativeSet AlternativeSet::letters(int m) {
  if (m < 1 || m > 26) throw DimensionError("letter alternatives support 1 <= m <= 26");
  std::vector<std::string> names;
  names.reserve(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i) names.push_back(std::string(1, static_cast<char>('a' + i)));
  return AlternativeSet(std::move(names));
}

std::optional<int> AlternativeSet::index_of(std::string_view label) const {
  for (size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == label) return static_cast<int>(i);
  return std::nullopt;
}

}  // namespace preflab
