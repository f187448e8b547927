#include "preflab/preference.hpp"

#include <algorithm>
#include <cassert>

#include "preflab/errors.hpp"
#include "relbits.hpp"

namespace preflab {

namespace detail {

std::optional<WeakOrder> rows_to_order(const RelRows& rows) {
  if (!is_complete(rows) || !is_transitive(rows)) return std::nullopt;
  const int m = static_cast<int>(rows.size());
  std::vector<int> dominated(static_cast<size_t>(m), 0);
  for (int a = 0; a < m; ++a) {
    int count = 0;
    for (int b = 0; b < m; ++b) {
      const bool b_weak_a = (rows[static_cast<size_t>(b)] >> a) & 1u;
      const bool a_weak_b = (rows[static_cast<size_t>(a)] >> b) & 1u;
      if (b_weak_a && !a_weak_b) ++count;  // b strictly preferred to a
    }
    dominated[static_cast<size_t>(a)] = count;
  }
  return WeakOrder::from_levels(dominated);
}

}  // namespace detail

WeakOrder::WeakOrder(std::vector<std::uint8_t> lv) : levels_(std::move(lv)) {
  int maxlv = 0;
  for (auto v : levels_) maxlv = std::max(maxlv, static_cast<int>(v));
  depth_ = maxlv + 1;
}

WeakOrder WeakOrder::from_levels(std::span<const int> ranks) {
  if (ranks.empty()) throw DimensionError("level vector must not be empty");
  std::vector<int> sorted(ranks.begin(), ranks.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<std::uint8_t> lv(ranks.size());
  for (size_t a = 0; a < ranks.size(); ++a) {
    const auto it = std::lower_bound(sorted.begin(), sorted.end(), ranks[a]);
    lv[a] = static_cast<std::uint8_t>(it - sorted.begin());
  }
  return WeakOrder(std::move(lv));
}

WeakOrder WeakOrder::indifferent(int m) {
  if (m < 1) throw DimensionError("need at least one alternative");
  return WeakOrder(std::vector<std::uint8_t>(static_cast<size_t>(m), 0));
}

bool WeakOrder::refines(const WeakOrder& coarser) const {
  if (size() != coarser.size())
    throw DimensionError("mismatched alternative counts in refinement test");
  for (int a = 0; a < size(); ++a)
    for (int b = 0; b < size(); ++b)
      if (coarser.prefers(a, b) && !prefers(a, b)) return false;
  return true;
}

WeakOrder WeakOrder::reversed() const {
  std::vector<std::uint8_t> lv(levels_.size());
  for (size_t a = 0; a < levels_.size(); ++a)
    lv[a] = static_cast<std::uint8_t>(depth_ - 1 - levels_[a]);
  return WeakOrder(std::move(lv));
}

PreferenceRelation PreferenceRelation::cycle(int m) {
  if (m < 1) throw DimensionError("need at least one alternative");
  return PreferenceRelation(m, std::nullopt);
}

const WeakOrder& PreferenceRelation::order() const {
  if (!order_) throw DimensionError("the contradictory element is not a weak order");
  return *order_;
}

std::string format_chain(const WeakOrder& w, const AlternativeSet& alts) {
  if (w.size() != alts.size())
    throw DimensionError("order and alternative set disagree on m");
  std::string out;
  for (int lv = 0; lv < w.depth(); ++lv) {
    bool first_in_level = true;
    for (int a = 0; a < w.size(); ++a) {
      if (w.level(a) != lv) continue;
      if (!out.empty()) out += first_in_level ? '<' : '~';
      out += alts.name(a);
      first_in_level = false;
    }
  }
  return out;
}

std::string format_chain(const PreferenceRelation& r, const AlternativeSet& alts) {
  if (r.is_cycle()) {
    if (r.size() != alts.size())
      throw DimensionError("relation and alternative set disagree on m");
    return "CYCLE";
  }
  return format_chain(r.order(), alts);
}

PreferenceRelation parse_chain(std::string_view text, const AlternativeSet& alts) {
  if (text == "CYCLE") return PreferenceRelation::cycle(alts.size());
  std::vector<int> ranks(static_cast<size_t>(alts.size()), -1);
  int level = 0;
  size_t pos = 0;
  bool expect_label = true;
  int seen = 0;
  while (pos <= text.size()) {
    if (expect_label) {
      size_t end = pos;
      while (end < text.size() && text[end] != '<' && text[end] != '~') ++end;
      const std::string_view label = text.substr(pos, end - pos);
      const auto idx = alts.index_of(label);
      if (!idx)
        throw ParseError("unknown alternative '" + std::string(label) + "' in chain '" +
                         std::string(text) + "'");
      if (ranks[static_cast<size_t>(*idx)] != -1)
        throw ParseError("duplicate alternative '" + std::string(label) + "' in chain '" +
                         std::string(text) + "'");
      ranks[static_cast<size_t>(*idx)] = level;
      ++seen;
      pos = end;
      expect_label = false;
    } else {
      if (pos == text.size()) break;
      if (text[pos] == '<') ++level;
      ++pos;
      expect_label = true;
    }
  }
  if (seen != alts.size())
    throw ParseError("chain '" + std::string(text) + "' does not mention every alternative");
  return WeakOrder::from_levels(ranks);
}

char digit_char(Digit d) {
  switch (d) {
    case Digit::kFirst: return '0';
    case Digit::kSecond: return '1';
    case Digit::kTie: return 'e';
  }
  return '?';
}

std::optional<Digit> digit_of_char(char c) {
  if (c == '0') return Digit::kFirst;
  if (c == '1') return Digit::kSecond;
  if (c == 'e') return Digit::kTie;
  return std::nullopt;
}

std::vector<std::pair<int, int>> digit_pair_layout(int m) {
  if (m < 1) throw DimensionError("need at least one alternative");
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(static_cast<size_t>(m * (m - 1) / 2));
  for (int d = 1; d <= m / 2; ++d) {
    const bool half = (2 * d == m);  // opposite pairs appear once
    const int starts = half ? m / 2 : m;
    for (int s = 0; s < starts; ++s) pairs.emplace_back(s, (s + d) % m);
  }
  return pairs;
}

TernaryDigits digits_encode(const WeakOrder& w) {
  TernaryDigits t;
  t.m = w.size();
  for (const auto& [x, y] : digit_pair_layout(w.size())) {
    if (w.prefers(x, y))
      t.digits.push_back(Digit::kFirst);
    else if (w.prefers(y, x))
      t.digits.push_back(Digit::kSecond);
    else
      t.digits.push_back(Digit::kTie);
  }
  return t;
}

TernaryDigits digits_encode(const PreferenceRelation& r) {
  if (r.is_cycle())
    throw DimensionError("the contradictory element has no digit tuple");
  return digits_encode(r.order());
}

PreferenceRelation digits_decode(const TernaryDigits& t) {
  const auto layout = digit_pair_layout(t.m);
  if (t.digits.size() != layout.size())
    throw DimensionError("digit tuple has wrong arity for its alternative count");
  detail::RelRows rows(static_cast<size_t>(t.m), 0);
  for (int a = 0; a < t.m; ++a) rows[static_cast<size_t>(a)] |= (1u << a);
  for (size_t k = 0; k < layout.size(); ++k) {
    const auto [x, y] = layout[k];
    switch (t.digits[k]) {
      case Digit::kFirst: rows[static_cast<size_t>(x)] |= (1u << y); break;
      case Digit::kSecond: rows[static_cast<size_t>(y)] |= (1u << x); break;
      case Digit::kTie:
        rows[static_cast<size_t>(x)] |= (1u << y);
        rows[static_cast<size_t>(y)] |= (1u << x);
        break;
    }
  }
  const auto order = detail::rows_to_order(rows);
  if (!order) return PreferenceRelation::cycle(t.m);
  return *order;
}

std::string format_digits(const TernaryDigits& t) {
  std::string out;
  out.reserve(t.digits.size());
  for (Digit d : t.digits) out += digit_char(d);
  return out;
}

TernaryDigits parse_digits(std::string_view s, int m) {
  TernaryDigits t;
  t.m = m;
  const size_t want = digit_pair_layout(m).size();
  if (s.size() != want)
    throw ParseError("digit string '" + std::string(s) + "' must have " +
                     std::to_string(want) + " digits for m=" + std::to_string(m));
  for (char c : s) {
    const auto d = digit_of_char(c);
    if (!d) throw ParseError(std::string("invalid digit character '") + c + "'");
    t.digits.push_back(*d);
  }
  return t;
}

}  // namespace preflab
