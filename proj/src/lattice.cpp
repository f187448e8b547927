#include "preflab/lattice.hpp"

#include <algorithm>
#include <cassert>
#include <map>

#include "preflab/errors.hpp"
#include "relbits.hpp"

namespace preflab {

namespace {

void require_same_m(const PreferenceRelation& r, const PreferenceRelation& s) {
  if (r.size() != s.size())
    throw DimensionError("mismatched alternative counts in lattice operation");
}

}  // namespace

bool leq(const PreferenceRelation& r, const PreferenceRelation& s) {
  require_same_m(r, s);
  if (r.is_cycle()) return true;
  if (s.is_cycle()) return false;
  return r.order().refines(s.order());
}

PreferenceRelation meet(const PreferenceRelation& r, const PreferenceRelation& s) {
  require_same_m(r, s);
  if (r.is_cycle() || s.is_cycle()) return PreferenceRelation::cycle(r.size());
  const auto a = detail::rows_of(r.order());
  const auto b = detail::rows_of(s.order());
  detail::RelRows inter(a.size());
  for (size_t i = 0; i < a.size(); ++i) inter[i] = a[i] & b[i];
  // The intersection of transitive relations is transitive, so only
  // completeness can fail; failure means opposing strict preferences.
  if (!detail::is_complete(inter)) return PreferenceRelation::cycle(r.size());
  const auto order = detail::rows_to_order(inter);
  assert(order.has_value());
  return *order;
}

PreferenceRelation join(const PreferenceRelation& r, const PreferenceRelation& s) {
  require_same_m(r, s);
  if (r.is_cycle()) return s;
  if (s.is_cycle()) return r;
  const auto a = detail::rows_of(r.order());
  const auto b = detail::rows_of(s.order());
  detail::RelRows uni(a.size());
  for (size_t i = 0; i < a.size(); ++i) uni[i] = a[i] | b[i];
  detail::close_transitively(uni);
  // The union of complete relations stays complete under closure.
  const auto order = detail::rows_to_order(uni);
  assert(order.has_value());
  return *order;
}

PreferenceRelation join_plus(const PreferenceRelation& r, const PreferenceRelation& s) {
  require_same_m(r, s);
  if (r.is_cycle() || s.is_cycle())
    return WeakOrder::indifferent(r.size());
  return join(r, s);
}

PreferenceRelation negate(const PreferenceRelation& r) {
  if (r.is_cycle()) return WeakOrder::indifferent(r.size());
  if (r.order().depth() == 1) return PreferenceRelation::cycle(r.size());
  return r.order().reversed();
}

std::vector<WeakOrder> enumerate_weak_orders(const AlternativeSet& alts) {
  const int m = alts.size();
  // Walk level vectors in lexicographic order, keeping those whose used
  // levels form an initial segment {0..k-1}.
  std::vector<WeakOrder> out;
  std::vector<int> lv(static_cast<size_t>(m), 0);
  while (true) {
    int maxlv = 0;
    for (int v : lv) maxlv = std::max(maxlv, v);
    std::vector<bool> used(static_cast<size_t>(maxlv) + 1, false);
    for (int v : lv) used[static_cast<size_t>(v)] = true;
    if (std::find(used.begin(), used.end(), false) == used.end())
      out.push_back(WeakOrder::from_levels(lv));
    int pos = m - 1;
    while (pos >= 0 && lv[static_cast<size_t>(pos)] == m - 1) {
      lv[static_cast<size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) break;
    ++lv[static_cast<size_t>(pos)];
  }
  return out;
}

PrefLattice::PrefLattice(AlternativeSet alts) : alts_(std::move(alts)) {
  const auto orders = enumerate_weak_orders(alts_);
  n_orders_ = static_cast<int>(orders.size());
  npairs_ = alts_.pair_count();
  layout_ = digit_pair_layout(alts_.size());
  relations_.reserve(static_cast<size_t>(n_orders_) + 1);
  for (const auto& w : orders) relations_.emplace_back(w);
  relations_.push_back(PreferenceRelation::cycle(alts_.size()));

  const int n = n_orders_ + 1;
  meet_.resize(static_cast<size_t>(n) * n);
  join_.resize(static_cast<size_t>(n) * n);
  join_plus_.resize(static_cast<size_t>(n) * n);
  neg_.resize(static_cast<size_t>(n));
  leq_.resize(static_cast<size_t>(n) * n);
  digits_.resize(static_cast<size_t>(n_orders_) * static_cast<size_t>(npairs_));

  for (int a = 0; a < n_orders_; ++a)
    id_by_levels_[relations_[static_cast<size_t>(a)].order().levels()] = a;
  const auto lookup = [&](const PreferenceRelation& r) {
    if (r.is_cycle()) return cycle_id();
    return id_by_levels_.at(r.order().levels());
  };

  for (int a = 0; a < n; ++a) {
    const auto& ra = relations_[static_cast<size_t>(a)];
    neg_[static_cast<size_t>(a)] = lookup(preflab::negate(ra));
    for (int b = 0; b < n; ++b) {
      const auto& rb = relations_[static_cast<size_t>(b)];
      meet_[idx(a, b)] = lookup(preflab::meet(ra, rb));
      join_[idx(a, b)] = lookup(preflab::join(ra, rb));
      join_plus_[idx(a, b)] = lookup(preflab::join_plus(ra, rb));
      leq_[idx(a, b)] = preflab::leq(ra, rb) ? 1 : 0;
    }
  }
  top_id_ = lookup(WeakOrder::indifferent(alts_.size()));

  for (int a = 0; a < n_orders_; ++a) {
    const auto t = digits_encode(relations_[static_cast<size_t>(a)].order());
    for (int k = 0; k < npairs_; ++k)
      digits_[static_cast<size_t>(a) * static_cast<size_t>(npairs_) + static_cast<size_t>(k)] =
          t.digits[static_cast<size_t>(k)];
  }

  if (npairs_ <= 12) {
    size_t total = 1;
    for (int k = 0; k < npairs_; ++k) total *= 3;
    decode_table_.assign(total, cycle_id());
    std::vector<Digit> digits(static_cast<size_t>(npairs_), Digit::kFirst);
    for (size_t key = 0; key < total; ++key) {
      size_t rest = key;
      for (int k = 0; k < npairs_; ++k) {
        digits[static_cast<size_t>(k)] = static_cast<Digit>(rest % 3);
        rest /= 3;
      }
      TernaryDigits t;
      t.m = alts_.size();
      t.digits = digits;
      decode_table_[key] = lookup(digits_decode(t));
    }
  }
}

int PrefLattice::id_of(const PreferenceRelation& r) const {
  if (r.size() != alts_.size())
    throw DimensionError("relation does not match this lattice's alternative count");
  if (r.is_cycle()) return cycle_id();
  return id_by_levels_.at(r.order().levels());
}

int PrefLattice::decode_digits(std::span<const Digit> digits) const {
  if (static_cast<int>(digits.size()) != npairs_)
    throw DimensionError("digit tuple has wrong arity for this lattice");
  if (!decode_table_.empty()) {
    size_t key = 0;
    for (size_t k = digits.size(); k-- > 0;)
      key = key * 3 + static_cast<size_t>(digits[k]);
    return decode_table_[key];
  }
  TernaryDigits t;
  t.m = alts_.size();
  t.digits.assign(digits.begin(), digits.end());
  return id_of(digits_decode(t));
}

std::string PrefLattice::format(int id) const {
  return format_chain(relation(id), alts_);
}

int PrefLattice::parse(std::string_view chain) const {
  return id_of(parse_chain(chain, alts_));
}

}  // namespace preflab
