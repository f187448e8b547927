#include "preflab/swf.hpp"

#include <cassert>
#include <charconv>

#include "preflab/errors.hpp"

namespace preflab {

Swf::Swf(const ProfileSpace& space, SwfKind kind, std::string name, int param)
    : space_(&space), kind_(kind), name_(std::move(name)), param_(param) {}

Swf Swf::pairwise_majority(const ProfileSpace& space) {
  Swf w(space, SwfKind::kPairwiseMajority, "majority", -1);
  w.materialize();
  return w;
}

Swf Swf::projection(const ProfileSpace& space, int i) {
  if (i < 0 || i >= space.individuals())
    throw DimensionError("projection index out of range");
  Swf w(space, SwfKind::kProjection, "projection(" + std::to_string(i + 1) + ")", i);
  w.materialize();
  return w;
}

Swf Swf::constant(const ProfileSpace& space, int rel_id) {
  if (rel_id < 0 || rel_id >= space.lattice().num_relations())
    throw DimensionError("constant relation id out of range");
  Swf w(space, SwfKind::kConstant, "constant(" + space.lattice().format(rel_id) + ")", rel_id);
  w.materialize();
  return w;
}

Swf Swf::borda(const ProfileSpace& space) {
  Swf w(space, SwfKind::kBorda, "borda", -1);
  w.materialize();
  return w;
}

Swf Swf::table(const ProfileSpace& space, std::vector<int> outputs) {
  if (static_cast<long long>(outputs.size()) != space.num_valid())
    throw DimensionError("table rule must list exactly one output per valid profile");
  for (int out : outputs)
    if (out < 0 || out >= space.lattice().num_relations())
      throw DimensionError("table output id out of range");
  Swf w(space, SwfKind::kTable, "table", -1);
  w.table_ = std::move(outputs);
  w.materialize();
  return w;
}

void Swf::materialize() {
  image_.resize(static_cast<size_t>(space_->num_full()));
  for (long long h = 0; h < space_->num_full(); ++h)
    image_[static_cast<size_t>(h)] = eval_uncached(static_cast<int>(h));
}

int Swf::eval_uncached(int h) const {
  const auto& lat = space_->lattice();
  const auto cs = space_->coords(h);
  switch (kind_) {
    case SwfKind::kProjection:
      return cs[static_cast<size_t>(param_)];
    case SwfKind::kConstant:
      return param_;
    case SwfKind::kPairwiseMajority: {
      if (!space_->is_valid(h)) return lat.cycle_id();
      std::vector<Digit> digits(static_cast<size_t>(lat.pair_count()));
      for (int k = 0; k < lat.pair_count(); ++k) digits[static_cast<size_t>(k)] = aggregate_digit(h, k);
      return lat.decode_digits(digits);
    }
    case SwfKind::kBorda: {
      if (!space_->is_valid(h)) return lat.cycle_id();
      const int m = lat.alternatives().size();
      std::vector<int> totals(static_cast<size_t>(m), 0);
      for (int c : cs) {
        const auto& w = lat.relation(c).order();
        for (int a = 0; a < m; ++a) totals[static_cast<size_t>(a)] += w.level(a);
      }
      return lat.id_of(WeakOrder::from_levels(totals));
    }
    case SwfKind::kTable: {
      if (!space_->is_valid(h)) return lat.cycle_id();
      return table_[static_cast<size_t>(space_->valid_of_full(h))];
    }
  }
  return lat.cycle_id();
}

PreferenceRelation Swf::eval(const Profile& p) const {
  return space_->lattice().relation(eval(space_->handle_of_profile(p)));
}

bool Swf::has_digit_form() const {
  switch (kind_) {
    case SwfKind::kTable:
      return false;
    case SwfKind::kConstant:
      return param_ != space_->lattice().cycle_id();
    default:
      return true;
  }
}

Digit Swf::aggregate_digit(int h, int pair) const {
  const auto& lat = space_->lattice();
  assert(space_->is_valid(h));
  switch (kind_) {
    case SwfKind::kProjection:
      return lat.digit(space_->coords(h)[static_cast<size_t>(param_)], pair);
    case SwfKind::kConstant:
      if (param_ == lat.cycle_id())
        throw DimensionError("a contradictory constant has no digit form");
      return lat.digit(param_, pair);
    case SwfKind::kPairwiseMajority: {
      int first = 0, second = 0;
      for (int c : space_->coords(h)) {
        const Digit d = lat.digit(c, pair);
        if (d == Digit::kFirst) ++first;
        else if (d == Digit::kSecond) ++second;
      }
      if (first > second) return Digit::kFirst;
      if (second > first) return Digit::kSecond;
      return Digit::kTie;
    }
    case SwfKind::kBorda:
      // Dense ranking preserves total comparisons, so the aggregate order's
      // own digit is the pre-collapse digit (sums are always transitive).
      return lat.digit(eval(h), pair);
    case SwfKind::kTable:
      throw DimensionError("table rules have no digit form");
  }
  return Digit::kTie;
}

Swf make_rule(const ProfileSpace& space, std::string_view selector) {
  if (selector == "majority") return Swf::pairwise_majority(space);
  if (selector == "borda") return Swf::borda(space);
  if (selector.starts_with("projection:")) {
    const std::string_view digits = selector.substr(11);
    int one_based = 0;
    const auto [ptr, ec] =
        std::from_chars(digits.data(), digits.data() + digits.size(), one_based);
    if (ec != std::errc{} || ptr != digits.data() + digits.size()) {
      throw ParseError("projection needs a numeric individual: " + std::string(selector));
    }
    if (one_based < 1 || one_based > space.individuals()) {
      throw DimensionError("projection individual out of range");
    }
    return Swf::projection(space, one_based - 1);
  }
  if (selector.starts_with("constant:")) {
    const std::string_view chain = selector.substr(9);
    return Swf::constant(space, space.lattice().parse(chain));
  }
  throw ParseError("unknown rule selector: " + std::string(selector));
}

}  // namespace preflab
