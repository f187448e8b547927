#include "preflab/profile.hpp"

#include "preflab/errors.hpp"

namespace preflab {

Profile::Profile(std::vector<PreferenceRelation> coords) : coords_(std::move(coords)) {
  if (coords_.empty()) throw DimensionError("a profile needs at least one individual");
  for (const auto& c : coords_)
    if (c.size() != coords_.front().size())
      throw DimensionError("profile coordinates disagree on the alternative count");
}

bool Profile::valid() const {
  for (const auto& c : coords_)
    if (c.is_cycle()) return false;
  return true;
}

namespace {

template <typename Op>
Profile zip(const Profile& p, const Profile& q, Op op) {
  if (p.individuals() != q.individuals())
    throw DimensionError("profiles disagree on the number of individuals");
  std::vector<PreferenceRelation> out;
  out.reserve(static_cast<size_t>(p.individuals()));
  for (int i = 0; i < p.individuals(); ++i) out.push_back(op(p.at(i), q.at(i)));
  return Profile(std::move(out));
}

}  // namespace

Profile coordinatewise_meet(const Profile& p, const Profile& q) {
  return zip(p, q, [](const auto& a, const auto& b) { return meet(a, b); });
}
Profile coordinatewise_join(const Profile& p, const Profile& q) {
  return zip(p, q, [](const auto& a, const auto& b) { return join(a, b); });
}
Profile coordinatewise_join_plus(const Profile& p, const Profile& q) {
  return zip(p, q, [](const auto& a, const auto& b) { return join_plus(a, b); });
}
Profile coordinatewise_negate(const Profile& p) {
  std::vector<PreferenceRelation> out;
  out.reserve(static_cast<size_t>(p.individuals()));
  for (int i = 0; i < p.individuals(); ++i) out.push_back(negate(p.at(i)));
  return Profile(std::move(out));
}

ProfileSpace::ProfileSpace(const PrefLattice& lat, int n) : lat_(&lat), n_(n) {
  if (n < 1) throw DimensionError("a profile space needs at least one individual");
  const long long base = lat.num_relations();
  long long full = 1, valid = 1;
  for (int i = 0; i < n; ++i) {
    full *= base;
    valid *= lat.num_orders();
    if (full > kMaxFullCarrier)
      throw SizeError("profile space too large (" + std::to_string(base) + "^" +
                      std::to_string(n) + " full handles); reduce m or N");
  }
  num_full_ = full;
  num_valid_ = valid;

  coords_.resize(static_cast<size_t>(full) * static_cast<size_t>(n));
  valid_.resize(static_cast<size_t>(full));
  valid_of_full_.resize(static_cast<size_t>(full), -1);
  full_of_valid_.reserve(static_cast<size_t>(valid));
  for (long long h = 0; h < full; ++h) {
    long long rest = h;
    bool ok = true;
    for (int i = n - 1; i >= 0; --i) {
      const int c = static_cast<int>(rest % base);
      rest /= base;
      coords_[static_cast<size_t>(h) * static_cast<size_t>(n) + static_cast<size_t>(i)] = c;
      if (c == lat.cycle_id()) ok = false;
    }
    valid_[static_cast<size_t>(h)] = ok ? 1 : 0;
    if (ok) {
      valid_of_full_[static_cast<size_t>(h)] = static_cast<long long>(full_of_valid_.size());
      full_of_valid_.push_back(static_cast<int>(h));
    }
  }

  std::vector<int> bot(static_cast<size_t>(n), lat.cycle_id());
  std::vector<int> top(static_cast<size_t>(n), lat.top_id());
  bottom_ = handle(bot);
  top_ = handle(top);
}

int ProfileSpace::handle(std::span<const int> coords) const {
  if (static_cast<int>(coords.size()) != n_)
    throw DimensionError("coordinate tuple has wrong arity for this profile space");
  long long h = 0;
  for (int i = 0; i < n_; ++i) h = h * lat_->num_relations() + coords[static_cast<size_t>(i)];
  return static_cast<int>(h);
}

int ProfileSpace::full_of_valid(long long valid_index) const {
  return full_of_valid_[static_cast<size_t>(valid_index)];
}

long long ProfileSpace::valid_of_full(int full_handle) const {
  return valid_of_full_[static_cast<size_t>(full_handle)];
}

int ProfileSpace::meet(int x, int y) const {
  const auto a = coords(x), b = coords(y);
  long long h = 0;
  for (int i = 0; i < n_; ++i)
    h = h * lat_->num_relations() + lat_->meet(a[static_cast<size_t>(i)], b[static_cast<size_t>(i)]);
  return static_cast<int>(h);
}

int ProfileSpace::join(int x, int y) const {
  const auto a = coords(x), b = coords(y);
  long long h = 0;
  for (int i = 0; i < n_; ++i)
    h = h * lat_->num_relations() + lat_->join(a[static_cast<size_t>(i)], b[static_cast<size_t>(i)]);
  return static_cast<int>(h);
}

int ProfileSpace::join_plus(int x, int y) const {
  const auto a = coords(x), b = coords(y);
  long long h = 0;
  for (int i = 0; i < n_; ++i)
    h = h * lat_->num_relations() +
        lat_->join_plus(a[static_cast<size_t>(i)], b[static_cast<size_t>(i)]);
  return static_cast<int>(h);
}

int ProfileSpace::negate(int x) const {
  const auto a = coords(x);
  long long h = 0;
  for (int i = 0; i < n_; ++i) h = h * lat_->num_relations() + lat_->negate(a[static_cast<size_t>(i)]);
  return static_cast<int>(h);
}

bool ProfileSpace::leq(int x, int y) const {
  const auto a = coords(x), b = coords(y);
  for (int i = 0; i < n_; ++i)
    if (!lat_->leq(a[static_cast<size_t>(i)], b[static_cast<size_t>(i)])) return false;
  return true;
}

int ProfileSpace::spike(int i, int rel, int fill) const {
  if (i < 0 || i >= n_) throw DimensionError("individual index out of range");
  long long h = 0;
  for (int j = 0; j < n_; ++j) h = h * lat_->num_relations() + (j == i ? rel : fill);
  return static_cast<int>(h);
}

int ProfileSpace::with_coordinate(int full_handle, int i, int rel) const {
  if (i < 0 || i >= n_) throw DimensionError("individual index out of range");
  const auto a = coords(full_handle);
  long long h = 0;
  for (int j = 0; j < n_; ++j)
    h = h * lat_->num_relations() + (j == i ? rel : a[static_cast<size_t>(j)]);
  return static_cast<int>(h);
}

Profile ProfileSpace::profile(int full_handle) const {
  std::vector<PreferenceRelation> out;
  out.reserve(static_cast<size_t>(n_));
  for (int c : coords(full_handle)) out.push_back(lat_->relation(c));
  return Profile(std::move(out));
}

int ProfileSpace::handle_of_profile(const Profile& p) const {
  if (p.individuals() != n_)
    throw DimensionError("profile does not match this space's individual count");
  std::vector<int> ids;
  ids.reserve(static_cast<size_t>(n_));
  for (int i = 0; i < n_; ++i) ids.push_back(lat_->id_of(p.at(i)));
  return handle(ids);
}

std::string ProfileSpace::format(int full_handle) const {
  std::string out = "(";
  const auto cs = coords(full_handle);
  for (int i = 0; i < n_; ++i) {
    if (i) out += ", ";
    out += lat_->format(cs[static_cast<size_t>(i)]);
  }
  out += ")";
  return out;
}

std::vector<std::string> ProfileSpace::chains(int full_handle) const {
  std::vector<std::string> out;
  const auto cs = coords(full_handle);
  out.reserve(static_cast<size_t>(n_));
  for (int i = 0; i < n_; ++i) out.push_back(lat_->format(cs[static_cast<size_t>(i)]));
  return out;
}

}  // namespace preflab
