#include "preflab/consistency.hpp"

namespace preflab {

std::vector<int> ValidSubset::members() const {
  std::vector<int> out;
  for (int x = 0; x < host.size; ++x) {
    if (member[static_cast<std::size_t>(x)]) out.push_back(x);
  }
  return out;
}

long long ValidSubset::member_count() const {
  long long n = 0;
  for (std::uint8_t f : member) n += f;
  return n;
}

ValidSubset make_valid_subset(OrthoLattice host, std::span<const int> members) {
  ValidSubset d;
  d.member.assign(static_cast<std::size_t>(host.size), 0);
  for (int x : members) {
    if (x < 0 || x >= host.size) throw DimensionError("member out of range");
    if (x == host.bot) throw DimensionError("the bottom element cannot be a valid element");
    d.member[static_cast<std::size_t>(x)] = 1;
  }
  d.host = std::move(host);
  return d;
}

ValidSubset valid_profiles_subset(const ProfileSpace& space) {
  ValidSubset d;
  d.host = profile_ortho_view(space);
  d.member.assign(static_cast<std::size_t>(space.num_full()), 0);
  for (int h = 0; h < static_cast<int>(space.num_full()); ++h) {
    if (space.is_valid(h)) d.member[static_cast<std::size_t>(h)] = 1;
  }
  return d;
}

ValidSubset coordinate_order_subset(const ProfileSpace& space, int i) {
  if (i < 0 || i >= space.individuals()) {
    throw DimensionError("individual index out of range");
  }
  const int cycle = space.lattice().cycle_id();
  ValidSubset d;
  d.host = profile_ortho_view(space);
  d.member.assign(static_cast<std::size_t>(space.num_full()), 0);
  for (int h = 0; h < static_cast<int>(space.num_full()); ++h) {
    if (space.coordinate(h, i) != cycle) d.member[static_cast<std::size_t>(h)] = 1;
  }
  return d;
}

bool consistent(const ValidSubset& d, int s, int t) {
  return d.contains(d.host.meet(s, t));
}

ConsistencyRespectReport is_consistency_respecting(const Srs& s, int y, const ValidSubset& d) {
  if (d.host.size != s.num_expressions) {
    throw DimensionError("valid subset and system carriers differ");
  }
  ConsistencyRespectReport report;
  const std::vector<int> ms = d.members();
  // Star images depend on d only through enc(d); cache one per member.
  std::vector<int> image(ms.size());
  for (std::size_t a = 0; a < ms.size(); ++a) image[a] = s.star(y, ms[a]);
  for (std::size_t a = 0; a < ms.size(); ++a) {
    for (std::size_t b = a; b < ms.size(); ++b) {
      const bool lhs = consistent(d, ms[a], ms[b]);
      const bool rhs = consistent(d, image[a], image[b]);
      if (lhs != rhs) {
        report.holds = false;
        report.witness = {ms[a], ms[b]};
        report.forward_failed = lhs;
        return report;
      }
    }
  }
  return report;
}

QuasiFlags quasi_flags(const Srs& s, int y, int d, const ValidSubset& sub) {
  if (!sub.host.meet || !sub.host.neg || !sub.host.leq) {
    throw DimensionError("quasi checks need a lattice-structured carrier");
  }
  if (sub.host.size != s.num_expressions) {
    throw DimensionError("valid subset and system carriers differ");
  }
  const auto& host = sub.host;
  const int nd = host.neg(d);
  const int not_yd = host.neg(s.star(y, d));
  const int not_ynd = host.neg(s.star(y, nd));
  QuasiFlags flags;
  flags.quasi_consistent = host.leq(d, not_ynd);
  flags.quasi_godel_sentence = host.leq(d, not_yd);
  flags.quasi_complete = !consistent(sub, not_yd, not_ynd);
  return flags;
}

QuasiGodelianReport is_quasi_godelian(const Srs& s, int y, const ValidSubset& sub) {
  QuasiGodelianReport report;
  for (int d = 0; d < sub.host.size; ++d) {
    if (!sub.contains(d)) continue;
    const QuasiFlags f = quasi_flags(s, y, d, sub);
    if (f.quasi_godel_sentence && !(f.quasi_consistent && f.quasi_complete)) {
      report.quasi_godelian = true;
      report.witness = d;
      return report;
    }
  }
  return report;
}

}  // namespace preflab
