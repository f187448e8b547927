#include "preflab/audit.hpp"

#include <cassert>
#include <map>

#include "preflab/errors.hpp"

namespace preflab {

namespace {

// All valid profile handles, in increasing handle order.
template <typename Fn>
void for_each_valid(const ProfileSpace& space, Fn&& fn) {
  const int nf = static_cast<int>(space.num_full());
  for (int h = 0; h < nf; ++h) {
    if (space.is_valid(h)) fn(h);
  }
}

}  // namespace

DictatorCheck check_dictator(const Swf& w, int i) {
  const ProfileSpace& space = w.space();
  const PrefLattice& lat = space.lattice();
  if (i < 0 || i >= space.individuals()) {
    throw DimensionError("individual index out of range");
  }
  DictatorCheck out;
  out.by_clauses = true;
  out.by_identity = true;
  const int top = lat.top_id();
  for_each_valid(space, [&](int h) {
    const int pi = space.coordinate(h, i);
    const int out_id = w.eval(h);
    if (out.by_identity && lat.join_plus(out_id, pi) != pi) {
      out.by_identity = false;
    }
    if (out.by_clauses) {
      if (out_id == lat.cycle_id()) {
        if (pi != top) out.by_clauses = false;
      } else if (pi != top) {
        // every strict preference of p_i must appear in the aggregate
        if (!lat.leq(out_id, pi)) out.by_clauses = false;
      }
    }
  });
  return out;
}

bool has_dictator(const Swf& w, int i) {
  DictatorCheck c = check_dictator(w, i);
  assert(c.by_clauses == c.by_identity);
  return c.by_identity;
}

std::optional<int> find_dictator(const Swf& w) {
  for (int i = 0; i < w.space().individuals(); ++i) {
    if (has_dictator(w, i)) return i;
  }
  return std::nullopt;
}

bool has_vetoer(const Swf& w, int i) {
  const ProfileSpace& space = w.space();
  const PrefLattice& lat = space.lattice();
  if (i < 0 || i >= space.individuals()) {
    throw DimensionError("individual index out of range");
  }
  bool holds = true;
  for_each_valid(space, [&](int h) {
    if (!holds) return;
    const int pi = space.coordinate(h, i);
    if (lat.meet(w.eval(h), pi) != pi) holds = false;
  });
  return holds;
}

std::vector<int> find_vetoers(const Swf& w) {
  std::vector<int> out;
  for (int i = 0; i < w.space().individuals(); ++i) {
    if (has_vetoer(w, i)) out.push_back(i);
  }
  return out;
}

namespace {

UnanimityReport unanimity_scan(const Swf& w, bool cycle_violates) {
  const ProfileSpace& space = w.space();
  const PrefLattice& lat = space.lattice();
  const auto& layout = lat.pair_layout();
  const int n = space.individuals();
  UnanimityReport report;
  for (int h = 0; h < space.num_full() && report.holds; ++h) {
    if (!space.is_valid(h)) continue;
    const int out_id = w.eval(h);
    for (int k = 0; k < static_cast<int>(layout.size()); ++k) {
      bool all_first = true;
      bool all_second = true;
      for (int i = 0; i < n && (all_first || all_second); ++i) {
        const Digit d = lat.digit(space.coordinate(h, i), k);
        if (d != Digit::kFirst) all_first = false;
        if (d != Digit::kSecond) all_second = false;
      }
      if (!all_first && !all_second) continue;
      bool ok = false;
      if (out_id != lat.cycle_id()) {
        const Digit od = lat.digit(out_id, k);
        ok = all_first ? (od == Digit::kFirst) : (od == Digit::kSecond);
      } else {
        ok = !cycle_violates;
      }
      if (!ok) {
        report.holds = false;
        report.witness = UnanimityWitness{h, k, out_id};
        break;
      }
    }
  }
  return report;
}

}  // namespace

UnanimityReport check_unanimity(const Swf& w) { return unanimity_scan(w, true); }

UnanimityReport check_unanimity_on_orders(const Swf& w) {
  return unanimity_scan(w, false);
}

IiaReport check_iia(const Swf& w) {
  const ProfileSpace& space = w.space();
  const PrefLattice& lat = space.lattice();
  const auto& layout = lat.pair_layout();
  const int n = space.individuals();
  IiaReport report;
  report.exact = w.has_digit_form();

  // Bucket valid profiles by the restriction of every coordinate to one
  // pair; all profiles in a bucket must agree on that pair's outcome.
  std::vector<int> key(static_cast<std::size_t>(n), 0);
  for (int k = 0; k < static_cast<int>(layout.size()) && report.holds; ++k) {
    std::map<std::vector<int>, std::pair<int, int>> seen;  // key -> (handle, outcome)
    for (int h = 0; h < space.num_full(); ++h) {
      if (!space.is_valid(h)) continue;
      for (int i = 0; i < n; ++i) {
        key[static_cast<std::size_t>(i)] =
            static_cast<int>(lat.digit(space.coordinate(h, i), k));
      }
      int outcome;
      if (report.exact) {
        outcome = static_cast<int>(w.aggregate_digit(h, k));
      } else {
        const int out_id = w.eval(h);
        // Partial check: compare only order outcomes; a contradictory
        // aggregate carries no pairwise verdict.
        outcome = (out_id == lat.cycle_id())
                      ? -1
                      : static_cast<int>(lat.digit(out_id, k));
      }
      auto [it, inserted] = seen.emplace(key, std::make_pair(h, outcome));
      if (!inserted) {
        const auto [h0, o0] = it->second;
        const bool clash = report.exact
                               ? (o0 != outcome)
                               : (o0 >= 0 && outcome >= 0 && o0 != outcome);
        if (clash) {
          report.holds = false;
          report.witness = IiaWitness{h0, h, k};
          break;
        }
        if (o0 < 0 && outcome >= 0) it->second = {h, outcome};
      }
    }
  }
  return report;
}

DomainReport check_unrestricted_domain(const Swf& w) {
  const ProfileSpace& space = w.space();
  const PrefLattice& lat = space.lattice();
  DomainReport report;
  std::vector<char> hit(static_cast<std::size_t>(lat.num_orders()), 0);
  report.never_contradictory = true;
  for (int h = 0; h < space.num_full(); ++h) {
    if (!space.is_valid(h)) continue;
    const int out_id = w.eval(h);
    if (out_id == lat.cycle_id()) {
      if (report.never_contradictory) {
        report.never_contradictory = false;
        report.contradictory_witness = h;
      }
    } else {
      hit[static_cast<std::size_t>(out_id)] = 1;
    }
  }
  report.image_is_all_orders = true;
  for (int r = 0; r < lat.num_orders(); ++r) {
    if (!hit[static_cast<std::size_t>(r)]) {
      report.image_is_all_orders = false;
      report.missed_order = r;
      break;
    }
  }
  return report;
}

std::optional<std::pair<int, int>> find_condorcet_witnesses(const Swf& w) {
  const ProfileSpace& space = w.space();
  const PrefLattice& lat = space.lattice();
  const int n = space.individuals();
  std::vector<int> collapsing;  // valid handles aggregating to the bottom
  for (int h = 0; h < space.num_full(); ++h) {
    if (space.is_valid(h) && w.eval(h) == lat.cycle_id()) {
      collapsing.push_back(h);
    }
  }
  for (std::size_t a = 0; a < collapsing.size(); ++a) {
    for (std::size_t b = a; b < collapsing.size(); ++b) {
      const int ha = collapsing[a];
      const int hb = collapsing[b];
      bool incompatible = false;
      for (int i = 0; i < n && !incompatible; ++i) {
        if (lat.meet(space.coordinate(ha, i), space.coordinate(hb, i)) ==
            lat.cycle_id()) {
          incompatible = true;
        }
      }
      if (incompatible) return std::make_pair(ha, hb);
    }
  }
  return std::nullopt;
}

AuditReport audit(const Swf& w) {
  AuditReport report;
  report.rule = w.name();
  report.m = w.space().lattice().alternatives().size();
  report.n = w.space().individuals();
  report.unanimity = check_unanimity(w);
  report.unanimity_on_orders = check_unanimity_on_orders(w);
  report.iia = check_iia(w);
  report.domain = check_unrestricted_domain(w);
  report.dictator = find_dictator(w);
  report.vetoers = find_vetoers(w);
  report.condorcet_witness = find_condorcet_witnesses(w);
  return report;
}

}  // namespace preflab
