#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "preflab/swf.hpp"

namespace preflab {

/** Dictatorship evaluated two ways over every valid profile:
 * by the defining clauses (a contradictory aggregate forces full
 * indifference at i; otherwise the aggregate refines any non-indifferent
 * coordinate i) and by the single absorption identity
 * join_plus(w(p), p_i) = p_i. The two agree on every rule.
 */
struct DictatorCheck {
  bool by_clauses = false;
  bool by_identity = false;
};

DictatorCheck check_dictator(const Swf& w, int i);
bool has_dictator(const Swf& w, int i);
std::optional<int> find_dictator(const Swf& w);

// Dual absorption: meet(w(p), p_i) = p_i on every valid profile.
bool has_vetoer(const Swf& w, int i);
std::vector<int> find_vetoers(const Swf& w);

struct UnanimityWitness {
  int profile_handle = 0;
  int pair = 0;           // digit layout position
  int aggregate_id = 0;
};

struct UnanimityReport {
  bool holds = true;
  std::optional<UnanimityWitness> witness;
};

// When every individual strictly agrees on a pair, the aggregate must be a
// weak order with that strict preference; a contradictory aggregate counts
// as a violation for the pair.
UnanimityReport check_unanimity(const Swf& w);

// Variant that constrains only profiles whose aggregate is a weak order.
// A contradictory aggregate is exempt here: collapse is a failure of the
// unrestricted-domain condition, not of unanimity, and the two axes must
// stay separable for rules (pairwise majority at even N) that collapse on
// profiles with a unanimous strict pair.
UnanimityReport check_unanimity_on_orders(const Swf& w);

struct IiaWitness {
  int profile_a = 0;
  int profile_b = 0;
  int pair = 0;
};

struct IiaReport {
  bool holds = true;
  // True when the rule exposes a pre-collapse digit form and the check is
  // exact; table rules compare order outcomes only and are marked partial.
  bool exact = true;
  std::optional<IiaWitness> witness;
};

// Two valid profiles whose coordinates agree digit-by-digit on a pair must
// agree on the aggregate digit for that pair.
IiaReport check_iia(const Swf& w);

struct DomainReport {
  bool image_is_all_orders = false;  // image over valid profiles equals all weak orders
  bool never_contradictory = false;  // no valid profile maps to the contradictory element
  std::optional<int> contradictory_witness;  // profile handle
  std::optional<int> missed_order;           // relation id never attained
};

DomainReport check_unrestricted_domain(const Swf& w);

// Lexicographically first pair of valid profiles that both aggregate to
// the contradictory element while being coordinatewise incompatible
// (some coordinate meet collapses).
std::optional<std::pair<int, int>> find_condorcet_witnesses(const Swf& w);

struct AuditReport {
  std::string rule;
  int m = 0;
  int n = 0;
  UnanimityReport unanimity;
  UnanimityReport unanimity_on_orders;
  IiaReport iia;
  DomainReport domain;
  std::optional<int> dictator;   // individual index
  std::vector<int> vetoers;
  std::optional<std::pair<int, int>> condorcet_witness;

  // Hypotheses shared by the impossibility results: unanimity, IIA and no
  // dictator. Unanimity is taken on order outcomes so that a rule whose only
  // violations are collapses still qualifies; those collapses are exactly
  // what the theorems then exhibit as unrestricted-domain failures.
  bool arrow_hypotheses() const {
    return unanimity_on_orders.holds && iia.holds && !dictator.has_value();
  }
};

AuditReport audit(const Swf& w);

}  // namespace preflab
