#pragma once

#include <optional>
#include <string>
#include <vector>

#include "preflab/audit.hpp"
#include "preflab/consistency.hpp"
#include "preflab/srs_instances.hpp"

namespace preflab {

struct TheoremCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerifyConfig {
  int m = 3;
  int n = 2;
  std::string rule = "majority";  // make_rule selector
  int i = 0;                      // distinguished individual, 0-based
  bool slow = false;              // impossibility-of-respecting: enumerate candidates
  std::vector<int> app;           // optional custom application table, row-major
  unsigned seed = 12345;          // seeds the generated table when app is empty
  int workers = 1;                // threads sharding the slow-mode candidate scan
};

struct VerifyReport {
  std::string theorem;
  std::string config_summary;
  bool applicable = true;  // the theorem's hypotheses hold for this rule
  bool pass = false;
  std::vector<TheoremCheck> checks;
  std::vector<std::string> witnesses;
  long long enumerated = 0;  // elements or pairs visited by the main quantifier
  std::string note;
};

/** Replays one of the named results by exhaustive enumeration at the
 * configured size. Ids:
 *   arrow-full          a non-dictatorial unanimous IIA rule admits two
 *                       coordinatewise-incompatible valid profiles that both
 *                       aggregate to the contradictory element
 *   arrow-main          no expression respects consistency in any system
 *                       encoding with such a rule (slow: enumerate every
 *                       candidate expression for the three families; fast:
 *                       replay the argument against a supplied or generated
 *                       application table)
 *   strong-dictator     the all-indifferent profile respects consistency
 *                       under a strong dictator with the meet family
 *   condorcet-abstract  the omega system of a cycle-producing rule is
 *                       quasi-Godelian with respect to the indicator
 *   dictator-abstract   under a dictator with a cycle-free unrestricted
 *                       image, no valid profile is a quasi-Godel sentence
 *   dictator-abstract-2 under a dictator commuting with negation,
 *                       quasi-consistency and quasi-completeness hold
 *                       jointly on profiles where the dictator is not fully
 *                       indifferent
 * Unknown ids throw ParseError; infeasible sizes throw SizeError.
 */
VerifyReport verify_theorem(const std::string& id, const VerifyConfig& cfg);

// The spelled ids accepted by verify_theorem, in documentation order.
const std::vector<std::string>& verify_theorem_ids();

struct PreconditionCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct OverlapCell {
  std::string row;      // "quasi-godel-sentence" or "quasi-consistency and quasi-completeness"
  std::string column;   // "no dictator" or "dictator"
  std::string status;   // "holds", "fails", "satisfiable"
  std::string expected; // the published pattern for this cell
  long long checked = 0;
  std::optional<int> witness;  // full profile handle backing the cell
  std::string witness_text;
  std::string detail;

  bool matches() const { return status == expected; }
};

struct OverlapReport {
  bool preconditions_ok = false;
  std::vector<PreconditionCheck> preconditions;
  std::vector<OverlapCell> cells;
  bool pass = false;
  std::string note;
};

/** Evaluates the two-column overlap pattern: under the non-dictatorial rule
 * every collapsing profile is a quasi-Godel sentence and never satisfies
 * both remaining flags; under the dictatorial rule (at individual i, with
 * cycle-free surjective image and negation-commuting aggregation) no valid
 * profile is a quasi-Godel sentence and the flag conjunction is satisfiable
 * with an explicit witness. Every cell is backed by enumeration.
 */
OverlapReport table_overlap_report(const Swf& w_nodict, const Swf& w_dict, int i);

// Aligned text rendering; unicode picks check and cross marks over ASCII.
std::string render_overlap_table(const OverlapReport& report, bool unicode);

}  // namespace preflab
