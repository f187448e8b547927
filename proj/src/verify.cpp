#include "preflab/verify.hpp"

#include <algorithm>
#include <atomic>
#include <random>
#include <sstream>
#include <thread>

namespace preflab {

namespace {

struct Instance {
  AlternativeSet alts;
  PrefLattice lat;
  ProfileSpace space;
  Swf w;

  Instance(const VerifyConfig& cfg)
      : alts(AlternativeSet::letters(cfg.m)),
        lat(alts),
        space(lat, cfg.n),
        w(make_rule(space, cfg.rule)) {}
};

std::string summarize(const std::string& id, const VerifyConfig& cfg) {
  std::ostringstream os;
  os << id << " m=" << cfg.m << " N=" << cfg.n << " rule=" << cfg.rule
     << " i=" << (cfg.i + 1);
  if (id == "arrow-main") {
    os << (cfg.slow ? " mode=slow" : " mode=fast");
    if (!cfg.slow) {
      os << (cfg.app.empty() ? " app=generated seed=" + std::to_string(cfg.seed)
                             : " app=supplied");
    }
  }
  return os.str();
}

void push(VerifyReport& r, std::string name, bool pass, std::string detail = {}) {
  r.checks.push_back(TheoremCheck{std::move(name), pass, std::move(detail)});
}

bool all_pass(const VerifyReport& r) {
  for (const auto& c : r.checks) {
    if (!c.pass) return false;
  }
  return true;
}

VerifyReport verify_arrow_full(const VerifyConfig& cfg) {
  Instance in(cfg);
  VerifyReport r;
  const AuditReport a = audit(in.w);
  r.applicable = a.arrow_hypotheses();
  const auto pair = find_condorcet_witnesses(in.w);
  r.enumerated = in.space.num_valid();
  if (r.applicable) {
    push(r, "unanimity on order outcomes", a.unanimity_on_orders.holds);
    push(r, "independence of irrelevant alternatives", a.iia.holds);
    push(r, "no dictator", !a.dictator.has_value());
    push(r, "incompatible collapsing pair exists", pair.has_value());
    if (pair) {
      const auto [q, q2] = *pair;
      push(r, "both aggregates contradictory",
           in.w.eval(q) == in.lat.cycle_id() && in.w.eval(q2) == in.lat.cycle_id());
      bool incompatible = false;
      for (int j = 0; j < cfg.n; ++j) {
        if (in.lat.meet(in.space.coordinate(q, j), in.space.coordinate(q2, j)) ==
            in.lat.cycle_id()) {
          incompatible = true;
        }
      }
      push(r, "some coordinate pair is incompatible", incompatible);
      r.witnesses.push_back(in.space.format(q));
      r.witnesses.push_back(in.space.format(q2));
    }
    r.pass = all_pass(r);
  } else {
    push(r, "unanimity on order outcomes", a.unanimity_on_orders.holds);
    push(r, "independence of irrelevant alternatives", a.iia.holds);
    push(r, "no dictator", !a.dictator.has_value());
    r.note = std::string("hypotheses fail, nothing to verify; collapsing pair ") +
             (pair ? "exists anyway" : "absent");
    if (pair) {
      r.witnesses.push_back(in.space.format(pair->first));
      r.witnesses.push_back(in.space.format(pair->second));
    }
    r.pass = true;
  }
  return r;
}

// The two canonical pairs that refute every candidate expression: with
// w(q) = w(q') = bottom and enc(q) = enc(q'), the images of q and q' under
// any expression coincide, so either (q, q) or (q, q') breaks the
// biconditional.
bool refuted_by_canonical_pairs(const Srs& s, const ValidSubset& d, int y, int q, int q2) {
  const int z = s.star(y, q);
  if (s.star(y, q2) != z) return false;
  const bool self = consistent(d, z, z);
  return self ? (consistent(d, q, q2) ? false : true) : true;
}

VerifyReport verify_arrow_main(const VerifyConfig& cfg) {
  Instance in(cfg);
  VerifyReport r;
  const AuditReport a = audit(in.w);
  r.applicable = a.arrow_hypotheses();
  if (!r.applicable) {
    r.note = "rule must be unanimous, independent and non-dictatorial; nothing to verify";
    r.pass = true;
    return r;
  }
  const auto pair = find_condorcet_witnesses(in.w);
  push(r, "incompatible collapsing pair exists", pair.has_value());
  if (!pair) {
    r.pass = false;
    return r;
  }
  const auto [q, q2] = *pair;
  r.witnesses.push_back(in.space.format(q));
  r.witnesses.push_back(in.space.format(q2));
  const ValidSubset d = valid_profiles_subset(in.space);

  if (cfg.slow) {
    const FamilyKind kinds[] = {FamilyKind::kOmega, FamilyKind::kMeet, FamilyKind::kPlus};
    for (FamilyKind k : kinds) {
      const AppFamily fam{k, cfg.i};
      const Srs s = make_srs(in.w, fam);
      // Shards scan disjoint candidate ranges; the smallest respecting
      // candidate wins so worker count cannot change the report.
      std::atomic<int> found{s.num_expressions};
      auto scan = [&](int lo, int hi) {
        for (int y = lo; y < hi; ++y) {
          if (y >= found.load(std::memory_order_relaxed)) break;
          if (is_consistency_respecting(s, y, d).holds) {
            int cur = found.load();
            while (y < cur && !found.compare_exchange_weak(cur, y)) {
            }
            break;
          }
        }
      };
      const int workers = std::clamp(cfg.workers, 1, 64);
      if (workers == 1) {
        scan(0, s.num_expressions);
      } else {
        std::vector<std::thread> pool;
        const int chunk = (s.num_expressions + workers - 1) / workers;
        for (int t = 0; t < workers; ++t) {
          const int lo = t * chunk;
          const int hi = std::min(s.num_expressions, lo + chunk);
          if (lo < hi) pool.emplace_back(scan, lo, hi);
        }
        for (auto& th : pool) th.join();
      }
      const int respecting = found.load();
      const bool none_respecting = respecting == s.num_expressions;
      r.enumerated += s.num_expressions;
      push(r, "no respecting expression in family " + family_name(fam), none_respecting,
           none_respecting ? std::to_string(s.num_expressions) + " candidates refuted"
                           : "candidate " + in.space.format(respecting));
    }
  } else {
    Srs s;
    s.num_expressions = static_cast<int>(in.space.num_full());
    s.num_constants = in.lat.num_relations();
    s.enc.resize(static_cast<std::size_t>(s.num_expressions));
    for (int h = 0; h < s.num_expressions; ++h) s.enc[static_cast<std::size_t>(h)] = in.w.eval(h);
    if (!cfg.app.empty()) {
      s.app = cfg.app;
    } else {
      std::mt19937 rng(cfg.seed);
      s.app.resize(static_cast<std::size_t>(s.num_expressions) *
                   static_cast<std::size_t>(s.num_constants));
      for (auto& cell : s.app) {
        cell = static_cast<int>(rng() % static_cast<unsigned>(s.num_expressions));
      }
    }
    s.validate();

    push(r, "witness pair valid", in.space.is_valid(q) && in.space.is_valid(q2));
    push(r, "both aggregates contradictory",
         in.w.eval(q) == in.lat.cycle_id() && in.w.eval(q2) == in.lat.cycle_id());
    push(r, "pair incompatible", !consistent(d, q, q2));
    push(r, "self-consistency of each witness",
         consistent(d, q, q) && consistent(d, q2, q2));
    bool images_agree = true;
    for (int y = 0; y < s.num_expressions && images_agree; ++y) {
      if (s.star(y, q) != s.star(y, q2)) images_agree = false;
    }
    push(r, "every expression maps the pair identically", images_agree);
    bool all_refuted = true;
    for (int y = 0; y < s.num_expressions && all_refuted; ++y) {
      if (!refuted_by_canonical_pairs(s, d, y, q, q2)) all_refuted = false;
    }
    push(r, "every expression refuted on a canonical pair", all_refuted);
    r.enumerated = s.num_expressions;
  }
  r.pass = all_pass(r);
  return r;
}

VerifyReport verify_strong_dictator(const VerifyConfig& cfg) {
  Instance in(cfg);
  VerifyReport r;
  const bool dict = has_dictator(in.w, cfg.i);
  const bool veto = has_vetoer(in.w, cfg.i);
  r.applicable = dict && veto;
  push(r, "dictator at i", dict);
  push(r, "vetoer at i", veto);
  if (!r.applicable) {
    r.note = "rule is not a strong dictatorship at i; nothing to verify";
    r.pass = true;
    return r;
  }
  const Srs s = make_srs(in.w, AppFamily{FamilyKind::kMeet, cfg.i});
  const int y = in.space.top();
  const ValidSubset di = coordinate_order_subset(in.space, cfg.i);
  const auto cr = is_consistency_respecting(s, y, di);
  r.enumerated = di.member_count() * (di.member_count() + 1) / 2;
  push(r, "all-indifferent profile respects consistency", cr.holds,
       cr.holds ? std::to_string(r.enumerated) + " member pairs checked"
                : "violating pair " + in.space.format(cr.witness->first) + ", " +
                      in.space.format(cr.witness->second));
  // The all-orders subset breaks the biconditional as soon as a second
  // individual can disagree while the distinguished coordinates agree; the
  // valid subset that looks only at coordinate i is the one the result
  // needs. The failure is recorded for transparency, not counted.
  const ValidSubset dp = valid_profiles_subset(in.space);
  const auto literal = is_consistency_respecting(s, y, dp);
  if (!literal.holds) {
    r.note = "all-orders subset fails as expected at pair " +
             in.space.format(literal.witness->first) + ", " +
             in.space.format(literal.witness->second);
  } else {
    r.note = "all-orders subset also passes";
  }
  r.pass = all_pass(r);
  return r;
}

VerifyReport verify_condorcet_abstract(const VerifyConfig& cfg) {
  Instance in(cfg);
  VerifyReport r;
  const AuditReport a = audit(in.w);
  r.applicable = a.arrow_hypotheses();
  push(r, "unanimity on orders and independence, no dictator", r.applicable);
  if (!r.applicable) {
    r.note = "rule must be unanimous, independent and non-dictatorial; nothing to verify";
    r.pass = true;
    return r;
  }
  const Srs s = make_srs(in.w, AppFamily{FamilyKind::kOmega, cfg.i});
  const int y = indicator_handle(in.space, cfg.i);
  const ValidSubset d = valid_profiles_subset(in.space);

  const auto qg = is_quasi_godelian(s, y, d);
  push(r, "system is quasi-Godelian for the indicator", qg.quasi_godelian);
  if (qg.witness) r.witnesses.push_back(in.space.format(*qg.witness));

  bool all_sentences = true;
  bool exclusivity = true;
  bool tops = true;
  long long collapsing = 0;
  for (int h = 0; h < static_cast<int>(in.space.num_full()); ++h) {
    if (!in.space.is_valid(h) || in.w.eval(h) != in.lat.cycle_id()) continue;
    ++collapsing;
    const QuasiFlags f = quasi_flags(s, y, h, d);
    if (!f.quasi_godel_sentence) all_sentences = false;
    if (f.quasi_consistent && f.quasi_complete) exclusivity = false;
    if (f.quasi_complete != !f.quasi_consistent) exclusivity = false;
    if (d.host.neg(s.star(y, h)) != in.space.top()) tops = false;
  }
  r.enumerated = collapsing;
  push(r, "collapsing profiles exist", collapsing > 0,
       std::to_string(collapsing) + " found");
  push(r, "every collapsing profile is a quasi-Godel sentence", all_sentences);
  push(r, "negated image of each collapsing profile is the top profile", tops);
  push(r, "quasi-completeness mirrors failed quasi-consistency on them", exclusivity);
  r.pass = all_pass(r);
  return r;
}

VerifyReport verify_dictator_abstract(const VerifyConfig& cfg) {
  Instance in(cfg);
  VerifyReport r;
  const AuditReport a = audit(in.w);
  const bool dict = has_dictator(in.w, cfg.i);
  const DomainReport dom = check_unrestricted_domain(in.w);
  r.applicable = a.unanimity_on_orders.holds && a.iia.holds && dict &&
                 dom.never_contradictory && dom.image_is_all_orders;
  push(r, "unanimity and independence", a.unanimity_on_orders.holds && a.iia.holds);
  push(r, "dictator at i", dict);
  push(r, "image cycle-free over valid profiles", dom.never_contradictory);
  push(r, "image covers every weak order", dom.image_is_all_orders);
  if (!r.applicable) {
    r.note = "hypotheses fail for this rule; nothing to verify";
    r.pass = true;
    return r;
  }
  const Srs s = make_srs(in.w, AppFamily{FamilyKind::kOmega, cfg.i});
  const int y = indicator_handle(in.space, cfg.i);
  const ValidSubset d = valid_profiles_subset(in.space);
  bool none = true;
  for (int h = 0; h < static_cast<int>(in.space.num_full()); ++h) {
    if (!in.space.is_valid(h)) continue;
    ++r.enumerated;
    if (quasi_flags(s, y, h, d).quasi_godel_sentence) {
      none = false;
      r.witnesses.push_back(in.space.format(h));
      break;
    }
  }
  push(r, "no valid profile is a quasi-Godel sentence", none);
  const auto qg = is_quasi_godelian(s, y, d);
  push(r, "system is not quasi-Godelian for the indicator", !qg.quasi_godelian);
  r.pass = all_pass(r);
  return r;
}

VerifyReport verify_dictator_abstract_2(const VerifyConfig& cfg) {
  Instance in(cfg);
  VerifyReport r;
  const AuditReport a = audit(in.w);
  const bool dict = has_dictator(in.w, cfg.i);
  r.applicable = a.unanimity_on_orders.holds && a.iia.holds && dict;
  push(r, "unanimity and independence", a.unanimity_on_orders.holds && a.iia.holds);
  push(r, "dictator at i", dict);
  if (!r.applicable) {
    r.note = "rule must be unanimous, independent and dictatorial at i; nothing to verify";
    r.pass = true;
    return r;
  }
  const Srs s = make_srs(in.w, AppFamily{FamilyKind::kOmega, cfg.i});
  const int y = indicator_handle(in.space, cfg.i);
  const ValidSubset d = valid_profiles_subset(in.space);
  long long checked = 0;
  long long skipped_indifferent = 0;
  long long skipped_neutrality = 0;
  bool all_hold = true;
  for (int h = 0; h < static_cast<int>(in.space.num_full()); ++h) {
    if (!in.space.is_valid(h)) continue;
    if (in.space.coordinate(h, cfg.i) == in.lat.top_id()) {
      ++skipped_indifferent;
      continue;
    }
    if (in.w.eval(in.space.negate(h)) != in.lat.negate(in.w.eval(h))) {
      ++skipped_neutrality;
      continue;
    }
    ++checked;
    const QuasiFlags f = quasi_flags(s, y, h, d);
    if (!(f.quasi_consistent && f.quasi_complete)) {
      all_hold = false;
      if (r.witnesses.empty()) r.witnesses.push_back(in.space.format(h));
    }
  }
  r.enumerated = checked;
  push(r, "hypothesis profiles exist", checked > 0,
       std::to_string(checked) + " checked, " + std::to_string(skipped_indifferent) +
           " fully indifferent at i, " + std::to_string(skipped_neutrality) +
           " not commuting with negation");
  push(r, "quasi-consistency and quasi-completeness hold on all of them", all_hold);
  r.pass = all_pass(r);
  return r;
}

}  // namespace

const std::vector<std::string>& verify_theorem_ids() {
  static const std::vector<std::string> ids = {
      "arrow-full",         "arrow-main",        "strong-dictator",
      "condorcet-abstract", "dictator-abstract", "dictator-abstract-2"};
  return ids;
}

VerifyReport verify_theorem(const std::string& id, const VerifyConfig& cfg) {
  VerifyReport r;
  if (id == "arrow-full") {
    r = verify_arrow_full(cfg);
  } else if (id == "arrow-main") {
    r = verify_arrow_main(cfg);
  } else if (id == "strong-dictator") {
    r = verify_strong_dictator(cfg);
  } else if (id == "condorcet-abstract") {
    r = verify_condorcet_abstract(cfg);
  } else if (id == "dictator-abstract") {
    r = verify_dictator_abstract(cfg);
  } else if (id == "dictator-abstract-2") {
    r = verify_dictator_abstract_2(cfg);
  } else {
    throw ParseError("unknown theorem id: " + id);
  }
  r.theorem = id;
  r.config_summary = summarize(id, cfg);
  return r;
}

OverlapReport table_overlap_report(const Swf& w_nodict, const Swf& w_dict, int i) {
  OverlapReport rep;
  const ProfileSpace& sn = w_nodict.space();
  const ProfileSpace& sd = w_dict.space();
  if (sn.individuals() != sd.individuals() ||
      sn.lattice().num_orders() != sd.lattice().num_orders()) {
    throw DimensionError("the two rules must share alternative and individual counts");
  }

  const AuditReport an = audit(w_nodict);
  rep.preconditions.push_back(
      {"left rule unanimous on order outcomes", an.unanimity_on_orders.holds, w_nodict.name()});
  rep.preconditions.push_back({"left rule independent", an.iia.holds, w_nodict.name()});
  rep.preconditions.push_back(
      {"left rule has no dictator", !an.dictator.has_value(), w_nodict.name()});

  const bool dict = has_dictator(w_dict, i);
  const DomainReport dom = check_unrestricted_domain(w_dict);
  rep.preconditions.push_back({"right rule dictatorial at i", dict, w_dict.name()});
  rep.preconditions.push_back(
      {"right rule image cycle-free", dom.never_contradictory, w_dict.name()});
  rep.preconditions.push_back(
      {"right rule image covers every weak order", dom.image_is_all_orders, w_dict.name()});

  bool neutral = true;
  std::string neutral_detail;
  for (int h = 0; h < static_cast<int>(sd.num_full()); ++h) {
    if (!sd.is_valid(h)) continue;
    if (w_dict.eval(sd.negate(h)) != sd.lattice().negate(w_dict.eval(h))) {
      neutral = false;
      neutral_detail = "fails at " + sd.format(h);
      break;
    }
  }
  rep.preconditions.push_back(
      {"right rule commutes with negation on valid profiles", neutral, neutral_detail});

  rep.preconditions_ok = true;
  for (const auto& p : rep.preconditions) {
    if (!p.pass) rep.preconditions_ok = false;
  }
  if (!rep.preconditions_ok) {
    rep.note = "preconditions failed; cells not evaluated";
    return rep;
  }

  const Srs sys_n = make_srs(w_nodict, AppFamily{FamilyKind::kOmega, i});
  const Srs sys_d = make_srs(w_dict, AppFamily{FamilyKind::kOmega, i});
  const int yn = indicator_handle(sn, i);
  const int yd = indicator_handle(sd, i);
  const ValidSubset dn = valid_profiles_subset(sn);
  const ValidSubset dd = valid_profiles_subset(sd);

  {
    OverlapCell c;
    c.row = "quasi-godel-sentence";
    c.column = "no dictator";
    c.expected = "holds";
    bool all = true;
    for (int h = 0; h < static_cast<int>(sn.num_full()); ++h) {
      if (!sn.is_valid(h) || w_nodict.eval(h) != sn.lattice().cycle_id()) continue;
      ++c.checked;
      const QuasiFlags f = quasi_flags(sys_n, yn, h, dn);
      if (!f.quasi_godel_sentence) all = false;
      if (!c.witness) {
        c.witness = h;
        c.witness_text = sn.format(h);
      }
    }
    c.status = (c.checked > 0 && all) ? "holds" : "fails";
    c.detail = std::to_string(c.checked) + " collapsing profiles";
    rep.cells.push_back(std::move(c));
  }
  {
    OverlapCell c;
    c.row = "quasi-consistency and quasi-completeness";
    c.column = "no dictator";
    c.expected = "fails";
    bool never = true;
    for (int h = 0; h < static_cast<int>(sn.num_full()); ++h) {
      if (!sn.is_valid(h) || w_nodict.eval(h) != sn.lattice().cycle_id()) continue;
      ++c.checked;
      const QuasiFlags f = quasi_flags(sys_n, yn, h, dn);
      if (f.quasi_consistent && f.quasi_complete) {
        never = false;
        c.witness = h;
        c.witness_text = sn.format(h);
      }
    }
    c.status = never ? "fails" : "satisfiable";
    c.detail = std::to_string(c.checked) + " collapsing profiles";
    rep.cells.push_back(std::move(c));
  }
  {
    OverlapCell c;
    c.row = "quasi-godel-sentence";
    c.column = "dictator";
    c.expected = "fails";
    bool never = true;
    for (int h = 0; h < static_cast<int>(sd.num_full()); ++h) {
      if (!sd.is_valid(h)) continue;
      ++c.checked;
      const QuasiFlags f = quasi_flags(sys_d, yd, h, dd);
      if (f.quasi_godel_sentence) {
        never = false;
        c.witness = h;
        c.witness_text = sd.format(h);
      }
    }
    c.status = never ? "fails" : "satisfiable";
    c.detail = std::to_string(c.checked) + " valid profiles";
    rep.cells.push_back(std::move(c));
  }
  {
    OverlapCell c;
    c.row = "quasi-consistency and quasi-completeness";
    c.column = "dictator";
    c.expected = "satisfiable";
    bool found = false;
    long long holding = 0;
    for (int h = 0; h < static_cast<int>(sd.num_full()); ++h) {
      if (!sd.is_valid(h)) continue;
      if (sd.coordinate(h, i) == sd.lattice().top_id()) continue;
      ++c.checked;
      const QuasiFlags f = quasi_flags(sys_d, yd, h, dd);
      if (f.quasi_consistent && f.quasi_complete) {
        ++holding;
        if (!found) {
          found = true;
          c.witness = h;
          c.witness_text = sd.format(h);
        }
      }
    }
    c.status = found ? "satisfiable" : "fails";
    c.detail = std::to_string(holding) + " of " + std::to_string(c.checked) +
               " candidates satisfy both";
    rep.cells.push_back(std::move(c));
  }

  rep.pass = rep.preconditions_ok;
  for (const auto& c : rep.cells) {
    if (!c.matches()) rep.pass = false;
  }
  return rep;
}

std::string render_overlap_table(const OverlapReport& report, bool unicode) {
  const char* yes = unicode ? "✓" : "yes";
  const char* no = unicode ? "✗" : "no";
  auto mark = [&](const std::string& status) -> std::string {
    if (status == "holds") return yes;
    if (status == "fails") return no;
    return "Satisfiable";
  };
  std::ostringstream os;
  os << "precondition checks:\n";
  for (const auto& p : report.preconditions) {
    os << "  [" << (p.pass ? "ok" : "FAIL") << "] " << p.name;
    if (!p.detail.empty()) os << " (" << p.detail << ")";
    os << "\n";
  }
  if (!report.preconditions_ok) {
    os << report.note << "\n";
    return os.str();
  }
  auto cell = [&](const std::string& row, const std::string& col) -> const OverlapCell* {
    for (const auto& c : report.cells) {
      if (c.row == row && c.column == col) return &c;
    }
    return nullptr;
  };
  const std::string rows[] = {"quasi-godel-sentence", "quasi-consistency and quasi-completeness"};
  os << "\n";
  os << "condition                                 | no dictator | dictator\n";
  os << "------------------------------------------+-------------+------------\n";
  for (const auto& row : rows) {
    std::string label = row;
    label.resize(41, ' ');
    const OverlapCell* a = cell(row, "no dictator");
    const OverlapCell* b = cell(row, "dictator");
    std::string left = a ? mark(a->status) : "?";
    left.resize(std::max<std::size_t>(left.size(), 11), ' ');
    os << label << " | " << left << " | " << (b ? mark(b->status) : "?") << "\n";
  }
  os << "\n";
  for (const auto& c : report.cells) {
    os << c.row << " / " << c.column << ": " << c.detail;
    if (c.witness) os << "; witness " << c.witness_text;
    os << (c.matches() ? "" : "  [UNEXPECTED]") << "\n";
  }
  return os.str();
}

}  // namespace preflab
