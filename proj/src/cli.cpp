#include "preflab/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "preflab/json_io.hpp"

namespace preflab {

namespace {

constexpr int kOk = 0;
constexpr int kPropertyFailure = 1;
constexpr int kUsageError = 2;

struct Options {
  int m = 3;
  int n = 2;
  std::string rule = "majority";
  std::string family;  // empty: omega at --i
  int i = 1;           // 1-based
  std::string mode = "fast";
  std::string format = "text";
  bool allow_large = false;
  bool ascii = false;
  bool unicode = false;
  unsigned seed = 12345;
  std::string profile_json;
  std::string d_json;
  std::string expr;
  std::string input_path;
  std::string app_path;
  std::string output_path;
  std::string theorem;
  std::string nodict_rule = "majority";
  std::string dict_rule;
};

bool env_suggests_utf8() {
  for (const char* var : {"LC_ALL", "LC_CTYPE", "LANG"}) {
    const char* v = std::getenv(var);
    if (v == nullptr || *v == '\0') continue;
    std::string s(v);
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s.find("utf") != std::string::npos;
  }
  return false;
}

int worker_count() {
  const char* v = std::getenv("PREFLAB_WORKERS");
  if (v == nullptr || *v == '\0') return 1;
  int n = 0;
  const auto [p, ec] = std::from_chars(v, v + std::char_traits<char>::length(v), n);
  if (ec != std::errc() || *p != '\0' || n < 1)
    throw ParseError("PREFLAB_WORKERS must be a positive integer");
  return n;
}

struct Marks {
  const char* yes;
  const char* no;

  explicit Marks(bool unicode) : yes(unicode ? "✓" : "yes"), no(unicode ? "✗" : "no") {}
  const char* operator()(bool b) const { return b ? yes : no; }
};

void check_size(const Options& o) {
  if ((o.m > 4 || o.n > 4) && !o.allow_large)
    throw SizeError("m > 4 or N > 4 requires --allow-large");
  if (o.m < 1) throw ParseError("m must be at least 1");
  if (o.n < 1) throw ParseError("N must be at least 1");
}

int index0(const Options& o, int n) {
  if (o.i < 1 || o.i > n) throw ParseError("--i must be between 1 and N");
  return o.i - 1;
}

Json parse_json_text(const std::string& text, const char* what) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ParseError(std::string(what) + ": malformed JSON");
  return j;
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_json_text(buf.str(), path.c_str());
}

// Rules whose selector carries its own individual already; everything else
// takes i from --i.
Swf build_rule(const ProfileSpace& space, const std::string& selector,
               const std::string& input_path) {
  if (selector == "table") {
    if (input_path.empty()) throw ParseError("--rule table requires --input with a table file");
    return swf_from_table_json(space, load_json_file(input_path));
  }
  return make_rule(space, selector);
}

struct SystemBundle {
  std::optional<AlternativeSet> alts;
  std::optional<PrefLattice> lat;
  std::optional<ProfileSpace> space;
  std::optional<Swf> w;
  EmbeddableSrs es;
  bool built_in = false;
  int i0 = 0;
  std::string label;
};

SystemBundle build_system(const Options& o) {
  SystemBundle b;
  if (!o.input_path.empty() && o.rule != "table") {
    b.es = embeddable_srs_from_json(load_json_file(o.input_path));
    b.label = o.input_path;
    return b;
  }
  check_size(o);
  b.alts.emplace(AlternativeSet::letters(o.m));
  b.lat.emplace(*b.alts);
  b.space.emplace(*b.lat, o.n);
  b.w.emplace(build_rule(*b.space, o.rule, o.input_path));
  b.i0 = index0(o, o.n);
  AppFamily fam{FamilyKind::kOmega, b.i0};
  if (!o.family.empty()) {
    fam = parse_family(o.family, o.n);
    if (o.i != 1 && fam.i != b.i0)
      throw ParseError("--family index and --i disagree; set one of them");
  }
  b.es = make_embeddable_srs(*b.w, fam);
  b.built_in = true;
  b.i0 = fam.i;
  b.label = "(" + b.w->name() + ", " + family_name(fam) + ")";
  return b;
}

void emit(const Options& o, std::ostream& out, const std::string& text) {
  if (o.output_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(o.output_path, std::ios::binary);
  if (!f) throw ParseError("cannot open output file: " + o.output_path);
  f << text;
}

// ---------------------------------------------------------------- enumerate

int cmd_enumerate(const Options& o, bool with_n, std::ostream& out) {
  check_size(o);
  const AlternativeSet alts = AlternativeSet::letters(o.m);
  const PrefLattice lat(alts);
  std::ostringstream os;
  if (!with_n) {
    if (o.format == "json") {
      Json j;
      j["m"] = o.m;
      Json orders = Json::array();
      for (int id = 0; id < lat.num_orders(); ++id) orders.push_back(lat.format(id));
      j["orders"] = std::move(orders);
      os << dump_json(j);
    } else {
      for (int id = 0; id < lat.num_orders(); ++id) os << lat.format(id) << "\n";
    }
  } else {
    const ProfileSpace space(lat, o.n);
    if (o.format == "json") {
      Json j;
      j["m"] = o.m;
      j["N"] = o.n;
      Json profiles = Json::array();
      for (long long v = 0; v < space.num_valid(); ++v) {
        Json arr = Json::array();
        for (const auto& chain : space.chains(space.full_of_valid(v))) arr.push_back(chain);
        profiles.push_back(std::move(arr));
      }
      j["profiles"] = std::move(profiles);
      os << dump_json(j);
    } else {
      for (long long v = 0; v < space.num_valid(); ++v)
        os << space.format(space.full_of_valid(v)) << "\n";
    }
  }
  emit(o, out, os.str());
  return kOk;
}

// --------------------------------------------------------------------- eval

int cmd_eval(const Options& o, std::ostream& out) {
  if (o.profile_json.empty()) throw ParseError("eval requires --profile");
  const Json pj = parse_json_text(o.profile_json, "--profile");
  int n = o.n;
  if (pj.is_array()) n = static_cast<int>(pj.size());
  else if (pj.is_object() && pj.contains("profile") && pj["profile"].is_array())
    n = static_cast<int>(pj["profile"].size());
  Options sized = o;
  sized.n = n;
  check_size(sized);

  const AlternativeSet alts = AlternativeSet::letters(o.m);
  const PrefLattice lat(alts);
  const ProfileSpace space(lat, n);
  const Swf w = build_rule(space, o.rule, o.input_path);
  const int h = profile_from_json(space, pj);
  const int result = w.eval(h);
  std::ostringstream os;
  if (o.format == "json") os << dump_json(order_to_json(lat, result));
  else os << lat.format(result) << "\n";
  emit(o, out, os.str());
  return kOk;
}

// -------------------------------------------------------------------- audit

std::string render_audit_text(const AuditReport& a, const ProfileSpace& space, const Marks& mk) {
  const PrefLattice& lat = space.lattice();
  std::ostringstream os;
  os << "rule " << a.rule << "  m=" << a.m << " N=" << a.n << "\n";
  os << "unanimity            " << mk(a.unanimity.holds);
  if (a.unanimity.witness) {
    const auto& w = *a.unanimity.witness;
    const auto [x, y] = lat.pair_layout()[static_cast<std::size_t>(w.pair)];
    os << "  violated at " << space.format(w.profile_handle) << " on ("
       << lat.alternatives().name(x) << "," << lat.alternatives().name(y) << ") with aggregate "
       << lat.format(w.aggregate_id);
  }
  os << "\n";
  os << "unanimity on orders  " << mk(a.unanimity_on_orders.holds);
  if (a.unanimity_on_orders.witness) {
    const auto& w = *a.unanimity_on_orders.witness;
    const auto [x, y] = lat.pair_layout()[static_cast<std::size_t>(w.pair)];
    os << "  violated at " << space.format(w.profile_handle) << " on ("
       << lat.alternatives().name(x) << "," << lat.alternatives().name(y) << ") with aggregate "
       << lat.format(w.aggregate_id);
  }
  os << "\n";
  os << "IIA                  " << mk(a.iia.holds) << (a.iia.exact ? " (exact)" : " (outcomes)");
  if (a.iia.witness) {
    const auto& w = *a.iia.witness;
    const auto [x, y] = lat.pair_layout()[static_cast<std::size_t>(w.pair)];
    os << "  violated by " << space.format(w.profile_a) << " vs " << space.format(w.profile_b)
       << " on (" << lat.alternatives().name(x) << "," << lat.alternatives().name(y) << ")";
  }
  os << "\n";
  os << "dictator             ";
  if (a.dictator) os << "individual " << (*a.dictator + 1);
  else os << "none";
  os << "\n";
  os << "vetoers              ";
  if (a.vetoers.empty()) {
    os << "none";
  } else {
    for (std::size_t k = 0; k < a.vetoers.size(); ++k)
      os << (k ? ", " : "") << "individual " << (a.vetoers[k] + 1);
  }
  os << "\n";
  os << "unrestricted domain  " << mk(a.domain.image_is_all_orders && a.domain.never_contradictory);
  if (a.domain.contradictory_witness)
    os << "  collapses at " << space.format(*a.domain.contradictory_witness);
  if (a.domain.missed_order) os << "  image misses " << lat.format(*a.domain.missed_order);
  os << "\n";
  if (a.condorcet_witness) {
    os << "collapsing pair      " << space.format(a.condorcet_witness->first) << " and "
       << space.format(a.condorcet_witness->second) << "\n";
  }
  os << "arrow hypotheses     " << mk(a.arrow_hypotheses()) << "\n";
  return os.str();
}

int cmd_audit(const Options& o, bool unicode, std::ostream& out) {
  check_size(o);
  const AlternativeSet alts = AlternativeSet::letters(o.m);
  const PrefLattice lat(alts);
  const ProfileSpace space(lat, o.n);
  const Swf w = build_rule(space, o.rule, o.input_path);
  const AuditReport a = audit(w);
  std::ostringstream os;
  if (o.format == "json") os << dump_json(audit_report_to_json(a, space));
  else os << render_audit_text(a, space, Marks(unicode));
  emit(o, out, os.str());
  return kOk;
}

// ------------------------------------------------------------------ witness

int cmd_witness(const Options& o, std::ostream& out) {
  check_size(o);
  const AlternativeSet alts = AlternativeSet::letters(o.m);
  const PrefLattice lat(alts);
  const ProfileSpace space(lat, o.n);
  const Swf w = build_rule(space, o.rule, o.input_path);
  const auto pair = find_condorcet_witnesses(w);
  std::ostringstream os;
  if (o.format == "json") {
    Json j;
    j["rule"] = w.name();
    j["m"] = o.m;
    j["N"] = o.n;
    j["found"] = pair.has_value();
    if (pair) {
      j["q"] = profile_to_json(space, pair->first)["profile"];
      j["q_prime"] = profile_to_json(space, pair->second)["profile"];
      j["aggregate"] = lat.format(w.eval(pair->first));
    }
    os << dump_json(j);
  } else if (pair) {
    os << "q       = " << space.format(pair->first) << "\n";
    os << "q'      = " << space.format(pair->second) << "\n";
    os << "w(q)    = " << lat.format(w.eval(pair->first)) << "\n";
    os << "w(q')   = " << lat.format(w.eval(pair->second)) << "\n";
    for (int j = 0; j < o.n; ++j) {
      if (lat.meet(space.coordinate(pair->first, j), space.coordinate(pair->second, j)) ==
          lat.cycle_id()) {
        os << "coordinate " << (j + 1) << " meets to " << lat.format(lat.cycle_id()) << "\n";
        break;
      }
    }
  } else {
    os << "no collapsing pair: " << w.name() << " maps no valid profile to "
       << lat.format(lat.cycle_id()) << "\n";
  }
  emit(o, out, os.str());
  return kOk;
}

// ---------------------------------------------------------------- srs-check

int cmd_srs_check(const Options& o, std::ostream& out) {
  const SystemBundle b = build_system(o);
  const Srs& s = b.es.base;

  const EmbeddingCheck ec = check_embeddable(s, b.es.emb, b.es.comp);
  const std::optional<int> diag = find_diagonaliser(b.es);
  const AdlReport adl = verify_adl(b.es);

  std::optional<int> expr;
  std::vector<int> expr_fixed;
  std::vector<int> domain;
  if (b.built_in) {
    const ProfileSpace& space = *b.space;
    for (int h = 0; h < static_cast<int>(space.num_full()); ++h)
      if (space.is_valid(h)) domain.push_back(h);
    if (o.expr.empty()) {
      expr = indicator_handle(space, b.i0);
    } else {
      expr = profile_from_json(space, parse_json_text(o.expr, "--expr"));
    }
    expr_fixed = find_fixed_points(s, *expr, domain);
  } else if (!o.expr.empty()) {
    int id = 0;
    const auto [p, ecv] = std::from_chars(o.expr.data(), o.expr.data() + o.expr.size(), id);
    if (ecv != std::errc() || p != o.expr.data() + o.expr.size())
      throw ParseError("--expr must be an expression id for a loaded system");
    if (id < 0 || id >= s.num_expressions) throw ParseError("--expr out of range");
    expr = id;
    expr_fixed = find_fixed_points(s, *expr);
  }
  bool indicator_diag = false;
  if (b.built_in) indicator_diag = is_diagonaliser(b.es, *expr, domain);

  auto name_expr = [&](int e) {
    return b.built_in ? b.space->format(e) : std::to_string(e);
  };

  std::ostringstream os;
  if (o.format == "json") {
    Json j;
    j["system"] = b.label;
    j["expressions"] = s.num_expressions;
    j["constants"] = s.num_constants;
    Json emb;
    emb["equation_holds"] = ec.embedding_holds;
    if (ec.embedding_witness)
      emb["witness"] = Json::array({ec.embedding_witness->first, ec.embedding_witness->second});
    emb["associativity_holds"] = ec.associativity_holds;
    emb["associativity_exhaustive"] = ec.associativity_exhaustive;
    if (!ec.note.empty()) emb["note"] = ec.note;
    j["embedding"] = std::move(emb);
    j["full_domain_diagonaliser"] = diag ? Json(name_expr(*diag)) : Json(nullptr);
    if (b.built_in) j["indicator_diagonaliser_on_valid"] = indicator_diag;
    if (expr) {
      Json fx;
      fx["expression"] = name_expr(*expr);
      Json pts = Json::array();
      for (int f : expr_fixed) pts.push_back(name_expr(f));
      fx["fixed_points"] = std::move(pts);
      j["fixed_points"] = std::move(fx);
    }
    j["adl"] = adl_report_to_json(adl);
    os << dump_json(j);
  } else {
    os << "system " << b.label << "  expressions=" << s.num_expressions
       << " constants=" << s.num_constants << "\n";
    os << "embedding equation        " << (ec.embedding_holds ? "holds" : "fails") << "\n";
    os << "composition associativity "
       << (ec.associativity_holds ? (ec.associativity_exhaustive ? "holds" : "holds (sampled)")
                                  : "fails")
       << "\n";
    os << "full-domain diagonaliser  " << (diag ? name_expr(*diag) : "none") << "\n";
    if (b.built_in) {
      os << "indicator diagonaliser on valid elements  " << (indicator_diag ? "yes" : "no")
         << "\n";
    }
    if (expr) {
      os << "fixed points of " << name_expr(*expr) << ": ";
      if (expr_fixed.empty()) {
        os << "none";
      } else {
        const std::size_t shown = std::min<std::size_t>(expr_fixed.size(), 8);
        for (std::size_t k = 0; k < shown; ++k) os << (k ? ", " : "") << name_expr(expr_fixed[k]);
        if (expr_fixed.size() > shown) os << ", ... (" << expr_fixed.size() << " total)";
      }
      os << "\n";
    }
    os << "diagonalisation lemma     ";
    switch (adl.status) {
      case AdlStatus::kPass:
        os << "pass (" << adl.fixed_points.size() << " constructed fixed points)";
        break;
      case AdlStatus::kFail: os << "FAIL"; break;
      case AdlStatus::kNotApplicable: os << "not applicable (no full-domain diagonaliser)"; break;
    }
    if (!adl.note.empty()) os << "  " << adl.note;
    os << "\n";
  }
  emit(o, out, os.str());
  return adl.status == AdlStatus::kFail ? kPropertyFailure : kOk;
}

// -------------------------------------------------------------------- quasi

int cmd_quasi(const Options& o, std::ostream& out) {
  const SystemBundle b = build_system(o);
  if (!b.built_in)
    throw ParseError("quasi needs a built-in rule and family, not a loaded descriptor");
  const ProfileSpace& space = *b.space;
  const Srs& s = b.es.base;
  const int y = indicator_handle(space, b.i0);
  const ValidSubset sub = valid_profiles_subset(space);
  const auto qg = is_quasi_godelian(s, y, sub);

  std::optional<int> d;
  std::optional<QuasiFlags> flags;
  if (!o.d_json.empty()) {
    d = profile_from_json(space, parse_json_text(o.d_json, "--d"));
    if (!sub.contains(*d)) throw ParseError("--d must be a valid profile");
    flags = quasi_flags(s, y, *d, sub);
  }

  std::ostringstream os;
  if (o.format == "json") {
    Json j;
    j["system"] = b.label;
    j["indicator"] = space.format(y);
    j["quasi_godelian"] = qg.quasi_godelian;
    j["witness"] = qg.witness ? Json(space.format(*qg.witness)) : Json(nullptr);
    if (flags) {
      Json f;
      f["d"] = space.format(*d);
      f["quasi_consistent"] = flags->quasi_consistent;
      f["quasi_godel_sentence"] = flags->quasi_godel_sentence;
      f["quasi_complete"] = flags->quasi_complete;
      j["flags"] = std::move(f);
    }
    os << dump_json(j);
  } else {
    os << "system " << b.label << "  indicator " << space.format(y) << "\n";
    os << "quasi-Godelian: " << (qg.quasi_godelian ? "yes" : "no");
    if (qg.witness) os << "  witness " << space.format(*qg.witness);
    os << "\n";
    if (flags) {
      os << "d = " << space.format(*d) << "\n";
      os << "  quasi-consistent:     " << (flags->quasi_consistent ? "yes" : "no") << "\n";
      os << "  quasi-Godel sentence: " << (flags->quasi_godel_sentence ? "yes" : "no") << "\n";
      os << "  quasi-complete:       " << (flags->quasi_complete ? "yes" : "no") << "\n";
    }
  }
  emit(o, out, os.str());
  return kOk;
}

// ------------------------------------------------------------------- table2

int cmd_table2(const Options& o, bool unicode, std::ostream& out) {
  check_size(o);
  const AlternativeSet alts = AlternativeSet::letters(o.m);
  const PrefLattice lat(alts);
  const ProfileSpace space(lat, o.n);
  const int i0 = index0(o, o.n);
  const std::string dict_selector =
      o.dict_rule.empty() ? "projection:" + std::to_string(o.i) : o.dict_rule;
  const Swf w_nodict = make_rule(space, o.nodict_rule);
  const Swf w_dict = make_rule(space, dict_selector);
  const OverlapReport rep = table_overlap_report(w_nodict, w_dict, i0);
  std::ostringstream os;
  if (o.format == "json") os << dump_json(overlap_report_to_json(rep));
  else os << render_overlap_table(rep, unicode);
  emit(o, out, os.str());
  return rep.pass ? kOk : kPropertyFailure;
}

// ----------------------------------------------------------------- selftest

// Weak-order counts by summing ordered set partitions: every weak order is
// a sequence of nonempty indifference classes.
long long count_weak_orders_oracle(int m) {
  std::vector<long long> binom((static_cast<std::size_t>(m) + 1) * (static_cast<std::size_t>(m) + 1), 0);
  auto c = [&](int a, int b) -> long long& {
    return binom[static_cast<std::size_t>(a) * (static_cast<std::size_t>(m) + 1) +
                 static_cast<std::size_t>(b)];
  };
  for (int a = 0; a <= m; ++a) {
    c(a, 0) = 1;
    for (int b = 1; b <= a; ++b) c(a, b) = c(a - 1, b - 1) + (b <= a - 1 ? c(a - 1, b) : 0);
  }
  std::vector<long long> count(static_cast<std::size_t>(m) + 1, 0);
  count[0] = 1;
  for (int k = 1; k <= m; ++k) {
    for (int first = 1; first <= k; ++first)
      count[static_cast<std::size_t>(k)] +=
          c(k, first) * count[static_cast<std::size_t>(k - first)];
  }
  return count[static_cast<std::size_t>(m)];
}

int cmd_selftest(const Options& o, bool unicode, std::ostream& out) {
  check_size(o);
  const Marks mk(unicode);
  std::ostringstream os;
  Json checks = Json::array();
  bool all = true;
  auto line = [&](const std::string& name, bool pass, const std::string& detail = {}) {
    os << (pass ? "[ok]   " : "[FAIL] ") << name;
    if (!detail.empty()) os << "  " << detail;
    os << "\n";
    Json e;
    e["name"] = name;
    e["pass"] = pass;
    if (!detail.empty()) e["detail"] = detail;
    checks.push_back(std::move(e));
    if (!pass) all = false;
  };

  for (int m = 2; m <= std::min(o.m, 4); ++m) {
    const AlternativeSet alts = AlternativeSet::letters(m);
    const PrefLattice lat(alts);
    const long long expected = count_weak_orders_oracle(m);
    line("weak-order count m=" + std::to_string(m) + " matches partition oracle",
         lat.num_orders() == expected,
         std::to_string(lat.num_orders()) + " vs " + std::to_string(expected));
    if (m <= 3) {
      const LawReport laws = check_lattice_laws(preference_ortho_view(lat));
      line("lattice laws m=" + std::to_string(m), laws.all_hold);
      line("complement not antitone from m=3 on",
           laws.complement_antitone == (m < 3),
           laws.antitone_witness.empty() ? "" : laws.antitone_witness);
    }
  }
  for (int k = 1; k <= 3; ++k) {
    const OrthoLattice alg = boolean_algebra(k);
    const LawReport laws = check_lattice_laws(alg);
    line("boolean algebra laws k=" + std::to_string(k), laws.all_hold);
    const ClassicalLemmaReport lem = check_classical_lemma(alg);
    line("orthocomplement equivalence on " + std::to_string(alg.size) + " elements", lem.holds);
  }
  {
    const AlternativeSet alts = AlternativeSet::letters(3);
    const PrefLattice lat(alts);
    const ClassicalLemmaReport lem = check_classical_lemma(preference_ortho_view(lat));
    line("orthocomplement equivalence fails on the preference lattice", !lem.holds, lem.witness);
  }
  {
    const AlternativeSet alts = AlternativeSet::letters(3);
    const PrefLattice lat(alts);
    const ProfileSpace space(lat, 2);
    for (const char* sel : {"majority", "borda", "projection:1", "projection:2"}) {
      const Swf w = make_rule(space, sel);
      bool ok = true;
      for (int i = 0; i < 2; ++i) {
        ok = ok && check_dictator_iff_fixed_point(w, i) && check_dictator_iff_diagonaliser(w, i);
      }
      line(std::string("dictator equivalences for ") + sel, ok);
    }
  }
  os << (all ? "selftest: all checks hold " : "selftest: FAILURES above ") << mk(all) << "\n";
  if (o.format == "json") {
    Json j;
    j["checks"] = std::move(checks);
    j["all_hold"] = all;
    emit(o, out, dump_json(j));
  } else {
    emit(o, out, os.str());
  }
  return all ? kOk : kPropertyFailure;
}

// ------------------------------------------------------------------- verify

std::string render_verify_text(const VerifyReport& r, const Marks& mk) {
  std::ostringstream os;
  os << r.config_summary << "\n";
  if (!r.applicable) os << "not applicable\n";
  for (const auto& c : r.checks) {
    os << "  " << mk(c.pass) << " " << c.name;
    if (!c.detail.empty()) os << "  (" << c.detail << ")";
    os << "\n";
  }
  for (const auto& w : r.witnesses) os << "  witness " << w << "\n";
  if (r.enumerated > 0) os << "  enumerated " << r.enumerated << "\n";
  if (!r.note.empty()) os << "  note: " << r.note << "\n";
  os << (r.pass ? "pass" : "FAIL") << "\n";
  return os.str();
}

int cmd_verify(const Options& o, bool unicode, std::ostream& out) {
  if (o.theorem.empty()) throw ParseError("verify requires --theorem");
  const auto& ids = verify_theorem_ids();
  if (std::find(ids.begin(), ids.end(), o.theorem) == ids.end()) {
    std::string known;
    for (const auto& id : ids) known += (known.empty() ? "" : ", ") + id;
    throw ParseError("unknown theorem id: " + o.theorem + " (known: " + known + ")");
  }
  check_size(o);
  VerifyConfig cfg;
  cfg.m = o.m;
  cfg.n = o.n;
  cfg.rule = o.rule;
  cfg.i = o.i - 1;
  if (cfg.i < 0 || cfg.i >= o.n) throw ParseError("--i must be between 1 and N");
  cfg.slow = o.mode == "slow";
  cfg.seed = o.seed;
  cfg.workers = worker_count();
  if (o.theorem == "arrow-main" && cfg.slow && o.n >= 3) {
    if (!o.allow_large)
      throw SizeError("slow mode at N >= 3 scans billions of pairs; pass --allow-large");
  }
  if (!o.app_path.empty()) {
    const Json aj = load_json_file(o.app_path);
    const Json& matrix = aj.is_object() && aj.contains("app") ? aj["app"] : aj;
    if (!matrix.is_array() || matrix.empty() || !matrix[0].is_array())
      throw ParseError("--app must hold an array of integer rows (or {\"app\": ...})");
    for (const auto& row : matrix) {
      if (!row.is_array() || row.size() != matrix[0].size())
        throw ParseError("--app rows must have equal length");
      for (const auto& x : row) {
        if (!x.is_number_integer()) throw ParseError("--app entries must be integers");
        cfg.app.push_back(x.get<int>());
      }
    }
  }
  const VerifyReport r = verify_theorem(o.theorem, cfg);
  std::ostringstream os;
  if (o.format == "json") os << dump_json(verify_report_to_json(r));
  else os << render_verify_text(r, Marks(unicode));
  emit(o, out, os.str());
  return r.pass ? kOk : kPropertyFailure;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"finite laboratory for preference aggregation and self-reference"};
  app.name("preflab");
  app.fallthrough();
  Options o;

  app.add_flag("--ascii", o.ascii, "force plain-ASCII report glyphs");
  app.add_flag("--unicode", o.unicode, "force unicode report glyphs");

  auto add_common = [&](CLI::App* c, bool with_rule) {
    c->add_option("--m", o.m, "number of alternatives")->capture_default_str();
    c->add_option("--N", o.n, "number of individuals")->capture_default_str();
    c->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();
    c->add_option("--output", o.output_path, "write the report to a file");
    c->add_flag("--allow-large", o.allow_large, "lift the m/N size guard and slow-mode gate");
    if (with_rule) {
      c->add_option("--rule", o.rule,
                    "majority | borda | projection:K | constant:CHAIN | table (with --input)")
          ->capture_default_str();
      c->add_option("--input", o.input_path, "JSON file for table rules or system descriptors");
    }
  };

  CLI::App* c_enum = app.add_subcommand("enumerate", "list weak orders, or valid profiles with --N");
  add_common(c_enum, false);

  CLI::App* c_eval = app.add_subcommand("eval", "aggregate one profile under a rule");
  add_common(c_eval, true);
  c_eval->add_option("--profile", o.profile_json, "profile JSON: [\"a<b<c\", ...] or an object");

  CLI::App* c_audit = app.add_subcommand("audit", "fairness-condition report for a rule");
  add_common(c_audit, true);

  CLI::App* c_wit = app.add_subcommand("witness", "find an incompatible collapsing profile pair");
  add_common(c_wit, true);

  CLI::App* c_srs = app.add_subcommand("srs-check",
                                       "embedding, diagonaliser, fixed points, lemma replay");
  add_common(c_srs, true);
  c_srs->add_option("--family", o.family, "application family: +K | ^K | omega_K")
      ->capture_default_str();
  c_srs->add_option("--i", o.i, "distinguished individual (1-based)")->capture_default_str();
  c_srs->add_option("--expr", o.expr, "expression: profile JSON (built-in) or id (loaded)");

  CLI::App* c_quasi = app.add_subcommand("quasi", "quasi flags and quasi-Godelian classification");
  add_common(c_quasi, true);
  c_quasi->add_option("--family", o.family, "application family: +K | ^K | omega_K")
      ->capture_default_str();
  c_quasi->add_option("--i", o.i, "distinguished individual (1-based)")->capture_default_str();
  c_quasi->add_option("--d", o.d_json, "valid profile JSON to evaluate the flags on");

  CLI::App* c_t2 = app.add_subcommand("table2", "overlap pattern for a rule pair");
  add_common(c_t2, false);
  c_t2->add_option("--nodict", o.nodict_rule, "non-dictatorial rule selector")
      ->capture_default_str();
  c_t2->add_option("--dict", o.dict_rule, "dictatorial rule selector (default projection:i)");
  c_t2->add_option("--i", o.i, "dictator individual (1-based)")->capture_default_str();

  CLI::App* c_self = app.add_subcommand("selftest", "lattice-law and oracle-equivalence suite");
  add_common(c_self, false);

  CLI::App* c_ver = app.add_subcommand("verify", "replay one named result by enumeration");
  add_common(c_ver, true);
  c_ver->add_option("--theorem", o.theorem,
                    "arrow-full | arrow-main | strong-dictator | condorcet-abstract | "
                    "dictator-abstract | dictator-abstract-2");
  c_ver->add_option("--i", o.i, "distinguished individual (1-based)")->capture_default_str();
  c_ver->add_option("--mode", o.mode, "fast | slow (arrow-main)")
      ->check(CLI::IsMember({"fast", "slow"}))
      ->capture_default_str();
  c_ver->add_option("--seed", o.seed, "seed for the generated application table")
      ->capture_default_str();
  c_ver->add_option("--app", o.app_path, "JSON file with a user-supplied application table");

  app.require_subcommand(1);

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }

  const bool unicode = o.unicode || (!o.ascii && env_suggests_utf8());
  try {
    if (c_enum->parsed()) return cmd_enumerate(o, c_enum->count("--N") > 0, out);
    if (c_eval->parsed()) return cmd_eval(o, out);
    if (c_audit->parsed()) return cmd_audit(o, unicode, out);
    if (c_wit->parsed()) return cmd_witness(o, out);
    if (c_srs->parsed()) return cmd_srs_check(o, out);
    if (c_quasi->parsed()) return cmd_quasi(o, out);
    if (c_t2->parsed()) return cmd_table2(o, unicode, out);
    if (c_self->parsed()) return cmd_selftest(o, unicode, out);
    if (c_ver->parsed()) return cmd_verify(o, unicode, out);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const Json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
  err << "error: no subcommand\n";
  return kUsageError;
}

}  // namespace preflab
