#include "preflab/json_io.hpp"

#include <memory>
#include <utility>

namespace preflab {

namespace {

const Json& expect(const Json& j, const char* key) {
  const auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing key: ") + key);
  return *it;
}

int expect_int(const Json& j, const char* key) {
  const Json& v = expect(j, key);
  if (!v.is_number_integer()) throw ParseError(std::string("expected integer at: ") + key);
  return v.get<int>();
}

std::vector<int> int_array(const Json& j, const char* key) {
  const Json& v = expect(j, key);
  if (!v.is_array()) throw ParseError(std::string("expected array at: ") + key);
  std::vector<int> out;
  out.reserve(v.size());
  for (const auto& x : v) {
    if (!x.is_number_integer()) throw ParseError(std::string("expected integers in: ") + key);
    out.push_back(x.get<int>());
  }
  return out;
}

// Row-major matrix from an array of equal-length integer rows.
std::vector<int> int_matrix(const Json& j, const char* key, int rows, int cols) {
  const Json& v = expect(j, key);
  if (!v.is_array() || static_cast<int>(v.size()) != rows)
    throw ParseError(std::string(key) + ": expected " + std::to_string(rows) + " rows");
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols));
  for (const auto& row : v) {
    if (!row.is_array() || static_cast<int>(row.size()) != cols)
      throw ParseError(std::string(key) + ": expected rows of length " + std::to_string(cols));
    for (const auto& x : row) {
      if (!x.is_number_integer()) throw ParseError(std::string("expected integers in: ") + key);
      out.push_back(x.get<int>());
    }
  }
  return out;
}

Json chains_json(const ProfileSpace& space, int full_handle) {
  Json arr = Json::array();
  for (const auto& chain : space.chains(full_handle)) arr.push_back(chain);
  return arr;
}

int handle_of_chains(const ProfileSpace& space, const Json& arr, const char* what) {
  if (!arr.is_array()) throw ParseError(std::string(what) + ": expected an array of chains");
  if (static_cast<int>(arr.size()) != space.individuals())
    throw ParseError(std::string(what) + ": expected " + std::to_string(space.individuals()) +
                     " coordinates, got " + std::to_string(arr.size()));
  std::vector<int> ids;
  ids.reserve(arr.size());
  for (const auto& x : arr) {
    if (!x.is_string()) throw ParseError(std::string(what) + ": chains must be strings");
    ids.push_back(space.lattice().parse(x.get<std::string>()));
  }
  return space.handle(ids);
}

}  // namespace

Json order_to_json(const PrefLattice& lat, int rel_id) {
  return Json{{"order", lat.format(rel_id)}};
}

int order_from_json(const PrefLattice& lat, const Json& j) {
  if (j.is_string()) return lat.parse(j.get<std::string>());
  if (j.is_object()) {
    const Json& v = expect(j, "order");
    if (!v.is_string()) throw ParseError("\"order\" must be a chain string");
    return lat.parse(v.get<std::string>());
  }
  throw ParseError("expected a chain string or an object with an \"order\" key");
}

Json profile_to_json(const ProfileSpace& space, int full_handle) {
  Json j;
  j["alternatives"] = space.lattice().alternatives().names();
  j["profile"] = chains_json(space, full_handle);
  return j;
}

int profile_from_json(const ProfileSpace& space, const Json& j) {
  if (j.is_array()) return handle_of_chains(space, j, "profile");
  if (j.is_object()) {
    if (auto it = j.find("alternatives"); it != j.end()) {
      const auto& names = space.lattice().alternatives().names();
      if (!it->is_array() || static_cast<int>(it->size()) != static_cast<int>(names.size()))
        throw ParseError("\"alternatives\" does not match the configured set");
      for (std::size_t k = 0; k < names.size(); ++k) {
        if (!(*it)[k].is_string() || (*it)[k].get<std::string>() != names[k])
          throw ParseError("\"alternatives\" does not match the configured set");
      }
    }
    return handle_of_chains(space, expect(j, "profile"), "profile");
  }
  throw ParseError("expected a profile object or an array of chains");
}

Json swf_to_table_json(const Swf& w) {
  const ProfileSpace& space = w.space();
  Json entries = Json::array();
  for (long long v = 0; v < space.num_valid(); ++v) {
    const int h = space.full_of_valid(v);
    entries.push_back(Json{{"profile", chains_json(space, h)},
                           {"out", space.lattice().format(w.eval(h))}});
  }
  Json j;
  j["kind"] = "table";
  j["entries"] = std::move(entries);
  return j;
}

Swf swf_from_table_json(const ProfileSpace& space, const Json& j) {
  if (!j.is_object()) throw ParseError("expected a table object");
  if (const Json& kind = expect(j, "kind"); !kind.is_string() || kind.get<std::string>() != "table")
    throw ParseError("\"kind\" must be \"table\"");
  const Json& entries = expect(j, "entries");
  if (!entries.is_array()) throw ParseError("\"entries\" must be an array");

  std::vector<int> outputs(static_cast<std::size_t>(space.num_valid()), -1);
  for (const auto& e : entries) {
    if (!e.is_object()) throw ParseError("entries must be objects");
    const int h = handle_of_chains(space, expect(e, "profile"), "entry profile");
    if (!space.is_valid(h))
      throw ParseError("entry profile is not valid: " + space.format(h));
    const Json& out = expect(e, "out");
    if (!out.is_string()) throw ParseError("\"out\" must be a chain string");
    const int rel = space.lattice().parse(out.get<std::string>());
    const auto v = static_cast<std::size_t>(space.valid_of_full(h));
    if (outputs[v] != -1) throw ParseError("duplicate entry for profile " + space.format(h));
    outputs[v] = rel;
  }
  for (long long v = 0; v < space.num_valid(); ++v) {
    if (outputs[static_cast<std::size_t>(v)] == -1)
      throw ParseError("missing entry for profile " + space.format(space.full_of_valid(v)));
  }
  return Swf::table(space, std::move(outputs));
}

Json srs_to_json(const Srs& s) {
  Json j;
  j["expressions"] = s.num_expressions;
  j["constants"] = s.num_constants;
  j["enc"] = s.enc;
  Json app = Json::array();
  for (int e = 0; e < s.num_expressions; ++e) {
    Json row = Json::array();
    for (int c = 0; c < s.num_constants; ++c) row.push_back(s.apply(e, c));
    app.push_back(std::move(row));
  }
  j["app"] = std::move(app);
  return j;
}

Srs srs_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("expected a system object");
  Srs s;
  s.num_expressions = expect_int(j, "expressions");
  s.num_constants = expect_int(j, "constants");
  if (s.num_expressions <= 0 || s.num_constants <= 0)
    throw ParseError("\"expressions\" and \"constants\" must be positive");
  s.enc = int_array(j, "enc");
  if (static_cast<int>(s.enc.size()) != s.num_expressions)
    throw ParseError("\"enc\" must list one constant per expression");
  s.app = int_matrix(j, "app", s.num_expressions, s.num_constants);
  s.validate();
  return s;
}

Json embeddable_srs_to_json(const EmbeddableSrs& es) {
  Json j = srs_to_json(es.base);
  j["emb"] = es.emb;
  Json comp = Json::array();
  for (int x = 0; x < es.base.num_expressions; ++x) {
    Json row = Json::array();
    for (int y = 0; y < es.base.num_expressions; ++y) row.push_back(es.comp(x, y));
    comp.push_back(std::move(row));
  }
  j["comp"] = std::move(comp);
  return j;
}

EmbeddableSrs embeddable_srs_from_json(const Json& j) {
  EmbeddableSrs es;
  es.base = srs_from_json(j);
  es.emb = int_array(j, "emb");
  if (static_cast<int>(es.emb.size()) != es.base.num_constants)
    throw ParseError("\"emb\" must list one expression per constant");
  for (int x : es.emb) {
    if (x < 0 || x >= es.base.num_expressions) throw ParseError("\"emb\" value out of range");
  }
  const int n = es.base.num_expressions;
  auto table = std::make_shared<std::vector<int>>(int_matrix(j, "comp", n, n));
  for (int x : *table) {
    if (x < 0 || x >= n) throw ParseError("\"comp\" value out of range");
  }
  es.comp = [table, n](int x, int y) {
    return (*table)[static_cast<std::size_t>(x) * static_cast<std::size_t>(n) +
                    static_cast<std::size_t>(y)];
  };
  return es;
}

Json audit_report_to_json(const AuditReport& a, const ProfileSpace& space) {
  const PrefLattice& lat = space.lattice();
  Json j;
  j["rule"] = a.rule;
  j["m"] = a.m;
  j["N"] = a.n;

  Json u;
  u["holds"] = a.unanimity.holds;
  if (a.unanimity.witness) {
    const auto& w = *a.unanimity.witness;
    const auto [x, y] = lat.pair_layout()[static_cast<std::size_t>(w.pair)];
    u["witness"] = Json{{"profile", chains_json(space, w.profile_handle)},
                        {"pair", lat.alternatives().name(x) + "," + lat.alternatives().name(y)},
                        {"aggregate", lat.format(w.aggregate_id)}};
  }
  j["unanimity"] = std::move(u);

  Json uo;
  uo["holds"] = a.unanimity_on_orders.holds;
  if (a.unanimity_on_orders.witness) {
    const auto& w = *a.unanimity_on_orders.witness;
    const auto [x, y] = lat.pair_layout()[static_cast<std::size_t>(w.pair)];
    uo["witness"] = Json{{"profile", chains_json(space, w.profile_handle)},
                         {"pair", lat.alternatives().name(x) + "," + lat.alternatives().name(y)},
                         {"aggregate", lat.format(w.aggregate_id)}};
  }
  j["unanimity_on_orders"] = std::move(uo);

  Json ii;
  ii["holds"] = a.iia.holds;
  ii["exact"] = a.iia.exact;
  if (a.iia.witness) {
    const auto& w = *a.iia.witness;
    const auto [x, y] = lat.pair_layout()[static_cast<std::size_t>(w.pair)];
    ii["witness"] = Json{{"profile_a", chains_json(space, w.profile_a)},
                         {"profile_b", chains_json(space, w.profile_b)},
                         {"pair", lat.alternatives().name(x) + "," + lat.alternatives().name(y)}};
  }
  j["iia"] = std::move(ii);

  Json dom;
  dom["image_is_all_orders"] = a.domain.image_is_all_orders;
  dom["never_contradictory"] = a.domain.never_contradictory;
  if (a.domain.contradictory_witness)
    dom["contradictory_witness"] = chains_json(space, *a.domain.contradictory_witness);
  if (a.domain.missed_order) dom["missed_order"] = lat.format(*a.domain.missed_order);
  j["unrestricted_domain"] = std::move(dom);

  j["dictator"] = a.dictator ? Json(*a.dictator + 1) : Json(nullptr);
  Json vet = Json::array();
  for (int v : a.vetoers) vet.push_back(v + 1);
  j["vetoers"] = std::move(vet);
  if (a.condorcet_witness) {
    j["condorcet_witness"] = Json{{"q", chains_json(space, a.condorcet_witness->first)},
                                  {"q_prime", chains_json(space, a.condorcet_witness->second)}};
  } else {
    j["condorcet_witness"] = nullptr;
  }
  j["arrow_hypotheses"] = a.arrow_hypotheses();
  return j;
}

Json verify_report_to_json(const VerifyReport& r) {
  Json j;
  j["theorem"] = r.theorem;
  j["config"] = r.config_summary;
  j["applicable"] = r.applicable;
  j["pass"] = r.pass;
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json e;
    e["name"] = c.name;
    e["pass"] = c.pass;
    if (!c.detail.empty()) e["detail"] = c.detail;
    checks.push_back(std::move(e));
  }
  j["checks"] = std::move(checks);
  j["witnesses"] = r.witnesses;
  j["enumerated"] = r.enumerated;
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

Json overlap_report_to_json(const OverlapReport& r) {
  Json j;
  j["preconditions_ok"] = r.preconditions_ok;
  Json pre = Json::array();
  for (const auto& p : r.preconditions) {
    Json e;
    e["name"] = p.name;
    e["pass"] = p.pass;
    if (!p.detail.empty()) e["detail"] = p.detail;
    pre.push_back(std::move(e));
  }
  j["preconditions"] = std::move(pre);
  Json cells = Json::array();
  for (const auto& c : r.cells) {
    Json e;
    e["row"] = c.row;
    e["column"] = c.column;
    e["status"] = c.status;
    e["expected"] = c.expected;
    e["checked"] = c.checked;
    if (c.witness) e["witness"] = c.witness_text;
    e["detail"] = c.detail;
    cells.push_back(std::move(e));
  }
  j["cells"] = std::move(cells);
  j["pass"] = r.pass;
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

Json adl_report_to_json(const AdlReport& r) {
  Json j;
  switch (r.status) {
    case AdlStatus::kPass: j["status"] = "pass"; break;
    case AdlStatus::kFail: j["status"] = "fail"; break;
    case AdlStatus::kNotApplicable: j["status"] = "not applicable"; break;
  }
  j["diagonaliser"] = r.diagonaliser ? Json(*r.diagonaliser) : Json(nullptr);
  Json fps = Json::array();
  for (const auto& [d, f] : r.fixed_points) fps.push_back(Json{{"d", d}, {"fixed_point", f}});
  j["fixed_points"] = std::move(fps);
  if (r.failing_d) j["failing_d"] = *r.failing_d;
  j["pair_identity_holds"] = r.pair_identity_holds;
  if (r.pair_identity_witness)
    j["pair_identity_witness"] = Json::array({r.pair_identity_witness->first,
                                              r.pair_identity_witness->second});
  j["triple_identity_holds"] = r.triple_identity_holds;
  j["triple_identity_exhaustive"] = r.triple_identity_exhaustive;
  if (r.triple_identity_witness) {
    const auto& w = *r.triple_identity_witness;
    j["triple_identity_witness"] = Json::array({w[0], w[1], w[2]});
  }
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

Json law_report_to_json(const LawReport& r) {
  Json j;
  j["all_hold"] = r.all_hold;
  Json laws = Json::array();
  for (const auto& res : r.results) {
    Json e;
    e["law"] = res.law;
    e["holds"] = res.holds;
    if (!res.witness.empty()) e["witness"] = res.witness;
    laws.push_back(std::move(e));
  }
  j["laws"] = std::move(laws);
  j["complement_antitone"] = r.complement_antitone;
  if (!r.antitone_witness.empty()) j["antitone_witness"] = r.antitone_witness;
  return j;
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace preflab
