#pragma once

#include <nlohmann/json.hpp>

#include "preflab/audit.hpp"
#include "preflab/ortho.hpp"
#include "preflab/srs.hpp"
#include "preflab/verify.hpp"

namespace preflab {

// Insertion-ordered documents keep serialized output byte-identical across
// runs; every writer below fixes its key order explicitly.
using Json = nlohmann::ordered_json;

// {"order": "a<b~c"} or {"order": "CYCLE"}; readers also accept a bare
// chain string.
Json order_to_json(const PrefLattice& lat, int rel_id);
int order_from_json(const PrefLattice& lat, const Json& j);

// {"alternatives": ["a","b","c"], "profile": ["a<b<c", ...]}; readers also
// accept a bare array of chains. The result is a full handle.
Json profile_to_json(const ProfileSpace& space, int full_handle);
int profile_from_json(const ProfileSpace& space, const Json& j);

// {"kind": "table", "entries": [{"profile": [...], "out": "a~b<c"}, ...]}.
// Loading validates totality: every valid profile exactly once, outputs
// parseable, nothing else.
Json swf_to_table_json(const Swf& w);
Swf swf_from_table_json(const ProfileSpace& space, const Json& j);

// {"expressions": nE, "constants": nC, "enc": [...], "app": [[...], ...]}
// with optional "emb": [...] and "comp": [[...], ...]. Loading validates
// totality and ranges.
Json srs_to_json(const Srs& s);
Srs srs_from_json(const Json& j);
Json embeddable_srs_to_json(const EmbeddableSrs& es);
EmbeddableSrs embeddable_srs_from_json(const Json& j);

Json audit_report_to_json(const AuditReport& a, const ProfileSpace& space);
Json verify_report_to_json(const VerifyReport& r);
Json overlap_report_to_json(const OverlapReport& r);
Json adl_report_to_json(const AdlReport& r);
Json law_report_to_json(const LawReport& r);

// Two-space indent and a trailing newline; the single dump call every
// writer funnels through.
std::string dump_json(const Json& j);

}  // namespace preflab
