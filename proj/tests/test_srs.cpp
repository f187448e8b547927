#include <fstream>
#include <numeric>
#include <vector>

#include <doctest.h>

#include "preflab/consistency.hpp"
#include "preflab/errors.hpp"
#include "preflab/json_io.hpp"
#include "preflab/srs.hpp"
#include "preflab/srs_instances.hpp"

using namespace preflab;

namespace {

// enc is the identity and application returns the constant, so star is the
// right projection and self-application is the identity.
EmbeddableSrs right_projection_system(int n) {
  EmbeddableSrs es;
  es.base.num_expressions = n;
  es.base.num_constants = n;
  es.base.enc.resize(static_cast<size_t>(n));
  std::iota(es.base.enc.begin(), es.base.enc.end(), 0);
  es.base.app.resize(static_cast<size_t>(n) * static_cast<size_t>(n));
  for (int e = 0; e < n; ++e)
    for (int c = 0; c < n; ++c) es.base.app[static_cast<size_t>(e) * n + c] = c;
  es.emb = es.base.enc;
  es.comp = [](int, int y) { return y; };
  return es;
}

EmbeddableSrs load_fixture() {
  std::ifstream in(PREFLAB_TEST_DATA_DIR "/adl_fixture.json");
  REQUIRE(in.good());
  Json j = Json::parse(in);
  return embeddable_srs_from_json(j);
}

}  // namespace

TEST_CASE("system validation rejects out-of-range tables") {
  Srs s;
  s.num_expressions = 2;
  s.num_constants = 2;
  s.enc = {0, 1};
  s.app = {0, 1, 1, 0};
  CHECK_NOTHROW(s.validate());

  Srs bad_enc = s;
  bad_enc.enc = {0, 2};
  CHECK_THROWS_AS(bad_enc.validate(), DimensionError);

  Srs bad_app = s;
  bad_app.app = {0, 1, 2, 0};
  CHECK_THROWS_AS(bad_app.validate(), DimensionError);

  Srs short_app = s;
  short_app.app = {0, 1, 1};
  CHECK_THROWS_AS(short_app.validate(), DimensionError);
}

TEST_CASE("right projection makes every expression a diagonaliser") {
  const EmbeddableSrs es = right_projection_system(4);
  CHECK_NOTHROW(es.base.validate());

  const EmbeddingCheck ec = check_embeddable(es.base, es.emb, es.comp);
  CHECK(ec.embedding_holds);
  CHECK(ec.associativity_holds);
  CHECK(ec.associativity_exhaustive);
  CHECK(ec.ok());

  for (int e = 0; e < 4; ++e) {
    for (int f = 0; f < 4; ++f) CHECK(es.star(e, f) == f);
    CHECK(es.dobar(e) == e);
    CHECK(es.diag(e) == e);
    CHECK(is_diagonaliser(es, e));
    // every expression is fixed by every other
    CHECK(find_fixed_points(es.base, e) == std::vector<int>{0, 1, 2, 3});
  }
  CHECK(find_diagonaliser(es) == 0);

  const AdlReport rep = verify_adl(es);
  CHECK(rep.status == AdlStatus::kPass);
  CHECK(rep.diagonaliser == 0);
  CHECK(rep.pair_identity_holds);
  CHECK(rep.triple_identity_holds);
  CHECK(rep.triple_identity_exhaustive);
  REQUIRE(rep.fixed_points.size() == 4);
  for (const auto& [d, f] : rep.fixed_points) CHECK(es.star(d, f) == f);
}

TEST_CASE("the committed fixture passes the diagonalisation lemma") {
  const EmbeddableSrs es = load_fixture();
  CHECK(es.base.num_expressions == 4);
  CHECK(es.base.num_constants == 2);
  CHECK_NOTHROW(es.base.validate());

  const EmbeddingCheck ec = check_embeddable(es.base, es.emb, es.comp);
  CHECK(ec.ok());
  CHECK(ec.associativity_exhaustive);

  // expressions 0..2 are diagonalisers, 3 is not
  CHECK(is_diagonaliser(es, 0));
  CHECK(is_diagonaliser(es, 1));
  CHECK(is_diagonaliser(es, 2));
  CHECK_FALSE(is_diagonaliser(es, 3));
  CHECK(find_diagonaliser(es) == 0);

  const AdlReport rep = verify_adl(es);
  CHECK(rep.status == AdlStatus::kPass);
  CHECK(rep.pair_identity_holds);
  CHECK(rep.triple_identity_holds);
  REQUIRE(rep.fixed_points.size() == 4);
  for (const auto& [d, f] : rep.fixed_points) CHECK(es.star(d, f) == f);
}

TEST_CASE("systems without a full-domain diagonaliser are not applicable") {
  EmbeddableSrs es = right_projection_system(3);
  // enc and emb stay the identity, so a diagonaliser is a row of app equal
  // to app's own diagonal; pick rows that all avoid it
  es.base.app = {1, 1, 1,   // diagonal entry 1
                 0, 1, 0,   // diagonal entry 1
                 0, 0, 0};  // diagonal entry 0, diagonal (1,1,0) is no row
  const AdlReport rep = verify_adl(es);
  CHECK(rep.status == AdlStatus::kNotApplicable);
  CHECK_FALSE(rep.diagonaliser.has_value());
}

TEST_CASE("a diagonaliser in a profile system depends only on encodings") {
  const PrefLattice lat(AlternativeSet::letters(3));
  const ProfileSpace space(lat, 2);
  const Swf w = Swf::pairwise_majority(space);
  const Srs s = make_srs(w, AppFamily{FamilyKind::kOmega, 0});
  for (int p = 0; p < s.num_expressions; p += 7) {
    for (int q = 0; q < s.num_expressions; ++q) {
      for (int q2 = q + 1; q2 < s.num_expressions; ++q2) {
        if (s.enc[static_cast<size_t>(q)] == s.enc[static_cast<size_t>(q2)])
          REQUIRE(s.star(p, q) == s.star(p, q2));
      }
    }
  }
}

TEST_CASE("profile systems embed through the distinguished coordinate") {
  const PrefLattice lat(AlternativeSet::letters(3));
  const ProfileSpace space(lat, 2);
  for (const char* sel : {"majority", "borda", "projection:1", "constant:a~b~c"}) {
    const Swf w = make_rule(space, sel);
    for (int i = 0; i < 2; ++i) {
      const EmbeddableSrs es = make_embeddable_srs(w, AppFamily{FamilyKind::kOmega, i});
      const EmbeddingCheck ec = check_embeddable(es.base, es.emb, es.comp);
      INFO(sel, " coordinate ", i);
      CHECK(ec.embedding_holds);
      CHECK(ec.associativity_holds);
    }
  }
}

TEST_CASE("the indicator diagonalises a dictatorship on valid profiles only") {
  const PrefLattice lat(AlternativeSet::letters(3));
  const ProfileSpace space(lat, 2);
  std::vector<int> valid;
  for (int h = 0; h < space.num_full(); ++h) {
    if (space.is_valid(h)) valid.push_back(h);
  }

  const EmbeddableSrs dict =
      make_embeddable_srs(Swf::projection(space, 0), AppFamily{FamilyKind::kOmega, 0});
  const int indicator = indicator_handle(space, 0);
  CHECK(is_diagonaliser(dict, indicator, valid));

  const EmbeddableSrs maj =
      make_embeddable_srs(Swf::pairwise_majority(space), AppFamily{FamilyKind::kOmega, 0});
  CHECK_FALSE(is_diagonaliser(maj, indicator, valid));
}

TEST_CASE("full-domain diagonalisers of profile systems are pinned by coordinate i") {
  const PrefLattice lat(AlternativeSet::letters(3));
  const ProfileSpace space(lat, 2);

  // the aggregate of any self-application contains a contradictory
  // coordinate, so majority encodes it to the bottom; a diagonaliser must
  // then meet everything down to the bottom at i
  const EmbeddableSrs maj =
      make_embeddable_srs(Swf::pairwise_majority(space), AppFamily{FamilyKind::kOmega, 0});
  const auto f_maj = find_diagonaliser(maj);
  REQUIRE(f_maj.has_value());
  CHECK(space.coordinate(*f_maj, 0) == lat.cycle_id());
  CHECK(*f_maj == space.spike(0, lat.cycle_id(), lat.top_id()));

  // projection keeps the self-application's coordinate, so the diagonaliser
  // must leave everything unchanged at i
  const EmbeddableSrs proj =
      make_embeddable_srs(Swf::projection(space, 0), AppFamily{FamilyKind::kOmega, 0});
  const auto f_proj = find_diagonaliser(proj);
  REQUIRE(f_proj.has_value());
  CHECK(space.coordinate(*f_proj, 0) == lat.top_id());

  const AdlReport rep = verify_adl(maj);
  CHECK(rep.status == AdlStatus::kPass);
  CHECK(rep.fixed_points.size() == static_cast<size_t>(space.num_full()));
}
