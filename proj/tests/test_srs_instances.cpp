#include <string>
#include <vector>

#include <doctest.h>

#include "preflab/errors.hpp"
#include "preflab/srs.hpp"
#include "preflab/srs_instances.hpp"

using namespace preflab;

namespace {

struct Bench {
  PrefLattice lat;
  ProfileSpace space;
  Bench(int m, int n) : lat(AlternativeSet::letters(m)), space(lat, n) {}
};

}  // namespace

TEST_CASE("family names round trip and reject nonsense") {
  CHECK(family_name(AppFamily{FamilyKind::kPlus, 0}) == "+1");
  CHECK(family_name(AppFamily{FamilyKind::kMeet, 1}) == "^2");
  CHECK(family_name(AppFamily{FamilyKind::kOmega, 2}) == "omega_3");

  const AppFamily f = parse_family("omega_2", 3);
  CHECK(f.kind == FamilyKind::kOmega);
  CHECK(f.i == 1);
  CHECK(parse_family("+3", 3).kind == FamilyKind::kPlus);
  CHECK(parse_family("^1", 2).kind == FamilyKind::kMeet);

  CHECK_THROWS_AS(parse_family("omega_4", 3), DimensionError);
  CHECK_THROWS_AS(parse_family("omega_0", 3), DimensionError);
  CHECK_THROWS_AS(parse_family("sigma_1", 3), ParseError);
  CHECK_THROWS_AS(parse_family("omega_x", 3), ParseError);
}

TEST_CASE("each family acts on the distinguished coordinate as documented") {
  const Bench b(3, 2);
  const Swf w = Swf::pairwise_majority(b.space);
  for (int i = 0; i < 2; ++i) {
    const Srs plus = make_srs(w, AppFamily{FamilyKind::kPlus, i});
    const Srs meet = make_srs(w, AppFamily{FamilyKind::kMeet, i});
    const Srs omega = make_srs(w, AppFamily{FamilyKind::kOmega, i});
    REQUIRE(plus.num_expressions == b.space.num_full());
    REQUIRE(plus.num_constants == b.lat.num_relations());
    for (int h = 0; h < b.space.num_full(); ++h) {
      REQUIRE(plus.enc[static_cast<size_t>(h)] == w.eval(h));
      const int pi = b.space.coordinate(h, i);
      for (int r = 0; r < b.lat.num_relations(); ++r) {
        CHECK(plus.apply(h, r) == b.space.with_coordinate(h, i, b.lat.join_plus(pi, r)));
        CHECK(meet.apply(h, r) == b.space.with_coordinate(h, i, b.lat.meet(pi, r)));
        CHECK(omega.apply(h, r) == b.space.spike(i, b.lat.meet(pi, r), b.lat.cycle_id()));
      }
    }
  }
}

TEST_CASE("the indicator is contradictory everywhere except full indifference at i") {
  const Bench b(3, 3);
  for (int i = 0; i < 3; ++i) {
    const int y = indicator_handle(b.space, i);
    for (int j = 0; j < 3; ++j) {
      CHECK(b.space.coordinate(y, j) == (j == i ? b.lat.top_id() : b.lat.cycle_id()));
    }
  }
}

TEST_CASE("applying the indicator to a collapsing profile bottoms out") {
  const Bench b(3, 2);
  const Swf w = Swf::pairwise_majority(b.space);
  const Srs s = make_srs(w, AppFamily{FamilyKind::kOmega, 0});
  const int y = indicator_handle(b.space, 0);
  int collapsing = -1;
  for (int h = 0; h < b.space.num_full(); ++h) {
    if (b.space.is_valid(h) && w.eval(h) == b.lat.cycle_id()) {
      collapsing = h;
      break;
    }
  }
  REQUIRE(collapsing >= 0);
  CHECK(s.star(y, collapsing) == b.space.bottom());

  // while an order-valued profile lands on the aggregate spiked at i
  int ordered = -1;
  for (int h = 0; h < b.space.num_full(); ++h) {
    if (b.space.is_valid(h) && w.eval(h) != b.lat.cycle_id()) {
      ordered = h;
      break;
    }
  }
  REQUIRE(ordered >= 0);
  CHECK(s.star(y, ordered) == b.space.spike(0, w.eval(ordered), b.lat.cycle_id()));
}

TEST_CASE("the coordinate embedding satisfies its equation for any rule") {
  const Bench b(3, 2);
  for (const char* sel : {"majority", "projection:2", "borda", "constant:CYCLE"}) {
    const Swf w = make_rule(b.space, sel);
    for (int i = 0; i < 2; ++i) {
      const ProfileEmbedding pe = make_embedding(b.space, i);
      REQUIRE(static_cast<int>(pe.emb.size()) == b.lat.num_relations());
      for (int r = 0; r < b.lat.num_relations(); ++r) {
        CHECK(pe.emb[static_cast<size_t>(r)] == b.space.spike(i, r, b.lat.cycle_id()));
      }
      const Srs s = make_srs(w, AppFamily{FamilyKind::kOmega, i});
      const EmbeddingCheck ec = check_embeddable(s, pe.emb, pe.comp);
      INFO(sel, " coordinate ", i);
      CHECK(ec.ok());
      CHECK(ec.associativity_exhaustive);
    }
  }
}

TEST_CASE("the embedding composition is the coordinatewise meet") {
  const Bench b(3, 2);
  const ProfileEmbedding pe = make_embedding(b.space, 1);
  for (int x = 0; x < b.space.num_full(); x += 3) {
    for (int y = 0; y < b.space.num_full(); y += 5) {
      CHECK(pe.comp(x, y) == b.space.meet(x, y));
    }
  }
}

TEST_CASE("self-application fixes every valid profile exactly under a dictator") {
  const Bench b(3, 2);

  const Swf dict = Swf::projection(b.space, 0);
  const Srs splus = make_srs(dict, AppFamily{FamilyKind::kPlus, 0});
  for (int h = 0; h < b.space.num_full(); ++h) {
    if (b.space.is_valid(h)) CHECK(splus.star(h, h) == h);
  }

  const Swf maj = Swf::pairwise_majority(b.space);
  const Srs mplus = make_srs(maj, AppFamily{FamilyKind::kPlus, 0});
  bool all_fixed = true;
  for (int h = 0; h < b.space.num_full(); ++h) {
    if (b.space.is_valid(h) && mplus.star(h, h) != h) all_fixed = false;
  }
  CHECK_FALSE(all_fixed);
}

TEST_CASE("dictatorship, fixed points and diagonalisers stay biconditional") {
  for (int n = 2; n <= 3; ++n) {
    const Bench b(3, n);
    for (const char* sel :
         {"majority", "borda", "projection:1", "constant:a~b~c", "constant:a<b<c"}) {
      const Swf w = make_rule(b.space, sel);
      for (int i = 0; i < n; ++i) {
        INFO(sel, " N=", n, " coordinate ", i);
        CHECK(check_dictator_iff_fixed_point(w, i));
        CHECK(check_dictator_iff_diagonaliser(w, i));
      }
    }
  }
}
