#include <optional>
#include <random>
#include <string>
#include <vector>

#include <doctest.h>

#include "preflab/audit.hpp"
#include "preflab/errors.hpp"
#include "preflab/swf.hpp"

using namespace preflab;

namespace {

struct Bench {
  PrefLattice lat;
  ProfileSpace space;
  Bench(int m, int n) : lat(AlternativeSet::letters(m)), space(lat, n) {}

  int handle(const std::vector<std::string>& chains) const {
    std::vector<int> ids;
    for (const auto& c : chains) ids.push_back(lat.parse(c));
    return space.handle(ids);
  }
};

}  // namespace

TEST_CASE("pairwise majority collapses the cyclic three-voter profile") {
  const Bench b(3, 3);
  const Swf w = Swf::pairwise_majority(b.space);
  CHECK(w.eval(b.handle({"a<b<c", "b<c<a", "c<a<b"})) == b.lat.cycle_id());
  // and already with two voters
  const Bench b2(3, 2);
  const Swf w2 = Swf::pairwise_majority(b2.space);
  CHECK(w2.eval(b2.handle({"a<b<c", "c<a<b"})) == b2.lat.cycle_id());
}

TEST_CASE("pairwise majority resolves pairwise counts into a weak order") {
  const Bench b(3, 2);
  const Swf w = Swf::pairwise_majority(b.space);
  // unanimous on (a,b) and (a,c), split on (b,c)
  CHECK(w.eval(b.handle({"a<b<c", "a<c<b"})) == b.lat.parse("a<b~c"));
  // opposite linear orders cancel to full indifference
  CHECK(w.eval(b.handle({"a<b<c", "c<b<a"})) == b.lat.top_id());
  CHECK(w.eval(b.handle({"a~b~c", "b<a~c"})) == b.lat.parse("b<a~c"));

  const Bench b3(3, 3);
  const Swf w3 = Swf::pairwise_majority(b3.space);
  CHECK(w3.eval(b3.handle({"a<b<c", "a<b<c", "c<b<a"})) == b3.lat.parse("a<b<c"));
}

TEST_CASE("built-in rules send profiles with a contradictory coordinate to the bottom") {
  const Bench b(3, 2);
  const int bad = b.space.with_coordinate(b.space.top(), 1, b.lat.cycle_id());
  CHECK(Swf::pairwise_majority(b.space).eval(bad) == b.lat.cycle_id());
  CHECK(Swf::borda(b.space).eval(bad) == b.lat.cycle_id());
  // projection reads its coordinate verbatim, constants ignore the profile
  CHECK(Swf::projection(b.space, 0).eval(bad) == b.lat.top_id());
  CHECK(Swf::projection(b.space, 1).eval(bad) == b.lat.cycle_id());
  CHECK(Swf::constant(b.space, b.lat.parse("a<b<c")).eval(bad) == b.lat.parse("a<b<c"));
}

TEST_CASE("borda sums level positions and ties break to indifference") {
  const Bench b(3, 2);
  const Swf w = Swf::borda(b.space);
  CHECK(w.eval(b.handle({"a<b<c", "a<b<c"})) == b.lat.parse("a<b<c"));
  CHECK(w.eval(b.handle({"a<b<c", "b<a<c"})) == b.lat.parse("a~b<c"));
  CHECK(w.eval(b.handle({"a<b<c", "c<b<a"})) == b.lat.top_id());
  // borda never collapses a valid profile: totals always order the field
  for (int h = 0; h < b.space.num_full(); ++h) {
    if (b.space.is_valid(h)) REQUIRE(w.eval(h) != b.lat.cycle_id());
  }
}

TEST_CASE("selector strings build rules and reject junk") {
  const Bench b(3, 2);
  CHECK(make_rule(b.space, "majority").kind() == SwfKind::kPairwiseMajority);
  CHECK(make_rule(b.space, "borda").kind() == SwfKind::kBorda);
  const Swf p2 = make_rule(b.space, "projection:2");
  CHECK(p2.kind() == SwfKind::kProjection);
  CHECK(p2.projection_index() == 1);
  const Swf c = make_rule(b.space, "constant:a<b~c");
  CHECK(c.eval(b.space.bottom()) == b.lat.parse("a<b~c"));
  CHECK(make_rule(b.space, "constant:CYCLE").eval(b.space.top()) == b.lat.cycle_id());

  CHECK_THROWS_AS(make_rule(b.space, "plurality"), ParseError);
  CHECK_THROWS_AS(make_rule(b.space, "projection:0"), std::invalid_argument);
  CHECK_THROWS_AS(make_rule(b.space, "projection:3"), std::invalid_argument);
  CHECK_THROWS_AS(make_rule(b.space, "constant:a<b"), ParseError);
}

TEST_CASE("table rules replay their outputs and reject wrong sizes") {
  const Bench b(3, 2);
  const Swf maj = Swf::pairwise_majority(b.space);
  std::vector<int> outs;
  for (long long v = 0; v < b.space.num_valid(); ++v)
    outs.push_back(maj.eval(b.space.full_of_valid(v)));
  const Swf t = Swf::table(b.space, outs);
  for (int h = 0; h < b.space.num_full(); ++h) CHECK(t.eval(h) == maj.eval(h));
  CHECK_FALSE(t.has_digit_form());

  outs.pop_back();
  CHECK_THROWS_AS(Swf::table(b.space, outs), DimensionError);
}

TEST_CASE("projection audits as the textbook dictatorship") {
  for (int n = 2; n <= 3; ++n) {
    const Bench b(3, n);
    for (int i = 0; i < n; ++i) {
      const AuditReport a = audit(Swf::projection(b.space, i));
      CHECK(a.unanimity.holds);
      CHECK(a.unanimity_on_orders.holds);
      CHECK(a.iia.holds);
      CHECK(a.iia.exact);
      CHECK(a.dictator == i);
      CHECK(a.vetoers == std::vector<int>{i});
      CHECK(a.domain.image_is_all_orders);
      CHECK(a.domain.never_contradictory);
      CHECK_FALSE(a.condorcet_witness.has_value());
      CHECK_FALSE(a.arrow_hypotheses());
    }
  }
}

TEST_CASE("majority with three voters satisfies the impossibility hypotheses") {
  const Bench b(3, 3);
  const AuditReport a = audit(Swf::pairwise_majority(b.space));
  CHECK(a.unanimity.holds);
  CHECK(a.unanimity_on_orders.holds);
  CHECK(a.iia.holds);
  CHECK(a.iia.exact);
  CHECK_FALSE(a.dictator.has_value());
  CHECK(a.vetoers.empty());
  CHECK_FALSE(a.domain.never_contradictory);
  CHECK(a.arrow_hypotheses());
  REQUIRE(a.domain.contradictory_witness.has_value());
  CHECK(b.space.is_valid(*a.domain.contradictory_witness));
}

TEST_CASE("majority with two voters violates unanimity only through collapses") {
  const Bench b(3, 2);
  const AuditReport a = audit(Swf::pairwise_majority(b.space));
  CHECK_FALSE(a.unanimity.holds);
  REQUIRE(a.unanimity.witness.has_value());
  CHECK(a.unanimity.witness->aggregate_id == b.lat.cycle_id());
  CHECK(a.unanimity.witness->profile_handle == b.handle({"a<b<c", "c<a<b"}));

  CHECK(a.unanimity_on_orders.holds);
  CHECK(a.iia.holds);
  CHECK_FALSE(a.dictator.has_value());
  CHECK(a.arrow_hypotheses());
}

TEST_CASE("unanimity witnesses replay against the rule") {
  const Bench b(3, 2);
  const Swf w = Swf::pairwise_majority(b.space);
  const UnanimityReport rep = check_unanimity(w);
  REQUIRE(rep.witness.has_value());
  const auto& wit = *rep.witness;
  CHECK(w.eval(wit.profile_handle) == wit.aggregate_id);
  // every voter is strict the same way on the recorded pair
  const Digit d0 = b.lat.digit(b.space.coordinate(wit.profile_handle, 0), wit.pair);
  const Digit d1 = b.lat.digit(b.space.coordinate(wit.profile_handle, 1), wit.pair);
  CHECK(d0 == d1);
  CHECK(d0 != Digit::kTie);
}

TEST_CASE("constant rules fail unanimity and dictatorship but veto everywhere") {
  const Bench b(3, 2);
  const AuditReport a = audit(Swf::constant(b.space, b.lat.top_id()));
  CHECK_FALSE(a.unanimity.holds);
  CHECK_FALSE(a.unanimity_on_orders.holds);  // full indifference is an order
  REQUIRE(a.unanimity.witness.has_value());
  CHECK(a.unanimity.witness->aggregate_id == b.lat.top_id());
  CHECK(a.iia.holds);
  CHECK_FALSE(a.dictator.has_value());
  CHECK(a.vetoers == std::vector<int>{0, 1});
  CHECK(a.domain.never_contradictory);
  CHECK_FALSE(a.domain.image_is_all_orders);
  REQUIRE(a.domain.missed_order.has_value());
}

TEST_CASE("borda violates independence with a replayable witness") {
  const Bench b(3, 2);
  const Swf w = Swf::borda(b.space);
  const IiaReport rep = check_iia(w);
  CHECK_FALSE(rep.holds);
  CHECK(rep.exact);
  REQUIRE(rep.witness.has_value());
  const auto& wit = *rep.witness;
  // same per-voter digits on the pair, different aggregate digit
  for (int i = 0; i < 2; ++i) {
    CHECK(b.lat.digit(b.space.coordinate(wit.profile_a, i), wit.pair) ==
          b.lat.digit(b.space.coordinate(wit.profile_b, i), wit.pair));
  }
  CHECK(w.aggregate_digit(wit.profile_a, wit.pair) != w.aggregate_digit(wit.profile_b, wit.pair));

  const AuditReport a = audit(w);
  CHECK(a.unanimity.holds);
  CHECK_FALSE(a.iia.holds);
  CHECK_FALSE(a.dictator.has_value());
  CHECK_FALSE(a.arrow_hypotheses());
}

TEST_CASE("the collapsing witness pair search is deterministic") {
  const Bench b2(3, 2);
  const auto pair2 = find_condorcet_witnesses(Swf::pairwise_majority(b2.space));
  REQUIRE(pair2.has_value());
  CHECK(pair2->first == b2.handle({"a~b<c", "c<a<b"}));
  CHECK(pair2->second == b2.handle({"a~b<c", "c<b<a"}));

  const Bench b3(3, 3);
  const auto pair3 = find_condorcet_witnesses(Swf::pairwise_majority(b3.space));
  REQUIRE(pair3.has_value());
  CHECK(pair3->first == b3.handle({"a~b~c", "a~b<c", "c<a<b"}));
  CHECK(pair3->second == b3.handle({"a~b~c", "a~b<c", "c<b<a"}));

  CHECK_FALSE(find_condorcet_witnesses(Swf::projection(b3.space, 0)).has_value());
  CHECK_FALSE(find_condorcet_witnesses(Swf::borda(b2.space)).has_value());
}

TEST_CASE("collapsing witness pairs have the promised structure") {
  for (int n = 2; n <= 3; ++n) {
    const Bench b(3, n);
    const Swf w = Swf::pairwise_majority(b.space);
    const auto pair = find_condorcet_witnesses(w);
    REQUIRE(pair.has_value());
    const auto [q, q2] = *pair;
    CHECK(b.space.is_valid(q));
    CHECK(b.space.is_valid(q2));
    CHECK(w.eval(q) == b.lat.cycle_id());
    CHECK(w.eval(q2) == b.lat.cycle_id());
    bool incompatible = false;
    for (int i = 0; i < n; ++i) {
      if (b.lat.meet(b.space.coordinate(q, i), b.space.coordinate(q2, i)) == b.lat.cycle_id())
        incompatible = true;
    }
    CHECK(incompatible);
    // nothing earlier qualifies
    for (int x = 0; x <= q; ++x) {
      if (!b.space.is_valid(x) || w.eval(x) != b.lat.cycle_id()) continue;
      const int y_end = (x == q) ? q2 : static_cast<int>(b.space.num_full());
      for (int y = x; y < y_end; ++y) {
        if (!b.space.is_valid(y) || w.eval(y) != b.lat.cycle_id()) continue;
        bool inc = false;
        for (int i = 0; i < n; ++i) {
          if (b.lat.meet(b.space.coordinate(x, i), b.space.coordinate(y, i)) == b.lat.cycle_id())
            inc = true;
        }
        REQUIRE_FALSE(inc);
      }
    }
  }
}

TEST_CASE("dictatorship clauses coincide with the absorption identity") {
  const Bench b(3, 2);
  for (const char* sel : {"majority", "borda", "projection:1", "projection:2", "constant:a<b<c"}) {
    const Swf w = make_rule(b.space, sel);
    for (int i = 0; i < 2; ++i) {
      const DictatorCheck d = check_dictator(w, i);
      INFO(sel, " individual ", i);
      CHECK(d.by_clauses == d.by_identity);
    }
  }
}

TEST_CASE("dictatorship clauses coincide on random table rules") {
  const Bench b(2, 2);
  const int n_relations = b.lat.num_relations();
  std::mt19937 rng(20240817);
  std::uniform_int_distribution<int> pick(0, n_relations - 1);
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<int> outs;
    for (long long v = 0; v < b.space.num_valid(); ++v) outs.push_back(pick(rng));
    const Swf w = Swf::table(b.space, outs);
    for (int i = 0; i < 2; ++i) {
      const DictatorCheck d = check_dictator(w, i);
      REQUIRE(d.by_clauses == d.by_identity);
    }
  }
}

TEST_CASE("a strong dictatorship is exactly dictator plus vetoer") {
  const Bench b(3, 2);
  for (const char* sel : {"projection:1", "projection:2", "majority", "constant:a~b~c"}) {
    const Swf w = make_rule(b.space, sel);
    for (int i = 0; i < 2; ++i) {
      bool copies = true;
      for (int h = 0; h < b.space.num_full(); ++h) {
        if (!b.space.is_valid(h)) continue;
        if (w.eval(h) != b.space.coordinate(h, i)) copies = false;
      }
      CHECK((has_dictator(w, i) && has_vetoer(w, i)) == copies);
    }
  }
}

TEST_CASE("digit forms agree with materialized outcomes on valid profiles") {
  const Bench b(3, 2);
  for (const char* sel : {"majority", "borda", "projection:2", "constant:a<b~c"}) {
    const Swf w = make_rule(b.space, sel);
    REQUIRE(w.has_digit_form());
    for (int h = 0; h < b.space.num_full(); ++h) {
      if (!b.space.is_valid(h)) continue;
      std::vector<Digit> ds;
      for (int k = 0; k < b.lat.pair_count(); ++k) ds.push_back(w.aggregate_digit(h, k));
      REQUIRE(b.lat.decode_digits(ds) == w.eval(h));
    }
  }
}
