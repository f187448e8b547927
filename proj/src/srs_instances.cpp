#include "preflab/srs_instances.hpp"

#include <charconv>

#include "preflab/audit.hpp"

namespace preflab {

std::string family_name(const AppFamily& fam) {
  const std::string ix = std::to_string(fam.i + 1);
  switch (fam.kind) {
    case FamilyKind::kPlus:
      return "+" + ix;
    case FamilyKind::kMeet:
      return "^" + ix;
    case FamilyKind::kOmega:
      return "omega_" + ix;
  }
  return {};
}

AppFamily parse_family(std::string_view name, int n) {
  AppFamily fam;
  std::string_view digits;
  if (name.starts_with("+")) {
    fam.kind = FamilyKind::kPlus;
    digits = name.substr(1);
  } else if (name.starts_with("^")) {
    fam.kind = FamilyKind::kMeet;
    digits = name.substr(1);
  } else if (name.starts_with("omega_")) {
    fam.kind = FamilyKind::kOmega;
    digits = name.substr(6);
  } else {
    throw ParseError("unknown application family: " + std::string(name));
  }
  int one_based = 0;
  const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), one_based);
  if (ec != std::errc{} || ptr != digits.data() + digits.size()) {
    throw ParseError("application family needs a numeric index: " + std::string(name));
  }
  if (one_based < 1 || one_based > n) {
    throw DimensionError("application family index out of range");
  }
  fam.i = one_based - 1;
  return fam;
}

Srs make_srs(const Swf& w, const AppFamily& fam) {
  const ProfileSpace& space = w.space();
  const PrefLattice& lat = space.lattice();
  const int ne = static_cast<int>(space.num_full());
  const int nc = lat.num_relations();
  if (fam.i < 0 || fam.i >= space.individuals()) {
    throw DimensionError("application family index out of range");
  }

  Srs s;
  s.num_expressions = ne;
  s.num_constants = nc;
  s.enc.resize(static_cast<std::size_t>(ne));
  for (int h = 0; h < ne; ++h) s.enc[static_cast<std::size_t>(h)] = w.eval(h);

  s.app.resize(static_cast<std::size_t>(ne) * static_cast<std::size_t>(nc));
  for (int h = 0; h < ne; ++h) {
    const int pi = space.coordinate(h, fam.i);
    for (int r = 0; r < nc; ++r) {
      int out = 0;
      switch (fam.kind) {
        case FamilyKind::kPlus:
          out = space.with_coordinate(h, fam.i, lat.join_plus(pi, r));
          break;
        case FamilyKind::kMeet:
          out = space.with_coordinate(h, fam.i, lat.meet(pi, r));
          break;
        case FamilyKind::kOmega:
          out = space.spike(fam.i, lat.meet(pi, r), lat.cycle_id());
          break;
      }
      s.app[static_cast<std::size_t>(h) * static_cast<std::size_t>(nc) +
            static_cast<std::size_t>(r)] = out;
    }
  }
  return s;
}

int indicator_handle(const ProfileSpace& space, int i) {
  return space.spike(i, space.lattice().top_id(), space.lattice().cycle_id());
}

ProfileEmbedding make_embedding(const ProfileSpace& space, int i) {
  const PrefLattice& lat = space.lattice();
  ProfileEmbedding out;
  out.emb.resize(static_cast<std::size_t>(lat.num_relations()));
  for (int r = 0; r < lat.num_relations(); ++r) {
    out.emb[static_cast<std::size_t>(r)] = space.spike(i, r, lat.cycle_id());
  }
  out.comp = [&space](int x, int y) { return space.meet(x, y); };
  return out;
}

EmbeddableSrs make_embeddable_srs(const Swf& w, const AppFamily& fam) {
  EmbeddableSrs es;
  es.base = make_srs(w, fam);
  ProfileEmbedding pe = make_embedding(w.space(), fam.i);
  es.emb = std::move(pe.emb);
  es.comp = std::move(pe.comp);
  return es;
}

bool check_dictator_iff_fixed_point(const Swf& w, int i) {
  const ProfileSpace& space = w.space();
  const Srs s = make_srs(w, AppFamily{FamilyKind::kPlus, i});
  bool all_fixed = true;
  for (int h = 0; h < static_cast<int>(space.num_full()); ++h) {
    if (!space.is_valid(h)) continue;
    if (s.star(h, h) != h) {
      all_fixed = false;
      break;
    }
  }
  return all_fixed == has_dictator(w, i);
}

bool check_dictator_iff_diagonaliser(const Swf& w, int i) {
  const ProfileSpace& space = w.space();
  const Srs s = make_srs(w, AppFamily{FamilyKind::kOmega, i});
  const int upsilon = indicator_handle(space, i);
  bool diagonalises = true;
  for (int h = 0; h < static_cast<int>(space.num_full()); ++h) {
    if (!space.is_valid(h)) continue;
    if (s.star(upsilon, h) != s.star(h, h)) {
      diagonalises = false;
      break;
    }
  }
  return diagonalises == has_dictator(w, i);
}

}  // namespace preflab
