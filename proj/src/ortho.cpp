#include "preflab/ortho.hpp"

#include <cstdint>

#include "preflab/errors.hpp"

namespace preflab {

OrthoLattice boolean_algebra(int atoms) {
  if (atoms < 1 || atoms > 4)
    throw SizeError("boolean algebra supports 1 <= atoms <= 4");
  const int rows = 1 << atoms;
  const std::uint32_t full = (rows == 32) ? 0xffffffffu : ((1u << rows) - 1u);
  OrthoLattice l;
  l.size = 1 << rows;
  l.name = [rows](int x) {
    static const char* hex = "0123456789abcdef";
    std::string s = "f";
    for (int nib = (rows + 3) / 4; nib-- > 0;)
      s += hex[(static_cast<unsigned>(x) >> (4 * nib)) & 0xf];
    return s;
  };
  l.leq = [](int a, int b) { return (a & ~b) == 0; };
  l.meet = [](int a, int b) { return a & b; };
  l.join = [](int a, int b) { return a | b; };
  l.neg = [full](int a) { return static_cast<int>(~static_cast<std::uint32_t>(a) & full); };
  l.bot = 0;
  l.top = static_cast<int>(full);
  return l;
}

int boolean_atom(int atoms, int i) {
  if (i < 0 || i >= atoms) throw DimensionError("atom index out of range");
  const int rows = 1 << atoms;
  int mask = 0;
  for (int row = 0; row < rows; ++row)
    if ((row >> i) & 1) mask |= (1 << row);
  return mask;
}

OrthoLattice preference_ortho_view(const PrefLattice& lat) {
  OrthoLattice l;
  l.size = lat.num_relations();
  l.name = [&lat](int x) { return lat.format(x); };
  l.leq = [&lat](int a, int b) { return lat.leq(a, b); };
  l.meet = [&lat](int a, int b) { return lat.meet(a, b); };
  l.join = [&lat](int a, int b) { return lat.join(a, b); };
  l.neg = [&lat](int a) { return lat.negate(a); };
  l.bot = lat.cycle_id();
  l.top = lat.top_id();
  return l;
}

OrthoLattice profile_ortho_view(const ProfileSpace& space) {
  OrthoLattice l;
  l.size = static_cast<int>(space.num_full());
  l.name = [&space](int x) { return space.format(x); };
  l.leq = [&space](int a, int b) { return space.leq(a, b); };
  l.meet = [&space](int a, int b) { return space.meet(a, b); };
  l.join = [&space](int a, int b) { return space.join(a, b); };
  l.neg = [&space](int a) { return space.negate(a); };
  l.bot = space.bottom();
  l.top = space.top();
  return l;
}

namespace {

std::string pair_witness(const OrthoLattice& l, int a, int b) {
  return l.name(a) + ", " + l.name(b);
}

// Brute-force glb: the lower bound that dominates all lower bounds.
std::optional<int> scan_glb(const OrthoLattice& l, int a, int b) {
  std::optional<int> best;
  for (int z = 0; z < l.size; ++z) {
    if (!l.leq(z, a) || !l.leq(z, b)) continue;
    if (!best || l.leq(*best, z)) best = z;
  }
  if (!best) return std::nullopt;
  for (int z = 0; z < l.size; ++z)
    if (l.leq(z, a) && l.leq(z, b) && !l.leq(z, *best)) return std::nullopt;
  return best;
}

std::optional<int> scan_lub(const OrthoLattice& l, int a, int b) {
  std::optional<int> best;
  for (int z = 0; z < l.size; ++z) {
    if (!l.leq(a, z) || !l.leq(b, z)) continue;
    if (!best || l.leq(z, *best)) best = z;
  }
  if (!best) return std::nullopt;
  for (int z = 0; z < l.size; ++z)
    if (l.leq(a, z) && l.leq(b, z) && !l.leq(*best, z)) return std::nullopt;
  return best;
}

}  // namespace

LawReport check_lattice_laws(const OrthoLattice& l) {
  LawReport report;
  const auto add = [&report](std::string law, bool holds, std::string witness) {
    report.results.push_back({std::move(law), holds, std::move(witness)});
    if (!holds) report.all_hold = false;
  };
  const int n = l.size;

  {
    bool ok = true;
    std::string w;
    for (int a = 0; a < n && ok; ++a)
      if (!l.leq(a, a)) { ok = false; w = l.name(a); }
    add("order reflexive", ok, w);
  }
  {
    bool ok = true;
    std::string w;
    for (int a = 0; a < n && ok; ++a)
      for (int b = 0; b < n && ok; ++b)
        if (a != b && l.leq(a, b) && l.leq(b, a)) { ok = false; w = pair_witness(l, a, b); }
    add("order antisymmetric", ok, w);
  }
  {
    bool ok = true;
    std::string w;
    for (int a = 0; a < n && ok; ++a)
      for (int b = 0; b < n && ok; ++b) {
        if (!l.leq(a, b)) continue;
        for (int c = 0; c < n; ++c)
          if (l.leq(b, c) && !l.leq(a, c)) { ok = false; w = l.name(a) + ", " + l.name(b) + ", " + l.name(c); break; }
        if (!ok) break;
      }
    add("order transitive", ok, w);
  }
  {
    bool ok = true;
    std::string w;
    for (int a = 0; a < n && ok; ++a)
      if (!l.leq(l.bot, a) || !l.leq(a, l.top)) { ok = false; w = l.name(a); }
    add("bot and top bound every element", ok, w);
  }
  {
    bool ok = true;
    std::string w;
    for (int a = 0; a < n && ok; ++a)
      for (int b = 0; b < n && ok; ++b) {
        const auto glb = scan_glb(l, a, b);
        if (!glb || *glb != l.meet(a, b)) { ok = false; w = pair_witness(l, a, b); }
      }
    add("meet equals enumerated glb", ok, w);
  }
  {
    bool ok = true;
    std::string w;
    for (int a = 0; a < n && ok; ++a)
      for (int b = 0; b < n && ok; ++b) {
        const auto lub = scan_lub(l, a, b);
        if (!lub || *lub != l.join(a, b)) { ok = false; w = pair_witness(l, a, b); }
      }
    add("join equals enumerated lub", ok, w);
  }
  {
    bool ok = true;
    std::string w;
    for (int a = 0; a < n && ok; ++a)
      for (int b = 0; b < n && ok; ++b)
        if (l.meet(a, b) != l.meet(b, a) || l.join(a, b) != l.join(b, a)) {
          ok = false;
          w = pair_witness(l, a, b);
        }
    add("meet and join commutative", ok, w);
  }
  {
    bool ok = true;
    std::string w;
    for (int a = 0; a < n && ok; ++a)
      for (int b = 0; b < n && ok; ++b)
        for (int c = 0; c < n; ++c) {
          if (l.meet(l.meet(a, b), c) != l.meet(a, l.meet(b, c)) ||
              l.join(l.join(a, b), c) != l.join(a, l.join(b, c))) {
            ok = false;
            w = l.name(a) + ", " + l.name(b) + ", " + l.name(c);
            break;
          }
        }
    add("meet and join associative", ok, w);
  }
  {
    bool ok = true;
    std::string w;
    for (int a = 0; a < n && ok; ++a)
      if (l.meet(a, a) != a || l.join(a, a) != a) { ok = false; w = l.name(a); }
    add("meet and join idempotent", ok, w);
  }
  {
    bool ok = true;
    std::string w;
    for (int a = 0; a < n && ok; ++a)
      for (int b = 0; b < n && ok; ++b)
        if (l.meet(a, l.join(a, b)) != a || l.join(a, l.meet(a, b)) != a) {
          ok = false;
          w = pair_witness(l, a, b);
        }
    add("absorption", ok, w);
  }
  {
    bool ok = true;
    std::string w;
    for (int a = 0; a < n && ok; ++a)
      if (l.meet(a, l.neg(a)) != l.bot || l.join(a, l.neg(a)) != l.top) {
        ok = false;
        w = l.name(a);
      }
    add("complement laws (x^~x=bot, xv~x=top)", ok, w);
  }
  {
    bool ok = true;
    std::string w;
    for (int a = 0; a < n && ok; ++a)
      if (l.neg(l.neg(a)) != a) { ok = false; w = l.name(a); }
    add("complement involutive", ok, w);
  }
  {
    bool ok = true;
    std::string w;
    for (int a = 0; a < n && ok; ++a)
      for (int b = 0; b < n && ok; ++b) {
        const bool le = l.leq(a, b);
        if (le != (l.meet(a, b) == a) || le != (l.join(a, b) == b)) {
          ok = false;
          w = pair_witness(l, a, b);
        }
      }
    add("order agrees with meet and join", ok, w);
  }

  for (int a = 0; a < n && report.complement_antitone; ++a)
    for (int b = 0; b < n; ++b)
      if (l.leq(a, b) && !l.leq(l.neg(b), l.neg(a))) {
        report.complement_antitone = false;
        report.antitone_witness = pair_witness(l, a, b);
        break;
      }

  return report;
}

ClassicalLemmaReport check_classical_lemma(const OrthoLattice& l) {
  ClassicalLemmaReport report;
  for (int a = 0; a < l.size; ++a)
    for (int b = 0; b < l.size; ++b) {
      ++report.pairs_checked;
      const bool excl = l.meet(a, b) == l.bot;
      const bool below_neg = l.leq(a, l.neg(b));
      if (excl != below_neg) {
        report.holds = false;
        report.witness = l.name(a) + ", " + l.name(b) + " (meet " +
                         (excl ? "=" : "!=") + " bot but A<=~B " +
                         (below_neg ? "holds" : "fails") + ")";
        return report;
      }
    }
  return report;
}

}  // namespace preflab
