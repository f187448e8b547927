#pragma once

#include <array>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "preflab/errors.hpp"

namespace preflab {

/** A finite self-reference system: expressions E = {0..nE-1}, constants
 * C = {0..nC-1}, a total encoding enc: E -> C, and a total application
 * app: E x C -> E stored row-major. The derived operation
 * star(e, f) = app(e, enc(f)) lets expressions act on expressions through
 * their encodings.
 */
struct Srs {
  int num_expressions = 0;
  int num_constants = 0;
  std::vector<int> enc;  // num_expressions entries, values in [0, num_constants)
  std::vector<int> app;  // num_expressions * num_constants, values in [0, num_expressions)

  int apply(int e, int c) const {
    return app[static_cast<std::size_t>(e) * static_cast<std::size_t>(num_constants) +
               static_cast<std::size_t>(c)];
  }
  int star(int e, int f) const { return apply(e, enc[static_cast<std::size_t>(f)]); }

  // Throws DimensionError unless enc and app are total with in-range values.
  void validate() const;
};

/** An Srs together with an embedding emb: C -> E and an associative
 * composition comp: E x E -> E satisfying app(e, c) = comp(e, emb(c)).
 * dobar(e) = emb(enc(e)) is the expression standing for e's own encoding.
 */
struct EmbeddableSrs {
  Srs base;
  std::vector<int> emb;  // num_constants entries, values in [0, num_expressions)
  std::function<int(int, int)> comp;

  int star(int e, int f) const { return base.star(e, f); }
  int dobar(int e) const {
    return emb[static_cast<std::size_t>(base.enc[static_cast<std::size_t>(e)])];
  }
  // dobar(star(e, e)): the encoded self-application of e.
  int diag(int e) const { return dobar(star(e, e)); }
};

// All f in the domain (default: every expression) with star(e, f) = f,
// in increasing order.
std::vector<int> find_fixed_points(const Srs& s, int e, std::span<const int> domain = {});

// Triple loops (associativity, composition identities) stop early past this
// many iterations and are reported as sampled rather than exhaustive.
inline constexpr long long kDefaultTripleBudget = 300'000'000;

struct EmbeddingCheck {
  bool embedding_holds = true;
  std::optional<std::pair<int, int>> embedding_witness;  // (e, c) with app(e,c) != comp(e,emb(c))
  bool associativity_holds = true;
  bool associativity_exhaustive = true;
  std::optional<std::array<int, 3>> associativity_witness;
  std::string note;

  bool ok() const { return embedding_holds && associativity_holds; }
};

/** Verifies the embedding equation on every (expression, constant) pair and
 * comp associativity on expression triples. When the triple count exceeds
 * the budget, associativity is checked on an evenly strided sample and the
 * check is marked non-exhaustive (callers owning a coordinatewise comp can
 * discharge associativity from the underlying lattice law instead).
 */
EmbeddingCheck check_embeddable(const Srs& s, std::span<const int> emb,
                                const std::function<int(int, int)>& comp,
                                long long triple_budget = kDefaultTripleBudget);

// Whether star(f, e) = diag(e) for every e in the domain (default: every
// expression).
bool is_diagonaliser(const EmbeddableSrs& es, int f, std::span<const int> domain = {});

// First f with star(f, e) = diag(e) for every e in the domain (default:
// every expression), if any.
std::optional<int> find_diagonaliser(const EmbeddableSrs& es, std::span<const int> domain = {});

enum class AdlStatus { kPass, kFail, kNotApplicable };

struct AdlReport {
  AdlStatus status = AdlStatus::kNotApplicable;
  std::optional<int> diagonaliser;
  // Fixed-point construction e := comp(d, f_diag), f := star(e, e) with
  // star(d, f) = f, recorded per d as (d, f).
  std::vector<std::pair<int, int>> fixed_points;
  std::optional<int> failing_d;
  // star(f, g) = comp(f, dobar(g)) over all pairs.
  bool pair_identity_holds = false;
  std::optional<std::pair<int, int>> pair_identity_witness;
  // star(comp(f, g), h) = comp(f, star(g, h)) over all triples.
  bool triple_identity_holds = false;
  bool triple_identity_exhaustive = false;
  std::optional<std::array<int, 3>> triple_identity_witness;
  std::string note;
};

/** Replays the diagonalisation argument: given a diagonaliser over the full
 * expression set, every d has the constructed fixed point f with
 * star(d, f) = f. Also checks the two composition identities the argument
 * rests on. Systems without a full-domain diagonaliser are not applicable.
 */
AdlReport verify_adl(const EmbeddableSrs& es, long long triple_budget = kDefaultTripleBudget);

}  // namespace preflab
