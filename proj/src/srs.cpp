#include "preflab/srs.hpp"

#include <numeric>

namespace preflab {

void Srs::validate() const {
  if (num_expressions <= 0 || num_constants <= 0) {
    throw DimensionError("self-reference system needs nonempty carriers");
  }
  if (static_cast<int>(enc.size()) != num_expressions) {
    throw DimensionError("enc must cover every expression");
  }
  for (int c : enc) {
    if (c < 0 || c >= num_constants) throw DimensionError("enc value out of range");
  }
  const std::size_t want = static_cast<std::size_t>(num_expressions) *
                           static_cast<std::size_t>(num_constants);
  if (app.size() != want) {
    throw DimensionError("app must cover every expression-constant pair");
  }
  for (int e : app) {
    if (e < 0 || e >= num_expressions) throw DimensionError("app value out of range");
  }
}

namespace {

std::vector<int> full_domain(int n) {
  std::vector<int> d(static_cast<std::size_t>(n));
  std::iota(d.begin(), d.end(), 0);
  return d;
}

}  // namespace

std::vector<int> find_fixed_points(const Srs& s, int e, std::span<const int> domain) {
  if (e < 0 || e >= s.num_expressions) throw DimensionError("expression out of range");
  std::vector<int> backing;
  if (domain.empty()) {
    backing = full_domain(s.num_expressions);
    domain = backing;
  }
  std::vector<int> out;
  for (int f : domain) {
    if (s.star(e, f) == f) out.push_back(f);
  }
  return out;
}

EmbeddingCheck check_embeddable(const Srs& s, std::span<const int> emb,
                                const std::function<int(int, int)>& comp,
                                long long triple_budget) {
  if (static_cast<int>(emb.size()) != s.num_constants) {
    throw DimensionError("emb must cover every constant");
  }
  EmbeddingCheck out;
  for (int e = 0; e < s.num_expressions && out.embedding_holds; ++e) {
    for (int c = 0; c < s.num_constants; ++c) {
      if (s.apply(e, c) != comp(e, emb[static_cast<std::size_t>(c)])) {
        out.embedding_holds = false;
        out.embedding_witness = {e, c};
        break;
      }
    }
  }

  const long long n = s.num_expressions;
  const long long triples = n * n * n;
  const long long stride =
      triples <= triple_budget ? 1 : (triples + triple_budget - 1) / triple_budget;
  out.associativity_exhaustive = stride == 1;
  if (stride != 1) {
    out.note = "associativity sampled: " + std::to_string(triples) +
               " triples exceed the budget";
  }
  for (long long t = 0; t < triples && out.associativity_holds; t += stride) {
    const int x = static_cast<int>(t / (n * n));
    const int y = static_cast<int>((t / n) % n);
    const int z = static_cast<int>(t % n);
    if (comp(comp(x, y), z) != comp(x, comp(y, z))) {
      out.associativity_holds = false;
      out.associativity_witness = {{x, y, z}};
    }
  }
  return out;
}

bool is_diagonaliser(const EmbeddableSrs& es, int f, std::span<const int> domain) {
  std::vector<int> backing;
  if (domain.empty()) {
    backing = full_domain(es.base.num_expressions);
    domain = backing;
  }
  for (int e : domain) {
    if (es.star(f, e) != es.diag(e)) return false;
  }
  return true;
}

std::optional<int> find_diagonaliser(const EmbeddableSrs& es, std::span<const int> domain) {
  std::vector<int> backing;
  if (domain.empty()) {
    backing = full_domain(es.base.num_expressions);
    domain = backing;
  }
  for (int f = 0; f < es.base.num_expressions; ++f) {
    if (is_diagonaliser(es, f, domain)) return f;
  }
  return std::nullopt;
}

AdlReport verify_adl(const EmbeddableSrs& es, long long triple_budget) {
  AdlReport report;
  report.diagonaliser = find_diagonaliser(es);
  if (!report.diagonaliser) {
    report.status = AdlStatus::kNotApplicable;
    report.note = "no diagonaliser over the full expression set";
    return report;
  }
  const int fd = *report.diagonaliser;
  const int n = es.base.num_expressions;

  report.status = AdlStatus::kPass;
  for (int d = 0; d < n; ++d) {
    const int e = es.comp(d, fd);
    const int f = es.star(e, e);
    if (es.star(d, f) != f) {
      report.status = AdlStatus::kFail;
      report.failing_d = d;
      break;
    }
    report.fixed_points.emplace_back(d, f);
  }

  report.pair_identity_holds = true;
  for (int f = 0; f < n && report.pair_identity_holds; ++f) {
    for (int g = 0; g < n; ++g) {
      if (es.star(f, g) != es.comp(f, es.dobar(g))) {
        report.pair_identity_holds = false;
        report.pair_identity_witness = {f, g};
        break;
      }
    }
  }

  const long long triples = static_cast<long long>(n) * n * n;
  const long long stride =
      triples <= triple_budget ? 1 : (triples + triple_budget - 1) / triple_budget;
  report.triple_identity_exhaustive = stride == 1;
  if (stride != 1) {
    report.note = "composition triple identity sampled: " + std::to_string(triples) +
                  " triples exceed the budget";
  }
  report.triple_identity_holds = true;
  for (long long t = 0; t < triples && report.triple_identity_holds; t += stride) {
    const int x = static_cast<int>(t / (static_cast<long long>(n) * n));
    const int y = static_cast<int>((t / n) % n);
    const int z = static_cast<int>(t % n);
    if (es.star(es.comp(x, y), z) != es.comp(x, es.star(y, z))) {
      report.triple_identity_holds = false;
      report.triple_identity_witness = {{x, y, z}};
    }
  }
  if (!report.pair_identity_holds || !report.triple_identity_holds) {
    report.status = AdlStatus::kFail;
  }
  return report;
}

}  // namespace preflab
