#pragma once

#include <string>
#include <vector>

#include "wreathvote/characters.hpp"
#include "wreathvote/election.hpp"
#include "wreathvote/linalg.hpp"

/*
 * Isotypic decomposition of the results space. The projection onto the
 * k-th component is the normalized character-averaging idempotent
 *
 *   P_k = (chi_k(e) / |G|) sum over g of chi_k(g^-1) rho_R(g),
 *
 * with rho_R the permutation representation on committees. The projections
 * are idempotent, mutually annihilating, sum to the identity and commute
 * with the whole group action. Multiplicities are always computed from
 * character inner products, never assumed; the report also carries the
 * binomial count C(n,k) for comparison and flags disagreement, because the
 * two need not match (empirically the decomposition is multiplicity-free
 * while C(n,k) > 1 for 0 < k < n).
 */

namespace wreathvote {

struct ProjectionOperator {
  int k;
  RationalMatrix matrix;
};

inline ProjectionOperator isotypic_projection(const GroupSpec& spec, int k) {
  if (k < 0 || k > spec.n()) throw DomainError("isotypic index k must lie in 0..n");
  const int d = static_cast<int>(spec.num_committees());
  const ClassFunction chi = isotypic_class_function(spec, k);
  RationalMatrix sum(d, d);
  for_each_element(spec, [&](const WreathElement& g) {
    const Rational coeff = chi(g.inverse());
    if (coeff == 0) return;
    const Perm q = committee_permutation(g, spec);
    for (int c = 0; c < d; ++c) sum.at(q(c), c) += coeff;
  });
  const Rational dim = chi(WreathElement::identity(spec));
  return ProjectionOperator{k, Rational(dim / spec.order()) * sum};
}

inline std::vector<ProjectionOperator> all_projections(const GroupSpec& spec) {
  std::vector<ProjectionOperator> out;
  out.reserve(static_cast<std::size_t>(spec.n()) + 1);
  for (int k = 0; k <= spec.n(); ++k) out.push_back(isotypic_projection(spec, k));
  return out;
}

inline ScoreVector project_vector(const ScoreVector& v, const ProjectionOperator& proj) {
  if (v.size() != proj.matrix.cols())
    throw DomainError("score vector length does not match projection");
  return ScoreVector(proj.matrix.apply(v.entries), v.role);
}

inline ScoreVector project_vector(const ScoreVector& v, int k, const GroupSpec& spec) {
  return project_vector(v, isotypic_projection(spec, k));
}

struct ComponentRow {
  int k;
  long long multiplicity;     // <chi_R, chi_k>, computed
  long long irreducible_dim;  // chi_k(e)
  long long isotypic_dim;     // rank of P_k
  long long binomial_count;   // C(n,k), for comparison only
  bool multiplicity_differs_from_binomial;
};

struct DecompositionReport {
  std::vector<ComponentRow> rows;
  long long total_dim;     // m^n
  long long residual_dim;  // total minus the isotypic dimensions; always 0
};

inline long long rational_to_ll(const Rational& r, const char* what) {
  if (denominator(r) != 1) throw InternalError(std::string(what) + " is not an integer");
  return numerator(r).convert_to<long long>();
}

inline DecompositionReport decompose_results_space(const GroupSpec& spec) {
  const ClassFunction chi_r = results_class_function(spec);
  const WreathElement e = WreathElement::identity(spec);
  DecompositionReport report;
  report.total_dim = spec.num_committees();
  long long covered = 0;
  for (int k = 0; k <= spec.n(); ++k) {
    const ClassFunction chi = isotypic_class_function(spec, k);
    const long long mult = rational_to_ll(inner_product(chi_r, chi), "multiplicity");
    const long long dim = rational_to_ll(chi(e), "irreducible dimension");
    const long long iso = rank(isotypic_projection(spec, k).matrix);
    if (iso != mult * dim)
      throw InternalError("isotypic dimension " + std::to_string(iso) +
                          " != multiplicity * irreducible dimension for k=" +
                          std::to_string(k));
    const long long binom = binomial(spec.n(), k).convert_to<long long>();
    report.rows.push_back(ComponentRow{k, mult, dim, iso, binom, mult != binom});
    covered += iso;
  }
  report.residual_dim = report.total_dim - covered;
  if (report.residual_dim != 0)
    throw InternalError("isotypic dimensions cover " + std::to_string(covered) +
                        " of " + std::to_string(report.total_dim) + " dimensions");
  return report;
}

// Number of copies of the regular module inside the full-ranking profile
// space: (m^n)! / (m!^n n!). Integral exactly when the committee action is
// faithful; the degenerate m = 1, n > 1 shape is rejected.
inline BigInt profile_space_regular_copies(const GroupSpec& spec) {
  BigInt numer = factorial(spec.num_committees());
  BigInt denom = factorial(spec.n());
  const BigInt mf = factorial(spec.m());
  for (int i = 0; i < spec.n(); ++i) denom *= mf;
  if (numer % denom != 0)
    throw DomainError("profile space is not a sum of regular modules for m=" +
                      std::to_string(spec.m()) + ", n=" + std::to_string(spec.n()));
  BigInt copies = numer / denom;
  if (spec.m() == 2 && spec.n() == 2) {
    // cross-check against <chi_P, chi_reg> / |G|
    const Rational ip =
        inner_product(profile_class_function(spec), regular_class_function(spec));
    if (Rational(copies) * spec.order() != ip)
      throw InternalError("regular-copy count disagrees with <chi_P, chi_reg>");
  }
  return copies;
}

}  // namespace wreathvote
