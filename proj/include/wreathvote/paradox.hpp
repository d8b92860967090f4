#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wreathvote/decomposition.hpp"
#include "wreathvote/election.hpp"
#include "wreathvote/linalg.hpp"

/*
 * Constructive voting paradox: given sum-zero weighting vectors whose
 * isotypic projections are linearly independent in every component k >= 1,
 * and arbitrary sum-zero target results, there are infinitely many profiles
 * scoring every target under its weighting vector simultaneously.
 *
 * The construction solves, exactly, the linear system
 *
 *   sum over g of c_g (rho_R(g) w_i) = r_i   for all i
 *
 * for group algebra coefficients c_g. A particular solution gives the base
 * profile; the nullspace gives kernel elements b with b w_i = 0, so
 * base + c b works for every rational c. The independence hypothesis makes
 * the system solvable for every choice of targets; a failed solve under a
 * passing hypothesis is therefore an internal invariant violation.
 */

namespace wreathvote {

struct ParadoxInstance {
  GroupSpec spec;
  std::vector<ScoreVector> weights;
  std::vector<ScoreVector> targets;

  int j() const { return static_cast<int>(weights.size()); }
};

inline void validate_instance(const ParadoxInstance& inst) {
  if (inst.weights.empty()) throw DomainError("paradox instance needs at least one weighting vector");
  if (inst.weights.size() != inst.targets.size())
    throw DomainError("paradox instance needs one target per weighting vector");
  const long long d = inst.spec.num_committees();
  for (const ScoreVector& w : inst.weights) {
    if (w.size() != d) throw DomainError("weighting vector length must be m^n");
    if (!is_sum_zero(w)) throw DomainError("weighting vectors must be sum-zero");
  }
  for (const ScoreVector& r : inst.targets) {
    if (r.size() != d) throw DomainError("target results length must be m^n");
    if (!is_sum_zero(r)) throw DomainError("target results must be sum-zero");
  }
}

struct HypothesisRow {
  int k;
  int rank;     // of [P_k w_1 | ... | P_k w_j]
  bool ok;      // rank == j
};

struct HypothesisReport {
  int j = 0;
  std::vector<HypothesisRow> rows;  // k = 1..n
  bool holds = false;

  int first_failing_k() const {
    for (const HypothesisRow& row : rows)
      if (!row.ok) return row.k;
    return -1;
  }
};

// Exact per-component independence check of the weighting vectors.
inline HypothesisReport check_hypothesis(const GroupSpec& spec,
                                         const std::vector<ScoreVector>& ws) {
  if (ws.empty()) throw DomainError("hypothesis check needs at least one weighting vector");
  const long long d = spec.num_committees();
  for (const ScoreVector& w : ws) {
    if (w.size() != d) throw DomainError("weighting vector length must be m^n");
    if (!is_sum_zero(w)) throw DomainError("weighting vectors must be sum-zero");
  }
  HypothesisReport report;
  report.j = static_cast<int>(ws.size());
  report.holds = true;
  for (int k = 1; k <= spec.n(); ++k) {
    const ProjectionOperator proj = isotypic_projection(spec, k);
    RationalMatrix cols(static_cast<int>(d), report.j);
    for (int i = 0; i < report.j; ++i) {
      const std::vector<Rational> p = proj.matrix.apply(ws[static_cast<std::size_t>(i)].entries);
      for (long long row = 0; row < d; ++row)
        cols.at(static_cast<int>(row), i) = p[static_cast<std::size_t>(row)];
    }
    const int rk = rank(cols);
    const bool ok = rk == report.j;
    report.rows.push_back(HypothesisRow{k, rk, ok});
    if (!ok) report.holds = false;
  }
  return report;
}

struct ProfileFamily {
  GroupAlgebraElement base;
  std::vector<GroupAlgebraElement> kernel_basis;
  Profile base_profile;

  bool operator==(const ProfileFamily&) const = default;
};

// Solves the paradox instance. Throws DomainError when the independence
// hypothesis fails (naming the failing component), LimitError when the
// system exceeds the operation budget, InternalError when no solution
// exists despite a passing hypothesis.
inline ProfileFamily solve_paradox(const ParadoxInstance& inst,
                                   long long budget = 100'000'000) {
  validate_instance(inst);
  const HypothesisReport hyp = check_hypothesis(inst.spec, inst.weights);
  if (!hyp.holds)
    throw DomainError("weighting vectors fail the independence hypothesis at k=" +
                      std::to_string(hyp.first_failing_k()));

  const long long d = inst.spec.num_committees();
  const long long order = inst.spec.order();
  const int j = inst.j();
  if (order * j * d > budget)
    throw LimitError("paradox system size |G|*j*m^n = " +
                     std::to_string(order * j * d) + " exceeds budget " +
                     std::to_string(budget));

  const std::vector<WreathElement> elements = all_elements(inst.spec);
  RationalMatrix a(static_cast<int>(j * d), static_cast<int>(order));
  std::vector<Rational> b(static_cast<std::size_t>(j * d));
  for (std::size_t col = 0; col < elements.size(); ++col) {
    const Perm q = committee_permutation(elements[col], inst.spec);
    for (int i = 0; i < j; ++i) {
      const ScoreVector moved = permute_results(q, inst.weights[static_cast<std::size_t>(i)]);
      for (long long row = 0; row < d; ++row)
        a.at(static_cast<int>(i * d + row), static_cast<int>(col)) =
            moved.entries[static_cast<std::size_t>(row)];
    }
  }
  for (int i = 0; i < j; ++i)
    for (long long row = 0; row < d; ++row)
      b[static_cast<std::size_t>(i * d + row)] =
          inst.targets[static_cast<std::size_t>(i)].entries[static_cast<std::size_t>(row)];

  const std::optional<std::vector<Rational>> particular = solve(a, b);
  if (!particular)
    throw InternalError("paradox system unsolvable although the hypothesis holds");

  ProfileFamily family;
  for (std::size_t col = 0; col < elements.size(); ++col)
    family.base.add(elements[col], (*particular)[col]);
  for (const std::vector<Rational>& vec : nullspace(a)) {
    GroupAlgebraElement kernel;
    for (std::size_t col = 0; col < elements.size(); ++col) kernel.add(elements[col], vec[col]);
    family.kernel_basis.push_back(std::move(kernel));
  }
  family.base_profile = group_algebra_to_profile(family.base, inst.spec);
  return family;
}

struct VerifyFailure {
  Rational c;
  int kernel_index;     // -1 for the bare base profile
  int weight_index;     // which system disagreed
  long long committee;  // lexicographic index of the disagreeing entry
  Rational expected;
  Rational actual;
};

struct VerifyResult {
  bool ok = true;
  std::optional<VerifyFailure> failure;
};

// Renders base + c * kernel for every sample c and every kernel element and
// re-tallies all systems exactly.
inline VerifyResult verify_family(const ProfileFamily& family, const ParadoxInstance& inst,
                                  const std::vector<Rational>& samples) {
  validate_instance(inst);
  const auto check = [&](const Profile& p, const Rational& c,
                         int kernel_index) -> std::optional<VerifyFailure> {
    for (int i = 0; i < inst.j(); ++i) {
      const ScoreVector got = tally(p, inst.weights[static_cast<std::size_t>(i)]);
      const ScoreVector& want = inst.targets[static_cast<std::size_t>(i)];
      for (long long cidx = 0; cidx < got.size(); ++cidx)
        if (got.entries[static_cast<std::size_t>(cidx)] !=
            want.entries[static_cast<std::size_t>(cidx)])
          return VerifyFailure{c, kernel_index, i, cidx,
                               want.entries[static_cast<std::size_t>(cidx)],
                               got.entries[static_cast<std::size_t>(cidx)]};
    }
    return std::nullopt;
  };

  if (auto fail = check(family.base_profile, 0, -1)) return VerifyResult{false, fail};
  for (std::size_t bi = 0; bi < family.kernel_basis.size(); ++bi) {
    for (const Rational& c : samples) {
      const GroupAlgebraElement shifted = family.base + c * family.kernel_basis[bi];
      const Profile p = group_algebra_to_profile(shifted, inst.spec);
      if (auto fail = check(p, c, static_cast<int>(bi))) return VerifyResult{false, fail};
    }
  }
  return VerifyResult{true, std::nullopt};
}

}  // namespace wreathvote
