#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "wreathvote/committee.hpp"
#include "wreathvote/election.hpp"
#include "wreathvote/rational.hpp"
#include "wreathvote/wreath.hpp"

/*
 * Characters of the permutation representations at play.
 *
 * The results space R (basis: committees) has character
 *   chi_R(sigma; pi) = prod over cycles nu of pi of chi_N(g_nu),
 * where g_nu is the cycle product and chi_N counts fixed points in S_m.
 * Splitting chi_N = 1 + chi' (trivial + standard) and expanding the product
 * by total cycle length picked up gives the isotypic pieces
 *   chi_k(sigma; pi) = sum over cycle subsets T with sum of lengths = k
 *                      of prod over T of chi'(g_nu),
 * one for each k in 0..n. Each chi_k is validated against an induced
 * character computed from scratch (induced_character_oracle) before use.
 *
 * The profile space P (basis: full rankings) affords |rankings| copies of
 * the regular character divided by the group order: no non-identity element
 * fixes any full ranking, because only the identity fixes every committee.
 */

namespace wreathvote {

// Fixed points of the natural action of S_m on m points.
inline int natural_character(const Perm& s) { return s.fixed_points(); }

// Character of the (m-1)-dimensional complement of the trivial module.
inline int standard_character(const Perm& s) { return s.fixed_points() - 1; }

// Number of committees fixed by g, via the cycle product formula.
inline long long results_character(const WreathElement& g) {
  long long r = 1;
  const CycleData cd = cycle_data(g);
  for (int nu = 0; nu < cd.count(); ++nu)
    r *= natural_character(cycle_product_at(g, cd.cycles[nu][0]));
  return r;
}

// The committees fixed by g, built structurally: for each cycle of pi pick
// a fixed point of its cycle product at the representative department, then
// the orbit fills in the rest of the cycle's departments.
inline std::vector<Committee> fixed_committees(const WreathElement& g, const GroupSpec& spec) {
  if (g.m() != spec.m() || g.n() != spec.n())
    throw DomainError("element does not belong to this group");
  const CycleData cd = cycle_data(g);
  std::vector<std::vector<int>> choices(cd.cycles.size());
  for (std::size_t nu = 0; nu < cd.cycles.size(); ++nu) {
    const Perm gnu = cycle_product_at(g, cd.cycles[nu][0]);
    for (int k = 0; k < spec.m(); ++k)
      if (gnu(k) == k) choices[nu].push_back(k);
    if (choices[nu].empty()) return {};
  }

  std::vector<Committee> out;
  std::vector<std::size_t> pick(cd.cycles.size(), 0);
  while (true) {
    std::vector<int> members(spec.n());
    for (std::size_t nu = 0; nu < cd.cycles.size(); ++nu) {
      const std::vector<int>& cyc = cd.cycles[nu];
      members[cyc[0]] = choices[nu][pick[nu]];
      for (std::size_t t = 1; t < cyc.size(); ++t)
        members[cyc[t]] = g.sigma()[cyc[t]](members[cyc[t - 1]]);
    }
    out.push_back(Committee(std::move(members)));
    int pos = static_cast<int>(pick.size()) - 1;
    while (pos >= 0 && pick[pos] + 1 == choices[pos].size()) pick[pos--] = 0;
    if (pos < 0) break;
    ++pick[pos];
  }
  std::sort(out.begin(), out.end());
  return out;
}

// chi_k: coefficient of x^k in prod over cycles of (1 + chi'(g_nu) x^l(nu)).
// chi_0 is the trivial character; the chi_k sum pointwise to chi_R.
inline Rational isotypic_character(int k, const WreathElement& g) {
  const int n = g.n();
  if (k < 0 || k > n) throw DomainError("isotypic index k must lie in 0..n");
  std::vector<long long> poly(static_cast<std::size_t>(n) + 1, 0);
  poly[0] = 1;
  const CycleData cd = cycle_data(g);
  for (int nu = 0; nu < cd.count(); ++nu) {
    const int l = cd.length(nu);
    const long long cp = standard_character(cycle_product_at(g, cd.cycles[nu][0]));
    for (int dgr = n - l; dgr >= 0; --dgr)
      if (poly[dgr] != 0) poly[dgr + l] += poly[dgr] * cp;
  }
  return Rational(poly[k]);
}

// Conjugacy-invariant key: the multiset over cycles of pi of
// (cycle length, cycle type of the cycle product). Conjugate elements get
// equal keys, so class functions may be memoized on it.
using ClassKey = std::vector<std::pair<int, std::vector<int>>>;

inline ClassKey class_key(const WreathElement& g) {
  ClassKey key;
  const CycleData cd = cycle_data(g);
  for (int nu = 0; nu < cd.count(); ++nu)
    key.emplace_back(cd.length(nu), cycle_product_at(g, cd.cycles[nu][0]).cycle_type());
  std::sort(key.begin(), key.end());
  return key;
}

// Natural-extension character of the block subgroup S_m wr (S_{n-k} x S_k):
// the trivial module on the first n-k departments tensored with the
// standard module on the last k, extended to the inertia group. Zero when
// pi does not preserve the block split.
inline bool preserves_block_split(const Perm& pi, int first_block) {
  for (int i = 0; i < first_block; ++i)
    if (pi(i) >= first_block) return false;
  return true;
}

// Induced character of the k-th isotypic constituent, computed by the
// standard induction sum over the whole group. Exact and slow; exists to
// ground the fast path above in a from-scratch construction.
inline Rational induced_character_oracle(int k, const WreathElement& g, const GroupSpec& spec) {
  const int n = spec.n();
  if (k < 0 || k > n) throw DomainError("isotypic index k must lie in 0..n");
  if (g.m() != spec.m() || g.n() != n)
    throw DomainError("element does not belong to this group");
  const int first_block = n - k;
  BigInt subgroup_order = factorial(n - k) * factorial(k);
  BigInt mf = factorial(spec.m());
  for (int i = 0; i < n; ++i) subgroup_order *= mf;

  BigInt sum = 0;
  for_each_element(spec, [&](const WreathElement& x) {
    const WreathElement h = x * g * x.inverse();
    if (!preserves_block_split(h.pi(), first_block)) return;
    long long val = 1;
    const CycleData cd = cycle_data(h);
    for (int nu = 0; nu < cd.count(); ++nu)
      if (cd.cycles[nu][0] >= first_block)
        val *= standard_character(cycle_product_at(h, cd.cycles[nu][0]));
    sum += val;
  });
  return Rational(sum, subgroup_order);
}

// (m^n)! at the identity, 0 elsewhere: no non-identity element fixes a full
// ranking. Requires a faithful committee action, which fails for m = 1 with
// n > 1 (there is a single committee).
inline Rational profile_character(const WreathElement& g, const GroupSpec& spec) {
  if (spec.m() == 1 && spec.n() > 1)
    throw DomainError("profile character is degenerate for m = 1 with n > 1");
  if (g.is_identity()) return Rational(factorial(spec.num_committees()));
  return Rational(0);
}

// Exact class function on S_m wr S_n, memoized by conjugacy-invariant key.
// The memo table is not synchronized; confine one instance to one thread.
class ClassFunction {
 public:
  using Evaluator = std::function<Rational(const WreathElement&)>;

  ClassFunction(GroupSpec spec, std::string label, Evaluator eval)
      : spec_(std::move(spec)), label_(std::move(label)), eval_(std::move(eval)) {}

  const GroupSpec& spec() const { return spec_; }
  const std::string& label() const { return label_; }

  const Rational& operator()(const WreathElement& g) const {
    if (g.m() != spec_.m() || g.n() != spec_.n())
      throw DomainError("element does not belong to this class function's group");
    ClassKey key = class_key(g);
    auto it = memo_.find(key);
    if (it == memo_.end()) it = memo_.emplace(std::move(key), eval_(g)).first;
    return it->second;
  }

 private:
  GroupSpec spec_;
  std::string label_;
  Evaluator eval_;
  mutable std::map<ClassKey, Rational> memo_;
};

inline ClassFunction isotypic_class_function(const GroupSpec& spec, int k) {
  if (k < 0 || k > spec.n()) throw DomainError("isotypic index k must lie in 0..n");
  return ClassFunction(spec, "chi_" + std::to_string(k),
                       [k](const WreathElement& g) { return isotypic_character(k, g); });
}

inline ClassFunction oracle_class_function(const GroupSpec& spec, int k) {
  if (k < 0 || k > spec.n()) throw DomainError("isotypic index k must lie in 0..n");
  return ClassFunction(spec, "chi_" + std::to_string(k) + "^ind",
                       [k, spec](const WreathElement& g) {
                         return induced_character_oracle(k, g, spec);
                       });
}

inline ClassFunction results_class_function(const GroupSpec& spec) {
  return ClassFunction(spec, "chi_R", [](const WreathElement& g) {
    return Rational(results_character(g));
  });
}

inline ClassFunction profile_class_function(const GroupSpec& spec) {
  if (spec.m() == 1 && spec.n() > 1)
    throw DomainError("profile character is degenerate for m = 1 with n > 1");
  return ClassFunction(spec, "chi_P", [spec](const WreathElement& g) {
    return profile_character(g, spec);
  });
}

inline ClassFunction regular_class_function(const GroupSpec& spec) {
  return ClassFunction(spec, "chi_reg", [order = spec.order()](const WreathElement& g) {
    return g.is_identity() ? Rational(order) : Rational(0);
  });
}

// <f1, f2> = 1/|G| sum over g of f1(g) f2(g^-1).
inline Rational inner_product(const ClassFunction& f1, const ClassFunction& f2) {
  if (!(f1.spec() == f2.spec()))
    throw DomainError("inner product requires class functions on the same group");
  Rational sum = 0;
  for_each_element(f1.spec(), [&](const WreathElement& g) { sum += f1(g) * f2(g.inverse()); });
  return sum / f1.spec().order();
}

}  // namespace wreathvote
