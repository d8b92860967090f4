#pragma once

#include <compare>
#include <map>
#include <numeric>
#include <utility>
#include <vector>

#include "wreathvote/committee.hpp"
#include "wreathvote/rational.hpp"
#include "wreathvote/wreath.hpp"

/*
 * Positional committee voting. A profile records how many voters cast each
 * full ranking of the m^n committees; a weighting vector assigns points per
 * rank position; the tally map sends profiles to results vectors indexed by
 * committees in lexicographic order. Everything is exact and linear, and the
 * tally commutes with the wreath product action on both sides.
 */

namespace wreathvote {

// A full ranking of all committees, most preferred first, stored by
// lexicographic committee index.
class Ranking {
 public:
  explicit Ranking(std::vector<int> order) : order_(std::move(order)) {
    std::vector<bool> seen(order_.size(), false);
    for (int c : order_) {
      if (c < 0 || c >= static_cast<int>(order_.size()) || seen[c])
        throw DomainError("ranking must list every committee exactly once");
      seen[c] = true;
    }
  }

  static Ranking lexicographic(long long num_committees) {
    std::vector<int> order(static_cast<std::size_t>(num_committees));
    std::iota(order.begin(), order.end(), 0);
    return Ranking(std::move(order));
  }

  int size() const { return static_cast<int>(order_.size()); }
  int at(int position) const { return order_[position]; }
  const std::vector<int>& order() const { return order_; }

  auto operator<=>(const Ranking&) const = default;

 private:
  std::vector<int> order_;
};

// The permutation of lexicographic committee indices induced by g. The map
// g -> committee_permutation(g) is injective for m >= 2 (only the identity
// fixes every committee).
inline Perm committee_permutation(const WreathElement& g, const GroupSpec& spec) {
  const long long d = spec.num_committees();
  std::vector<int> images(static_cast<std::size_t>(d));
  for (long long i = 0; i < d; ++i)
    images[static_cast<std::size_t>(i)] = static_cast<int>(
        lex_index(act(g, committee_from_lex(i, spec.m(), spec.n())), spec.m()));
  return Perm(std::move(images));
}

// g applied to a ranking, position by position.
inline Ranking act(const WreathElement& g, const Ranking& rk, const GroupSpec& spec) {
  const Perm q = committee_permutation(g, spec);
  std::vector<int> order(rk.order().size());
  for (std::size_t pos = 0; pos < order.size(); ++pos) order[pos] = q(rk.at(static_cast<int>(pos)));
  return Ranking(std::move(order));
}

enum class ScoreRole { weighting, results };

// Rational vector indexed by committees in lexicographic order; serves as
// both weighting vector (points per rank position) and results vector
// (points per committee). The role is presentation metadata only.
struct ScoreVector {
  std::vector<Rational> entries;
  ScoreRole role = ScoreRole::weighting;

  ScoreVector() = default;
  explicit ScoreVector(std::vector<Rational> e, ScoreRole r = ScoreRole::weighting)
      : entries(std::move(e)), role(r) {}

  long long size() const { return static_cast<long long>(entries.size()); }
  bool operator==(const ScoreVector& o) const { return entries == o.entries; }
};

inline ScoreVector zero_score_vector(long long d, ScoreRole role = ScoreRole::results) {
  return ScoreVector(std::vector<Rational>(static_cast<std::size_t>(d)), role);
}

inline bool is_sum_zero(const ScoreVector& v) {
  Rational s = 0;
  for (const Rational& x : v.entries) s += x;
  return s == 0;
}

// Sparse rational profile: ranking -> vote weight, no explicit zeros.
// Entries may be negative or fractional.
class Profile {
 public:
  void add(const Ranking& rk, const Rational& v) {
    if (v == 0) return;
    auto it = votes_.find(rk);
    if (it == votes_.end()) {
      votes_.emplace(rk, v);
    } else {
      it->second += v;
      if (it->second == 0) votes_.erase(it);
    }
  }

  const std::map<Ranking, Rational>& votes() const { return votes_; }
  bool empty() const { return votes_.empty(); }
  std::size_t support_size() const { return votes_.size(); }

  Rational total_votes() const {
    Rational s = 0;
    for (const auto& [rk, v] : votes_) s += v;
    return s;
  }

  Profile& operator+=(const Profile& o) {
    for (const auto& [rk, v] : o.votes_) add(rk, v);
    return *this;
  }
  friend Profile operator+(Profile a, const Profile& b) { return a += b; }

  friend Profile operator*(const Rational& c, const Profile& p) {
    Profile r;
    if (c == 0) return r;
    for (const auto& [rk, v] : p.votes_) r.votes_.emplace(rk, c * v);
    return r;
  }

  bool operator==(const Profile&) const = default;

 private:
  std::map<Ranking, Rational> votes_;
};

// The positional voting map T_w: results[c] = sum over ballots of
// votes * w[position of c in the ballot]. Linear in the profile and in w.
inline ScoreVector tally(const Profile& p, const ScoreVector& w) {
  ScoreVector r = zero_score_vector(w.size());
  for (const auto& [rk, v] : p.votes()) {
    if (rk.size() != w.size())
      throw DomainError("weighting vector length does not match ranking length");
    for (int pos = 0; pos < rk.size(); ++pos)
      r.entries[static_cast<std::size_t>(rk.at(pos))] += v * w.entries[static_cast<std::size_t>(pos)];
  }
  return r;
}

struct SumZeroSplit {
  Rational alpha;       // mean entry; w = alpha * ones + sum_zero
  ScoreVector sum_zero; // entries add to zero, orthogonal to the ones vector
};

inline SumZeroSplit sum_zero_split(const ScoreVector& w) {
  if (w.entries.empty()) throw DomainError("empty score vector");
  Rational total = 0;
  for (const Rational& x : w.entries) total += x;
  Rational alpha = total / w.size();
  ScoreVector hat = w;
  for (Rational& x : hat.entries) x -= alpha;
  return SumZeroSplit{std::move(alpha), std::move(hat)};
}

// Results-space permutation action: (g . r)[g c] = r[c].
inline ScoreVector permute_results(const Perm& q, const ScoreVector& v) {
  if (q.degree() != v.size()) throw DomainError("permutation/vector size mismatch");
  ScoreVector out = zero_score_vector(v.size(), v.role);
  for (int i = 0; i < q.degree(); ++i)
    out.entries[static_cast<std::size_t>(q(i))] = v.entries[static_cast<std::size_t>(i)];
  return out;
}

inline ScoreVector act(const WreathElement& g, const ScoreVector& v, const GroupSpec& spec) {
  return permute_results(committee_permutation(g, spec), v);
}

inline Profile act(const WreathElement& g, const Profile& p, const GroupSpec& spec) {
  Profile out;
  for (const auto& [rk, v] : p.votes()) out.add(act(g, rk, spec), v);
  return out;
}

// Sparse element of the rational group algebra QS_m wr S_n.
class GroupAlgebraElement {
 public:
  void add(const WreathElement& g, const Rational& c) {
    if (c == 0) return;
    auto it = coeffs_.find(g);
    if (it == coeffs_.end()) {
      coeffs_.emplace(g, c);
    } else {
      it->second += c;
      if (it->second == 0) coeffs_.erase(it);
    }
  }

  const std::map<WreathElement, Rational>& coeffs() const { return coeffs_; }
  bool empty() const { return coeffs_.empty(); }

  GroupAlgebraElement& operator+=(const GroupAlgebraElement& o) {
    for (const auto& [g, c] : o.coeffs_) add(g, c);
    return *this;
  }
  friend GroupAlgebraElement operator+(GroupAlgebraElement a, const GroupAlgebraElement& b) {
    return a += b;
  }
  friend GroupAlgebraElement operator*(const Rational& s, const GroupAlgebraElement& a) {
    GroupAlgebraElement r;
    if (s == 0) return r;
    for (const auto& [g, c] : a.coeffs_) r.coeffs_.emplace(g, s * c);
    return r;
  }

  bool operator==(const GroupAlgebraElement&) const = default;

 private:
  std::map<WreathElement, Rational> coeffs_;
};

// a acting on a score vector: sum of coeff * (rho(g) w).
inline ScoreVector apply_group_algebra(const GroupAlgebraElement& a, const ScoreVector& w,
                                       const GroupSpec& spec) {
  ScoreVector out = zero_score_vector(w.size(), ScoreRole::results);
  for (const auto& [g, c] : a.coeffs()) {
    const Perm q = committee_permutation(g, spec);
    if (q.degree() != w.size()) throw DomainError("score vector length does not match group");
    for (int i = 0; i < q.degree(); ++i)
      out.entries[static_cast<std::size_t>(q(i))] += c * w.entries[static_cast<std::size_t>(i)];
  }
  return out;
}

// The profile corresponding to a group algebra element: each g contributes
// its coefficient as votes for the ranking obtained by applying g to the
// lexicographic identity ranking. By construction
// tally(group_algebra_to_profile(a), w) = apply_group_algebra(a, w).
inline Profile group_algebra_to_profile(const GroupAlgebraElement& a, const GroupSpec& spec) {
  Profile p;
  for (const auto& [g, c] : a.coeffs()) {
    const Perm q = committee_permutation(g, spec);
    std::vector<int> order(q.images().begin(), q.images().end());
    p.add(Ranking(std::move(order)), c);
  }
  return p;
}

// Committees achieving the maximal score, in lexicographic order.
inline std::vector<long long> winners(const ScoreVector& results) {
  std::vector<long long> best;
  if (results.entries.empty()) return best;
  Rational top = results.entries[0];
  for (const Rational& x : results.entries)
    if (x > top) top = x;
  for (long long i = 0; i < results.size(); ++i)
    if (results.entries[static_cast<std::size_t>(i)] == top) best.push_back(i);
  return best;
}

}  // namespace wreathvote
