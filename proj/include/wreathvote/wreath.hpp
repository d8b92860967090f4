#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "wreathvote/errors.hpp"
#include "wreathvote/perm.hpp"
#include "wreathvote/rational.hpp"

/*
 * The symmetry group of a committee election with n departments and m
 * candidates per department is the wreath product S_m wr S_n: pairs
 * (sigma; pi) with sigma in S_m^n and pi in S_n. The element first permutes
 * departments by pi, then permutes candidates within the (new) departments
 * by sigma. The product rule below is the unique one making that a left
 * action:
 *
 *   (sigma; pi) * (tau; rho) = ((sigma_j tau_{pi^-1(j)})_j ; pi rho)
 */

namespace wreathvote {

struct GroupLimits {
  long long max_group_order = 1'000'000;
  long long max_committees = 4096;
};

// Election shape plus desk-scale guard limits. A constructed GroupSpec is
// always within its limits.
class GroupSpec {
 public:
  GroupSpec(int m, int n, GroupLimits limits = {}) : m_(m), n_(n), limits_(limits) {
    if (m < 1 || n < 1) throw DomainError("group spec requires m >= 1 and n >= 1");
    BigInt committees = 1;
    for (int i = 0; i < n; ++i) committees *= m;
    if (committees > limits.max_committees)
      throw LimitError("m^n = " + to_string(committees) + " exceeds committee limit " +
                       std::to_string(limits.max_committees));
    BigInt order = factorial(n);
    BigInt mf = factorial(m);
    for (int i = 0; i < n; ++i) order *= mf;
    if (order > limits.max_group_order)
      throw LimitError("group order m!^n n! = " + to_string(order) +
                       " exceeds limit " + std::to_string(limits.max_group_order));
    order_ = order.convert_to<long long>();
    num_committees_ = committees.convert_to<long long>();
  }

  int m() const { return m_; }
  int n() const { return n_; }
  long long order() const { return order_; }                    // m!^n * n!
  long long num_committees() const { return num_committees_; }  // m^n
  const GroupLimits& limits() const { return limits_; }

  bool operator==(const GroupSpec& o) const { return m_ == o.m_ && n_ == o.n_; }

 private:
  int m_;
  int n_;
  GroupLimits limits_;
  long long order_;
  long long num_committees_;
};

// A wreath product element (sigma; pi): sigma holds one element of S_m per
// department, pi permutes the departments.
class WreathElement {
 public:
  WreathElement(std::vector<Perm> sigma, Perm pi)
      : sigma_(std::move(sigma)), pi_(std::move(pi)) {
    if (static_cast<int>(sigma_.size()) != pi_.degree() || sigma_.empty())
      throw DomainError("wreath element needs one sigma per department");
    for (const Perm& s : sigma_)
      if (s.degree() != sigma_[0].degree())
        throw DomainError("wreath element sigmas must share one degree");
  }

  static WreathElement identity(const GroupSpec& spec) {
    return WreathElement(std::vector<Perm>(spec.n(), Perm::identity(spec.m())),
                         Perm::identity(spec.n()));
  }

  int m() const { return sigma_[0].degree(); }
  int n() const { return pi_.degree(); }
  const std::vector<Perm>& sigma() const { return sigma_; }
  const Perm& pi() const { return pi_; }

  bool is_identity() const {
    if (!pi_.is_identity()) return false;
    for (const Perm& s : sigma_)
      if (!s.is_identity()) return false;
    return true;
  }

  friend WreathElement operator*(const WreathElement& g, const WreathElement& h) {
    if (g.m() != h.m() || g.n() != h.n())
      throw DomainError("wreath elements from different groups");
    const Perm pi_inv = g.pi_.inverse();
    std::vector<Perm> mu;
    mu.reserve(g.sigma_.size());
    for (int j = 0; j < g.n(); ++j) mu.push_back(g.sigma_[j] * h.sigma_[pi_inv(j)]);
    return WreathElement(std::move(mu), g.pi_ * h.pi_);
  }

  WreathElement inverse() const {
    std::vector<Perm> mu;
    mu.reserve(sigma_.size());
    for (int i = 0; i < n(); ++i) mu.push_back(sigma_[pi_(i)].inverse());
    return WreathElement(std::move(mu), pi_.inverse());
  }

  auto operator<=>(const WreathElement&) const = default;

  // "[(1 2 3),(1 2)(3); (1 2)]"
  std::string to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < sigma_.size(); ++i) {
      if (i) s += ',';
      s += sigma_[i].to_cycle_string();
    }
    s += "; ";
    s += pi_.to_cycle_string();
    s += ']';
    return s;
  }

  static WreathElement parse(const std::string& text, const GroupSpec& spec) {
    std::size_t a = text.find_first_not_of(" \t\r\n");
    std::size_t b = text.find_last_not_of(" \t\r\n");
    if (a == std::string::npos || text[a] != '[' || text[b] != ']')
      throw DomainError("wreath element must look like \"[(..),..; (..)]\"");
    std::string body = text.substr(a + 1, b - a - 1);
    std::size_t semi = body.find(';');
    if (semi == std::string::npos)
      throw DomainError("wreath element is missing the '; pi' part");
    std::string sig_part = body.substr(0, semi);
    std::string pi_part = body.substr(semi + 1);

    // split the sigma list on commas at parenthesis depth zero
    std::vector<std::string> sig_texts;
    int depth = 0;
    std::string cur;
    for (char ch : sig_part) {
      if (ch == '(') ++depth;
      if (ch == ')') --depth;
      if (ch == ',' && depth == 0) {
        sig_texts.push_back(cur);
        cur.clear();
      } else {
        cur += ch;
      }
    }
    sig_texts.push_back(cur);
    if (static_cast<int>(sig_texts.size()) != spec.n())
      throw DomainError("expected " + std::to_string(spec.n()) + " sigma entries, got " +
                        std::to_string(sig_texts.size()));
    std::vector<Perm> sigma;
    sigma.reserve(sig_texts.size());
    for (const std::string& st : sig_texts)
      sigma.push_back(Perm::from_cycle_string(st, spec.m()));
    return WreathElement(std::move(sigma), Perm::from_cycle_string(pi_part, spec.n()));
  }

 private:
  std::vector<Perm> sigma_;
  Perm pi_;
};

// Disjoint cycles of pi in the canonical order fixed by this module; the
// representative of each cycle is its first (smallest) entry.
struct CycleData {
  std::vector<std::vector<int>> cycles;

  int count() const { return static_cast<int>(cycles.size()); }
  int length(int nu) const { return static_cast<int>(cycles[nu].size()); }
};

inline CycleData cycle_data(const Perm& pi) { return CycleData{pi.cycles()}; }
inline CycleData cycle_data(const WreathElement& g) { return cycle_data(g.pi()); }

// Cycle product around the pi-cycle through department `dept`, starting
// there: sigma_i sigma_{pi^-1(i)} ... sigma_{pi^-(l-1)(i)} with i = dept.
inline Perm cycle_product_at(const WreathElement& g, int dept) {
  if (dept < 0 || dept >= g.n()) throw DomainError("department out of range");
  const Perm pi_inv = g.pi().inverse();
  Perm r = g.sigma()[dept];
  for (int j = pi_inv(dept); j != dept; j = pi_inv(j)) r = r * g.sigma()[j];
  return r;
}

// Cycle product at the canonical representative of the nu-th cycle.
inline Perm cycle_product(const WreathElement& g, int nu) {
  CycleData cd = cycle_data(g);
  if (nu < 0 || nu >= cd.count()) throw DomainError("cycle index out of range");
  return cycle_product_at(g, cd.cycles[nu][0]);
}

// Visits every element of S_m wr S_n exactly once, in a fixed order:
// pi ascends lexicographically, then (sigma_1,...,sigma_n) as an odometer
// with sigma_n fastest. The identity comes first.
template <typename Fn>
void for_each_element(const GroupSpec& spec, Fn&& fn) {
  const std::vector<Perm> sm = all_permutations(spec.m());
  const std::vector<Perm> sn = all_permutations(spec.n());
  const int n = spec.n();
  for (const Perm& pi : sn) {
    std::vector<int> idx(n, 0);
    while (true) {
      std::vector<Perm> sigma;
      sigma.reserve(n);
      for (int i = 0; i < n; ++i) sigma.push_back(sm[idx[i]]);
      fn(WreathElement(std::move(sigma), pi));
      int pos = n - 1;
      while (pos >= 0 && idx[pos] + 1 == static_cast<int>(sm.size())) idx[pos--] = 0;
      if (pos < 0) break;
      ++idx[pos];
    }
  }
}

inline std::vector<WreathElement> all_elements(const GroupSpec& spec) {
  std::vector<WreathElement> out;
  out.reserve(static_cast<std::size_t>(spec.order()));
  for_each_element(spec, [&](WreathElement g) { out.push_back(std::move(g)); });
  return out;
}

}  // namespace wreathvote
