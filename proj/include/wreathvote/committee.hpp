#pragma once

#include <compare>
#include <string>
#include <vector>

#include "wreathvote/errors.hpp"
#include "wreathvote/wreath.hpp"

namespace wreathvote {

// Candidate `index` from department `dept`, both 0-based. The text form is
// 1-based: "2_3" is candidate 3 from department 2.
struct Candidate {
  int dept{};
  int index{};
  auto operator<=>(const Candidate&) const = default;
};

// One committee: members()[j] is the candidate index chosen from
// department j. Exactly one member per department by construction.
class Committee {
 public:
  explicit Committee(std::vector<int> members) : members_(std::move(members)) {
    if (members_.empty()) throw DomainError("empty committee");
  }

  int size() const { return static_cast<int>(members_.size()); }
  const std::vector<int>& members() const { return members_; }
  int member(int dept) const { return members_[dept]; }

  auto operator<=>(const Committee&) const = default;

 private:
  std::vector<int> members_;
};

inline void validate_committee(const Committee& c, const GroupSpec& spec) {
  if (c.size() != spec.n())
    throw DomainError("committee has " + std::to_string(c.size()) + " members, expected " +
                      std::to_string(spec.n()));
  for (int k : c.members())
    if (k < 0 || k >= spec.m()) throw DomainError("committee member index out of range");
}

// (sigma; pi) applied to candidate i_k: the department moves to pi(i), and
// the new department's sigma permutes the candidate index.
inline Candidate act(const WreathElement& g, Candidate x) {
  if (x.dept < 0 || x.dept >= g.n() || x.index < 0 || x.index >= g.m())
    throw DomainError("candidate out of range for this group");
  const int dept = g.pi()(x.dept);
  return Candidate{dept, g.sigma()[dept](x.index)};
}

// Committee action: department i receives sigma_i applied to the member of
// the department pi^-1(i). Equals acting on each member candidate and
// re-sorting by department.
inline Committee act(const WreathElement& g, const Committee& c) {
  if (c.size() != g.n()) throw DomainError("committee size does not match group");
  const Perm pi_inv = g.pi().inverse();
  std::vector<int> members(c.size());
  for (int i = 0; i < c.size(); ++i) members[i] = g.sigma()[i](c.member(pi_inv(i)));
  return Committee(std::move(members));
}

// Lexicographic committee index, department 1 most significant; the
// committee of all first candidates has index 0.
inline long long lex_index(const Committee& c, int m) {
  long long r = 0;
  for (int k : c.members()) {
    if (k < 0 || k >= m) throw DomainError("committee member index out of range");
    r = r * m + k;
  }
  return r;
}

inline Committee committee_from_lex(long long index, int m, int n) {
  if (index < 0) throw DomainError("negative committee index");
  std::vector<int> members(n);
  for (int j = n - 1; j >= 0; --j) {
    members[j] = static_cast<int>(index % m);
    index /= m;
  }
  if (index != 0) throw DomainError("committee index out of range");
  return Committee(std::move(members));
}

// Canonical text form "1_2,2_1".
inline std::string committee_to_string(const Committee& c) {
  std::string s;
  for (int j = 0; j < c.size(); ++j) {
    if (j) s += ',';
    s += std::to_string(j + 1);
    s += '_';
    s += std::to_string(c.member(j) + 1);
  }
  return s;
}

// Letter shorthand mirroring two-department examples: "Ba" is the second
// candidate from department 1 with the first from department 2. Only
// available for m <= 26 and n <= 2; otherwise the canonical form is used.
inline std::string committee_label(const Committee& c, int m) {
  if (m <= 26 && c.size() <= 2) {
    std::string s;
    s += static_cast<char>('A' + c.member(0));
    if (c.size() == 2) s += static_cast<char>('a' + c.member(1));
    return s;
  }
  return committee_to_string(c);
}

// Accepts the canonical form for any shape and the letter shorthand when
// m <= 26 and n <= 2.
inline Committee parse_committee(const std::string& text, const GroupSpec& spec) {
  std::size_t a = text.find_first_not_of(" \t\r\n");
  std::size_t b = text.find_last_not_of(" \t\r\n");
  if (a == std::string::npos) throw DomainError("empty committee string");
  std::string s = text.substr(a, b - a + 1);

  if (s.find('_') == std::string::npos) {
    if (spec.m() > 26 || spec.n() > 2)
      throw DomainError("letter shorthand needs m <= 26 and n <= 2: '" + text + "'");
    if (static_cast<int>(s.size()) != spec.n())
      throw DomainError("committee '" + text + "' must name " + std::to_string(spec.n()) +
                        " members");
    std::vector<int> members(spec.n());
    for (int j = 0; j < spec.n(); ++j) {
      const char base = (j == 0) ? 'A' : 'a';
      if (s[j] < base || s[j] >= base + spec.m())
        throw DomainError("bad committee letter '" + std::string(1, s[j]) + "' in '" + text +
                          "'");
      members[j] = s[j] - base;
    }
    return Committee(std::move(members));
  }

  std::vector<int> members(spec.n(), -1);
  std::size_t pos = 0;
  int count = 0;
  while (pos <= s.size()) {
    std::size_t comma = s.find(',', pos);
    std::string part = s.substr(pos, comma == std::string::npos ? std::string::npos
                                                                : comma - pos);
    std::size_t us = part.find('_');
    if (us == std::string::npos)
      throw DomainError("expected 'dept_candidate' in committee '" + text + "'");
    int dept, index;
    try {
      dept = std::stoi(part.substr(0, us));
      index = std::stoi(part.substr(us + 1));
    } catch (const std::exception&) {
      throw DomainError("bad committee entry '" + part + "'");
    }
    if (dept < 1 || dept > spec.n() || index < 1 || index > spec.m())
      throw DomainError("committee entry '" + part + "' out of range");
    if (members[dept - 1] != -1)
      throw DomainError("department " + std::to_string(dept) + " listed twice in '" + text +
                        "'");
    members[dept - 1] = index - 1;
    ++count;
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (count != spec.n())
    throw DomainError("committee '" + text + "' must name every department once");
  return Committee(std::move(members));
}

}  // namespace wreathvote
