#pragma once

#include <algorithm>
#include <compare>
#include <numeric>
#include <string>
#include <vector>

#include "wreathvote/errors.hpp"

namespace wreathvote {

// Permutation of {0,...,d-1} in one-line notation: images()[x] is the image
// of x. Composition follows (a*b)(x) = a(b(x)). Text I/O uses 1-based
// disjoint-cycle notation, e.g. "(1 2 3)(4)"; the identity prints as "()".
class Perm {
 public:
  Perm() = default;

  explicit Perm(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (int v : images_) {
      if (v < 0 || v >= static_cast<int>(images_.size()) || seen[v])
        throw DomainError("one-line notation is not a bijection");
      seen[v] = true;
    }
  }

  static Perm identity(int degree) {
    if (degree < 0) throw DomainError("negative permutation degree");
    Perm p;
    p.images_.resize(degree);
    std::iota(p.images_.begin(), p.images_.end(), 0);
    return p;
  }

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int x) const { return images_[x]; }
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const {
    for (int x = 0; x < degree(); ++x)
      if (images_[x] != x) return false;
    return true;
  }

  int fixed_points() const {
    int c = 0;
    for (int x = 0; x < degree(); ++x)
      if (images_[x] == x) ++c;
    return c;
  }

  Perm inverse() const {
    Perm r;
    r.images_.resize(images_.size());
    for (int x = 0; x < degree(); ++x) r.images_[images_[x]] = x;
    return r;
  }

  friend Perm operator*(const Perm& a, const Perm& b) {
    if (a.degree() != b.degree())
      throw DomainError("permutation degree mismatch in composition");
    Perm r;
    r.images_.resize(a.images_.size());
    for (int x = 0; x < a.degree(); ++x) r.images_[x] = a.images_[b.images_[x]];
    return r;
  }

  auto operator<=>(const Perm&) const = default;

  // Disjoint cycles in the canonical order: each cycle starts at its
  // smallest element, cycles sorted by that element. Singletons included.
  std::vector<std::vector<int>> cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(images_.size(), false);
    for (int x = 0; x < degree(); ++x) {
      if (seen[x]) continue;
      std::vector<int> cyc{x};
      seen[x] = true;
      for (int y = images_[x]; y != x; y = images_[y]) {
        cyc.push_back(y);
        seen[y] = true;
      }
      out.push_back(std::move(cyc));
    }
    return out;
  }

  // Cycle lengths, longest first.
  std::vector<int> cycle_type() const {
    std::vector<int> t;
    for (const auto& c : cycles()) t.push_back(static_cast<int>(c.size()));
    std::sort(t.rbegin(), t.rend());
    return t;
  }

  std::string to_cycle_string() const {
    if (is_identity()) return "()";
    std::string s;
    for (const auto& cyc : cycles()) {
      s += '(';
      for (std::size_t i = 0; i < cyc.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(cyc[i] + 1);
      }
      s += ')';
    }
    return s;
  }

  // Parses 1-based cycle notation. Points not mentioned are fixed, so
  // "(1 2)" is a valid element of any S_d with d >= 2. Entries may be
  // separated by spaces or commas.
  static Perm from_cycle_string(const std::string& text, int degree) {
    Perm p = identity(degree);
    std::vector<bool> used(degree, false);
    std::size_t i = 0;
    auto skip_ws = [&] {
      while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_ws();
    if (i == text.size()) throw DomainError("empty permutation literal");
    while (i < text.size()) {
      skip_ws();
      if (i == text.size()) break;
      if (text[i] != '(') throw DomainError("expected '(' in permutation: '" + text + "'");
      ++i;
      std::vector<int> cyc;
      while (true) {
        skip_ws();
        if (i < text.size() && text[i] == ',') { ++i; continue; }
        if (i >= text.size()) throw DomainError("unterminated cycle in: '" + text + "'");
        if (text[i] == ')') { ++i; break; }
        if (!std::isdigit(static_cast<unsigned char>(text[i])))
          throw DomainError("bad character in permutation: '" + text + "'");
        int v = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
          v = v * 10 + (text[i++] - '0');
        if (v < 1 || v > degree)
          throw DomainError("cycle entry " + std::to_string(v) + " out of range [1," +
                            std::to_string(degree) + "]");
        if (used[v - 1])
          throw DomainError("repeated entry " + std::to_string(v) + " in: '" + text + "'");
        used[v - 1] = true;
        cyc.push_back(v - 1);
      }
      for (std::size_t t = 0; t < cyc.size(); ++t)
        p.images_[cyc[t]] = cyc[(t + 1) % cyc.size()];
    }
    skip_ws();
    if (i != text.size())
      throw DomainError("trailing characters in permutation: '" + text + "'");
    return p;
  }

 private:
  std::vector<int> images_;
};

// All d! permutations of degree d in lexicographic one-line order.
inline std::vector<Perm> all_permutations(int degree) {
  std::vector<int> img(degree);
  std::iota(img.begin(), img.end(), 0);
  std::vector<Perm> out;
  do {
    out.push_back(Perm(img));
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

}  // namespace wreathvote
