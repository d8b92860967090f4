#pragma once

#include <random>
#include <vector>

#include "wreathvote/election.hpp"
#include "wreathvote/wreath.hpp"

namespace wvt {

using namespace wreathvote;

inline ScoreVector sv(std::vector<Rational> entries, ScoreRole role = ScoreRole::weighting) {
  return ScoreVector(std::move(entries), role);
}

inline Rational rat(const std::string& s) { return parse_rational(s); }

inline WreathElement we(const std::string& text, const GroupSpec& spec) {
  return WreathElement::parse(text, spec);
}

inline Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 9);
  return Rational(num(rng), den(rng));
}

inline Ranking random_ranking(std::mt19937_64& rng, const GroupSpec& spec) {
  std::vector<int> order(static_cast<std::size_t>(spec.num_committees()));
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  return Ranking(std::move(order));
}

inline Profile random_profile(std::mt19937_64& rng, const GroupSpec& spec,
                              int max_ballots = 5) {
  Profile p;
  std::uniform_int_distribution<int> count(1, max_ballots);
  const int ballots = count(rng);
  for (int i = 0; i < ballots; ++i) p.add(random_ranking(rng, spec), random_rational(rng));
  return p;
}

inline ScoreVector random_score_vector(std::mt19937_64& rng, const GroupSpec& spec,
                                       ScoreRole role = ScoreRole::weighting) {
  std::vector<Rational> entries(static_cast<std::size_t>(spec.num_committees()));
  for (Rational& x : entries) x = random_rational(rng);
  return ScoreVector(std::move(entries), role);
}

}  // namespace wvt
