#pragma once

#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "wreathvote/election.hpp"
#include "wreathvote/paradox.hpp"

/*
 * File formats. All rationals travel as "p/q" strings ("p" when integral);
 * committees as "1_2,2_1" strings (letter shorthand accepted on input where
 * available). Every format written here reads back to an identical
 * in-memory value.
 *
 *   profile:   [ {"ranking": ["1_1,2_1", ...], "votes": "4"}, ... ]
 *   scores:    [ "3", "2", "1", "0" ]
 *   instance:  { "m", "n", "weights": [scores...], "targets": [scores...] }
 *   family:    { "m", "n", "base": [{"element", "coeff"}...],
 *                "kernel_basis": [[...]...], "verifications": [...] }
 */

namespace wreathvote {

using Json = nlohmann::ordered_json;

inline Json parse_json(std::istream& in, const char* what) {
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("bad ") + what + " file: " + e.what());
  }
}

// ---- score vectors ----

inline Json score_vector_to_json(const ScoreVector& v) {
  Json arr = Json::array();
  for (const Rational& x : v.entries) arr.push_back(to_string(x));
  return arr;
}

inline ScoreVector score_vector_from_json(const Json& j, const GroupSpec& spec,
                                          ScoreRole role) {
  if (!j.is_array()) throw DomainError("score vector must be a JSON array of rationals");
  std::vector<Rational> entries;
  entries.reserve(j.size());
  for (const Json& x : j) {
    if (!x.is_string()) throw DomainError("score vector entries must be rational strings");
    entries.push_back(parse_rational(x.get<std::string>()));
  }
  if (static_cast<long long>(entries.size()) != spec.num_committees())
    throw DomainError("score vector has " + std::to_string(entries.size()) +
                      " entries, expected " + std::to_string(spec.num_committees()));
  return ScoreVector(std::move(entries), role);
}

inline void write_score_vector(std::ostream& out, const ScoreVector& v) {
  out << score_vector_to_json(v).dump(2) << '\n';
}

inline ScoreVector read_score_vector(std::istream& in, const GroupSpec& spec,
                                     ScoreRole role = ScoreRole::weighting) {
  return score_vector_from_json(parse_json(in, "score vector"), spec, role);
}

// Inline form used by the CLI: comma-separated rationals.
inline ScoreVector parse_score_list(const std::string& text, const GroupSpec& spec,
                                    ScoreRole role = ScoreRole::weighting) {
  std::vector<Rational> entries;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    entries.push_back(parse_rational(
        text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos)));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (static_cast<long long>(entries.size()) != spec.num_committees())
    throw DomainError("score vector has " + std::to_string(entries.size()) +
                      " entries, expected " + std::to_string(spec.num_committees()));
  return ScoreVector(std::move(entries), role);
}

// ---- profiles ----

inline Json profile_to_json(const Profile& p, const GroupSpec& spec) {
  Json arr = Json::array();
  for (const auto& [rk, v] : p.votes()) {
    Json ballot;
    Json ranking = Json::array();
    for (int pos = 0; pos < rk.size(); ++pos)
      ranking.push_back(
          committee_to_string(committee_from_lex(rk.at(pos), spec.m(), spec.n())));
    ballot["ranking"] = std::move(ranking);
    ballot["votes"] = to_string(v);
    arr.push_back(std::move(ballot));
  }
  return arr;
}

inline Profile profile_from_json(const Json& j, const GroupSpec& spec) {
  if (!j.is_array()) throw DomainError("profile must be a JSON array of ballots");
  Profile p;
  for (const Json& ballot : j) {
    if (!ballot.is_object() || !ballot.contains("ranking") || !ballot.contains("votes"))
      throw DomainError("each ballot needs \"ranking\" and \"votes\"");
    const Json& ranking = ballot["ranking"];
    if (!ranking.is_array() ||
        static_cast<long long>(ranking.size()) != spec.num_committees())
      throw DomainError("ballot ranking must list all " +
                        std::to_string(spec.num_committees()) + " committees");
    std::vector<int> order;
    order.reserve(ranking.size());
    for (const Json& cs : ranking) {
      if (!cs.is_string()) throw DomainError("ranking entries must be committee strings");
      order.push_back(static_cast<int>(
          lex_index(parse_committee(cs.get<std::string>(), spec), spec.m())));
    }
    p.add(Ranking(std::move(order)), parse_rational(ballot["votes"].get<std::string>()));
  }
  return p;
}

inline void write_profile(std::ostream& out, const Profile& p, const GroupSpec& spec) {
  out << profile_to_json(p, spec).dump(2) << '\n';
}

inline Profile read_profile(std::istream& in, const GroupSpec& spec) {
  return profile_from_json(parse_json(in, "profile"), spec);
}

// ---- paradox instances ----

inline Json instance_to_json(const ParadoxInstance& inst) {
  Json j;
  j["m"] = inst.spec.m();
  j["n"] = inst.spec.n();
  Json ws = Json::array(), rs = Json::array();
  for (const ScoreVector& w : inst.weights) ws.push_back(score_vector_to_json(w));
  for (const ScoreVector& r : inst.targets) rs.push_back(score_vector_to_json(r));
  j["weights"] = std::move(ws);
  j["targets"] = std::move(rs);
  return j;
}

inline ParadoxInstance instance_from_json(const Json& j, GroupLimits limits = {}) {
  if (!j.is_object() || !j.contains("m") || !j.contains("n") || !j.contains("weights") ||
      !j.contains("targets"))
    throw DomainError("instance needs \"m\", \"n\", \"weights\", \"targets\"");
  if (!j["m"].is_number_integer() || !j["n"].is_number_integer())
    throw DomainError("instance m and n must be integers");
  GroupSpec spec(j["m"].get<int>(), j["n"].get<int>(), limits);
  ParadoxInstance inst{spec, {}, {}};
  for (const Json& w : j["weights"])
    inst.weights.push_back(score_vector_from_json(w, spec, ScoreRole::weighting));
  for (const Json& r : j["targets"])
    inst.targets.push_back(score_vector_from_json(r, spec, ScoreRole::results));
  validate_instance(inst);
  return inst;
}

inline void write_instance(std::ostream& out, const ParadoxInstance& inst) {
  out << instance_to_json(inst).dump(2) << '\n';
}

inline ParadoxInstance read_instance(std::istream& in, GroupLimits limits = {}) {
  return instance_from_json(parse_json(in, "instance"), limits);
}

// ---- profile families ----

inline Json algebra_to_json(const GroupAlgebraElement& a) {
  Json arr = Json::array();
  for (const auto& [g, c] : a.coeffs()) {
    Json term;
    term["element"] = g.to_string();
    term["coeff"] = to_string(c);
    arr.push_back(std::move(term));
  }
  return arr;
}

inline GroupAlgebraElement algebra_from_json(const Json& j, const GroupSpec& spec) {
  if (!j.is_array()) throw DomainError("group algebra element must be a JSON array");
  GroupAlgebraElement a;
  for (const Json& term : j) {
    if (!term.is_object() || !term.contains("element") || !term.contains("coeff"))
      throw DomainError("each algebra term needs \"element\" and \"coeff\"");
    a.add(WreathElement::parse(term["element"].get<std::string>(), spec),
          parse_rational(term["coeff"].get<std::string>()));
  }
  return a;
}

struct SampleVerification {
  Rational c;
  int kernel_index;
  bool ok;
};

inline Json family_to_json(const ProfileFamily& family, const GroupSpec& spec,
                           const std::vector<SampleVerification>& verifications = {}) {
  Json j;
  j["m"] = spec.m();
  j["n"] = spec.n();
  j["base"] = algebra_to_json(family.base);
  Json kb = Json::array();
  for (const GroupAlgebraElement& b : family.kernel_basis) kb.push_back(algebra_to_json(b));
  j["kernel_basis"] = std::move(kb);
  j["base_profile"] = profile_to_json(family.base_profile, spec);
  Json kp = Json::array();
  for (const GroupAlgebraElement& b : family.kernel_basis)
    kp.push_back(profile_to_json(group_algebra_to_profile(b, spec), spec));
  j["kernel_profiles"] = std::move(kp);
  if (!verifications.empty()) {
    Json vs = Json::array();
    for (const SampleVerification& v : verifications) {
      Json e;
      e["c"] = to_string(v.c);
      e["kernel"] = v.kernel_index;
      e["ok"] = v.ok;
      vs.push_back(std::move(e));
    }
    j["verifications"] = std::move(vs);
  }
  return j;
}

inline ProfileFamily family_from_json(const Json& j, const GroupSpec& spec) {
  if (!j.is_object() || !j.contains("base") || !j.contains("kernel_basis"))
    throw DomainError("family needs \"base\" and \"kernel_basis\"");
  if (j.contains("m") && (!j["m"].is_number_integer() || j["m"].get<int>() != spec.m()))
    throw DomainError("family file m does not match the group spec");
  if (j.contains("n") && (!j["n"].is_number_integer() || j["n"].get<int>() != spec.n()))
    throw DomainError("family file n does not match the group spec");
  ProfileFamily family;
  family.base = algebra_from_json(j["base"], spec);
  for (const Json& b : j["kernel_basis"])
    family.kernel_basis.push_back(algebra_from_json(b, spec));
  family.base_profile = group_algebra_to_profile(family.base, spec);
  return family;
}

inline void write_family(std::ostream& out, const ProfileFamily& family, const GroupSpec& spec,
                         const std::vector<SampleVerification>& verifications = {}) {
  out << family_to_json(family, spec, verifications).dump(2) << '\n';
}

inline ProfileFamily read_family(std::istream& in, const GroupSpec& spec) {
  return family_from_json(parse_json(in, "family"), spec);
}

}  // namespace wreathvote
