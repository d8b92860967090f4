// Command line front end for the committee-voting algebra library.
//
// Exit codes: 0 success, 1 bad input (domain errors), 2 desk-scale limit
// violations, 3 internal invariant failures.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "wreathvote/characters.hpp"
#include "wreathvote/decomposition.hpp"
#include "wreathvote/election.hpp"
#include "wreathvote/io.hpp"
#include "wreathvote/paradox.hpp"

using namespace wreathvote;

namespace {

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open file: " + path);
  return in;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw DomainError("cannot write file: " + path);
  return out;
}

std::string render_class_key(const ClassKey& key) {
  std::string s;
  for (std::size_t i = 0; i < key.size(); ++i) {
    if (i) s += ';';
    s += std::to_string(key[i].first);
    s += ":(";
    for (std::size_t t = 0; t < key[i].second.size(); ++t) {
      if (t) s += ' ';
      s += std::to_string(key[i].second[t]);
    }
    s += ')';
  }
  return s;
}

ScoreVector load_score_vector(const std::string& inline_list, const std::string& file,
                              const GroupSpec& spec, ScoreRole role) {
  if (!inline_list.empty() && !file.empty())
    throw DomainError("give the vector inline or as a file, not both");
  if (!inline_list.empty()) return parse_score_list(inline_list, spec, role);
  if (!file.empty()) {
    std::ifstream in = open_input(file);
    return read_score_vector(in, spec, role);
  }
  throw DomainError("a score vector is required (inline or file)");
}

std::vector<Rational> parse_samples(const std::string& text) {
  std::vector<Rational> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    out.push_back(parse_rational(
        text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos)));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

struct Options {
  int m = 2;
  int n = 2;
  bool json = false;
  std::string profile_file;
  std::string weights_inline;
  std::string weights_file;
  std::string element;
  int k = 0;
  std::string vector_inline;
  std::string vector_file;
  std::string basis_out;
  std::string instance_file;
  std::string family_file;
  std::string out_file;
  std::string samples = "0,1,-1,7/3";
  long long budget = 100'000'000;
};

int run_group_info(const Options& opt) {
  const GroupSpec spec(opt.m, opt.n);
  std::map<ClassKey, long long> classes;
  for_each_element(spec, [&](const WreathElement& g) { ++classes[class_key(g)]; });
  std::optional<BigInt> copies;
  try {
    copies = profile_space_regular_copies(spec);
  } catch (const DomainError&) {
    // degenerate m = 1 shape; reported as absent
  }
  if (opt.json) {
    Json j;
    j["m"] = spec.m();
    j["n"] = spec.n();
    j["order"] = spec.order();
    j["committees"] = spec.num_committees();
    j["conjugacy_classes"] = classes.size();
    if (copies) j["profile_regular_copies"] = to_string(*copies);
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "group: S_" << spec.m() << " wr S_" << spec.n() << '\n'
              << "order: " << spec.order() << '\n'
              << "committees: " << spec.num_committees() << '\n'
              << "conjugacy classes: " << classes.size() << '\n';
    if (copies) std::cout << "profile regular-module copies: " << *copies << '\n';
  }
  return 0;
}

int run_tally(const Options& opt) {
  const GroupSpec spec(opt.m, opt.n);
  if (opt.profile_file.empty()) throw DomainError("--profile is required");
  std::ifstream in = open_input(opt.profile_file);
  const Profile p = read_profile(in, spec);
  const ScoreVector w =
      load_score_vector(opt.weights_inline, opt.weights_file, spec, ScoreRole::weighting);
  const ScoreVector r = tally(p, w);
  const std::vector<long long> best = winners(r);

  if (opt.json) {
    Json j;
    Json rows = Json::array();
    for (long long i = 0; i < r.size(); ++i) {
      const Committee c = committee_from_lex(i, spec.m(), spec.n());
      Json row;
      row["committee"] = committee_to_string(c);
      row["label"] = committee_label(c, spec.m());
      row["score"] = to_string(r.entries[static_cast<std::size_t>(i)]);
      rows.push_back(std::move(row));
    }
    j["results"] = std::move(rows);
    Json wins = Json::array();
    for (long long i : best)
      wins.push_back(committee_label(committee_from_lex(i, spec.m(), spec.n()), spec.m()));
    j["winners"] = std::move(wins);
    std::cout << j.dump(2) << '\n';
  } else {
    for (long long i = 0; i < r.size(); ++i)
      std::cout << committee_label(committee_from_lex(i, spec.m(), spec.n()), spec.m()) << ' '
                << r.entries[static_cast<std::size_t>(i)] << '\n';
    std::cout << "winners:";
    for (long long i : best)
      std::cout << ' ' << committee_label(committee_from_lex(i, spec.m(), spec.n()), spec.m());
    std::cout << '\n';
  }
  return 0;
}

int run_fixed(const Options& opt) {
  const GroupSpec spec(opt.m, opt.n);
  if (opt.element.empty()) throw DomainError("--element is required");
  const WreathElement g = WreathElement::parse(opt.element, spec);
  const std::vector<Committee> fixed = fixed_committees(g, spec);
  if (opt.json) {
    Json j = Json::array();
    for (const Committee& c : fixed) j.push_back(committee_to_string(c));
    std::cout << Json{{"fixed", j}}.dump(2) << '\n';
  } else {
    for (const Committee& c : fixed) std::cout << committee_to_string(c) << '\n';
  }
  return 0;
}

int run_character(const Options& opt) {
  const GroupSpec spec(opt.m, opt.n);
  std::vector<ClassFunction> chis;
  for (int k = 0; k <= spec.n(); ++k) chis.push_back(isotypic_class_function(spec, k));

  if (!opt.element.empty()) {
    const WreathElement g = WreathElement::parse(opt.element, spec);
    if (opt.json) {
      Json j;
      j["element"] = g.to_string();
      j["class"] = render_class_key(class_key(g));
      for (int k = 0; k <= spec.n(); ++k)
        j["chi_" + std::to_string(k)] = to_string(chis[static_cast<std::size_t>(k)](g));
      j["chi_R"] = to_string(Rational(results_character(g)));
      std::cout << j.dump(2) << '\n';
    } else {
      std::cout << "class " << render_class_key(class_key(g));
      for (int k = 0; k <= spec.n(); ++k)
        std::cout << " chi_" << k << '=' << chis[static_cast<std::size_t>(k)](g);
      std::cout << " chi_R=" << results_character(g) << '\n';
    }
    return 0;
  }

  // one row per conjugacy class, keyed and sized
  std::map<ClassKey, std::pair<long long, WreathElement>> classes;
  for_each_element(spec, [&](const WreathElement& g) {
    auto [it, fresh] = classes.try_emplace(class_key(g), 1, g);
    if (!fresh) ++it->second.first;
  });
  if (opt.json) {
    Json rows = Json::array();
    for (const auto& [key, entry] : classes) {
      Json row;
      row["class"] = render_class_key(key);
      row["size"] = entry.first;
      for (int k = 0; k <= spec.n(); ++k)
        row["chi_" + std::to_string(k)] =
            to_string(chis[static_cast<std::size_t>(k)](entry.second));
      row["chi_R"] = to_string(Rational(results_character(entry.second)));
      rows.push_back(std::move(row));
    }
    std::cout << rows.dump(2) << '\n';
  } else {
    for (const auto& [key, entry] : classes) {
      std::cout << "class " << render_class_key(key) << " size=" << entry.first;
      for (int k = 0; k <= spec.n(); ++k)
        std::cout << " chi_" << k << '=' << chis[static_cast<std::size_t>(k)](entry.second);
      std::cout << " chi_R=" << results_character(entry.second) << '\n';
    }
  }
  return 0;
}

int run_decompose(const Options& opt) {
  const GroupSpec spec(opt.m, opt.n);
  const DecompositionReport report = decompose_results_space(spec);

  if (!opt.basis_out.empty()) {
    Json bases = Json::array();
    for (int k = 0; k <= spec.n(); ++k) {
      const ProjectionOperator proj = isotypic_projection(spec, k);
      std::vector<int> pivots;
      rref(proj.matrix, &pivots);
      Json basis = Json::array();
      for (int col : pivots) {
        Json v = Json::array();
        for (int row = 0; row < proj.matrix.rows(); ++row)
          v.push_back(to_string(proj.matrix.at(row, col)));
        basis.push_back(std::move(v));
      }
      Json entry;
      entry["k"] = k;
      entry["basis"] = std::move(basis);
      bases.push_back(std::move(entry));
    }
    std::ofstream out = open_output(opt.basis_out);
    out << bases.dump(2) << '\n';
  }

  if (opt.json) {
    Json rows = Json::array();
    for (const ComponentRow& row : report.rows) {
      Json r;
      r["k"] = row.k;
      r["multiplicity"] = row.multiplicity;
      r["irreducible_dim"] = row.irreducible_dim;
      r["isotypic_dim"] = row.isotypic_dim;
      r["binomial_count"] = row.binomial_count;
      r["multiplicity_differs_from_binomial"] = row.multiplicity_differs_from_binomial;
      rows.push_back(std::move(r));
    }
    Json j;
    j["components"] = std::move(rows);
    j["total_dim"] = report.total_dim;
    j["residual_dim"] = report.residual_dim;
    std::cout << j.dump(2) << '\n';
  } else {
    bool any_differs = false;
    for (const ComponentRow& row : report.rows) {
      std::cout << "k=" << row.k << " multiplicity=" << row.multiplicity
                << " irreducible_dim=" << row.irreducible_dim
                << " isotypic_dim=" << row.isotypic_dim
                << " binomial=" << row.binomial_count;
      if (row.multiplicity_differs_from_binomial) {
        std::cout << " [differs]";
        any_differs = true;
      }
      std::cout << '\n';
    }
    std::cout << "residual=" << report.residual_dim << '\n';
    if (any_differs)
      std::cout << "note: computed multiplicities differ from the binomial counts;\n"
                   "      the computed values are authoritative\n";
  }
  return 0;
}

int run_project(const Options& opt) {
  const GroupSpec spec(opt.m, opt.n);
  const ScoreVector v =
      load_score_vector(opt.vector_inline, opt.vector_file, spec, ScoreRole::weighting);
  const ScoreVector out = project_vector(v, opt.k, spec);
  if (opt.json) {
    std::cout << score_vector_to_json(out).dump(2) << '\n';
  } else {
    for (long long i = 0; i < out.size(); ++i)
      std::cout << committee_label(committee_from_lex(i, spec.m(), spec.n()), spec.m()) << ' '
                << out.entries[static_cast<std::size_t>(i)] << '\n';
  }
  return 0;
}

void print_hypothesis(const HypothesisReport& hyp, bool json, std::ostream& os) {
  if (json) {
    Json rows = Json::array();
    for (const HypothesisRow& row : hyp.rows)
      rows.push_back(Json{{"k", row.k}, {"rank", row.rank}, {"ok", row.ok}});
    os << Json{{"j", hyp.j}, {"rows", rows}, {"holds", hyp.holds}}.dump(2) << '\n';
  } else {
    for (const HypothesisRow& row : hyp.rows)
      os << "k=" << row.k << " rank=" << row.rank << (row.ok ? " ok" : " FAIL") << '\n';
    os << (hyp.holds ? "hypothesis holds" : "hypothesis fails") << " (j=" << hyp.j << ")\n";
  }
}

int run_paradox(const Options& opt) {
  if (opt.instance_file.empty()) throw DomainError("--instance is required");
  if (opt.out_file.empty()) throw DomainError("--out is required");
  std::ifstream in = open_input(opt.instance_file);
  const ParadoxInstance inst = read_instance(in);

  const HypothesisReport hyp = check_hypothesis(inst.spec, inst.weights);
  print_hypothesis(hyp, opt.json, std::cout);

  const ProfileFamily family = solve_paradox(inst, opt.budget);

  const std::vector<Rational> samples = parse_samples(opt.samples);
  std::vector<SampleVerification> verifications;
  bool all_ok = true;
  for (std::size_t bi = 0; bi < family.kernel_basis.size(); ++bi)
    for (const Rational& c : samples) {
      ProfileFamily single;
      single.base = family.base;
      single.kernel_basis = {family.kernel_basis[bi]};
      single.base_profile = family.base_profile;
      const bool ok = verify_family(single, inst, {c}).ok;
      verifications.push_back(SampleVerification{c, static_cast<int>(bi), ok});
      all_ok = all_ok && ok;
    }
  if (!all_ok) throw InternalError("a solved family failed verification");

  std::ofstream out = open_output(opt.out_file);
  write_family(out, family, inst.spec, verifications);
  if (!opt.json)
    std::cout << "kernel dimension " << family.kernel_basis.size() << "; "
              << verifications.size() << " sampled verifications passed; family written to "
              << opt.out_file << '\n';
  return 0;
}

int run_verify(const Options& opt) {
  if (opt.instance_file.empty()) throw DomainError("--instance is required");
  if (opt.family_file.empty()) throw DomainError("--family is required");
  std::ifstream in = open_input(opt.instance_file);
  const ParadoxInstance inst = read_instance(in);
  std::ifstream fin = open_input(opt.family_file);
  const ProfileFamily family = read_family(fin, inst.spec);

  const VerifyResult result = verify_family(family, inst, parse_samples(opt.samples));
  if (opt.json) {
    Json j;
    j["ok"] = result.ok;
    if (result.failure) {
      Json f;
      f["c"] = to_string(result.failure->c);
      f["kernel"] = result.failure->kernel_index;
      f["system"] = result.failure->weight_index + 1;
      f["committee"] = committee_to_string(
          committee_from_lex(result.failure->committee, inst.spec.m(), inst.spec.n()));
      f["expected"] = to_string(result.failure->expected);
      f["actual"] = to_string(result.failure->actual);
      j["failure"] = std::move(f);
    }
    std::cout << j.dump(2) << '\n';
  } else if (result.ok) {
    std::cout << "all tallies verified\n";
  } else {
    std::cout << "verification FAILED: system " << result.failure->weight_index + 1
              << ", committee "
              << committee_to_string(committee_from_lex(result.failure->committee,
                                                        inst.spec.m(), inst.spec.n()))
              << ", c=" << result.failure->c << ", kernel " << result.failure->kernel_index
              << ": expected " << result.failure->expected << ", got "
              << result.failure->actual << '\n';
  }
  return result.ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact positional committee voting under wreath product symmetry"};
  app.require_subcommand(1);
  Options opt;

  auto add_spec = [&](CLI::App* cmd) {
    cmd->add_option("--m", opt.m, "candidates per department")->required();
    cmd->add_option("--n", opt.n, "number of departments")->required();
  };

  CLI::App* info = app.add_subcommand("group-info", "group order, committees, classes");
  add_spec(info);
  info->add_flag("--json", opt.json);

  CLI::App* tally_cmd = app.add_subcommand("tally", "score a profile under a weighting vector");
  add_spec(tally_cmd);
  tally_cmd->add_option("--profile", opt.profile_file, "profile file (JSON)");
  tally_cmd->add_option("--weights", opt.weights_inline, "comma-separated rationals");
  tally_cmd->add_option("--weights-file", opt.weights_file, "score vector file");
  tally_cmd->add_flag("--json", opt.json);

  CLI::App* fixed_cmd = app.add_subcommand("fixed", "committees fixed by a group element");
  add_spec(fixed_cmd);
  fixed_cmd->add_option("--element", opt.element, "element text, e.g. \"[(1 2),(); (1 2)]\"");
  fixed_cmd->add_flag("--json", opt.json);

  CLI::App* char_cmd = app.add_subcommand("character", "character table by conjugacy class");
  add_spec(char_cmd);
  char_cmd->add_option("--element", opt.element, "evaluate at one element only");
  char_cmd->add_flag("--json", opt.json);

  CLI::App* dec_cmd = app.add_subcommand("decompose", "isotypic decomposition of the results space");
  add_spec(dec_cmd);
  dec_cmd->add_option("--basis-out", opt.basis_out, "write exact component bases to a file");
  dec_cmd->add_flag("--json", opt.json);

  CLI::App* proj_cmd = app.add_subcommand("project", "project a score vector onto component k");
  add_spec(proj_cmd);
  proj_cmd->add_option("--k", opt.k, "isotypic index")->required();
  proj_cmd->add_option("--vector", opt.vector_inline, "comma-separated rationals");
  proj_cmd->add_option("--vector-file", opt.vector_file, "score vector file");
  proj_cmd->add_flag("--json", opt.json);

  CLI::App* par_cmd = app.add_subcommand("paradox", "solve a multi-system paradox instance");
  par_cmd->add_option("--instance", opt.instance_file, "instance file (JSON)");
  par_cmd->add_option("--out", opt.out_file, "family file to write");
  par_cmd->add_option("--samples", opt.samples, "comma-separated scalars for verification");
  par_cmd->add_option("--budget", opt.budget, "solver operation budget");
  par_cmd->add_flag("--json", opt.json);

  CLI::App* ver_cmd = app.add_subcommand("verify", "re-verify a family against its instance");
  ver_cmd->add_option("--instance", opt.instance_file, "instance file (JSON)");
  ver_cmd->add_option("--family", opt.family_file, "family file (JSON)");
  ver_cmd->add_option("--samples", opt.samples, "comma-separated scalars");
  ver_cmd->add_flag("--json", opt.json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    if (info->parsed()) return run_group_info(opt);
    if (tally_cmd->parsed()) return run_tally(opt);
    if (fixed_cmd->parsed()) return run_fixed(opt);
    if (char_cmd->parsed()) return run_character(opt);
    if (dec_cmd->parsed()) return run_decompose(opt);
    if (proj_cmd->parsed()) return run_project(opt);
    if (par_cmd->parsed()) return run_paradox(opt);
    if (ver_cmd->parsed()) return run_verify(opt);
  } catch (const LimitError& e) {
    std::cerr << "limit exceeded: " << e.what() << '\n';
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const InternalError& e) {
    std::cerr << "internal invariant failure: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 3;
  }
  return 0;
}
