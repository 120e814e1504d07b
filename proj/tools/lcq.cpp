// lcq: second lower-central quotients from homological data.
//
//   lcq cokermu <space.json>       Coker mu as D/(D,G)
//   lcq nilquot <presentation.json> gamma_2/gamma_3 by class-2 collection
//   lcq fano                      the Fano surface discriminant argument
//   lcq catalog [--parallel]      every built-in example, cross-validated
//   lcq selftest                  randomised property checks
//
// Exit status: 0 all checks pass, 1 a check failed, 2 bad input.

#include "lcq/catalog.hpp"
#include "lcq/fano.hpp"
#include "lcq/io.hpp"
#include "lcq/lcq.hpp"
#include "lcq/properties.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <string>

namespace {

using lcq::io::Json;

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kInputError = 2;

Json group_json(const lcq::AbelianGroup &g) {
  Json t = Json::array();
  for (const auto &d : g.torsion())
    t.push_back(lcq::io::detail::from_integer(d));
  return {{"group", g.to_string()}, {"free_rank", g.free_rank()},
          {"torsion", t}};
}

Json report_json(const lcq::Report &r) {
  Json checks = Json::array();
  for (const auto &c : r.checks())
    checks.push_back(
        {{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  return checks;
}

int cmd_cokermu(const std::string &path, bool json) {
  const lcq::SpaceData space = lcq::io::load_space(path);
  const lcq::SecondQuotientResult r = lcq::second_lcs_quotient(space);
  if (json) {
    Json j = group_json(r.group);
    j["name"] = space.name;
    j["exactness"] = lcq::to_string(r.exactness);
    j["rational_rank"] = lcq::rational_rank(space);
    j["ker_cup_dim"] = lcq::ker_cup_dim(space);
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << space.name << ": D/(D,G) = " << r.group << " ("
              << (r.group.is_trivial() ? "trivial group, " : "")
              << lcq::to_string(r.exactness) << ")\n";
    if (r.exactness != lcq::Exactness::Exact)
      std::cout << "H_1 has torsion: Coker mu is the image of D/(D,G) under a "
                   "surjection with finite kernel\n";
  }
  return kOk;
}

int cmd_nilquot(const std::string &path, bool json) {
  const lcq::GroupPresentation pres = lcq::io::load_presentation(path);
  const lcq::AbelianGroup g = lcq::gamma2_mod_gamma3(pres);
  const lcq::AbelianGroup h1 = lcq::abelianization(pres);
  if (json) {
    Json j = group_json(g);
    j["abelianization"] = h1.to_string();
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "G/D = " << h1 << "\n";
    std::cout << "gamma2/gamma3 = " << g << "\n";
  }
  return kOk;
}

int cmd_fano(bool json) {
  const lcq::Integer disc = lcq::fano::det_f();
  lcq::Report report = lcq::fano::verify_block_decomposition();
  const auto [direct, formula] = lcq::fano::rank1_det_identity(5);
  report.add("rank-1 identity n=5", direct == formula && direct == 4,
             "(" + direct.get_str() + ", " + formula.get_str() + ")");
  report.append(lcq::fano::parity_check());

  std::string quotient;
  std::string exactness;
  try {
    const auto q = lcq::fano::fano_second_quotient();
    quotient = q.group.to_string();
    exactness = lcq::to_string(q.exactness);
    report.add("D/(D,G) cyclic of order 2",
               q.group == lcq::AbelianGroup::cyclic(2), quotient);
  } catch (const lcq::InconsistencyError &e) {
    report.add("D/(D,G) derivation", false, e.what());
  }

  if (json) {
    Json j{{"det_f", lcq::io::detail::from_integer(disc)},
           {"checks", report_json(report)},
           {"quotient", quotient},
           {"exactness", exactness},
           {"passed", report.passed()}};
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "det_f = " << disc << "\n" << report;
    if (!quotient.empty())
      std::cout << "D/(D,G) = " << quotient << " (" << exactness << ")\n";
  }
  return report.passed() ? kOk : kCheckFailed;
}

int cmd_catalog(const std::string &dir, bool parallel, bool json) {
  const auto entries = lcq::catalog::load_catalog(dir);
  const auto results = lcq::catalog::run_catalog(entries, parallel);
  bool all = true;
  Json rows = Json::array();
  for (const auto &r : results) {
    all = all && r.passed();
    if (json) {
      Json row{{"name", r.name}, {"passed", r.passed()},
               {"verdict", lcq::to_string(r.verdict)}};
      row["group"] = r.group ? Json(r.group->to_string()) : Json(nullptr);
      row["oracle"] = r.oracle ? Json(r.oracle->to_string()) : Json(nullptr);
      row["exactness"] = lcq::to_string(r.exactness);
      row["matches_expected"] =
          r.matches_expected ? Json(*r.matches_expected) : Json(nullptr);
      if (!r.error.empty())
        row["error"] = r.error;
      rows.push_back(std::move(row));
      continue;
    }
    std::cout << (r.passed() ? "[pass] " : "[FAIL] ") << r.name << ": ";
    if (!r.error.empty()) {
      std::cout << "error: " << r.error << '\n';
      continue;
    }
    std::cout << "Coker mu = " << *r.group << " ("
              << lcq::to_string(r.exactness) << ")";
    if (r.oracle)
      std::cout << ", nilpotent quotient = " << *r.oracle;
    std::cout << ", cross-check " << lcq::to_string(r.verdict);
    if (r.matches_expected)
      std::cout << ", expected " << (*r.matches_expected ? "ok" : "MISMATCH");
    std::cout << '\n';
  }
  if (json)
    std::cout << Json{{"entries", rows}, {"passed", all}}.dump(2) << '\n';
  return all ? kOk : kCheckFailed;
}

int cmd_selftest(unsigned long long seed, bool json) {
  lcq::random::Engine rng(seed);
  const lcq::Report r = lcq::properties::run_all(rng);
  if (json)
    std::cout << Json{{"checks", report_json(r)}, {"passed", r.passed()}}.dump(2)
              << '\n';
  else
    std::cout << r;
  return r.passed() ? kOk : kCheckFailed;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Second lower-central quotients D/(D,G) from homological data"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "Emit a JSON document instead of text");

  std::string space_path;
  auto *cokermu = app.add_subcommand("cokermu", "Coker mu from a SpaceData file");
  cokermu->add_option("file", space_path, "SpaceData JSON")->required();

  std::string pres_path;
  auto *nilquot =
      app.add_subcommand("nilquot", "gamma2/gamma3 of a presented group");
  nilquot->add_option("file", pres_path, "GroupPresentation JSON")->required();

  auto *fano = app.add_subcommand("fano", "Fano surface discriminant report");

  bool parallel = false;
  std::string dir = LCQ_DEFAULT_CATALOG_DIR;
  auto *catalog = app.add_subcommand("catalog", "Run the built-in catalog");
  catalog->add_flag("--parallel", parallel, "Run entries concurrently");
  catalog->add_option("--dir", dir, "Catalog directory");

  unsigned long long seed = 20240101;
  auto *selftest = app.add_subcommand("selftest", "Randomised property checks");
  selftest->add_option("--seed", seed, "RNG seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*cokermu)
      return cmd_cokermu(space_path, json);
    if (*nilquot)
      return cmd_nilquot(pres_path, json);
    if (*fano)
      return cmd_fano(json);
    if (*catalog)
      return cmd_catalog(dir, parallel, json);
    if (*selftest)
      return cmd_selftest(seed, json);
  } catch (const lcq::ParseError &e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kInputError;
  } catch (const lcq::InputError &e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const lcq::DimensionError &e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const lcq::InconsistencyError &e) {
    std::cerr << "check failed: " << e.what() << '\n';
    return kCheckFailed;
  }
  return kInputError;
}
