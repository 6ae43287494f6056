// mdslab: coefficient tables and verification reports for the quadratic affine A_n series.
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "mdslab/fq_poly.hpp"
#include "mdslab/global.hpp"
#include "mdslab/lfunctions.hpp"
#include "mdslab/reducer.hpp"
#include "mdslab/residue.hpp"
#include "mdslab/suites.hpp"

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kConfig = 2;

struct RunConfig {
  int n = 2;
  int q0 = 5;
  int bound = 4;
  int trunc = 8;
  std::string suite = "all";
  std::string out;
  bool strict = false;
};

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void validate(const RunConfig& cfg) {
  if (cfg.n < 2) throw ConfigError("--n must be at least 2");
  if (!mdslab::fq::is_valid_modulus(cfg.q0))
    throw ConfigError("--q " + std::to_string(cfg.q0) + " is not a prime congruent to 1 mod 4");
  if (cfg.bound < 0) throw ConfigError("--bound must be nonnegative");
  if (cfg.trunc < cfg.bound) throw ConfigError("--trunc must be at least --bound");
}

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(cfg.out, std::ios::binary);
  if (!f) throw ConfigError("cannot write " + cfg.out);
  f << text;
}

nlohmann::ordered_json meta(const RunConfig& cfg) {
  return {{"n", cfg.n},         {"q0", cfg.q0},       {"D", cfg.trunc},        {"bound", cfg.bound},
          {"suite", cfg.suite}, {"strict", cfg.strict}, {"version", MDSLAB_VERSION}};
}

nlohmann::ordered_json integer_json(const mdslab::Integer& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

int cmd_coeffs(const RunConfig& cfg) {
  mdslab::CoeffEngine engine(cfg.n, mdslab::pipeline_seed(cfg.n, cfg.bound));
  std::ostringstream os;
  for (int i = 0; i <= cfg.n; ++i) os << "a_" << i << ",";
  os << "c\n";
  for (int s = 0; s <= cfg.bound; ++s)
    for (const auto& t : mdslab::tuples_with_sum(cfg.n, s)) {
      for (int v : t.values()) os << v << ",";
      os << engine.coeff(t).serialize() << "\n";
    }
  emit(cfg, os.str());
  return kPass;
}

int cmd_verify(const RunConfig& cfg) {
  mdslab::SuiteConfig sc{cfg.n, cfg.q0, cfg.bound, cfg.trunc};
  auto reports = mdslab::run_suite(cfg.suite, sc);
  nlohmann::ordered_json doc;
  doc["meta"] = meta(cfg);
  doc["checks"] = nlohmann::ordered_json::array();
  bool failed = false;
  for (const auto& r : reports) {
    doc["checks"].push_back(r.to_json());
    failed = failed || r.status == mdslab::Status::Fail || (cfg.strict && r.status == mdslab::Status::Unverified);
  }
  emit(cfg, doc.dump(2) + "\n");
  return failed ? kFail : kPass;
}

int cmd_moments(const RunConfig& cfg) {
  if (cfg.n != 3) throw ConfigError("moments requires --n 3");
  const int dmax = cfg.bound;
  auto sides = mdslab::moment_sides(cfg.q0, dmax, dmax);
  auto report = mdslab::moment_identity_check(cfg.q0, dmax, dmax);
  auto cube = [](const std::vector<std::vector<std::vector<mdslab::Integer>>>& c) {
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (const auto& plane : c) {
      nlohmann::ordered_json p = nlohmann::ordered_json::array();
      for (const auto& row : plane) {
        nlohmann::ordered_json r = nlohmann::ordered_json::array();
        for (const auto& v : row) r.push_back(integer_json(v));
        p.push_back(r);
      }
      j.push_back(p);
    }
    return j;
  };
  nlohmann::ordered_json doc;
  doc["meta"] = meta(cfg);
  doc["meta"]["dmax"] = dmax;
  doc["character_sum"] = cube(sides.character_sum);
  doc["l_products"] = cube(sides.l_products);
  doc["match"] = report.status == mdslab::Status::Pass;
  doc["checks"] = nlohmann::ordered_json::array({report.to_json()});
  emit(cfg, doc.dump(2) + "\n");
  return report.status == mdslab::Status::Pass ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact coefficients and verification suites for the quadratic affine A_n multiple Dirichlet series"};
  app.set_version_flag("--version", std::string(MDSLAB_VERSION));
  app.require_subcommand(1);
  RunConfig cfg;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--n", cfg.n, "rank n (series in x_0..x_n)")->capture_default_str();
    sub->add_option("--q", cfg.q0, "field size, a prime congruent to 1 mod 4")->capture_default_str();
    sub->add_option("--bound", cfg.bound, "entry-sum bound for coefficient tuples")->capture_default_str();
    sub->add_option("--trunc", cfg.trunc, "total-degree truncation D for residue series")->capture_default_str();
    sub->add_option("--out", cfg.out, "output file (default: stdout)");
    sub->add_flag("--strict", cfg.strict, "treat unverified checks as failures");
  };
  auto* coeffs = app.add_subcommand("coeffs", "CSV table of c_t for all tuples with entry sum <= bound");
  add_common(coeffs);
  auto* verify = app.add_subcommand("verify", "run a verification suite and write a JSON report");
  add_common(verify);
  verify->add_option("--suite", cfg.suite, "axioms | fe | residue | partitions | all")
      ->check(CLI::IsMember(mdslab::suite_names()))
      ->capture_default_str();
  auto* moments = app.add_subcommand("moments", "second-moment identity for n = 3, dmax = bound");
  add_common(moments);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kPass : kConfig;
  }
  try {
    validate(cfg);
    if (*coeffs) return cmd_coeffs(cfg);
    if (*verify) return cmd_verify(cfg);
    return cmd_moments(cfg);
  } catch (const ConfigError& e) {
    std::cerr << "mdslab: " << e.what() << "\n";
    return kConfig;
  } catch (const mdslab::BudgetExceeded& e) {
    std::cerr << "mdslab: " << e.what() << "\n";
    return kConfig;
  } catch (const std::exception& e) {
    std::cerr << "mdslab: internal error: " << e.what() << "\n";
    return kFail;
  }
}
