// Command-line front end: runs the verification suite and exposes the
// individual constructions (polarization vectors, field strengths, the
// longitudinal tensor, limit tables, spin densities).
//
// Exit codes: 0 success, 1 verification failure, 2 usage error, 3 domain
// error (unphysical arguments), 4 I/O error.

#include <cstdio>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "notoph/dynamics.hpp"
#include "notoph/limits.hpp"
#include "notoph/polarization.hpp"
#include "notoph/strengths.hpp"
#include "notoph/suite.hpp"

namespace {

using notoph::cplx;
using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;
constexpr int kExitIo = 4;

std::string fmt_cplx(cplx v) {
  std::ostringstream os;
  os << std::setprecision(15) << v.real() << (v.imag() < 0 ? "-" : "+") << std::abs(v.imag())
     << "i";
  return os.str();
}

json cplx_json(cplx v) { return json::array({v.real(), v.imag()}); }

json vec4_json(const notoph::FourVector& v) {
  json a = json::array();
  for (int mu = 0; mu < 4; ++mu) a.push_back(cplx_json(v[mu]));
  return a;
}

json vec3_json(const std::array<cplx, 3>& v) {
  json a = json::array();
  for (const cplx& c : v) a.push_back(cplx_json(c));
  return a;
}

json tensor_json(const notoph::FieldStrength& F) {
  json rows = json::array();
  for (int mu = 0; mu < 4; ++mu) {
    json row = json::array();
    for (int nu = 0; nu < 4; ++nu) row.push_back(cplx_json(F(mu, nu)));
    rows.push_back(std::move(row));
  }
  return rows;
}

void print_vec4(const std::string& label, const notoph::FourVector& v) {
  std::cout << label << ":";
  for (int mu = 0; mu < 4; ++mu) std::cout << "  " << fmt_cplx(v[mu]);
  std::cout << "\n";
}

void print_vec3(const std::string& label, const std::array<cplx, 3>& v) {
  std::cout << label << ":";
  for (const cplx& c : v) std::cout << "  " << fmt_cplx(c);
  std::cout << "\n";
}

void print_tensor(const std::string& label, const notoph::FieldStrength& F) {
  std::cout << label << ":\n";
  for (int mu = 0; mu < 4; ++mu) {
    std::cout << "  ";
    for (int nu = 0; nu < 4; ++nu) std::cout << std::setw(28) << fmt_cplx(F(mu, nu));
    std::cout << "\n";
  }
}

// Emitting happens in one shot so a failed run never leaves half a document.
int emit(const std::string& text) {
  std::fputs(text.c_str(), stdout);
  if (std::fflush(stdout) != 0 || std::ferror(stdout)) {
    std::fputs("error: failed writing to stdout\n", stderr);
    return kExitIo;
  }
  return kExitOk;
}

struct CommonArgs {
  std::vector<double> p{0.0, 0.0, 1.0};
  double m = 1.0;
  std::string sigma = "0";
  std::string norm = "unit";
  bool as_json = false;
};

void add_momentum_flags(CLI::App* cmd, CommonArgs& args, bool with_mass = true) {
  cmd->add_option("--p", args.p, "spatial momentum p1,p2,p3")->delimiter(',')->expected(3);
  if (with_mass) cmd->add_option("--m", args.m, "mass (must be positive)");
  cmd->add_option("--sigma", args.sigma, "polarization: +1, 0, -1, 0t");
  cmd->add_option("--norm", args.norm, "normalization scheme: unit or mass");
  cmd->add_flag("--json", args.as_json, "emit a JSON document instead of text");
}

notoph::Momentum momentum_of(const CommonArgs& a) {
  return notoph::Momentum{{a.p[0], a.p[1], a.p[2]}, a.m};
}

notoph::PolarizationState sigma_of(const CommonArgs& a) {
  const auto s = notoph::parse_polarization(a.sigma);
  if (!s) throw CLI::ValidationError("--sigma", "expected one of +1, 0, -1, 0t");
  return *s;
}

notoph::NormScheme norm_of(const CommonArgs& a) {
  const auto n = notoph::parse_norm(a.norm);
  if (!n) throw CLI::ValidationError("--norm", "expected unit or mass");
  return *n;
}

json limit_json(const notoph::LimitClassification& c) {
  json j;
  j["verdict"] = notoph::to_string(c.verdict);
  j["order"] = c.order;
  j["value"] = cplx_json(c.value);
  return j;
}

std::string limit_text(const notoph::LimitClassification& c) {
  std::ostringstream os;
  os << std::left << std::setw(17) << notoph::to_string(c.verdict) << " order "
     << std::setprecision(3) << std::setw(9) << c.order;
  if (c.verdict == notoph::LimitVerdict::finite) os << " value " << fmt_cplx(c.value);
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"verification toolkit for massive spin-1 polarization vectors, field\n"
               "strengths and the longitudinal antisymmetric-tensor mode"};
  app.require_subcommand(1);

  // ---- verify ----
  auto* verify = app.add_subcommand("verify", "run the full verification suite");
  notoph::SuiteConfig cfg;
  bool verify_json = false;
  std::vector<double> phase_args;
  std::string verify_norm = "mass";
  verify->add_option("--seed", cfg.seed, "seed for the random momentum streams");
  verify->add_option("--tol", cfg.tol, "tolerance for residual checks");
  verify->add_option("--samples", cfg.samples, "random momenta per check");
  verify->add_option("--norm", verify_norm, "norm scheme used by informational reports");
  verify->add_option("--phases", phase_args, "conjugation phases for sigma=+1,0,-1")
      ->delimiter(',')
      ->expected(3);
  verify->add_flag("--json", verify_json, "emit the report as a single JSON document");

  // ---- constructions ----
  CommonArgs pol_args, str_args, lim_args, spin_args, notoph_args;
  auto* pol = app.add_subcommand("polarization", "boosted polarization vector");
  add_momentum_flags(pol, pol_args);
  auto* str = app.add_subcommand("strengths", "E and B amplitudes for both energy signs");
  add_momentum_flags(str, str_args);
  auto* ntp = app.add_subcommand("notoph", "longitudinal antisymmetric-tensor construction");
  add_momentum_flags(ntp, notoph_args);
  auto* lim = app.add_subcommand("limit", "massless-limit classification table");
  add_momentum_flags(lim, lim_args, /*with_mass=*/false);
  auto* spn = app.add_subcommand("spin", "densities and spin projection of one mode");
  add_momentum_flags(spn, spin_args);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*verify) {
      if (phase_args.size() == 3) cfg.phases = {phase_args[0], phase_args[1], phase_args[2]};
      const auto n = notoph::parse_norm(verify_norm);
      if (!n) {
        std::fputs("error: --norm expects unit or mass\n", stderr);
        return kExitUsage;
      }
      cfg.norm = *n;
      const notoph::SuiteReport rep = notoph::run_verify_suite(cfg);
      const int rc = emit(verify_json ? notoph::report_to_json(rep) : notoph::report_to_text(rep));
      if (rc != kExitOk) return rc;
      return rep.all_passed() ? kExitOk : kExitCheckFailure;
    }

    if (*pol) {
      const auto p = momentum_of(pol_args);
      const auto u = notoph::polarization_vector(p, sigma_of(pol_args), norm_of(pol_args));
      if (pol_args.as_json) {
        json doc;
        doc["v"] = 1;
        doc["u"] = vec4_json(u);
        return emit(doc.dump(2) + "\n");
      }
      print_vec4("u", u);
      return kExitOk;
    }

    if (*str) {
      const auto p = momentum_of(str_args);
      const auto sig = sigma_of(str_args);
      const auto norm = norm_of(str_args);
      const auto u = notoph::polarization_vector(p, sig, norm);
      const auto plus = notoph::strengths_from_potential(p, u, notoph::EnergySign::positive);
      const auto minus = notoph::strengths_from_potential(p, u, notoph::EnergySign::negative);
      if (str_args.as_json) {
        json doc;
        doc["v"] = 1;
        doc["E_plus"] = vec3_json(plus.E);
        doc["B_plus"] = vec3_json(plus.B);
        doc["E_minus"] = vec3_json(minus.E);
        doc["B_minus"] = vec3_json(minus.B);
        return emit(doc.dump(2) + "\n");
      }
      print_vec3("E(+)", plus.E);
      print_vec3("B(+)", plus.B);
      print_vec3("E(-)", minus.E);
      print_vec3("B(-)", minus.B);
      return kExitOk;
    }

    if (*ntp) {
      const auto p = momentum_of(notoph_args);
      const auto norm = norm_of(notoph_args);
      const auto F = notoph::notoph_tensor(p, norm);
      const cplx scale = notoph::notoph_scale(p.m, norm);
      if (notoph_args.as_json) {
        json doc;
        doc["v"] = 1;
        doc["tensor"] = tensor_json(F);
        doc["calibration"] = cplx_json(scale);
        return emit(doc.dump(2) + "\n");
      }
      print_tensor("F", F);
      std::cout << "calibration constant: " << fmt_cplx(scale) << "\n";
      return kExitOk;
    }

    if (*lim) {
      const auto sig = sigma_of(lim_args);
      const auto norm = norm_of(lim_args);
      const std::array<double, 3> p{lim_args.p[0], lim_args.p[1], lim_args.p[2]};
      const auto rep = notoph::massless_report(p, sig, norm);
      if (lim_args.as_json) {
        json doc;
        doc["v"] = 1;
        json u = json::array(), E = json::array(), B = json::array();
        for (const auto& c : rep.u) u.push_back(limit_json(c));
        for (const auto& c : rep.E) E.push_back(limit_json(c));
        for (const auto& c : rep.B) B.push_back(limit_json(c));
        doc["u"] = std::move(u);
        doc["E"] = std::move(E);
        doc["B"] = std::move(B);
        return emit(doc.dump(2) + "\n");
      }
      for (int mu = 0; mu < 4; ++mu)
        std::cout << "u[" << mu << "]  " << limit_text(rep.u[mu]) << "\n";
      for (int i = 0; i < 3; ++i) std::cout << "E[" << i << "]  " << limit_text(rep.E[i]) << "\n";
      for (int i = 0; i < 3; ++i) std::cout << "B[" << i << "]  " << limit_text(rep.B[i]) << "\n";
      return kExitOk;
    }

    if (*spn) {
      const auto p = momentum_of(spin_args);
      const auto mode = notoph::plane_wave_mode(p, sigma_of(spin_args), norm_of(spin_args));
      const auto J = notoph::angular_momentum_density(mode);
      const auto spin = notoph::spin_vector(J);
      const auto W = notoph::pauli_lubanski(J, p);
      const cplx energy = notoph::stress_density(mode).at(0, 0);
      const cplx proj = notoph::helicity_projection(W, p);
      if (spin_args.as_json) {
        json doc;
        doc["v"] = 1;
        doc["energy_density"] = cplx_json(energy);
        doc["spin"] = vec3_json(spin);
        doc["pauli_lubanski"] = vec4_json(W);
        doc["projection"] = cplx_json(proj);
        return emit(doc.dump(2) + "\n");
      }
      std::cout << "energy density: " << fmt_cplx(energy) << "\n";
      print_vec3("spin", spin);
      print_vec4("W", W);
      std::cout << "W.n projection: " << fmt_cplx(proj) << "\n";
      return kExitOk;
    }
  } catch (const CLI::Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitDomain;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitDomain;
  }
  return kExitUsage;
}
