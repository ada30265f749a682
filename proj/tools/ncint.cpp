/** \file ncint.cpp
 *  \brief Command-line front end: experiment configuration, model
 *         construction, CSV report emission.
 *
 *  Subcommands: tauberian, connes-check, weyl, residue, bs-sweep, norms,
 *  props.  Each experiment is described by a JSON config (--config) with
 *  flag overrides (--out, --cutoff, --p, --tol, --seed); flags win.
 *  Exit codes: 0 success, 2 usage or config error, 3 numerical guard
 *  violation (the guard is named on stderr).
 */

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ncint/core.hpp"
#include "ncint/eig.hpp"
#include "ncint/io.hpp"
#include "ncint/limits.hpp"
#include "ncint/matops.hpp"
#include "ncint/models.hpp"
#include "ncint/semiclassical.hpp"
#include "ncint/spectra.hpp"
#include "ncint/weyl.hpp"

namespace {

using nlohmann::json;
using namespace ncint;

struct Config {
  std::string command;
  std::string out;
  json model;
  double p = 1.0;
  double tol = 1e-2;
  double window_fraction = 0.5;
  double resolved_fraction = -1.0;  // -1: choose by model kind
  std::size_t cutoff = 0;           // 0: keep the model's own cutoff
  unsigned long seed = 12345;
  std::vector<double> h_list;
  std::size_t trials = 200;
  std::size_t grid_points = 200;
};

void check_config_keys(const json& j) {
  static const std::vector<std::string> allowed = {
      "command", "out",  "model",  "p",      "tol",        "window",
      "resolved_fraction", "cutoff", "seed", "h_list", "trials", "grid_points"};
  for (const auto& [key, value] : j.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
      throw std::invalid_argument("config: unknown key '" + key + "'");
  }
}

Config load_config(const std::string& path) {
  Config c;
  if (path.empty()) return c;
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("config: cannot read " + path);
  json j = json::parse(in);
  check_config_keys(j);
  c.command = j.value("command", "");
  c.out = j.value("out", "");
  if (j.contains("model")) c.model = j.at("model");
  c.p = j.value("p", c.p);
  c.tol = j.value("tol", c.tol);
  c.window_fraction = j.value("window", c.window_fraction);
  c.resolved_fraction = j.value("resolved_fraction", c.resolved_fraction);
  c.cutoff = j.value("cutoff", c.cutoff);
  c.seed = j.value("seed", c.seed);
  if (j.contains("h_list")) c.h_list = j.at("h_list").get<std::vector<double>>();
  c.trials = j.value("trials", c.trials);
  c.grid_points = j.value("grid_points", c.grid_points);
  if (!(c.tol > 0.0)) throw std::invalid_argument("config: tol must be positive");
  if (!(c.window_fraction > 0.0) || c.window_fraction > 1.0)
    throw std::invalid_argument("config: window must lie in (0,1]");
  return c;
}

/// A constructed model: its display id, its spectrum (when the command
/// needs one) and the underlying torus description (when there is one).
struct BuiltModel {
  std::string id;
  spectra::SpectralSequence seq;
  std::optional<models::TorusSymbolModel> torus;
  double default_resolved = 1.0;
};

void check_model_keys(const json& j, const std::vector<std::string>& allowed) {
  for (const auto& [key, value] : j.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
      throw std::invalid_argument("model: unknown key '" + key + "'");
  }
}

models::TorusSymbolModel torus_from_config(const json& jm, std::size_t cutoff_override) {
  models::TorusSymbolModel tm;
  if (jm.contains("file")) {
    check_model_keys(jm, {"kind", "file"});
    tm = io::read_model_json(jm.at("file").get<std::string>());
  } else {
    json copy = jm;
    copy.erase("kind");
    tm = io::model_from_json(copy);
  }
  if (cutoff_override > 0) tm.cutoff = cutoff_override;
  return tm;
}

spectra::SpectralSequence torus_spectrum(const models::TorusSymbolModel& tm) {
  const bool tridiagonal_ok = tm.n == 1 && tm.symmetrized && tm.support_radius() <= 1;
  if (tridiagonal_ok) {
    bool real_coeffs = tm.real_symbol();
    for (const models::FourierCoeff& c : tm.fhat)
      if (c.value.imag() != 0.0) real_coeffs = false;
    if (real_coeffs) return models::torus_tridiagonal_spectrum(tm);
  }
  if (!tm.real_symbol() || !tm.symmetrized)
    throw std::invalid_argument(
        "model: spectra are computed for real symmetrized torus models only");
  return matops::hermitian_eig(HermitianOperator(models::torus_matrix(tm)));
}

BuiltModel build_model(const Config& c) {
  if (!c.model.is_object()) throw std::invalid_argument("config: missing model object");
  const std::string kind = c.model.value("kind", "");
  BuiltModel m;

  if (kind == "harmonic" || kind == "power" || kind == "oscillating") {
    check_model_keys(c.model, {"kind", "length", "alpha"});
    const std::size_t length = c.model.value("length", std::size_t{100000});
    if (kind == "oscillating") {
      m.seq = spectra::sort_sequence(models::oscillating_values(length));
    } else {
      models::DiagonalModel dm;
      dm.rule = (kind == "harmonic") ? models::DiagonalRule::harmonic : models::DiagonalRule::power;
      dm.length = length;
      dm.alpha = c.model.value("alpha", 1.0);
      m.seq = spectra::sort_sequence(models::diagonal_values(dm));
    }
    m.id = kind + "-" + std::to_string(length);
    return m;
  }

  if (kind == "circle") {
    check_model_keys(c.model, {"kind", "length", "m"});
    const std::size_t length = c.model.value("length", std::size_t{100000});
    const double order = c.model.value("m", 1.0);
    m.seq = spectra::sort_sequence(models::closed_form_circle_spectrum(length, order));
    models::TorusSymbolModel tm;
    tm.n = 1;
    tm.m = order;
    tm.cutoff = std::max<std::size_t>(c.cutoff, 4);
    tm.symmetrized = true;
    tm.fhat.push_back({{0, 0}, cplx(1.0, 0.0)});
    m.torus = tm;
    m.id = "circle-" + std::to_string(length);
    return m;
  }

  if (kind == "torus") {
    check_model_keys(c.model, {"kind", "file", "n", "m", "cutoff", "symmetrized", "fhat"});
    models::TorusSymbolModel tm = torus_from_config(c.model, c.cutoff);
    m.torus = tm;
    m.id = "torus-K" + std::to_string(tm.cutoff);
    m.default_resolved = 0.5;  // truncation: trailing half is cutoff-contaminated
    m.seq = torus_spectrum(tm);
    return m;
  }

  if (kind == "spectrum_csv") {
    check_model_keys(c.model, {"kind", "path"});
    const std::string path = c.model.at("path").get<std::string>();
    m.seq = io::read_spectrum_csv(path);
    m.id = "csv:" + path;
    return m;
  }

  throw std::invalid_argument("config: model.kind must be one of harmonic, power, oscillating, "
                              "circle, torus, spectrum_csv");
}

weyl::WeylWindow make_window(const Config& c, const BuiltModel& m) {
  weyl::WeylWindow w;
  w.resolved_fraction = (c.resolved_fraction > 0.0) ? c.resolved_fraction : m.default_resolved;
  return w;
}

std::string default_out(const Config& c, const char* command) {
  return c.out.empty() ? std::string(command) + "_report.csv" : c.out;
}

std::string fmt(double v) { return io::format_double(v); }

std::string window_str(const weyl::WeylEstimate& e) {
  return std::to_string(e.window_lo) + ":" + std::to_string(e.window_hi);
}

// ---------------------------------------------------------------------------
// Commands
// ---------------------------------------------------------------------------

int run_tauberian(const Config& c) {
  const BuiltModel m = build_model(c);
  const spectra::MeasurabilityReport rep =
      ncint::limits::assess_measurability(m.seq, c.window_fraction, c.tol,
                                          ncint::limits::default_family());
  io::Csv csv;
  csv.preamble = {"command=tauberian", "model=" + m.id};
  csv.header = "model,length,estimate_re,estimate_im,converged,window_lo,window_hi,dispersion,"
               "surrogate_spread";
  csv.rows.push_back({m.id, std::to_string(rep.length), fmt(rep.limit_estimate.real()),
                      fmt(rep.limit_estimate.imag()), rep.converged ? "1" : "0",
                      std::to_string(rep.window_lo), std::to_string(rep.window_hi),
                      fmt(rep.dispersion), fmt(rep.surrogate_spread)});
  io::emit_report(default_out(c, "tauberian"), csv);
  std::cout << "tauberian " << m.id << ": estimate=" << fmt(rep.limit_estimate.real())
            << " dispersion=" << fmt(rep.dispersion)
            << " converged=" << (rep.converged ? "yes" : "no") << "\n";
  return 0;
}

int run_connes_check(const Config& c) {
  const BuiltModel m = build_model(c);
  if (!m.torus)
    throw std::invalid_argument("connes-check: requires a torus or circle model");
  const double predicted = models::predicted_connes_integral(*m.torus);
  const double residue = models::nc_residue_quadrature(*m.torus);
  const spectra::MeasurabilityReport rep =
      spectra::tauberian_limit(m.seq, c.window_fraction, c.tol);
  const double discrepancy = std::abs(rep.limit_estimate.real() - predicted);

  io::Csv csv;
  csv.preamble = {"command=connes-check", "model=" + m.id};
  csv.header = "model,predicted,residue,log_mean,dispersion,converged,discrepancy";
  csv.rows.push_back({m.id, fmt(predicted), fmt(residue), fmt(rep.limit_estimate.real()),
                      fmt(rep.dispersion), rep.converged ? "1" : "0", fmt(discrepancy)});
  io::emit_report(default_out(c, "connes-check"), csv);
  std::cout << "connes-check " << m.id << ": predicted=" << fmt(predicted)
            << " log_mean=" << fmt(rep.limit_estimate.real())
            << " discrepancy=" << fmt(discrepancy) << "\n";
  return 0;
}

int run_weyl(const Config& c) {
  const BuiltModel m = build_model(c);
  const weyl::WeylWindow w = make_window(c, m);

  io::Csv csv;
  csv.preamble = {"command=weyl", "model=" + m.id};
  csv.header = "model,p,method,value,dispersion,window";

  const auto add_row = [&](const std::string& id, const weyl::WeylEstimate& e) {
    csv.rows.push_back({id, fmt(e.p),
                        e.method == weyl::WeylMethod::tail_mean ? "tail_mean" : "counting",
                        fmt(e.value), fmt(e.dispersion), window_str(e)});
  };

  std::vector<cplx> abs_vals(m.seq.values.size());
  for (std::size_t i = 0; i < abs_vals.size(); ++i) abs_vals[i] = std::abs(m.seq.values[i]);
  const spectra::SpectralSequence abs_seq =
      spectra::sort_sequence(std::move(abs_vals), spectra::SequenceKind::singular_values);
  add_row(m.id + ":abs", weyl::weyl_coefficient(abs_seq, c.p, w));
  add_row(m.id + ":abs", weyl::counting_limit(abs_seq, c.p, w, c.grid_points));

  bool real_input = true, has_negative = false;
  for (const cplx& v : m.seq.values) {
    if (v.imag() != 0.0) real_input = false;
    if (v.real() < 0.0) has_negative = true;
  }
  if (real_input && has_negative) {
    const auto [plus, minus] = spectra::split_signed(m.seq);
    for (const auto& [label, part] : {std::pair{std::string(":plus"), plus},
                                      std::pair{std::string(":minus"), minus}}) {
      if (part.values.size() < 32) continue;
      add_row(m.id + label, weyl::weyl_coefficient(part, c.p, w));
      add_row(m.id + label, weyl::counting_limit(part, c.p, w, c.grid_points));
    }
  }

  io::emit_report(default_out(c, "weyl"), csv);
  std::cout << "weyl " << m.id << ": " << csv.rows.size() << " estimates written\n";
  return 0;
}

int run_residue(const Config& c) {
  const BuiltModel m = build_model(c);
  if (!m.torus) throw std::invalid_argument("residue: requires a torus or circle model");
  const models::TorusSymbolModel& tm = *m.torus;
  const double p = static_cast<double>(tm.n) / tm.m;

  io::Csv csv;
  csv.preamble = {"command=residue", "model=" + m.id};
  csv.header = "model,quantity,value";
  csv.rows.push_back({m.id, "residue", fmt(models::nc_residue_quadrature(tm))});
  csv.rows.push_back({m.id, "predicted_connes_integral",
                      fmt(models::predicted_connes_integral(tm))});
  csv.rows.push_back(
      {m.id, "weyl_rhs_abs", fmt(models::symbol_weyl_rhs(tm, p, models::SymbolMode::abs))});
  csv.rows.push_back(
      {m.id, "weyl_rhs_plus", fmt(models::symbol_weyl_rhs(tm, p, models::SymbolMode::plus))});
  csv.rows.push_back(
      {m.id, "weyl_rhs_minus", fmt(models::symbol_weyl_rhs(tm, p, models::SymbolMode::minus))});
  io::emit_report(default_out(c, "residue"), csv);
  std::cout << "residue " << m.id << ": report written\n";
  return 0;
}

int run_bs_sweep(const Config& c) {
  if (!c.model.is_object() || c.model.value("kind", "") != "torus")
    throw std::invalid_argument("bs-sweep: requires a torus potential model");
  check_model_keys(c.model, {"kind", "file", "n", "m", "cutoff", "symmetrized", "fhat"});
  models::TorusSymbolModel potential = torus_from_config(c.model, c.cutoff);
  if (c.h_list.empty())
    throw std::invalid_argument("bs-sweep: config must supply a decreasing h_list");

  weyl::WeylWindow w;
  w.resolved_fraction = (c.resolved_fraction > 0.0) ? c.resolved_fraction : 0.5;
  const semiclassical::SweepReport rep = semiclassical::circle_sweep(potential, c.h_list, w);

  io::Csv csv;
  csv.preamble = {"command=bs-sweep",
                  "cutoff=" + std::to_string(potential.cutoff),
                  "extrapolated=" + fmt(rep.extrapolated),
                  "k_integral=" + fmt(rep.k_integral.integral),
                  "k_log_mean=" + fmt(rep.k_integral.log_mean.limit_estimate.real()),
                  "discrepancy=" + fmt(rep.discrepancy)};
  csv.header = "h,count,h2count,guard_ok";
  for (const semiclassical::SweepPoint& pt : rep.points)
    csv.rows.push_back(
        {fmt(pt.h), std::to_string(pt.count), fmt(pt.h2count), pt.guard_ok ? "1" : "0"});
  io::emit_report(default_out(c, "bs-sweep"), csv);
  std::cout << "bs-sweep K=" << potential.cutoff << ": extrapolated=" << fmt(rep.extrapolated)
            << " k_integral=" << fmt(rep.k_integral.integral)
            << " discrepancy=" << fmt(rep.discrepancy) << "\n";
  return 0;
}

int run_norms(const Config& c) {
  const BuiltModel m = build_model(c);
  std::vector<cplx> abs_vals(m.seq.values.size());
  for (std::size_t i = 0; i < abs_vals.size(); ++i) abs_vals[i] = std::abs(m.seq.values[i]);
  const spectra::SpectralSequence abs_seq =
      spectra::sort_sequence(std::move(abs_vals), spectra::SequenceKind::singular_values);
  const spectra::MeasurabilityReport rep =
      spectra::tauberian_limit(m.seq, c.window_fraction, c.tol);

  io::Csv csv;
  csv.preamble = {"command=norms", "model=" + m.id};
  csv.header = "model,quantity,value";
  csv.rows.push_back({m.id, "weak_quasi_norm_p" + fmt(c.p),
                      fmt(spectra::weak_quasi_norm(abs_seq, c.p))});
  csv.rows.push_back({m.id, "dixmier_macaev", fmt(spectra::dixmier_macaev_norm(abs_seq))});
  csv.rows.push_back({m.id, "log_mean_estimate", fmt(rep.limit_estimate.real())});
  csv.rows.push_back({m.id, "log_mean_dispersion", fmt(rep.dispersion)});
  csv.rows.push_back({m.id, "strong_remainder",
                      fmt(spectra::strong_tauberian_remainder(m.seq, rep.limit_estimate))});
  io::emit_report(default_out(c, "norms"), csv);
  std::cout << "norms " << m.id << ": report written\n";
  return 0;
}

// Random Hermitian matrix with independent standard normal entries.
CMatrix random_hermitian(std::mt19937_64& rng, std::size_t n) {
  std::normal_distribution<double> nd(0.0, 1.0);
  CMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = nd(rng);
    for (std::size_t j = i + 1; j < n; ++j) {
      const cplx v(nd(rng), nd(rng));
      m(i, j) = v;
      m(j, i) = std::conj(v);
    }
  }
  return m;
}

int run_props(const Config& c) {
  std::mt19937_64 rng(c.seed);
  std::uniform_int_distribution<std::size_t> dim_dist(4, 64);

  struct Tally {
    std::size_t violations = 0;
    double worst = -1e300;  // largest lhs - rhs margin seen (<= 0 when holding)
  };
  Tally ky_fan, signed_ky_fan, ideal, quasi_triangle, weyl_sums;

  for (std::size_t trial = 0; trial < c.trials; ++trial) {
    const std::size_t n = dim_dist(rng);
    const HermitianOperator s(random_hermitian(rng, n));
    const HermitianOperator t(random_hermitian(rng, n));
    const HermitianOperator st(add(s.matrix(), t.matrix()));
    const double scale_bound =
        std::max(max_abs_entry(s.matrix()), max_abs_entry(t.matrix())) * n;
    const double tol = 1e-10 * scale_bound;

    const auto mu_s = matops::singular_values(GeneralOperator(s.matrix()));
    const auto mu_t = matops::singular_values(GeneralOperator(t.matrix()));
    const auto mu_st = matops::singular_values(GeneralOperator(st.matrix()));
    const auto lam_s = matops::hermitian_eig(s);
    const auto lam_t = matops::hermitian_eig(t);
    const auto lam_st = matops::hermitian_eig(st);

    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; j + k < n; ++k) {
        const double margin = mu_st.values[j + k].real() - mu_s.values[j].real() -
                              mu_t.values[k].real();
        ky_fan.worst = std::max(ky_fan.worst, margin);
        if (margin > tol) ++ky_fan.violations;
      }

    const auto [sp, sm] = spectra::split_signed(lam_s);
    const auto [tp, tm] = spectra::split_signed(lam_t);
    const auto [stp, stm] = spectra::split_signed(lam_st);
    const auto signed_check = [&](const spectra::SpectralSequence& ab,
                                  const spectra::SpectralSequence& aa,
                                  const spectra::SpectralSequence& bb) {
      for (std::size_t j = 0; j < aa.values.size(); ++j)
        for (std::size_t k = 0; k < bb.values.size(); ++k) {
          if (j + k >= ab.values.size()) continue;
          const double margin =
              ab.values[j + k].real() - aa.values[j].real() - bb.values[k].real();
          signed_ky_fan.worst = std::max(signed_ky_fan.worst, margin);
          if (margin > tol) ++signed_ky_fan.violations;
        }
    };
    signed_check(stp, sp, tp);
    signed_check(stm, sm, tm);

    // Ideal inequality mu_j(A T B) <= ||A|| mu_j(T) ||B||.
    {
      const CMatrix r = random_hermitian(rng, n);
      const CMatrix atb = matmul(s.matrix(), matmul(t.matrix(), r));
      const auto mu_atb = matops::singular_values(GeneralOperator(atb));
      const double na = matops::operator_norm(s.matrix());
      const double nb = matops::operator_norm(r);
      for (std::size_t j = 0; j < n; ++j) {
        const double margin = mu_atb.values[j].real() - na * mu_t.values[j].real() * nb;
        ideal.worst = std::max(ideal.worst, margin);
        if (margin > tol * na * nb) ++ideal.violations;
      }
    }

    for (double p : {0.5, 1.0, 2.0}) {
      const double lhs = spectra::weak_quasi_norm(mu_st, p);
      const double rhs = std::pow(2.0, 1.0 / p) *
                         (spectra::weak_quasi_norm(mu_s, p) + spectra::weak_quasi_norm(mu_t, p));
      const double margin = lhs - rhs;
      quasi_triangle.worst = std::max(quasi_triangle.worst, margin);
      if (margin > tol) ++quasi_triangle.violations;
    }

    double sum_lam = 0.0, sum_abs = 0.0, sum_mu = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      sum_lam += lam_s.values[j].real();
      sum_abs += std::abs(lam_s.values[j].real());
      sum_mu += mu_s.values[j].real();
      const double margin = std::max(std::abs(sum_lam) - sum_abs, sum_abs - sum_mu);
      weyl_sums.worst = std::max(weyl_sums.worst, margin);
      if (margin > tol) ++weyl_sums.violations;
    }
  }

  io::Csv csv;
  csv.preamble = {"command=props", "seed=" + std::to_string(c.seed)};
  csv.header = "property,trials,violations,worst_margin";
  const auto add = [&](const char* name, const Tally& t) {
    csv.rows.push_back({name, std::to_string(c.trials), std::to_string(t.violations),
                        fmt(t.worst)});
  };
  add("ky_fan", ky_fan);
  add("signed_ky_fan", signed_ky_fan);
  add("ideal", ideal);
  add("quasi_triangle", quasi_triangle);
  add("weyl_sums", weyl_sums);
  io::emit_report(default_out(c, "props"), csv);

  const std::size_t total = ky_fan.violations + signed_ky_fan.violations + ideal.violations +
                            quasi_triangle.violations + weyl_sums.violations;
  std::cout << "props: " << c.trials << " trials, " << total << " violations\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ncint: noncommutative integration experiments on spectral data"};
  app.require_subcommand(1);

  std::string config_path, out_path;
  std::size_t cutoff = 0;
  double p = 0.0, tol = 0.0;
  long long seed = -1;
  app.add_option("--config", config_path, "JSON experiment config")->capture_default_str();
  app.add_option("--out", out_path, "report output path");
  app.add_option("--cutoff", cutoff, "frequency cutoff override");
  app.add_option("--p", p, "exponent p override");
  app.add_option("--tol", tol, "tolerance override");
  app.add_option("--seed", seed, "random seed override");

  const char* names[] = {"tauberian", "connes-check", "weyl", "residue",
                         "bs-sweep",  "norms",        "props"};
  for (const char* n : names) app.add_subcommand(n)->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    Config c = load_config(config_path);
    const std::string command = app.get_subcommands().front()->get_name();
    if (!c.command.empty() && c.command != command)
      throw std::invalid_argument("config: command '" + c.command +
                                  "' does not match subcommand '" + command + "'");
    if (!out_path.empty()) c.out = out_path;
    if (cutoff > 0) c.cutoff = cutoff;
    if (p > 0.0) c.p = p;
    if (tol > 0.0) c.tol = tol;
    if (seed >= 0) c.seed = static_cast<unsigned long>(seed);

    if (command == "tauberian") return run_tauberian(c);
    if (command == "connes-check") return run_connes_check(c);
    if (command == "weyl") return run_weyl(c);
    if (command == "residue") return run_residue(c);
    if (command == "bs-sweep") return run_bs_sweep(c);
    if (command == "norms") return run_norms(c);
    if (command == "props") return run_props(c);
    throw std::invalid_argument("unknown command " + command);
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::runtime_error& e) {
    std::cerr << "guard violated: " << e.what() << "\n";
    return 3;
  }
}
