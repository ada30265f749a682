#include "ncint/models.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "ncint/eig.hpp"

namespace ncint::models {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

double weight(double knorm, double m) {
  return (knorm == 0.0) ? 0.0 : std::pow(knorm, -0.5 * m);
}

double sphere_area(int n) {
  return (n == 1) ? 2.0 : two_pi;  // |S^0| and |S^1|
}

double weyl_constant(int n) {
  return sphere_area(n) / (static_cast<double>(n) * std::pow(two_pi, n));
}

void require_order_matches_dimension(const TorusSymbolModel& model, const char* op) {
  if (std::abs(model.m - static_cast<double>(model.n)) > 1e-12)
    throw std::invalid_argument(std::string(op) + ": implemented for order -n only (m = n)");
}

void require_real_symbol(const TorusSymbolModel& model, const char* op) {
  if (!model.real_symbol())
    throw std::invalid_argument(std::string(op) + ": symbol must be real-valued");
}

void check_aliasing_guard(const TorusSymbolModel& model) {
  if (model.n != 1 && model.n != 2)
    throw std::invalid_argument("torus model: dimension must be 1 or 2");
  if (!(model.m > 0.0)) throw std::invalid_argument("torus model: order m must be positive");
  if (model.cutoff == 0) throw std::invalid_argument("torus model: cutoff must be positive");
  const int radius = model.support_radius();
  if (static_cast<int>(model.cutoff) < 4 * radius)
    throw std::invalid_argument(
        "torus model: cutoff below 4x symbol support radius (aliasing guard)");
}

/// Trapezoid rule over the torus for a pointwise transform of f.  Periodic
/// trapezoid equals the rectangle rule and is exact on trigonometric
/// polynomials resolved by the grid.
template <class F>
double torus_quadrature(const TorusSymbolModel& model, std::size_t points_per_dim, F&& transform) {
  const std::size_t pts =
      (points_per_dim > 0) ? points_per_dim : std::max<std::size_t>(4 * model.cutoff, 8);
  double acc = 0.0;
  if (model.n == 1) {
    for (std::size_t t = 0; t < pts; ++t)
      acc += transform(model.symbol_value(two_pi * static_cast<double>(t) / static_cast<double>(pts)));
    return acc * (two_pi / static_cast<double>(pts));
  }
  for (std::size_t tx = 0; tx < pts; ++tx)
    for (std::size_t ty = 0; ty < pts; ++ty)
      acc += transform(model.symbol_value(two_pi * static_cast<double>(tx) / static_cast<double>(pts),
                                          two_pi * static_cast<double>(ty) / static_cast<double>(pts)));
  return acc * (two_pi / static_cast<double>(pts)) * (two_pi / static_cast<double>(pts));
}

}  // namespace

std::vector<double> diagonal_values(const DiagonalModel& model) {
  if (model.rule == DiagonalRule::custom) {
    for (std::size_t j = 1; j < model.custom_values.size(); ++j)
      if (std::abs(model.custom_values[j]) > std::abs(model.custom_values[j - 1]))
        throw std::invalid_argument("diagonal_values: custom list must be nonincreasing in modulus");
    if (model.custom_values.empty())
      throw std::invalid_argument("diagonal_values: custom list is empty");
    return model.custom_values;
  }
  if (model.length == 0) throw std::invalid_argument("diagonal_values: length must be positive");
  std::vector<double> out(model.length);
  const double alpha = (model.rule == DiagonalRule::harmonic) ? 1.0 : model.alpha;
  if (!(alpha > 0.0)) throw std::invalid_argument("diagonal_values: exponent must be positive");
  for (std::size_t j = 0; j < out.size(); ++j)
    out[j] = std::pow(static_cast<double>(j + 1), -alpha);
  return out;
}

HermitianOperator build_diagonal(const DiagonalModel& model) {
  const std::vector<double> vals = diagonal_values(model);
  CMatrix m(vals.size(), vals.size());
  for (std::size_t i = 0; i < vals.size(); ++i) m(i, i) = vals[i];
  return HermitianOperator(std::move(m));
}

std::vector<double> oscillating_values(std::size_t length) {
  std::vector<double> out(length);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t jj = 0; jj < static_cast<std::ptrdiff_t>(length); ++jj) {
    const double j = static_cast<double>(jj);
    out[static_cast<std::size_t>(jj)] =
        (1.0 + std::sin(std::log(std::log(j + 2.0)))) / (j + 1.0);
  }
  return out;
}

cplx TorusSymbolModel::fhat_at(int kx, int ky) const {
  cplx acc(0.0, 0.0);
  for (const FourierCoeff& c : fhat)
    if (c.k[0] == kx && (n == 1 || c.k[1] == ky)) acc += c.value;
  return acc;
}

int TorusSymbolModel::support_radius() const {
  int radius = 0;
  for (const FourierCoeff& c : fhat) {
    if (c.value == cplx(0.0, 0.0)) continue;
    int r = std::abs(c.k[0]);
    if (n == 2) r = std::max(r, std::abs(c.k[1]));
    radius = std::max(radius, r);
  }
  return radius;
}

bool TorusSymbolModel::real_symbol() const {
  double scale = 0.0;
  for (const FourierCoeff& c : fhat) scale = std::max(scale, std::abs(c.value));
  if (scale == 0.0) return true;
  for (const FourierCoeff& c : fhat) {
    const cplx mirror = fhat_at(-c.k[0], n == 2 ? -c.k[1] : 0);
    if (std::abs(mirror - std::conj(fhat_at(c.k[0], n == 2 ? c.k[1] : 0))) > 1e-12 * scale)
      return false;
  }
  return true;
}

double TorusSymbolModel::symbol_value(double x, double y) const {
  cplx acc(0.0, 0.0);
  for (const FourierCoeff& c : fhat) {
    const double phase = c.k[0] * x + (n == 2 ? c.k[1] * y : 0.0);
    acc += c.value * cplx(std::cos(phase), std::sin(phase));
  }
  return acc.real();
}

std::size_t torus_dimension(const TorusSymbolModel& model) {
  const std::size_t side = 2 * model.cutoff + 1;
  return (model.n == 1) ? side : side * side;
}

CMatrix torus_matrix(const TorusSymbolModel& model) {
  check_aliasing_guard(model);
  const int K = static_cast<int>(model.cutoff);
  const int side = 2 * K + 1;
  const std::size_t dim = torus_dimension(model);
  CMatrix out(dim, dim);

#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t ii = 0; ii < static_cast<std::ptrdiff_t>(dim); ++ii) {
    const std::size_t i = static_cast<std::size_t>(ii);
    const int kx = (model.n == 1) ? static_cast<int>(i) - K : static_cast<int>(i) / side - K;
    const int ky = (model.n == 1) ? 0 : static_cast<int>(i) % side - K;
    const double ki_norm = std::sqrt(static_cast<double>(kx) * kx + static_cast<double>(ky) * ky);
    for (const FourierCoeff& c : model.fhat) {
      const int qx = kx - c.k[0];
      const int qy = (model.n == 2) ? ky - c.k[1] : 0;
      if (qx < -K || qx > K || qy < -K || qy > K) continue;
      const std::size_t j = (model.n == 1)
                                ? static_cast<std::size_t>(qx + K)
                                : static_cast<std::size_t>(qx + K) * side + (qy + K);
      const double kj_norm =
          std::sqrt(static_cast<double>(qx) * qx + static_cast<double>(qy) * qy);
      cplx entry;
      if (model.symmetrized)
        entry = weight(ki_norm, model.m) * c.value * weight(kj_norm, model.m);
      else
        entry = (kj_norm == 0.0) ? cplx(0.0, 0.0) : c.value * std::pow(kj_norm, -model.m);
      out(i, j) += entry;
    }
  }
  return out;
}

std::pair<std::vector<double>, std::vector<double>> torus_tridiagonal(
    const TorusSymbolModel& model) {
  check_aliasing_guard(model);
  if (model.n != 1 || !model.symmetrized)
    throw std::invalid_argument("torus_tridiagonal: requires a 1-d symmetrized model");
  if (model.support_radius() > 1)
    throw std::invalid_argument("torus_tridiagonal: symbol support radius must be at most 1");
  const cplx f0 = model.fhat_at(0), f1 = model.fhat_at(1);
  if (f0.imag() != 0.0 || f1.imag() != 0.0 || !model.real_symbol())
    throw std::invalid_argument("torus_tridiagonal: requires real Fourier coefficients");

  const int K = static_cast<int>(model.cutoff);
  const std::size_t dim = static_cast<std::size_t>(2 * K + 1);
  std::vector<double> d(dim), w(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    const double knorm = std::abs(static_cast<double>(static_cast<int>(i) - K));
    w[i] = weight(knorm, model.m);
    d[i] = f0.real() * w[i] * w[i];
  }
  std::vector<double> e(dim - 1);
  for (std::size_t i = 0; i + 1 < dim; ++i) e[i] = f1.real() * w[i] * w[i + 1];
  return {std::move(d), std::move(e)};
}

spectra::SpectralSequence torus_tridiagonal_spectrum(const TorusSymbolModel& model) {
  auto [d, e] = torus_tridiagonal(model);
  return spectra::sort_sequence(eig::tridiagonal_eigenvalues(std::move(d), std::move(e)));
}

std::vector<double> closed_form_circle_spectrum(std::size_t length, double m) {
  std::vector<double> out(length);
  for (std::size_t j = 0; j < length; ++j)
    out[j] = std::pow(static_cast<double>(j / 2 + 1), -m);
  return out;
}

double nc_residue_quadrature(const TorusSymbolModel& model, std::size_t points_per_dim) {
  check_aliasing_guard(model);
  require_order_matches_dimension(model, "nc_residue_quadrature");
  require_real_symbol(model, "nc_residue_quadrature");
  // On the cosphere |xi| = 1 the symbol factor |xi|^{-n} is 1, so the sphere
  // rule contributes its total weight |S^{n-1}|; for n = 1 that is the exact
  // two-point sum over {-1, +1}, for n = 2 the 360-point uniform rule.
  double sphere = 0.0;
  if (model.n == 1) {
    sphere = 2.0;
  } else {
    const int angular_points = 360;
    for (int a = 0; a < angular_points; ++a) sphere += two_pi / angular_points;
  }
  const double space = torus_quadrature(model, points_per_dim, [](double f) { return f; });
  return sphere * space / std::pow(two_pi, model.n);
}

double predicted_connes_integral(const TorusSymbolModel& model) {
  require_order_matches_dimension(model, "predicted_connes_integral");
  require_real_symbol(model, "predicted_connes_integral");
  return weyl_constant(model.n) * std::pow(two_pi, model.n) * model.fhat_at(0).real();
}

double symbol_weyl_rhs(const TorusSymbolModel& model, double p, SymbolMode mode,
                       std::size_t points_per_dim) {
  check_aliasing_guard(model);
  require_real_symbol(model, "symbol_weyl_rhs");
  if (!(p > 0.0)) throw std::invalid_argument("symbol_weyl_rhs: p must be positive");
  if (std::abs(p - static_cast<double>(model.n) / model.m) > 1e-12 * p)
    throw std::invalid_argument("symbol_weyl_rhs: p must equal n/m for this model order");
  const double integral = torus_quadrature(model, points_per_dim, [&](double f) {
    double g = 0.0;
    switch (mode) {
      case SymbolMode::abs: g = std::abs(f); break;
      case SymbolMode::plus: g = std::max(f, 0.0); break;
      case SymbolMode::minus: g = std::max(-f, 0.0); break;
    }
    return std::pow(g, p);
  });
  return std::pow(weyl_constant(model.n) * integral, 1.0 / p);
}

}  // namespace ncint::models
