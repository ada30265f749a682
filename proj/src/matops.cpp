#include "ncint/matops.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ncint::matops {

namespace {

/// V diag(f(lambda)) V^H for a decomposition of a Hermitian operator.
CMatrix assemble_calculus(const eig::EigResult& er, const std::vector<double>& fvals) {
  const std::size_t n = er.values.size();
  CMatrix scaled(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) scaled(i, j) = er.vectors(i, j) * fvals[j];
  return matmul(scaled, adjoint(er.vectors));
}

std::vector<double> sorted_partial_sums_source(const spectra::SpectralSequence& s) {
  std::vector<double> out(s.values.size());
  for (std::size_t i = 0; i < s.values.size(); ++i) out[i] = s.values[i].real();
  return out;
}

}  // namespace

spectra::SpectralSequence hermitian_eig(const HermitianOperator& a) {
  // Values-only solve: Householder+QL for real input, Jacobi otherwise.
  return spectra::sort_sequence(eig::symmetric_eigenvalues(a.matrix()));
}

eig::EigResult hermitian_eig_full(const HermitianOperator& a) {
  eig::JacobiOptions opt;
  opt.compute_vectors = true;
  return eig::jacobi_auto(a.matrix(), opt);
}

spectra::SpectralSequence singular_values(const GeneralOperator& a) {
  const CMatrix gram = matmul(adjoint(a.matrix()), a.matrix());
  eig::EigResult er = eig::jacobi_auto(HermitianOperator(gram).matrix());
  std::vector<double> sv(er.values.size());
  for (std::size_t i = 0; i < sv.size(); ++i) sv[i] = std::sqrt(std::max(er.values[i], 0.0));
  return spectra::sort_sequence(sv, spectra::SequenceKind::singular_values);
}

double operator_norm(const CMatrix& a) {
  const CMatrix gram = matmul(adjoint(a), a);
  eig::EigResult er = eig::jacobi_auto(HermitianOperator(gram).matrix());
  double top = 0.0;
  for (double v : er.values) top = std::max(top, v);
  return std::sqrt(std::max(top, 0.0));
}

std::pair<HermitianOperator, HermitianOperator> positive_negative_parts(
    const HermitianOperator& a) {
  eig::EigResult er = hermitian_eig_full(a);
  const std::size_t n = er.values.size();
  std::vector<double> plus(n), minus(n);
  for (std::size_t i = 0; i < n; ++i) {
    plus[i] = std::max(er.values[i], 0.0);
    minus[i] = std::max(-er.values[i], 0.0);
  }
  return {HermitianOperator(assemble_calculus(er, plus)),
          HermitianOperator(assemble_calculus(er, minus))};
}

std::pair<HermitianOperator, HermitianOperator> re_im_parts(const GeneralOperator& a) {
  const CMatrix& m = a.matrix();
  const CMatrix mh = adjoint(m);
  const std::size_t n = m.rows();
  CMatrix re(n, n), im(n, n);
  for (std::size_t i = 0; i < n * n; ++i) {
    re.data()[i] = 0.5 * (m.data()[i] + mh.data()[i]);
    im.data()[i] = cplx(0.0, -0.5) * (m.data()[i] - mh.data()[i]);
  }
  return {HermitianOperator(std::move(re)), HermitianOperator(std::move(im))};
}

std::size_t counting_function(const HermitianOperator& a, double lam, SpectralSign sign) {
  if (!(lam > 0.0)) throw std::invalid_argument("counting_function: lam must be positive");
  const spectra::SpectralSequence seq = hermitian_eig(a);
  std::size_t count = 0;
  for (const cplx& v : seq.values) {
    const double signed_part = (sign == SpectralSign::plus) ? v.real() : -v.real();
    if (signed_part > lam) ++count;
  }
  return count;
}

std::size_t counting_function(const spectra::SpectralSequence& part, double lam) {
  if (!(lam > 0.0)) throw std::invalid_argument("counting_function: lam must be positive");
  std::size_t count = 0;
  for (const cplx& v : part.values)
    if (v.real() > lam) ++count;
  return count;
}

GeneralOperator pushforward(const GeneralOperator& a, const Embedding& iota) {
  if (a.dim() != iota.source_dim())
    throw std::invalid_argument("pushforward: operator dimension does not match embedding source");
  const CMatrix& m = iota.matrix();
  // Pseudoinverse iota^+ = (iota^H iota)^{-1} iota^H equals iota^{-1} o pi
  // on the target space; the Gram matrix is Hermitian positive definite by
  // the embedding's rank invariant.
  const CMatrix gram = matmul(adjoint(m), m);
  eig::JacobiOptions opt;
  opt.compute_vectors = true;
  eig::EigResult er = eig::jacobi_auto(HermitianOperator(gram).matrix(), opt);
  std::vector<double> inv(er.values.size());
  for (std::size_t i = 0; i < inv.size(); ++i) inv[i] = 1.0 / er.values[i];
  const CMatrix gram_inv = assemble_calculus(er, inv);
  const CMatrix pinv = matmul(gram_inv, adjoint(m));
  return GeneralOperator(matmul(m, matmul(a.matrix(), pinv)));
}

std::vector<double> additivity_residual(const HermitianOperator& a, const HermitianOperator& b,
                                        const std::vector<std::size_t>& n_range) {
  if (a.dim() != b.dim())
    throw std::invalid_argument("additivity_residual: dimension mismatch");
  const HermitianOperator sum(add(a.matrix(), b.matrix()));
  const std::vector<double> la = sorted_partial_sums_source(hermitian_eig(a));
  const std::vector<double> lb = sorted_partial_sums_source(hermitian_eig(b));
  const std::vector<double> lab = sorted_partial_sums_source(hermitian_eig(sum));

  std::vector<double> out;
  out.reserve(n_range.size());
  for (std::size_t n : n_range) {
    if (n > la.size()) throw std::invalid_argument("additivity_residual: N exceeds dimension");
    double sa = 0.0, sb = 0.0, sab = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      sa += la[j];
      sb += lb[j];
      sab += lab[j];
    }
    out.push_back(std::abs(sab - sa - sb));
  }
  return out;
}

std::vector<cplx> re_im_log_mean_series(const GeneralOperator& a) {
  const auto [re, im] = re_im_parts(a);
  const std::vector<cplx> sig_re = spectra::log_mean_series(hermitian_eig(re));
  const std::vector<cplx> sig_im = spectra::log_mean_series(hermitian_eig(im));
  std::vector<cplx> combined(sig_re.size());
  for (std::size_t i = 0; i < combined.size(); ++i)
    combined[i] = cplx(sig_re[i].real(), sig_im[i].real());
  return combined;
}

spectra::MeasurabilityReport commutator_logmean(const GeneralOperator& t,
                                                const GeneralOperator& a, double window_fraction,
                                                double tol) {
  if (t.dim() != a.dim())
    throw std::invalid_argument("commutator_logmean: dimension mismatch");
  const CMatrix comm = sub(matmul(t.matrix(), a.matrix()), matmul(a.matrix(), t.matrix()));
  return spectra::series_report(re_im_log_mean_series(GeneralOperator(comm)), window_fraction,
                                tol);
}

GeneralOperator family_mean(const std::vector<std::pair<double, GeneralOperator>>& family) {
  if (family.empty()) throw std::invalid_argument("family_mean: empty family");
  const std::size_t n = family.front().second.dim();
  CMatrix acc(n, n);
  for (const auto& [w, op] : family) {
    if (op.dim() != n) throw std::invalid_argument("family_mean: dimension mismatch");
    acc = add(acc, scale(op.matrix(), cplx(w, 0.0)));
  }
  return GeneralOperator(std::move(acc));
}

}  // namespace ncint::matops
