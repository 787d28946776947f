#include "gainsw/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace gainsw {

Spectrum hermitian_eigs(const Eigen::MatrixXcd& m) {
  if (m.rows() != m.cols()) fail("hermitian_eigs: matrix must be square");
  if (m.rows() == 0) return {};
  if (max_abs(m - m.adjoint()) > 1e-9)
    fail("hermitian_eigs: matrix is not Hermitian within 1e-9");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) fail("hermitian_eigs: eigensolver did not converge");
  Spectrum s;
  s.eigenvalues.assign(solver.eigenvalues().data(),
                       solver.eigenvalues().data() + solver.eigenvalues().size());
  std::sort(s.eigenvalues.begin(), s.eigenvalues.end());
  return s;
}

CharPoly char_poly(const Eigen::MatrixXcd& m) {
  if (m.rows() != m.cols()) fail("char_poly: matrix must be square");
  const int n = static_cast<int>(m.rows());
  if (n == 0) return {{1.0}};
  // M_1 = A, c_{n-1} = -tr M_1; M_k = A (M_{k-1} + c_{n-k+1} I),
  // c_{n-k} = -tr(M_k) / k.
  std::vector<cplx> c(static_cast<std::size_t>(n) + 1);
  c[static_cast<std::size_t>(n)] = 1.0;
  Eigen::MatrixXcd mk = m;
  cplx ck = -mk.trace();
  c[static_cast<std::size_t>(n - 1)] = ck;
  for (int k = 2; k <= n; ++k) {
    mk = m * (mk + ck * Eigen::MatrixXcd::Identity(n, n));
    ck = -mk.trace() / static_cast<double>(k);
    c[static_cast<std::size_t>(n - k)] = ck;
  }
  CharPoly p;
  p.coeffs.resize(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    const cplx v = c[static_cast<std::size_t>(k)];
    if (std::abs(v.imag()) > 1e-6)
      fail("char_poly: residual imaginary part " + std::to_string(v.imag()) +
           " exceeds 1e-6 on the x^" + std::to_string(k) + " coefficient");
    p.coeffs[static_cast<std::size_t>(k)] = v.real();
  }
  return p;
}

double charpoly_coeff(const CharPoly& p, int power) {
  if (power < 0 || power >= static_cast<int>(p.coeffs.size())) return 0.0;
  return p.coeffs[static_cast<std::size_t>(power)];
}

std::string format_charpoly(const CharPoly& p) {
  std::ostringstream out;
  bool first = true;
  for (int k = p.degree(); k >= 0; --k) {
    double v = p.coeffs[static_cast<std::size_t>(k)];
    std::string coeff;
    const double rounded = std::round(v);
    if (std::abs(v - rounded) <= 1e-6) {
      if (rounded == 0.0) continue;
      v = rounded;
      char buf[32];
      std::snprintf(buf, sizeof buf, "%lld", static_cast<long long>(std::llabs(std::llround(v))));
      coeff = buf;
    } else {
      char buf[48];
      std::snprintf(buf, sizeof buf, "%.9g", std::abs(v));
      coeff = buf;
    }
    if (first) {
      if (v < 0) out << "-";
      first = false;
    } else {
      out << (v < 0 ? " - " : " + ");
    }
    const bool unit = coeff == "1";
    if (k == 0) {
      out << coeff;
    } else {
      if (!unit) out << coeff;
      out << "x";
      if (k > 1) out << "^" << k;
    }
  }
  if (first) out << "0";
  return out.str();
}

bool spectra_equal(const Spectrum& a, const Spectrum& b, double tol_factor) {
  if (a.size() != b.size()) return false;
  double scale = 1.0;
  for (double v : a.eigenvalues) scale = std::max(scale, std::abs(v));
  for (double v : b.eigenvalues) scale = std::max(scale, std::abs(v));
  const double tol = tol_factor * scale;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (std::abs(a.eigenvalues[i] - b.eigenvalues[i]) > tol) return false;
  return true;
}

bool pi_cospectral(const GainGraph& g1, const GainGraph& g2, const Representation& rep) {
  if (g1.group() != g2.group()) fail("pi_cospectral: graphs over different groups");
  const auto s1 = hermitian_eigs(fourier(rep, adjacency(g1)));
  const auto s2 = hermitian_eigs(fourier(rep, adjacency(g2)));
  return spectra_equal(s1, s2);
}

bool g_cospectral(const GainGraph& g1, const GainGraph& g2, GMode mode, int hmax) {
  if (g1.group() != g2.group()) fail("g_cospectral: graphs over different groups");
  const Group& G = g1.group();
  if (!G.is_finite())
    fail_unsupported("G-cospectrality is decided for finite gain groups only");
  if (mode == GMode::Regular) return pi_cospectral(g1, g2, regular_rep(G));

  if (g1.vertex_count() != g2.vertex_count()) return false;
  if (hmax < 0)
    hmax = g1.vertex_count() * static_cast<int>(G.order());
  const auto a = adjacency(g1);
  const auto b = adjacency(g2);
  auto pa = GAMatrix::identity(G, a.rows());
  auto pb = GAMatrix::identity(G, b.rows());
  // Walk counts are integers and stay exact in doubles up to 2^52; past that
  // horizon the diagnostic stops rather than compare rounded values.
  constexpr double kExactHorizon = 4.5e15;
  for (int h = 1; h <= hmax; ++h) {
    pa = mat_mul(pa, a);
    pb = mat_mul(pb, b);
    const auto ta = mat_trace(pa);
    const auto tb = mat_trace(pb);
    double magnitude = 0.0;
    for (const auto& [x, c] : ta.support()) magnitude = std::max(magnitude, std::abs(c));
    for (const auto& [x, c] : tb.support()) magnitude = std::max(magnitude, std::abs(c));
    if (magnitude > kExactHorizon) break;
    if (!class_function_equal(ga_mu(ta), ga_mu(tb))) return false;
  }
  return true;
}

}  // namespace gainsw
