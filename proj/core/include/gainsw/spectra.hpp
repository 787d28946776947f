#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "gainsw/gain_graph.hpp"
#include "gainsw/representations.hpp"

namespace gainsw {

// Real eigenvalue multiset of a Hermitian matrix, ascending.
struct Spectrum {
  std::vector<double> eigenvalues;
  std::size_t size() const { return eigenvalues.size(); }
};

// Monic real characteristic polynomial; coeffs[k] multiplies x^k,
// coeffs.back() = 1.
struct CharPoly {
  std::vector<double> coeffs;
  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
};

// Full real spectrum of a Hermitian matrix (||M - M*||_max <= 1e-9 required).
Spectrum hermitian_eigs(const Eigen::MatrixXcd& m);

// Faddeev-LeVerrier over complex doubles; imaginary residues above 1e-6 are an
// error, below they are discarded.
CharPoly char_poly(const Eigen::MatrixXcd& m);

// Descending powers, integer-rounded coefficients where within 1e-6 of an
// integer: "x^16 - 26x^14 + ... - 256x^2".
std::string format_charpoly(const CharPoly& p);

double charpoly_coeff(const CharPoly& p, int power);

// Pairwise comparison of sorted spectra within tol_factor * max(1, spectral norm).
bool spectra_equal(const Spectrum& a, const Spectrum& b, double tol_factor = 1e-7);

bool pi_cospectral(const GainGraph& g1, const GainGraph& g2, const Representation& rep);

enum class GMode { Regular, Traces };

// G-cospectrality decision for finite gain groups. Regular mode decides via
// the regular representation; traces mode compares mu(Tr(A^h)) for h = 1..hmax
// (default |V| |G|) and is a diagnostic, not a proof.
bool g_cospectral(const GainGraph& g1, const GainGraph& g2, GMode mode, int hmax = -1);

}  // namespace gainsw
