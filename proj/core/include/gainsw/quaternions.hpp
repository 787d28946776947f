#pragma once

#include <Eigen/Dense>
#include <vector>

#include "gainsw/gain_graph.hpp"
#include "gainsw/quaternion.hpp"
#include "gainsw/representations.hpp"
#include "gainsw/spectra.hpp"
#include "gainsw/switching.hpp"

namespace gainsw {

// Dense quaternionic matrix.
class QuatMatrix {
 public:
  QuatMatrix(int rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Quaternion& at(int i, int j) const;
  Quaternion& at(int i, int j);

  static QuatMatrix identity(int n);
  QuatMatrix conj_transpose() const;
  bool is_hermitian(double tol = 1e-9) const;

 private:
  int rows_, cols_;
  std::vector<Quaternion> entries_;
};

QuatMatrix qm_add(const QuatMatrix& a, const QuatMatrix& b);
QuatMatrix qm_mul(const QuatMatrix& a, const QuatMatrix& b);
bool qm_close(const QuatMatrix& a, const QuatMatrix& b, double tol);

// Writing A = A1 + A2 j, the complex adjoint is the 2n x 2n block matrix
// [[A1, A2], [-conj(A2), conj(A1)]].
Eigen::MatrixXcd complex_adjoint(const QuatMatrix& m);

// Right spectrum of a Hermitian quaternionic matrix: the eigenvalues of the
// complex adjoint come in pairs; the halved multiset is returned. A pairing
// residual above 1e-7 raises NumericalError.
Spectrum right_spectrum(const QuatMatrix& m);

// Blockwise degree-2 image of a quaternionic matrix (each entry replaced by
// its 2x2 complex adjoint block).
Eigen::MatrixXcd pi_h_matrix(const QuatMatrix& m);

// True iff the explicit row/column shuffle permutation carries pi_h_matrix(m)
// onto complex_adjoint(m) within 1e-12.
bool shuffle_identity(const QuatMatrix& m);

// The degree-2 unitary representation of U(H) (1 -> I, i -> diag(i, -i), ...).
Representation pi_h_rep();

// Adjacency matrix of a U(H)-gain graph as a quaternionic matrix.
QuatMatrix quat_adjacency(const GainGraph& g);

// Sum of the gains from v into the cell, computed in H.
Quaternion psi_h_sum(const GainGraph& g, const std::string& v,
                     const std::vector<std::string>& cell);

// Quaternionic GM partition check: cell-regular gain sums in H; a C_0 row is a
// half/half swap row or has vanishing sum (then every gain is negated).
GMCheck check_quat_gm(const GainGraph& g, const Partition& alpha);

// apply_switch with s = -1 in the central branch.
GainGraph apply_quat_switch(const GainGraph& g, const Partition& alpha, const CellPlan& plan);

// Entrywise conjugation identity A' = Q_alpha A Q_alpha in M_n(H) within tol.
bool verify_quat_conjugation(const GainGraph& g, const Partition& alpha, const CellPlan& plan,
                             double tol = 1e-9);

}  // namespace gainsw
