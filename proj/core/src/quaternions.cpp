#include "gainsw/quaternions.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace gainsw {

Quaternion q_inv(const Quaternion& q) {
  const double n2 = q.norm_sq();
  if (n2 == 0.0) fail("q_inv: zero quaternion has no inverse");
  return q.conj() * (1.0 / n2);
}

std::complex<double> canonical_class(const Quaternion& q) {
  return {q.a, std::sqrt(q.b * q.b + q.c * q.c + q.d * q.d)};
}

QuatMatrix::QuatMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) fail("matrix dimensions must be nonnegative");
  entries_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols),
                  Quaternion::zero());
}

const Quaternion& QuatMatrix::at(int i, int j) const {
  if (i < 0 || i >= rows_ || j < 0 || j >= cols_) fail("matrix index out of range");
  return entries_[static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) +
                  static_cast<std::size_t>(j)];
}

Quaternion& QuatMatrix::at(int i, int j) {
  return const_cast<Quaternion&>(static_cast<const QuatMatrix&>(*this).at(i, j));
}

QuatMatrix QuatMatrix::identity(int n) {
  QuatMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Quaternion::one();
  return m;
}

QuatMatrix QuatMatrix::conj_transpose() const {
  QuatMatrix out(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j).conj();
  return out;
}

bool QuatMatrix::is_hermitian(double tol) const {
  if (rows_ != cols_) return false;
  return qm_close(*this, conj_transpose(), tol);
}

QuatMatrix qm_add(const QuatMatrix& a, const QuatMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) fail("qm_add: shape mismatch");
  QuatMatrix out(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j) + b.at(i, j);
  return out;
}

QuatMatrix qm_mul(const QuatMatrix& a, const QuatMatrix& b) {
  if (a.cols() != b.rows()) fail("qm_mul: inner dimensions do not match");
  QuatMatrix out(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      const Quaternion& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < b.cols(); ++j) out.at(i, j) += aik * b.at(k, j);
    }
  return out;
}

bool qm_close(const QuatMatrix& a, const QuatMatrix& b, double tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (!q_close(a.at(i, j), b.at(i, j), tol)) return false;
  return true;
}

Eigen::MatrixXcd complex_adjoint(const QuatMatrix& m) {
  const int r = m.rows(), c = m.cols();
  Eigen::MatrixXcd out(2 * r, 2 * c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) {
      const cplx a1 = m.at(i, j).part1();
      const cplx a2 = m.at(i, j).part2();
      out(i, j) = a1;
      out(i, c + j) = a2;
      out(r + i, j) = -std::conj(a2);
      out(r + i, c + j) = std::conj(a1);
    }
  return out;
}

Spectrum right_spectrum(const QuatMatrix& m) {
  if (!m.is_hermitian()) fail("right_spectrum: matrix is not Hermitian within 1e-9");
  const auto doubled = hermitian_eigs(complex_adjoint(m)).eigenvalues;
  Spectrum out;
  for (std::size_t i = 0; i + 1 < doubled.size(); i += 2) {
    if (std::abs(doubled[i] - doubled[i + 1]) > 1e-7)
      throw NumericalError("right_spectrum: the doubled spectrum does not pair within 1e-7 "
                           "(residual " + std::to_string(doubled[i + 1] - doubled[i]) + ")");
    out.eigenvalues.push_back(0.5 * (doubled[i] + doubled[i + 1]));
  }
  return out;
}

Eigen::MatrixXcd pi_h_matrix(const QuatMatrix& m) {
  const int r = m.rows(), c = m.cols();
  Eigen::MatrixXcd out(2 * r, 2 * c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) {
      const cplx a1 = m.at(i, j).part1();
      const cplx a2 = m.at(i, j).part2();
      out(2 * i, 2 * j) = a1;
      out(2 * i, 2 * j + 1) = a2;
      out(2 * i + 1, 2 * j) = -std::conj(a2);
      out(2 * i + 1, 2 * j + 1) = std::conj(a1);
    }
  return out;
}

bool shuffle_identity(const QuatMatrix& m) {
  if (m.rows() != m.cols()) fail("shuffle_identity: matrix must be square");
  const int n = m.rows();
  // tau on {1..2n}: 2k -> n+k, 2k+1 -> k+1. C_tau has e_{tau^-1(b)} as its
  // b-th column; R_tau is its transpose.
  std::vector<int> tau(static_cast<std::size_t>(2 * n) + 1, 0);
  for (int r = 1; r <= 2 * n; ++r)
    tau[static_cast<std::size_t>(r)] = (r % 2 == 0) ? n + r / 2 : r / 2 + 1;
  Eigen::MatrixXcd c_tau = Eigen::MatrixXcd::Zero(2 * n, 2 * n);
  for (int r = 1; r <= 2 * n; ++r)
    c_tau(r - 1, tau[static_cast<std::size_t>(r)] - 1) = 1.0;
  const Eigen::MatrixXcd r_tau = c_tau.transpose();
  const Eigen::MatrixXcd lhs = r_tau * pi_h_matrix(m) * c_tau;
  return max_abs(lhs - complex_adjoint(m)) <= 1e-12;
}

Representation pi_h_rep() {
  return Representation(Group::unit_quaternions(), 2, "piH", [](const GroupElement& x) {
    QuatMatrix m(1, 1);
    m.at(0, 0) = x.quaternion();
    return complex_adjoint(m);
  });
}

QuatMatrix quat_adjacency(const GainGraph& g) {
  if (g.group().kind() != GroupKind::UnitQuaternion)
    fail("quat_adjacency expects a U(H)-gain graph");
  QuatMatrix a(g.vertex_count(), g.vertex_count());
  for (const auto& [u, v, gain] : g.edges()) {
    a.at(u, v) = gain.quaternion();
    a.at(v, u) = gain.quaternion().conj();
  }
  return a;
}

Quaternion psi_h_sum(const GainGraph& g, const std::string& v,
                     const std::vector<std::string>& cell) {
  const int vi = g.index_of(v);
  Quaternion out = Quaternion::zero();
  for (const auto& label : cell) {
    const int w = g.index_of(label);
    if (w == vi) continue;
    if (const auto gain = g.gain(vi, w)) out += gain->quaternion();
  }
  return out;
}

namespace {

constexpr double kQuatSumTol = 1e-9;

Quaternion psi_h_indices(const GainGraph& g, int v, const std::vector<int>& cell) {
  Quaternion out = Quaternion::zero();
  for (int w : cell) {
    if (w == v) continue;
    if (const auto gain = g.gain(v, w)) out += gain->quaternion();
  }
  return out;
}

}  // namespace

GMCheck check_quat_gm(const GainGraph& g, const Partition& alpha) {
  if (g.group().kind() != GroupKind::UnitQuaternion)
    fail("check_quat_gm expects a U(H)-gain graph");
  const auto cells = resolve_partition(g, alpha);
  const int k = static_cast<int>(cells.size()) - 1;
  GMCheck result;

  for (int i = 1; i <= k; ++i) {
    const auto& cell = cells[static_cast<std::size_t>(i)];
    for (std::size_t vi = 1; vi < cell.size(); ++vi) {
      for (int j = 1; j <= k; ++j) {
        const auto ref = psi_h_indices(g, cell[0], cells[static_cast<std::size_t>(j)]);
        const auto cur = psi_h_indices(g, cell[vi], cells[static_cast<std::size_t>(j)]);
        if (!q_close(ref, cur, kQuatSumTol)) {
          result.fail_cell = i;
          result.fail_vertex = g.label(cell[vi]);
          result.fail_ref_vertex = g.label(cell[0]);
          std::ostringstream msg;
          msg << "not a quaternionic GM partition: in cell C" << i << ", vertices "
              << result.fail_ref_vertex << " and " << result.fail_vertex
              << " have different gain sums into C" << j;
          result.failure = msg.str();
          return result;
        }
      }
    }
  }

  const auto minus_one = make_unit_quaternion(-Quaternion::one());
  CellPlan plan;
  for (int v : cells[0]) {
    for (int i = 1; i <= k; ++i) {
      const auto& cell = cells[static_cast<std::size_t>(i)];
      auto swap_action = detail::classify_swap_row(g, v, cell);
      const bool sum_vanishes = psi_h_indices(g, v, cell).is_zero(kQuatSumTol);
      if (swap_action && sum_vanishes && swap_action->kind == CellAction::Kind::Swap) {
        plan.notices.push_back("(" + g.label(v) + ", C" + std::to_string(i) +
                               "): swap and central cases both hold; swap takes priority");
      }
      if (swap_action) {
        plan.actions.emplace(std::make_pair(v, i), *swap_action);
      } else if (sum_vanishes) {
        plan.actions.emplace(std::make_pair(v, i), CellAction::central(minus_one));
      } else {
        result.fail_cell = i;
        result.fail_vertex = g.label(v);
        std::ostringstream msg;
        msg << "not a quaternionic GM partition: the gains from " << g.label(v) << " into C"
            << i << " are not half/half over two values and their sum does not vanish";
        result.failure = msg.str();
        return result;
      }
    }
  }
  result.plan = std::move(plan);
  return result;
}

GainGraph apply_quat_switch(const GainGraph& g, const Partition& alpha, const CellPlan& plan) {
  return apply_switch(g, alpha, plan);
}

bool verify_quat_conjugation(const GainGraph& g, const Partition& alpha, const CellPlan& plan,
                             double tol) {
  const auto cells = resolve_partition(g, alpha);
  const int n = g.vertex_count();
  QuatMatrix q(n, n);
  {
    // Same entrywise definition as build_qalpha, with real quaternion entries.
    std::vector<int> cell_of(static_cast<std::size_t>(n), -1);
    for (std::size_t c = 0; c < cells.size(); ++c)
      for (int v : cells[c]) cell_of[static_cast<std::size_t>(v)] = static_cast<int>(c);
    for (int u = 0; u < n; ++u) {
      const int cu = cell_of[static_cast<std::size_t>(u)];
      const double ni = static_cast<double>(cells[static_cast<std::size_t>(cu)].size());
      for (int v = 0; v < n; ++v) {
        if (cell_of[static_cast<std::size_t>(v)] != cu) continue;
        if (u == v) q.at(u, v) = Quaternion::real(cu == 0 ? 1.0 : (2.0 - ni) / ni);
        else if (cu != 0) q.at(u, v) = Quaternion::real(2.0 / ni);
      }
    }
  }
  const auto a = quat_adjacency(g);
  const auto a_switched = quat_adjacency(apply_quat_switch(g, alpha, plan));
  return qm_close(qm_mul(qm_mul(q, a), q), a_switched, tol);
}

}  // namespace gainsw
