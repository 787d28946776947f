#include "gainsw/gg_matrix.hpp"

#include <algorithm>

namespace gainsw {

namespace {

void check_same_group(const GAMatrix& m, const GAMatrix& n, const char* op) {
  if (m.group() != n.group()) fail(std::string(op) + ": matrices over different groups");
}

void check_same_shape(const GAMatrix& m, const GAMatrix& n, const char* op) {
  if (m.rows() != n.rows() || m.cols() != n.cols())
    fail(std::string(op) + ": shape mismatch");
}

}  // namespace

GAMatrix::GAMatrix(const Group& g, int rows, int cols)
    : group_(g), rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) fail("matrix dimensions must be nonnegative");
  entries_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols),
                  GAElement(g));
}

std::size_t GAMatrix::index(int i, int j) const {
  if (i < 0 || i >= rows_ || j < 0 || j >= cols_) fail("matrix index out of range");
  return static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) +
         static_cast<std::size_t>(j);
}

GAMatrix GAMatrix::identity(const Group& g, int n) {
  GAMatrix m(g, n, n);
  const auto one = gainsw::identity(g);
  for (int i = 0; i < n; ++i) m.at(i, i).add_term(one, 1.0);
  return m;
}

GAMatrix GAMatrix::ones(const Group& g, int rows, int cols) {
  GAMatrix m(g, rows, cols);
  const auto one = gainsw::identity(g);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.at(i, j).add_term(one, 1.0);
  return m;
}

GAMatrix mat_add(const GAMatrix& m, const GAMatrix& n) {
  check_same_group(m, n, "mat_add");
  check_same_shape(m, n, "mat_add");
  GAMatrix out(m.group(), m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out.at(i, j) = ga_add(m.at(i, j), n.at(i, j));
  return out;
}

GAMatrix mat_sub(const GAMatrix& m, const GAMatrix& n) {
  check_same_group(m, n, "mat_sub");
  check_same_shape(m, n, "mat_sub");
  GAMatrix out(m.group(), m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out.at(i, j) = ga_sub(m.at(i, j), n.at(i, j));
  return out;
}

GAMatrix mat_scale(cplx c, const GAMatrix& m) {
  GAMatrix out(m.group(), m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out.at(i, j) = ga_scale(c, m.at(i, j));
  return out;
}

GAMatrix mat_mul(const GAMatrix& m, const GAMatrix& n) {
  check_same_group(m, n, "mat_mul");
  if (m.cols() != n.rows()) fail("mat_mul: inner dimensions do not match");
  GAMatrix out(m.group(), m.rows(), n.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int k = 0; k < m.cols(); ++k) {
      const GAElement& mik = m.at(i, k);
      if (mik.is_zero()) continue;
      for (int j = 0; j < n.cols(); ++j) {
        if (n.at(k, j).is_zero()) continue;
        out.at(i, j) = ga_add(out.at(i, j), ga_mul(mik, n.at(k, j)));
      }
    }
  return out;
}

GAMatrix mat_star(const GAMatrix& m) {
  GAMatrix out(m.group(), m.cols(), m.rows());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out.at(j, i) = ga_star(m.at(i, j));
  return out;
}

GAMatrix mat_pow(const GAMatrix& m, int h) {
  if (m.rows() != m.cols()) fail("mat_pow: matrix must be square");
  if (h < 0) fail("mat_pow: exponent must be nonnegative");
  GAMatrix out = GAMatrix::identity(m.group(), m.rows());
  for (int t = 0; t < h; ++t) out = mat_mul(out, m);
  return out;
}

GAElement mat_trace(const GAMatrix& m) {
  if (m.rows() != m.cols()) fail("mat_trace: matrix must be square");
  GAElement out(m.group());
  for (int i = 0; i < m.rows(); ++i) out = ga_add(out, m.at(i, i));
  return out;
}

bool mat_equal(const GAMatrix& m, const GAMatrix& n, double tol) {
  if (m.group() != n.group() || m.rows() != n.rows() || m.cols() != n.cols()) return false;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (!ga_equal(m.at(i, j), n.at(i, j), tol)) return false;
  return true;
}

GAMatrix build_qn(int n, const Group& g) {
  if (n < 1) fail("build_qn: n must be positive");
  return mat_sub(mat_scale(2.0 / n, GAMatrix::ones(g, n, n)), GAMatrix::identity(g, n));
}

GAMatrix build_qalpha(const std::vector<std::vector<int>>& cells, const Group& g) {
  if (cells.empty()) fail("build_qalpha: partition needs at least the C_0 cell");
  int n = 0;
  for (const auto& cell : cells) n += static_cast<int>(cell.size());
  std::vector<int> cell_of(static_cast<std::size_t>(n), -1);
  for (std::size_t c = 0; c < cells.size(); ++c) {
    if (c > 0 && cells[c].empty()) fail("build_qalpha: cells C_1..C_k must be nonempty");
    for (int v : cells[c]) {
      if (v < 0 || v >= n || cell_of[static_cast<std::size_t>(v)] != -1)
        fail("build_qalpha: cells must partition 0..n-1");
      cell_of[static_cast<std::size_t>(v)] = static_cast<int>(c);
    }
  }
  const auto one = identity(g);
  GAMatrix q(g, n, n);
  for (int u = 0; u < n; ++u) {
    const int cu = cell_of[static_cast<std::size_t>(u)];
    const double ni = static_cast<double>(cells[static_cast<std::size_t>(cu)].size());
    for (int v = 0; v < n; ++v) {
      if (cell_of[static_cast<std::size_t>(v)] != cu) continue;
      if (u == v)
        q.at(u, v).add_term(one, cu == 0 ? 1.0 : (2.0 - ni) / ni);
      else if (cu != 0)
        q.at(u, v).add_term(one, 2.0 / ni);
    }
  }
  return q;
}

}  // namespace gainsw
