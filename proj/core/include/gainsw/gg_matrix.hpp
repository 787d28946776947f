#pragma once

#include <vector>

#include "gainsw/group_algebra.hpp"

namespace gainsw {

// Dense matrix over the group algebra CG. All instances in this tool are
// desk-scale (n <= 16); no sparse machinery.
class GAMatrix {
 public:
  GAMatrix(const Group& g, int rows, int cols);

  const Group& group() const { return group_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  const GAElement& at(int i, int j) const { return entries_[index(i, j)]; }
  GAElement& at(int i, int j) { return entries_[index(i, j)]; }

  static GAMatrix identity(const Group& g, int n);
  static GAMatrix ones(const Group& g, int rows, int cols);  // J, every entry 1_G

 private:
  std::size_t index(int i, int j) const;
  Group group_;
  int rows_, cols_;
  std::vector<GAElement> entries_;
};

GAMatrix mat_add(const GAMatrix& m, const GAMatrix& n);
GAMatrix mat_sub(const GAMatrix& m, const GAMatrix& n);
GAMatrix mat_scale(cplx c, const GAMatrix& m);
GAMatrix mat_mul(const GAMatrix& m, const GAMatrix& n);
GAMatrix mat_star(const GAMatrix& m);
GAMatrix mat_pow(const GAMatrix& m, int h);  // h >= 0, M^0 = I
GAElement mat_trace(const GAMatrix& m);

bool mat_equal(const GAMatrix& m, const GAMatrix& n, double tol = kGATol);

// Q_n = (2/n) J - I; symmetric, involutive, entries real multiples of 1_G.
GAMatrix build_qn(int n, const Group& g);

// Block-assembled switching matrix for a partition {C_0,...,C_k} given as
// cells of row indices covering 0..n-1 (cells[0] = C_0, may be empty).
// Defined entrywise, so it is valid in any vertex order:
//   1_G on the C_0 diagonal, (2-n_i)/n_i on the C_i diagonal,
//   2/n_i between distinct vertices of the same C_i, 0 elsewhere.
GAMatrix build_qalpha(const std::vector<std::vector<int>>& cells, const Group& g);

}  // namespace gainsw
