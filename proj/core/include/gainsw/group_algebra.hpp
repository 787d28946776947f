#pragma once

#include <complex>
#include <map>
#include <string>

#include "gainsw/groups.hpp"

namespace gainsw {

using cplx = std::complex<double>;

// Tolerance for group-algebra / matrix comparisons over double coefficients.
constexpr double kGATol = 1e-12;

// A finitely supported element of the group algebra CG. Exact zeros are pruned.
// Quaternionic gains never enter CG; construction over U(H) is rejected.
class GAElement {
 public:
  explicit GAElement(const Group& g);
  static GAElement zero(const Group& g) { return GAElement(g); }
  static GAElement basis(const GroupElement& x, cplx coeff = 1.0);

  const Group& group() const { return group_; }
  const std::map<GroupElement, cplx>& support() const { return support_; }
  std::size_t support_size() const { return support_.size(); }
  bool is_zero() const { return support_.empty(); }
  cplx coeff(const GroupElement& x) const;

  void add_term(const GroupElement& x, cplx coeff);

 private:
  Group group_;
  std::map<GroupElement, cplx> support_;
};

GAElement ga_add(const GAElement& f, const GAElement& h);
GAElement ga_sub(const GAElement& f, const GAElement& h);
GAElement ga_scale(cplx c, const GAElement& f);
GAElement ga_mul(const GAElement& f, const GAElement& h);
GAElement ga_star(const GAElement& f);

// Equality up to kGATol on the union of supports.
bool ga_equal(const GAElement& f, const GAElement& h, double tol = kGATol);
bool ga_is_zero(const GAElement& f, double tol = kGATol);

// "c1*g1 + c2*g2 + ..." in canonical element order; "0" when empty.
std::string format_ga(const GAElement& f);

// A class function on a finite group, keyed by the minimal element of each
// conjugacy class in the canonical ordering.
class ClassFunction {
 public:
  ClassFunction(const Group& g, std::map<GroupElement, cplx> values)
      : group_(g), values_(std::move(values)) {}
  const Group& group() const { return group_; }
  const std::map<GroupElement, cplx>& values() const { return values_; }

 private:
  Group group_;
  std::map<GroupElement, cplx> values_;
};

// Sum of coefficients over each conjugacy class. Throws on infinite groups.
ClassFunction ga_mu(const GAElement& f);

bool class_function_equal(const ClassFunction& a, const ClassFunction& b, double tol = kGATol);

}  // namespace gainsw
