#include "gainsw/representations.hpp"

#include <cmath>
#include <numbers>

namespace gainsw {

namespace {

Eigen::MatrixXcd scalar1x1(cplx v) {
  Eigen::MatrixXcd m(1, 1);
  m(0, 0) = v;
  return m;
}

cplx root_of_unity(int num, int den) {
  // exp(2 pi i num / den) with exact values on the axes
  const int r = ((num % den) + den) % den;
  if (4 * r % den == 0) {
    switch (4 * r / den) {
      case 0: return {1, 0};
      case 1: return {0, 1};
      case 2: return {-1, 0};
      case 3: return {0, -1};
    }
  }
  const double theta = 2.0 * std::numbers::pi * r / den;
  return {std::cos(theta), std::sin(theta)};
}

int permutation_sign(const std::vector<int>& p) {
  int sign = 1;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0, cur = i;
    while (!seen[cur]) {
      seen[cur] = true;
      cur = static_cast<std::size_t>(p[cur] - 1);
      ++len;
    }
    if (len % 2 == 0) sign = -sign;
  }
  return sign;
}

}  // namespace

double max_abs(const Eigen::MatrixXcd& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

Representation::Representation(const Group& g, int degree, std::string name,
                               std::function<Eigen::MatrixXcd(const GroupElement&)> image)
    : group_(g), degree_(degree), name_(std::move(name)), image_(std::move(image)) {
  if (degree_ < 1) fail("representation degree must be positive");
  if (group_.is_finite() && group_.order() <= 48) {
    auto cache = std::make_shared<std::vector<Eigen::MatrixXcd>>();
    cache->reserve(group_.order());
    for (const auto& x : elements(group_)) cache->push_back(image_(x));
    cache_ = std::move(cache);
  }
}

Eigen::MatrixXcd Representation::image(const GroupElement& g) const {
  if (g.group() != group_) fail("representation applied to an element of a different group");
  if (cache_) return (*cache_)[element_index(g)];
  return image_(g);
}

Representation trivial_rep(const Group& g) {
  return Representation(g, 1, "trivial", [](const GroupElement&) { return scalar1x1(1.0); });
}

Representation identical_rep(const Group& g) {
  if (g.kind() != GroupKind::Cyclic && g.kind() != GroupKind::RootsOfUnity)
    fail("the identical representation is defined for cyclic / roots-of-unity groups");
  const int n = g.param();
  return Representation(g, 1, "identical", [n](const GroupElement& x) {
    return scalar1x1(root_of_unity(x.exponent(), n));
  });
}

Representation character_rep(const Group& g, int t) {
  if (g.kind() == GroupKind::Cyclic || g.kind() == GroupKind::RootsOfUnity) {
    const int n = g.param();
    if (t < 0 || t >= n) fail("character index out of range for " + g.name());
    return Representation(g, 1, "char:" + std::to_string(t), [n, t](const GroupElement& x) {
      return scalar1x1(root_of_unity(t * x.exponent(), n));
    });
  }
  if (g.kind() == GroupKind::Dihedral && g.param() == 8) {
    if (t < 0 || t > 3) fail("D8 has four one-dimensional representations, char:0..char:3");
    const double sa = (t & 2) ? -1.0 : 1.0;
    const double sb = (t & 1) ? -1.0 : 1.0;
    return Representation(g, 1, "char:" + std::to_string(t), [sa, sb](const GroupElement& x) {
      const auto& d = x.dihedral();
      return scalar1x1((d.rot % 2 ? sa : 1.0) * (d.flip ? sb : 1.0));
    });
  }
  fail("char:<t> is available for cyclic, roots-of-unity, and D8 groups");
}

Representation sign_rep(const Group& g) {
  if (g.kind() != GroupKind::Symmetric) fail("the sign representation lives on symmetric groups");
  return Representation(g, 1, "sign", [](const GroupElement& x) {
    return scalar1x1(static_cast<double>(permutation_sign(x.perm())));
  });
}

Representation permutation_rep(const Group& g) {
  if (g.kind() != GroupKind::Symmetric)
    fail("the permutation representation lives on symmetric groups");
  const int n = g.param();
  return Representation(g, n, "permutation", [n](const GroupElement& x) {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
    for (int j = 0; j < n; ++j) m(x.perm()[static_cast<std::size_t>(j)] - 1, j) = 1.0;
    return m;
  });
}

Representation regular_rep(const Group& g) {
  if (!g.is_finite()) fail_unsupported("the regular representation requires a finite group");
  const auto all = elements(g);
  const int n = static_cast<int>(all.size());
  return Representation(g, n, "regular", [all, n](const GroupElement& x) {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
    for (int j = 0; j < n; ++j)
      m(static_cast<int>(element_index(mul(x, all[static_cast<std::size_t>(j)]))), j) = 1.0;
    return m;
  });
}

Representation dihedral2_rep(const Group& g) {
  if (g.kind() != GroupKind::Dihedral || g.param() != 8)
    fail("dihedral2 is the degree-2 representation of D8");
  return Representation(g, 2, "dihedral2", [](const GroupElement& x) {
    Eigen::Matrix2cd a, b;
    a << 0, -1, 1, 0;
    b << 1, 0, 0, -1;
    Eigen::Matrix2cd m = Eigen::Matrix2cd::Identity();
    for (int t = 0; t < x.dihedral().rot; ++t) m = m * a;
    if (x.dihedral().flip) m = m * b;
    return Eigen::MatrixXcd(m);
  });
}

Representation direct_sum(const Representation& p1, const Representation& p2) {
  if (p1.group() != p2.group()) fail("direct_sum: representations of different groups");
  const int k1 = p1.degree(), k2 = p2.degree();
  return Representation(
      p1.group(), k1 + k2, "sum:" + p1.name() + "+" + p2.name(),
      [p1, p2, k1, k2](const GroupElement& x) {
        Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(k1 + k2, k1 + k2);
        m.topLeftCorner(k1, k1) = p1.image(x);
        m.bottomRightCorner(k2, k2) = p2.image(x);
        return m;
      });
}

Representation parse_rep(const Group& g, const std::string& name) {
  if (name == "trivial") return trivial_rep(g);
  if (name == "identical") return identical_rep(g);
  if (name == "sign") return sign_rep(g);
  if (name == "permutation") return permutation_rep(g);
  if (name == "regular") return regular_rep(g);
  if (name == "dihedral2") return dihedral2_rep(g);
  if (name.rfind("char:", 0) == 0) {
    try {
      return character_rep(g, std::stoi(name.substr(5)));
    } catch (const std::invalid_argument&) {
      fail("bad character index in '" + name + "'");
    }
  }
  if (name.rfind("sum:", 0) == 0) {
    const std::string body = name.substr(4);
    const auto plus = body.find('+');
    if (plus == std::string::npos) fail("sum:<name>+<name> expects two summands: '" + name + "'");
    return direct_sum(parse_rep(g, body.substr(0, plus)), parse_rep(g, body.substr(plus + 1)));
  }
  fail("unknown representation '" + name + "' for group " + g.name());
}

std::vector<Representation> complete_system(const Group& g) {
  std::vector<Representation> out;
  if (g.kind() == GroupKind::Cyclic || g.kind() == GroupKind::RootsOfUnity) {
    for (int t = 0; t < g.param(); ++t) out.push_back(character_rep(g, t));
    return out;
  }
  if (g.kind() == GroupKind::Dihedral && g.param() == 8) {
    for (int t = 0; t < 4; ++t) out.push_back(character_rep(g, t));
    out.push_back(dihedral2_rep(g));
    return out;
  }
  fail_unsupported("complete irreducible systems are hand-coded for cyclic, roots-of-unity, "
                   "and D8 groups only; use the regular representation elsewhere");
}

Eigen::MatrixXcd apply_cg(const Representation& rep, const GAElement& f) {
  if (rep.group() != f.group()) fail("apply_cg: group mismatch");
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(rep.degree(), rep.degree());
  for (const auto& [x, c] : f.support()) out += c * rep.image(x);
  return out;
}

Eigen::MatrixXcd fourier(const Representation& rep, const GAMatrix& m) {
  if (rep.group() != m.group()) fail("fourier: group mismatch");
  const int k = rep.degree();
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(m.rows() * k, m.cols() * k);
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) {
      if (m.at(i, j).is_zero()) continue;
      out.block(i * k, j * k, k, k) = apply_cg(rep, m.at(i, j));
    }
  return out;
}

std::vector<GroupElement> kernel_elements(const Representation& rep) {
  if (!rep.group().is_finite()) fail_unsupported("kernel scan requires a finite group");
  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(rep.degree(), rep.degree());
  std::vector<GroupElement> out;
  for (const auto& x : elements(rep.group()))
    if (max_abs(rep.image(x) - id) <= kRepTol) out.push_back(x);
  return out;
}

std::optional<GroupElement> find_minus_identity(const Group& g, const Representation& rep) {
  if (rep.group() != g) fail("find_minus_identity: group mismatch");
  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(rep.degree(), rep.degree());
  if (!g.is_finite()) {
    const auto minus_one = make_unit_quaternion(-Quaternion::one());
    if (max_abs(rep.image(minus_one) + id) <= kRepTol) return minus_one;
    return std::nullopt;
  }
  for (const auto& x : elements(g))
    if (max_abs(rep.image(x) + id) <= kRepTol) return x;
  return std::nullopt;
}

}  // namespace gainsw
