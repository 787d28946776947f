#pragma once

#include <Eigen/Dense>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gainsw/gg_matrix.hpp"

namespace gainsw {

constexpr double kRepTol = 1e-9;

// A unitary representation: degree-k homomorphism into U_k(C), held as an
// image function (finite groups cache all |G| images).
class Representation {
 public:
  Representation(const Group& g, int degree, std::string name,
                 std::function<Eigen::MatrixXcd(const GroupElement&)> image);

  const Group& group() const { return group_; }
  int degree() const { return degree_; }
  const std::string& name() const { return name_; }

  Eigen::MatrixXcd image(const GroupElement& g) const;

 private:
  Group group_;
  int degree_;
  std::string name_;
  std::function<Eigen::MatrixXcd(const GroupElement&)> image_;
  std::shared_ptr<std::vector<Eigen::MatrixXcd>> cache_;  // finite groups, by element_index
};

Representation trivial_rep(const Group& g);
Representation identical_rep(const Group& g);        // Cyclic / RootsOfUnity
Representation character_rep(const Group& g, int t); // chi_t; Dihedral(8) gets its 4 one-dim reps
Representation sign_rep(const Group& g);             // Symmetric
Representation permutation_rep(const Group& g);      // Symmetric, degree n
Representation regular_rep(const Group& g);          // lambda_G, finite groups
Representation dihedral2_rep(const Group& g);        // Dihedral(8) degree-2 faithful rep
Representation direct_sum(const Representation& p1, const Representation& p2);

// Representation names used on the CLI:
//   trivial | identical | sign | permutation | regular | dihedral2 | char:<t>
//   | sum:<name>+<name>
Representation parse_rep(const Group& g, const std::string& name);

// Hand-coded complete irreducible systems: Cyclic(n), RootsOfUnity(n), Dihedral(8).
std::vector<Representation> complete_system(const Group& g);

// Linear extension of pi to CG: sum f_x pi(x).
Eigen::MatrixXcd apply_cg(const Representation& rep, const GAElement& f);

// Blockwise extension to CG matrices (Fourier transform at pi).
Eigen::MatrixXcd fourier(const Representation& rep, const GAMatrix& m);

// All g with ||pi(g) - I||_max <= kRepTol. Finite groups only.
std::vector<GroupElement> kernel_elements(const Representation& rep);

// Some s with pi(s) = -I (within kRepTol), or nullopt. Finite groups are
// scanned; for U(H) the element -1 is tested directly.
std::optional<GroupElement> find_minus_identity(const Group& g, const Representation& rep);

double max_abs(const Eigen::MatrixXcd& m);

}  // namespace gainsw
