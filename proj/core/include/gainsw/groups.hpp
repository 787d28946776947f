#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "gainsw/errors.hpp"
#include "gainsw/quaternion.hpp"

namespace gainsw {

enum class GroupKind { Cyclic, RootsOfUnity, Dihedral, Symmetric, UnitQuaternion };

// A supported gain group. Value type, cheap to copy.
class Group {
 public:
  static Group cyclic(int n);          // C_n, n >= 1
  static Group roots_of_unity(int n);  // mu_n, subgroup of the unit circle
  static Group dihedral(int order);    // D_order, order = 2n even, n >= 1
  static Group symmetric(int n);       // S_n, 1 <= n <= 8
  static Group unit_quaternions();     // U(H), infinite

  GroupKind kind() const { return kind_; }
  int param() const { return n_; }  // n for Cyclic/RootsOfUnity/Symmetric, order for Dihedral
  bool is_finite() const { return kind_ != GroupKind::UnitQuaternion; }
  bool is_abelian() const;
  std::size_t order() const;  // throws on infinite group

  // n for the rotation subgroup of the dihedral group (order / 2).
  int dihedral_n() const;

  std::string name() const;       // e.g. "C4", "mu4", "D8", "S4", "U(H)"
  std::string kind_string() const;  // file-format kind field

  bool operator==(const Group& o) const { return kind_ == o.kind_ && n_ == o.n_; }
  bool operator!=(const Group& o) const { return !(*this == o); }

 private:
  Group(GroupKind k, int n) : kind_(k), n_(n) {}
  GroupKind kind_;
  int n_;
};

Group parse_group_kind(const std::string& kind, std::optional<int> n);

class GroupElement {
 public:
  struct DihedralData {
    int rot;
    bool flip;
    auto operator<=>(const DihedralData&) const = default;
  };

  const Group& group() const { return group_; }

  bool is_identity() const;
  bool operator==(const GroupElement& o) const;
  bool operator!=(const GroupElement& o) const { return !(*this == o); }
  // Canonical strict order (finite kinds only); used to key group-algebra supports
  // and to make element enumeration deterministic.
  bool operator<(const GroupElement& o) const;

  int exponent() const;             // Cyclic / RootsOfUnity
  const DihedralData& dihedral() const;
  const std::vector<int>& perm() const;  // Symmetric: perm[i-1] = image of i (1-based)
  const Quaternion& quaternion() const;

  friend GroupElement make_exponent(const Group& g, long long e);
  friend GroupElement make_dihedral(const Group& g, int rot, bool flip);
  friend GroupElement make_permutation(const Group& g, std::vector<int> images);
  friend GroupElement make_unit_quaternion(Quaternion q);
  friend GroupElement identity(const Group& g);

 private:
  GroupElement(Group g, std::variant<int, DihedralData, std::vector<int>, Quaternion> v)
      : group_(g), value_(std::move(v)) {}
  Group group_;
  std::variant<int, DihedralData, std::vector<int>, Quaternion> value_;
};

GroupElement identity(const Group& g);
GroupElement make_exponent(const Group& g, long long e);
GroupElement make_dihedral(const Group& g, int rot, bool flip);
GroupElement make_permutation(const Group& g, std::vector<int> images);
// Rejects quaternions whose norm is farther than 1e-6 from 1; normalizes otherwise.
GroupElement make_unit_quaternion(Quaternion q);

GroupElement mul(const GroupElement& g, const GroupElement& h);
GroupElement inv(const GroupElement& g);

// All |G| elements in canonical order, identity first. Throws on infinite groups.
std::vector<GroupElement> elements(const Group& g);
// Position of g in elements(group()); throws on infinite groups.
std::size_t element_index(const GroupElement& g);

// Partition of elements(G) into conjugacy classes, each class sorted canonically,
// classes ordered by their minimal element.
std::vector<std::vector<GroupElement>> conjugacy_classes(const Group& g);

// Parse/print grammar:
//   Cyclic/RootsOfUnity : integer exponent ("2"); "i" accepted when n = 4
//   Dihedral            : "a^p" / "a^p b" (also "e", "a", "b", "ab", "a^2b")
//   Symmetric           : cycle notation "(1 2)(3 4)" or "(12)(34)"; "e" for identity
//   UnitQuaternion      : "[a,b,c,d]"; aliases "1", "-1", "i", "j", "k"
GroupElement parse_element(const Group& g, std::string_view text);
std::string format_element(const GroupElement& g);
// Like format_element, but renders RootsOfUnity(4) as 1, i, -1, -i. Used by
// group-algebra pretty printing; graph files always use format_element.
std::string format_element_display(const GroupElement& g);

}  // namespace gainsw
