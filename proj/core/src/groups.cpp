#include "gainsw/groups.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <set>
#include <sstream>

namespace gainsw {

namespace {

constexpr double kQuatEqTol = 1e-9;
constexpr double kQuatNormTol = 1e-6;

long long mod(long long a, long long n) {
  long long r = a % n;
  return r < 0 ? r + n : r;
}

[[noreturn]] void bad_kind() { fail("group element does not match its group kind"); }

}  // namespace

Group Group::cyclic(int n) {
  if (n < 1) fail("cyclic group order must be positive");
  return Group(GroupKind::Cyclic, n);
}

Group Group::roots_of_unity(int n) {
  if (n < 1) fail("roots-of-unity order must be positive");
  return Group(GroupKind::RootsOfUnity, n);
}

Group Group::dihedral(int order) {
  if (order < 2 || order % 2 != 0) fail("dihedral group order must be even and >= 2");
  return Group(GroupKind::Dihedral, order);
}

Group Group::symmetric(int n) {
  if (n < 1 || n > 8) fail("symmetric group degree must be in 1..8");
  return Group(GroupKind::Symmetric, n);
}

Group Group::unit_quaternions() { return Group(GroupKind::UnitQuaternion, 0); }

bool Group::is_abelian() const {
  switch (kind_) {
    case GroupKind::Cyclic:
    case GroupKind::RootsOfUnity: return true;
    case GroupKind::Dihedral: return n_ <= 4;  // D2, D4
    case GroupKind::Symmetric: return n_ <= 2;
    case GroupKind::UnitQuaternion: return false;
  }
  return false;
}

std::size_t Group::order() const {
  switch (kind_) {
    case GroupKind::Cyclic:
    case GroupKind::RootsOfUnity: return static_cast<std::size_t>(n_);
    case GroupKind::Dihedral: return static_cast<std::size_t>(n_);
    case GroupKind::Symmetric: {
      std::size_t f = 1;
      for (int i = 2; i <= n_; ++i) f *= static_cast<std::size_t>(i);
      return f;
    }
    case GroupKind::UnitQuaternion: fail_unsupported("U(H) is infinite; it has no element count");
  }
  return 0;
}

int Group::dihedral_n() const {
  if (kind_ != GroupKind::Dihedral) fail("dihedral_n on a non-dihedral group");
  return n_ / 2;
}

std::string Group::name() const {
  switch (kind_) {
    case GroupKind::Cyclic: return "C" + std::to_string(n_);
    case GroupKind::RootsOfUnity: return "mu" + std::to_string(n_);
    case GroupKind::Dihedral: return "D" + std::to_string(n_);
    case GroupKind::Symmetric: return "S" + std::to_string(n_);
    case GroupKind::UnitQuaternion: return "U(H)";
  }
  return "?";
}

std::string Group::kind_string() const {
  switch (kind_) {
    case GroupKind::Cyclic: return "cyclic";
    case GroupKind::RootsOfUnity: return "roots_of_unity";
    case GroupKind::Dihedral: return "dihedral";
    case GroupKind::Symmetric: return "symmetric";
    case GroupKind::UnitQuaternion: return "unit_quaternion";
  }
  return "?";
}

Group parse_group_kind(const std::string& kind, std::optional<int> n) {
  auto need_n = [&]() {
    if (!n) fail("group kind '" + kind + "' requires the field n");
    return *n;
  };
  if (kind == "cyclic") return Group::cyclic(need_n());
  if (kind == "roots_of_unity") return Group::roots_of_unity(need_n());
  if (kind == "dihedral") return Group::dihedral(need_n());
  if (kind == "symmetric") return Group::symmetric(need_n());
  if (kind == "unit_quaternion") return Group::unit_quaternions();
  fail("unknown group kind '" + kind + "'");
}

// ---- elements ----

GroupElement identity(const Group& g) {
  switch (g.kind()) {
    case GroupKind::Cyclic:
    case GroupKind::RootsOfUnity: return GroupElement(g, 0);
    case GroupKind::Dihedral: return GroupElement(g, GroupElement::DihedralData{0, false});
    case GroupKind::Symmetric: {
      std::vector<int> id(static_cast<std::size_t>(g.param()));
      std::iota(id.begin(), id.end(), 1);
      return GroupElement(g, std::move(id));
    }
    case GroupKind::UnitQuaternion: return GroupElement(g, Quaternion::one());
  }
  bad_kind();
}

GroupElement make_exponent(const Group& g, long long e) {
  if (g.kind() != GroupKind::Cyclic && g.kind() != GroupKind::RootsOfUnity)
    fail("exponent elements exist only in cyclic / roots-of-unity groups");
  return GroupElement(g, static_cast<int>(mod(e, g.param())));
}

GroupElement make_dihedral(const Group& g, int rot, bool flip) {
  if (g.kind() != GroupKind::Dihedral) fail("dihedral element in a non-dihedral group");
  return GroupElement(g, GroupElement::DihedralData{static_cast<int>(mod(rot, g.dihedral_n())), flip});
}

GroupElement make_permutation(const Group& g, std::vector<int> images) {
  if (g.kind() != GroupKind::Symmetric) fail("permutation element in a non-symmetric group");
  const int n = g.param();
  if (static_cast<int>(images.size()) != n) fail("permutation image length mismatch");
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int v : images) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v - 1)]) fail("not a permutation of 1..n");
    seen[static_cast<std::size_t>(v - 1)] = true;
  }
  return GroupElement(g, std::move(images));
}

GroupElement make_unit_quaternion(Quaternion q) {
  const double nrm = q.norm();
  if (std::abs(nrm - 1.0) > kQuatNormTol)
    fail("quaternion gain is not on the unit sphere (|q| = " + std::to_string(nrm) + ")");
  if (nrm != 1.0) q = q * (1.0 / nrm);
  return GroupElement(Group::unit_quaternions(), q);
}

bool GroupElement::is_identity() const { return *this == gainsw::identity(group_); }

bool GroupElement::operator==(const GroupElement& o) const {
  if (group_ != o.group_) return false;
  if (group_.kind() == GroupKind::UnitQuaternion)
    return q_close(std::get<Quaternion>(value_), std::get<Quaternion>(o.value_), kQuatEqTol);
  return value_ == o.value_;
}

bool GroupElement::operator<(const GroupElement& o) const {
  if (group_ != o.group_) fail("comparing elements of different groups");
  switch (group_.kind()) {
    case GroupKind::Cyclic:
    case GroupKind::RootsOfUnity: return std::get<int>(value_) < std::get<int>(o.value_);
    case GroupKind::Dihedral: {
      const auto& a = std::get<DihedralData>(value_);
      const auto& b = std::get<DihedralData>(o.value_);
      if (a.flip != b.flip) return !a.flip;
      return a.rot < b.rot;
    }
    case GroupKind::Symmetric:
      return std::get<std::vector<int>>(value_) < std::get<std::vector<int>>(o.value_);
    case GroupKind::UnitQuaternion:
      fail_unsupported("U(H) elements have no canonical order");
  }
  bad_kind();
}

int GroupElement::exponent() const {
  if (group_.kind() != GroupKind::Cyclic && group_.kind() != GroupKind::RootsOfUnity) bad_kind();
  return std::get<int>(value_);
}

const GroupElement::DihedralData& GroupElement::dihedral() const {
  if (group_.kind() != GroupKind::Dihedral) bad_kind();
  return std::get<DihedralData>(value_);
}

const std::vector<int>& GroupElement::perm() const {
  if (group_.kind() != GroupKind::Symmetric) bad_kind();
  return std::get<std::vector<int>>(value_);
}

const Quaternion& GroupElement::quaternion() const {
  if (group_.kind() != GroupKind::UnitQuaternion) bad_kind();
  return std::get<Quaternion>(value_);
}

GroupElement mul(const GroupElement& g, const GroupElement& h) {
  if (g.group() != h.group()) fail("multiplying elements of different groups");
  const Group& G = g.group();
  switch (G.kind()) {
    case GroupKind::Cyclic:
    case GroupKind::RootsOfUnity:
      return make_exponent(G, static_cast<long long>(g.exponent()) + h.exponent());
    case GroupKind::Dihedral: {
      // (a^r1 b^f1)(a^r2 b^f2) = a^(r1 + (-1)^f1 r2) b^(f1 xor f2)
      const auto& x = g.dihedral();
      const auto& y = h.dihedral();
      const long long r = x.rot + (x.flip ? -static_cast<long long>(y.rot) : y.rot);
      return make_dihedral(G, static_cast<int>(mod(r, G.dihedral_n())), x.flip != y.flip);
    }
    case GroupKind::Symmetric: {
      // Function composition: (g h)(x) = g(h(x)).
      const auto& a = g.perm();
      const auto& b = h.perm();
      std::vector<int> out(a.size());
      for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = a[static_cast<std::size_t>(b[i] - 1)];
      return make_permutation(G, std::move(out));
    }
    case GroupKind::UnitQuaternion:
      return make_unit_quaternion(g.quaternion() * h.quaternion());
  }
  bad_kind();
}

GroupElement inv(const GroupElement& g) {
  const Group& G = g.group();
  switch (G.kind()) {
    case GroupKind::Cyclic:
    case GroupKind::RootsOfUnity: return make_exponent(G, -static_cast<long long>(g.exponent()));
    case GroupKind::Dihedral: {
      const auto& x = g.dihedral();
      if (x.flip) return g;  // reflections are involutions
      return make_dihedral(G, -x.rot, false);
    }
    case GroupKind::Symmetric: {
      const auto& a = g.perm();
      std::vector<int> out(a.size());
      for (std::size_t i = 0; i < a.size(); ++i)
        out[static_cast<std::size_t>(a[i] - 1)] = static_cast<int>(i) + 1;
      return make_permutation(G, std::move(out));
    }
    case GroupKind::UnitQuaternion: return make_unit_quaternion(g.quaternion().conj());
  }
  bad_kind();
}

std::vector<GroupElement> elements(const Group& g) {
  if (!g.is_finite()) fail_unsupported("cannot enumerate the elements of U(H)");
  std::vector<GroupElement> out;
  out.reserve(g.order());
  switch (g.kind()) {
    case GroupKind::Cyclic:
    case GroupKind::RootsOfUnity:
      for (int e = 0; e < g.param(); ++e) out.push_back(make_exponent(g, e));
      break;
    case GroupKind::Dihedral:
      for (int f = 0; f <= 1; ++f)
        for (int r = 0; r < g.dihedral_n(); ++r) out.push_back(make_dihedral(g, r, f != 0));
      break;
    case GroupKind::Symmetric: {
      std::vector<int> p(static_cast<std::size_t>(g.param()));
      std::iota(p.begin(), p.end(), 1);
      do {
        out.push_back(make_permutation(g, p));
      } while (std::next_permutation(p.begin(), p.end()));
      break;
    }
    case GroupKind::UnitQuaternion: break;  // unreachable
  }
  return out;
}

std::size_t element_index(const GroupElement& g) {
  const Group& G = g.group();
  switch (G.kind()) {
    case GroupKind::Cyclic:
    case GroupKind::RootsOfUnity: return static_cast<std::size_t>(g.exponent());
    case GroupKind::Dihedral: {
      const auto& d = g.dihedral();
      return static_cast<std::size_t>(d.rot) +
             (d.flip ? static_cast<std::size_t>(G.dihedral_n()) : 0u);
    }
    case GroupKind::Symmetric: {
      // Lexicographic rank of the image array.
      const auto& p = g.perm();
      const int n = G.param();
      std::size_t rank = 0, f = 1;
      for (int i = 2; i <= n; ++i) f *= static_cast<std::size_t>(i);
      std::vector<bool> used(static_cast<std::size_t>(n), false);
      for (int i = 0; i < n; ++i) {
        f /= static_cast<std::size_t>(n - i);
        int smaller = 0;
        for (int v = 1; v < p[static_cast<std::size_t>(i)]; ++v)
          if (!used[static_cast<std::size_t>(v - 1)]) ++smaller;
        rank += static_cast<std::size_t>(smaller) * f;
        used[static_cast<std::size_t>(p[static_cast<std::size_t>(i)] - 1)] = true;
      }
      return rank;
    }
    case GroupKind::UnitQuaternion:
      fail_unsupported("U(H) elements have no enumeration index");
  }
  bad_kind();
}

std::vector<std::vector<GroupElement>> conjugacy_classes(const Group& g) {
  if (!g.is_finite()) fail_unsupported("conjugacy classes require a finite group");
  const auto all = elements(g);
  std::vector<bool> assigned(all.size(), false);
  std::vector<std::vector<GroupElement>> classes;
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (assigned[i]) continue;
    std::set<std::size_t> cls;
    for (const auto& h : all) {
      const auto c = mul(mul(h, all[i]), inv(h));
      cls.insert(element_index(c));
    }
    std::vector<GroupElement> members;
    for (std::size_t idx : cls) {
      assigned[idx] = true;
      members.push_back(all[idx]);
    }
    classes.push_back(std::move(members));
  }
  return classes;
}

// ---- parse / print ----

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::optional<long long> parse_int(std::string_view s) {
  s = trim(s);
  if (s.empty()) return std::nullopt;
  long long v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) return std::nullopt;
  return v;
}

GroupElement parse_exponent_element(const Group& g, std::string_view s) {
  s = trim(s);
  if (g.kind() == GroupKind::RootsOfUnity && g.param() == 4 && s == "i")
    return make_exponent(g, 1);
  if (auto v = parse_int(s)) return make_exponent(g, *v);
  fail("cannot parse '" + std::string(s) + "' as an exponent in " + g.name());
}

GroupElement parse_dihedral_element(const Group& g, std::string_view s) {
  s = trim(s);
  if (s == "e" || s == "1") return identity(g);
  bool flip = false;
  if (!s.empty() && s.back() == 'b') {
    flip = true;
    s.remove_suffix(1);
    s = trim(s);
  }
  if (s.empty()) return make_dihedral(g, 0, flip);
  if (s == "a") return make_dihedral(g, 1, flip);
  if (s.size() >= 2 && s[0] == 'a' && s[1] == '^') {
    if (auto v = parse_int(s.substr(2))) return make_dihedral(g, static_cast<int>(*v), flip);
  }
  fail("cannot parse '" + std::string(s) + "' as a dihedral element (expected a^p or a^p b)");
}

GroupElement parse_symmetric_element(const Group& g, std::string_view s) {
  s = trim(s);
  if (s == "e" || s == "1" || s == "()") return identity(g);
  auto result = identity(g);
  std::size_t pos = 0;
  bool any = false;
  while (pos < s.size()) {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos >= s.size()) break;
    if (s[pos] != '(') fail("expected '(' in cycle notation: '" + std::string(s) + "'");
    const std::size_t close = s.find(')', pos);
    if (close == std::string_view::npos) fail("unbalanced cycle in '" + std::string(s) + "'");
    std::string_view body = s.substr(pos + 1, close - pos - 1);
    std::vector<int> pts;
    std::size_t i = 0;
    while (i < body.size()) {
      if (std::isspace(static_cast<unsigned char>(body[i])) || body[i] == ',') {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < body.size() && std::isdigit(static_cast<unsigned char>(body[j]))) ++j;
      if (j == i) fail("bad cycle entry in '" + std::string(s) + "'");
      int v = 0;
      std::from_chars(body.data() + i, body.data() + j, v);
      // A run of digits without separators is a list of single-digit points: "(12)" = (1 2).
      if (j - i > 1 && body.find(' ') == std::string_view::npos &&
          body.find(',') == std::string_view::npos) {
        for (std::size_t t = i; t < j; ++t) pts.push_back(body[t] - '0');
      } else {
        pts.push_back(v);
      }
      i = j;
    }
    if (pts.size() < 2) fail("cycles need at least two points: '" + std::string(s) + "'");
    std::vector<int> images(static_cast<std::size_t>(g.param()));
    std::iota(images.begin(), images.end(), 1);
    for (std::size_t t = 0; t < pts.size(); ++t) {
      const int from = pts[t];
      const int to = pts[(t + 1) % pts.size()];
      if (from < 1 || from > g.param()) fail("cycle point out of range in '" + std::string(s) + "'");
      images[static_cast<std::size_t>(from - 1)] = to;
    }
    result = mul(result, make_permutation(g, std::move(images)));
    any = true;
    pos = close + 1;
  }
  if (!any) fail("cannot parse '" + std::string(s) + "' as a permutation");
  return result;
}

GroupElement parse_quaternion_element(std::string_view s) {
  s = trim(s);
  if (s == "1") return make_unit_quaternion(Quaternion::one());
  if (s == "-1") return make_unit_quaternion(-Quaternion::one());
  if (s == "i") return make_unit_quaternion(Quaternion::unit_i());
  if (s == "-i") return make_unit_quaternion(-Quaternion::unit_i());
  if (s == "j") return make_unit_quaternion(Quaternion::unit_j());
  if (s == "-j") return make_unit_quaternion(-Quaternion::unit_j());
  if (s == "k") return make_unit_quaternion(Quaternion::unit_k());
  if (s == "-k") return make_unit_quaternion(-Quaternion::unit_k());
  if (s.size() < 2 || s.front() != '[' || s.back() != ']')
    fail("cannot parse '" + std::string(s) + "' as a quaternion (expected [a,b,c,d])");
  std::string body(s.substr(1, s.size() - 2));
  std::replace(body.begin(), body.end(), ',', ' ');
  std::istringstream in(body);
  double comp[4];
  for (double& x : comp)
    if (!(in >> x)) fail("quaternion needs four components: '" + std::string(s) + "'");
  std::string rest;
  if (in >> rest) fail("trailing data in quaternion '" + std::string(s) + "'");
  return make_unit_quaternion({comp[0], comp[1], comp[2], comp[3]});
}

std::string format_quaternion(const Quaternion& q) {
  auto clean = [](double x) { return x == 0.0 ? 0.0 : x; };  // drop negative zero
  char buf[128];
  std::snprintf(buf, sizeof buf, "[%.17g,%.17g,%.17g,%.17g]", clean(q.a), clean(q.b),
                clean(q.c), clean(q.d));
  return buf;
}

}  // namespace

GroupElement parse_element(const Group& g, std::string_view text) {
  switch (g.kind()) {
    case GroupKind::Cyclic:
    case GroupKind::RootsOfUnity: return parse_exponent_element(g, text);
    case GroupKind::Dihedral: return parse_dihedral_element(g, text);
    case GroupKind::Symmetric: return parse_symmetric_element(g, text);
    case GroupKind::UnitQuaternion: return parse_quaternion_element(text);
  }
  bad_kind();
}

std::string format_element(const GroupElement& g) {
  switch (g.group().kind()) {
    case GroupKind::Cyclic:
    case GroupKind::RootsOfUnity: return std::to_string(g.exponent());
    case GroupKind::Dihedral: {
      const auto& d = g.dihedral();
      std::string s = "a^" + std::to_string(d.rot);
      if (d.flip) s += " b";
      return s;
    }
    case GroupKind::Symmetric: {
      const auto& p = g.perm();
      const int n = g.group().param();
      std::vector<bool> seen(static_cast<std::size_t>(n), false);
      std::string out;
      for (int start = 1; start <= n; ++start) {
        if (seen[static_cast<std::size_t>(start - 1)]) continue;
        std::vector<int> cycle{start};
        seen[static_cast<std::size_t>(start - 1)] = true;
        int cur = p[static_cast<std::size_t>(start - 1)];
        while (cur != start) {
          cycle.push_back(cur);
          seen[static_cast<std::size_t>(cur - 1)] = true;
          cur = p[static_cast<std::size_t>(cur - 1)];
        }
        if (cycle.size() < 2) continue;
        out += '(';
        for (std::size_t i = 0; i < cycle.size(); ++i) {
          if (i) out += ' ';
          out += std::to_string(cycle[i]);
        }
        out += ')';
      }
      return out.empty() ? "e" : out;
    }
    case GroupKind::UnitQuaternion: return format_quaternion(g.quaternion());
  }
  bad_kind();
}

std::string format_element_display(const GroupElement& g) {
  const Group& G = g.group();
  if (G.kind() == GroupKind::RootsOfUnity && G.param() == 4) {
    static const char* names[4] = {"1", "i", "-1", "-i"};
    return names[g.exponent()];
  }
  if (G.kind() == GroupKind::UnitQuaternion) {
    static const std::pair<Quaternion, const char*> aliases[] = {
        {Quaternion::one(), "1"},     {-Quaternion::one(), "-1"},
        {Quaternion::unit_i(), "i"},  {-Quaternion::unit_i(), "-i"},
        {Quaternion::unit_j(), "j"},  {-Quaternion::unit_j(), "-j"},
        {Quaternion::unit_k(), "k"},  {-Quaternion::unit_k(), "-k"},
    };
    for (const auto& [q, name] : aliases)
      if (q_close(g.quaternion(), q, 1e-12)) return name;
  }
  return format_element(g);
}

}  // namespace gainsw
