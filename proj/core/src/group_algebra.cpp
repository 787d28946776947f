#include "gainsw/group_algebra.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace gainsw {

namespace {

void check_same_group(const GAElement& f, const GAElement& h, const char* op) {
  if (f.group() != h.group())
    fail(std::string(op) + ": group algebra elements over different groups (" +
         f.group().name() + " vs " + h.group().name() + ")");
}

std::string format_coeff(cplx c) {
  auto fmt = [](double x) {
    if (std::abs(x - std::round(x)) <= 1e-9 && std::abs(x) < 1e15) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%lld", static_cast<long long>(std::llround(x)));
      return std::string(buf);
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.10g", x);
    return std::string(buf);
  };
  const double re = c.real(), im = c.imag();
  if (std::abs(im) <= 1e-12) return fmt(re);
  if (std::abs(re) <= 1e-12) {
    if (std::abs(im - 1) <= 1e-12) return "i";
    if (std::abs(im + 1) <= 1e-12) return "-i";
    return fmt(im) + "i";
  }
  std::string s = "(" + fmt(re);
  s += im < 0 ? "-" : "+";
  s += fmt(std::abs(im)) + "i)";
  return s;
}

}  // namespace

GAElement::GAElement(const Group& g) : group_(g) {
  if (!g.is_finite())
    fail_unsupported("group algebra elements over U(H) are not supported; "
                     "the quaternion pipeline works in H directly");
}

GAElement GAElement::basis(const GroupElement& x, cplx coeff) {
  GAElement f(x.group());
  f.add_term(x, coeff);
  return f;
}

cplx GAElement::coeff(const GroupElement& x) const {
  const auto it = support_.find(x);
  return it == support_.end() ? cplx(0.0) : it->second;
}

void GAElement::add_term(const GroupElement& x, cplx coeff) {
  if (x.group() != group_) fail("add_term: element of a different group");
  const auto it = support_.find(x);
  if (it == support_.end()) {
    if (coeff != 0.0) support_.emplace(x, coeff);
    return;
  }
  it->second += coeff;
  if (it->second == 0.0) support_.erase(it);
}

GAElement ga_add(const GAElement& f, const GAElement& h) {
  check_same_group(f, h, "ga_add");
  GAElement out = f;
  for (const auto& [x, c] : h.support()) out.add_term(x, c);
  return out;
}

GAElement ga_sub(const GAElement& f, const GAElement& h) {
  check_same_group(f, h, "ga_sub");
  GAElement out = f;
  for (const auto& [x, c] : h.support()) out.add_term(x, -c);
  return out;
}

GAElement ga_scale(cplx c, const GAElement& f) {
  GAElement out(f.group());
  if (c == 0.0) return out;
  for (const auto& [x, v] : f.support()) out.add_term(x, c * v);
  return out;
}

GAElement ga_mul(const GAElement& f, const GAElement& h) {
  check_same_group(f, h, "ga_mul");
  GAElement out(f.group());
  for (const auto& [x, cx] : f.support())
    for (const auto& [y, cy] : h.support()) out.add_term(mul(x, y), cx * cy);
  return out;
}

GAElement ga_star(const GAElement& f) {
  GAElement out(f.group());
  for (const auto& [x, c] : f.support()) out.add_term(inv(x), std::conj(c));
  return out;
}

bool ga_equal(const GAElement& f, const GAElement& h, double tol) {
  if (f.group() != h.group()) return false;
  for (const auto& [x, c] : f.support())
    if (std::abs(c - h.coeff(x)) > tol) return false;
  for (const auto& [x, c] : h.support())
    if (std::abs(c - f.coeff(x)) > tol) return false;
  return true;
}

bool ga_is_zero(const GAElement& f, double tol) {
  for (const auto& [x, c] : f.support())
    if (std::abs(c) > tol) return false;
  return true;
}

std::string format_ga(const GAElement& f) {
  if (f.support().empty()) return "0";
  std::string out;
  for (const auto& [x, c] : f.support()) {
    if (!out.empty()) out += " + ";
    out += format_coeff(c);
    out += "*";
    out += format_element_display(x);
  }
  return out;
}

ClassFunction ga_mu(const GAElement& f) {
  const Group& g = f.group();
  const auto classes = conjugacy_classes(g);
  std::map<GroupElement, cplx> values;
  for (const auto& cls : classes) {
    cplx sum = 0.0;
    for (const auto& x : cls) sum += f.coeff(x);
    values.emplace(cls.front(), sum);
  }
  return ClassFunction(g, std::move(values));
}

bool class_function_equal(const ClassFunction& a, const ClassFunction& b, double tol) {
  if (a.group() != b.group()) return false;
  if (a.values().size() != b.values().size()) return false;
  auto it = b.values().begin();
  for (const auto& [rep, v] : a.values()) {
    if (!(rep == it->first) || std::abs(v - it->second) > tol) return false;
    ++it;
  }
  return true;
}

}  // namespace gainsw
