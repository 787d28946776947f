#pragma once

#include <cmath>
#include <complex>

namespace gainsw {

// Real quaternion q = a + b i + c j + d k.
struct Quaternion {
  double a = 0, b = 0, c = 0, d = 0;

  static Quaternion zero() { return {0, 0, 0, 0}; }
  static Quaternion one() { return {1, 0, 0, 0}; }
  static Quaternion unit_i() { return {0, 1, 0, 0}; }
  static Quaternion unit_j() { return {0, 0, 1, 0}; }
  static Quaternion unit_k() { return {0, 0, 0, 1}; }
  static Quaternion real(double x) { return {x, 0, 0, 0}; }

  Quaternion conj() const { return {a, -b, -c, -d}; }
  double norm_sq() const { return a * a + b * b + c * c + d * d; }
  double norm() const { return std::sqrt(norm_sq()); }
  double max_abs() const {
    return std::max(std::max(std::abs(a), std::abs(b)), std::max(std::abs(c), std::abs(d)));
  }
  bool is_zero(double tol = 0.0) const { return max_abs() <= tol; }

  // q = q1 + q2 j with q1 = a + b i, q2 = c + d i.
  std::complex<double> part1() const { return {a, b}; }
  std::complex<double> part2() const { return {c, d}; }

  bool operator==(const Quaternion& o) const = default;

  Quaternion operator-() const { return {-a, -b, -c, -d}; }
  Quaternion operator+(const Quaternion& o) const { return {a + o.a, b + o.b, c + o.c, d + o.d}; }
  Quaternion operator-(const Quaternion& o) const { return {a - o.a, b - o.b, c - o.c, d - o.d}; }
  Quaternion& operator+=(const Quaternion& o) { a += o.a; b += o.b; c += o.c; d += o.d; return *this; }

  Quaternion operator*(const Quaternion& o) const {
    return {a * o.a - b * o.b - c * o.c - d * o.d,
            a * o.b + b * o.a + c * o.d - d * o.c,
            a * o.c - b * o.d + c * o.a + d * o.b,
            a * o.d + b * o.c - c * o.b + d * o.a};
  }
  Quaternion operator*(double s) const { return {a * s, b * s, c * s, d * s}; }
};

inline Quaternion q_mul(const Quaternion& x, const Quaternion& y) { return x * y; }
inline Quaternion q_conj(const Quaternion& q) { return q.conj(); }
inline double q_norm(const Quaternion& q) { return q.norm(); }

Quaternion q_inv(const Quaternion& q);  // throws on q = 0

// The unique complex representative of the similarity class of q:
// Re(q) + |Im(q)| i, with nonnegative imaginary part.
std::complex<double> canonical_class(const Quaternion& q);

inline bool q_close(const Quaternion& x, const Quaternion& y, double tol) {
  return (x - y).max_abs() <= tol;
}

}  // namespace gainsw
