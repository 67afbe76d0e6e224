// Quaternions a + b i + c j + d k with coefficients in F = Q(r2, r3, r5).

#ifndef QLIN_QUAT_HPP
#define QLIN_QUAT_HPP

#include <optional>
#include <string>

#include "qlin/numfield.hpp"

namespace qlin {

struct Quaternion {
  FieldElem a, b, c, d;

  Quaternion() = default;
  Quaternion(FieldElem re) : a(std::move(re)) {}
  Quaternion(long n) : a(n) {}
  Quaternion(FieldElem a_, FieldElem b_, FieldElem c_, FieldElem d_)
      : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {}

  static Quaternion i() { return {FieldElem(0), FieldElem(1), FieldElem(0), FieldElem(0)}; }
  static Quaternion j() { return {FieldElem(0), FieldElem(0), FieldElem(1), FieldElem(0)}; }
  static Quaternion k() { return {FieldElem(0), FieldElem(0), FieldElem(0), FieldElem(1)}; }

  bool is_zero() const { return a.is_zero() && b.is_zero() && c.is_zero() && d.is_zero(); }
  bool is_real() const { return b.is_zero() && c.is_zero() && d.is_zero(); }

  Quaternion operator-() const { return {-a, -b, -c, -d}; }
  Quaternion operator+(const Quaternion& o) const { return {a + o.a, b + o.b, c + o.c, d + o.d}; }
  Quaternion operator-(const Quaternion& o) const { return {a - o.a, b - o.b, c - o.c, d - o.d}; }
  Quaternion operator*(const Quaternion& o) const;  // Hamilton product
  Quaternion& operator+=(const Quaternion& o) { return *this = *this + o; }
  Quaternion& operator*=(const Quaternion& o) { return *this = *this * o; }
  bool operator==(const Quaternion& o) const { return a == o.a && b == o.b && c == o.c && d == o.d; }
  bool operator!=(const Quaternion& o) const { return !(*this == o); }

  Quaternion conj() const { return {a, -b, -c, -d}; }
  FieldElem norm() const { return a * a + b * b + c * c + d * d; }  // |q|^2
  const FieldElem& re() const { return a; }

  // conj / norm; throws FieldError on zero.
  Quaternion inverse() const;
  std::optional<Quaternion> try_inverse() const;

  // Smallest n >= 1 with q^n = 1, or nullopt beyond the cap.
  // Throws FieldError if |q|^2 != 1.
  std::optional<int> mult_order(int cap = 240) const;

  std::string str() const;
};

inline Quaternion operator*(const FieldElem& s, const Quaternion& q) {
  return {s * q.a, s * q.b, s * q.c, s * q.d};
}

}  // namespace qlin

#endif
