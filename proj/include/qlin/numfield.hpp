// Exact arithmetic in the totally real field F = Q(sqrt2, sqrt3, sqrt5).
//
// Elements are stored as 8 rational coordinates with respect to the basis
// (1, r2, r3, r5, r6, r10, r15, r30), rN = sqrt(N).  Internally a basis
// element is indexed by a bitmask over the primes {2,3,5}
// (bit0 <-> 2, bit1 <-> 3, bit2 <-> 5), so products of radicals reduce by
// mask XOR with an integer carry from the shared primes.

#ifndef QLIN_NUMFIELD_HPP
#define QLIN_NUMFIELD_HPP

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

#include <gmpxx.h>

namespace qlin {

using Rational = mpq_class;

struct FieldError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string rat_str(const Rational& q);
Rational rat_parse(const std::string& s);

class FieldElem {
public:
  FieldElem() = default;
  FieldElem(long n) { c_[0] = n; }
  FieldElem(const Rational& q) { c_[0] = q; }

  // sqrt_of(n) for n in {1,2,3,5,6,10,15,30}
  static FieldElem sqrt_of(int n);
  static FieldElem from_coords(const std::array<Rational, 8>& by_mask);

  const Rational& coord(int mask) const { return c_[mask]; }
  Rational& coord(int mask) { return c_[mask]; }

  bool is_zero() const;
  bool is_rational() const;
  // Throws FieldError if the value has a nonzero radical part.
  Rational as_rational() const;

  FieldElem operator-() const;
  FieldElem operator+(const FieldElem& o) const;
  FieldElem operator-(const FieldElem& o) const;
  FieldElem operator*(const FieldElem& o) const;
  FieldElem operator/(const FieldElem& o) const { return *this * o.inverse(); }
  FieldElem& operator+=(const FieldElem& o) { return *this = *this + o; }
  FieldElem& operator-=(const FieldElem& o) { return *this = *this - o; }
  FieldElem& operator*=(const FieldElem& o) { return *this = *this * o; }
  bool operator==(const FieldElem& o) const { return c_ == o.c_; }
  bool operator!=(const FieldElem& o) const { return !(*this == o); }

  // Exact inverse via the quadratic tower Q c Q(r2) c Q(r2,r3) c F,
  // rationalising one radical at a time.  Throws FieldError on zero.
  FieldElem inverse() const;

  // Rational interval [lo, hi] of width <= 2^-prec_bits containing the value.
  std::pair<Rational, Rational> approx(unsigned prec_bits) const;

  // Sign by interval refinement; exact zero is detected from the coordinates.
  int sign() const;
  bool operator<(const FieldElem& o) const { return (*this - o).sign() < 0; }

  double to_double() const;

  // Canonical text form, e.g. "1/2 + 3*r5 - 1/3*r30".
  std::string str() const;
  static FieldElem parse(const std::string& s);

  // Coordinates in the documented serialization order (1, r2, r3, r5, r6, r10, r15, r30).
  std::array<std::string, 8> coord_strings() const;

private:
  std::array<Rational, 8> c_{};  // indexed by prime mask
};

inline FieldElem operator*(long n, const FieldElem& a) { return FieldElem(n) * a; }

// Serialization order of basis masks: 1, r2, r3, r5, r6, r10, r15, r30.
inline constexpr std::array<int, 8> kBasisOrder = {0, 1, 2, 4, 3, 5, 6, 7};
inline constexpr std::array<int, 8> kBasisRadicand = {1, 2, 3, 5, 6, 10, 15, 30};

}  // namespace qlin

#endif
