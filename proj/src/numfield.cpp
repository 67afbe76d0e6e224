#include "qlin/numfield.hpp"

#include <cctype>
#include <sstream>
#include <vector>

namespace qlin {

namespace {

// radicand of a basis mask: product of primes selected by the bits
int mask_radicand(int mask) {
  int r = 1;
  if (mask & 1) r *= 2;
  if (mask & 2) r *= 3;
  if (mask & 4) r *= 5;
  return r;
}

int radicand_to_mask(int n) {
  for (int m = 0; m < 8; ++m)
    if (mask_radicand(m) == n) return m;
  throw FieldError("not a basis radicand: " + std::to_string(n));
}

}  // namespace

std::string rat_str(const Rational& q) {
  return q.get_str();
}

Rational rat_parse(const std::string& s) {
  Rational q;
  if (q.set_str(s, 10) != 0) throw FieldError("bad rational: " + s);
  q.canonicalize();
  if (q.get_den() < 0) throw FieldError("bad rational: " + s);
  return q;
}

FieldElem FieldElem::sqrt_of(int n) {
  FieldElem e;
  e.c_[radicand_to_mask(n)] = 1;
  return e;
}

FieldElem FieldElem::from_coords(const std::array<Rational, 8>& by_mask) {
  FieldElem e;
  e.c_ = by_mask;
  return e;
}

bool FieldElem::is_zero() const {
  for (const auto& q : c_)
    if (q != 0) return false;
  return true;
}

bool FieldElem::is_rational() const {
  for (int m = 1; m < 8; ++m)
    if (c_[m] != 0) return false;
  return true;
}

Rational FieldElem::as_rational() const {
  if (!is_rational()) throw FieldError("value is irrational: " + str());
  return c_[0];
}

FieldElem FieldElem::operator-() const {
  FieldElem r;
  for (int m = 0; m < 8; ++m) r.c_[m] = -c_[m];
  return r;
}

FieldElem FieldElem::operator+(const FieldElem& o) const {
  FieldElem r;
  for (int m = 0; m < 8; ++m) r.c_[m] = c_[m] + o.c_[m];
  return r;
}

FieldElem FieldElem::operator-(const FieldElem& o) const {
  FieldElem r;
  for (int m = 0; m < 8; ++m) r.c_[m] = c_[m] - o.c_[m];
  return r;
}

FieldElem FieldElem::operator*(const FieldElem& o) const {
  FieldElem r;
  for (int m = 0; m < 8; ++m) {
    if (c_[m] == 0) continue;
    for (int n = 0; n < 8; ++n) {
      if (o.c_[n] == 0) continue;
      // r_m * r_n = mask_radicand(m & n) * r_(m ^ n)
      r.c_[m ^ n] += c_[m] * o.c_[n] * mask_radicand(m & n);
    }
  }
  return r;
}

FieldElem FieldElem::inverse() const {
  if (is_zero()) throw FieldError("division by zero in F");
  // Recursive conjugate-rationalisation over the tower, top radical first.
  // level bit: 4 (r5), then 2 (r3), then 1 (r2), then plain rational.
  struct Impl {
    static FieldElem inv(const FieldElem& a, int bit) {
      if (bit == 0) {
        Rational q = a.coord(0);
        if (q == 0) throw FieldError("division by zero in F");
        return FieldElem(Rational(1) / q);
      }
      // a = x + y*sqrt(p) with x, y in the subfield (masks without `bit`)
      FieldElem conj;
      for (int m = 0; m < 8; ++m)
        conj.coord(m) = (m & bit) ? -a.coord(m) : a.coord(m);
      FieldElem norm = a * conj;  // lies in the subfield
      for (int m = 0; m < 8; ++m)
        if ((m & bit) && norm.coord(m) != 0)
          throw FieldError("tower norm left the subfield");
      return conj * inv(norm, bit >> 1);
    }
  };
  return Impl::inv(*this, 4);
}

std::pair<Rational, Rational> FieldElem::approx(unsigned prec_bits) const {
  if (prec_bits < 1) prec_bits = 1;
  if (is_zero()) return {Rational(0), Rational(0)};
  Rational target_width(1);
  target_width >>= prec_bits;  // 2^-prec
  for (unsigned p = prec_bits + 8;; p *= 2) {
    // enclosure of each radical at p bits: s = floor(sqrt(n * 4^p)),
    // sqrt(n) in [s/2^p, (s+1)/2^p]
    Rational lo(0), hi(0);
    for (int m = 0; m < 8; ++m) {
      if (c_[m] == 0) continue;
      mpz_class scaled = mask_radicand(m);
      scaled <<= 2 * p;
      mpz_class s;
      mpz_sqrt(s.get_mpz_t(), scaled.get_mpz_t());
      Rational rlo(s), rhi(s + 1);
      rlo >>= p;
      rhi >>= p;
      if (c_[m] > 0) {
        lo += c_[m] * rlo;
        hi += c_[m] * rhi;
      } else {
        lo += c_[m] * rhi;
        hi += c_[m] * rlo;
      }
    }
    if (hi - lo <= target_width) return {lo, hi};
  }
}

int FieldElem::sign() const {
  if (is_zero()) return 0;
  for (unsigned p = 16;; p *= 2) {
    auto [lo, hi] = approx(p);
    if (lo > 0) return 1;
    if (hi < 0) return -1;
    // interval still straddles 0: value is nonzero algebraic, refine
  }
}

double FieldElem::to_double() const {
  auto [lo, hi] = approx(64);
  Rational mid = (lo + hi) / 2;
  return mid.get_d();
}

std::string FieldElem::str() const {
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k < 8; ++k) {
    int m = kBasisOrder[k];
    if (c_[m] == 0) continue;
    Rational q = c_[m];
    if (first) {
      if (q < 0) {
        os << "-";
        q = -q;
      }
    } else {
      os << (q < 0 ? " - " : " + ");
      if (q < 0) q = -q;
    }
    first = false;
    if (m == 0) {
      os << rat_str(q);
    } else {
      if (q != 1) os << rat_str(q) << "*";
      os << "r" << kBasisRadicand[k];
    }
  }
  if (first) os << "0";
  return os.str();
}

std::array<std::string, 8> FieldElem::coord_strings() const {
  std::array<std::string, 8> out;
  for (int k = 0; k < 8; ++k) out[k] = rat_str(c_[kBasisOrder[k]]);
  return out;
}

FieldElem FieldElem::parse(const std::string& s) {
  FieldElem result;
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  };
  skip_ws();
  if (i == s.size()) throw FieldError("empty field element");
  bool first = true;
  while (true) {
    skip_ws();
    if (i == s.size()) break;
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = (s[i] == '-') ? -1 : 1;
      ++i;
      skip_ws();
    } else if (!first) {
      throw FieldError("expected + or - in: " + s);
    }
    // term: [rational] [*] [rN]
    Rational coef(1);
    bool have_coef = false;
    if (i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])))) {
      size_t j = i;
      while (j < s.size() &&
             (std::isdigit(static_cast<unsigned char>(s[j])) || s[j] == '/'))
        ++j;
      coef = rat_parse(s.substr(i, j - i));
      have_coef = true;
      i = j;
      skip_ws();
      if (i < s.size() && s[i] == '*') {
        ++i;
        skip_ws();
      }
    }
    int mask = 0;
    if (i < s.size() && s[i] == 'r') {
      size_t j = i + 1;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      int n = std::stoi(s.substr(i + 1, j - i - 1));
      mask = radicand_to_mask(n);
      i = j;
    } else if (!have_coef) {
      throw FieldError("bad term in field element: " + s);
    }
    result.c_[mask] += sign * coef;
    first = false;
  }
  return result;
}

}  // namespace qlin
