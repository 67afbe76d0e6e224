#include "qlin/quat.hpp"

#include <sstream>

namespace qlin {

Quaternion Quaternion::operator*(const Quaternion& o) const {
  return {
      a * o.a - b * o.b - c * o.c - d * o.d,
      a * o.b + b * o.a + c * o.d - d * o.c,
      a * o.c - b * o.d + c * o.a + d * o.b,
      a * o.d + b * o.c - c * o.b + d * o.a,
  };
}

Quaternion Quaternion::inverse() const {
  FieldElem n = norm();
  if (n.is_zero()) throw FieldError("inverse of zero quaternion");
  FieldElem ninv = n.inverse();
  Quaternion cj = conj();
  return {ninv * cj.a, ninv * cj.b, ninv * cj.c, ninv * cj.d};
}

std::optional<Quaternion> Quaternion::try_inverse() const {
  if (is_zero()) return std::nullopt;
  return inverse();
}

std::optional<int> Quaternion::mult_order(int cap) const {
  if (norm() != FieldElem(1))
    throw FieldError("mult_order requires a unit quaternion");
  Quaternion one(1);
  Quaternion p = *this;
  for (int n = 1; n <= cap; ++n) {
    if (p == one) return n;
    p = p * *this;
  }
  return std::nullopt;
}

std::string Quaternion::str() const {
  std::ostringstream os;
  os << "(" << a.str() << "; " << b.str() << "; " << c.str() << "; " << d.str() << ")";
  return os.str();
}

}  // namespace qlin
