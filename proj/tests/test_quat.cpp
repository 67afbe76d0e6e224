// Quaternion algebra identities on random elements.

#include <doctest.h>

#include <random>

#include "qlin/constants.hpp"
#include "qlin/quat.hpp"

using namespace qlin;

namespace {

Quaternion random_quat(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-4, 4), den(1, 3);
  auto part = [&] { return FieldElem(Rational(num(rng)) / den(rng)); };
  return Quaternion(part(), part(), part(), part());
}

}  // namespace

TEST_SUITE("quat") {

TEST_CASE("norm is multiplicative") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 3000; ++i) {
    Quaternion p = random_quat(rng), q = random_quat(rng);
    CHECK((p * q).norm() == p.norm() * q.norm());
  }
}

TEST_CASE("conjugation is an anti-homomorphism") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 3000; ++i) {
    Quaternion p = random_quat(rng), q = random_quat(rng);
    CHECK((p * q).conj() == q.conj() * p.conj());
    CHECK(p.conj().conj() == p);
    CHECK((p * q).re() == (q * p).re());  // trace property
  }
}

TEST_CASE("inverses") {
  std::mt19937_64 rng(9);
  int tested = 0;
  while (tested < 1000) {
    Quaternion p = random_quat(rng);
    if (p.norm().is_zero()) continue;
    ++tested;
    CHECK(p * p.inverse() == Quaternion(1));
    CHECK(p.inverse() * p == Quaternion(1));
  }
  CHECK(!Quaternion().try_inverse().has_value());
}

TEST_CASE("multiplicative orders of roots of unity") {
  CHECK(Quaternion::i().mult_order() == 4);
  CHECK(Quaternion::j().mult_order() == 4);
  CHECK((-Quaternion(1)).mult_order() == 2);
  CHECK(Quaternion(1).mult_order() == 1);
  for (int m : {1, 2, 3, 4, 6, 8, 12})
    CHECK(constants::hstar_root_of_unity(m).mult_order() == m);
  // order is only defined for units
  CHECK_THROWS_AS(Quaternion(FieldElem(2)).mult_order(100), FieldError);
  // a unit of infinite order: (3 + 4i)/5
  Quaternion u(FieldElem(Rational(3) / 5), FieldElem(Rational(4) / 5),
               FieldElem(0), FieldElem(0));
  CHECK(!u.mult_order(50).has_value());
}

TEST_CASE("norm form") {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 500; ++i) {
    Quaternion p = random_quat(rng);
    CHECK(p * p.conj() == Quaternion(p.norm()));
    CHECK(p + p.conj() == Quaternion(FieldElem(2) * p.re()));
  }
}

}  // TEST_SUITE
