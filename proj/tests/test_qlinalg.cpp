// Quaternionic linear algebra: complexification oracle for the rank,
// canonical line representatives, the orthogonal-complement map and parsing.

#include <doctest.h>

#include <random>

#include "qlin/constants.hpp"
#include "qlin/qlinalg.hpp"

using namespace qlin;

namespace {

Quaternion random_quat(std::mt19937_64& rng, int lim = 3) {
  std::uniform_int_distribution<int> num(-lim, lim);
  auto part = [&] { return FieldElem(num(rng)); };
  return Quaternion(part(), part(), part(), part());
}

QuatVector random_vector(std::mt19937_64& rng, int d) {
  QuatVector v(d);
  for (int i = 0; i < d; ++i) v[i] = random_quat(rng);
  return v;
}

QuatMatrix random_matrix(std::mt19937_64& rng, int r, int c) {
  QuatMatrix m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m.at(i, j) = random_quat(rng);
  return m;
}

// exact rank of a complex matrix over F(i), by Gaussian elimination
int complex_rank(ComplexMatrix m) {
  int rank = 0;
  for (int col = 0; col < m.cols && rank < m.rows; ++col) {
    int piv = -1;
    for (int r = rank; r < m.rows && piv < 0; ++r)
      if (!m.at(r, col).is_zero()) piv = r;
    if (piv < 0) continue;
    for (int c = 0; c < m.cols; ++c) std::swap(m.at(rank, c), m.at(piv, c));
    CElem p = m.at(rank, col);
    FieldElem nn = p.re * p.re + p.im * p.im;
    CElem pinv{p.re / nn, FieldElem(0) - p.im / nn};
    for (int r = rank + 1; r < m.rows; ++r) {
      CElem f = m.at(r, col) * pinv;
      for (int c = 0; c < m.cols; ++c)
        m.at(r, c) = m.at(r, c) - f * m.at(rank, c);
    }
    ++rank;
  }
  return rank;
}

}  // namespace

TEST_SUITE("qlinalg") {

TEST_CASE("complexification is a homomorphism") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 200; ++i) {
    QuatMatrix a = random_matrix(rng, 2, 2), b = random_matrix(rng, 2, 2);
    CHECK(complexify(a * b) == complexify(a) * complexify(b));
  }
}

TEST_CASE("rank against the complexification oracle") {
  std::mt19937_64 rng(37);
  for (int i = 0; i < 150; ++i) {
    QuatMatrix m = random_matrix(rng, 2, 2);
    CHECK(2 * quat_rank(m) == complex_rank(complexify(m)));
  }
  for (int i = 0; i < 150; ++i) {
    // rank-deficient by construction: m_{rc} = u_r v_c
    QuatVector u = random_vector(rng, 3), v = random_vector(rng, 3);
    QuatMatrix m(3, 3);
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) m.at(r, c) = u[r] * v[c];
    CHECK(2 * quat_rank(m) == complex_rank(complexify(m)));
  }
  CHECK(quat_rank(QuatMatrix::identity(2)) == 2);
  CHECK(quat_rank(QuatMatrix(2, 2)) == 0);
}

TEST_CASE("canonical line representative is scale invariant") {
  std::mt19937_64 rng(41);
  int tested = 0;
  while (tested < 500) {
    QuatVector v = random_vector(rng, 2);
    Quaternion q = random_quat(rng);
    if (v.is_zero() || q.norm().is_zero()) continue;
    ++tested;
    CHECK(canonical_line_rep(v * q).key() == canonical_line_rep(v).key());
  }
}

TEST_CASE("inner product is sesquilinear in the right-module convention") {
  std::mt19937_64 rng(43);
  for (int i = 0; i < 500; ++i) {
    QuatVector u = random_vector(rng, 2), v = random_vector(rng, 2);
    Quaternion q = random_quat(rng);
    CHECK(inner_product(u, v * q) == inner_product(u, v) * q);
    CHECK(inner_product(u * q, v) == q.conj() * inner_product(u, v));
    CHECK(inner_product(u, v).conj() == inner_product(v, u));
  }
}

TEST_CASE("orthogonal complement map") {
  std::mt19937_64 rng(47);
  int tested = 0;
  while (tested < 1000) {
    QuatVector u = random_vector(rng, 2), v = random_vector(rng, 2);
    if (u.is_zero() || v.is_zero()) continue;
    ++tested;
    QuatVector up = perp_vector(u), vp = perp_vector(v);
    CHECK(inner_product(u, up).norm().is_zero());
    CHECK(angle(u, v) == angle(up, vp));
    // applying the map twice returns to the original line
    CHECK(canonical_line_rep(perp_vector(up)).key() == canonical_line_rep(u).key());
  }
}

TEST_CASE("unitarity of the paper's matrices") {
  namespace cn = qlin::constants;
  for (int j = 1; j <= 5; ++j) {
    CHECK(cn::b(j).is_unitary());
    CHECK(cn::a(j).is_unitary());
  }
  CHECK(cn::U_a().is_unitary());
  CHECK(cn::U_b().is_unitary());
  CHECK(cn::g2().is_unitary());
  CHECK(cn::r_swap().is_unitary());
  CHECK(!cn::A().is_unitary());  // A*A = cI with c != 1
}

TEST_CASE("parsing quaternion expressions") {
  FieldElem r5 = FieldElem::sqrt_of(5);
  Quaternion q = parse_quaternion("1 + 2*i - 1/2*j + r5*k");
  CHECK(q == Quaternion(FieldElem(1), FieldElem(2),
                        FieldElem(Rational(-1) / 2), r5));
  QuatVector v = parse_vector("(1 + i, j - k)");
  REQUIRE(v.dim() == 2);
  CHECK(v[0] == Quaternion(1) + Quaternion::i());
  CHECK(v[1] == Quaternion::j() - Quaternion::k());
  CHECK_THROWS_AS(parse_vector("(1"), FieldError);
  CHECK_THROWS_AS(parse_quaternion("1 + *i"), FieldError);
}

}  // TEST_SUITE
