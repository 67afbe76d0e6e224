#include "qlin/constants.hpp"

namespace qlin::constants {

namespace {

FieldElem fe(long p, long q, int rad = 1) {
  return FieldElem(Rational(p, q)) * FieldElem::sqrt_of(rad);
}

Quaternion qt(FieldElem a, FieldElem b, FieldElem c, FieldElem d) {
  return Quaternion(std::move(a), std::move(b), std::move(c), std::move(d));
}

QuatMatrix m22(Quaternion q00, Quaternion q01, Quaternion q10, Quaternion q11) {
  QuatMatrix m(2, 2);
  m.at(0, 0) = std::move(q00);
  m.at(0, 1) = std::move(q01);
  m.at(1, 0) = std::move(q10);
  m.at(1, 1) = std::move(q11);
  return m;
}

const FieldElem Z = FieldElem(0);

}  // namespace

FieldElem r(int n) { return FieldElem::sqrt_of(n); }
FieldElem frac(long p, long q) { return FieldElem(Rational(p, q)); }
FieldElem tau() { return frac(1, 2) + fe(1, 2, 5); }

Quaternion omega() { return qt(frac(-1, 2), fe(1, 2, 3), Z, Z); }

QuatMatrix b(int idx) {
  switch (idx) {
    case 1:
      return QuatMatrix::diag(Quaternion(1), omega());
    case 2:
      // [ i/r3, r2/r3 ; -r2/r3, -i/r3 ]
      return m22(qt(Z, fe(1, 3, 3), Z, Z), Quaternion(fe(1, 3, 6)),
                 Quaternion(-fe(1, 3, 6)), qt(Z, -fe(1, 3, 3), Z, Z));
    case 3:
      return QuatMatrix::diag(qt(Z, -fe(1, 2, 3), Z, frac(1, 2)), Quaternion::k());
    case 4:
      return QuatMatrix::diag(Quaternion::k(), -Quaternion::k());
    case 5:
      // u^{-1} diag(j,j) u with u = diag(1,k); the conjugation flips the
      // sign of the second entry
      return QuatMatrix::diag(Quaternion::j(), -Quaternion::j());
    default:
      throw FieldError("b index out of range");
  }
}

QuatMatrix a(int idx) {
  switch (idx) {
    case 1:
      return QuatMatrix::diag(Quaternion(1), omega() * omega());
    case 2:
      // [ i/r3, -(r2/r3)k ; -(r2/r3)k, i/r3 ]
      return m22(qt(Z, fe(1, 3, 3), Z, Z), qt(Z, Z, Z, -fe(1, 3, 6)),
                 qt(Z, Z, Z, -fe(1, 3, 6)), qt(Z, fe(1, 3, 3), Z, Z));
    case 3:
      return QuatMatrix::diag(qt(Z, -fe(1, 2, 3), Z, frac(1, 2)), Quaternion::k());
    case 4:
      return b(4);
    case 5:
      return QuatMatrix::diag(Quaternion::j(), Quaternion::j());
    default:
      throw FieldError("a index out of range");
  }
}

QuatMatrix u() { return QuatMatrix::diag(Quaternion(1), Quaternion::k()); }

QuatMatrix U_a() {
  Quaternion d = qt(Z, fe(2, 15, 15), -fe(1, 15, 30), Z);   // (2/r15)i - (r2/r15)j
  Quaternion o = qt(Z, fe(1, 5, 10), -fe(1, 5, 5), Z);      // (r2/r5)i - (1/r5)j
  return m22(d, o, o, -d);
}

QuatMatrix U_b() {
  Quaternion q00 = qt(fe(1, 10, 5), fe(1, 6, 3),
                      fe(1, 20, 30) - fe(1, 12, 6), fe(1, 4, 2) + fe(1, 20, 10));
  Quaternion q01 = qt(fe(1, 20, 30), -fe(1, 4, 2),
                      frac(1, 4) + fe(3, 20, 5), -(fe(1, 4, 3) - fe(1, 20, 15)));
  Quaternion q10 = qt(fe(1, 20, 30), fe(1, 4, 2),
                      frac(-1, 4) + fe(3, 20, 5), fe(1, 4, 3) + fe(1, 20, 15));
  Quaternion q11 = qt(-fe(1, 10, 5), fe(1, 6, 3),
                      -fe(1, 20, 30) - fe(1, 12, 6), fe(1, 4, 2) - fe(1, 20, 10));
  return m22(q00, q01, q10, q11);
}

QuatMatrix g2() {
  Quaternion q00 = qt(Z, fe(1, 3, 3), Z, Z);
  Quaternion q01 = qt(fe(1, 12, 6), fe(1, 4, 2), fe(1, 4, 2), -fe(1, 4, 6));
  Quaternion q10 = qt(fe(1, 6, 6), Z, fe(1, 2, 2), Z);
  Quaternion q11 = qt(frac(-1, 2), fe(1, 6, 3), Z, Z);
  return m22(q00, q01, q10, q11);
}

QuatMatrix A() {
  FieldElem alpha = fe(1, 3, 6) + fe(1, 3, 30) - fe(5, 6, 3) - fe(1, 6, 15);
  FieldElem beta = fe(1, 3, 6) - fe(1, 6, 15);
  FieldElem gamma = fe(1, 6, 30) + fe(1, 2, 6) - fe(2, 3, 3);
  FieldElem delta = fe(1, 6, 30) + fe(1, 3, 15) - fe(1, 6, 6) + fe(1, 3, 3);
  Quaternion q00 = qt(frac(-1, 2) - fe(1, 2, 5), alpha, -alpha, frac(1, 2) + fe(1, 2, 5));
  Quaternion q01 = qt(frac(-2, 1) * beta, frac(1, 1), frac(-1, 1), frac(2, 1) * beta);
  Quaternion q10 = qt(-gamma, fe(1, 2, 2) + frac(2, 1) - fe(1, 2, 10), Z, Z);
  Quaternion q11 = qt(frac(1, 1) - fe(3, 2, 2) + r(5) - fe(1, 2, 10), -delta, Z, Z);
  return m22(q00, q01, q10, q11);
}

FieldElem A_star_A_scalar() {
  // (20/3)(4 - (r5/5)(5 r2 - 4) - r2) = 80/3 - 20 r2/3 + 16 r5/3 - 20 r10/3
  return frac(80, 3) - fe(20, 3, 2) + fe(16, 3, 5) - fe(20, 3, 10);
}

QuatMatrix AUaA_inv() {
  Quaternion q00 = qt(Z, -fe(1, 6, 3), -fe(1, 3, 3), frac(1, 2));
  Quaternion q01 = qt(fe(1, 12, 6), fe(1, 4, 2), -fe(1, 4, 2), -fe(1, 12, 6));
  Quaternion q10 = qt(-fe(1, 12, 6), fe(1, 4, 2), -fe(1, 4, 2), -fe(1, 12, 6));
  Quaternion q11 = qt(Z, -fe(1, 3, 3), -fe(1, 3, 3), Z);
  return m22(q00, q01, q10, q11);
}

QuatMatrix AUbA_inv() {
  Quaternion q00 = qt(frac(1, 2), fe(1, 3, 3), -fe(1, 6, 3), Z);
  Quaternion q01 = qt(fe(1, 12, 6), fe(1, 4, 2), fe(1, 4, 2), fe(1, 12, 6));
  Quaternion q10 = qt(-fe(1, 12, 6), -fe(1, 4, 2), -fe(1, 4, 2), fe(1, 12, 6));
  Quaternion q11 = qt(frac(-1, 2), fe(1, 6, 3), fe(1, 3, 3), Z);
  return m22(q00, q01, q10, q11);
}

QuatMatrix r_swap() {
  Quaternion q01 = qt(fe(1, 2, 2), Z, Z, fe(1, 2, 2));
  Quaternion q10 = qt(fe(1, 2, 2), Z, Z, -fe(1, 2, 2));
  return m22(Quaternion(0), q01, q10, Quaternion(0));
}

std::vector<QuatMatrix> gens_b(int count) {
  std::vector<QuatMatrix> g;
  for (int i = 1; i <= count; ++i) g.push_back(b(i));
  return g;
}

std::vector<QuatMatrix> gens_a(int count) {
  std::vector<QuatMatrix> g;
  for (int i = 1; i <= count; ++i) g.push_back(a(i));
  return g;
}

QuatVector e1() { return {Quaternion(1), Quaternion(0)}; }
QuatVector e2() { return {Quaternion(0), Quaternion(1)}; }

QuatVector w() {
  return {Quaternion(r(2) + r(10)),
          qt(r(3), frac(-1, 1), frac(1, 1), r(3))};
}

QuatVector w_perp() {
  return {qt(-r(3), frac(-1, 1), frac(1, 1), r(3)),
          Quaternion(r(2) + r(10))};
}

std::vector<QuatVector> six_lines_w() {
  FieldElem s = r(2) + r(10);
  return {
      {Quaternion(s), qt(r(3), frac(-1, 1), frac(1, 1), r(3))},
      {Quaternion(s), qt(Z, frac(2, 1), frac(-2, 1), Z)},
      {Quaternion(s), qt(-r(3), frac(-1, 1), frac(1, 1), -r(3))},
      {qt(-r(3), frac(-1, 1), frac(-1, 1), -r(3)), Quaternion(s)},
      {qt(Z, frac(2, 1), frac(2, 1), Z), Quaternion(s)},
      {qt(r(3), frac(-1, 1), frac(-1, 1), r(3)), Quaternion(s)},
  };
}

std::vector<QuatVector> six_lines_w_perp() {
  FieldElem s = r(2) + r(10);
  return {
      {qt(-r(3), frac(-1, 1), frac(1, 1), r(3)), Quaternion(s)},
      {qt(Z, frac(2, 1), frac(-2, 1), Z), Quaternion(s)},
      {qt(r(3), frac(-1, 1), frac(1, 1), -r(3)), Quaternion(s)},
      {Quaternion(s), qt(r(3), frac(-1, 1), frac(-1, 1), -r(3))},
      {Quaternion(s), qt(Z, frac(2, 1), frac(2, 1), Z)},
      {Quaternion(s), qt(-r(3), frac(-1, 1), frac(-1, 1), r(3))},
  };
}

std::vector<QuatVector> et_taoui_lines() {
  FieldElem f = fe(1, 5, 10);    // r2/r5
  FieldElem g = -fe(1, 20, 15);  // -r3/(4 r5)
  return {
      {Quaternion(1), Quaternion(0)},
      {Quaternion(f), Quaternion(fe(1, 5, 15))},
      {Quaternion(f), qt(g, frac(3, 4), Z, Z)},
      {Quaternion(f), qt(g, frac(-1, 4), fe(1, 2, 2), Z)},
      {Quaternion(f), qt(g, frac(-1, 4), -fe(1, 4, 2), fe(1, 4, 6))},
      {Quaternion(f), qt(g, frac(-1, 4), -fe(1, 4, 2), -fe(1, 4, 6))},
  };
}

std::vector<QuatVector> mub_vectors() {
  std::vector<QuatVector> v = {e1(), e2()};
  for (const Quaternion& s :
       {Quaternion(1), Quaternion(-1), Quaternion::i(), -Quaternion::i(),
        Quaternion::j(), -Quaternion::j(), Quaternion::k(), -Quaternion::k()})
    v.push_back({Quaternion(1), s});
  return v;
}

std::vector<QuatVector> sic_vectors() {
  Quaternion top = qt(Z, fe(1, 3, 3), Z, Z);  // i/r3
  return {
      e1(),
      {top, Quaternion(-fe(1, 3, 6))},
      {top, qt(fe(1, 6, 6), -fe(1, 2, 2), Z, Z)},
      {top, qt(fe(1, 6, 6), fe(1, 2, 2), Z, Z)},
  };
}

QuatVector fiducial_15() { return {Quaternion(1), Quaternion::j()}; }

QuatVector fiducial_30() {
  return {qt(Z, r(2), Z, Z), Quaternion(FieldElem(1) + r(3))};
}

Quaternion hstar_root_of_unity(int m) {
  switch (m) {
    case 1: return Quaternion(1);
    case 2: return Quaternion(-1);
    case 3: return omega();
    case 4: return Quaternion::i();
    case 6: return qt(frac(1, 2), fe(1, 2, 3), Z, Z);
    case 8: return qt(fe(1, 2, 2), fe(1, 2, 2), Z, Z);
    case 12: return qt(fe(1, 2, 3), frac(1, 2), Z, Z);
    default: throw FieldError("root of unity not over F");
  }
}

std::vector<Quaternion> hstar_gens_T() {
  return {Quaternion::i(), Quaternion::k(),
          qt(frac(-1, 2), frac(1, 2), frac(1, 2), frac(1, 2))};
}

std::vector<Quaternion> hstar_gens_O() {
  auto g = hstar_gens_T();
  g.push_back(qt(-fe(1, 2, 2), fe(1, 2, 2), Z, Z));  // (i-1)/r2
  return g;
}

std::vector<Quaternion> hstar_gens_I() {
  // (tau - tau^-1 i - j)/2
  return {Quaternion::i(), Quaternion::k(),
          qt(frac(1, 4) + fe(1, 4, 5), frac(1, 4) - fe(1, 4, 5), frac(-1, 2), Z)};
}

}  // namespace qlin::constants
