// The named matrices and vectors of the H_24 c H_120 c H_720 c H_1440
// construction: Blichfeldt-style generators, the permutation-lifting
// unitaries, the fiducial vectors and their line systems, the conjugating
// matrix between the two presentations of the six equiangular lines, the
// MUB vectors and the C^2 SIC vectors.

#ifndef QLIN_CONSTANTS_HPP
#define QLIN_CONSTANTS_HPP

#include <vector>

#include "qlin/qlinalg.hpp"

namespace qlin::constants {

// scalar helpers
FieldElem r(int n);               // sqrt(n)
FieldElem frac(long p, long q);   // p/q
FieldElem tau();                  // (1 + sqrt5)/2
Quaternion omega();               // -1/2 + (sqrt3/2) i, primitive cube root

// generators
QuatMatrix b(int idx);            // b1..b5
QuatMatrix a(int idx);            // a1..a5
QuatMatrix u();                   // diag(1, k), with b_j = u^-1 a_j u
QuatMatrix U_a();
QuatMatrix U_b();
QuatMatrix g2();                  // order-5 stabilizer generator of the w line
QuatMatrix A();                   // conjugator between the two line presentations
FieldElem A_star_A_scalar();      // c with A*A = cI
QuatMatrix AUaA_inv();            // displayed value of A U_a A^-1
QuatMatrix AUbA_inv();            // displayed value of A U_b A^-1
QuatMatrix r_swap();              // order-2 reflection in H_1440 \ H_720

std::vector<QuatMatrix> gens_b(int count);   // {b1..bcount}
std::vector<QuatMatrix> gens_a(int count);   // {a1..acount}

// vectors
QuatVector e1();
QuatVector e2();
QuatVector w();
QuatVector w_perp();
std::vector<QuatVector> six_lines_w();       // ordered w, b1 w, ..., b1^2 b2 w
std::vector<QuatVector> six_lines_w_perp();
std::vector<QuatVector> et_taoui_lines();    // v1..v6
std::vector<QuatVector> mub_vectors();       // the ten MUB vectors
std::vector<QuatVector> sic_vectors();       // the four C^2 SIC vectors
QuatVector fiducial_15();                    // (1, j)
QuatVector fiducial_30();                    // (r2 i, 1 + r3)

// unit quaternion generators of the finite subgroups of H^* (cyclic/binary
// dihedral built from e^{2 pi i/m} when that lies over F; T, O, I as listed)
Quaternion hstar_root_of_unity(int m);       // e^{2 pi i / m}, m in {1,2,3,4,6,8,12}
std::vector<Quaternion> hstar_gens_T();
std::vector<Quaternion> hstar_gens_O();
std::vector<Quaternion> hstar_gens_I();

}  // namespace qlin::constants

#endif
