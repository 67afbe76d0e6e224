// Vectors and matrices over the quaternions, right-module convention:
// scalars act on the right of vectors, matrices act on the left.

#ifndef QLIN_QLINALG_HPP
#define QLIN_QLINALG_HPP

#include <string>
#include <vector>

#include "qlin/quat.hpp"

namespace qlin {

struct DimensionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct QuatVector {
  std::vector<Quaternion> e;

  QuatVector() = default;
  explicit QuatVector(int dim) : e(dim) {}
  QuatVector(std::initializer_list<Quaternion> init) : e(init) {}

  int dim() const { return static_cast<int>(e.size()); }
  bool is_zero() const;

  Quaternion& operator[](int i) { return e[i]; }
  const Quaternion& operator[](int i) const { return e[i]; }

  QuatVector operator+(const QuatVector& o) const;
  QuatVector operator-(const QuatVector& o) const;
  // right scalar action
  QuatVector operator*(const Quaternion& s) const;
  bool operator==(const QuatVector& o) const { return e == o.e; }

  std::string str() const;
  std::string key() const { return str(); }
};

struct QuatMatrix {
  int rows = 0, cols = 0;
  std::vector<Quaternion> e;  // row-major

  QuatMatrix() = default;
  QuatMatrix(int r, int c) : rows(r), cols(c), e(r * c) {}

  static QuatMatrix identity(int d);
  static QuatMatrix diag(const Quaternion& p, const Quaternion& q);

  Quaternion& at(int r, int c) { return e[r * cols + c]; }
  const Quaternion& at(int r, int c) const { return e[r * cols + c]; }

  QuatMatrix operator*(const QuatMatrix& o) const;
  QuatVector operator*(const QuatVector& v) const;
  QuatMatrix operator+(const QuatMatrix& o) const;
  QuatMatrix operator-(const QuatMatrix& o) const;
  bool operator==(const QuatMatrix& o) const;

  QuatMatrix conj_transpose() const;
  bool is_unitary() const;

  std::string str() const;
  std::string key() const;
};

QuatMatrix scalar_matrix(int d, const Quaternion& s);

// <v,w> = sum conj(v_i) w_i; sesquilinear, <v a, w b> = conj(a) <v,w> b.
Quaternion inner_product(const QuatVector& v, const QuatVector& w);

// Normalized angle |<v,w>|^2 / (<v,v><w,w>) in [0,1].
FieldElem angle(const QuatVector& v, const QuatVector& w);

// Complexification of g = A + B j to [[A, -B], [conj B, conj A]].
struct CElem {
  FieldElem re, im;  // element of F(i)
  CElem operator*(const CElem& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  CElem operator+(const CElem& o) const { return {re + o.re, im + o.im}; }
  CElem operator-(const CElem& o) const { return {re - o.re, im - o.im}; }
  bool operator==(const CElem& o) const { return re == o.re && im == o.im; }
  bool is_zero() const { return re.is_zero() && im.is_zero(); }
};

struct ComplexMatrix {
  int rows = 0, cols = 0;
  std::vector<CElem> e;
  ComplexMatrix() = default;
  ComplexMatrix(int r, int c) : rows(r), cols(c), e(r * c) {}
  CElem& at(int r, int c) { return e[r * cols + c]; }
  const CElem& at(int r, int c) const { return e[r * cols + c]; }
  ComplexMatrix operator*(const ComplexMatrix& o) const;
  bool operator==(const ComplexMatrix& o) const;
};

ComplexMatrix complexify(const QuatMatrix& g);
ComplexMatrix complexify_vec(const QuatVector& v);  // 2d x 1 column

// Rank of M as a map of right H-modules, by exact Gaussian elimination
// (row operations multiply on the left; first nonzero pivot in column order).
int quat_rank(const QuatMatrix& m);

// For v = (a, b) in H^2: (-conj(a)^-1 conj(b) conj(a), conj(a)) when a != 0,
// (conj(b), 0) when a = 0.  Orthogonal to v with the same norm.
QuatVector perp_vector(const QuatVector& v);

// Canonical line representative: right-multiply so the first nonzero
// coordinate is 1, clear rational denominators, divide out integer content.
// The resulting key is the dedup key for lines everywhere.
QuatVector canonical_line_rep(const QuatVector& v);
std::string line_key(const QuatVector& v);

// Parsing of quaternions / vectors / matrices in the CLI text syntax.
// A quaternion is a sum of terms; each term is an optional rational,
// optional radicals rN and an optional unit i/j/k, multiplied together,
// e.g. "1/2 + r3/2*i" is not valid but "1/2 + 1/2*r3*i" is.
Quaternion parse_quaternion(const std::string& s);
// "(q, q)" with entries separated by commas
QuatVector parse_vector(const std::string& s);
// rows on lines, entries separated by commas; blank lines separate matrices
std::vector<QuatMatrix> parse_matrices(const std::string& text);

}  // namespace qlin

#endif
