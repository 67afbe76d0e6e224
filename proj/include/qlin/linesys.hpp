// Line systems as group orbits: angle multisets, equiangularity, spherical
// (t,t)-design certification, and the special/absolute bounds.
//
// Every check runs in the normalized-angle form |<v,w>|^2 / (<v,v><w,w>),
// so the canonical (unnormalized) line representatives are used throughout
// and no square roots are ever taken.

#ifndef QLIN_LINESYS_HPP
#define QLIN_LINESYS_HPP

#include <map>
#include <optional>

#include "qlin/group.hpp"

namespace qlin {

struct Line {
  QuatVector rep;   // canonical representative
  std::string key;
};

struct LineSystem {
  int dim = 0;
  std::vector<Line> lines;
  std::vector<long> vec_counts;  // distinct orbit vectors per line
  long orbit_vectors = 0;        // total distinct vectors in the orbit

  int size() const { return static_cast<int>(lines.size()); }
};

// Distinct lines of the orbit {g v}, ordered by first occurrence in the
// deterministic group order.  The six-line systems of the fiducials w and
// w-perp are re-ordered as w, b1 w, b1^2 w, b2 w, b1 b2 w, b1^2 b2 w.
LineSystem orbit_lines(const FiniteMatrixGroup& g, const QuatVector& v);

// Line system from explicit vectors (deduplicated, order of first occurrence).
LineSystem lines_from_vectors(const std::vector<QuatVector>& vs);

struct AngleSet {
  // angle -> multiplicity over ordered pairs from one base line (sorted by value)
  std::vector<std::pair<FieldElem, long>> per_base;
  bool per_base_uniform = false;  // identical multiset from every base line
  bool equiangular = false;       // single nonunit angle value
  // global multiset over all ordered pairs j != k
  std::vector<std::pair<FieldElem, long>> global;
};

AngleSet angle_set(const LineSystem& l);

// Pairwise normalized angle matrix (diagonal = 1).  The OpenMP kernel and
// the serial reference must agree exactly.
std::vector<FieldElem> angle_matrix(const LineSystem& l);
std::vector<FieldElem> angle_matrix_serial(const LineSystem& l);

// c_t(H^d) = 2*3*...*(t+1) / (2d (2d+1) ... (2d+t-1))
Rational design_constant(int t, int d);

struct DesignCheck {
  bool is_design;
  FieldElem defect;  // (1/n) sum_jk a_jk^t - c_t * n, zero iff design
};

// Ground truth via the full double sum over the angle matrix.
DesignCheck is_t_design(const LineSystem& l, int t);

// Orbit shortcut: sum_j angle(v_j, base)^t - c_t * n from one base line.
// Only valid for transitive systems; cross-checked against is_t_design.
DesignCheck is_t_design_orbit_form(const LineSystem& l, int t, int base = 0);

// Special bound nu(A) for angle-set shapes {a}, {a,b}, {0,a}, {0,a,b}.
// Returns nullopt when a stated restriction fails
// ({a,b}: a+b <= 3/(d+1); {0,a,b}: a+b <= 8/(2d+3)).
std::optional<Rational> special_bound(const std::vector<Rational>& angles, int d);

enum class AngleShape { OneAngle, TwoAngle, ZeroOneAngle, ZeroTwoAngle };
Rational absolute_bound(AngleShape shape, int d);
AngleShape shape_of(const std::vector<Rational>& angles);

// p_G^(t)(x) = (1/|G|) sum_g |<x,gx>|^{2t} - c_t <x,x>^{2t}, exact.
FieldElem design_defect(const FiniteMatrixGroup& g, int t, const QuatVector& x);
FieldElem design_defect_serial(const FiniteMatrixGroup& g, int t, const QuatVector& x);

}  // namespace qlin

#endif
