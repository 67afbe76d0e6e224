// Line systems, angle statistics, design certification and the bounds,
// checked on the small orbits where everything can be cross-validated.

#include <doctest.h>

#include "qlin/constants.hpp"
#include "qlin/linesys.hpp"

using namespace qlin;
namespace cn = qlin::constants;

TEST_SUITE("linesys") {

TEST_CASE("design constants") {
  CHECK(design_constant(1, 2) == Rational(1) / 2);
  CHECK(design_constant(2, 2) == Rational(3) / 10);
  CHECK(design_constant(3, 2) == Rational(1) / 5);
  CHECK(design_constant(4, 2) == Rational(1) / 7);
}

TEST_CASE("orbit line counts") {
  FiniteMatrixGroup h720 = FiniteMatrixGroup::close(cn::gens_b(4));
  CHECK(orbit_lines(h720, cn::w()).size() == 6);
  CHECK(orbit_lines(h720, cn::fiducial_15()).size() == 15);
  CHECK(orbit_lines(h720, cn::e1()).size() == 20);
}

TEST_CASE("parallel kernels agree with the serial references exactly") {
  FiniteMatrixGroup h720 = FiniteMatrixGroup::close(cn::gens_b(4));
  LineSystem fifteen = orbit_lines(h720, cn::fiducial_15());
  REQUIRE(fifteen.size() == 15);
  CHECK(angle_matrix(fifteen) == angle_matrix_serial(fifteen));
  for (int t = 1; t <= 3; ++t)
    CHECK(design_defect(h720, t, cn::w()) ==
          design_defect_serial(h720, t, cn::w()));
}

TEST_CASE("six-line system of w is equiangular and a (2,2)-design") {
  FiniteMatrixGroup h720 = FiniteMatrixGroup::close(cn::gens_b(4));
  LineSystem six = orbit_lines(h720, cn::w());
  AngleSet as = angle_set(six);
  CHECK(as.equiangular);
  CHECK(as.per_base_uniform);
  REQUIRE(as.per_base.size() == 1);
  CHECK(as.per_base[0].first == FieldElem(Rational(2) / 5));
  CHECK(as.per_base[0].second == 5);
  for (int t = 1; t <= 2; ++t) {
    DesignCheck dc = is_t_design(six, t);
    CHECK(dc.is_design);
    CHECK(dc.defect.is_zero());
    // the transitive shortcut must agree with the full double sum
    CHECK(is_t_design_orbit_form(six, t).is_design);
  }
  // 1 + 5 (2/5)^3 = 33/25 > (1/5) 6
  CHECK(!is_t_design(six, 3).is_design);
}

TEST_CASE("fifteen-line system angles and design order") {
  FiniteMatrixGroup h720 = FiniteMatrixGroup::close(cn::gens_b(4));
  LineSystem fifteen = orbit_lines(h720, cn::fiducial_15());
  AngleSet as = angle_set(fifteen);
  CHECK(!as.equiangular);
  std::vector<std::pair<FieldElem, long>> expect{
      {FieldElem(Rational(1) / 4), 6}, {FieldElem(Rational(5) / 8), 8}};
  CHECK(as.per_base == expect);
  CHECK(is_t_design(fifteen, 2).is_design);
  CHECK(!is_t_design(fifteen, 3).is_design);
}

TEST_CASE("special bound") {
  // {2/5} equiangular in d = 2: nu = 6, met by the six-line system
  auto b = special_bound({Rational(2) / 5}, 2);
  REQUIRE(b.has_value());
  CHECK(*b == Rational(6));
  // {1/4, 5/8}: nu = 15, met by the fifteen-line system
  auto b2 = special_bound({Rational(1) / 4, Rational(5) / 8}, 2);
  REQUIRE(b2.has_value());
  CHECK(*b2 == Rational(15));
  // restriction a + b <= 3/(d+1) fails for {1/2, 3/4}
  CHECK(!special_bound({Rational(1) / 2, Rational(3) / 4}, 2).has_value());
}

TEST_CASE("absolute bounds and shape detection") {
  CHECK(shape_of({Rational(2) / 5}) == AngleShape::OneAngle);
  CHECK(shape_of({Rational(0), Rational(1) / 4}) == AngleShape::ZeroOneAngle);
  CHECK(absolute_bound(AngleShape::OneAngle, 2) == Rational(6));
  CHECK(absolute_bound(AngleShape::TwoAngle, 2) == Rational(20));
  CHECK(absolute_bound(AngleShape::ZeroOneAngle, 2) == Rational(10));
  CHECK(absolute_bound(AngleShape::ZeroTwoAngle, 2) == Rational(30));
}

TEST_CASE("lines_from_vectors deduplicates scalar multiples") {
  QuatVector v = cn::w();
  std::vector<QuatVector> vs{v, v * Quaternion::i(), cn::e1(), v * Quaternion(2)};
  LineSystem l = lines_from_vectors(vs);
  CHECK(l.size() == 2);
}

}  // TEST_SUITE
