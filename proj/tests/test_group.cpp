// Group machinery against brute-force oracles on H_24, plus conjugation
// invariance of the reflection data.

#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "qlin/constants.hpp"
#include "qlin/group.hpp"
#include "qlin/subgroups.hpp"

using namespace qlin;
namespace cn = qlin::constants;

TEST_SUITE("group") {

TEST_CASE("multiplication table matches matrix products exhaustively") {
  FiniteMatrixGroup g = FiniteMatrixGroup::close(cn::gens_b(2));
  REQUIRE(g.order() == 24);
  for (int a = 0; a < g.order(); ++a) {
    CHECK(g.elem(a) * g.elem(g.inv(a)) == QuatMatrix::identity(2));
    for (int b = 0; b < g.order(); ++b)
      CHECK(g.elem(g.mul(a, b)) == g.elem(a) * g.elem(b));
  }
}

TEST_CASE("conjugacy classes against a brute-force orbit oracle") {
  FiniteMatrixGroup g = FiniteMatrixGroup::close(cn::gens_b(2));
  // oracle: orbits of x -> h^-1 x h over all h, via plain sets
  std::set<std::set<int>> orbits;
  for (int x = 0; x < g.order(); ++x) {
    std::set<int> orb;
    for (int h = 0; h < g.order(); ++h) orb.insert(g.conjugate(x, h));
    orbits.insert(std::move(orb));
  }
  std::vector<ConjClass> classes = conjugacy_classes(g);
  CHECK(classes.size() == orbits.size());
  CHECK(classes.size() == 7);  // SL(2,3)
  for (const auto& c : classes) {
    std::set<int> members(c.members.begin(), c.members.end());
    CHECK(orbits.count(members) == 1);
    CHECK(c.size == static_cast<int>(members.size()));
    for (int m : c.members) CHECK(g.element_order(m) == c.element_order);
  }
}

TEST_CASE("H_24 reflection data") {
  FiniteMatrixGroup g = FiniteMatrixGroup::close(cn::gens_b(2));
  ReflectionData rd = reflections_and_root_lines(g);
  CHECK(rd.reflections.size() == 8);
  CHECK(rd.root_lines.size() == 4);
  for (int r : rd.reflections) CHECK(g.element_order(r) == 3);
}

TEST_CASE("reflection counts are conjugation invariant") {
  // A is a scalar multiple of a unitary (A*A = cI), so conjugation by it
  // preserves unitarity while moving to a genuinely different basis
  QuatMatrix A = cn::A();
  QuatMatrix Ainv =
      scalar_matrix(2, Quaternion(cn::A_star_A_scalar().inverse())) *
      A.conj_transpose();
  REQUIRE(A * Ainv == QuatMatrix::identity(2));
  std::vector<QuatMatrix> gens;
  for (const auto& m : cn::gens_b(2)) gens.push_back(A * m * Ainv);
  FiniteMatrixGroup g = FiniteMatrixGroup::close(gens);
  CHECK(g.order() == 24);
  ReflectionData rd = reflections_and_root_lines(g);
  CHECK(rd.reflections.size() == 8);
  CHECK(rd.root_lines.size() == 4);
}

TEST_CASE("element orders") {
  FiniteMatrixGroup g = FiniteMatrixGroup::close(cn::gens_b(2));
  for (int x = 0; x < g.order(); ++x) {
    int o = g.element_order(x);
    int acc = x;
    for (int k = 1; k < o; ++k) {
      CHECK(acc != 0);
      acc = g.mul(acc, x);
    }
    CHECK(acc == 0);  // x^o = identity
  }
}

TEST_CASE("subgroup closure") {
  FiniteMatrixGroup g = FiniteMatrixGroup::close(cn::gens_b(2));
  int b1 = g.generator_index(0), b2 = g.generator_index(1);
  CHECK(subgroup_closure(g, {b1}, 24).size() == 3);
  CHECK(subgroup_closure(g, {b2}, 24).size() == 4);  // b2^2 = -I
  CHECK(subgroup_closure(g, {b1, b2}, 24).size() == 24);
  CHECK(subgroup_closure(g, {b2}, 3).empty());  // cap exceeded
}

TEST_CASE("irreducibility verdicts") {
  FiniteMatrixGroup h24 = FiniteMatrixGroup::close(cn::gens_b(2));
  CHECK(is_irreducible(h24).irreducible);
  FiniteMatrixGroup h3 = FiniteMatrixGroup::close(cn::gens_b(1));
  IrreducibilityResult r = is_irreducible(h3);
  CHECK(!r.irreducible);
  CHECK(r.confidence == "certain");
}

TEST_CASE("H_24 subgroup census against SL(2,3)") {
  FiniteMatrixGroup g = FiniteMatrixGroup::close(cn::gens_b(2));
  std::vector<SubgroupClass> subs = enumerate_subgroups(g);
  // SL(2,3): 1, C2 (centre), C3, C4 x3, C6, Q8, G
  std::vector<int> orders;
  for (const auto& s : subs) orders.push_back(s.order);
  std::sort(orders.begin(), orders.end());
  CHECK(orders == std::vector<int>{1, 2, 3, 4, 6, 8, 24});
  for (const auto& s : subs) {
    if (s.order == 4) CHECK(s.n_conjugates == 3);
    // Q8's 2-dim complex irrep has quaternionic type, so over H it
    // splits into two 1-dim summands
    if (s.order == 8) CHECK(s.reducible);
    if (s.order == 24) CHECK(!s.reducible);
  }
}

TEST_CASE("permutation parity") {
  CHECK(permutation_is_even({0, 1, 2, 3}));
  CHECK(!permutation_is_even({1, 0, 2, 3}));
  CHECK(permutation_is_even({1, 0, 3, 2}));
  CHECK(!permutation_is_even({1, 2, 0, 4, 3}));
}

}  // TEST_SUITE
