// Classification of finite unit-quaternion groups, with closures of the
// standard generator sets as the oracle.

#include <doctest.h>

#include <set>
#include <vector>

#include "qlin/constants.hpp"
#include "qlin/stabilizers.hpp"

using namespace qlin;
namespace cn = qlin::constants;

namespace {

// plain BFS closure in the unit group, keyed by the printed form
std::vector<Quaternion> close_scalars(std::vector<Quaternion> gens) {
  std::set<std::string> seen;
  std::vector<Quaternion> out;
  std::vector<Quaternion> queue{Quaternion(1)};
  seen.insert(Quaternion(1).str());
  while (!queue.empty()) {
    Quaternion q = queue.back();
    queue.pop_back();
    out.push_back(q);
    for (const auto& g : gens) {
      Quaternion n = q * g;
      if (seen.insert(n.str()).second) queue.push_back(n);
    }
    if (out.size() > 400) throw GroupError("scalar closure ran away");
  }
  return out;
}

}  // namespace

TEST_SUITE("stabilizers") {

TEST_CASE("binary polyhedral groups from their generators") {
  std::vector<Quaternion> t = close_scalars(cn::hstar_gens_T());
  CHECK(t.size() == 24);
  CHECK(classify_hstar(t).name() == "binary_tetrahedral");

  std::vector<Quaternion> o = close_scalars(cn::hstar_gens_O());
  CHECK(o.size() == 48);
  CHECK(classify_hstar(o).name() == "binary_octahedral");

  std::vector<Quaternion> i = close_scalars(cn::hstar_gens_I());
  CHECK(i.size() == 120);
  CHECK(classify_hstar(i).name() == "binary_icosahedral");
}

TEST_CASE("cyclic groups") {
  for (int m : {1, 2, 3, 4, 6, 8, 12}) {
    std::vector<Quaternion> c = close_scalars({cn::hstar_root_of_unity(m)});
    CHECK(c.size() == static_cast<size_t>(m));
    HStarClass cls = classify_hstar(c);
    CHECK(cls.name() == "cyclic(" + std::to_string(m) + ")");
  }
}

TEST_CASE("binary dihedral groups") {
  for (int m : {2, 3, 6}) {
    std::vector<Quaternion> d =
        close_scalars({cn::hstar_root_of_unity(2 * m), Quaternion::j()});
    CHECK(d.size() == static_cast<size_t>(4 * m));
    HStarClass cls = classify_hstar(d);
    CHECK(cls.name() == "binary_dihedral(" + std::to_string(m) + ")");
  }
}

TEST_CASE("rejects bad input") {
  // not closed under multiplication
  CHECK_THROWS_AS(classify_hstar({Quaternion(1), Quaternion::i()}), GroupError);
  // not a unit
  CHECK_THROWS_AS(classify_hstar({Quaternion(FieldElem(2))}), GroupError);
}

TEST_CASE("projective stabilizer of e1 in H_24") {
  FiniteMatrixGroup g = FiniteMatrixGroup::close(cn::gens_b(2));
  ProjectiveStabilizer st = projective_stabilizer(g, cn::e1());
  CHECK(st.order() == 6);  // orbit-stabilizer: 4 lines x 6 = 24
  for (int e : st.elems) {
    const Quaternion& a = st.alpha.at(e);
    CHECK(g.elem(e) * st.line_rep == st.line_rep * a);
  }
}

}  // TEST_SUITE
