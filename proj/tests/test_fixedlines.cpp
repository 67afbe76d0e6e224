// Numeric fixed-line search: gradient correctness, determinism of the
// parallel driver, and exact certification of the recovered lines.

#include <doctest.h>

#include <cmath>
#include <random>
#include <set>

#include "qlin/constants.hpp"
#include "qlin/fixedlines.hpp"

using namespace qlin;
namespace cn = qlin::constants;

namespace {

std::vector<QuatMatrix> stab_w_gens() { return {cn::b(3), cn::g2()}; }

}  // namespace

TEST_SUITE("fixedlines") {

TEST_CASE("gradient matches central finite differences") {
  std::vector<QuatMatrix> gens = stab_w_gens();
  std::mt19937_64 rng(101);
  std::uniform_real_distribution<double> coord(-1.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<double> x(8);
    for (double& c : x) c = coord(rng);
    std::vector<double> g = fixed_line_gradient(gens, x);
    const double h = 1e-6;
    for (int i = 0; i < 8; ++i) {
      std::vector<double> xp = x, xm = x;
      xp[i] += h;
      xm[i] -= h;
      double fd = (fixed_line_objective(gens, xp) -
                   fixed_line_objective(gens, xm)) /
                  (2 * h);
      double scale = std::max({1.0, std::fabs(g[i]), std::fabs(fd)});
      CHECK(std::fabs(g[i] - fd) / scale < 1e-4);
    }
  }
}

TEST_CASE("objective vanishes at the known fixed line") {
  std::vector<double> xw = numeric_vector(cn::w());
  CHECK(fixed_line_objective(stab_w_gens(), xw) < 1e-20);
}

TEST_CASE("search recovers w and w-perp, serial and parallel identically") {
  SearchOptions opt;
  opt.restarts = 32;
  opt.seed = 5;
  std::vector<FixedLineCandidate> par = search_fixed_lines(stab_w_gens(), opt);
  std::vector<FixedLineCandidate> ser =
      search_fixed_lines_serial(stab_w_gens(), opt);
  REQUIRE(par.size() == ser.size());
  std::set<std::string> keys;
  for (size_t i = 0; i < par.size(); ++i) {
    CHECK(par[i].certified == ser[i].certified);
    REQUIRE(par[i].exact.has_value());
    REQUIRE(ser[i].exact.has_value());
    CHECK(par[i].exact->key() == ser[i].exact->key());
    CHECK(par[i].certified);
    keys.insert(par[i].exact->key());
  }
  CHECK(keys.size() == 2);
  CHECK(keys.count(canonical_line_rep(cn::w()).key()) == 1);
  CHECK(keys.count(canonical_line_rep(cn::w_perp()).key()) == 1);
}

TEST_CASE("irreducible generator sets admit no fixed line") {
  SearchOptions opt;
  opt.restarts = 24;
  opt.seed = 9;
  std::vector<FixedLineCandidate> out =
      search_fixed_lines(cn::gens_b(2), opt);
  for (const auto& c : out) CHECK(!c.certified);
}

TEST_CASE("exact certification") {
  CHECK(certify_fixed_line(stab_w_gens(), cn::w()));
  CHECK(certify_fixed_line(stab_w_gens(), cn::w_perp()));
  CHECK(!certify_fixed_line(stab_w_gens(), cn::e1()));
  // any line is fixed by the identity alone
  CHECK(certify_fixed_line({QuatMatrix::identity(2)}, cn::e1()));
}

TEST_CASE("snapping an easy numeric line") {
  // exact target (1, (1+sqrt5)/2): snap must recover it from doubles
  double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  double n = std::sqrt(1.0 + phi * phi);
  std::vector<double> x{1.0 / n, 0, 0, 0, phi / n, 0, 0, 0};
  auto v = snap_to_field({QuatMatrix::identity(2)}, x);
  REQUIRE(v.has_value());
  QuatVector target(2);
  target[0] = Quaternion(1);
  target[1] = Quaternion((FieldElem(1) + FieldElem::sqrt_of(5)) /
                         FieldElem(2));
  CHECK(v->key() == canonical_line_rep(target).key());
}

}  // TEST_SUITE
