// Benchmarks the OpenMP kernels against their serial reference
// implementations and checks the outputs agree exactly.

#include <chrono>
#include <iostream>

#include "qlin/constants.hpp"
#include "qlin/fixedlines.hpp"
#include "qlin/linesys.hpp"

namespace cn = qlin::constants;

namespace {

template <class F>
double time_ms(F&& f) {
  auto t0 = std::chrono::steady_clock::now();
  f();
  auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

}  // namespace

int main() {
  qlin::FiniteMatrixGroup h720 = qlin::FiniteMatrixGroup::close(cn::gens_b(4));
  qlin::FiniteMatrixGroup h1440 = qlin::FiniteMatrixGroup::close(cn::gens_b(5));
  qlin::LineSystem thirty = qlin::orbit_lines(h720, cn::fiducial_30());
  qlin::QuatVector w = cn::w();

  std::vector<qlin::FieldElem> am_p, am_s;
  double tp = time_ms([&] { am_p = qlin::angle_matrix(thirty); });
  double ts = time_ms([&] { am_s = qlin::angle_matrix_serial(thirty); });
  std::cout << "angle_matrix (30 lines)      parallel " << tp << " ms, serial "
            << ts << " ms, equal=" << (am_p == am_s ? "yes" : "NO") << "\n";

  qlin::FieldElem dp, ds;
  tp = time_ms([&] { dp = qlin::design_defect(h1440, 3, w); });
  ts = time_ms([&] { ds = qlin::design_defect_serial(h1440, 3, w); });
  std::cout << "design_defect (|G|=1440,t=3) parallel " << tp << " ms, serial "
            << ts << " ms, equal=" << (dp == ds ? "yes" : "NO") << "\n";

  std::vector<qlin::QuatMatrix> gens{cn::b(3), cn::g2()};
  qlin::SearchOptions opt;
  opt.restarts = 64;
  std::vector<qlin::FixedLineCandidate> fp, fs;
  tp = time_ms([&] { fp = qlin::search_fixed_lines(gens, opt); });
  ts = time_ms([&] { fs = qlin::search_fixed_lines_serial(gens, opt); });
  bool same = fp.size() == fs.size();
  for (size_t i = 0; same && i < fp.size(); ++i)
    same = fp[i].exact.has_value() == fs[i].exact.has_value() &&
           (!fp[i].exact || fp[i].exact->key() == fs[i].exact->key());
  std::cout << "search_fixed_lines (64 runs) parallel " << tp << " ms, serial "
            << ts << " ms, equal=" << (same ? "yes" : "NO") << "\n";
  return 0;
}
