// Numerical search for lines fixed by a reducible subgroup, followed by
// exact reconstruction and certification.  The search runs in the 4d real
// coordinates of x in H^d with Levenberg-Marquardt on the residual system
// r_g = |<gx,x>|^2 - <x,x>^2, one residual per generator.

#ifndef QLIN_FIXEDLINES_HPP
#define QLIN_FIXEDLINES_HPP

#include <cstdint>
#include <optional>

#include "qlin/qlinalg.hpp"

namespace qlin {

struct FixedLineCandidate {
  std::vector<double> numeric;  // 4d reals: (1,i,j,k) parts per coordinate
  double residual = 0.0;        // objective value at the numeric point
  std::optional<QuatVector> exact;
  bool certified = false;
};

// Numeric image of the generators / vectors (row-major 4-tuples).
std::vector<double> numeric_vector(const QuatVector& v);

double fixed_line_objective(const std::vector<QuatMatrix>& gens,
                            const std::vector<double>& x);

// Analytic gradient of the objective; property-tested against central
// finite differences.
std::vector<double> fixed_line_gradient(const std::vector<QuatMatrix>& gens,
                                        const std::vector<double>& x);

struct SearchOptions {
  int restarts = 200;
  std::uint64_t seed = 1;
  double tolerance = 1e-18;   // on the objective (squared residuals)
  int denom_bound = 24;       // for snapping
  bool snap = true;
};

// Random unit starts, LM minimization, dedup by numeric line angle,
// then snap + exact certification.  Deterministic in (seed, restarts);
// the parallel and serial drivers must produce identical lists.
std::vector<FixedLineCandidate> search_fixed_lines(
    const std::vector<QuatMatrix>& gens, const SearchOptions& opt = {});
std::vector<FixedLineCandidate> search_fixed_lines_serial(
    const std::vector<QuatMatrix>& gens, const SearchOptions& opt = {});

// Reconstruct exact coordinates (p/q)*beta over the radical basis after
// phase canonicalization and rescaling by each element of a fixed scale
// set.  Returns a vector only when certify_fixed_line passes.
std::optional<QuatVector> snap_to_field(const std::vector<QuatMatrix>& gens,
                                        const std::vector<double>& x,
                                        int denom_bound = 24);

// Exact check |<gv,v>|^2 = <v,v>^2 for every generator.
bool certify_fixed_line(const std::vector<QuatMatrix>& gens, const QuatVector& v);

}  // namespace qlin

#endif
