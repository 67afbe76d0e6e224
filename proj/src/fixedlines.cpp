#include "qlin/fixedlines.hpp"

#include <array>
#include <cmath>
#include <iterator>
#include <random>

#ifdef QLIN_HAVE_OPENMP
#include <omp.h>
#endif

#include "qlin/constants.hpp"

namespace qlin {

namespace {

using NQ = std::array<double, 4>;  // numeric quaternion (1, i, j, k)

NQ qmul(const NQ& p, const NQ& q) {
  return {p[0] * q[0] - p[1] * q[1] - p[2] * q[2] - p[3] * q[3],
          p[0] * q[1] + p[1] * q[0] + p[2] * q[3] - p[3] * q[2],
          p[0] * q[2] - p[1] * q[3] + p[2] * q[0] + p[3] * q[1],
          p[0] * q[3] + p[1] * q[2] - p[2] * q[1] + p[3] * q[0]};
}
NQ qconj(const NQ& p) { return {p[0], -p[1], -p[2], -p[3]}; }
NQ qadd(const NQ& p, const NQ& q) {
  return {p[0] + q[0], p[1] + q[1], p[2] + q[2], p[3] + q[3]};
}
double qnorm(const NQ& p) {
  return p[0] * p[0] + p[1] * p[1] + p[2] * p[2] + p[3] * p[3];
}
double qdot(const NQ& p, const NQ& q) {
  return p[0] * q[0] + p[1] * q[1] + p[2] * q[2] + p[3] * q[3];
}

NQ numeric_quat(const Quaternion& q) {
  return {q.a.to_double(), q.b.to_double(), q.c.to_double(), q.d.to_double()};
}

struct NumMatrix {
  int rows = 0, cols = 0;
  std::vector<NQ> e;
  const NQ& at(int r, int c) const { return e[r * cols + c]; }
};

NumMatrix numeric_matrix(const QuatMatrix& m) {
  NumMatrix n{m.rows, m.cols, {}};
  n.e.reserve(m.e.size());
  for (const auto& q : m.e) n.e.push_back(numeric_quat(q));
  return n;
}

std::vector<NQ> as_quats(const std::vector<double>& x) {
  std::vector<NQ> v(x.size() / 4);
  for (size_t i = 0; i < v.size(); ++i)
    v[i] = {x[4 * i], x[4 * i + 1], x[4 * i + 2], x[4 * i + 3]};
  return v;
}

std::vector<NQ> mat_apply(const NumMatrix& m, const std::vector<NQ>& v) {
  std::vector<NQ> out(m.rows, NQ{0, 0, 0, 0});
  for (int r = 0; r < m.rows; ++r)
    for (int c = 0; c < m.cols; ++c) out[r] = qadd(out[r], qmul(m.at(r, c), v[c]));
  return out;
}

NQ nip(const std::vector<NQ>& v, const std::vector<NQ>& w) {
  NQ s{0, 0, 0, 0};
  for (size_t i = 0; i < v.size(); ++i) s = qadd(s, qmul(qconj(v[i]), w[i]));
  return s;
}

// residuals r_g = |<gx,x>|^2 - <x,x>^2 and the Jacobian d r_g / d x
struct Residuals {
  std::vector<double> r;
  std::vector<std::vector<double>> jac;  // r.size() x 4d
};

Residuals residuals(const std::vector<NumMatrix>& gens, const std::vector<double>& x,
                    bool with_jacobian) {
  std::vector<NQ> xv = as_quats(x);
  const int d = static_cast<int>(xv.size());
  double s = 0;
  for (const auto& q : xv) s += qnorm(q);
  static const NQ units[4] = {
      {1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
  Residuals res;
  for (const auto& g : gens) {
    std::vector<NQ> y = mat_apply(g, xv);
    NQ q = nip(y, xv);
    res.r.push_back(qnorm(q) - s * s);
    if (!with_jacobian) continue;
    // column inner products c_i = <col_i(g), x>
    std::vector<NQ> col(d, NQ{0, 0, 0, 0});
    for (int i = 0; i < d; ++i)
      for (int r = 0; r < d; ++r) col[i] = qadd(col[i], qmul(qconj(g.at(r, i)), xv[r]));
    std::vector<double> row(4 * d);
    for (int i = 0; i < d; ++i)
      for (int mu = 0; mu < 4; ++mu) {
        // dq = conj(u) c_i + conj(y_i) u for the unit direction u in slot i
        NQ dq = qadd(qmul(qconj(units[mu]), col[i]), qmul(qconj(y[i]), units[mu]));
        row[4 * i + mu] = 2 * qdot(q, dq) - 4 * s * xv[i][mu];
      }
    res.jac.push_back(std::move(row));
  }
  return res;
}

// solve (A + lambda diag(A)) dx = b for the small symmetric system
bool solve_damped(std::vector<double> a, int n, double lambda, std::vector<double> b,
                  std::vector<double>& out) {
  for (int i = 0; i < n; ++i) a[i * n + i] *= (1 + lambda);
  for (int i = 0; i < n; ++i) a[i * n + i] += 1e-12;
  for (int c = 0; c < n; ++c) {
    int piv = c;
    for (int r = c + 1; r < n; ++r)
      if (std::fabs(a[r * n + c]) > std::fabs(a[piv * n + c])) piv = r;
    if (std::fabs(a[piv * n + c]) < 1e-300) return false;
    if (piv != c) {
      for (int k = 0; k < n; ++k) std::swap(a[c * n + k], a[piv * n + k]);
      std::swap(b[c], b[piv]);
    }
    for (int r = c + 1; r < n; ++r) {
      double f = a[r * n + c] / a[c * n + c];
      for (int k = c; k < n; ++k) a[r * n + k] -= f * a[c * n + k];
      b[r] -= f * b[c];
    }
  }
  out.assign(n, 0);
  for (int r = n - 1; r >= 0; --r) {
    double s = b[r];
    for (int k = r + 1; k < n; ++k) s -= a[r * n + k] * out[k];
    out[r] = s / a[r * n + r];
  }
  return true;
}

void normalize(std::vector<double>& x) {
  double n = 0;
  for (double v : x) n += v * v;
  n = std::sqrt(n);
  if (n > 0)
    for (double& v : x) v /= n;
}

double objective_from(const std::vector<NumMatrix>& gens, const std::vector<double>& x) {
  Residuals res = residuals(gens, x, false);
  double f = 0;
  for (double r : res.r) f += r * r;
  return f;
}

// The residuals above are sign-definite (Cauchy-Schwarz), so their gradient
// vanishes at every solution and plain LM stalls at ~1e-5 accuracy.  Near a
// solution we switch to the eigenvector equations g x = x lambda_g with the
// optimal lambda_g = <x,gx>/<x,x> substituted in closed form; those zeros are
// nondegenerate and LM regains fast convergence.
std::vector<double> eigen_residual(const std::vector<NumMatrix>& gens,
                                   const std::vector<double>& x) {
  std::vector<NQ> xv = as_quats(x);
  double nx = 0;
  for (const auto& q : xv) nx += qnorm(q);
  std::vector<double> out;
  out.reserve(4 * xv.size() * gens.size());
  for (const auto& g : gens) {
    std::vector<NQ> y = mat_apply(g, xv);
    NQ lam = nip(xv, y);
    for (double& c : lam) c /= nx;
    for (size_t i = 0; i < xv.size(); ++i) {
      NQ e = qmul(xv[i], lam);
      for (int mu = 0; mu < 4; ++mu) out.push_back(y[i][mu] - e[mu]);
    }
  }
  return out;
}

void eigen_polish(const std::vector<NumMatrix>& gens, std::vector<double>& x) {
  const int n = static_cast<int>(x.size());
  double lambda = 1e-3;
  auto ssq = [](const std::vector<double>& r) {
    double s = 0;
    for (double v : r) s += v * v;
    return s;
  };
  std::vector<double> r = eigen_residual(gens, x);
  double f = ssq(r);
  const int m = static_cast<int>(r.size());
  for (int iter = 0; iter < 80 && f > 1e-30; ++iter) {
    // forward-difference Jacobian; the system is tiny
    std::vector<std::vector<double>> jac(n);
    const double h = 1e-7;
    for (int i = 0; i < n; ++i) {
      std::vector<double> xp = x;
      xp[i] += h;
      std::vector<double> rp = eigen_residual(gens, xp);
      jac[i].resize(m);
      for (int k = 0; k < m; ++k) jac[i][k] = (rp[k] - r[k]) / h;
    }
    std::vector<double> jtj(n * n, 0.0), jtr(n, 0.0);
    for (int i = 0; i < n; ++i) {
      for (int k = 0; k < m; ++k) jtr[i] += jac[i][k] * r[k];
      for (int j = i; j < n; ++j) {
        double s = 0;
        for (int k = 0; k < m; ++k) s += jac[i][k] * jac[j][k];
        jtj[i * n + j] = jtj[j * n + i] = s;
      }
    }
    bool improved = false;
    for (int attempt = 0; attempt < 12; ++attempt) {
      std::vector<double> dx;
      if (!solve_damped(jtj, n, lambda, jtr, dx)) break;
      std::vector<double> xn = x;
      for (int i = 0; i < n; ++i) xn[i] -= dx[i];
      normalize(xn);
      std::vector<double> rn = eigen_residual(gens, xn);
      double fn = ssq(rn);
      if (fn < f) {
        x = std::move(xn);
        r = std::move(rn);
        f = fn;
        lambda = std::max(lambda * 0.3, 1e-14);
        improved = true;
        break;
      }
      lambda *= 5;
    }
    if (!improved) break;
  }
}

// Levenberg-Marquardt from one start; returns final objective
double minimize(const std::vector<NumMatrix>& gens, std::vector<double>& x,
                double tol) {
  const int n = static_cast<int>(x.size());
  normalize(x);
  double lambda = 1e-3;
  double f = objective_from(gens, x);
  for (int iter = 0; iter < 400 && f > tol; ++iter) {
    Residuals res = residuals(gens, x, true);
    const int m = static_cast<int>(res.r.size());
    std::vector<double> jtj(n * n, 0.0), jtr(n, 0.0);
    for (int g = 0; g < m; ++g) {
      for (int i = 0; i < n; ++i) {
        jtr[i] += res.jac[g][i] * res.r[g];
        for (int j = i; j < n; ++j) jtj[i * n + j] += res.jac[g][i] * res.jac[g][j];
      }
    }
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < i; ++j) jtj[i * n + j] = jtj[j * n + i];
    bool improved = false;
    for (int attempt = 0; attempt < 12; ++attempt) {
      std::vector<double> dx;
      if (!solve_damped(jtj, n, lambda, jtr, dx)) break;
      std::vector<double> xn = x;
      for (int i = 0; i < n; ++i) xn[i] -= dx[i];
      normalize(xn);
      double fn = objective_from(gens, xn);
      if (fn < f) {
        x = std::move(xn);
        f = fn;
        lambda = std::max(lambda * 0.3, 1e-12);
        improved = true;
        break;
      }
      lambda *= 5;
    }
    if (!improved) break;
  }
  if (f < 1e-8) {
    std::vector<double> xp = x;
    eigen_polish(gens, xp);
    double fp = objective_from(gens, xp);
    if (fp < f) {
      x = std::move(xp);
      f = fp;
    }
  }
  return f;
}

double line_angle(const std::vector<double>& a, const std::vector<double>& b) {
  std::vector<NQ> av = as_quats(a), bv = as_quats(b);
  NQ q = nip(av, bv);
  double na = 0, nb = 0;
  for (const auto& v : av) na += qnorm(v);
  for (const auto& v : bv) nb += qnorm(v);
  return qnorm(q) / (na * nb);
}

}  // namespace

std::vector<double> numeric_vector(const QuatVector& v) {
  std::vector<double> out;
  out.reserve(4 * v.dim());
  for (int i = 0; i < v.dim(); ++i) {
    NQ q = numeric_quat(v[i]);
    out.insert(out.end(), q.begin(), q.end());
  }
  return out;
}

double fixed_line_objective(const std::vector<QuatMatrix>& gens,
                            const std::vector<double>& x) {
  std::vector<NumMatrix> ng;
  for (const auto& g : gens) ng.push_back(numeric_matrix(g));
  return objective_from(ng, x);
}

std::vector<double> fixed_line_gradient(const std::vector<QuatMatrix>& gens,
                                        const std::vector<double>& x) {
  std::vector<NumMatrix> ng;
  for (const auto& g : gens) ng.push_back(numeric_matrix(g));
  Residuals res = residuals(ng, x, true);
  std::vector<double> grad(x.size(), 0.0);
  for (size_t g = 0; g < res.r.size(); ++g)
    for (size_t i = 0; i < x.size(); ++i) grad[i] += 2 * res.r[g] * res.jac[g][i];
  return grad;
}

bool certify_fixed_line(const std::vector<QuatMatrix>& gens, const QuatVector& v) {
  if (v.is_zero()) throw DimensionError("certify of the zero vector");
  FieldElem s = inner_product(v, v).re();
  FieldElem s2 = s * s;
  for (const auto& g : gens)
    if (inner_product(g * v, v).norm() != s2) return false;
  return true;
}

std::optional<QuatVector> snap_to_field(const std::vector<QuatMatrix>& gens,
                                        const std::vector<double>& x,
                                        int denom_bound) {
  std::vector<NQ> xv = as_quats(x);
  const int d = static_cast<int>(xv.size());
  // phase canonicalization: make the first nonzero coordinate real positive
  int pivot = -1;
  for (int i = 0; i < d && pivot < 0; ++i)
    if (qnorm(xv[i]) > 1e-12) pivot = i;
  if (pivot < 0) return std::nullopt;
  double pn = std::sqrt(qnorm(xv[pivot]));
  NQ phase = qconj(xv[pivot]);
  for (double& c : phase) c /= pn;
  for (auto& q : xv) q = qmul(q, phase);
  // scale so the pivot coordinate is exactly 1
  for (auto& q : xv)
    for (double& c : q) c /= pn;

  using constants::r;
  using constants::tau;
  const FieldElem scales[] = {
      FieldElem(1), r(2), r(3), r(5), r(6), r(10), r(15), r(30),
      r(2) + r(10), r(10) - r(2), FieldElem(1) + r(2), FieldElem(1) + r(3),
      FieldElem(1) + r(5), r(3) - FieldElem(1), r(5) - FieldElem(1),
      tau(), tau().inverse(), FieldElem(2), r(2) * FieldElem(2)};
  // per-coordinate basis: same constants, with cached double values
  const int nscales = static_cast<int>(std::size(scales));
  std::vector<double> scale_val(nscales);
  for (int s = 0; s < nscales; ++s) scale_val[s] = scales[s].to_double();

  for (const FieldElem& sigma : scales) {
    double sv = sigma.to_double();
    bool ok = true;
    QuatVector exact(d);
    for (int i = 0; i < d && ok; ++i) {
      FieldElem comp[4];
      for (int mu = 0; mu < 4 && ok; ++mu) {
        double val = xv[i][mu] * sv;
        if (std::fabs(val) < 1e-9) {
          comp[mu] = FieldElem(0);
          continue;
        }
        bool found = false;
        for (int q = 1; q <= denom_bound && !found; ++q)
          for (int b = 0; b < nscales; ++b) {
            double t = val / scale_val[b];
            double p = std::round(t * q);
            if (p != 0 && std::fabs(t - p / q) < 1e-9 * std::max(1.0, std::fabs(t))) {
              comp[mu] = FieldElem(Rational(static_cast<long>(p)) / q) * scales[b];
              found = true;
              break;
            }
          }
        ok = found;
      }
      if (ok) exact[i] = Quaternion(comp[0], comp[1], comp[2], comp[3]);
    }
    if (!ok || exact.is_zero()) continue;
    if (certify_fixed_line(gens, exact)) return canonical_line_rep(exact);
  }
  return std::nullopt;
}

namespace {

std::vector<double> random_unit_start(int n, std::uint64_t seed, int restart) {
  std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ull + restart + 1);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<double> x(n);
  for (double& v : x) v = gauss(rng);
  normalize(x);
  return x;
}

std::vector<FixedLineCandidate> collect(const std::vector<QuatMatrix>& gens,
                                        const SearchOptions& opt,
                                        std::vector<std::pair<double, std::vector<double>>>& runs) {
  std::vector<FixedLineCandidate> out;
  for (auto& [f, x] : runs) {
    if (f > opt.tolerance) continue;
    bool dup = false;
    for (const auto& c : out)
      if (line_angle(c.numeric, x) > 1 - 1e-6) {
        dup = true;
        break;
      }
    if (dup) continue;
    FixedLineCandidate cand;
    cand.numeric = std::move(x);
    cand.residual = f;
    if (opt.snap) {
      cand.exact = snap_to_field(gens, cand.numeric, opt.denom_bound);
      cand.certified = cand.exact.has_value();
    }
    out.push_back(std::move(cand));
  }
  return out;
}

}  // namespace

std::vector<FixedLineCandidate> search_fixed_lines_serial(
    const std::vector<QuatMatrix>& gens, const SearchOptions& opt) {
  if (gens.empty()) throw DimensionError("no generators");
  std::vector<NumMatrix> ng;
  for (const auto& g : gens) ng.push_back(numeric_matrix(g));
  const int n = 4 * gens[0].rows;
  std::vector<std::pair<double, std::vector<double>>> runs(opt.restarts);
  for (int r = 0; r < opt.restarts; ++r) {
    std::vector<double> x = random_unit_start(n, opt.seed, r);
    double f = minimize(ng, x, opt.tolerance);
    runs[r] = {f, std::move(x)};
  }
  return collect(gens, opt, runs);
}

std::vector<FixedLineCandidate> search_fixed_lines(
    const std::vector<QuatMatrix>& gens, const SearchOptions& opt) {
#ifdef QLIN_HAVE_OPENMP
  if (gens.empty()) throw DimensionError("no generators");
  std::vector<NumMatrix> ng;
  for (const auto& g : gens) ng.push_back(numeric_matrix(g));
  const int n = 4 * gens[0].rows;
  std::vector<std::pair<double, std::vector<double>>> runs(opt.restarts);
#pragma omp parallel for schedule(dynamic, 4)
  for (int r = 0; r < opt.restarts; ++r) {
    std::vector<double> x = random_unit_start(n, opt.seed, r);
    double f = minimize(ng, x, opt.tolerance);
    runs[r] = {f, std::move(x)};
  }
  // merge in restart order keeps the result deterministic
  return collect(gens, opt, runs);
#else
  return search_fixed_lines_serial(gens, opt);
#endif
}

}  // namespace qlin
