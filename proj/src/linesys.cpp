#include "qlin/linesys.hpp"

#include <algorithm>
#include <unordered_map>

#ifdef QLIN_HAVE_OPENMP
#include <omp.h>
#endif

#include "qlin/constants.hpp"

namespace qlin {

LineSystem orbit_lines(const FiniteMatrixGroup& g, const QuatVector& v) {
  if (v.is_zero()) throw DimensionError("orbit of the zero vector");
  LineSystem sys;
  sys.dim = v.dim();
  std::unordered_map<std::string, int> vec_seen;   // distinct orbit vectors
  std::unordered_map<std::string, int> line_pos;
  for (int i = 0; i < g.order(); ++i) {
    QuatVector gv = g.elem(i) * v;
    if (!vec_seen.emplace(gv.key(), 1).second) continue;
    ++sys.orbit_vectors;
    QuatVector rep = canonical_line_rep(gv);
    std::string k = rep.key();
    auto it = line_pos.find(k);
    if (it == line_pos.end()) {
      line_pos.emplace(k, static_cast<int>(sys.lines.size()));
      sys.lines.push_back({std::move(rep), std::move(k)});
      sys.vec_counts.push_back(1);
    } else {
      ++sys.vec_counts[it->second];
    }
  }

  // The two six-line systems carry a fixed published ordering.
  if (sys.dim == 2 && sys.size() == 6) {
    for (const auto& named : {constants::six_lines_w(), constants::six_lines_w_perp()}) {
      std::string base_key = canonical_line_rep(v).key();
      if (base_key != canonical_line_rep(named[0]).key()) continue;
      std::vector<Line> ordered;
      std::vector<long> counts;
      bool all_found = true;
      for (const auto& nv : named) {
        auto it = line_pos.find(canonical_line_rep(nv).key());
        if (it == line_pos.end()) {
          all_found = false;
          break;
        }
        ordered.push_back(sys.lines[it->second]);
        counts.push_back(sys.vec_counts[it->second]);
      }
      if (all_found) {
        sys.lines = std::move(ordered);
        sys.vec_counts = std::move(counts);
      }
      break;
    }
  }
  return sys;
}

LineSystem lines_from_vectors(const std::vector<QuatVector>& vs) {
  LineSystem sys;
  std::unordered_map<std::string, int> line_pos;
  for (const auto& v : vs) {
    if (v.is_zero()) throw DimensionError("zero vector in line list");
    if (sys.dim == 0) sys.dim = v.dim();
    ++sys.orbit_vectors;
    QuatVector rep = canonical_line_rep(v);
    std::string k = rep.key();
    auto it = line_pos.find(k);
    if (it == line_pos.end()) {
      line_pos.emplace(k, static_cast<int>(sys.lines.size()));
      sys.lines.push_back({std::move(rep), std::move(k)});
      sys.vec_counts.push_back(1);
    } else {
      ++sys.vec_counts[it->second];
    }
  }
  return sys;
}

std::vector<FieldElem> angle_matrix_serial(const LineSystem& l) {
  const int n = l.size();
  std::vector<FieldElem> m(static_cast<size_t>(n) * n, FieldElem(1));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      FieldElem a = angle(l.lines[i].rep, l.lines[j].rep);
      m[i * static_cast<size_t>(n) + j] = a;
      m[j * static_cast<size_t>(n) + i] = std::move(a);
    }
  return m;
}

std::vector<FieldElem> angle_matrix(const LineSystem& l) {
#ifdef QLIN_HAVE_OPENMP
  const int n = l.size();
  std::vector<FieldElem> m(static_cast<size_t>(n) * n, FieldElem(1));
  // row-parallel over the upper triangle; rows shrink, so dynamic scheduling
#pragma omp parallel for schedule(dynamic, 1)
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      FieldElem a = angle(l.lines[i].rep, l.lines[j].rep);
      m[i * static_cast<size_t>(n) + j] = a;
      m[j * static_cast<size_t>(n) + i] = std::move(a);
    }
  return m;
#else
  return angle_matrix_serial(l);
#endif
}

namespace {

std::vector<std::pair<FieldElem, long>> sorted_multiset(std::vector<FieldElem> vals) {
  std::sort(vals.begin(), vals.end(),
            [](const FieldElem& a, const FieldElem& b) { return (a - b).sign() < 0; });
  std::vector<std::pair<FieldElem, long>> out;
  for (auto& v : vals) {
    if (!out.empty() && out.back().first == v)
      ++out.back().second;
    else
      out.emplace_back(std::move(v), 1);
  }
  return out;
}

}  // namespace

AngleSet angle_set(const LineSystem& l) {
  if (l.size() < 2) throw DimensionError("angle set needs at least two lines");
  const int n = l.size();
  std::vector<FieldElem> m = angle_matrix(l);
  AngleSet as;
  std::vector<FieldElem> global;
  global.reserve(static_cast<size_t>(n) * (n - 1));
  for (int i = 0; i < n; ++i) {
    std::vector<FieldElem> row;
    row.reserve(n - 1);
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      row.push_back(m[i * static_cast<size_t>(n) + j]);
      global.push_back(m[i * static_cast<size_t>(n) + j]);
    }
    auto ms = sorted_multiset(std::move(row));
    if (i == 0) {
      as.per_base = std::move(ms);
      as.per_base_uniform = true;
    } else if (ms != as.per_base) {
      as.per_base_uniform = false;
    }
  }
  as.equiangular = as.per_base_uniform && as.per_base.size() == 1 &&
                   as.per_base[0].first != FieldElem(1);
  as.global = sorted_multiset(std::move(global));
  return as;
}

Rational design_constant(int t, int d) {
  if (t < 1 || d < 1) throw DimensionError("design_constant needs t, d >= 1");
  Rational num = 1, den = 1;
  for (int k = 2; k <= t + 1; ++k) num *= k;
  for (int k = 0; k < t; ++k) den *= 2 * d + k;
  Rational c = num / den;
  c.canonicalize();
  return c;
}

DesignCheck is_t_design(const LineSystem& l, int t) {
  const int n = l.size();
  std::vector<FieldElem> m = angle_matrix(l);
  FieldElem sum(0);
  for (const auto& a : m) {
    FieldElem p(1);
    for (int k = 0; k < t; ++k) p = p * a;
    sum += p;
  }
  FieldElem defect = FieldElem(Rational(1, n)) * sum -
                     FieldElem(design_constant(t, l.dim) * n);
  return {defect.is_zero(), std::move(defect)};
}

DesignCheck is_t_design_orbit_form(const LineSystem& l, int t, int base) {
  const int n = l.size();
  FieldElem sum(0);
  for (int j = 0; j < n; ++j) {
    FieldElem a = angle(l.lines[j].rep, l.lines[base].rep);
    FieldElem p(1);
    for (int k = 0; k < t; ++k) p = p * a;
    sum += p;
  }
  FieldElem defect = sum - FieldElem(design_constant(t, l.dim) * n);
  return {defect.is_zero(), std::move(defect)};
}

AngleShape shape_of(const std::vector<Rational>& angles) {
  std::vector<Rational> a = angles;
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  bool zero = !a.empty() && a.front() == 0;
  size_t nonzero = a.size() - (zero ? 1 : 0);
  if (!zero && nonzero == 1) return AngleShape::OneAngle;
  if (!zero && nonzero == 2) return AngleShape::TwoAngle;
  if (zero && nonzero == 1) return AngleShape::ZeroOneAngle;
  if (zero && nonzero == 2) return AngleShape::ZeroTwoAngle;
  throw DimensionError("angle set shape not covered by the bounds");
}

std::optional<Rational> special_bound(const std::vector<Rational>& angles, int d) {
  AngleShape shape = shape_of(angles);
  std::vector<Rational> a = angles;
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  if (!a.empty() && a.front() == 0) a.erase(a.begin());
  Rational v;
  switch (shape) {
    case AngleShape::OneAngle: {
      Rational al = a[0];
      Rational den = 1 - d * al;
      if (den == 0) throw DimensionError("special bound pole at alpha = 1/d");
      v = d * (1 - al) / den;
      break;
    }
    case AngleShape::TwoAngle: {
      Rational al = a[0], be = a[1];
      if (al + be > Rational(3) / (d + 1)) return std::nullopt;
      v = Rational(d * (2 * d + 1)) * (1 - al) * (1 - be) /
          (3 - Rational(2 * d + 1) * (al + be) + Rational(d * (2 * d + 1)) * al * be);
      break;
    }
    case AngleShape::ZeroOneAngle: {
      Rational al = a[0];
      v = Rational(d * (2 * d + 1)) * (1 - al) / (3 - Rational(2 * d + 1) * al);
      break;
    }
    case AngleShape::ZeroTwoAngle: {
      Rational al = a[0], be = a[1];
      if (al + be > Rational(8) / (2 * d + 3)) return std::nullopt;
      v = Rational(d * (d + 1) * (2 * d + 1)) * (1 - al) * (1 - be) /
          (6 - Rational(3 * (d + 1)) * (al + be) +
           Rational((d + 1) * (2 * d + 1)) * al * be);
      break;
    }
  }
  v.canonicalize();
  return v;
}

Rational absolute_bound(AngleShape shape, int d) {
  // divisions canonicalize the mpq value
  switch (shape) {
    case AngleShape::OneAngle:
      return Rational(d * (2 * d - 1));
    case AngleShape::TwoAngle:
      return Rational(d * d * (4 * d * d - 1)) / 3;
    case AngleShape::ZeroOneAngle:
      return Rational(d * (4 * d * d - 1)) / 3;
    case AngleShape::ZeroTwoAngle:
      return Rational(d * d * (d + 1) * (4 * d * d - 1)) / 6;
  }
  throw DimensionError("unknown angle shape");
}

namespace {

FieldElem defect_tail(const FiniteMatrixGroup& g, int t, const QuatVector& x,
                      const FieldElem& sum) {
  FieldElem nx = inner_product(x, x).re();
  FieldElem rhs(design_constant(t, x.dim()));
  for (int k = 0; k < 2 * t; ++k) rhs = rhs * nx;
  return FieldElem(Rational(1, g.order())) * sum - rhs;
}

}  // namespace

FieldElem design_defect_serial(const FiniteMatrixGroup& g, int t, const QuatVector& x) {
  if (x.is_zero()) throw DimensionError("design defect of the zero vector");
  FieldElem sum(0);
  for (int e = 0; e < g.order(); ++e) {
    FieldElem a = inner_product(x, g.elem(e) * x).norm();
    FieldElem p(1);
    for (int k = 0; k < t; ++k) p = p * a;
    sum += p;
  }
  return defect_tail(g, t, x, sum);
}

FieldElem design_defect(const FiniteMatrixGroup& g, int t, const QuatVector& x) {
#ifdef QLIN_HAVE_OPENMP
  if (x.is_zero()) throw DimensionError("design defect of the zero vector");
  int nthreads = 1;
#pragma omp parallel
  {
#pragma omp single
    nthreads = omp_get_num_threads();
  }
  std::vector<FieldElem> partial(nthreads, FieldElem(0));
#pragma omp parallel
  {
    int tid = omp_get_thread_num();
    FieldElem local(0);
#pragma omp for schedule(static)
    for (int e = 0; e < g.order(); ++e) {
      FieldElem a = inner_product(x, g.elem(e) * x).norm();
      FieldElem p(1);
      for (int k = 0; k < t; ++k) p = p * a;
      local += p;
    }
    partial[tid] = std::move(local);
  }
  // deterministic reduce in thread-index order
  FieldElem sum(0);
  for (auto& p : partial) sum += p;
  return defect_tail(g, t, x, sum);
#else
  return design_defect_serial(g, t, x);
#endif
}

}  // namespace qlin
