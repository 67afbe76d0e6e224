#include "qlin/stabilizers.hpp"

#include <algorithm>
#include <set>

namespace qlin {

ProjectiveStabilizer projective_stabilizer(const FiniteMatrixGroup& g,
                                           const QuatVector& v) {
  if (v.is_zero()) throw GroupError("stabilizer of the zero vector");
  ProjectiveStabilizer s;
  s.line_rep = canonical_line_rep(v);
  int pivot = 0;
  while (s.line_rep[pivot].is_zero()) ++pivot;
  // the pivot coordinate of a canonical representative is a positive integer
  Quaternion pv = s.line_rep[pivot];
  Quaternion pv_inv = pv.inverse();
  for (int e = 0; e < g.order(); ++e) {
    QuatVector gv = g.elem(e) * s.line_rep;
    Quaternion a = gv[pivot] * pv_inv;  // central pivot: order immaterial
    if (gv == s.line_rep * a) {
      s.elems.push_back(e);
      s.alpha.emplace(e, std::move(a));
    }
  }
  return s;
}

FiniteMatrixGroup stabilizer_group(const FiniteMatrixGroup& parent,
                                   const ProjectiveStabilizer& s) {
  std::vector<QuatMatrix> gens;
  gens.reserve(s.elems.size());
  for (int e : s.elems) gens.push_back(parent.elem(e));
  return FiniteMatrixGroup::close(gens, static_cast<int>(gens.size()) + 1);
}

std::vector<Quaternion> scalar_values(const ProjectiveStabilizer& s) {
  std::vector<Quaternion> out;
  out.reserve(s.elems.size());
  for (int e : s.elems) out.push_back(s.alpha.at(e));
  return out;
}

bool alpha_faithful(const ProjectiveStabilizer& s) {
  std::set<std::string> keys;
  for (const auto& [e, a] : s.alpha) keys.insert(a.str());
  return keys.size() == s.alpha.size();
}

std::string HStarClass::name() const {
  switch (kind) {
    case Cyclic: return "cyclic(" + std::to_string(m) + ")";
    case BinaryDihedral: return "binary_dihedral(" + std::to_string(m) + ")";
    case BinaryTetrahedral: return "binary_tetrahedral";
    case BinaryOctahedral: return "binary_octahedral";
    case BinaryIcosahedral: return "binary_icosahedral";
  }
  return "?";
}

HStarClass classify_hstar(const std::vector<Quaternion>& scalars) {
  // dedup and sanity checks
  std::vector<Quaternion> s;
  std::set<std::string> keys;
  for (const auto& q : scalars) {
    if (q.norm() != FieldElem(1)) throw GroupError("scalar is not a unit quaternion");
    if (keys.insert(q.str()).second) s.push_back(q);
  }
  const int n = static_cast<int>(s.size());
  for (const auto& p : s)
    for (const auto& q : s)
      if (!keys.count((p * q).str()))
        throw GroupError("scalar set is not closed under multiplication");

  std::multiset<int> profile;
  int max_order = 1;
  for (const auto& q : s) {
    auto o = q.mult_order(2 * n + 1);
    if (!o) throw GroupError("scalar has no finite order within the cap");
    profile.insert(*o);
    max_order = std::max(max_order, *o);
  }
  std::set<int> orders(profile.begin(), profile.end());

  bool abelian = true;
  for (int i = 0; i < n && abelian; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!(s[i] * s[j] == s[j] * s[i])) {
        abelian = false;
        break;
      }

  if (abelian) {
    if (max_order != n) throw GroupError("abelian scalar group is not cyclic");
    return {HStarClass::Cyclic, n, n};
  }
  static const std::set<int> kT{1, 2, 3, 4, 6};
  static const std::set<int> kO{1, 2, 3, 4, 6, 8};
  static const std::set<int> kI{1, 2, 3, 4, 5, 6, 10};
  if (n == 24 && orders == kT) return {HStarClass::BinaryTetrahedral, n, 0};
  if (n == 48 && orders == kO) return {HStarClass::BinaryOctahedral, n, 0};
  if (n == 120 && orders == kI) return {HStarClass::BinaryIcosahedral, n, 0};
  if (n % 4 == 0 && max_order == n / 2 &&
      std::count(profile.begin(), profile.end(), 2) == 1)
    return {HStarClass::BinaryDihedral, n, n / 4};
  throw GroupError("scalar group of order " + std::to_string(n) +
                   " matches no finite subgroup profile");
}

RestrictionCharacters restriction_characters(const FiniteMatrixGroup& parent,
                                             const ProjectiveStabilizer& s,
                                             const ProjectiveStabilizer& s_perp) {
  if (s.elems != s_perp.elems)
    throw GroupError("stabilizers are over different subgroups");
  // conjugacy classes of the common subgroup, via the parent table
  std::unordered_map<int, int> cls;
  RestrictionCharacters rc;
  for (int x : s.elems) {
    if (cls.count(x)) continue;
    int id = static_cast<int>(rc.class_reps.size());
    std::vector<int> queue{x};
    cls[x] = id;
    int size = 0;
    while (!queue.empty()) {
      int y = queue.back();
      queue.pop_back();
      ++size;
      for (int h : s.elems) {
        int z = parent.conjugate(y, h);
        if (!cls.count(z)) {
          cls[z] = id;
          queue.push_back(z);
        }
      }
    }
    rc.class_reps.push_back(x);
    rc.class_sizes.push_back(size);
    rc.chi_w.push_back(FieldElem(2) * s.alpha.at(x).re());
    rc.chi_w_perp.push_back(FieldElem(2) * s_perp.alpha.at(x).re());
  }
  rc.distinct = rc.chi_w != rc.chi_w_perp;
  return rc;
}

}  // namespace qlin
