#include "qlin/group.hpp"

#include <algorithm>
#include <deque>
#include <tuple>
#include <random>

namespace qlin {

FiniteMatrixGroup FiniteMatrixGroup::close(const std::vector<QuatMatrix>& generators,
                                           int cap) {
  if (generators.empty()) throw GroupError("no generators");
  if (cap < 1) throw GroupError("cap must be positive");
  int d = generators[0].rows;
  for (const auto& g : generators) {
    if (g.rows != d || g.cols != d) throw GroupError("generator dims differ");
    if (!g.is_unitary()) throw GroupError("generator is not unitary over F");
  }
  FiniteMatrixGroup grp;
  auto add = [&](QuatMatrix m, int par, int genpos) -> int {
    std::string k = m.key();
    auto it = grp.index_.find(k);
    if (it != grp.index_.end()) return it->second;
    int idx = static_cast<int>(grp.elems_.size());
    if (idx >= cap)
      throw GroupError("closure exceeded cap " + std::to_string(cap));
    grp.index_.emplace(std::move(k), idx);
    grp.elems_.push_back(std::move(m));
    grp.parent_.emplace_back(par, genpos);
    grp.rgen_.emplace_back();
    return idx;
  };
  add(QuatMatrix::identity(d), -1, -1);
  for (size_t i = 0; i < grp.elems_.size(); ++i) {
    grp.rgen_[i].resize(generators.size());
    for (size_t s = 0; s < generators.size(); ++s) {
      QuatMatrix prod = grp.elems_[i] * generators[s];
      grp.rgen_[i][s] = add(std::move(prod), static_cast<int>(i), static_cast<int>(s));
    }
  }
  grp.gen_elem_idx_.resize(generators.size());
  for (size_t s = 0; s < generators.size(); ++s)
    grp.gen_elem_idx_[s] = grp.rgen_[0][s];
  grp.build_table();
  return grp;
}

void FiniteMatrixGroup::build_table() {
  int n = order();
  table_.assign(static_cast<size_t>(n) * n, -1);
  // column for g = p * gen_s follows from the column for p:
  // h*g = (h*p)*gen_s; BFS order guarantees p < g
  for (int h = 0; h < n; ++h) table_[h * static_cast<size_t>(n)] = h;
  for (int g = 1; g < n; ++g) {
    auto [p, s] = parent_[g];
    for (int h = 0; h < n; ++h)
      table_[h * static_cast<size_t>(n) + g] = rgen_[table_[h * static_cast<size_t>(n) + p]][s];
  }
  inv_.assign(n, -1);
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h)
      if (mul(g, h) == 0) {
        inv_[g] = h;
        break;
      }
}

int FiniteMatrixGroup::element_order(int g) const {
  int t = g, n = 1;
  while (t != 0) {
    t = mul(t, g);
    ++n;
  }
  return n;
}

std::optional<int> FiniteMatrixGroup::index_of(const QuatMatrix& m) const {
  auto it = index_.find(m.key());
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<int> FiniteMatrixGroup::center() const {
  std::vector<int> z;
  for (int g = 0; g < order(); ++g) {
    bool central = true;
    for (int s = 0; s < num_generators() && central; ++s) {
      int ge = gen_elem_idx_[s];
      central = (mul(g, ge) == mul(ge, g));
    }
    if (central) z.push_back(g);
  }
  return z;
}

std::vector<ConjClass> conjugacy_classes(const FiniteMatrixGroup& g) {
  int n = g.order();
  std::vector<int> cls(n, -1);
  std::vector<ConjClass> out;
  for (int x = 0; x < n; ++x) {
    if (cls[x] >= 0) continue;
    ConjClass c;
    c.rep = x;
    std::deque<int> q{x};
    cls[x] = static_cast<int>(out.size());
    c.members.push_back(x);
    while (!q.empty()) {
      int y = q.front();
      q.pop_front();
      for (int s = 0; s < g.num_generators(); ++s) {
        int z = g.conjugate(y, g.generator_index(s));
        if (cls[z] < 0) {
          cls[z] = cls[x];
          c.members.push_back(z);
          q.push_back(z);
        }
      }
    }
    c.size = static_cast<int>(c.members.size());
    c.element_order = g.element_order(x);
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(), [](const ConjClass& a, const ConjClass& b) {
    return std::tie(a.element_order, a.size, a.rep) <
           std::tie(b.element_order, b.size, b.rep);
  });
  return out;
}

QuatVector root_line_of(const QuatMatrix& g) {
  QuatMatrix m = QuatMatrix::identity(g.rows) - g;
  for (int c = 0; c < m.cols; ++c) {
    QuatVector col(m.rows);
    bool nonzero = false;
    for (int r = 0; r < m.rows; ++r) {
      col[r] = m.at(r, c);
      nonzero = nonzero || !col[r].is_zero();
    }
    if (nonzero) return canonical_line_rep(col);
  }
  throw GroupError("root_line_of identity matrix");
}

ReflectionData reflections_and_root_lines(const FiniteMatrixGroup& g) {
  ReflectionData out;
  int d = g.dim();
  std::unordered_map<std::string, int> seen;
  for (int i = 1; i < g.order(); ++i) {
    QuatMatrix diff = QuatMatrix::identity(d) - g.elem(i);
    if (quat_rank(diff) != d - 1) continue;
    out.reflections.push_back(i);
    QuatVector root = root_line_of(g.elem(i));
    std::string k = root.key();
    if (seen.emplace(std::move(k), 1).second) out.root_lines.push_back(std::move(root));
  }
  return out;
}

namespace {

QuatVector random_int_vector(int dim, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coord(-9, 9);
  while (true) {
    QuatVector v(dim);
    bool nonzero = false;
    for (int i = 0; i < dim; ++i) {
      v[i] = Quaternion(FieldElem(coord(rng)), FieldElem(coord(rng)),
                        FieldElem(coord(rng)), FieldElem(coord(rng)));
      nonzero = nonzero || !v[i].is_zero();
    }
    if (nonzero) return v;
  }
}

// p_G^(1)(x) = (1/|G|) sum_g |<x,gx>|^2 - (1/d) <x,x>^2
FieldElem design1_defect(const std::vector<QuatMatrix>& elems, const QuatVector& x) {
  FieldElem s(0);
  for (const auto& g : elems) s += inner_product(x, g * x).norm();
  FieldElem nx = inner_product(x, x).re();
  int d = x.dim();
  return FieldElem(Rational(1, static_cast<long>(elems.size()))) * s -
         FieldElem(Rational(1, d)) * nx * nx;
}

}  // namespace

IrreducibilityResult is_irreducible(const std::vector<QuatMatrix>& elems, int trials,
                                    std::uint64_t seed) {
  if (elems.empty()) throw GroupError("empty element list");
  std::mt19937_64 rng(seed);
  int dim = elems[0].rows;
  for (int t = 0; t < trials; ++t) {
    QuatVector x = random_int_vector(dim, rng);
    if (!design1_defect(elems, x).is_zero())
      return {false, "certain"};
  }
  return {true, "probabilistic (" + std::to_string(trials) + " trials)"};
}

IrreducibilityResult is_irreducible(const FiniteMatrixGroup& g, int trials,
                                    std::uint64_t seed) {
  return is_irreducible(g.elements(), trials, seed);
}

int fs_indicator(const FiniteMatrixGroup& parent, const std::vector<int>& subgroup,
                 const std::unordered_map<int, Quaternion>& alpha) {
  FieldElem sum(0);
  for (int g : subgroup) {
    int g2 = parent.mul(g, g);
    auto it = alpha.find(g2);
    if (it == alpha.end()) throw GroupError("alpha map not closed under squaring");
    sum += FieldElem(2) * it->second.re();
  }
  FieldElem val = FieldElem(Rational(1, static_cast<long>(subgroup.size()))) * sum;
  if (!val.is_rational()) throw GroupError("FS indicator not rational: " + val.str());
  Rational q = val.as_rational();
  if (q != -1 && q != 0 && q != 1)
    throw GroupError("FS value " + rat_str(q) + " is not an indicator");
  return static_cast<int>(q.get_num().get_si());
}

bool permutation_is_even(const std::vector<int>& p) {
  std::vector<bool> seen(p.size(), false);
  int parity = 0;
  for (size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (size_t j = i; !seen[j]; j = p[j]) {
      seen[j] = true;
      ++len;
    }
    parity ^= (len - 1) & 1;
  }
  return parity == 0;
}

PermutationAction permutation_action(const FiniteMatrixGroup& g,
                                     const std::vector<QuatVector>& lines) {
  std::unordered_map<std::string, int> pos;
  std::vector<QuatVector> reps;
  for (size_t i = 0; i < lines.size(); ++i) {
    reps.push_back(canonical_line_rep(lines[i]));
    pos[reps.back().key()] = static_cast<int>(i);
  }
  PermutationAction act;
  act.perm.resize(g.order());
  act.all_even = true;
  std::unordered_map<std::string, int> distinct;
  for (int e = 0; e < g.order(); ++e) {
    std::vector<int> p(lines.size());
    for (size_t i = 0; i < reps.size(); ++i) {
      std::string k = line_key(g.elem(e) * reps[i]);
      auto it = pos.find(k);
      if (it == pos.end())
        throw GroupError("group element maps a line outside the system");
      p[i] = it->second;
    }
    bool trivial = true;
    std::string pk;
    for (size_t i = 0; i < p.size(); ++i) {
      trivial = trivial && p[i] == static_cast<int>(i);
      pk += std::to_string(p[i]) + ",";
    }
    if (trivial) act.kernel.push_back(e);
    distinct.emplace(std::move(pk), e);
    act.all_even = act.all_even && permutation_is_even(p);
    act.perm[e] = std::move(p);
  }
  act.image_order = static_cast<long>(distinct.size());
  return act;
}

std::vector<int> subgroup_closure(const FiniteMatrixGroup& g,
                                  const std::vector<int>& gens, int cap) {
  std::vector<char> in(g.order(), 0);
  std::vector<int> members{0};
  in[0] = 1;
  for (size_t i = 0; i < members.size(); ++i) {
    for (int s : gens) {
      int y = g.mul(members[i], s);
      if (!in[y]) {
        in[y] = 1;
        members.push_back(y);
        if (static_cast<int>(members.size()) > cap) return {};
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

}  // namespace qlin
