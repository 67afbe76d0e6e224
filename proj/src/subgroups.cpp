#include "qlin/subgroups.hpp"

#include <algorithm>
#include <random>
#include <tuple>
#include <unordered_map>

namespace qlin {

namespace {

std::string set_key(const std::vector<int>& sorted) {
  std::string k;
  k.reserve(sorted.size() * 4);
  for (int x : sorted) {
    k.push_back(static_cast<char>(x & 0xff));
    k.push_back(static_cast<char>((x >> 8) & 0xff));
    k.push_back(static_cast<char>((x >> 16) & 0xff));
    k.push_back(static_cast<char>(x >> 24));
  }
  return k;
}

using Bitset = std::vector<std::uint64_t>;

Bitset to_bitset(const std::vector<int>& s, int n) {
  Bitset b((n + 63) / 64, 0);
  for (int x : s) b[x >> 6] |= (1ull << (x & 63));
  return b;
}

bool subset_of(const Bitset& a, const Bitset& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] & ~b[i]) return false;
  return true;
}

}  // namespace

std::vector<SubgroupClass> enumerate_subgroups(const FiniteMatrixGroup& g,
                                               int min_order, int trials,
                                               std::uint64_t seed) {
  const int n = g.order();
  const int dim = g.dim();

  // Shared PIT data: per random vector x, the values |<x, e x>|^2 for every
  // element e.  A subgroup's t=1 design defect is then a plain sum.
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coord(-9, 9);
  std::vector<std::vector<FieldElem>> pit_norm(trials);
  std::vector<FieldElem> pit_rhs(trials);
  for (int t = 0; t < trials; ++t) {
    QuatVector x(dim);
    do {
      for (int i = 0; i < dim; ++i)
        x[i] = Quaternion(FieldElem(coord(rng)), FieldElem(coord(rng)),
                          FieldElem(coord(rng)), FieldElem(coord(rng)));
    } while (x.is_zero());
    pit_norm[t].reserve(n);
    for (int e = 0; e < n; ++e)
      pit_norm[t].push_back(inner_product(x, g.elem(e) * x).norm());
    FieldElem nx = inner_product(x, x).re();
    pit_rhs[t] = FieldElem(Rational(1, dim)) * nx * nx;
  }
  auto reducible = [&](const std::vector<int>& members) {
    for (int t = 0; t < trials; ++t) {
      FieldElem s(0);
      for (int e : members) s += pit_norm[t][e];
      s = FieldElem(Rational(1, static_cast<long>(members.size()))) * s;
      if (s != pit_rhs[t]) return true;
    }
    return false;
  };

  struct ClassData {
    std::vector<int> elems;
    std::vector<int> gens;
    Bitset bits;
    std::vector<Bitset> conj_bits;  // distinct conjugates, incl. the rep
    int n_conjugates = 0;
  };
  std::vector<ClassData> classes;
  std::unordered_map<std::string, int> registered;  // any conjugate set -> class id

  auto register_set = [&](std::vector<int> elems, std::vector<int> gens) -> int {
    std::string key = set_key(elems);
    auto it = registered.find(key);
    if (it != registered.end()) return it->second;
    int id = static_cast<int>(classes.size());
    ClassData cd;
    cd.elems = elems;
    cd.gens = std::move(gens);
    cd.bits = to_bitset(elems, n);
    registered.emplace(std::move(key), id);
    // register every conjugate set
    for (int h = 0; h < n; ++h) {
      std::vector<int> conj(elems.size());
      for (size_t i = 0; i < elems.size(); ++i) conj[i] = g.conjugate(elems[i], h);
      std::sort(conj.begin(), conj.end());
      std::string ck = set_key(conj);
      if (registered.emplace(std::move(ck), id).second)
        cd.conj_bits.push_back(to_bitset(conj, n));
    }
    cd.n_conjugates = static_cast<int>(cd.conj_bits.size()) + 1;
    cd.conj_bits.push_back(cd.bits);
    classes.push_back(std::move(cd));
    return id;
  };

  register_set({0}, {});
  // one generator per cyclic subgroup: the first element generating it
  std::vector<int> cyclic_gens;
  {
    std::vector<char> covered(n, 0);
    for (int x = 1; x < n; ++x) {
      if (covered[x]) continue;
      std::vector<int> cyc = subgroup_closure(g, {x}, n);
      for (int y : cyc)
        if (g.element_order(y) == static_cast<int>(cyc.size())) covered[y] = 1;
      cyclic_gens.push_back(x);
      register_set(std::move(cyc), {x});
    }
  }

  // extend class representatives until no new class appears
  for (size_t ci = 0; ci < classes.size(); ++ci) {
    if (static_cast<int>(classes[ci].elems.size()) == n) continue;
    // copies: register_set may reallocate `classes`
    std::vector<int> base_elems = classes[ci].elems;
    std::vector<int> base_gens = classes[ci].gens;
    Bitset base_bits = classes[ci].bits;
    for (int t : cyclic_gens) {
      if (base_bits[t >> 6] & (1ull << (t & 63))) continue;
      std::vector<int> gens = base_gens;
      gens.push_back(t);
      std::vector<int> ext = subgroup_closure(g, gens, n);
      register_set(std::move(ext), std::move(gens));
    }
  }

  std::vector<SubgroupClass> out;
  for (auto& cd : classes) {
    if (static_cast<int>(cd.elems.size()) < min_order) continue;
    SubgroupClass sc;
    sc.order = static_cast<int>(cd.elems.size());
    sc.elems = cd.elems;
    sc.gens = cd.gens;
    sc.n_conjugates = cd.n_conjugates;
    sc.reducible = reducible(cd.elems);
    out.push_back(std::move(sc));
  }
  // maximality among the reducible classes (needs all classes, so compute
  // against the full class list regardless of min_order)
  for (auto& sc : out) {
    if (!sc.reducible) continue;
    Bitset mine = to_bitset(sc.elems, n);
    bool maximal = true;
    for (const auto& cd : classes) {
      if (static_cast<int>(cd.elems.size()) <= sc.order) continue;
      if (static_cast<int>(cd.elems.size()) == n) continue;  // G itself
      if (!reducible(cd.elems)) continue;
      for (const Bitset& cb : cd.conj_bits)
        if (subset_of(mine, cb)) {
          maximal = false;
          break;
        }
      if (!maximal) break;
    }
    sc.maximal_reducible = maximal;
  }
  std::sort(out.begin(), out.end(), [](const SubgroupClass& a, const SubgroupClass& b) {
    return std::tie(a.order, a.elems) < std::tie(b.order, b.elems);
  });
  return out;
}

}  // namespace qlin
