// Finite matrix groups over the quaternions: breadth-first closure from
// generators with canonical-key hashing, an index multiplication table,
// conjugacy classes, reflections and root lines, randomized irreducibility
// testing, the Frobenius-Schur indicator and permutation actions on lines.

#ifndef QLIN_GROUP_HPP
#define QLIN_GROUP_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <unordered_map>
#include <vector>

#include "qlin/qlinalg.hpp"

namespace qlin {

struct GroupError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class FiniteMatrixGroup {
public:
  // Deterministic BFS closure.  Throws GroupError on a non-unitary
  // generator or when the closure exceeds `cap`.
  static FiniteMatrixGroup close(const std::vector<QuatMatrix>& generators,
                                 int cap = 4000);

  int order() const { return static_cast<int>(elems_.size()); }
  int dim() const { return elems_.empty() ? 0 : elems_[0].rows; }
  const QuatMatrix& elem(int i) const { return elems_[i]; }
  const std::vector<QuatMatrix>& elements() const { return elems_; }
  int num_generators() const { return static_cast<int>(gen_elem_idx_.size()); }
  int generator_index(int s) const { return gen_elem_idx_[s]; }

  // index arithmetic via the multiplication table
  int mul(int g, int h) const { return table_[g * order() + h]; }
  int inv(int g) const { return inv_[g]; }
  int conjugate(int g, int by) const { return mul(mul(inv(by), g), by); }
  int element_order(int g) const;
  std::optional<int> index_of(const QuatMatrix& m) const;

  // right multiplication by generator s (closure byproduct)
  int mul_gen(int g, int s) const { return rgen_[g][s]; }
  // parent chain from the BFS: elem = elem(parent) * gen(genpos); (-1,-1) for identity
  std::pair<int, int> parent(int g) const { return parent_[g]; }

  std::vector<int> center() const;

private:
  std::vector<QuatMatrix> elems_;
  std::vector<int> gen_elem_idx_;
  std::vector<std::pair<int, int>> parent_;
  std::vector<std::vector<int>> rgen_;
  std::vector<int> table_;  // order x order
  std::vector<int> inv_;
  std::unordered_map<std::string, int> index_;

  void build_table();
};

struct ConjClass {
  int rep;                 // smallest element index in the class
  int size;
  int element_order;
  std::vector<int> members;
};

// Classes ordered by (element order, class size, rep index).
std::vector<ConjClass> conjugacy_classes(const FiniteMatrixGroup& g);

struct ReflectionData {
  std::vector<int> reflections;        // indices with rank(I - g) = d - 1
  std::vector<QuatVector> root_lines;  // deduplicated canonical reps
};

ReflectionData reflections_and_root_lines(const FiniteMatrixGroup& g);

// Root line of a single reflection: any nonzero column of I - g.
QuatVector root_line_of(const QuatMatrix& g);

struct IrreducibilityResult {
  bool irreducible;
  // "certain" for reducible verdicts, "probabilistic (N trials)" otherwise
  std::string confidence;
};

// Exact evaluation of the t=1 design polynomial at random integer vectors
// (polynomial identity testing); coordinates drawn from [-9, 9].
IrreducibilityResult is_irreducible(const std::vector<QuatMatrix>& elems,
                                    int trials = 20, std::uint64_t seed = 1);
IrreducibilityResult is_irreducible(const FiniteMatrixGroup& g, int trials = 20,
                                    std::uint64_t seed = 1);

// (1/|G|) sum_g 2 Re(alpha_{g^2}) over the subgroup, exactly.  Throws
// GroupError when the result is not in {-1, 0, 1}.
int fs_indicator(const FiniteMatrixGroup& parent, const std::vector<int>& subgroup,
                 const std::unordered_map<int, Quaternion>& alpha);

struct PermutationAction {
  std::vector<std::vector<int>> perm;  // perm[g][line] over the stored line order
  std::vector<int> kernel;             // elements acting trivially
  long image_order;                    // number of distinct permutations
  bool all_even;
};

// Throws GroupError if some element maps a line outside the list.
PermutationAction permutation_action(const FiniteMatrixGroup& g,
                                     const std::vector<QuatVector>& lines);

bool permutation_is_even(const std::vector<int>& p);

// Orbit-closure of a subgroup index set under the multiplication table.
// Starts from the identity and the given generators; bails out (returning
// an empty vector) if the subgroup would exceed `cap`.
std::vector<int> subgroup_closure(const FiniteMatrixGroup& g,
                                  const std::vector<int>& gens, int cap);

}  // namespace qlin

#endif
