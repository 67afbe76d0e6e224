// Subgroup enumeration up to conjugacy by repeated cyclic extension of
// class representatives, with reducibility tags and maximality among the
// reducible classes.

#ifndef QLIN_SUBGROUPS_HPP
#define QLIN_SUBGROUPS_HPP

#include "qlin/group.hpp"

namespace qlin {

struct SubgroupClass {
  std::vector<int> elems;  // sorted element indices of the representative
  std::vector<int> gens;
  int order = 0;
  int n_conjugates = 0;
  bool reducible = false;
  bool maximal_reducible = false;
};

// All subgroup classes of G with order >= min_order, ordered by
// (order, representative element list).  Reducibility is decided by exact
// evaluation of the t=1 design polynomial at `trials` shared random
// integer vectors (reducible verdicts are certain).
std::vector<SubgroupClass> enumerate_subgroups(const FiniteMatrixGroup& g,
                                               int min_order = 1, int trials = 8,
                                               std::uint64_t seed = 1);

}  // namespace qlin

#endif
