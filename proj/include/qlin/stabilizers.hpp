// Projective stabilizers of lines: the scalar homomorphism g |-> alpha_g
// with g v = v alpha_g, classification of its image among the finite
// subgroups of the unit quaternions, and the restriction characters that
// separate the two isotypic summands.

#ifndef QLIN_STABILIZERS_HPP
#define QLIN_STABILIZERS_HPP

#include "qlin/group.hpp"

namespace qlin {

struct ProjectiveStabilizer {
  QuatVector line_rep;                          // canonical representative
  std::vector<int> elems;                       // parent element indices, sorted
  std::unordered_map<int, Quaternion> alpha;    // g v = v alpha_g
  int order() const { return static_cast<int>(elems.size()); }
};

// Stabilizer of the line through v inside G.  alpha_g is read off the first
// nonzero coordinate of the canonical representative (a central rational),
// then g v = v alpha_g is verified coordinate by coordinate.
ProjectiveStabilizer projective_stabilizer(const FiniteMatrixGroup& g,
                                           const QuatVector& v);

// The stabilizer as a group in its own right (matrices taken from the parent).
FiniteMatrixGroup stabilizer_group(const FiniteMatrixGroup& parent,
                                   const ProjectiveStabilizer& s);

std::vector<Quaternion> scalar_values(const ProjectiveStabilizer& s);

// alpha is a homomorphism by construction; faithful iff its values are distinct.
bool alpha_faithful(const ProjectiveStabilizer& s);

struct HStarClass {
  enum Kind {
    Cyclic,
    BinaryDihedral,
    BinaryTetrahedral,
    BinaryOctahedral,
    BinaryIcosahedral
  } kind;
  int order = 0;
  int m = 0;  // cyclic(m) or binary dihedral of order 4m
  std::string name() const;
};

// Classification by order, abelianness and the element-order profile:
// T, O, I have profiles {1,2,3,4,6}, {1,2,3,4,6,8}, {1,2,3,4,5,6,10}.
// Throws GroupError when the set is not closed, not unit, or matches nothing.
HStarClass classify_hstar(const std::vector<Quaternion>& scalars);

struct RestrictionCharacters {
  std::vector<int> class_reps;    // parent element indices, one per class
  std::vector<int> class_sizes;
  std::vector<FieldElem> chi_w;       // 2 Re(alpha_g) on the first line
  std::vector<FieldElem> chi_w_perp;  // ... on the second
  bool distinct = false;              // certifies non-isomorphic summands
};

// Both stabilizers must have the same element set; classes are conjugacy
// classes of that common subgroup.
RestrictionCharacters restriction_characters(const FiniteMatrixGroup& parent,
                                             const ProjectiveStabilizer& s,
                                             const ProjectiveStabilizer& s_perp);

}  // namespace qlin

#endif
