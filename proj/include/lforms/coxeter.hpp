#pragma once

#include "lforms/lorentz.hpp"

namespace lforms {

// Symmetric Coxeter data: m_ii = 1, off-diagonal labels in {2,3,4,5,6,inf}.
// Infinity is stored as 0.
class CoxeterMatrix {
 public:
  static constexpr int kInfinity = 0;

  CoxeterMatrix(int size, std::vector<std::vector<int>> entries);

  int size() const { return size_; }
  int at(int i, int j) const { return m_[static_cast<size_t>(i) * size_ + j]; }

 private:
  int size_;
  std::vector<int> m_;
};

// Gram matrix with unit diagonal and entries -cos(pi/m_ij) as exact field
// elements: 2 -> 0, 3 -> -1/2, 4 -> -sqrt2/2, 5 -> -(1+sqrt5)/4,
// 6 -> -sqrt3/2, inf -> -1.  A single quadratic radical is supported per
// matrix; a mix (e.g. labels 4 and 5 together) is rejected naming the pair.
QuadraticForm gram_from_coxeter(const CoxeterMatrix& m);

struct GeometricRepresentation {
  QuadraticForm gram;
  std::vector<LorentzMatrix> generators;  // reflections in the basis vectors
};

// Requires unit diagonal; each generator is verified involutive and
// form-preserving.
GeometricRepresentation reflection_representation(const QuadraticForm& gram);

struct RelationReport {
  struct Entry {
    int i = 0, j = 0;
    int label = 0;        // m_ij (0 = infinity)
    int found_order = 0;  // least t with (r_i r_j)^t = I, 0 if none up to the cap
    bool pass = false;
  };
  std::vector<Entry> entries;
  int infinity_cap = 0;
  bool all_pass = true;
};

// For finite m_ij asserts the product order is exactly m_ij; for infinity
// asserts no power up to the cap is the identity.
RelationReport verify_relations(const GeometricRepresentation& rep, const CoxeterMatrix& m,
                                int infinity_cap = 12);

}  // namespace lforms
