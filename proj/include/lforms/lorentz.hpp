#pragma once

#include "lforms/quadratic_form.hpp"

namespace lforms {

// Ambient hyperboloid-model data: a form of signature (n,1) and its pairing.
class LorentzSpace {
 public:
  explicit LorentzSpace(QuadraticForm f);

  const QuadraticForm& form() const { return f_; }
  int dim() const { return f_.dim(); }  // n + 1
  QuadElem pair(const Vec& u, const Vec& v) const { return f_.pair(u, v); }
  QuadElem pair(const IVec& u, const IVec& v) const { return f_.pair(to_vec(u), to_vec(v)); }

 private:
  QuadraticForm f_;
};

// Spacelike-normal hyperplane, the normal defined up to nonzero scaling.
// Rational normals are stored as the primitive integer representative.
class Hyperplane {
 public:
  Hyperplane(const LorentzSpace& space, Vec normal);
  Hyperplane(const LorentzSpace& space, const IVec& normal);

  const Vec& normal() const { return normal_; }
  std::optional<IVec> integral_normal() const;

 private:
  Vec normal_;
};

// Isotropic ray: f(rep) = 0, rep != 0, up to positive scaling.
class BoundaryPoint {
 public:
  BoundaryPoint(const LorentzSpace& space, Vec rep);
  const Vec& rep() const { return rep_; }

 private:
  Vec rep_;
};

// Matrix together with recomputed integrality / form-preservation flags.
struct LorentzMatrix {
  Mat m;
  bool integral = false;
  bool form_preserving = false;
};

// Both flags computed exactly against the given form.
LorentzMatrix check_element(const QuadraticForm& f, Mat m);
inline LorentzMatrix check_element(const LorentzSpace& s, Mat m) { return check_element(s.form(), std::move(m)); }

// Reflection w -> w - 2 (w,u)/(u,u) u; requires (u,u) != 0.  Works over any
// form (the Coxeter module uses definite Gram matrices too).
LorentzMatrix reflection_in_vector(const QuadraticForm& f, const Vec& u);
inline LorentzMatrix reflection_in_vector(const LorentzSpace& s, const Vec& u) {
  return reflection_in_vector(s.form(), u);
}
LorentzMatrix reflection_in_vector(const LorentzSpace& s, const IVec& u);

enum class PairClass { equal, intersecting, parallel, ultraparallel };

const char* pair_class_name(PairClass c);

// Exact comparison of (e,e')^2 against (e,e)(e',e'); proportional normals
// are the equal class.
PairClass classify_pair(const LorentzSpace& space, const Hyperplane& a, const Hyperplane& b);

// (rep, normal) == 0
bool boundary_point_on_hyperplane(const LorentzSpace& space, const BoundaryPoint& p, const Hyperplane& a);

// True iff a and b lie on opposite sides of w.  Preconditions: w disjoint
// (parallel or ultraparallel) from both a and b, and a, b disjoint from each
// other; violations raise std::domain_error.  Sides are read off the signs of
// the pairing of w's normal with exact timelike representatives obtained by
// Lorentz projection of a fixed base-point list.
bool separates(const LorentzSpace& space, const Hyperplane& w, const Hyperplane& a, const Hyperplane& b);

// Projective equality of nonzero vectors.
bool proportional(const Vec& u, const Vec& v);

// Image hyperplane under a form-preserving matrix: the normal maps by M.
Hyperplane apply(const LorentzSpace& space, const LorentzMatrix& m, const Hyperplane& h);

}  // namespace lforms
