#pragma once

#include "lforms/lorentz.hpp"

namespace lforms {

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

// Everything the reflection construction produces, with a verification
// report of exact checks.  Vectors u1, u2, hyperplanes and boundary points
// live in the 5-dimensional subspace W, written in the basis e1..e5; the
// basis matrices express that basis in ambient f-coordinates.
struct TheoremAWitness {
  QuadraticForm ambient;   // the input form f
  QuadraticForm h;         // rank 5, signature (4,1), integer Gram
  Mat basis_pre;           // e1..e5 before the e2 rescaling (columns)
  Mat basis;               // after e2 <- a*e2
  Rational a;              // f(e5) > 0, normalized squarefree
  IVec u1, u2;             // (1,0,0,0,1) and (0,-1,0,0,1) in the e-basis
  LorentzMatrix tau1, tau2, tau3;
  Hyperplane wall_h, pi1, pi2;
  BoundaryPoint p1, p2;
  std::vector<Check> report;

  bool all_pass() const;
};

// Fixed basis change carrying q3 to g = 2 y1 y2 + y3^2 + y4^2.
struct BasisChange {
  Mat T;
  QuadraticForm g;
};
BasisChange q3_to_g_basis();

// The reflection bundle for a rational form of signature (n,1), n >= 4, that
// represents q3.  search_height bounds the representation searches when the
// rank gap forces unchecked mode.
TheoremAWitness build_theorem_A_witness(const QuadraticForm& f, long search_height = 4000);

// Deterministic tail of the construction: everything after the embedding
// search.  Recomputes h, u1/u2, the reflections, hyperplanes, boundary
// points and the full exact report from the basis data, so a serialized
// witness can be reassembled and re-verified without re-running searches.
TheoremAWitness assemble_theorem_a(const QuadraticForm& f, const Mat& basis_pre, const Mat& basis,
                                   const Rational& a);

enum class FamilyFlavor { nonuniform, compact };

struct FamilyForm {
  long a = 0;
  int n = 0;
  FamilyFlavor flavor = FamilyFlavor::nonuniform;
  QuadraticForm form;
};

// nonuniform: q3 + a x4^2 + x5^2 + ... + xn^2 over Q (n >= 4);
// compact: the 120-cell form + a x5^2 + ... + xn^2 over Q(sqrt 5) (n >= 5).
FamilyForm family_form(long a, int n, FamilyFlavor flavor);

struct GPSForm {
  QuadraticForm base;
  QuadElem a;
  QuadraticForm form;  // base ⊕ <a>
  bool a_is_square = false;  // nonsquare <=> the glued lattice is nonarithmetic
};

// Requires base of signature (n-1,1) satisfying condition (*) and a totally
// positive; rejects other inputs with named errors.
GPSForm gps_form(const QuadraticForm& base, const QuadElem& a);

// The 5x5 Gram matrix over Q(sqrt 5) with diagonal 1, off-diagonal pattern
// -(1+sqrt5)/4 and -1/2 (the 120-cell reflection lattice).
QuadraticForm bowditch_mess_gram();

// Signature (n,1) at the fixed embedding and entrywise-conjugate form
// positive definite (leading principal minors, exact).  Vacuous conjugate
// condition over Q reduces to the signature check.
bool condition_star_check(const QuadraticForm& f);

// Over Q: nonuniform iff isotropic.
bool is_nonuniform(const QuadraticForm& f);

enum class PairVerdict { certified_distinct, undecided };

struct CommensurabilityCertificate {
  long a1 = 0, a2 = 0;
  PairVerdict verdict = PairVerdict::undecided;
  // One line per square class lambda in the sweep: either the invariant that
  // rules lambda out, or the note that every invariant matched.
  struct LambdaLine {
    Int lambda;
    bool matched = false;
    std::string mismatch;  // empty when matched
  };
  std::vector<LambdaLine> lines;
};

// Similarity-invariant sweep certifying non-commensurability of O(f_a, Z)
// and O(f_a', Z) pairs; never asserts commensurability (undecided instead).
std::vector<CommensurabilityCertificate> pairwise_noncommensurable(const std::vector<long>& params,
                                                                   int n, FamilyFlavor flavor);

CommensurabilityCertificate certify_distinct(long a1, long a2, int n, FamilyFlavor flavor);

}  // namespace lforms
