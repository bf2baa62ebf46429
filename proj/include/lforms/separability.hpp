#pragma once

#include "lforms/lorentz.hpp"

namespace lforms {

// Disjoint-hyperplane family over an integral rational Lorentz space: e0 is
// the distinguished normal, e1..ek the others; all primitive integer vectors
// with (ei, ei) > 0.
class HyperplaneFamily {
 public:
  HyperplaneFamily(LorentzSpace space, std::vector<IVec> normals);

  const LorentzSpace& space() const { return space_; }
  const std::vector<IVec>& normals() const { return normals_; }
  int k() const { return static_cast<int>(normals_.size()) - 1; }

  // Integer pairing (e_i, e_j).
  Int pair(int i, int j) const;
  Int pair(const IVec& u, const IVec& v) const;

 private:
  LorentzSpace space_;
  std::vector<IVec> normals_;
};

enum class FamilyVerdict { same_hyperplane, parallel, ultraparallel, intersecting };

struct FamilyHypothesisReport {
  struct Entry {
    int index = 0;  // i >= 1, compared against e0
    FamilyVerdict verdict = FamilyVerdict::intersecting;
    bool disjoint() const {
      return verdict == FamilyVerdict::parallel || verdict == FamilyVerdict::ultraparallel;
    }
  };
  std::vector<Entry> entries;
  bool hypothesis_holds = false;  // every i >= 1 disjoint from e0
};

FamilyHypothesisReport check_family_hypothesis(const HyperplaneFamily& family);

struct CongruenceLevel {
  Int N;            // smallest admissible prime
  Int max_pairing;  // max_{i=0..k} |(e0, e_i)|, the paper's bound range
  struct DivisibilityWitness {
    int index = 0;       // i >= 1
    int plus_entry = 0;  // entry of e0+ei with value not divisible by N
    int minus_entry = 0; // entry of e0-ei likewise
  };
  std::vector<DivisibilityWitness> witnesses;
};

// N = smallest prime exceeding 2*max_pairing such that, for every i >= 1,
// some nonzero entry of e0+ei and of e0-ei escapes divisibility by N.
// e0 = ±ei makes the exclusion unachievable and is a named error.
CongruenceLevel compute_congruence_level(const HyperplaneFamily& family);

struct OrthogonalElement {
  Mat m;                  // integral and form-preserving (flags verified)
  std::vector<int> word;  // generator indices whose product reproduces m
};

struct OrthogonalEnumeration {
  std::vector<IVec> generator_vectors;  // reflection vectors, deduplicated up to sign
  std::vector<OrthogonalElement> elements;  // words of length <= word_length, deduplicated
};

// Products of integral reflections: reflection vectors are the primitive u
// with max-norm <= vector_height, (u,u) != 0 and (u,u) | 2(u, b_j) for every
// standard basis vector.  Deterministic shortlex enumeration; the parallel
// engine partitions the vector shell and the product layer across workers.
OrthogonalEnumeration enumerate_orthogonal_elements(const LorentzSpace& space, long vector_height,
                                                    int word_length,
                                                    SearchEngine engine = SearchEngine::parallel);

struct DichotomyReport {
  Int N;
  int elements_considered = 0;  // elements congruent to I mod N
  int fixed_branch = 0;
  int disjoint_branch = 0;
  struct Counterexample {
    size_t element_index = 0;
    int family_index = 0;
    std::string what;
  };
  std::vector<Counterexample> counterexamples;
  bool ok() const { return counterexamples.empty(); }
};

// For every supplied element congruent to I mod N: checks the congruence
// (gamma e0, ei) = (e0, ei) mod N for all i, then the dichotomy — gamma e0
// proportional to ±e0 (hyperplane fixed), or for every i the disjointness
// inequality (gamma e0, ei)^2 >= (e0,e0)(ei,ei) with gamma e0 != ±ei.
DichotomyReport verify_dichotomy(const HyperplaneFamily& family, const CongruenceLevel& level,
                                 const std::vector<OrthogonalElement>& elements);

}  // namespace lforms
