#include "lforms/coxeter.hpp"

namespace lforms {

CoxeterMatrix::CoxeterMatrix(int size, std::vector<std::vector<int>> entries) : size_(size) {
  if (size <= 0) throw std::domain_error("Coxeter matrix needs positive size");
  if (static_cast<int>(entries.size()) != size) throw std::domain_error("Coxeter matrix row count mismatch");
  m_.resize(static_cast<size_t>(size) * size);
  for (int i = 0; i < size; ++i) {
    if (static_cast<int>(entries[static_cast<size_t>(i)].size()) != size)
      throw std::domain_error("Coxeter matrix column count mismatch");
    for (int j = 0; j < size; ++j) {
      int v = entries[static_cast<size_t>(i)][static_cast<size_t>(j)];
      if (i == j && v != 1) throw std::domain_error("Coxeter matrix diagonal must be 1");
      if (i != j && v != kInfinity && (v < 2 || v > 6))
        throw std::domain_error("Coxeter label out of range {2..6, 0=infinity}: " + std::to_string(v));
      m_[static_cast<size_t>(i) * size + j] = v;
    }
  }
  for (int i = 0; i < size; ++i)
    for (int j = 0; j < size; ++j)
      if (at(i, j) != at(j, i)) throw std::domain_error("Coxeter matrix must be symmetric");
}

QuadraticForm gram_from_coxeter(const CoxeterMatrix& m) {
  // Radical needed per label: 4 -> sqrt2, 5 -> sqrt5, 6 -> sqrt3.
  auto radical_of = [](int label) -> long {
    switch (label) {
      case 4: return 2;
      case 5: return 5;
      case 6: return 3;
      default: return 0;
    }
  };
  long d = 0;
  int first_label = 0;
  for (int i = 0; i < m.size(); ++i)
    for (int j = i + 1; j < m.size(); ++j) {
      long r = radical_of(m.at(i, j));
      if (r == 0) continue;
      if (d == 0) {
        d = r;
        first_label = m.at(i, j);
      } else if (d != r) {
        throw std::domain_error("labels " + std::to_string(first_label) + " and " +
                                std::to_string(m.at(i, j)) +
                                " need incompatible radicals in one Gram matrix");
      }
    }
  auto entry = [&](int label) -> QuadElem {
    switch (label) {
      case 2: return QuadElem(0);
      case 3: return QuadElem(Rational(-1, 2));
      case 4: return QuadElem(Rational(0), Rational(-1, 2), 2);
      case 5: return QuadElem(Rational(-1, 4), Rational(-1, 4), 5);
      case 6: return QuadElem(Rational(0), Rational(-1, 2), 3);
      default: return QuadElem(-1);  // infinity
    }
  };
  Mat g(m.size(), m.size());
  for (int i = 0; i < m.size(); ++i)
    for (int j = 0; j < m.size(); ++j) g.at(i, j) = (i == j) ? QuadElem(1) : entry(m.at(i, j));
  return QuadraticForm(FieldTag{d}, std::move(g));
}

GeometricRepresentation reflection_representation(const QuadraticForm& gram) {
  for (int i = 0; i < gram.dim(); ++i)
    if (gram.at(i, i) != QuadElem(1))
      throw std::domain_error("reflection representation needs unit diagonal (normalized walls)");
  GeometricRepresentation rep{gram, {}};
  for (int i = 0; i < gram.dim(); ++i) {
    Vec bi(static_cast<size_t>(gram.dim()));
    bi[static_cast<size_t>(i)] = QuadElem(1);
    LorentzMatrix r = reflection_in_vector(gram, bi);
    if (!(r.m * r.m).is_identity() || !r.form_preserving)
      throw std::logic_error("basis reflection failed its defining identities");
    rep.generators.push_back(std::move(r));
  }
  return rep;
}

RelationReport verify_relations(const GeometricRepresentation& rep, const CoxeterMatrix& m,
                                int infinity_cap) {
  if (m.size() != static_cast<int>(rep.generators.size()))
    throw std::domain_error("representation size does not match the Coxeter matrix");
  if (infinity_cap < 1) throw std::domain_error("infinity cap must be positive");
  RelationReport report;
  report.infinity_cap = infinity_cap;
  for (int i = 0; i < m.size(); ++i)
    for (int j = i + 1; j < m.size(); ++j) {
      RelationReport::Entry e;
      e.i = i;
      e.j = j;
      e.label = m.at(i, j);
      Mat p = rep.generators[static_cast<size_t>(i)].m * rep.generators[static_cast<size_t>(j)].m;
      int limit = e.label == CoxeterMatrix::kInfinity ? infinity_cap : e.label;
      Mat acc = p;
      e.found_order = 0;
      for (int t = 1; t <= limit; ++t) {
        if (acc.is_identity()) {
          e.found_order = t;
          break;
        }
        if (t < limit) acc = acc * p;
      }
      e.pass = (e.label == CoxeterMatrix::kInfinity) ? e.found_order == 0 : e.found_order == e.label;
      report.all_pass &= e.pass;
      report.entries.push_back(e);
    }
  return report;
}

}  // namespace lforms
