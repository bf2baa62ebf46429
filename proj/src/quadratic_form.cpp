#include "lforms/quadratic_form.hpp"

#include <algorithm>
#include <set>

namespace lforms {

QuadraticForm::QuadraticForm(FieldTag field, Mat gram) : field_(field), gram_(std::move(gram)) {
  validate_field_d(field_.d);
  if (gram_.rows() != gram_.cols()) throw std::domain_error("gram matrix must be square");
  if (gram_.rows() == 0) throw std::domain_error("gram matrix must be nonempty");
  for (int i = 0; i < gram_.rows(); ++i)
    for (int j = 0; j < gram_.cols(); ++j) {
      if (gram_.at(i, j) != gram_.at(j, i))
        throw std::domain_error("gram matrix must be exactly symmetric");
      merge_field_d(gram_.at(i, j).d(), field_.d);  // throws on foreign radicals
    }
}

bool QuadraticForm::is_diagonal() const {
  for (int i = 0; i < dim(); ++i)
    for (int j = 0; j < dim(); ++j)
      if (i != j && !gram_.at(i, j).is_zero()) return false;
  return true;
}

QuadraticForm QuadraticForm::conjugate() const {
  Mat g = gram_;
  for (int i = 0; i < dim(); ++i)
    for (int j = 0; j < dim(); ++j) g.at(i, j) = g.at(i, j).conj();
  return QuadraticForm(field_, std::move(g));
}

QuadraticForm QuadraticForm::q_n(int n) {
  if (n < 0) throw std::domain_error("q_n needs n >= 0");
  std::vector<QuadElem> e(static_cast<size_t>(n) + 1, QuadElem(1));
  e[0] = QuadElem(-1);
  return diagonal(FieldTag::Q(), e);
}

QuadraticForm QuadraticForm::diagonal(FieldTag field, const std::vector<QuadElem>& entries) {
  Mat g(static_cast<int>(entries.size()), static_cast<int>(entries.size()));
  for (size_t i = 0; i < entries.size(); ++i) g.at(static_cast<int>(i), static_cast<int>(i)) = entries[i];
  return QuadraticForm(field, std::move(g));
}

std::vector<QuadElem> Diagonalization::entries() const {
  std::vector<QuadElem> e(D.dim());
  for (int i = 0; i < D.dim(); ++i) e[i] = D.at(i, i);
  return e;
}

Diagonalization diagonalize(const QuadraticForm& f) {
  int n = f.dim();
  Mat g = f.gram();
  Mat t = Mat::identity(n);

  auto sym_add = [&](int i, int j, const QuadElem& c) {
    // basis change e_i <- e_i + c e_j applied to the Gram matrix
    for (int k = 0; k < n; ++k) g.at(k, i) += c * g.at(k, j);
    for (int k = 0; k < n; ++k) g.at(i, k) += c * g.at(j, k);
    t.add_col(i, j, c);
  };
  auto sym_swap = [&](int i, int j) {
    g.swap_cols(i, j);
    g.swap_rows(i, j);
    t.swap_cols(i, j);
  };

  for (int i = 0; i < n; ++i) {
    if (g.at(i, i).is_zero()) {
      int diag = -1;
      for (int j = i + 1; j < n; ++j)
        if (!g.at(j, j).is_zero()) {
          diag = j;
          break;
        }
      if (diag >= 0) {
        sym_swap(i, diag);
      } else {
        int off = -1;
        for (int j = i + 1; j < n; ++j)
          if (!g.at(i, j).is_zero()) {
            off = j;
            break;
          }
        if (off < 0) continue;  // row lies in the radical; leave a zero entry
        sym_add(i, off, QuadElem(1));  // now g(i,i) = 2 g(i,off) != 0
      }
    }
    const QuadElem pivot = g.at(i, i);
    for (int j = i + 1; j < n; ++j) {
      if (g.at(i, j).is_zero()) continue;
      sym_add(j, i, -(g.at(i, j) / pivot));
    }
  }
  QuadraticForm d(f.field(), g);
  return Diagonalization{std::move(t), std::move(d)};
}

Signature signature(const QuadraticForm& f) {
  Signature s;
  for (const auto& e : diagonalize(f).entries()) {
    int sg = e.sign();
    if (sg > 0)
      ++s.pos;
    else if (sg < 0)
      ++s.neg;
    else
      ++s.zero;
  }
  return s;
}

std::vector<Rational> rational_diagonal(const QuadraticForm& f) {
  if (!f.field().is_rational()) throw std::domain_error("operation requires a form over Q");
  auto entries = diagonalize(f).entries();
  std::vector<Rational> out;
  out.reserve(entries.size());
  for (const auto& e : entries) {
    if (e.is_zero()) throw std::domain_error("operation requires a nonsingular form");
    out.push_back(e.rational_value());
  }
  return out;
}

int hasse_invariant(const QuadraticForm& f, const Place& v) {
  auto d = rational_diagonal(f);
  int r = 1;
  for (size_t i = 0; i < d.size(); ++i)
    for (size_t j = i + 1; j < d.size(); ++j) r *= hilbert_symbol(d[i], d[j], v);
  return r;
}

namespace {

bool is_square_in_Qp(const Rational& x, const Int& p) {
  Int s = squarefree_part(x).rep;
  if (s == 1) return true;
  if (s < 0 && p != 2) {
    // sign is a unit issue at odd p; fold into the Legendre test below
  }
  if (p == 2) {
    if (s % 2 == 0) return false;
    Int m = s % 8;
    if (m < 0) m += 8;
    return m == 1;
  }
  if (s % p == 0) return false;
  return mpz_legendre(s.get_mpz_t(), p.get_mpz_t()) == 1;
}

// Places that can obstruct a rational diagonal form: 2 and the odd primes of
// the squarefree diagonal entries.  Everywhere else the form is unimodular.
std::vector<Int> relevant_primes(const std::vector<Rational>& diag) {
  std::set<Int> ps{Int(2)};
  for (const auto& a : diag) {
    Int s = abs(squarefree_part(a).rep);
    for (const auto& [p, e] : factorize(s))
      if (p != 2) ps.insert(p);
  }
  return {ps.begin(), ps.end()};
}

int hasse_from_diag(const std::vector<Rational>& d, const Place& v) {
  int r = 1;
  for (size_t i = 0; i < d.size(); ++i)
    for (size_t j = i + 1; j < d.size(); ++j) r *= hilbert_symbol(d[i], d[j], v);
  return r;
}

bool isotropic_at(const std::vector<Rational>& diag, const Place& v) {
  size_t n = diag.size();
  Rational det(1);
  for (const auto& a : diag) det *= a;
  if (v.infinite) {
    bool pos = false, neg = false;
    for (const auto& a : diag) (sgn(a) > 0 ? pos : neg) = true;
    return pos && neg;
  }
  int eps = hasse_from_diag(diag, v);
  if (n == 3) return hilbert_symbol(Rational(-1), -det, v) == eps;
  if (n == 4) return !is_square_in_Qp(det, v.p) || eps == hilbert_symbol(Rational(-1), Rational(-1), v);
  throw std::logic_error("local isotropy case analysis is for ranks 3 and 4");
}

}  // namespace

IsotropyCertificate is_isotropic(const QuadraticForm& f) {
  auto diag = rational_diagonal(f);
  size_t n = diag.size();
  auto verdict = [](bool iso) {
    return IsotropyCertificate{iso ? IsotropyVerdict::isotropic : IsotropyVerdict::anisotropic,
                               std::nullopt, false};
  };
  bool pos = false, neg = false;
  for (const auto& a : diag) (sgn(a) > 0 ? pos : neg) = true;
  bool indefinite = pos && neg;
  if (n == 1) return verdict(false);
  if (!indefinite) return verdict(false);
  if (n == 2) return verdict(squarefree_part(-diag[0] * diag[1]).rep == 1);
  if (n >= 5) return verdict(true);  // Meyer
  for (const Int& p : relevant_primes(diag))
    if (!isotropic_at(diag, Place::prime(p))) return verdict(false);
  return verdict(true);
}

QuadraticForm restrict_form(const QuadraticForm& f, const std::vector<int>& indices) {
  if (indices.empty()) throw std::domain_error("restriction needs a nonempty index set");
  for (int i : indices)
    if (i < 0 || i >= f.dim()) throw std::domain_error("restriction index out of range");
  int m = static_cast<int>(indices.size());
  Mat g(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) g.at(i, j) = f.at(indices[i], indices[j]);
  return QuadraticForm(f.field(), std::move(g));
}

QuadraticForm direct_sum(const QuadraticForm& f, const QuadraticForm& g) {
  long d = merge_field_d(f.field().d, g.field().d);
  int n = f.dim(), m = g.dim();
  Mat s(n + m, n + m);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) s.at(i, j) = f.at(i, j);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) s.at(n + i, n + j) = g.at(i, j);
  return QuadraticForm(FieldTag{d}, std::move(s));
}

QuadraticForm scale(const QuadraticForm& f, const QuadElem& lambda) {
  if (lambda.is_zero()) throw std::domain_error("scaling by zero");
  long d = merge_field_d(f.field().d, lambda.d());
  Mat g = f.gram();
  for (int i = 0; i < f.dim(); ++i)
    for (int j = 0; j < f.dim(); ++j) g.at(i, j) *= lambda;
  return QuadraticForm(FieldTag{d}, std::move(g));
}

}  // namespace lforms
