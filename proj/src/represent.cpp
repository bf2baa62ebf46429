#include <algorithm>
#include <numeric>

#include "lforms/quadratic_form.hpp"

namespace lforms {

namespace {

constexpr long kInternalSearchMax = 1L << 20;

// Zero of a nonsingular isotropic rational form, escalating shells; honors a
// caller cap (0 = uncapped, failure is then a bug).
IVec isotropic_zero(const QuadraticForm& f, long cap) {
  long bound = cap > 0 ? cap : kInternalSearchMax;
  auto cert = find_isotropic_vector(f, bound);
  if (cert.witness) return *cert.witness;
  if (cap > 0)
    throw SearchExhausted("no zero vector within height " + std::to_string(cap));
  throw std::logic_error("isotropic form exceeded the internal witness search bound");
}

std::vector<Rational> rational_vec(const Vec& v) {
  std::vector<Rational> r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = v[i].rational_value();
  return r;
}

Vec quad_vec(const std::vector<Rational>& v) {
  Vec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = QuadElem(v[i]);
  return r;
}

}  // namespace

NumberRepresentation represents_number(const QuadraticForm& f, const Rational& b, long height_cap) {
  if (sgn(b) == 0) throw std::domain_error("represents_number needs b != 0");
  auto dg = diagonalize(f);
  auto diag = rational_diagonal(f);  // also rejects singular / non-Q forms
  int n = f.dim();

  std::vector<QuadElem> fe(diag.size() + 1);
  for (size_t i = 0; i < diag.size(); ++i) fe[i] = QuadElem(diag[i]);
  fe.back() = QuadElem(-b);
  QuadraticForm F = QuadraticForm::diagonal(FieldTag::Q(), fe);

  if (!is_isotropic(F).isotropic()) return NumberRepresentation{false, {}};

  IVec z = isotropic_zero(F, height_cap);
  std::vector<Rational> w(n);
  if (sgn(z[n]) != 0) {
    // F(z) = D(z') - b t^2 = 0 with t != 0: rescale.
    Rational t(z[n]);
    for (int i = 0; i < n; ++i) w[i] = Rational(z[i]) / t;
  } else {
    // The zero lies inside D itself: D is isotropic, hence universal.  Split
    // a hyperbolic pair through v: pick j with v_j != 0, set w = t v + e_j,
    // D(w) = 2 t (v, e_j) + d_j = b.
    int j = 0;
    while (sgn(z[j]) == 0) ++j;
    Rational vj(z[j]);
    Rational pair_vj = diag[j] * vj;  // (v, e_j) for diagonal D
    Rational t = (b - diag[j]) / (2 * pair_vj);
    for (int i = 0; i < n; ++i) w[i] = t * Rational(z[i]);
    w[j] += 1;
  }
  // Map back through the diagonalizer and verify exactly.
  Vec wf = mat_vec(dg.T, quad_vec(w));
  if (f.evaluate(wf) != QuadElem(b)) throw std::logic_error("represents_number witness failed to verify");
  return NumberRepresentation{true, rational_vec(wf)};
}

namespace {

// Diagonalize, sort positive entries first, and reduce each entry to its
// squarefree part by rescaling the basis.  Keeps the induction's search
// coefficients small.
struct ReducedDiagonal {
  Mat T;                       // T^t gram T = diag(entries)
  std::vector<Rational> entries;  // signed squarefree integers
};

ReducedDiagonal reduced_sorted_diagonal(const QuadraticForm& f) {
  auto dg = diagonalize(f);
  std::vector<Rational> entries;
  for (const auto& e : dg.entries()) {
    if (e.is_zero()) throw std::domain_error("nonsingular form required");
    entries.push_back(e.rational_value());
  }
  int n = f.dim();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int i, int j) { return sgn(entries[i]) > sgn(entries[j]); });
  Mat T(n, n);
  std::vector<Rational> out(n);
  for (int c = 0; c < n; ++c) {
    int src = order[c];
    Rational d = entries[src];
    Int s = squarefree_part(d).rep;
    Rational scale2 = d / Rational(s);          // a positive rational square
    Rational scale = *rational_sqrt(scale2);    // basis vector division factor
    for (int r = 0; r < n; ++r) T.at(r, c) = dg.T.at(r, src) / QuadElem(scale);
    out[c] = Rational(s);
  }
  return ReducedDiagonal{std::move(T), std::move(out)};
}

}  // namespace

SplittingWitness represents_form(const QuadraticForm& f, const QuadraticForm& g,
                                 const RepresentOptions& opts) {
  if (!f.field().is_rational() || !g.field().is_rational())
    throw std::domain_error("represents_form works over Q");
  if (f.is_singular() || g.is_singular())
    throw std::domain_error("represents_form needs nonsingular forms");
  int n = f.dim(), k = g.dim();

  // Short-circuit: f already in block form diag(gram(g), h).
  if (n > k) {
    bool block = true;
    for (int i = 0; i < n && block; ++i)
      for (int j = 0; j < n && block; ++j) {
        if (i < k && j < k)
          block = f.at(i, j) == g.at(i, j);
        else if ((i < k) != (j < k))
          block = f.at(i, j).is_zero();
      }
    if (block) {
      std::vector<int> rest(n - k);
      std::iota(rest.begin(), rest.end(), k);
      return SplittingWitness{Mat::identity(n), g, restrict_form(f, rest), Mat::identity(k)};
    }
  }

  Signature sf = signature(f), sg = signature(g);
  if (sf.pos < sg.pos)
    throw std::domain_error("signature condition violated: pos(f) = " + std::to_string(sf.pos) +
                            " < pos(g) = " + std::to_string(sg.pos));
  if (sf.neg < sg.neg)
    throw std::domain_error("signature condition violated: neg(f) = " + std::to_string(sf.neg) +
                            " < neg(g) = " + std::to_string(sg.neg));
  if (!opts.unchecked && n - k < 3)
    throw std::domain_error("rank condition violated: rank(f) - rank(g) = " + std::to_string(n - k) +
                            " < 3 (pass unchecked mode to try anyway)");

  ReducedDiagonal rg = reduced_sorted_diagonal(g);
  QuadraticForm g_part = QuadraticForm::diagonal(FieldTag::Q(), quad_vec(rg.entries));

  Mat E = Mat::identity(n);  // complement basis, columns in f-coordinates
  std::vector<Vec> reps;     // representing vectors in f-coordinates
  QuadraticForm cur = f;

  for (int step = 0; step < k; ++step) {
    const Rational& b = rg.entries[step];
    int m = cur.dim();
    // Keep the working form a small squarefree diagonal.
    ReducedDiagonal rc = reduced_sorted_diagonal(cur);
    QuadraticForm curd = QuadraticForm::diagonal(FieldTag::Q(), quad_vec(rc.entries));
    E = E * rc.T;
    cur = curd;

    NumberRepresentation nr;
    try {
      nr = represents_number(cur, b, opts.unchecked ? opts.height : 0);
    } catch (const SearchExhausted& e) {
      throw SearchExhausted("splitting step " + std::to_string(step + 1) + ": " + e.what());
    }
    if (!nr.represents) {
      std::string msg = "splitting step " + std::to_string(step + 1) +
                        ": residual form does not represent " + rational_to_string(b);
      if (opts.unchecked) throw SearchExhausted(msg);
      throw std::logic_error(msg);  // impossible under the rank-gap hypothesis
    }
    Vec v = quad_vec(nr.witness);
    reps.push_back(mat_vec(E, v));

    // Orthogonal complement of v inside cur: project the standard vectors,
    // dropping the first coordinate where v is nonzero.
    int j0 = 0;
    while (v[j0].is_zero()) ++j0;
    Mat W(m, m - 1);
    int c = 0;
    for (int j = 0; j < m; ++j) {
      if (j == j0) continue;
      Vec ej(m);
      ej[j] = QuadElem(1);
      QuadElem coeff = cur.pair(ej, v) / QuadElem(b);
      for (int r = 0; r < m; ++r) {
        QuadElem x = (r == j ? QuadElem(1) : QuadElem(0));
        W.at(r, c) = x - coeff * v[r];
      }
      ++c;
    }
    Mat newGram = W.transpose() * cur.gram() * W;
    cur = QuadraticForm(FieldTag::Q(), std::move(newGram));
    E = E * W;
  }

  Mat T(n, n);
  for (int c = 0; c < k; ++c)
    for (int r = 0; r < n; ++r) T.at(r, c) = reps[static_cast<size_t>(c)][r];
  for (int c = 0; c < n - k; ++c)
    for (int r = 0; r < n; ++r) T.at(r, k + c) = E.at(r, c);
  QuadraticForm h_part = cur;

  // Exact block identity and the residual signature are non-negotiable.
  Mat lhs = T.transpose() * f.gram() * T;
  Mat rhs(n, n);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) rhs.at(i, j) = g_part.at(i, j);
  for (int i = 0; i < n - k; ++i)
    for (int j = 0; j < n - k; ++j) rhs.at(k + i, k + j) = h_part.at(i, j);
  if (lhs != rhs) throw std::logic_error("splitting block identity failed to verify");
  Signature sh = signature(h_part);
  if (sh.pos != sf.pos - sg.pos || sh.neg != sf.neg - sg.neg || sh.zero != 0)
    throw std::logic_error("splitting residual signature mismatch");

  return SplittingWitness{std::move(T), std::move(g_part), std::move(h_part), rg.T};
}

}  // namespace lforms
