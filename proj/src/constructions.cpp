#include "lforms/constructions.hpp"

#include <set>

namespace lforms {

bool TheoremAWitness::all_pass() const {
  for (const auto& c : report)
    if (!c.pass) return false;
  return !report.empty();
}

BasisChange q3_to_g_basis() {
  // y1 = x0 + x1, y2 = (x1 - x0)/2: then 2 y1 y2 = x1^2 - x0^2.
  Mat t = Mat::identity(4);
  t.at(0, 0) = QuadElem(Rational(1, 2));
  t.at(1, 0) = QuadElem(Rational(1, 2));
  t.at(0, 1) = QuadElem(-1);
  t.at(1, 1) = QuadElem(1);
  Mat g(4, 4);
  g.at(0, 1) = g.at(1, 0) = QuadElem(1);
  g.at(2, 2) = g.at(3, 3) = QuadElem(1);
  return BasisChange{std::move(t), QuadraticForm(FieldTag::Q(), std::move(g))};
}

TheoremAWitness build_theorem_A_witness(const QuadraticForm& f, long search_height) {
  if (!f.field().is_rational()) throw std::domain_error("theorem A construction works over Q");
  Signature sig = signature(f);
  int n = f.dim() - 1;
  if (sig.zero != 0 || sig.neg != 1 || sig.pos != n)
    throw std::domain_error("signature (n,1) required, got (" + std::to_string(sig.pos) + "," +
                            std::to_string(sig.neg) + "," + std::to_string(sig.zero) + ")");
  if (n < 4) throw std::domain_error("n >= 4 required, form has n = " + std::to_string(n));

  QuadraticForm q3 = QuadraticForm::q_n(3);
  RepresentOptions opts;
  opts.unchecked = (f.dim() - 4 < 3);
  opts.height = search_height;
  SplittingWitness sw = [&] {
    try {
      return represents_form(f, q3, opts);
    } catch (const SearchExhausted& e) {
      throw SearchExhausted(std::string("q3 embedding failed: ") + e.what());
    }
  }();

  // Columns c1..c4 of T carry gram(g_part); move them to the 2y1y2+y3^2+y4^2
  // basis: E4 = C * Tg^{-1} * S with S the q3 -> g change.
  BasisChange bc = q3_to_g_basis();
  Mat C(f.dim(), 4);
  for (int i = 0; i < f.dim(); ++i)
    for (int j = 0; j < 4; ++j) C.at(i, j) = sw.T.at(i, j);
  auto tg_inv = sw.g_to_gpart.inverse();
  if (!tg_inv) throw std::logic_error("singular g diagonalizer");
  Mat e4 = C * *tg_inv * bc.T;

  // e5: first residual basis vector, normalized so f(e5) is squarefree.
  Vec e5 = column_of(sw.T, 4);
  Rational a_raw = f.evaluate(e5).rational_value();
  if (sgn(a_raw) <= 0) throw std::logic_error("residual vector with nonpositive norm");
  Int a_sf = squarefree_part(a_raw).rep;
  Rational scale = *rational_sqrt(a_raw / Rational(a_sf));
  for (auto& x : e5) x = x / QuadElem(scale);
  Rational a(a_sf);

  Mat basis_pre(f.dim(), 5);
  for (int i = 0; i < f.dim(); ++i) {
    for (int j = 0; j < 4; ++j) basis_pre.at(i, j) = e4.at(i, j);
    basis_pre.at(i, 4) = e5[static_cast<size_t>(i)];
  }
  Mat basis = basis_pre;
  basis.scale_col(1, QuadElem(a));  // e2 <- a e2 makes (e1,e2) = a
  return assemble_theorem_a(f, basis_pre, basis, a);
}

TheoremAWitness assemble_theorem_a(const QuadraticForm& f, const Mat& basis_pre, const Mat& basis,
                                   const Rational& a) {
  if (basis.cols() != 5 || basis.rows() != f.dim() || basis_pre.cols() != 5 ||
      basis_pre.rows() != f.dim())
    throw std::domain_error("theorem A basis must have five columns in ambient coordinates");
  Mat hg = basis.transpose() * f.gram() * basis;
  QuadraticForm h(FieldTag::Q(), hg);

  // Expected structural Gram of h in the basis e1..e5.
  Mat expected(5, 5);
  expected.at(0, 1) = expected.at(1, 0) = QuadElem(a);
  expected.at(2, 2) = expected.at(3, 3) = QuadElem(1);
  expected.at(4, 4) = QuadElem(a);

  LorentzSpace space(h);
  IVec u1{1, 0, 0, 0, 1};
  IVec u2{0, -1, 0, 0, 1};
  LorentzMatrix tau1 = reflection_in_vector(space, u1);
  LorentzMatrix tau2 = reflection_in_vector(space, u2);
  LorentzMatrix tau3 = check_element(space, tau1.m * tau2.m);

  IVec nh{0, 0, 0, 0, 1};
  Hyperplane wall_h(space, nh), pi1(space, u1), pi2(space, u2);
  Vec e1(5), e2(5);
  e1[0] = QuadElem(1);
  e2[1] = QuadElem(1);
  BoundaryPoint p1(space, e1), p2(space, e2);

  TheoremAWitness w{f,  h,  basis_pre, basis, a, u1, u2,
                    tau1, tau2, tau3, wall_h, pi1, pi2, p1, p2, {}};

  auto check = [&](const std::string& name, bool pass, std::string detail = "") {
    w.report.push_back(Check{name, pass, std::move(detail)});
  };
  auto hp = [&](const IVec& x, const IVec& y) { return space.pair(x, y); };

  QuadElem qa{a};
  check("embedding_gram_matches", hg == expected, "basis^t gram(f) basis = structural h");
  Mat rescaled = basis_pre;
  rescaled.scale_col(1, qa);
  check("basis_rescaling", rescaled == basis, "e2 column scaled by a");
  check("a_positive", sgn(a) > 0, "a = " + rational_to_string(a));
  check("u1_norm", hp(u1, u1) == qa);
  check("u2_norm", hp(u2, u2) == qa);
  check("u1_u2_orthogonal", hp(u1, u2).is_zero());
  check("u1_e1_orthogonal", hp(u1, IVec{1, 0, 0, 0, 0}).is_zero());
  check("u2_e2_orthogonal", hp(u2, IVec{0, 1, 0, 0, 0}).is_zero());
  check("u1_e2_pairing", hp(u1, IVec{0, 1, 0, 0, 0}) == qa);
  check("u2_e1_pairing", hp(u2, IVec{1, 0, 0, 0, 0}) == -qa);
  check("e1_isotropic", h.evaluate(IVec{1, 0, 0, 0, 0}).is_zero());
  check("e2_isotropic", h.evaluate(IVec{0, 1, 0, 0, 0}).is_zero());
  check("tau1_integral", tau1.integral);
  check("tau2_integral", tau2.integral);
  check("tau1_form_preserving", tau1.form_preserving);
  check("tau2_form_preserving", tau2.form_preserving);
  check("tau1_involutive", (tau1.m * tau1.m).is_identity());
  check("tau2_involutive", (tau2.m * tau2.m).is_identity());
  check("tau3_is_product_both_orders", tau3.m == tau1.m * tau2.m && tau3.m == tau2.m * tau1.m);
  check("tau3_involutive", (tau3.m * tau3.m).is_identity());
  check("tau3_integral_form_preserving", tau3.integral && tau3.form_preserving);
  check("p1_on_pi1", boundary_point_on_hyperplane(space, p1, pi1));
  check("p2_on_pi2", boundary_point_on_hyperplane(space, p2, pi2));
  check("pi1_pi2_intersecting", classify_pair(space, pi1, pi2) == PairClass::intersecting);
  check("pi1_pi2_perpendicular", hp(u1, u2).is_zero());
  check("pi1_h_parallel", classify_pair(space, pi1, wall_h) == PairClass::parallel);
  check("pi2_h_parallel", classify_pair(space, pi2, wall_h) == PairClass::parallel);
  return w;
}

FamilyForm family_form(long a, int n, FamilyFlavor flavor) {
  if (a <= 0) throw std::domain_error("family parameter a must be positive");
  if (flavor == FamilyFlavor::nonuniform) {
    if (n < 4) throw std::domain_error("nonuniform family needs n >= 4");
    std::vector<QuadElem> e(static_cast<size_t>(n) + 1, QuadElem(1));
    e[0] = QuadElem(-1);
    e[4] = QuadElem(Rational(a));
    return FamilyForm{a, n, flavor, QuadraticForm::diagonal(FieldTag::Q(), e)};
  }
  if (n < 5) throw std::domain_error("compact family needs n >= 5");
  QuadraticForm q = bowditch_mess_gram();
  std::vector<QuadElem> tail(static_cast<size_t>(n) - 4, QuadElem(1));
  tail[0] = QuadElem(Rational(a));
  QuadraticForm rest = QuadraticForm::diagonal(FieldTag::Qsqrt(5), tail);
  return FamilyForm{a, n, flavor, direct_sum(q, rest)};
}

GPSForm gps_form(const QuadraticForm& base, const QuadElem& a) {
  if (!condition_star_check(base))
    throw std::domain_error("base form must have signature (n-1,1) and satisfy condition (*)");
  if (a.d() != 0 && a.d() != base.field().d)
    throw std::domain_error("a must lie in the base form's field");
  long d = base.field().d;
  bool positive = a.sign() > 0 && a.conj().sign() > 0;
  if (!positive) throw std::domain_error("a in K_+ required: a must be totally positive");
  QuadraticForm tail = QuadraticForm::diagonal(FieldTag{d}, {a});
  GPSForm g{base, a, direct_sum(base, tail), is_square_in_field(a, d)};
  if (!condition_star_check(g.form)) throw std::logic_error("gps form lost condition (*)");
  return g;
}

QuadraticForm bowditch_mess_gram() {
  QuadElem c(Rational(1, 4), Rational(1, 4), 5);  // cos(pi/5) = (1+sqrt5)/4
  QuadElem half(Rational(1, 2));
  Mat g(5, 5);
  for (int i = 0; i < 5; ++i) g.at(i, i) = QuadElem(1);
  g.at(0, 1) = g.at(1, 0) = -c;
  g.at(1, 2) = g.at(2, 1) = -half;
  g.at(2, 3) = g.at(3, 2) = -half;
  g.at(3, 4) = g.at(4, 3) = -c;
  return QuadraticForm(FieldTag::Qsqrt(5), std::move(g));
}

bool condition_star_check(const QuadraticForm& f) {
  Signature s = signature(f);
  if (s.zero != 0 || s.neg != 1 || s.pos != f.dim() - 1) return false;
  if (f.field().is_rational()) return true;  // no nontrivial embedding
  QuadraticForm c = f.conjugate();
  // Sylvester: positive definite iff all leading principal minors positive.
  std::vector<int> idx;
  for (int k = 0; k < c.dim(); ++k) {
    idx.push_back(k);
    if (restrict_form(c, idx).det().sign() <= 0) return false;
  }
  return true;
}

bool is_nonuniform(const QuadraticForm& f) {
  Signature s = signature(f);
  if (s.zero != 0 || s.neg != 1)
    throw std::domain_error("nonuniformity test needs a nonsingular form of signature (n,1)");
  return is_isotropic(f).isotropic();
}

namespace {

// Square classes dividing m: ± products of subsets of the odd prime support
// of m together with 2.
std::vector<Int> lambda_sweep(const Int& m) {
  std::set<Int> primes{Int(2)};
  for (const auto& [p, e] : factorize(abs(m))) primes.insert(p);
  std::vector<Int> divs{Int(1)};
  for (const Int& p : primes) {
    size_t sz = divs.size();
    for (size_t i = 0; i < sz; ++i) divs.push_back(divs[i] * p);
  }
  std::vector<Int> out;
  for (const Int& d : divs) {
    out.push_back(d);
    out.push_back(-d);
  }
  return out;
}

std::vector<Int> hasse_places(const QuadraticForm& f1, const QuadraticForm& f2) {
  std::set<Int> ps{Int(2)};
  for (const QuadraticForm* f : {&f1, &f2})
    for (const auto& a : rational_diagonal(*f)) {
      Int s = abs(squarefree_part(a).rep);
      for (const auto& [p, e] : factorize(s))
        if (p != 2) ps.insert(p);
    }
  return {ps.begin(), ps.end()};
}

}  // namespace

CommensurabilityCertificate certify_distinct(long a1, long a2, int n, FamilyFlavor flavor) {
  if (flavor != FamilyFlavor::nonuniform)
    throw std::domain_error("commensurability certification is implemented over Q only");
  CommensurabilityCertificate cert;
  cert.a1 = a1;
  cert.a2 = a2;
  if (a1 == a2) {
    cert.verdict = PairVerdict::undecided;
    cert.lines.push_back({Int(1), true, ""});
    return cert;
  }
  QuadraticForm f1 = family_form(a1, n, flavor).form;
  QuadraticForm f2 = family_form(a2, n, flavor).form;
  Int det1 = squarefree_part(f1.det().rational_value()).rep;
  Int det2 = squarefree_part(f2.det().rational_value()).rep;
  Signature s2 = signature(f2);

  bool any_match = false;
  for (const Int& lam : lambda_sweep(2 * det1 * det2)) {
    CommensurabilityCertificate::LambdaLine line{lam, false, ""};
    QuadraticForm sf = scale(f1, QuadElem(Rational(lam)));
    Signature ss = signature(sf);
    if (!(ss == s2)) {
      line.mismatch = "signature";
    } else {
      Int dets = squarefree_part(sf.det().rational_value()).rep;
      if (dets != det2) {
        line.mismatch = "det square class " + dets.get_str() + " != " + det2.get_str();
      } else {
        for (const Int& p : hasse_places(sf, f2)) {
          Place v = Place::prime(p);
          int h1 = hasse_invariant(sf, v), h2 = hasse_invariant(f2, v);
          if (h1 != h2) {
            line.mismatch = "hasse invariant at p = " + p.get_str();
            break;
          }
        }
        if (line.mismatch.empty() &&
            hasse_invariant(sf, Place::infinity()) != hasse_invariant(f2, Place::infinity()))
          line.mismatch = "hasse invariant at infinity";
      }
    }
    line.matched = line.mismatch.empty();
    any_match |= line.matched;
    cert.lines.push_back(std::move(line));
  }
  cert.verdict = any_match ? PairVerdict::undecided : PairVerdict::certified_distinct;
  return cert;
}

std::vector<CommensurabilityCertificate> pairwise_noncommensurable(const std::vector<long>& params,
                                                                   int n, FamilyFlavor flavor) {
  std::vector<CommensurabilityCertificate> out;
  for (size_t i = 0; i < params.size(); ++i)
    for (size_t j = i + 1; j < params.size(); ++j)
      out.push_back(certify_distinct(params[i], params[j], n, flavor));
  return out;
}

}  // namespace lforms
