#include "lforms/lorentz.hpp"

namespace lforms {

LorentzSpace::LorentzSpace(QuadraticForm f) : f_(std::move(f)) {
  Signature s = signature(f_);
  if (s.neg != 1 || s.zero != 0)
    throw std::domain_error("Lorentz space needs signature (n,1), got (" + std::to_string(s.pos) +
                            "," + std::to_string(s.neg) + "," + std::to_string(s.zero) + ")");
}

namespace {

bool vec_is_rational(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_rational()) return false;
  return true;
}

Vec canonical_normal(const LorentzSpace& space, Vec normal) {
  if (static_cast<int>(normal.size()) != space.dim())
    throw std::domain_error("normal dimension mismatch");
  bool zero = true;
  for (const auto& x : normal) zero &= x.is_zero();
  if (zero) throw std::domain_error("hyperplane normal must be nonzero");
  if (space.pair(normal, normal).sign() <= 0)
    throw std::domain_error("hyperplane normal must be spacelike: (e,e) > 0 required");
  if (vec_is_rational(normal)) return to_vec(primitive_integer_vector(normal));
  return normal;
}

}  // namespace

Hyperplane::Hyperplane(const LorentzSpace& space, Vec normal)
    : normal_(canonical_normal(space, std::move(normal))) {}

Hyperplane::Hyperplane(const LorentzSpace& space, const IVec& normal)
    : normal_(canonical_normal(space, to_vec(normal))) {}

std::optional<IVec> Hyperplane::integral_normal() const {
  for (const auto& x : normal_)
    if (!x.is_rational() || !is_integer(x.a())) return std::nullopt;
  IVec w(normal_.size());
  for (size_t i = 0; i < w.size(); ++i) w[i] = normal_[i].a().get_num();
  return w;
}

BoundaryPoint::BoundaryPoint(const LorentzSpace& space, Vec rep) : rep_(std::move(rep)) {
  if (static_cast<int>(rep_.size()) != space.dim()) throw std::domain_error("boundary point dimension mismatch");
  bool zero = true;
  for (const auto& x : rep_) zero &= x.is_zero();
  if (zero) throw std::domain_error("boundary point needs a nonzero representative");
  if (!space.form().evaluate(rep_).is_zero())
    throw std::domain_error("boundary point representative must be isotropic");
}

LorentzMatrix check_element(const QuadraticForm& f, Mat m) {
  if (m.rows() != f.dim() || m.cols() != f.dim())
    throw std::domain_error("element dimension mismatch");
  LorentzMatrix r;
  r.integral = m.is_integral();
  r.form_preserving = (m.transpose() * f.gram() * m) == f.gram();
  r.m = std::move(m);
  return r;
}

LorentzMatrix reflection_in_vector(const QuadraticForm& f, const Vec& u) {
  if (static_cast<int>(u.size()) != f.dim()) throw std::domain_error("reflection vector dimension mismatch");
  QuadElem uu = f.pair(u, u);
  if (uu.is_zero()) throw std::domain_error("reflection needs (u,u) != 0, got an isotropic vector");
  int n = f.dim();
  // column j of G u pairing: (b_j, u)
  Vec gu(n);
  for (int j = 0; j < n; ++j) {
    Vec bj(n);
    bj[j] = QuadElem(1);
    gu[j] = f.pair(bj, u);
  }
  Mat r = Mat::identity(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r.at(i, j) -= QuadElem(2) * u[i] * gu[j] / uu;
  return check_element(f, std::move(r));
}

LorentzMatrix reflection_in_vector(const LorentzSpace& s, const IVec& u) {
  return reflection_in_vector(s.form(), to_vec(u));
}

const char* pair_class_name(PairClass c) {
  switch (c) {
    case PairClass::equal: return "equal";
    case PairClass::intersecting: return "intersecting";
    case PairClass::parallel: return "parallel";
    case PairClass::ultraparallel: return "ultraparallel";
  }
  return "?";
}

bool proportional(const Vec& u, const Vec& v) {
  if (u.size() != v.size()) return false;
  // u and v nonzero: u ~ v iff u_i v_j == u_j v_i for all i, j.
  for (size_t i = 0; i < u.size(); ++i)
    for (size_t j = i + 1; j < u.size(); ++j)
      if (u[i] * v[j] != u[j] * v[i]) return false;
  // Rule out the zero-vs-nonzero case on matching support.
  for (size_t i = 0; i < u.size(); ++i)
    if (u[i].is_zero() != v[i].is_zero()) return false;
  return true;
}

PairClass classify_pair(const LorentzSpace& space, const Hyperplane& a, const Hyperplane& b) {
  const Vec& ea = a.normal();
  const Vec& eb = b.normal();
  if (ea.size() != eb.size() || static_cast<int>(ea.size()) != space.dim())
    throw std::domain_error("hyperplane pair dimension mismatch");
  if (proportional(ea, eb)) return PairClass::equal;
  QuadElem p = space.pair(ea, eb);
  QuadElem lhs = p * p;
  QuadElem rhs = space.pair(ea, ea) * space.pair(eb, eb);
  QuadElem diff = lhs - rhs;
  int s = diff.sign();
  if (s < 0) return PairClass::intersecting;
  if (s == 0) return PairClass::parallel;
  return PairClass::ultraparallel;
}

bool boundary_point_on_hyperplane(const LorentzSpace& space, const BoundaryPoint& p, const Hyperplane& a) {
  return space.pair(p.rep(), a.normal()).is_zero();
}

namespace {

// Fixed base-point list for sidedness representatives: (1,0,...,0), then
// (1,...,±1/2 in slot j,...).
std::vector<Vec> base_point_list(int n) {
  std::vector<Vec> out;
  Vec b(n);
  b[0] = QuadElem(1);
  out.push_back(b);
  for (int j = 1; j < n; ++j)
    for (int s : {1, -1}) {
      Vec c = b;
      c[j] = QuadElem(Rational(s, 2));
      out.push_back(c);
    }
  return out;
}

// Lorentz projection of base onto the hyperplane; nullopt when the result is
// not timelike.
std::optional<Vec> timelike_representative(const LorentzSpace& space, const Hyperplane& h, const Vec& base) {
  const Vec& e = h.normal();
  QuadElem ee = space.pair(e, e);
  QuadElem be = space.pair(base, e);
  Vec x(base.size());
  for (size_t i = 0; i < x.size(); ++i) x[i] = base[i] - be / ee * e[i];
  if (space.form().evaluate(x).sign() >= 0) return std::nullopt;
  return x;
}

}  // namespace

Hyperplane apply(const LorentzSpace& space, const LorentzMatrix& m, const Hyperplane& h) {
  if (!m.form_preserving) throw std::domain_error("hyperplane action needs a form-preserving matrix");
  return Hyperplane(space, mat_vec(m.m, h.normal()));
}

bool separates(const LorentzSpace& space, const Hyperplane& w, const Hyperplane& a, const Hyperplane& b) {
  auto disjoint = [&](const Hyperplane& x, const Hyperplane& y, const char* who) {
    PairClass c = classify_pair(space, x, y);
    if (c != PairClass::parallel && c != PairClass::ultraparallel)
      throw std::domain_error(std::string("separates precondition: ") + who +
                              " must be disjoint, got " + pair_class_name(c));
  };
  disjoint(w, a, "W and A");
  disjoint(w, b, "W and B");
  disjoint(a, b, "A and B");

  for (const Vec& base : base_point_list(space.dim())) {
    if (space.form().evaluate(base).sign() >= 0) continue;
    auto xa = timelike_representative(space, a, base);
    auto xb = timelike_representative(space, b, base);
    if (!xa || !xb) continue;
    // Same-sheet normalization: timelike x, y lie in one cone iff (x,y) < 0.
    if (space.pair(*xa, base).sign() > 0)
      for (auto& t : *xa) t = -t;
    if (space.pair(*xb, base).sign() > 0)
      for (auto& t : *xb) t = -t;
    int sa = space.pair(w.normal(), *xa).sign();
    int sb = space.pair(w.normal(), *xb).sign();
    if (sa == 0 || sb == 0) continue;  // degenerate for this base point
    return sa != sb;
  }
  throw std::logic_error("separates: base-point fallback list exhausted");
}

}  // namespace lforms
