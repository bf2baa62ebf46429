#include "lforms/exact_arith.hpp"

#include <algorithm>
#include <map>

namespace lforms {

Rational parse_rational(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  // mpq set_str accepts "p" and "p/q" but also tolerates leading whitespace
  // and some junk; pre-validate the character set.
  size_t slashes = 0;
  for (size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if (c == '/') {
      ++slashes;
      continue;
    }
    if (c == '-' && (i == 0 || s[i - 1] == '/')) continue;
    if (c < '0' || c > '9') throw std::invalid_argument("malformed rational literal: " + s);
  }
  if (slashes > 1 || s.back() == '/' || s.back() == '-')
    throw std::invalid_argument("malformed rational literal: " + s);
  Rational q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("malformed rational literal: " + s);
  if (sgn(q.get_den()) == 0) throw std::invalid_argument("zero denominator: " + s);
  q.canonicalize();
  return q;
}

std::string rational_to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

std::optional<Rational> rational_sqrt(const Rational& q) {
  if (sgn(q) < 0) return std::nullopt;
  const Int& num = q.get_num();
  const Int& den = q.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
    return std::nullopt;
  Int rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  return Rational(rn, rd);
}

bool is_prime(const Int& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

Int next_prime_above(const Int& n) {
  Int r;
  mpz_nextprime(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

namespace {

// Pollard-Brent rho; n must be composite, odd, > 1.
Int pollard_brent(const Int& n) {
  if (n % 2 == 0) return 2;
  gmp_randclass rng(gmp_randinit_default);
  rng.seed(0xC0FFEEul);
  while (true) {
    Int y = rng.get_z_range(n - 1) + 1;
    Int c = rng.get_z_range(n - 1) + 1;
    Int m = 128, g = 1, r = 1, q = 1, x, ys;
    while (g == 1) {
      x = y;
      for (Int i = 0; i < r; ++i) y = (y * y + c) % n;
      Int k = 0;
      while (k < r && g == 1) {
        ys = y;
        Int lim = std::min(m, Int(r - k));
        for (Int i = 0; i < lim; ++i) {
          y = (y * y + c) % n;
          q = q * abs(x - y) % n;
        }
        g = gcd(q, n);
        k += m;
      }
      r *= 2;
    }
    if (g == n) {
      do {
        ys = (ys * ys + c) % n;
        g = gcd(abs(x - ys), n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_rec(Int n, std::map<Int, int>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out[n] += 1;
    return;
  }
  Int f = pollard_brent(n);
  factor_rec(f, out);
  factor_rec(n / f, out);
}

}  // namespace

std::vector<std::pair<Int, int>> factorize(Int n) {
  if (n <= 0) throw std::domain_error("factorize requires n > 0");
  std::map<Int, int> acc;
  for (long p : {2L, 3L, 5L, 7L, 11L, 13L}) {
    while (n % p == 0) {
      acc[Int(p)] += 1;
      n /= p;
    }
  }
  Int p = 17;
  while (p * p <= n && p < 100000) {
    while (n % p == 0) {
      acc[p] += 1;
      n /= p;
    }
    p += 2;
  }
  if (n > 1) factor_rec(n, acc);
  return {acc.begin(), acc.end()};
}

Place Place::prime(Int q) {
  if (!lforms::is_prime(q)) throw std::domain_error("not a prime: " + q.get_str());
  return Place{false, std::move(q)};
}

std::string Place::str() const { return infinite ? "infinity" : p.get_str(); }

SquareClass squarefree_part(const Rational& q) {
  if (sgn(q) == 0) throw std::domain_error("zero has no squarefree part");
  // The square class of p/q equals the square class of p*q.
  Int n = q.get_num() * q.get_den();
  int s = sgn(n);
  n = abs(n);
  Int rep = 1;
  for (const auto& [prime, e] : factorize(n))
    if (e % 2 == 1) rep *= prime;
  return SquareClass{s < 0 ? -rep : rep};
}

namespace {

// (u-1)/2 mod 2 for odd u.
int eps2(const Int& u) {
  Int m = ((u - 1) / 2) % 2;
  return std::abs(static_cast<int>(m.get_si()));
}

// (u^2-1)/8 mod 2 for odd u.
int omega2(const Int& u) {
  Int m = ((u * u - 1) / 8) % 2;
  return std::abs(static_cast<int>(m.get_si()));
}

int legendre(const Int& a, const Int& p) { return mpz_legendre(a.get_mpz_t(), p.get_mpz_t()); }

}  // namespace

int hilbert_symbol(const Rational& a, const Rational& b, const Place& v) {
  if (sgn(a) == 0 || sgn(b) == 0) throw std::domain_error("hilbert symbol needs nonzero arguments");
  // Only the square classes matter.
  Int x = squarefree_part(a).rep;
  Int y = squarefree_part(b).rep;
  if (v.infinite) return (sgn(x) < 0 && sgn(y) < 0) ? -1 : 1;
  const Int& p = v.p;
  int alpha = 0, beta = 0;  // valuations; 0 or 1 on squarefree input
  Int u = x, w = y;
  if (u % p == 0) {
    alpha = 1;
    u /= p;
  }
  if (w % p == 0) {
    beta = 1;
    w /= p;
  }
  if (p == 2) {
    int e = (eps2(u) * eps2(w) + alpha * omega2(w) + beta * omega2(u)) % 2;
    return e ? -1 : 1;
  }
  int r = 1;
  if (alpha && beta && ((p - 1) / 2) % 2 == 1) r = -r;
  if (beta) r *= legendre(u, p);
  if (alpha) r *= legendre(w, p);
  return r;
}

// ---------------------------------------------------------------------------
// QuadElem
// ---------------------------------------------------------------------------

void validate_field_d(long d) {
  if (d == 0) return;
  if (d <= 1) throw std::domain_error("field parameter d must be 0 or a squarefree integer > 1");
  for (const auto& [prime, e] : factorize(Int(d)))
    if (e > 1) throw std::domain_error("field parameter d must be squarefree: " + std::to_string(d));
}

QuadElem::QuadElem(Rational a, Rational b, long d) : a_(std::move(a)), b_(std::move(b)), d_(d) {
  if (sgn(b_) == 0) {
    d_ = 0;
  } else if (d_ == 0) {
    throw std::domain_error("irrational part with no field parameter");
  }
}

const Rational& QuadElem::rational_value() const {
  if (!is_rational()) throw std::domain_error("element is not rational: " + str());
  return a_;
}

QuadElem QuadElem::conj() const { return QuadElem(a_, -b_, d_); }

QuadElem field_conjugate(const QuadElem& x) { return x.conj(); }

int QuadElem::sign() const {
  int sa = sgn(a_), sb = sgn(b_);
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // Signs differ: compare a^2 against d b^2.
  Rational lhs = a_ * a_, rhs = b_ * b_ * d_;
  int c = cmp(lhs, rhs);
  if (c == 0) return 0;  // unreachable for squarefree d > 1
  return c > 0 ? sa : sb;
}

long merge_field_d(long d1, long d2) {
  if (d1 == 0) return d2;
  if (d2 == 0 || d1 == d2) return d1;
  throw std::domain_error("mixing elements of Q(sqrt " + std::to_string(d1) + ") and Q(sqrt " +
                          std::to_string(d2) + ")");
}

QuadElem QuadElem::operator-() const { return QuadElem(-a_, -b_, d_); }

QuadElem QuadElem::operator+(const QuadElem& rhs) const {
  if (d_ == 0 && rhs.d_ == 0) return QuadElem(a_ + rhs.a_);
  long d = merge_field_d(d_, rhs.d_);
  return QuadElem(a_ + rhs.a_, b_ + rhs.b_, d);
}

QuadElem QuadElem::operator-(const QuadElem& rhs) const {
  if (d_ == 0 && rhs.d_ == 0) return QuadElem(a_ - rhs.a_);
  long d = merge_field_d(d_, rhs.d_);
  return QuadElem(a_ - rhs.a_, b_ - rhs.b_, d);
}

QuadElem QuadElem::operator*(const QuadElem& rhs) const {
  if (d_ == 0 && rhs.d_ == 0) return QuadElem(a_ * rhs.a_);
  long d = merge_field_d(d_, rhs.d_);
  return QuadElem(a_ * rhs.a_ + Rational(d) * b_ * rhs.b_, a_ * rhs.b_ + b_ * rhs.a_, d);
}

QuadElem QuadElem::operator/(const QuadElem& rhs) const {
  if (rhs.is_zero()) throw std::domain_error("division by zero");
  long d = merge_field_d(d_, rhs.d_);
  Rational n = rhs.a_ * rhs.a_ - Rational(d) * rhs.b_ * rhs.b_;
  // n != 0: d squarefree, so sqrt(d) is irrational.
  QuadElem num = *this * rhs.conj();
  return QuadElem(num.a_ / n, num.b_ / n, d);
}

Rational QuadElem::norm() const { return a_ * a_ - Rational(d_) * b_ * b_; }

std::string QuadElem::str() const {
  if (is_rational()) return rational_to_string(a_);
  std::string s = rational_to_string(a_);
  s += (sgn(b_) < 0 ? " - " : " + ");
  Rational ab = abs(b_);
  if (ab != 1) s += rational_to_string(ab) + "*";
  s += "sqrt(" + std::to_string(d_) + ")";
  return s;
}

std::optional<QuadElem> field_square_root(const QuadElem& x, long field_d) {
  long d = merge_field_d(x.d(), field_d);
  if (x.is_zero()) return QuadElem(Rational(0));
  if (x.is_rational()) {
    if (auto r = rational_sqrt(x.a())) return QuadElem(*r);
    // In Q(sqrt d) a rational can also be d times a square: sqrt = t*sqrt(d).
    if (d > 0) {
      if (auto t = rational_sqrt(x.a() / d)) return QuadElem(Rational(0), *t, d);
    }
    return std::nullopt;
  }
  // b != 0: w = u + v sqrt(d) with u^2 + d v^2 = a and 2uv = b.  Then u^2 is
  // a root of t^2 - a t + d (b/2)^2, so a^2 - d b^2 must be a rational square
  // s^2 and u^2 = (a ± s)/2 must be a rational square.
  auto s = rational_sqrt(x.norm());
  if (!s) return std::nullopt;
  for (int pick : {0, 1}) {
    Rational usq = (x.a() + (pick ? -*s : *s)) / 2;
    if (auto u = rational_sqrt(usq)) {
      if (sgn(*u) == 0) continue;
      Rational v = x.b() / (2 * *u);
      QuadElem w(*u, v, x.d());
      if (w * w == x) return w;
    }
  }
  return std::nullopt;
}

}  // namespace lforms
