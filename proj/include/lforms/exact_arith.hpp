#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lforms {

using Int = mpz_class;
using Rational = mpq_class;

// ---------------------------------------------------------------------------
// Rational helpers.  All arithmetic is GMP-exact; values are kept canonical
// (reduced, positive denominator).
// ---------------------------------------------------------------------------

// Accepts "p", "-p", "p/q"; result is canonicalized.  Throws
// std::invalid_argument on malformed input or zero denominator.
Rational parse_rational(const std::string& s);

// Canonical form: "p" when the denominator is 1, else "p/q".
std::string rational_to_string(const Rational& q);

bool is_integer(const Rational& q);

// Exact square root when q is a perfect rational square (q >= 0 and both
// numerator and denominator are perfect integer squares).
std::optional<Rational> rational_sqrt(const Rational& q);

// Prime factorization of n > 0 by trial division plus Pollard-Brent rho.
// Returned as (prime, exponent) pairs, primes increasing.
std::vector<std::pair<Int, int>> factorize(Int n);

bool is_prime(const Int& n);

// Smallest prime strictly greater than n.
Int next_prime_above(const Int& n);

// ---------------------------------------------------------------------------
// Places of Q: a finite prime or the real place.
// ---------------------------------------------------------------------------

struct Place {
  bool infinite = false;
  Int p = 0;  // prime when finite

  static Place infinity() { return Place{true, Int(0)}; }
  static Place prime(Int q);

  bool operator==(const Place& other) const {
    return infinite == other.infinite && (infinite || p == other.p);
  }
  std::string str() const;
};

// ---------------------------------------------------------------------------
// Square classes in Q*/(Q*)^2, represented by the signed squarefree part.
// ---------------------------------------------------------------------------

struct SquareClass {
  Int rep;  // squarefree, possibly negative, never 0

  bool operator==(const SquareClass& other) const { return rep == other.rep; }
  bool operator!=(const SquareClass& other) const { return rep != other.rep; }
};

// Signed squarefree part s of q, so q = s * t^2 for some rational t.
// Throws std::domain_error on q = 0.
SquareClass squarefree_part(const Rational& q);

// Hilbert symbol (a, b)_v in {+1, -1}: +1 iff z^2 = a x^2 + b y^2 has a
// nontrivial solution over the completion of Q at v.  Computed by the closed
// formulas (Legendre symbols and valuations at odd p, the residue characters
// eps/omega at p = 2, sign inspection at the real place).
int hilbert_symbol(const Rational& a, const Rational& b, const Place& v);

// ---------------------------------------------------------------------------
// Real quadratic field elements a + b*sqrt(d).
//
// d = 0 marks a plain rational (then b = 0); d > 1 must be squarefree.  The
// real embedding is fixed by sqrt(d) > 0; conj() gives the other embedding.
// Elements are immutable values; mixing two distinct nonzero d throws.
// ---------------------------------------------------------------------------

// Throws std::domain_error unless d == 0 or d is squarefree and > 1.
void validate_field_d(long d);

class QuadElem {
 public:
  QuadElem() : d_(0) {}
  QuadElem(Rational a) : a_(std::move(a)), d_(0) {}
  QuadElem(long n) : a_(n), d_(0) {}
  QuadElem(int n) : a_(n), d_(0) {}

  // a + b*sqrt(d); canonicalizes d to 0 when b == 0.
  QuadElem(Rational a, Rational b, long d);

  static QuadElem sqrt_d(long d) { return QuadElem(Rational(0), Rational(1), d); }

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  long d() const { return d_; }

  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
  bool is_rational() const { return sgn(b_) == 0; }
  // Requires is_rational().
  const Rational& rational_value() const;

  // Galois conjugate a - b*sqrt(d); fixes Q pointwise.
  QuadElem conj() const;

  // Sign at the fixed real embedding (sqrt(d) > 0), exact.
  int sign() const;

  QuadElem operator-() const;
  QuadElem operator+(const QuadElem& rhs) const;
  QuadElem operator-(const QuadElem& rhs) const;
  QuadElem operator*(const QuadElem& rhs) const;
  QuadElem operator/(const QuadElem& rhs) const;  // throws on zero divisor
  QuadElem& operator+=(const QuadElem& rhs) { return *this = *this + rhs; }
  QuadElem& operator-=(const QuadElem& rhs) { return *this = *this - rhs; }
  QuadElem& operator*=(const QuadElem& rhs) { return *this = *this * rhs; }

  bool operator==(const QuadElem& rhs) const { return a_ == rhs.a_ && b_ == rhs.b_ && d_ == rhs.d_; }
  bool operator!=(const QuadElem& rhs) const { return !(*this == rhs); }

  // Field norm a^2 - d b^2 (a rational; nonzero for nonzero elements).
  Rational norm() const;

  std::string str() const;

 private:
  Rational a_, b_;
  long d_;
};

QuadElem field_conjugate(const QuadElem& x);

// Exact square root of x viewed as an element of Q(sqrt field_d) (field_d = 0
// for Q), if one exists.  A rational x can be a square in Q(sqrt d) without
// being one in Q (e.g. 5 = sqrt(5)^2 in Q(sqrt 5)).
std::optional<QuadElem> field_square_root(const QuadElem& x, long field_d = 0);

inline bool is_square_in_field(const QuadElem& x, long field_d = 0) {
  return field_square_root(x, field_d).has_value();
}

// Shared field parameter of two elements (0 merges with anything; two distinct
// nonzero d throw std::domain_error).
long merge_field_d(long d1, long d2);

}  // namespace lforms
