#include <doctest.h>

#include <random>

#include "lforms/quadratic_form.hpp"

using namespace lforms;

namespace {

QuadraticForm diag_q(const std::vector<long>& entries) {
  std::vector<QuadElem> e;
  for (long x : entries) e.push_back(QuadElem(Rational(x)));
  return QuadraticForm::diagonal(FieldTag::Q(), e);
}

void check_splitting(const QuadraticForm& f, const QuadraticForm& g, const SplittingWitness& w) {
  int n = f.dim(), k = g.dim();
  REQUIRE(w.g_part.dim() == k);
  REQUIRE(w.h_part.dim() == n - k);
  Mat lhs = w.T.transpose() * f.gram() * w.T;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      QuadElem want;
      if (i < k && j < k)
        want = w.g_part.at(i, j);
      else if (i >= k && j >= k)
        want = w.h_part.at(i - k, j - k);
      CHECK(lhs.at(i, j) == want);
    }
  CHECK(!w.T.det().is_zero());
  CHECK(w.g_to_gpart.transpose() * g.gram() * w.g_to_gpart == w.g_part.gram());
}

}  // namespace

TEST_CASE("represents_number basic examples") {
  auto r = represents_number(QuadraticForm::q_n(3), Rational(1));
  REQUIRE(r.represents);
  // any exact witness is fine; the canonical zero gives (0,1,0,0)-like vectors
  QuadraticForm q3 = QuadraticForm::q_n(3);
  Vec w(4);
  for (size_t i = 0; i < 4; ++i) w[i] = QuadElem(r.witness[i]);
  CHECK(q3.evaluate(w) == QuadElem(1));

  auto no = represents_number(diag_q({1, 1}), Rational(3));
  CHECK(!no.represents);

  auto seven = represents_number(diag_q({1, 1, 1, 1}), Rational(7));
  REQUIRE(seven.represents);
  Vec w7(4);
  for (size_t i = 0; i < 4; ++i) w7[i] = QuadElem(seven.witness[i]);
  CHECK(diag_q({1, 1, 1, 1}).evaluate(w7) == QuadElem(7));

  CHECK_THROWS_AS(represents_number(q3, Rational(0)), std::domain_error);
  CHECK_THROWS_AS(represents_number(diag_q({0, 1}), Rational(1)), std::domain_error);
}

TEST_CASE("represents_number witness soundness on random inputs") {
  std::mt19937_64 rng(41);
  int done = 0;
  while (done < 60) {
    int n = 2 + static_cast<int>(rng() % 4);
    std::vector<long> e(static_cast<size_t>(n));
    for (auto& x : e) {
      x = static_cast<long>(rng() % 9) - 4;
      if (x == 0) x = 3;
    }
    long bs = static_cast<long>(rng() % 19) - 9;
    if (bs == 0) continue;
    ++done;
    QuadraticForm f = diag_q(e);
    Rational b(bs);
    auto r = represents_number(f, b);
    if (r.represents) {
      Vec w(r.witness.size());
      for (size_t i = 0; i < w.size(); ++i) w[i] = QuadElem(r.witness[i]);
      CHECK(f.evaluate(w) == QuadElem(b));
    } else {
      // cross-check the refusal: f + <-b> must be anisotropic
      QuadraticForm F = direct_sum(f, diag_q({-bs}));
      CHECK(!is_isotropic(F).isotropic());
    }
  }
}

TEST_CASE("represents_form block short-circuit returns the identity") {
  QuadraticForm q3 = QuadraticForm::q_n(3);
  QuadraticForm f = direct_sum(q3, diag_q({1, 2, 5}));
  auto w = represents_form(f, q3);
  CHECK(w.T.is_identity());
  CHECK(w.g_part == q3);
  CHECK(w.h_part == diag_q({1, 2, 5}));
  check_splitting(f, q3, w);
}

TEST_CASE("represents_form q8 represents q3") {
  QuadraticForm q8 = QuadraticForm::q_n(8);
  QuadraticForm q3 = QuadraticForm::q_n(3);
  // scramble q8 so the block shortcut does not fire
  Mat t = Mat::identity(9);
  t.add_col(0, 5, QuadElem(1));
  t.add_col(3, 7, QuadElem(-1));
  t.add_col(8, 1, QuadElem(2));
  QuadraticForm f(FieldTag::Q(), t.transpose() * q8.gram() * t);
  auto w = represents_form(f, q3);
  check_splitting(f, q3, w);
  Signature sh = signature(w.h_part);
  CHECK(sh == Signature{5, 0, 0});
}

TEST_CASE("represents_form preconditions are named") {
  QuadraticForm q4 = QuadraticForm::q_n(4);
  QuadraticForm q3 = QuadraticForm::q_n(3);
  // rank gap 1 < 3 once the block structure is scrambled away
  Mat t = Mat::identity(5);
  t.add_col(2, 4, QuadElem(1));
  QuadraticForm f(FieldTag::Q(), t.transpose() * q4.gram() * t);
  CHECK_THROWS_WITH_AS(represents_form(f, q3), doctest::Contains("rank condition"),
                       std::domain_error);
  // signature incompatibility is reported before the rank gap
  QuadraticForm posdef = diag_q({1, 1, 1, 1, 1, 1, 1});
  CHECK_THROWS_WITH_AS(represents_form(posdef, q3), doctest::Contains("signature condition"),
                       std::domain_error);
  CHECK_THROWS_AS(represents_form(diag_q({0, 1, 1, 1, 1}), q3), std::domain_error);
}

TEST_CASE("represents_form unchecked mode reports genuine failure") {
  // diag(1,1) does not represent 3 (sum of two rational squares obstruction)
  RepresentOptions opts;
  opts.unchecked = true;
  opts.height = 100;
  CHECK_THROWS_AS(represents_form(diag_q({1, 1}), diag_q({3}), opts), SearchExhausted);
}

TEST_CASE("represents_form unchecked mode handles q4 over q3") {
  QuadraticForm q4 = QuadraticForm::q_n(4);
  QuadraticForm q3 = QuadraticForm::q_n(3);
  // with the block shortcut disabled by a scramble, unchecked mode must work
  Mat t = Mat::identity(5);
  t.add_col(1, 3, QuadElem(1));
  t.add_col(0, 4, QuadElem(-1));
  QuadraticForm f(FieldTag::Q(), t.transpose() * q4.gram() * t);
  RepresentOptions opts;
  opts.unchecked = true;
  opts.height = 2000;
  auto w = represents_form(f, q3, opts);
  check_splitting(f, q3, w);
  CHECK(signature(w.h_part) == Signature{1, 0, 0});
}

TEST_CASE("represents_form random compatible pairs (rank gap >= 3)") {
  std::mt19937_64 rng(43);
  int done = 0;
  while (done < 25) {
    int k = 1 + static_cast<int>(rng() % 3);
    int n = k + 3 + static_cast<int>(rng() % 2);
    std::vector<long> ge(static_cast<size_t>(k)), fe(static_cast<size_t>(n));
    for (auto& x : ge) {
      x = static_cast<long>(rng() % 7) - 3;
      if (x == 0) x = 1;
    }
    // make f's signature dominate g's: copy g's signs, fill the rest mixed
    size_t i = 0;
    for (; i < ge.size(); ++i) fe[i] = (ge[i] > 0 ? 1 : -1) * (1 + static_cast<long>(rng() % 3));
    for (; i < fe.size(); ++i) fe[i] = (rng() % 2 ? 1 : -1) * (1 + static_cast<long>(rng() % 3));
    QuadraticForm g = diag_q(ge), f = diag_q(fe);
    ++done;
    auto w = represents_form(f, g);
    check_splitting(f, g, w);
    Signature sf = signature(f), sg = signature(g), sh = signature(w.h_part);
    CHECK(sh.pos == sf.pos - sg.pos);
    CHECK(sh.neg == sf.neg - sg.neg);
  }
}
