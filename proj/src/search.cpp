#include <numeric>

#include "lforms/quadratic_form.hpp"
#include "parallel.hpp"

namespace lforms {

namespace {

// The shell scan works on an integer-rescaled Gram matrix (zeros are
// preserved under scaling).  Two instantiations: a fast int64/int128 kernel
// and an exact GMP fallback for oversized entries.
struct ScaledGram {
  int n = 0;
  std::vector<Int> g;       // row-major, common denominator cleared
  bool fits64 = false;
  std::vector<long long> g64;
};

ScaledGram scale_gram(const QuadraticForm& f) {
  ScaledGram s;
  s.n = f.dim();
  Int den_lcm = 1;
  for (int i = 0; i < s.n; ++i)
    for (int j = 0; j < s.n; ++j) den_lcm = lcm(den_lcm, f.at(i, j).a().get_den());
  s.g.resize(static_cast<size_t>(s.n) * s.n);
  bool fits = true;
  for (int i = 0; i < s.n; ++i)
    for (int j = 0; j < s.n; ++j) {
      Rational e = f.at(i, j).a() * den_lcm;
      s.g[static_cast<size_t>(i) * s.n + j] = e.get_num();
      if (!e.get_num().fits_slong_p() || abs(e.get_num()) > Int(1) << 40) fits = false;
    }
  s.fits64 = fits;
  if (fits) {
    s.g64.resize(s.g.size());
    for (size_t i = 0; i < s.g.size(); ++i) s.g64[i] = s.g[i].get_si();
  }
  return s;
}

// Depth-first scan of one slab {v0 fixed} of the shell {max|v_i| = m},
// components ascending from -m: the visit order is lexicographic.  Partial
// quadratic value and linear forms are carried down the recursion.
template <typename V, typename A>
struct ShellScan {
  int n;
  long m;
  const V* g;  // n x n row-major

  std::vector<long> v;
  std::vector<A> lin;  // (n+1) x n scratch: lin[k][j] = sum_{i<k} G_ij v_i

  ShellScan(int n_, long m_, const V* g_) : n(n_), m(m_), g(g_), v(n_), lin(static_cast<size_t>(n_ + 1) * n_) {}

  A* lin_row(int k) { return lin.data() + static_cast<size_t>(k) * n; }

  bool run(long v0) {
    v[0] = v0;
    A* l1 = lin_row(1);
    for (int j = 0; j < n; ++j) l1[j] = A(v0) * A(g[j]);
    A acc = A(v0) * l1[0];
    return descend(1, acc, std::labs(v0) == m);
  }

  bool descend(int k, const A& acc, bool has_max) {
    if (k == n) {
      if (!(acc == A(0)) || !has_max) return false;
      // First hit in shell order is primitive (a multiple would have shown
      // up in an earlier shell); keep the guard anyway.
      long gg = 0;
      for (long x : v) gg = std::gcd(gg, std::labs(x));
      return gg == 1;
    }
    const A* lk = lin_row(k);
    A* ln = lin_row(k + 1);
    bool last = (k == n - 1);
    for (long t = -m; t <= m; ++t) {
      if (last && !has_max && t != -m && t != m) t = m;  // only ±m can complete the shell
      v[k] = t;
      A acc2 = acc + A(2) * A(t) * lk[k] + A(g[static_cast<size_t>(k) * n + k]) * A(t) * A(t);
      if (!last)
        for (int j = k + 1; j < n; ++j) ln[j] = lk[j] + A(t) * A(g[static_cast<size_t>(k) * n + j]);
      if (descend(k + 1, acc2, has_max || std::labs(t) == m)) return true;
    }
    return false;
  }
};

template <typename V, typename A>
bool scan_shell(const ScaledGram& sg, const V* g, long m, bool parallel, std::vector<long>& out) {
  int n = sg.n;
  if (!parallel) {
    ShellScan<V, A> scan(n, m, g);
    for (long v0 = -m; v0 <= m; ++v0)
      if (scan.run(v0)) {
        out = scan.v;
        return true;
      }
    return false;
  }
  long slabs = 2 * m + 1;
  std::vector<std::vector<long>> hits(static_cast<size_t>(slabs));
  std::vector<char> found(static_cast<size_t>(slabs), 0);
  long best = slabs;  // shared monotone bound; slabs beyond it cannot win
#pragma omp parallel for schedule(dynamic, 1) num_threads(worker_count()) shared(best)
  for (long s = 0; s < slabs; ++s) {
    long current;
#pragma omp atomic read
    current = best;
    if (s > current) continue;
    ShellScan<V, A> scan(n, m, g);
    if (scan.run(-m + s)) {
      hits[static_cast<size_t>(s)] = scan.v;
      found[static_cast<size_t>(s)] = 1;
#pragma omp critical
      if (s < best) best = s;
    }
  }
  for (long s = 0; s < slabs; ++s)
    if (found[static_cast<size_t>(s)]) {
      out = hits[static_cast<size_t>(s)];
      return true;
    }
  return false;
}

}  // namespace

IsotropyCertificate find_isotropic_vector(const QuadraticForm& f, long height_bound, SearchEngine engine) {
  if (!f.field().is_rational()) throw std::domain_error("isotropic vector search requires a form over Q");
  if (height_bound < 1) throw std::domain_error("height bound must be positive");
  ScaledGram sg = scale_gram(f);
  bool parallel = engine == SearchEngine::parallel;

  std::vector<long> hit;
  std::vector<Int> gi = sg.g;
  bool found = false;
  for (long m = 1; m <= height_bound && !found; ++m) {
    if (sg.fits64)
      found = scan_shell<long long, __int128>(sg, sg.g64.data(), m, parallel, hit);
    else
      found = scan_shell<Int, Int>(sg, gi.data(), m, parallel, hit);
  }

  if (found) {
    IVec w(hit.size());
    for (size_t i = 0; i < hit.size(); ++i) w[i] = hit[i];
    // Canonical sign: first nonzero entry positive.
    for (const auto& x : w) {
      int s = sgn(x);
      if (s == 0) continue;
      if (s < 0)
        for (auto& y : w) y = -y;
      break;
    }
    if (!f.evaluate(w).is_zero()) throw std::logic_error("search returned a non-zero of the form");
    IsotropyCertificate cert = is_isotropic(f);
    if (!cert.isotropic())
      throw std::logic_error("witness found for a form the decision procedure calls anisotropic");
    cert.witness = std::move(w);
    return cert;
  }
  IsotropyCertificate cert = is_isotropic(f);
  cert.not_found_within_bound = cert.isotropic();
  return cert;
}

}  // namespace lforms
