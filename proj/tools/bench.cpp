// Benchmark of the parallel search kernels against their serial references:
// isotropic witness search over shells and orthogonal element enumeration.

#include <chrono>
#include <cstdio>

#include "lforms/quadratic_form.hpp"
#include "lforms/separability.hpp"

using namespace lforms;

namespace {

double seconds(std::chrono::steady_clock::time_point a, std::chrono::steady_clock::time_point b) {
  return std::chrono::duration<double>(b - a).count();
}

template <typename F>
double timed(F&& f) {
  auto t0 = std::chrono::steady_clock::now();
  f();
  return seconds(t0, std::chrono::steady_clock::now());
}

QuadraticForm diag_q(const std::vector<long>& entries) {
  std::vector<QuadElem> e;
  for (long x : entries) e.push_back(QuadElem(Rational(x)));
  return QuadraticForm::diagonal(FieldTag::Q(), e);
}

}  // namespace

int main() {
  std::printf("%-44s %10s %10s %8s\n", "workload", "serial[s]", "parallel[s]", "speedup");

  auto shell_case = [](const char* label, const QuadraticForm& f, long h) {
    IsotropyCertificate cs, cp;
    double ts = timed([&] { cs = find_isotropic_vector(f, h, SearchEngine::serial); });
    double tp = timed([&] { cp = find_isotropic_vector(f, h, SearchEngine::parallel); });
    if (cs.witness != cp.witness) {
      std::fprintf(stderr, "engine mismatch on %s\n", label);
      std::exit(1);
    }
    std::printf("%-44s %10.3f %10.3f %7.2fx\n", label, ts, tp, ts / tp);
  };

  // Anisotropic forms force the search to exhaust every shell.
  shell_case("shell search diag(1,1,-7) h=260 (exhaust)", diag_q({1, 1, -7}), 260);
  shell_case("shell search diag(1,1,1,-7) h=36 (exhaust)", diag_q({1, 1, 1, -7}), 36);
  shell_case("shell search diag(-3,5,5,7,11) h=40", diag_q({-3, 5, 5, 7, 11}), 40);

  {
    LorentzSpace q4(QuadraticForm::q_n(4));
    OrthogonalEnumeration es, ep;
    double ts = timed([&] { es = enumerate_orthogonal_elements(q4, 2, 2, SearchEngine::serial); });
    double tp = timed([&] { ep = enumerate_orthogonal_elements(q4, 2, 2, SearchEngine::parallel); });
    if (es.elements.size() != ep.elements.size()) {
      std::fprintf(stderr, "engine mismatch\n");
      return 1;
    }
    std::printf("%-44s %10.3f %10.3f %7.2fx\n", "element enumeration q4 h=2 len=2", ts, tp, ts / tp);
    std::printf("  (%zu elements from %zu reflection vectors)\n", ep.elements.size(),
                ep.generator_vectors.size());
  }
  return 0;
}
