#include "lforms/separability.hpp"

#include <unordered_map>

#include "parallel.hpp"

namespace lforms {

namespace {

using IRows = std::vector<std::vector<Int>>;

bool integral_gram(const QuadraticForm& f) {
  return f.field().is_rational() && f.gram().is_integral();
}

IVec int_mat_vec(const IRows& m, const IVec& v) {
  IVec r(m.size(), Int(0));
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < v.size(); ++j) r[i] += m[i][j] * v[j];
  return r;
}

IRows to_int_rows(const Mat& m) {
  IRows r(static_cast<size_t>(m.rows()), std::vector<Int>(static_cast<size_t>(m.cols())));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) {
      const QuadElem& e = m.at(i, j);
      if (!e.is_rational() || !is_integer(e.a()))
        throw std::domain_error("integral matrix expected");
      r[static_cast<size_t>(i)][static_cast<size_t>(j)] = e.a().get_num();
    }
  return r;
}

Mat from_int_rows(const IRows& r) {
  Mat m(static_cast<int>(r.size()), static_cast<int>(r.empty() ? 0 : r[0].size()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      m.at(i, j) = QuadElem(Rational(r[static_cast<size_t>(i)][static_cast<size_t>(j)]));
  return m;
}

IRows irows_mul(const IRows& a, const IRows& b) {
  size_t n = a.size(), k = b.size(), m = b[0].size();
  IRows r(n, std::vector<Int>(m, Int(0)));
  for (size_t i = 0; i < n; ++i)
    for (size_t t = 0; t < k; ++t) {
      const Int& x = a[i][t];
      if (x == 0) continue;
      for (size_t j = 0; j < m; ++j)
        if (b[t][j] != 0) r[i][j] += x * b[t][j];
    }
  return r;
}

IRows irows_identity(size_t n) {
  IRows r(n, std::vector<Int>(n, Int(0)));
  for (size_t i = 0; i < n; ++i) r[i][i] = 1;
  return r;
}

// M^t G M == G over the integers.
bool irows_preserves(const IRows& m, const IRows& g) {
  size_t n = m.size();
  IRows gm = irows_mul(g, m);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      Int s = 0;
      for (size_t t = 0; t < n; ++t) s += m[t][i] * gm[t][j];
      if (s != g[i][j]) return false;
    }
  return true;
}

std::string irows_key(const IRows& m) {
  // Entries almost always fit a machine word; pack them raw, fall back to
  // decimal strings (prefixed so the two encodings cannot collide).
  std::string s;
  s.reserve(m.size() * m.size() * 8 + 1);
  bool fits = true;
  for (const auto& row : m)
    for (const auto& x : row) fits &= x.fits_slong_p();
  if (fits) {
    s.push_back('\1');
    for (const auto& row : m)
      for (const auto& x : row) {
        long v = x.get_si();
        s.append(reinterpret_cast<const char*>(&v), sizeof v);
      }
    return s;
  }
  s.push_back('\2');
  for (const auto& row : m)
    for (const auto& x : row) {
      s += x.get_str();
      s += ',';
    }
  return s;
}

bool ivec_eq(const IVec& a, const IVec& b) { return a == b; }

IVec ivec_neg(const IVec& a) {
  IVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

}  // namespace

HyperplaneFamily::HyperplaneFamily(LorentzSpace space, std::vector<IVec> normals)
    : space_(std::move(space)), normals_(std::move(normals)) {
  if (!integral_gram(space_.form()))
    throw std::domain_error("hyperplane family needs a rational space with integer Gram matrix");
  if (normals_.empty()) throw std::domain_error("hyperplane family needs at least e0");
  for (const auto& e : normals_) {
    if (static_cast<int>(e.size()) != space_.dim())
      throw std::domain_error("normal dimension mismatch");
    if (gcd_of(e) != 1) throw std::domain_error("family normals must be primitive integer vectors");
    if (pair(e, e) <= 0) throw std::domain_error("family normals must be spacelike");
  }
}

Int HyperplaneFamily::pair(const IVec& u, const IVec& v) const {
  return space_.pair(u, v).rational_value().get_num();
}

Int HyperplaneFamily::pair(int i, int j) const { return pair(normals_[i], normals_[j]); }

FamilyHypothesisReport check_family_hypothesis(const HyperplaneFamily& family) {
  FamilyHypothesisReport rep;
  rep.hypothesis_holds = true;
  const auto& ns = family.normals();
  for (int i = 1; i <= family.k(); ++i) {
    FamilyHypothesisReport::Entry e;
    e.index = i;
    if (ivec_eq(ns[i], ns[0]) || ivec_eq(ns[i], ivec_neg(ns[0]))) {
      e.verdict = FamilyVerdict::same_hyperplane;
    } else {
      Int p = family.pair(0, i);
      Int lhs = p * p;
      Int rhs = family.pair(0, 0) * family.pair(i, i);
      e.verdict = lhs > rhs    ? FamilyVerdict::ultraparallel
                  : lhs == rhs ? FamilyVerdict::parallel
                               : FamilyVerdict::intersecting;
    }
    rep.hypothesis_holds &= e.disjoint();
    rep.entries.push_back(e);
  }
  return rep;
}

CongruenceLevel compute_congruence_level(const HyperplaneFamily& family) {
  auto hyp = check_family_hypothesis(family);
  for (const auto& e : hyp.entries) {
    if (e.verdict == FamilyVerdict::same_hyperplane)
      throw std::domain_error("e0 = ±e" + std::to_string(e.index) +
                              ": the exclusion gamma(e0) != ±e_i is unachievable (e0 ± e_i has no nonzero entry)");
    if (!e.disjoint())
      throw std::domain_error("family hypothesis violated at index " + std::to_string(e.index) +
                              ": hyperplanes intersect");
  }
  const auto& ns = family.normals();
  Int maxp = 0;
  for (int i = 0; i <= family.k(); ++i) {
    Int p = abs(family.pair(0, i));
    if (p > maxp) maxp = p;
  }

  Int n = 2 * maxp;  // next_prime_above gives the first prime > 2*maxp
  while (true) {
    n = next_prime_above(n);
    std::vector<CongruenceLevel::DivisibilityWitness> ws;
    bool ok = true;
    for (int i = 1; i <= family.k() && ok; ++i) {
      CongruenceLevel::DivisibilityWitness w;
      w.index = i;
      w.plus_entry = w.minus_entry = -1;
      for (size_t j = 0; j < ns[0].size(); ++j) {
        Int plus = ns[0][j] + ns[static_cast<size_t>(i)][j];
        Int minus = ns[0][j] - ns[static_cast<size_t>(i)][j];
        if (w.plus_entry < 0 && plus != 0 && plus % n != 0) w.plus_entry = static_cast<int>(j);
        if (w.minus_entry < 0 && minus != 0 && minus % n != 0) w.minus_entry = static_cast<int>(j);
      }
      ok = w.plus_entry >= 0 && w.minus_entry >= 0;
      if (ok) ws.push_back(w);
    }
    if (ok) return CongruenceLevel{n, maxp, std::move(ws)};
  }
}

namespace {

// Primitive reflection vectors with integral reflection matrices, canonical
// sign, deterministic (lexicographic) order.
std::vector<IVec> reflection_vectors(const QuadraticForm& f, long h, bool parallel) {
  int n = f.dim();
  long box = 2 * h + 1;
  Int total_big = 1;
  for (int i = 0; i < n; ++i) total_big *= box;
  if (total_big > 200'000'000)
    throw std::domain_error("reflection vector box too large: " + total_big.get_str() + " candidates");
  long total = total_big.get_si();

  auto unpack = [&](long idx) {
    IVec v(static_cast<size_t>(n));
    for (int i = n - 1; i >= 0; --i) {
      v[static_cast<size_t>(i)] = Int(idx % box - h);
      idx /= box;
    }
    return v;
  };
  auto admissible = [&](const IVec& u) -> bool {
    Int g = gcd_of(u);
    if (g != 1) return false;
    // canonical sign: first nonzero entry positive
    for (const auto& x : u) {
      int s = sgn(x);
      if (s == 0) continue;
      if (s < 0) return false;
      break;
    }
    Int uu = f.evaluate(u).rational_value().get_num();
    if (uu == 0) return false;
    for (int j = 0; j < n; ++j) {
      IVec bj(static_cast<size_t>(n), Int(0));
      bj[static_cast<size_t>(j)] = 1;
      Int ub = f.pair(to_vec(u), to_vec(bj)).rational_value().get_num();
      if ((2 * ub) % uu != 0) return false;
    }
    return true;
  };

  std::vector<char> keep(static_cast<size_t>(total), 0);
  if (parallel) {
#pragma omp parallel for schedule(static) num_threads(worker_count())
    for (long idx = 0; idx < total; ++idx) keep[static_cast<size_t>(idx)] = admissible(unpack(idx));
  } else {
    for (long idx = 0; idx < total; ++idx) keep[static_cast<size_t>(idx)] = admissible(unpack(idx));
  }
  std::vector<IVec> out;
  for (long idx = 0; idx < total; ++idx)
    if (keep[static_cast<size_t>(idx)]) out.push_back(unpack(idx));
  return out;
}

}  // namespace

OrthogonalEnumeration enumerate_orthogonal_elements(const LorentzSpace& space, long vector_height,
                                                    int word_length, SearchEngine engine) {
  if (!integral_gram(space.form()))
    throw std::domain_error("element enumeration needs a rational space with integer Gram matrix");
  if (vector_height < 0 || word_length < 0) throw std::domain_error("negative enumeration bounds");
  bool parallel = engine == SearchEngine::parallel;

  OrthogonalEnumeration en;
  en.generator_vectors = reflection_vectors(space.form(), vector_height, parallel);
  std::vector<IRows> gens;
  gens.reserve(en.generator_vectors.size());
  for (const auto& u : en.generator_vectors) {
    LorentzMatrix r = reflection_in_vector(space, u);
    if (!r.integral || !r.form_preserving) throw std::logic_error("reflection generator failed its flags");
    gens.push_back(to_int_rows(r.m));
  }

  // BFS layers in integer matrix arithmetic, shortlex-deterministic.
  struct Node {
    IRows m;
    std::vector<int> word;
    std::string key;
  };
  std::vector<Node> nodes;
  std::unordered_map<std::string, size_t> seen;
  nodes.push_back(Node{irows_identity(static_cast<size_t>(space.dim())), {}, {}});
  nodes[0].key = irows_key(nodes[0].m);
  seen[nodes[0].key] = 0;

  size_t layer_begin = 0;
  for (int len = 1; len <= word_length; ++len) {
    size_t layer_end = nodes.size();
    std::vector<Node> candidates((layer_end - layer_begin) * gens.size());
    // Products and keys in parallel, deduplication as a deterministic serial
    // pass in candidate order.
    long work = static_cast<long>(candidates.size());
#pragma omp parallel for schedule(dynamic, 16) num_threads(parallel ? worker_count() : 1)
    for (long t = 0; t < work; ++t) {
      size_t e = layer_begin + static_cast<size_t>(t) / gens.size();
      size_t g = static_cast<size_t>(t) % gens.size();
      auto& c = candidates[static_cast<size_t>(t)];
      c.m = irows_mul(nodes[e].m, gens[g]);
      c.word = nodes[e].word;
      c.word.push_back(static_cast<int>(g));
      c.key = irows_key(c.m);
    }
    layer_begin = layer_end;
    for (auto& c : candidates) {
      if (seen.count(c.key)) continue;
      seen[c.key] = nodes.size();
      nodes.push_back(std::move(c));
    }
  }
  en.elements.reserve(nodes.size());
  for (auto& n : nodes) en.elements.push_back(OrthogonalElement{from_int_rows(n.m), std::move(n.word)});
  return en;
}

DichotomyReport verify_dichotomy(const HyperplaneFamily& family, const CongruenceLevel& level,
                                 const std::vector<OrthogonalElement>& elements) {
  DichotomyReport rep;
  rep.N = level.N;
  const Int& N = level.N;
  const auto& ns = family.normals();
  const QuadraticForm& f = family.space().form();
  IRows gram = to_int_rows(f.gram());

  for (size_t ei = 0; ei < elements.size(); ++ei) {
    IRows rows = [&] {
      try {
        return to_int_rows(elements[ei].m);
      } catch (const std::domain_error&) {
        throw std::domain_error("element " + std::to_string(ei) + " is not integral");
      }
    }();
    if (!irows_preserves(rows, gram))
      throw std::domain_error("element " + std::to_string(ei) + " does not preserve the form");
    bool congruent = true;
    for (size_t i = 0; i < rows.size() && congruent; ++i)
      for (size_t j = 0; j < rows.size() && congruent; ++j) {
        Int d = rows[i][j] - (i == j ? 1 : 0);
        congruent = d % N == 0;
      }
    if (!congruent) continue;
    ++rep.elements_considered;

    IVec w = int_mat_vec(rows, ns[0]);
    // Congruence step holds for any integral matrix = I mod N; recording a
    // violation would expose an arithmetic bug.
    for (int i = 0; i <= family.k(); ++i) {
      Int lhs = family.pair(w, ns[static_cast<size_t>(i)]);
      Int rhs = family.pair(0, i);
      if ((lhs - rhs) % N != 0)
        rep.counterexamples.push_back({ei, i, "congruence (gamma e0, e_i) = (e0, e_i) mod N failed"});
    }
    if (ivec_eq(w, ns[0]) || ivec_eq(w, ivec_neg(ns[0]))) {
      ++rep.fixed_branch;
      continue;
    }
    ++rep.disjoint_branch;
    for (int i = 0; i <= family.k(); ++i) {
      const IVec& e = ns[static_cast<size_t>(i)];
      Int p = family.pair(w, e);
      if (p * p < family.pair(0, 0) * family.pair(i, i))
        rep.counterexamples.push_back({ei, i, "gamma(H0) meets H" + std::to_string(i)});
      if (i >= 1 && (ivec_eq(w, e) || ivec_eq(w, ivec_neg(e))))
        rep.counterexamples.push_back({ei, i, "gamma(e0) = ±e" + std::to_string(i)});
    }
  }
  return rep;
}

}  // namespace lforms
