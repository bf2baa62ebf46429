#pragma once

#include "lforms/constructions.hpp"
#include "lforms/io.hpp"

namespace lforms::cli {

inline constexpr const char* kToolName = "lforms";
inline constexpr const char* kToolVersion = "1.0.0";

struct Options {
  long height = 1000;      // witness search bound
  long vector_height = 2;  // reflection vector box
  int word_length = 2;     // element enumeration depth
  int cap = 12;            // infinite-label verification cap
  bool unchecked = false;  // represents_form outside the rank-gap hypothesis
};

// Exit contract: 0 affirmative, 1 negative verdict, 2 invalid input (no
// certificate), 3 not-found-within-bound.
struct Outcome {
  int exit_code = 0;
  io::Json certificate;
  std::string human;
};

Outcome form_analyze(const io::Json& form);
Outcome form_isotropic(const io::Json& form, const Options& opt);
Outcome form_represents_number(const io::Json& form, const Rational& b, const Options& opt);
Outcome form_represents_form(const io::Json& form, const io::Json& g, const Options& opt);
Outcome construct_theorem_a(const io::Json& form, const Options& opt);
Outcome family_command(long a, int n, const std::string& flavor);
Outcome gps_command(const io::Json& base, const io::Json& a_elem);
Outcome separability_level(const io::Json& family);
Outcome separability_verify(const io::Json& family, const Options& opt);
Outcome coxeter_verify(const io::Json& input, const Options& opt);

// Re-derives every check and verdict of a previously emitted certificate
// from its embedded inputs and witnesses (no searches are re-run; witness
// identities are).
Outcome verify_certificate(const io::Json& certificate);

}  // namespace lforms::cli
