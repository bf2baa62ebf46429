// Exact-arithmetic toolkit for rational quadratic forms and Lorentzian
// reflection configurations: analysis, representation certificates, the
// reflection-bundle construction, congruence levels for disjoint hyperplane
// families, and Coxeter relation checking.
//
// Exit codes: 0 affirmative, 1 negative verdict, 2 invalid input,
// 3 witness not found within the search bound.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "lforms/certify.hpp"

namespace {

using lforms::cli::Options;
using lforms::cli::Outcome;
using lforms::io::Json;

struct OutputFlags {
  bool json = false;
  std::string out_path;
};

int emit(const Outcome& o, const OutputFlags& flags) {
  if (flags.json)
    std::cout << lforms::io::dump_canonical(o.certificate);
  else
    std::cout << o.human;
  if (!flags.out_path.empty()) {
    std::ofstream out(flags.out_path);
    if (!out) {
      std::cerr << "error: cannot write " << flags.out_path << "\n";
      return 2;
    }
    out << lforms::io::dump_canonical(o.certificate);
  }
  return o.exit_code;
}

Json load(const std::string& path) { return lforms::io::parse_file(path); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lforms: exact quadratic-form and hyperbolic reflection toolkit"};
  app.require_subcommand(1);
  app.fallthrough();

  OutputFlags flags;
  Options opt;
  app.add_flag("--json", flags.json, "print the certificate as canonical JSON");
  app.add_option("--out", flags.out_path, "also write the certificate to this file");
  app.add_option("--height", opt.height, "witness search bound (default 1000)");
  app.add_option("--vector-height", opt.vector_height, "reflection vector box (default 2)");
  app.add_option("--word-length", opt.word_length, "element word length (default 2)");
  app.add_option("--cap", opt.cap, "infinite-label verification cap (default 12)");
  app.add_flag("--unchecked", opt.unchecked, "run represents_form outside the rank-gap hypothesis");

  std::string file1, file2, number, flavor = "nonuniform", a_literal;
  long family_a = 1;
  int family_n = 4;

  auto* analyze = app.add_subcommand("form-analyze", "signature, determinant class, Hasse data");
  analyze->add_option("file", file1, "form JSON file")->required();

  auto* isotropic = app.add_subcommand("form-isotropic", "isotropy verdict and witness search");
  isotropic->add_option("file", file1, "form JSON file")->required();

  auto* represents = app.add_subcommand("form-represents", "representation of a number or a form");
  represents->add_option("file", file1, "form JSON file")->required();
  auto* number_opt = represents->add_option("--number", number, "rational to represent");
  auto* form_opt = represents->add_option("--form", file2, "target form JSON file");
  number_opt->excludes(form_opt);

  auto* thma = app.add_subcommand("construct-theorem-a", "reflection bundle for a form representing q3");
  thma->add_option("file", file1, "form JSON file")->required();

  auto* family = app.add_subcommand("family", "the nonuniform / compact form families");
  family->add_option("--a", family_a, "positive integer parameter")->required();
  family->add_option("--n", family_n, "dimension parameter")->required();
  family->add_option("--flavor", flavor, "nonuniform (default) or compact");

  auto* gps = app.add_subcommand("gps", "glueing form f + a x_n^2 with the arithmeticity flag");
  gps->add_option("file", file1, "base form JSON file")->required();
  gps->add_option("--a", a_literal, "totally positive element (rational or {\"a\",\"b\",\"d\"} JSON)")
      ->required();

  auto* slevel = app.add_subcommand("separability-level", "congruence level of a hyperplane family");
  slevel->add_option("file", file1, "family JSON file")->required();

  auto* sverify = app.add_subcommand("separability-verify", "empirical dichotomy verification");
  sverify->add_option("file", file1, "family JSON file")->required();

  auto* cox = app.add_subcommand("coxeter-verify", "geometric representation and relation orders");
  cox->add_option("file", file1, "Coxeter matrix or gram JSON file")->required();

  auto* verify = app.add_subcommand("verify", "re-derive all verdicts of an emitted certificate");
  verify->add_option("file", file1, "certificate JSON file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;  // command-line misuse is invalid input
  }

  try {
    Outcome o;
    if (analyze->parsed()) {
      o = lforms::cli::form_analyze(load(file1));
    } else if (isotropic->parsed()) {
      o = lforms::cli::form_isotropic(load(file1), opt);
    } else if (represents->parsed()) {
      if (!number.empty())
        o = lforms::cli::form_represents_number(load(file1), lforms::parse_rational(number), opt);
      else if (!file2.empty())
        o = lforms::cli::form_represents_form(load(file1), load(file2), opt);
      else {
        std::cerr << "error: form-represents needs --number or --form\n";
        return 2;
      }
    } else if (thma->parsed()) {
      o = lforms::cli::construct_theorem_a(load(file1), opt);
    } else if (family->parsed()) {
      o = lforms::cli::family_command(family_a, family_n, flavor);
    } else if (gps->parsed()) {
      Json a_json;
      try {
        a_json = lforms::io::parse_text(a_literal, "--a");
      } catch (const lforms::io::ParseError&) {
        a_json = a_literal;  // bare rational like 1/2
      }
      o = lforms::cli::gps_command(load(file1), a_json);
    } else if (slevel->parsed()) {
      o = lforms::cli::separability_level(load(file1));
    } else if (sverify->parsed()) {
      o = lforms::cli::separability_verify(load(file1), opt);
    } else if (cox->parsed()) {
      o = lforms::cli::coxeter_verify(load(file1), opt);
    } else if (verify->parsed()) {
      o = lforms::cli::verify_certificate(load(file1));
    } else {
      std::cerr << "error: no subcommand\n";
      return 2;
    }
    return emit(o, flags);
  } catch (const lforms::io::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
