// Golden-file test of the command-line binary: runs every subcommand on the
// committed input corpus, compares stdout bytes against the golden
// certificates, feeds every emitted certificate back through `lforms verify`,
// and exercises the exit-code contract on a malformed corpus.
//
// LFORMS_WRITE_GOLDEN=1 regenerates the golden files.

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace {

int g_failures = 0;

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& cmdline) {
  RunResult r;
  FILE* p = popen((cmdline + " 2>/dev/null").c_str(), "r");
  if (!p) return r;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  int status = pclose(p);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void expect(bool cond, const std::string& what) {
  if (!cond) {
    ++g_failures;
    std::printf("[FAIL] %s\n", what.c_str());
  } else {
    std::printf("[pass] %s\n", what.c_str());
  }
}

const std::string kCli = LFORMS_CLI_PATH;
const std::string kData = LFORMS_TEST_DATA_DIR;
const std::string kGolden = std::string(LFORMS_GOLDEN_DIR) + "/cli";

void golden_case(const std::string& name, const std::string& args, int want_exit) {
  RunResult r = run(kCli + " " + args + " --json");
  std::string golden_path = kGolden + "/" + name + ".json";
  if (std::getenv("LFORMS_WRITE_GOLDEN")) {
    std::ofstream out(golden_path);
    out << r.out;
  }
  expect(r.exit_code == want_exit,
         name + ": exit " + std::to_string(r.exit_code) + " (want " + std::to_string(want_exit) + ")");
  expect(r.out == read_file(golden_path), name + ": stdout matches golden bytes");

  // every emitted certificate self-verifies
  std::string tmp = "/tmp/lforms_cert_" + name + ".json";
  {
    std::ofstream out(tmp);
    out << r.out;
  }
  RunResult v = run(kCli + " verify " + tmp);
  expect(v.exit_code == 0, name + ": certificate self-verification");
}

}  // namespace

int main() {
  // round-trip canonical input files byte-for-byte through form-analyze echo
  golden_case("analyze_q4", "form-analyze " + kData + "/q4.json", 0);
  golden_case("analyze_cox120_gram", "form-analyze " + kData + "/eq3.json", 0);
  golden_case("isotropic_q4", "form-isotropic " + kData + "/q4.json", 0);
  golden_case("isotropic_posdef", "form-isotropic " + kData + "/posdef3.json", 1);
  golden_case("isotropic_bounded", "form-isotropic " + kData + "/deep_witness.json --height 3", 3);
  golden_case("repr_number_pos", "form-represents " + kData + "/q3.json --number 1", 0);
  golden_case("repr_number_neg", "form-represents " + kData + "/posdef2.json --number 3", 1);
  golden_case("repr_form_q8_q3", "form-represents " + kData + "/q8.json --form " + kData + "/q3.json", 0);
  golden_case("repr_form_sig_neg", "form-represents " + kData + "/posdef3.json --form " + kData +
                                       "/q3.json",
              1);
  golden_case("repr_form_block", "form-represents " + kData + "/f7.json --form " + kData + "/q3.json", 0);
  golden_case("repr_form_unchecked", "form-represents " + kData + "/f7_scrambled.json --form " + kData +
                                         "/q3.json --unchecked",
              0);
  golden_case("thma_q4", "construct-theorem-a " + kData + "/q4.json", 0);
  golden_case("thma_f7", "construct-theorem-a " + kData + "/f7.json", 0);
  golden_case("family_7_4", "family --a 7 --n 4", 0);
  golden_case("family_compact", "family --a 2 --n 5 --flavor compact", 0);
  golden_case("gps_q3_2", "gps " + kData + "/q3.json --a 2", 0);
  golden_case("gps_q3_4", "gps " + kData + "/q3.json --a 4", 0);
  golden_case("gps_eq3_5", "gps " + kData + "/eq3.json --a 5", 0);
  golden_case("seplevel_thma", "separability-level " + kData + "/family_thma_q4.json", 0);
  golden_case("sepverify_thma", "separability-verify " + kData + "/family_thma_q4.json", 0);
  golden_case("seplevel_crossing", "separability-level " + kData + "/family_crossing.json", 1);
  golden_case("coxeter_120cell", "coxeter-verify " + kData + "/cox533_5.json", 0);
  golden_case("coxeter_infinite", "coxeter-verify " + kData + "/cox_infinite.json", 0);

  // exit-code contract on malformed inputs: always 2, no certificate
  for (const std::string bad : {"malformed_syntax", "malformed_asym", "malformed_field",
                                "malformed_zeroden", "malformed_ragged"}) {
    RunResult r = run(kCli + " form-analyze " + kData + "/" + bad + ".json --json");
    expect(r.exit_code == 2, bad + ": exit 2");
    expect(r.out.empty(), bad + ": no certificate on stdout");
  }
  {
    RunResult r = run(kCli + " form-represents " + kData + "/q4.json --json");
    expect(r.exit_code == 2, "missing represents target: exit 2");
  }
  {
    // rank-gap precondition without --unchecked is an input rejection (the
    // scrambled form has no block structure to split by inspection)
    RunResult r = run(kCli + " form-represents " + kData + "/f7_scrambled.json --form " + kData +
                      "/q3.json --json");
    expect(r.exit_code == 2, "rank gap without --unchecked: exit 2");
  }
  {
    RunResult r = run(kCli + " gps " + kData + "/q3.json --a=-2 --json");
    expect(r.exit_code == 2, "gps with negative a: exit 2");
  }

  if (g_failures) {
    std::printf("%d golden check(s) failed\n", g_failures);
    return 1;
  }
  std::printf("all golden checks passed\n");
  return 0;
}
