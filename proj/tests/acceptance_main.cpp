// Acceptance harness: runs the named verification suites (or all) and
// prints one pass/fail line per criterion. Exit code 0 iff all pass.

#include <cstdio>
#include <string>
#include <vector>

#include "og4/verify.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> suites;
  for (int i = 1; i < argc; ++i) suites.emplace_back(argv[i]);
  if (suites.empty()) suites = og4::verify_suite_names();

  for (const auto& name : suites) {
    if (!og4::is_verify_suite(name)) {
      std::fprintf(stderr, "unknown suite: %s\n", name.c_str());
      return 2;
    }
  }

  bool all_pass = true;
  for (const auto& name : suites) {
    const og4::CriterionResult r = og4::run_verify_suite(name);
    all_pass = all_pass && r.pass;
    std::printf("[%s] %-18s (%.0f ms)%s%s\n", r.pass ? "PASS" : "FAIL", r.name.c_str(), r.ms,
                r.detail.empty() ? "" : "  ", r.detail.c_str());
    std::fflush(stdout);
  }
  return all_pass ? 0 : 1;
}
