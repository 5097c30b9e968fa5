#include <cstdio>

#include "askzeta/verify.hpp"

int main() {
  auto results = askzeta::run_acceptance_suite();
  bool all = true;
  for (const auto& r : results) {
    std::printf("%s %2d %s%s%s%s\n", r.passed ? "PASS" : "FAIL", r.id,
                r.name.c_str(), r.detail.empty() ? "" : " (",
                r.detail.c_str(), r.detail.empty() ? "" : ")");
    all = all && r.passed;
  }
  return all ? 0 : 1;
}
