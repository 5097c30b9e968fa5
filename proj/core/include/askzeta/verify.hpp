#ifndef ASKZETA_VERIFY_HPP
#define ASKZETA_VERIFY_HPP

#include <string>
#include <vector>

namespace askzeta {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Runs the full acceptance checklist; one result per criterion.
/// jobs <= 0 picks a worker count automatically.
std::vector<CriterionResult> run_acceptance_suite(int jobs = 0);

}  // namespace askzeta

#endif
