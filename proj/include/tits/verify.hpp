#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace tits {

struct SuiteResult {
  std::string name;
  bool passed = true;
  std::vector<std::string> details;  // failures first, then notes
  double seconds = 0;
};

/// enumerate() against closed_form() for every type and Gamma up to conjugacy.
SuiteResult suite_catalog_equivalence();
SuiteResult suite_cartan_identities();
/// Exceptional exclusions with their trace wording.
SuiteResult suite_exclusions();
/// Condition strings against the golden files in `golden_dir`.
SuiteResult suite_goldens(const std::string& golden_dir);
SuiteResult suite_labels();
SuiteResult suite_classical_refinement();
SuiteResult suite_candim(const std::string& data_dir);
SuiteResult suite_properties(std::uint64_t seed, int random_triples);

std::string format_result(int number, const SuiteResult& r);

}  // namespace tits
