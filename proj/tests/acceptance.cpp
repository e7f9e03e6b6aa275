// One line per acceptance criterion; the exit status is nonzero if any fails.
#include <iostream>

#include "tits/candim.hpp"
#include "tits/verify.hpp"

int main() {
  using namespace tits;
  const std::string data = data_dir();
  const std::vector<SuiteResult> results = {
      suite_catalog_equivalence(),
      suite_cartan_identities(),
      suite_exclusions(),
      suite_goldens(data + "/goldens"),
      suite_labels(),
      suite_classical_refinement(),
      suite_candim(data),
      suite_properties(20240917, 1000),
  };
  // runtime bounds: catalog comparison within a minute, everything within five
  std::vector<SuiteResult> checked = results;
  if (checked[0].seconds > 60) {
    checked[0].passed = false;
    checked[0].details.insert(checked[0].details.begin(), "FAIL runtime above 60 s");
  }
  double total = 0;
  for (const auto& r : results) total += r.seconds;
  if (total > 300) {
    checked[7].passed = false;
    checked[7].details.insert(checked[7].details.begin(), "FAIL total runtime above 300 s");
  }
  int failed = 0;
  for (std::size_t i = 0; i < checked.size(); ++i) {
    std::cout << format_result(static_cast<int>(i) + 1, checked[i]) << "\n";
    for (const auto& d : checked[i].details) std::cout << "    " << d << "\n";
    failed += checked[i].passed ? 0 : 1;
  }
  std::cout << (results.size() - static_cast<std::size_t>(failed)) << "/" << results.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
