#pragma once

#include <string>
#include <vector>

namespace bmw {

struct CriterionResult {
  int number = 0;
  std::string title;
  bool passed = false;
  std::string detail;  // what was checked, or the first discrepancy
  double seconds = 0;
};

CriterionResult check_known_reducible();       // 1
CriterionResult check_small_degrees();         // 2
CriterionResult check_gap_search(const std::vector<unsigned>& thread_counts);  // 3
CriterionResult check_wreath_bound();          // 4
CriterionResult check_thompson();              // 5
CriterionResult check_small_probes();         // 6
CriterionResult check_quotient_kernel();       // 7
CriterionResult check_tables();                // 8
CriterionResult check_properties();            // 9

// All nine in order; the exhaustive search (3) only when `full` is set.
std::vector<CriterionResult> run_acceptance(bool full, const std::vector<unsigned>& thread_counts = {1, 4, 8});

std::string format_result(const CriterionResult& r);  // "PASS [1] ..." or "FAIL [1] ..."

}  // namespace bmw
