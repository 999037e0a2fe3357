#pragma once

#include <string>
#include <vector>

#include "tdesc/report.hpp"

namespace tdesc {

// Exhaustive degree-bounded verification suites. Each returns one PASS/FAIL
// line per checked property, with the first counterexample when one exists.
// All checks are exact; tolerances do not appear anywhere.
Report verify_bijection(int n_max, int workers = 1);
Report verify_counts(int n_max, int workers = 1);
Report verify_hopf(int n_max, int workers = 1);
Report verify_twisted(int n_max, int workers = 1);
Report verify_freeness(int n_max, int workers = 1);
Report verify_generators(int n_max, int workers = 1);
Report verify_embeddings(int n_max, int workers = 1);

// every suite at its default (acceptance-grade) bound
Report verify_all(int workers = 1);

const std::vector<std::string>& verify_suite_names();

// n_max < 0 picks the suite's default bound; unknown names throw
Report run_verify_suite(const std::string& name, int n_max, int workers = 1);

} // namespace tdesc
