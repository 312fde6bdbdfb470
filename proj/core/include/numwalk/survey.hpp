#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "numwalk/rational.hpp"

namespace numwalk {

/// Every reduced p/q with 1 <= q <= max_q, ordered by q ascending then p
/// ascending. q = 1 contributes only 0/1.
std::vector<Rational> survey_range(std::int64_t max_q);

struct SurveyOptions {
  int base = 2;
  int turn_sign = 1;
  std::int64_t max_q = 50;
  int jobs = 1;       // worker threads; output is byte-identical for any value
  bool jsonl = false; // CSV by default
};

/// Classifies the whole range and renders one record per value plus an
/// aggregate footer (counts per kind and per closing multiplier k). Workers
/// fill fixed slots, so the output does not depend on thread scheduling.
std::string survey(const SurveyOptions& opt);

}  // namespace numwalk
