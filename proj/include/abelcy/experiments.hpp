#ifndef ABELCY_EXPERIMENTS_HPP
#define ABELCY_EXPERIMENTS_HPP

#include <string>
#include <vector>

#include "abelcy/report.hpp"

namespace abelcy {

// The nine symbolic identities, checked exactly over Q, plus a perturbed
// negative control.
ExperimentReport identity_suite(const Config& cfg = Config{});

// Per-polarization verification procedure; tag in {1_4,1_5,1_6,1_7,1_8,1_10}.
ExperimentReport run_case(const std::string& tag, const Config& cfg);

const std::vector<std::string>& case_tags();

// compiled-in claim registry: id -> paper reference
const std::vector<std::pair<std::string, std::string>>& claim_registry();
std::string paper_ref_of(const std::string& claim_id);

}  // namespace abelcy

#endif
