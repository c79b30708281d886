#ifndef ABELCY_REPORT_HPP
#define ABELCY_REPORT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace abelcy {

struct Config {
    uint64_t prime = 0;  // 0 = default experiment prime
    uint64_t seed = 1;
    int retry_budget = 5;
    size_t pair_budget = 4000000;
    size_t minor_budget = 400;
    bool force = false;  // run stretch claims (full 1_7 singular scheme, W node counts)
    std::string cache_dir;  // empty = no cache
    bool timing = true;     // false zeroes the millis fields for byte-stable output
};

enum class ClaimStatus { pass, fail, skipped, budget_exceeded };

std::string to_string(ClaimStatus s);

struct ClaimRecord {
    std::string id;
    std::string paper_ref;
    std::string expected;
    std::string computed;
    ClaimStatus status = ClaimStatus::skipped;
    bool negative_control = false;  // claim is expected to FAIL
    int attempts = 1;
    std::string attempt_log;
    int64_t millis = 0;
};

struct ExperimentReport {
    std::string case_tag;
    uint64_t prime = 0;
    uint64_t seed = 0;
    std::vector<ClaimRecord> claims;

    // pass: every regular claim passes and every negative control fails
    bool ok() const;
};

std::string report_to_json(const std::vector<ExperimentReport>& reports);
std::vector<ExperimentReport> report_from_json(const std::string& text);
std::string report_to_text(const std::vector<ExperimentReport>& reports);

void write_file(const std::string& path, const std::string& content);

}  // namespace abelcy

#endif
