#ifndef ABELCY_EXPERIMENTS_DETAIL_HPP
#define ABELCY_EXPERIMENTS_DETAIL_HPP

#include <chrono>
#include <functional>

#include "abelcy/errors.hpp"
#include "abelcy/experiments.hpp"

namespace abelcy {

// records one claim: runs fn, compares its result against `expected`
struct Recorder {
    ExperimentReport& rep;
    const Config& cfg;

    ClaimRecord& claim(const std::string& id, const std::string& expected,
                       const std::function<std::string()>& fn, bool negative = false) {
        ClaimRecord c;
        c.id = id;
        c.paper_ref = paper_ref_of(id);
        c.expected = expected;
        c.negative_control = negative;
        auto t0 = std::chrono::steady_clock::now();
        try {
            c.computed = fn();
            c.status = (c.computed == expected) ? ClaimStatus::pass : ClaimStatus::fail;
        } catch (const ResourceBudgetExceeded& e) {
            c.computed = e.what();
            c.status = ClaimStatus::budget_exceeded;
        } catch (const std::exception& e) {
            c.computed = std::string("error: ") + e.what();
            c.status = ClaimStatus::fail;
        }
        auto t1 = std::chrono::steady_clock::now();
        c.millis = cfg.timing
                       ? std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count()
                       : 0;
        rep.claims.push_back(std::move(c));
        return rep.claims.back();
    }

    ClaimRecord& claim_bool(const std::string& id, bool expected,
                            const std::function<bool()>& fn, bool negative = false) {
        return claim(
            id, expected ? "true" : "false",
            [&]() -> std::string { return fn() ? "true" : "false"; }, negative);
    }

    void skip(const std::string& id, const std::string& expected, const std::string& why) {
        ClaimRecord c;
        c.id = id;
        c.paper_ref = paper_ref_of(id);
        c.expected = expected;
        c.computed = why;
        c.status = ClaimStatus::skipped;
        rep.claims.push_back(std::move(c));
    }
};

}  // namespace abelcy

#endif
