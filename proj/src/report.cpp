#include "abelcy/report.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "abelcy/errors.hpp"

namespace abelcy {

using json = nlohmann::ordered_json;

std::string to_string(ClaimStatus s) {
    switch (s) {
        case ClaimStatus::pass:
            return "pass";
        case ClaimStatus::fail:
            return "fail";
        case ClaimStatus::skipped:
            return "skipped";
        case ClaimStatus::budget_exceeded:
            return "budget-exceeded";
    }
    return "?";
}

static ClaimStatus status_from(const std::string& s) {
    if (s == "pass") return ClaimStatus::pass;
    if (s == "fail") return ClaimStatus::fail;
    if (s == "skipped") return ClaimStatus::skipped;
    if (s == "budget-exceeded") return ClaimStatus::budget_exceeded;
    throw IoError("unknown claim status '" + s + "'");
}

bool ExperimentReport::ok() const {
    for (const auto& c : claims) {
        if (c.negative_control) {
            if (c.status != ClaimStatus::fail) return false;
        } else if (c.status == ClaimStatus::fail) {
            // skipped / budget-exceeded are honest non-results, not failures
            return false;
        }
    }
    return true;
}

std::string report_to_json(const std::vector<ExperimentReport>& reports) {
    json root = json::array();
    for (const auto& r : reports) {
        json jr;
        jr["case"] = r.case_tag;
        jr["prime"] = r.prime;
        jr["seed"] = r.seed;
        jr["claims"] = json::array();
        for (const auto& c : r.claims) {
            json jc;
            jc["id"] = c.id;
            jc["paper_ref"] = c.paper_ref;
            jc["expected"] = c.expected;
            jc["computed"] = c.computed;
            jc["status"] = to_string(c.status);
            if (c.negative_control) jc["negative_control"] = true;
            jc["attempts"] = c.attempts;
            if (!c.attempt_log.empty()) jc["attempt_log"] = c.attempt_log;
            jc["millis"] = c.millis;
            jr["claims"].push_back(std::move(jc));
        }
        root.push_back(std::move(jr));
    }
    return root.dump(2) + "\n";
}

std::vector<ExperimentReport> report_from_json(const std::string& text) {
    json root = json::parse(text);
    std::vector<ExperimentReport> out;
    for (const auto& jr : root) {
        ExperimentReport r;
        r.case_tag = jr.at("case").get<std::string>();
        r.prime = jr.at("prime").get<uint64_t>();
        r.seed = jr.at("seed").get<uint64_t>();
        for (const auto& jc : jr.at("claims")) {
            ClaimRecord c;
            c.id = jc.at("id").get<std::string>();
            c.paper_ref = jc.at("paper_ref").get<std::string>();
            c.expected = jc.at("expected").get<std::string>();
            c.computed = jc.at("computed").get<std::string>();
            c.status = status_from(jc.at("status").get<std::string>());
            c.negative_control = jc.value("negative_control", false);
            c.attempts = jc.value("attempts", 1);
            c.attempt_log = jc.value("attempt_log", std::string());
            c.millis = jc.value("millis", (int64_t)0);
            r.claims.push_back(std::move(c));
        }
        out.push_back(std::move(r));
    }
    return out;
}

std::string report_to_text(const std::vector<ExperimentReport>& reports) {
    std::ostringstream os;
    for (const auto& r : reports) {
        os << "case " << r.case_tag << "  (p=" << r.prime << ", seed=" << r.seed << ")  "
           << (r.ok() ? "OK" : "FAILED") << "\n";
        for (const auto& c : r.claims) {
            os << "  [" << to_string(c.status) << (c.negative_control ? ", negative" : "") << "] "
               << c.id << ": expected " << c.expected << ", computed " << c.computed;
            if (c.attempts > 1) os << "  (attempts " << c.attempts << ")";
            os << "\n";
        }
    }
    return os.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open " + path);
    out << content;
    if (!out) throw IoError("write failed for " + path);
}

}  // namespace abelcy
