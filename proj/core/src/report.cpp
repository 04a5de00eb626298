#include "cy8/report.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace cy8 {

std::string status_name(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "PASS";
        case CheckStatus::Fail: return "FAIL";
        case CheckStatus::Info: return "INFO";
    }
    return "?";
}

void VerificationReport::add(CheckRow row) {
    if (row.status == CheckStatus::Fail && row.repro.empty())
        throw std::logic_error("VerificationReport: FAIL row without a reproduction command");
    rows_.push_back(std::move(row));
}

bool VerificationReport::all_passed() const {
    for (const auto& r : rows_)
        if (r.status == CheckStatus::Fail) return false;
    return true;
}

std::size_t VerificationReport::fail_count() const {
    std::size_t n = 0;
    for (const auto& r : rows_) n += r.status == CheckStatus::Fail ? 1 : 0;
    return n;
}

void VerificationReport::write_text(std::ostream& os) const {
    for (const auto& r : rows_) {
        os << status_name(r.status) << "  " << r.check;
        if (!r.computed.empty()) os << "  computed=" << r.computed;
        if (!r.expected.empty()) os << "  expected=" << r.expected;
        if (r.status == CheckStatus::Fail) os << "  repro: " << r.repro;
        os << "\n";
    }
}

void VerificationReport::write_csv(std::ostream& os) const {
    os << "check,status,expected,computed,source,repro\n";
    for (const auto& r : rows_)
        os << r.check << "," << status_name(r.status) << "," << r.expected << "," << r.computed << ","
           << r.expectation_source << "," << r.repro << "\n";
}

void VerificationReport::write_json(std::ostream& os) const {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& r : rows_)
        j.push_back({{"check", r.check},
                     {"status", status_name(r.status)},
                     {"expected", r.expected},
                     {"computed", r.computed},
                     {"source", r.expectation_source},
                     {"repro", r.repro}});
    os << j.dump(2) << "\n";
}

void CsvTable::add_row(std::vector<std::string> row) {
    if (row.size() != header_.size()) throw std::invalid_argument("CsvTable: row arity mismatch");
    rows_.push_back(std::move(row));
}

void CsvTable::write(std::ostream& os) const {
    for (std::size_t i = 0; i < header_.size(); ++i) os << (i ? "," : "") << header_[i];
    os << "\n";
    for (const auto& r : rows_) {
        for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << r[i];
        os << "\n";
    }
}

std::string CsvTable::str() const {
    std::ostringstream os;
    write(os);
    return os.str();
}

std::string CsvTable::json() const {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& r : rows_) {
        nlohmann::json o;
        for (std::size_t i = 0; i < header_.size(); ++i) o[header_[i]] = r[i];
        j.push_back(o);
    }
    return j.dump(2);
}

}  // namespace cy8
