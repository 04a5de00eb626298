#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cy8 {

enum class CheckStatus { Pass, Fail, Info };

std::string status_name(CheckStatus s);

// One row of a verification run. Failures always carry both values and a
// command line that reproduces them.
struct CheckRow {
    std::string check;
    CheckStatus status = CheckStatus::Info;
    std::string expected;
    std::string computed;
    std::string expectation_source;  // "reference-table", "oracle" or "definition"
    std::string repro;
};

class VerificationReport {
  public:
    void add(CheckRow row);
    const std::vector<CheckRow>& rows() const { return rows_; }
    bool all_passed() const;
    std::size_t fail_count() const;

    void write_text(std::ostream& os) const;
    void write_csv(std::ostream& os) const;
    void write_json(std::ostream& os) const;

  private:
    std::vector<CheckRow> rows_;
};

// minimal CSV table writer: header + rows, no quoting (payloads are numeric
// or simple identifiers)
class CsvTable {
  public:
    explicit CsvTable(std::vector<std::string> header) : header_(std::move(header)) {}
    void add_row(std::vector<std::string> row);
    void write(std::ostream& os) const;
    std::string str() const;
    std::string json() const;  // array of objects keyed by the header

  private:
    std::vector<std::string> header_;
    std::vector<std::vector<std::string>> rows_;
};

}  // namespace cy8
