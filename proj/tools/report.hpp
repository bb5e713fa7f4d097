#ifndef DNK_TOOLS_REPORT_HPP
#define DNK_TOOLS_REPORT_HPP

#include "dnk/dirac/frame.hpp"

#include <optional>
#include <string>
#include <vector>

namespace dnk::cli {

inline constexpr const char* kReportFormat = "dnk-report 1";
inline constexpr const char* kToolVersion = "1.0.0";

// A printed expression together with what it prints, so tests can re-parse it.
struct Expr {
    Scalar value;
    std::vector<std::string> variables;
    bool complex = false;
    std::string text;

    static Expr of(const Scalar& s, const Chart& c);
};

struct Entry {
    std::string key;
    std::string text;
    std::optional<Expr> expr;
};

struct WitnessEntry {
    std::string label;
    Expr value;
};

struct Record {
    std::string request;
    std::string check;
    Verdict verdict = Verdict::pass;
    std::string note;
    std::vector<WitnessEntry> witnesses;
    double elapsed_ms = 0;
};

struct Report {
    std::string command;
    std::string scene_name;
    std::string scene_digest;
    std::optional<unsigned> samples;
    std::optional<unsigned long long> seed;
    std::vector<Entry> data;
    std::vector<Record> records;
    bool timing = false;
    double elapsed_ms = 0;

    void add(const std::string& key, const std::string& text) { data.push_back({key, text, std::nullopt}); }
    void add(const std::string& key, const Scalar& s, const Chart& c);
    // Appends a record built from a library check result.
    Record& add_record(const std::string& request, const CheckResult& r);

    int count(Verdict v) const;
    Verdict status() const;
    // 0 all pass, 1 any fail, 2 inconclusive and no fail.
    int exit_code() const;

    std::string to_text() const;
    std::string to_json() const;
};

}  // namespace dnk::cli

#endif
