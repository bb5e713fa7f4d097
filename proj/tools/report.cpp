#include "report.hpp"

#include "json.hpp"

#include <cstdio>
#include <sstream>

namespace dnk::cli {

Expr Expr::of(const Scalar& s, const Chart& c) {
    return {s, c.variables(), c.mode() == Mode::complex, c.print(s)};
}

void Report::add(const std::string& key, const Scalar& s, const Chart& c) {
    Expr e = Expr::of(s, c);
    data.push_back({key, e.text, e});
}

Record& Report::add_record(const std::string& request, const CheckResult& r) {
    Record rec;
    rec.request = request;
    rec.check = r.name;
    rec.verdict = r.verdict;
    rec.note = r.note;
    for (const auto& w : r.witnesses) {
        rec.witnesses.push_back({w.label, {w.value, w.chart.variables(), w.chart.mode() == Mode::complex, w.text}});
    }
    records.push_back(std::move(rec));
    return records.back();
}

int Report::count(Verdict v) const {
    int n = 0;
    for (const auto& r : records) n += r.verdict == v;
    return n;
}

Verdict Report::status() const {
    Verdict v = Verdict::pass;
    for (const auto& r : records) v = combine(v, r.verdict);
    return v;
}

int Report::exit_code() const {
    switch (status()) {
        case Verdict::pass: return 0;
        case Verdict::fail: return 1;
        case Verdict::inconclusive: return 2;
    }
    return 3;
}

namespace {

std::string ms(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

// Values are single-line; embedded newlines would break the key-value layout.
std::string one_line(std::string s) {
    for (auto& c : s)
        if (c == '\n' || c == '\r') c = ' ';
    return s;
}

}  // namespace

std::string Report::to_text() const {
    std::ostringstream out;
    auto kv = [&](const std::string& k, const std::string& v) { out << k << " = " << one_line(v) << "\n"; };
    kv("report.format", kReportFormat);
    kv("tool.version", kToolVersion);
    kv("command", command);
    if (!scene_name.empty()) {
        kv("scene.name", scene_name);
        kv("scene.digest", "fnv1a64:" + scene_digest);
    }
    if (samples) kv("samples", std::to_string(*samples));
    if (seed) kv("seed", std::to_string(*seed));
    for (const auto& e : data) kv("data." + e.key, e.text);
    for (std::size_t k = 0; k < records.size(); ++k) {
        const Record& r = records[k];
        const std::string p = "record." + std::to_string(k + 1) + ".";
        kv(p + "request", r.request);
        kv(p + "check", r.check);
        kv(p + "verdict", verdict_name(r.verdict));
        if (!r.note.empty()) kv(p + "note", r.note);
        for (std::size_t j = 0; j < r.witnesses.size(); ++j) {
            const std::string w = p + "witness." + std::to_string(j + 1) + ".";
            kv(w + "label", r.witnesses[j].label);
            kv(w + "value", r.witnesses[j].value.text);
        }
        if (timing) kv(p + "elapsed_ms", ms(r.elapsed_ms));
    }
    kv("summary.records", std::to_string(records.size()));
    kv("summary.pass", std::to_string(count(Verdict::pass)));
    kv("summary.fail", std::to_string(count(Verdict::fail)));
    kv("summary.inconclusive", std::to_string(count(Verdict::inconclusive)));
    kv("status", verdict_name(status()));
    if (timing) kv("elapsed_ms", ms(elapsed_ms));
    return out.str();
}

std::string Report::to_json() const {
    using nlohmann::ordered_json;
    ordered_json j;
    j["format"] = kReportFormat;
    j["tool"] = {{"version", kToolVersion}};
    j["command"] = command;
    if (!scene_name.empty()) j["scene"] = {{"name", scene_name}, {"digest", "fnv1a64:" + scene_digest}};
    if (samples) j["samples"] = *samples;
    if (seed) j["seed"] = *seed;
    ordered_json data_json = ordered_json::array();
    for (const auto& e : data) data_json.push_back({{"key", e.key}, {"value", e.text}});
    j["data"] = data_json;
    ordered_json recs = ordered_json::array();
    for (const auto& r : records) {
        ordered_json rj;
        rj["request"] = r.request;
        rj["check"] = r.check;
        rj["verdict"] = verdict_name(r.verdict);
        if (!r.note.empty()) rj["note"] = r.note;
        ordered_json ws = ordered_json::array();
        for (const auto& w : r.witnesses) ws.push_back({{"label", w.label}, {"value", w.value.text}});
        rj["witnesses"] = ws;
        if (timing) rj["elapsed_ms"] = r.elapsed_ms;
        recs.push_back(rj);
    }
    j["records"] = recs;
    j["summary"] = {{"records", records.size()},
                    {"pass", count(Verdict::pass)},
                    {"fail", count(Verdict::fail)},
                    {"inconclusive", count(Verdict::inconclusive)}};
    j["status"] = verdict_name(status());
    if (timing) j["elapsed_ms"] = elapsed_ms;
    return j.dump(2) + "\n";
}

}  // namespace dnk::cli
