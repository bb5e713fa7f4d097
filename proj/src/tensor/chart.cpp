#include "dnk/tensor/chart.hpp"

#include <set>

namespace dnk {

Chart::Chart(std::string name, std::vector<std::string> variables, Mode mode) {
    if (variables.empty()) throw std::invalid_argument("chart needs at least one variable");
    if (static_cast<int>(variables.size()) > kMaxVars)
        throw std::invalid_argument("chart has more than " + std::to_string(kMaxVars) + " variables");
    std::set<std::string> seen;
    for (const auto& v : variables) {
        if (!seen.insert(v).second) throw std::invalid_argument("duplicate chart variable '" + v + "'");
        if (mode == Mode::complex && v == "i")
            throw std::invalid_argument("'i' is reserved for the imaginary unit in complex mode");
    }
    data_ = std::make_shared<const Data>(Data{std::move(name), std::move(variables), mode});
}

int Chart::index_of(const std::string& variable) const {
    for (int k = 0; k < dim(); ++k)
        if (data_->variables[k] == variable) return k;
    return -1;
}

Scalar Chart::parse(const std::string& text, const std::map<std::string, Scalar>* symbols) const {
    ParseContext ctx{variables(), mode() == Mode::complex, symbols};
    return parse_scalar(text, ctx);
}

Chart Chart::doubled(const std::string& prefix) const {
    std::vector<std::string> vars = variables();
    for (const auto& v : variables()) vars.push_back(prefix + "_" + v);
    return Chart(name() + "_" + prefix, vars, mode());
}

Chart Chart::restricted(const std::string& name, const std::vector<int>& keep) const {
    std::vector<std::string> vars;
    for (int k : keep) vars.push_back(variables().at(k));
    return Chart(name, vars, mode());
}

std::vector<int> Chart::embedding_into(const Chart& target) const {
    std::vector<int> map;
    for (const auto& v : variables()) {
        int k = target.index_of(v);
        if (k < 0) throw ChartMismatch("variable '" + v + "' missing from chart " + target.name());
        map.push_back(k);
    }
    return map;
}

bool operator==(const Chart& a, const Chart& b) {
    if (a.data_ == b.data_) return true;
    if (!a.data_ || !b.data_) return false;
    return a.data_->name == b.data_->name && a.data_->variables == b.data_->variables &&
           a.data_->mode == b.data_->mode;
}

void require_same_chart(const Chart& a, const Chart& b, const char* where) {
    if (a != b) throw ChartMismatch(std::string(where) + ": chart mismatch");
}

}  // namespace dnk
