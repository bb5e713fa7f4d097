#ifndef DNK_TENSOR_CHART_HPP
#define DNK_TENSOR_CHART_HPP

#include "dnk/symbolic/parser.hpp"

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace dnk {

enum class Mode { real, complex };

struct ChartMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A single coordinate chart. Cheap to copy; equality compares contents.
class Chart {
public:
    Chart() = default;
    Chart(std::string name, std::vector<std::string> variables, Mode mode = Mode::real);

    const std::string& name() const { return data_->name; }
    int dim() const { return static_cast<int>(data_->variables.size()); }
    const std::vector<std::string>& variables() const { return data_->variables; }
    Mode mode() const { return data_->mode; }
    int index_of(const std::string& variable) const;  // -1 when absent

    Scalar zero() const { return Scalar(dim()); }
    Scalar one() const { return Scalar(dim(), Coeff(1)); }
    Scalar constant(const Coeff& c) const { return Scalar(dim(), c); }
    Scalar var(int k) const { return Scalar::variable(dim(), k); }
    Scalar parse(const std::string& text, const std::map<std::string, Scalar>* symbols = nullptr) const;
    std::string print(const Scalar& s) const { return print_scalar(s, variables()); }

    // Chart with the variables of this chart followed by prefix_<name> copies.
    Chart doubled(const std::string& prefix) const;
    // Chart on the variables listed, in the given order.
    Chart restricted(const std::string& name, const std::vector<int>& keep) const;
    // Position in `target` of each variable of this chart (matched by name).
    std::vector<int> embedding_into(const Chart& target) const;

    friend bool operator==(const Chart& a, const Chart& b);
    friend bool operator!=(const Chart& a, const Chart& b) { return !(a == b); }

private:
    struct Data {
        std::string name;
        std::vector<std::string> variables;
        Mode mode;
    };
    std::shared_ptr<const Data> data_;
};

void require_same_chart(const Chart& a, const Chart& b, const char* where);

}  // namespace dnk

#endif
