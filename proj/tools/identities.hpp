#ifndef DNK_TOOLS_IDENTITIES_HPP
#define DNK_TOOLS_IDENTITIES_HPP

#include "dnk/algebroid/algebroid.hpp"
#include "dnk/symbolic/random.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace dnk::cli {

// Collects the quantities an identity asserts to vanish; keeps the first nonzero one.
class Defects {
public:
    void zero(const std::string& label, const Scalar& s, const Chart& c);
    void zero(const std::string& label, const VectorField& x);
    void zero(const std::string& label, const PForm& w);
    void zero(const std::string& label, const GSection& s);
    void zero(const std::string& label, const OneOneTensor& r);
    // Also used for sections of an algebroid, stored as coefficient vectors.
    void zero(const std::string& label, const std::vector<Scalar>& v, const Chart& c);
    // A structural property that is not the vanishing of an expression; reported as the value 1.
    void holds(const std::string& label, bool ok, const Chart& c);

    bool ok() const { return !first_; }
    const std::optional<Witness>& first() const { return first_; }

private:
    std::optional<Witness> first_;
};

struct Identity {
    std::string module;
    std::string name;
    std::vector<Chart> charts;
    std::function<void(Rng&, const Chart&, Defects&)> instance;
    unsigned divisor = 1;  // runs instances / divisor times per chart (at least once)
};

const std::vector<Identity>& identity_registry();

struct IdentityOutcome {
    const Identity* identity = nullptr;
    unsigned instances = 0;
    unsigned failures = 0;
    std::optional<Witness> witness;  // from the first failing instance
    std::string error;               // exception text from the first throwing instance
};

// Runs every identity on each of its charts `instances_per_chart` times.
// The generator of an identity is seeded with seed ^ fnv1a64(module.name).
std::vector<IdentityOutcome> run_identities(std::uint64_t seed, unsigned instances_per_chart);
IdentityOutcome run_identity(const Identity& id, std::uint64_t seed, unsigned instances_per_chart);

}  // namespace dnk::cli

#endif
