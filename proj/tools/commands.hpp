#ifndef DNK_TOOLS_COMMANDS_HPP
#define DNK_TOOLS_COMMANDS_HPP

#include "report.hpp"
#include "scene.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace dnk::cli {

inline constexpr std::uint64_t kDefaultSeed = 20240611;
inline constexpr unsigned kDefaultSamples = 3;
inline constexpr unsigned kDefaultInstances = 20;

struct Selection {
    std::optional<std::string> frame;
    std::optional<std::string> tensor;
};

// Runs one scene check request; precondition failures become failing results.
CheckResult run_request(const Scene& scene, const CheckRequest& req, unsigned samples);

Report run_check(const Scene& scene, unsigned samples, bool timing);
Report run_hierarchy(const Scene& scene, unsigned samples, HierarchySide side, unsigned n, const Selection& sel);
Report run_traces(const Scene& scene, unsigned samples, unsigned jmax, const Selection& sel);
Report run_holomorphic(const Scene& scene, unsigned samples, const Selection& sel);
Report run_algebroid(const Scene& scene, unsigned samples, const Selection& sel);
Report run_selftest(std::uint64_t seed, unsigned instances, bool timing);

// Full command line front end; returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dnk::cli

#endif
