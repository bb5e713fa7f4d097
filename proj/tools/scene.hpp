#ifndef DNK_TOOLS_SCENE_HPP
#define DNK_TOOLS_SCENE_HPP

#include "dnk/dirac/transforms.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace dnk::cli {

inline constexpr int kSceneVersion = 1;

// Raised for syntax and semantic errors; line and column are 1-based.
struct SceneError : std::runtime_error {
    SceneError(int line, int column, const std::string& msg);
    int line;
    int column;
    std::string message;
};

enum class ObjectKind { scalar, vector, form, bivector, tensor, section, dirac };
const char* object_kind_name(ObjectKind k);

struct CheckRequest {
    std::string kind;
    std::vector<std::string> args;
    std::string text;  // the declaration line, trimmed
    int line = 0;
};

struct Scene {
    std::string name;
    Chart chart;
    std::optional<unsigned> samples;
    std::string digest;  // fnv1a64 of the file bytes, hex

    std::map<std::string, ObjectKind> kinds;
    std::vector<std::string> order;  // declaration order of named objects

    std::map<std::string, Scalar> scalars;
    std::map<std::string, VectorField> vectors;
    std::map<std::string, PForm> forms;
    std::map<std::string, Bivector> bivectors;
    std::map<std::string, OneOneTensor> tensors;
    std::map<std::string, GSection> sections;
    std::map<std::string, GFrame> diracs;

    std::vector<CheckRequest> checks;

    // The unique object of a kind, or the named one; throws SceneError(0, 0, ...).
    std::string select(ObjectKind k, const std::optional<std::string>& requested) const;
};

struct SceneOptions {
    std::optional<Mode> mode;  // overrides the scene's mode line
};

// Parses version-1 scene text. `name` is used for the report only.
Scene parse_scene(const std::string& text, const std::string& name, const SceneOptions& opts = {});
Scene load_scene(const std::string& path, const SceneOptions& opts = {});

std::uint64_t fnv1a64(const std::string& bytes);
std::string hex64(std::uint64_t v);

// Arity and argument kinds of each check; a trailing "count" argument is a positive integer.
struct CheckSignature {
    std::string kind;
    std::vector<std::string> params;  // "dirac", "tensor", "form", "count"
};
const std::vector<CheckSignature>& check_signatures();

}  // namespace dnk::cli

#endif
