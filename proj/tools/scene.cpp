#include "scene.hpp"

#include "dnk/holomorphic/holomorphic.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

namespace dnk::cli {

SceneError::SceneError(int l, int c, const std::string& msg)
    : std::runtime_error(l > 0 ? std::to_string(l) + ":" + std::to_string(c) + ": " + msg : msg),
      line(l),
      column(c),
      message(msg) {}

const char* object_kind_name(ObjectKind k) {
    switch (k) {
        case ObjectKind::scalar: return "scalar";
        case ObjectKind::vector: return "vector";
        case ObjectKind::form: return "form";
        case ObjectKind::bivector: return "bivector";
        case ObjectKind::tensor: return "tensor";
        case ObjectKind::section: return "section";
        case ObjectKind::dirac: return "dirac";
    }
    return "?";
}

std::uint64_t fnv1a64(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string hex64(std::uint64_t v) {
    static const char* digits = "0123456789abcdef";
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i, v >>= 4) s[i] = digits[v & 0xf];
    return s;
}

const std::vector<CheckSignature>& check_signatures() {
    static const std::vector<CheckSignature> sigs{
        {"lagrangian", {"dirac"}},
        {"involutive", {"dirac"}},
        {"dirac", {"dirac"}},
        {"invariance", {"dirac", "tensor"}},
        {"d_stability", {"dirac", "tensor"}},
        {"dirac_nijenhuis", {"dirac", "tensor"}},
        {"compatible", {"dirac", "tensor"}},
        {"nijenhuis", {"tensor"}},
        {"form_compat", {"form", "tensor"}},
        {"quasi", {"dirac", "tensor", "form"}},
        {"contraction", {"dirac", "tensor"}},
        {"double", {"dirac", "tensor"}},
        {"concur", {"dirac", "dirac"}},
        {"traces_involution", {"dirac", "tensor", "count"}},
        {"holomorphic_dirac", {"dirac", "tensor"}},
        {"holo_form", {"form", "form", "tensor"}},
        {"algebroid", {"dirac"}},
        {"im_form", {"dirac"}},
        {"im_oneone", {"dirac", "tensor"}},
        {"im_nijenhuis", {"dirac", "tensor"}},
        {"im_compat", {"dirac", "tensor"}},
        {"quasi_im", {"dirac", "tensor", "form"}},
    };
    return sigs;
}

std::string Scene::select(ObjectKind k, const std::optional<std::string>& requested) const {
    const char* what = object_kind_name(k);
    if (requested) {
        auto it = kinds.find(*requested);
        if (it == kinds.end()) throw SceneError(0, 0, "no object named '" + *requested + "'");
        if (it->second != k) throw SceneError(0, 0, "'" + *requested + "' is not a " + what);
        return *requested;
    }
    std::string found;
    for (const auto& name : order) {
        if (kinds.at(name) != k) continue;
        if (!found.empty()) throw SceneError(0, 0, std::string("several ") + what + " objects declared; choose one");
        found = name;
    }
    if (found.empty()) throw SceneError(0, 0, std::string("the scene declares no ") + what);
    return found;
}

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

const std::set<std::string> kReserved{"identity", "complex", "scalar", "diag", "gauge", "graph_poisson",
                                      "graph_presymplectic", "split", "frame", "i"};

// A span of the current line: [begin, end).
struct Piece {
    std::size_t begin = 0;
    std::size_t end = 0;
};

class LineParser {
public:
    LineParser(const std::string& text, int lineno) : s_(text), line_(lineno) {}

    [[noreturn]] void fail(std::size_t at, const std::string& msg) const {
        throw SceneError(line_, static_cast<int>(at) + 1, msg);
    }
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool at_end() {
        skip_ws();
        return pos_ >= s_.size();
    }
    std::size_t pos() const { return pos_; }
    int line() const { return line_; }

    // Next whitespace-delimited word; empty at end of line.
    std::string word(std::size_t* at = nullptr) {
        skip_ws();
        if (at) *at = pos_;
        std::size_t b = pos_;
        while (pos_ < s_.size() && !std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        return s_.substr(b, pos_ - b);
    }
    std::string ident(const std::string& what, std::size_t* at = nullptr) {
        std::size_t b;
        std::string w = word(&b);
        if (at) *at = b;
        if (w.empty()) fail(b, "expected " + what);
        if (!is_ident_start(w[0]) || !std::all_of(w.begin(), w.end(), is_ident_char))
            fail(b, "'" + w + "' is not a valid " + what);
        return w;
    }
    void expect(char c) {
        skip_ws();
        if (pos_ >= s_.size() || s_[pos_] != c) fail(pos_, std::string("expected '") + c + "'");
        ++pos_;
    }
    void expect_end() {
        skip_ws();
        if (pos_ < s_.size()) fail(pos_, "unexpected text '" + s_.substr(pos_) + "'");
    }
    Piece rest() {
        Piece p{pos_, s_.size()};
        pos_ = s_.size();
        return p;
    }
    std::string text(Piece p) const { return s_.substr(p.begin, p.end - p.begin); }
    // Column of the first non-blank character of p.
    std::size_t start_of(Piece p) const {
        std::size_t b = p.begin;
        while (b < p.end && std::isspace(static_cast<unsigned char>(s_[b]))) ++b;
        return b;
    }
    bool blank(Piece p) const { return start_of(p) == p.end; }

    std::vector<Piece> split(Piece p, char sep) const {
        std::vector<Piece> out;
        std::size_t b = p.begin;
        for (std::size_t i = p.begin; i < p.end; ++i)
            if (s_[i] == sep) {
                out.push_back({b, i});
                b = i + 1;
            }
        out.push_back({b, p.end});
        return out;
    }
    // Words inside a piece with their offsets.
    std::vector<std::pair<std::string, std::size_t>> words(Piece p) const {
        std::vector<std::pair<std::string, std::size_t>> out;
        std::size_t i = p.begin;
        while (i < p.end) {
            while (i < p.end && std::isspace(static_cast<unsigned char>(s_[i]))) ++i;
            if (i >= p.end) break;
            std::size_t b = i;
            while (i < p.end && !std::isspace(static_cast<unsigned char>(s_[i]))) ++i;
            out.push_back({s_.substr(b, i - b), b});
        }
        return out;
    }

private:
    const std::string& s_;
    int line_;
    std::size_t pos_ = 0;
};

class SceneBuilder {
public:
    SceneBuilder(Scene& scene, const SceneOptions& opts) : sc_(scene), opts_(opts) {}

    void statement(LineParser& p, const std::string& trimmed) {
        std::size_t at;
        std::string kw = p.word(&at);
        if (kw == "mode") return mode_line(p);
        if (kw == "chart") return chart_line(p, at);
        if (kw == "samples") return samples_line(p, at);
        if (!have_chart_) p.fail(at, "'" + kw + "' before the chart declaration");
        if (kw == "let") return let_line(p);
        if (kw == "vector") return vector_line(p);
        if (kw == "form") return form_line(p);
        if (kw == "bivector") return bivector_line(p);
        if (kw == "tensor") return tensor_line(p);
        if (kw == "section") return section_line(p);
        if (kw == "dirac") return dirac_line(p);
        if (kw == "check") return check_line(p, trimmed);
        p.fail(at, "unknown statement '" + kw + "'");
    }

    void finish() {
        if (!have_chart_) throw SceneError(0, 0, "the scene declares no chart");
    }

private:
    Scene& sc_;
    const SceneOptions& opts_;
    bool have_chart_ = false;
    bool have_samples_ = false;
    Mode mode_ = Mode::real;
    bool mode_seen_ = false;

    void mode_line(LineParser& p) {
        std::size_t at;
        std::string m = p.word(&at);
        if (have_chart_) p.fail(at, "mode must precede the chart declaration");
        if (mode_seen_) p.fail(at, "mode declared twice");
        if (m == "real")
            mode_ = Mode::real;
        else if (m == "complex")
            mode_ = Mode::complex;
        else
            p.fail(at, "mode must be 'real' or 'complex'");
        mode_seen_ = true;
        p.expect_end();
    }

    void chart_line(LineParser& p, std::size_t kw_at) {
        if (have_chart_) p.fail(kw_at, "chart declared twice");
        std::string name = p.ident("chart name");
        std::vector<std::string> vars;
        const Mode mode = opts_.mode.value_or(mode_);
        while (!p.at_end()) {
            std::size_t at;
            std::string v = p.ident("variable name", &at);
            if (std::find(vars.begin(), vars.end(), v) != vars.end()) p.fail(at, "variable '" + v + "' repeated");
            if (v == "i" && mode == Mode::complex) p.fail(at, "'i' is the imaginary unit in complex mode");
            vars.push_back(v);
        }
        if (vars.empty()) p.fail(p.pos(), "a chart needs at least one variable");
        if (vars.size() > 12) p.fail(kw_at, "at most 12 variables are supported");
        sc_.chart = Chart(name, vars, mode);
        have_chart_ = true;
    }

    void samples_line(LineParser& p, std::size_t kw_at) {
        if (have_samples_) p.fail(kw_at, "samples declared twice");
        std::size_t at;
        std::string w = p.word(&at);
        if (w.empty() || !std::all_of(w.begin(), w.end(), ::isdigit) || w.size() > 3 || std::stoi(w) < 1 ||
            std::stoi(w) > 64)
            p.fail(at, "samples must be an integer in 1..64");
        sc_.samples = static_cast<unsigned>(std::stoi(w));
        have_samples_ = true;
        p.expect_end();
    }

    std::string new_name(LineParser& p, ObjectKind k) {
        std::size_t at;
        std::string name = p.ident("object name", &at);
        if (kReserved.count(name)) p.fail(at, "'" + name + "' is reserved");
        if (sc_.kinds.count(name)) p.fail(at, "'" + name + "' already declared");
        if (sc_.chart.index_of(name) >= 0) p.fail(at, "'" + name + "' is a chart variable");
        sc_.kinds[name] = k;
        sc_.order.push_back(name);
        return name;
    }

    Scalar expr(const LineParser& p, Piece piece) const {
        if (p.blank(piece)) p.fail(piece.begin, "expected an expression");
        try {
            return sc_.chart.parse(p.text(piece), &sc_.scalars);
        } catch (const ParseError& e) {
            std::string msg = e.what();
            auto cut = msg.rfind(" at column ");
            if (cut != std::string::npos) msg = msg.substr(0, cut);
            p.fail(piece.begin + e.position, msg);
        } catch (const std::exception& e) {
            p.fail(p.start_of(piece), e.what());
        }
    }

    int variable(const LineParser& p, const std::string& w, std::size_t at) const {
        int k = sc_.chart.index_of(w);
        if (k < 0) p.fail(at, "'" + w + "' is not a chart variable");
        return k;
    }

    // Looks up an existing object of one kind.
    template <class Map>
    const typename Map::mapped_type& lookup(const LineParser& p, const Map& m, ObjectKind k, const std::string& name,
                                            std::size_t at) const {
        auto it = sc_.kinds.find(name);
        if (it == sc_.kinds.end()) p.fail(at, "unknown object '" + name + "'");
        if (it->second != k) p.fail(at, "'" + name + "' is not a " + object_kind_name(k));
        return m.at(name);
    }

    void let_line(LineParser& p) {
        std::string name = new_name(p, ObjectKind::scalar);
        p.expect('=');
        Scalar v = expr(p, p.rest());
        sc_.scalars[name] = v;
    }

    void vector_line(LineParser& p) {
        std::string name = new_name(p, ObjectKind::vector);
        p.expect('=');
        auto parts = p.split(p.rest(), ',');
        if (static_cast<int>(parts.size()) != sc_.chart.dim())
            p.fail(parts.back().end, "expected " + std::to_string(sc_.chart.dim()) + " components");
        VectorField v(sc_.chart);
        for (int i = 0; i < sc_.chart.dim(); ++i) v[i] = expr(p, parts[i]);
        sc_.vectors[name] = v;
    }

    // "i j : expr ; ..." with `arity` index variables per entry.
    template <class Set>
    void components(LineParser& p, Piece body, std::size_t arity, Set set) {
        std::set<std::vector<int>> seen;
        for (Piece entry : p.split(body, ';')) {
            if (p.blank(entry)) continue;
            auto halves = p.split(entry, ':');
            if (halves.size() != 2) p.fail(p.start_of(entry), "expected 'indices : expression'");
            auto idx = p.words(halves[0]);
            if (idx.size() != arity)
                p.fail(p.start_of(halves[0]), "expected " + std::to_string(arity) + " index variables");
            std::vector<int> ks;
            for (auto& [w, at] : idx) {
                int k = variable(p, w, at);
                if (std::find(ks.begin(), ks.end(), k) != ks.end()) p.fail(at, "repeated index '" + w + "'");
                ks.push_back(k);
            }
            std::vector<int> sorted = ks;
            std::sort(sorted.begin(), sorted.end());
            if (!seen.insert(sorted).second) p.fail(p.start_of(halves[0]), "component given twice");
            set(ks, expr(p, halves[1]));
        }
    }

    void form_line(LineParser& p) {
        std::string name = new_name(p, ObjectKind::form);
        std::size_t at;
        std::string deg = p.word(&at);
        if (deg.empty() || deg.size() > 2 || !std::all_of(deg.begin(), deg.end(), ::isdigit))
            p.fail(at, "expected the form degree");
        int degree = std::stoi(deg);
        if (degree > sc_.chart.dim()) p.fail(at, "degree exceeds the chart dimension");
        p.expect('=');
        Piece body = p.rest();
        if (degree == 0) {
            sc_.forms[name] = PForm::function(sc_.chart, expr(p, body));
            return;
        }
        PForm w(sc_.chart, degree);
        components(p, body, static_cast<std::size_t>(degree), [&](const std::vector<int>& ks, const Scalar& v) {
            w.set(ks, v);
        });
        sc_.forms[name] = w;
    }

    void bivector_line(LineParser& p) {
        std::string name = new_name(p, ObjectKind::bivector);
        p.expect('=');
        Bivector b(sc_.chart);
        components(p, p.rest(), 2, [&](const std::vector<int>& ks, const Scalar& v) { b.set(ks[0], ks[1], v); });
        sc_.bivectors[name] = b;
    }

    GaugeData gauge(LineParser& p) {
        std::size_t a1, a2;
        std::string pi = p.ident("bivector name", &a1);
        std::string b = p.ident("form name", &a2);
        const Bivector& bv = lookup(p, sc_.bivectors, ObjectKind::bivector, pi, a1);
        const PForm& bf = lookup(p, sc_.forms, ObjectKind::form, b, a2);
        if (bf.degree() != 2) p.fail(a2, "'" + b + "' is not a 2-form");
        p.expect_end();
        return gauge_transform(bv, bf);
    }

    void tensor_line(LineParser& p) {
        std::string name = new_name(p, ObjectKind::tensor);
        p.expect('=');
        const int n = sc_.chart.dim();
        p.skip_ws();
        std::size_t save = p.pos();
        std::size_t at;
        std::string kw = p.word(&at);
        if (kw == "identity") {
            p.expect_end();
            sc_.tensors[name] = OneOneTensor::identity(sc_.chart);
        } else if (kw == "complex") {
            p.expect_end();
            try {
                sc_.tensors[name] = ComplexStructure::standard(sc_.chart).tensor();
            } catch (const std::exception& e) {
                p.fail(at, e.what());
            }
        } else if (kw == "scalar") {
            sc_.tensors[name] = OneOneTensor::scalar_multiple(sc_.chart, expr(p, p.rest()));
        } else if (kw == "diag") {
            auto parts = p.split(p.rest(), ',');
            if (static_cast<int>(parts.size()) != n) p.fail(parts.back().end, "expected " + std::to_string(n) + " diagonal entries");
            std::vector<Scalar> d;
            for (auto part : parts) d.push_back(expr(p, part));
            sc_.tensors[name] = OneOneTensor::diagonal(sc_.chart, d);
        } else if (kw == "gauge") {
            sc_.tensors[name] = gauge(p).r;
        } else {
            Piece body{save, p.rest().end};
            auto rows = p.split(body, ';');
            if (static_cast<int>(rows.size()) != n) p.fail(rows.back().end, "expected " + std::to_string(n) + " rows");
            OneOneTensor r(sc_.chart);
            for (int i = 0; i < n; ++i) {
                auto cols = p.split(rows[i], ',');
                if (static_cast<int>(cols.size()) != n)
                    p.fail(cols.back().end, "expected " + std::to_string(n) + " entries in the row");
                for (int j = 0; j < n; ++j) r.at(i, j) = expr(p, cols[j]);
            }
            sc_.tensors[name] = r;
        }
    }

    void section_line(LineParser& p) {
        std::string name = new_name(p, ObjectKind::section);
        p.expect('=');
        std::size_t a1, a2;
        std::string v = p.word(&a1);
        std::string a = p.word(&a2);
        if (v.empty()) p.fail(a1, "expected a vector name or 0");
        if (a.empty()) p.fail(a2, "expected a form name or 0");
        p.expect_end();
        GSection s(sc_.chart);
        if (v != "0") s.vec = lookup(p, sc_.vectors, ObjectKind::vector, v, a1);
        if (a != "0") {
            const PForm& f = lookup(p, sc_.forms, ObjectKind::form, a, a2);
            if (f.degree() != 1) p.fail(a2, "'" + a + "' is not a 1-form");
            s.form = f;
        }
        sc_.sections[name] = s;
    }

    void dirac_line(LineParser& p) {
        std::string name = new_name(p, ObjectKind::dirac);
        p.expect('=');
        std::size_t at;
        std::string kw = p.word(&at);
        try {
            if (kw == "graph_poisson") {
                std::size_t a1;
                std::string pi = p.ident("bivector name", &a1);
                p.expect_end();
                sc_.diracs[name] = make_graph_poisson(lookup(p, sc_.bivectors, ObjectKind::bivector, pi, a1));
            } else if (kw == "graph_presymplectic") {
                std::size_t a1;
                std::string w = p.ident("form name", &a1);
                p.expect_end();
                const PForm& f = lookup(p, sc_.forms, ObjectKind::form, w, a1);
                if (f.degree() != 2) p.fail(a1, "'" + w + "' is not a 2-form");
                sc_.diracs[name] = make_graph_presymplectic(f);
            } else if (kw == "split") {
                std::vector<VectorField> fs;
                while (!p.at_end()) {
                    std::size_t a1;
                    std::string v = p.ident("vector name", &a1);
                    fs.push_back(lookup(p, sc_.vectors, ObjectKind::vector, v, a1));
                }
                sc_.diracs[name] = make_split(fs);
            } else if (kw == "frame") {
                std::vector<GSection> ss;
                while (!p.at_end()) {
                    std::size_t a1;
                    std::string s = p.ident("section name", &a1);
                    ss.push_back(lookup(p, sc_.sections, ObjectKind::section, s, a1));
                }
                if (ss.empty()) p.fail(p.pos(), "a frame needs at least one section");
                sc_.diracs[name] = GFrame(sc_.chart, ss);
            } else if (kw == "gauge") {
                sc_.diracs[name] = gauge(p).frame;
            } else {
                p.fail(at, "expected graph_poisson, graph_presymplectic, split, frame or gauge");
            }
        } catch (const SceneError&) {
            throw;
        } catch (const std::exception& e) {
            p.fail(at, e.what());
        }
    }

    void check_line(LineParser& p, const std::string& trimmed) {
        std::size_t at;
        std::string kind = p.word(&at);
        if (kind.empty()) p.fail(at, "expected a check kind");
        const auto& sigs = check_signatures();
        auto sig = std::find_if(sigs.begin(), sigs.end(), [&](const CheckSignature& s) { return s.kind == kind; });
        if (sig == sigs.end()) p.fail(at, "unknown check '" + kind + "'");
        CheckRequest req;
        req.kind = kind;
        req.text = trimmed;
        req.line = p.line();
        for (const auto& param : sig->params) {
            std::size_t a;
            std::string w = p.word(&a);
            if (w.empty()) p.fail(a, "check " + kind + " expects a " + param + " argument");
            if (param == "count") {
                if (!std::all_of(w.begin(), w.end(), ::isdigit) || w.size() > 2 || std::stoi(w) < 1)
                    p.fail(a, "expected a positive integer");
            } else {
                auto it = sc_.kinds.find(w);
                if (it == sc_.kinds.end()) p.fail(a, "unknown object '" + w + "'");
                if (object_kind_name(it->second) != param) p.fail(a, "'" + w + "' is not a " + param);
            }
            req.args.push_back(w);
        }
        p.expect_end();
        sc_.checks.push_back(std::move(req));
    }
};

std::string strip_comment(const std::string& line) {
    auto hash = line.find('#');
    return hash == std::string::npos ? line : line.substr(0, hash);
}

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

}  // namespace

Scene parse_scene(const std::string& text, const std::string& name, const SceneOptions& opts) {
    Scene sc;
    sc.name = name;
    sc.digest = hex64(fnv1a64(text));
    SceneBuilder builder(sc, opts);
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    bool header = false;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = strip_comment(raw);
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (trim(line).empty()) continue;
        LineParser p(line, lineno);
        if (!header) {
            std::size_t at;
            std::string magic = p.word(&at);
            if (magic != "dnk-scene") p.fail(at, "expected the header 'dnk-scene " + std::to_string(kSceneVersion) + "'");
            std::string v = p.word(&at);
            if (v != std::to_string(kSceneVersion)) p.fail(at, "unsupported scene version '" + v + "'");
            p.expect_end();
            header = true;
            continue;
        }
        builder.statement(p, trim(line));
    }
    if (!header) throw SceneError(lineno > 0 ? lineno : 1, 1, "empty scene");
    builder.finish();
    return sc;
}

Scene load_scene(const std::string& path, const SceneOptions& opts) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read scene file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    std::string name = path;
    auto slash = name.find_last_of('/');
    if (slash != std::string::npos) name = name.substr(slash + 1);
    return parse_scene(buf.str(), name, opts);
}

}  // namespace dnk::cli
