#include "commands.hpp"

#include "identities.hpp"

#include "dnk/algebroid/algebroid.hpp"
#include "dnk/holomorphic/holomorphic.hpp"

#include "CLI11.hpp"

#include <chrono>
#include <fstream>
#include <ostream>

namespace dnk::cli {

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

// Merges sub-results into one record; witness labels are prefixed by the sub-check name.
CheckResult merged(const std::string& name, const std::vector<const CheckResult*>& parts) {
    CheckResult out(name);
    std::string summary;
    for (const CheckResult* p : parts) {
        out.verdict = combine(out.verdict, p->verdict);
        summary += (summary.empty() ? "" : " ") + p->name + "=" + verdict_name(p->verdict);
        for (const auto& w : p->witnesses) out.witnesses.push_back({p->name + ": " + w.label, w.value, w.text, w.chart});
        if (p->verdict != Verdict::pass && !p->note.empty()) summary += " (" + p->note + ")";
    }
    out.note = summary;
    return out;
}

CheckResult precondition_failure(const std::string& name, const std::string& what) {
    CheckResult out(name);
    out.fail_note("precondition: " + what);
    return out;
}

struct Args {
    const Scene& scene;
    const CheckRequest& req;
    const GFrame& dirac(std::size_t k) const { return scene.diracs.at(req.args.at(k)); }
    const OneOneTensor& tensor(std::size_t k) const { return scene.tensors.at(req.args.at(k)); }
    const PForm& form(std::size_t k) const { return scene.forms.at(req.args.at(k)); }
    unsigned count(std::size_t k) const { return static_cast<unsigned>(std::stoul(req.args.at(k))); }
};

CheckResult dispatch(const Args& a, unsigned samples) {
    const std::string& k = a.req.kind;
    if (k == "lagrangian") return check_lagrangian(a.dirac(0), samples);
    if (k == "involutive") return check_involutive(a.dirac(0));
    if (k == "dirac") {
        CheckResult lag = check_lagrangian(a.dirac(0), samples);
        CheckResult inv = check_involutive(a.dirac(0));
        return merged("dirac", {&lag, &inv});
    }
    if (k == "invariance") return check_invariance(a.dirac(0), a.tensor(1));
    if (k == "d_stability") return check_D_stability(a.dirac(0), a.tensor(1));
    if (k == "dirac_nijenhuis" || k == "compatible") {
        DNReport rep = dirac_nijenhuis_report(a.dirac(0), a.tensor(1), samples);
        auto parts = rep.all();
        if (k == "compatible") parts.pop_back();
        return merged(k, parts);
    }
    if (k == "nijenhuis") return check_nijenhuis(a.tensor(0));
    if (k == "form_compat") return check_form_compat(a.form(0), a.tensor(1));
    if (k == "quasi") return quasi_nijenhuis_check(a.dirac(0), a.tensor(1), a.form(2));
    if (k == "contraction") return check_contraction_type(a.dirac(0), a.tensor(1));
    if (k == "double") return check_double_type(a.dirac(0), a.tensor(1));
    if (k == "concur") return check_concur(a.dirac(0), a.dirac(1), samples);
    if (k == "traces_involution") return check_traces_involution(a.dirac(0), a.tensor(1), a.count(2));
    if (k == "holomorphic_dirac") return check_holomorphic_dirac(a.dirac(0), ComplexStructure(a.tensor(1)), samples);
    if (k == "holo_form") return check_holo_form({a.form(0), a.form(1)}, ComplexStructure(a.tensor(2)));

    DiracAlgebroid da = dirac_to_algebroid(a.dirac(0));
    if (k == "algebroid") return check_algebroid(da.algebroid);
    if (k == "im_form") return check_IM_form(da.algebroid, da.form);
    if (k == "quasi_im") {
        CheckResult q = quasi_IM_check(da.algebroid, da.form, a.tensor(1), a.form(2));
        IMOneOne t = transport_im_tensor(a.dirac(0), a.tensor(1));
        CheckResult nu = check_quasi_nu_tilde(da.algebroid, da.form, t);
        return merged("quasi_IM", {&q, &nu});
    }
    IMOneOne t = transport_im_tensor(a.dirac(0), a.tensor(1));
    if (k == "im_oneone") return check_IM_oneone(da.algebroid, t);
    if (k == "im_nijenhuis") return check_IM_nijenhuis(da.algebroid, t);
    if (k == "im_compat") return check_IM_compat(da.algebroid, da.form, t);
    throw std::logic_error("unhandled check kind " + k);
}

// Runs fn, turning the library's precondition exceptions into a failing result.
template <class Fn>
CheckResult guarded(const std::string& name, Fn fn) {
    try {
        return fn();
    } catch (const HierarchyError& e) {
        return precondition_failure(name, e.what());
    } catch (const NotAdmissible& e) {
        return precondition_failure(name, e.what());
    } catch (const TransferError& e) {
        return precondition_failure(name, e.what());
    } catch (const std::invalid_argument& e) {
        // PreconditionError, NotSkew, InvalidComplexStructure and degree mismatches.
        return precondition_failure(name, e.what());
    }
}

std::string var(const Chart& c, int i) { return c.variables()[i]; }

void emit_section(Report& rep, const std::string& key, const GSection& s) {
    const Chart& c = s.chart();
    for (int i = 0; i < c.dim(); ++i) rep.add(key + ".vec." + var(c, i), s.vec[i], c);
    for (int i = 0; i < c.dim(); ++i) rep.add(key + ".form." + var(c, i), s.form[i], c);
}

// Graph frames are printed as their bivector or 2-form when the frame is in normal form.
void emit_frame(Report& rep, const std::string& key, const GFrame& l) {
    const Chart& c = l.chart;
    const int n = c.dim();
    rep.add(key + ".kind", frame_kind_name(l.kind));
    bool normal = static_cast<int>(l.size()) == n;
    if (normal && l.kind == FrameKind::graph_poisson) {
        for (int i = 0; i < n && normal; ++i) normal = l[i].form == PForm::coordinate(c, i);
        if (normal) {
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) rep.add(key + ".bivector." + var(c, i) + "_" + var(c, j), l[i].vec[j], c);
            return;
        }
    }
    if (normal && l.kind == FrameKind::graph_presymplectic) {
        for (int i = 0; i < n && normal; ++i) normal = l[i].vec == VectorField::coordinate(c, i);
        if (normal) {
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) rep.add(key + ".form." + var(c, i) + "_" + var(c, j), l[i].form[j], c);
            return;
        }
    }
    for (std::size_t a = 0; a < l.size(); ++a) emit_section(rep, key + ".section." + std::to_string(a + 1), l[a]);
}

Report base_report(const std::string& command, const Scene& scene, unsigned samples) {
    Report rep;
    rep.command = command;
    rep.scene_name = scene.name;
    rep.scene_digest = scene.digest;
    rep.samples = samples;
    return rep;
}

}  // namespace

CheckResult run_request(const Scene& scene, const CheckRequest& req, unsigned samples) {
    CheckResult r = guarded(req.kind, [&] { return dispatch(Args{scene, req}, samples); });
    if (r.name.empty()) r.name = req.kind;
    return r;
}

Report run_check(const Scene& scene, unsigned samples, bool timing) {
    Report rep = base_report("check", scene, samples);
    rep.timing = timing;
    auto t0 = Clock::now();
    for (const auto& req : scene.checks) {
        auto t = Clock::now();
        CheckResult r = run_request(scene, req, samples);
        rep.add_record(req.text, r).elapsed_ms = since(t);
    }
    rep.elapsed_ms = since(t0);
    return rep;
}

Report run_hierarchy(const Scene& scene, unsigned samples, HierarchySide side, unsigned n, const Selection& sel) {
    Report rep = base_report("hierarchy", scene, samples);
    const std::string lname = scene.select(ObjectKind::dirac, sel.frame);
    const std::string rname = scene.select(ObjectKind::tensor, sel.tensor);
    const GFrame& l = scene.diracs.at(lname);
    const OneOneTensor& r = scene.tensors.at(rname);
    rep.add("frame", lname);
    rep.add("tensor", rname);
    rep.add("side", side_name(side));
    rep.add("n", std::to_string(n));
    std::vector<GFrame> members{l};
    emit_frame(rep, "member.0", l);
    rep.add_record("member 0 dirac_nijenhuis", merged("dirac_nijenhuis", dirac_nijenhuis_report(l, r, samples).all()));
    for (unsigned k = 1; k <= n; ++k) {
        const std::string tag = "member " + std::to_string(k);
        try {
            GFrame m = hierarchy(l, r, k, side, samples);
            emit_frame(rep, "member." + std::to_string(k), m);
            rep.add_record(tag + " dirac_nijenhuis",
                           merged("dirac_nijenhuis", dirac_nijenhuis_report(m, r, samples).all()));
            members.push_back(m);
        } catch (const HierarchyError& e) {
            rep.add_record(tag + " hierarchy", precondition_failure("hierarchy", e.what()));
            break;
        }
    }
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j) {
            const std::string req = "concur member " + std::to_string(i) + " member " + std::to_string(j);
            rep.add_record(req, guarded("concur", [&] { return check_concur(members[i], members[j], samples); }));
        }
    return rep;
}

Report run_traces(const Scene& scene, unsigned samples, unsigned jmax, const Selection& sel) {
    Report rep = base_report("traces", scene, samples);
    const std::string lname = scene.select(ObjectKind::dirac, sel.frame);
    const std::string rname = scene.select(ObjectKind::tensor, sel.tensor);
    const GFrame& l = scene.diracs.at(lname);
    const OneOneTensor& r = scene.tensors.at(rname);
    const Chart& c = scene.chart;
    rep.add("frame", lname);
    rep.add("tensor", rname);
    rep.add("jmax", std::to_string(jmax));
    std::vector<Scalar> phi = traces(r, jmax);
    std::vector<std::optional<VectorField>> ham;
    for (unsigned j = 1; j <= jmax; ++j) {
        const std::string key = "trace." + std::to_string(j);
        rep.add(key, phi[j - 1], c);
        ham.push_back(hamiltonian_field(l, phi[j - 1]));
        if (!ham.back()) {
            rep.add("hamiltonian." + std::to_string(j), "not admissible");
            continue;
        }
        for (int i = 0; i < c.dim(); ++i)
            rep.add("hamiltonian." + std::to_string(j) + "." + var(c, i), (*ham.back())[i], c);
    }
    for (unsigned i = 1; i <= jmax; ++i)
        for (unsigned j = i + 1; j <= jmax; ++j) {
            if (!ham[i - 1] || !ham[j - 1]) continue;
            rep.add("bracket." + std::to_string(i) + "." + std::to_string(j), ham[i - 1]->apply(phi[j - 1]), c);
        }
    rep.add_record("traces_involution " + lname + " " + rname + " " + std::to_string(jmax),
                   guarded("traces_involution", [&] { return check_traces_involution(l, r, jmax); }));
    return rep;
}

Report run_holomorphic(const Scene& scene, unsigned samples, const Selection& sel) {
    Report rep = base_report("holomorphic", scene, samples);
    const std::string lname = scene.select(ObjectKind::dirac, sel.frame);
    const std::string jname = scene.select(ObjectKind::tensor, sel.tensor);
    const GFrame& l = scene.diracs.at(lname);
    rep.add("frame", lname);
    rep.add("tensor", jname);
    const std::string req = "holomorphic_dirac " + lname + " " + jname;
    std::optional<ComplexStructure> j;
    try {
        j.emplace(scene.tensors.at(jname));
    } catch (const InvalidComplexStructure& e) {
        rep.add_record(req, precondition_failure("holomorphic_dirac", e.what()));
        return rep;
    }
    for (std::size_t a = 0; a < l.size(); ++a) emit_section(rep, "phi." + std::to_string(a + 1), phi_map(l[a], *j).value());
    rep.add_record(req, guarded("holomorphic_dirac", [&] { return check_holomorphic_dirac(l, *j, samples); }));
    return rep;
}

Report run_algebroid(const Scene& scene, unsigned samples, const Selection& sel) {
    Report rep = base_report("algebroid", scene, samples);
    const std::string lname = scene.select(ObjectKind::dirac, sel.frame);
    const GFrame& l = scene.diracs.at(lname);
    const Chart& c = scene.chart;
    rep.add("frame", lname);
    DiracAlgebroid da;
    try {
        da = dirac_to_algebroid(l);
    } catch (const std::invalid_argument& e) {
        rep.add_record("algebroid " + lname, precondition_failure("algebroid", e.what()));
        return rep;
    }
    const AlgebroidData& a = da.algebroid;
    const int m = a.rank();
    auto e = [](int k) { return "e" + std::to_string(k + 1); };
    for (int s = 0; s < m; ++s)
        for (int i = 0; i < c.dim(); ++i) rep.add("anchor." + e(s) + "." + var(c, i), a.anchor[s][i], c);
    for (int s = 0; s < m; ++s)
        for (int t = s + 1; t < m; ++t)
            for (int u = 0; u < m; ++u) rep.add("structure." + e(s) + "." + e(t) + "." + e(u), a.structure[s][t][u], c);
    for (int s = 0; s < m; ++s)
        for (int i = 0; i < c.dim(); ++i) rep.add("mu." + e(s) + "." + var(c, i), da.form.mu[s][i], c);
    rep.add("transversal", da.transversal ? "true" : "false");

    rep.add_record("algebroid " + lname, guarded("algebroid", [&] { return check_algebroid(a); }));
    rep.add_record("im_form " + lname, guarded("IM_form", [&] { return check_IM_form(a, da.form); }));

    bool has_tensor = sel.tensor.has_value();
    for (const auto& [name, kind] : scene.kinds) has_tensor = has_tensor || kind == ObjectKind::tensor;
    if (!has_tensor) return rep;
    const std::string rname = scene.select(ObjectKind::tensor, sel.tensor);
    rep.add("tensor", rname);
    const OneOneTensor& r = scene.tensors.at(rname);
    const std::string args = " " + lname + " " + rname;
    std::optional<IMOneOne> t;
    try {
        t = transport_im_tensor(l, r);
    } catch (const std::invalid_argument& ex) {
        rep.add_record("im_oneone" + args, precondition_failure("IM_oneone", ex.what()));
        return rep;
    }
    rep.add_record("im_oneone" + args, guarded("IM_oneone", [&] { return check_IM_oneone(a, *t); }));
    rep.add_record("im_nijenhuis" + args, guarded("IM_nijenhuis", [&] { return check_IM_nijenhuis(a, *t); }));
    rep.add_record("im_compat" + args, guarded("IM_compat", [&] { return check_IM_compat(a, da.form, *t); }));
    return rep;
}

Report run_selftest(std::uint64_t seed, unsigned instances, bool timing) {
    Report rep;
    rep.command = "selftest";
    rep.seed = seed;
    rep.timing = timing;
    auto t0 = Clock::now();
    unsigned total = 0;
    const auto& reg = identity_registry();
    rep.add("identities", std::to_string(reg.size()));
    rep.add("instances_per_chart", std::to_string(instances));
    for (const auto& id : reg) {
        auto t = Clock::now();
        IdentityOutcome o = run_identity(id, seed, instances);
        total += o.instances;
        CheckResult r(id.module + "." + id.name);
        std::string charts;
        for (const auto& c : id.charts) charts += (charts.empty() ? "" : ",") + c.name();
        if (o.failures == 0) {
            r.note = std::to_string(o.instances) + " instances on " + charts;
        } else {
            r.verdict = Verdict::fail;
            r.note = std::to_string(o.failures) + " of " + std::to_string(o.instances) + " instances failed on " + charts;
            if (!o.error.empty()) r.note += "; error: " + o.error;
            if (o.witness) r.witnesses.push_back(*o.witness);
        }
        rep.add_record("identity " + id.module + "." + id.name, r).elapsed_ms = since(t);
    }
    rep.add("instances", std::to_string(total));
    rep.elapsed_ms = since(t0);
    return rep;
}

namespace {

struct CliState {
    std::string scene_path;
    std::optional<std::string> output;
    std::uint64_t seed = kDefaultSeed;
    std::optional<unsigned> samples;
    std::string mode;
    bool json = false;
    bool timing = false;
    std::string side = "n0";
    unsigned n = 1;
    unsigned jmax = 3;
    unsigned instances = kDefaultInstances;
    std::optional<std::string> frame;
    std::optional<std::string> tensor;
};

void add_common(CLI::App* sub, CliState& st, bool with_scene) {
    if (with_scene) {
        sub->add_option("scene", st.scene_path, "scene file")->required();
        sub->add_option("--samples", st.samples, "sample-point count (default 3)")->check(CLI::Range(1u, 64u));
        sub->add_option("--mode", st.mode, "override the scene mode")->check(CLI::IsMember({"real", "complex"}));
    }
    sub->add_option("--output", st.output, "also write the report to this path");
    sub->add_option("--seed", st.seed, "seed for randomized checks");
    sub->add_flag("--json", st.json, "emit the report as JSON");
    sub->add_flag("--timing", st.timing, "include elapsed times");
}

void add_selection(CLI::App* sub, CliState& st) {
    sub->add_option("--frame", st.frame, "dirac object to use");
    sub->add_option("--tensor", st.tensor, "tensor object to use");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CliState st;
    CLI::App app{"Dirac-Nijenhuis structure checker"};
    app.require_subcommand(1);
    auto* check = app.add_subcommand("check", "run the check requests of a scene");
    add_common(check, st, true);
    auto* hier = app.add_subcommand("hierarchy", "members of the hierarchy of a frame");
    add_common(hier, st, true);
    add_selection(hier, st);
    hier->add_option("--side", st.side, "n0 for (r^n, id), 0n for (id, r*^n)")->check(CLI::IsMember({"n0", "0n"}));
    hier->add_option("--n", st.n, "number of members")->check(CLI::Range(1u, 12u));
    auto* tr = app.add_subcommand("traces", "traces of powers of the tensor and their brackets");
    add_common(tr, st, true);
    add_selection(tr, st);
    tr->add_option("--jmax", st.jmax, "highest power")->check(CLI::Range(1u, 12u));
    auto* holo = app.add_subcommand("holomorphic", "holomorphic Dirac check and the map to the complexification");
    add_common(holo, st, true);
    add_selection(holo, st);
    auto* alg = app.add_subcommand("algebroid", "the frame as a Lie algebroid with its IM data");
    add_common(alg, st, true);
    add_selection(alg, st);
    auto* self = app.add_subcommand("selftest", "run the built-in identity suite");
    add_common(self, st, false);
    self->add_option("--instances", st.instances, "random instances per chart")->check(CLI::Range(1u, 1000u));

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "dnk: " << e.what() << "\n";
        return 3;
    }

    Report rep;
    try {
        if (self->parsed()) {
            rep = run_selftest(st.seed, st.instances, st.timing);
        } else {
            SceneOptions opts;
            if (st.mode == "real") opts.mode = Mode::real;
            if (st.mode == "complex") opts.mode = Mode::complex;
            Scene scene;
            try {
                scene = load_scene(st.scene_path, opts);
            } catch (const SceneError& e) {
                err << st.scene_path << ":" << (e.line > 0 ? e.what() : std::string("0:0: ") + e.what()) << "\n";
                return 3;
            }
            const unsigned samples = st.samples.value_or(scene.samples.value_or(kDefaultSamples));
            const Selection sel{st.frame, st.tensor};
            if (check->parsed()) {
                rep = run_check(scene, samples, st.timing);
            } else if (hier->parsed()) {
                rep = run_hierarchy(scene, samples, st.side == "n0" ? HierarchySide::n0 : HierarchySide::zero_n, st.n,
                                    sel);
            } else if (tr->parsed()) {
                rep = run_traces(scene, samples, st.jmax, sel);
            } else if (holo->parsed()) {
                rep = run_holomorphic(scene, samples, sel);
            } else {
                rep = run_algebroid(scene, samples, sel);
            }
            rep.timing = st.timing;
        }
    } catch (const SceneError& e) {
        err << st.scene_path << ": error: " << e.message << "\n";
        return 3;
    } catch (const std::exception& e) {
        err << "dnk: internal error: " << e.what() << "\n";
        return 3;
    }

    const std::string text = st.json ? rep.to_json() : rep.to_text();
    out << text;
    if (st.output) {
        std::ofstream f(*st.output, std::ios::binary);
        f << text;
        if (!f) {
            err << "dnk: cannot write '" << *st.output << "'\n";
            return 3;
        }
    }
    return rep.exit_code();
}

}  // namespace dnk::cli
