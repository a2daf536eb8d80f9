#include "dsmt/cli.hpp"

#include <atomic>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "dsmt/homology.hpp"
#include "dsmt/io.hpp"
#include "dsmt/pointdata.hpp"
#include "dsmt/stratify.hpp"
#include "dsmt/synthetic.hpp"

namespace dsmt::cli {

namespace {

using nlohmann::json;

int exit_code_for(const Error& e) {
    switch (e.code()) {
        case ErrorCode::ParseError: return 2;
        case ErrorCode::ComplexTooLarge: return 3;
        default: return 1;
    }
}

void emit(const std::string& text, const std::string& path) {
    if (path.empty() || path == "-")
        std::cout << text;
    else
        io::write_file(path, text);
}

struct LoadedInput {
    Complex k;
    ScalarField f;
    std::optional<Stratification> strata;
};

LoadedInput load(const std::string& complex_path, const std::string& strata_path,
                 bool need_values = true) {
    io::ComplexFile cf = io::read_complex_file(complex_path);
    LoadedInput in;
    in.k = std::move(cf.k);
    if (cf.f)
        in.f = std::move(*cf.f);
    else if (need_values)
        throw Error(ErrorCode::ParseError, "complex file carries no simplex values");
    else
        in.f.value.assign(in.k.size(), 0.0);
    if (!strata_path.empty())
        in.strata = io::read_stratification_file(strata_path, in.k);
    else if (cf.strata)
        in.strata = std::move(*cf.strata);
    return in;
}

std::string describe(const Complex& k, SimplexId id) {
    std::ostringstream out;
    out << "#" << id << " {";
    const auto& verts = k.simplex(id).vertices;
    for (std::size_t i = 0; i < verts.size(); ++i) out << (i ? "," : "") << verts[i];
    out << "}";
    return out.str();
}

// Refine every stratum into its pieces; experimental pairing mode where
// simplices only pair inside a connected piece.
Stratification piece_refinement(const Complex& k, const Stratification& s) {
    Stratification out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        const auto parts = pieces(k, s.strata[i]);
        for (std::size_t p = 0; p < parts.size(); ++p) {
            out.names.push_back(s.names[i] +
                                (parts.size() == 1 ? "" : "/" + std::to_string(p)));
            out.strata.push_back(parts[p]);
        }
    }
    return out;
}

int cmd_validate(const std::string& path, const std::string& strata_path,
                 const std::string& json_out) {
    const LoadedInput in = load(path, strata_path);
    json report;
    bool ok = true;
    if (in.strata) {
        const StratReport sr = validate_stratification(in.k, *in.strata);
        report["stratification_ok"] = sr.ok;
        json viol = json::array();
        for (const auto& v : sr.violations) viol.push_back(v.detail);
        report["stratification_violations"] = viol;
        if (!sr.ok) {
            std::cout << "stratification: INVALID\n";
            for (const auto& v : sr.violations) std::cout << "  - " << v.detail << "\n";
            ok = false;
        } else {
            const DmfReport dr = check_dsmf(in.k, in.f, *in.strata);
            report["dsmf_ok"] = dr.ok;
            report["offenders"] = dr.offenders;
            if (dr.ok) {
                std::cout << "valid discrete stratified Morse function ("
                          << in.strata->size() << " strata)\n";
            } else {
                std::cout << "not a discrete stratified Morse function; offenders:\n";
                for (SimplexId id : dr.offenders)
                    std::cout << "  - " << describe(in.k, id) << " value " << in.f(id) << "\n";
                ok = false;
            }
        }
    } else {
        const DmfReport dr = check_dmf(in.k, in.f);
        report["dmf_ok"] = dr.ok;
        report["offenders"] = dr.offenders;
        if (dr.ok) {
            std::cout << "valid discrete Morse function\n";
        } else {
            std::cout << "not a discrete Morse function; offenders:\n";
            for (SimplexId id : dr.offenders)
                std::cout << "  - " << describe(in.k, id) << " value " << in.f(id) << "\n";
            ok = false;
        }
    }
    if (!json_out.empty()) emit(report.dump(2) + "\n", json_out);
    return ok ? 0 : 1;
}

int cmd_violators(const std::string& path, const std::string& json_out) {
    const LoadedInput in = load(path, "");
    const Classification c = classify(in.k, in.f);
    json out = json::array();
    for (SimplexId id : c.violators()) {
        const auto& fl = c.flags[static_cast<std::size_t>(id)];
        std::string kinds;
        if (fl.type1) kinds += "I";
        if (fl.type2) kinds += kinds.empty() ? "II" : "+II";
        if (fl.type3) kinds += kinds.empty() ? "III" : "+III";
        std::cout << describe(in.k, id) << " value " << in.f(id) << " type " << kinds << "\n";
        out.push_back({{"simplex", id}, {"value", in.f(id)}, {"type", kinds}});
    }
    std::cout << c.violators().size() << " violator(s)\n";
    if (!json_out.empty()) emit(out.dump(2) + "\n", json_out);
    return 0;
}

int cmd_stratify(const std::string& path, const std::string& out_path,
                 const std::string& trace_path, const std::string& remove_first,
                 bool check_maximal, std::size_t oracle_bound) {
    const LoadedInput in = load(path, "");
    StratifyOptions opt;
    if (!remove_first.empty()) {
        std::istringstream ss(remove_first);
        std::string tok;
        while (std::getline(ss, tok, ','))
            if (!tok.empty()) opt.priority.push_back(std::stoi(tok));
    }
    const auto [s, trace] = construct_stratification(in.k, in.f, opt);
    std::cerr << s.size() << " strata, " << trace.removals.size() << " violator(s) removed\n";
    emit(io::write_stratification(s), out_path);
    if (!trace_path.empty()) emit(io::write_trace(trace), trace_path);
    if (check_maximal) {
        const bool maximal = is_maximal(in.k, in.f, s, oracle_bound);
        std::cerr << "maximal: " << (maximal ? "yes" : "no") << "\n";
        return maximal ? 0 : 1;
    }
    return 0;
}

int cmd_gradient(const std::string& path, const std::string& strata_path, bool piece_local,
                 const std::string& out_path, const std::string& separating_path) {
    LoadedInput in = load(path, strata_path);
    VectorField v;
    if (in.strata) {
        Stratification s = piece_local ? piece_refinement(in.k, *in.strata) : *in.strata;
        if (piece_local) {
            // Piece-local mode bypasses whole-stratification validation;
            // pairing is simply restricted to each connected piece.
            v = VectorField{};
            for (const auto& st : s.strata) {
                VectorField vi = gradient_of(in.k, in.f, st);
                v.pairs.insert(v.pairs.end(), vi.pairs.begin(), vi.pairs.end());
            }
            v.normalize();
        } else {
            v = union_gradient(in.k, in.f, s);
        }
    } else {
        v = gradient_of(in.k, in.f);
    }
    std::cerr << v.pairs.size() << " pair(s)\n";
    emit(io::write_vector_field(v), out_path);
    if (!separating_path.empty()) {
        // A strata-separating discrete Morse function realizing the field.
        const Stratification s = in.strata ? *in.strata : Stratification::trivial(in.k);
        const SeparatingFunction sep = separating_function(in.k, s, v);
        nlohmann::json j;
        j["values"] = sep.g.value;
        j["thresholds"] = sep.thresholds;
        std::vector<std::string> order;
        for (int i : sep.stratum_order) order.push_back(s.names[static_cast<std::size_t>(i)]);
        j["stratum_order"] = order;
        emit(j.dump(2) + "\n", separating_path);
    }
    return 0;
}

int cmd_simplify(const std::string& path, const std::string& strata_path,
                 const std::string& out_path) {
    const LoadedInput in = load(path, strata_path);
    Stratification s =
        in.strata ? *in.strata : construct_stratification(in.k, in.f).first;
    const ReductionReport r = simplify(in.k, in.f, s);

    static const char* one[] = {"vertex", "edge", "triangle", "tetrahedron"};
    static const char* many[] = {"vertices", "edges", "triangles", "tetrahedra"};
    std::ostringstream line;
    for (std::size_t p = 0; p < r.critical_counts.size(); ++p) {
        if (r.critical_counts[p] == 0) continue;
        if (line.tellp() > 0) line << ", ";
        line << r.critical_counts[p] << " ";
        if (p < 4) line << (r.critical_counts[p] == 1 ? one[p] : many[p]);
        else line << p << "-cell(s)";
    }
    std::cout << "critical cells: " << line.str() << "\n";
    std::cout << r.collapses.size() << " Morse pair(s) removed\n";
    std::cout << "euler identity: " << (r.euler_identity() ? "ok" : "VIOLATED") << "\n";
    std::cout << "homology preserved: " << (r.homology_preserved() ? "ok" : "VIOLATED") << "\n";
    emit(io::write_reduction_report(r), out_path);
    return r.euler_identity() && r.homology_preserved() ? 0 : 1;
}

int cmd_extend(const std::string& path, const std::string& vertices_path,
               const std::string& mode, const std::string& strata_path,
               const std::string& bootstrap, double eps, const std::string& out_path) {
    LoadedInput in = load(path, strata_path, /*need_values=*/false);
    const VertexField f0 = io::read_vertex_field_file(vertices_path);
    for (SimplexId vs : in.k.vertex_simplices())
        if (!f0.value.count(in.k.simplex(vs).vertices[0]))
            throw Error(ErrorCode::ParseError, "vertex field misses vertex " +
                                                   std::to_string(in.k.simplex(vs).vertices[0]));

    json out;
    if (mode == "dmf") {
        const DmfExtension ext = extend_dmf(in.k, f0, eps);
        json pairs = json::array();
        for (const auto& [a, b] : ext.field.pairs) pairs.push_back(json::array({a, b}));
        out["pairs"] = std::move(pairs);
        out["values"] = ext.f_tilde.value;
        out["closeness"] = ext.closeness;
        std::cerr << ext.field.pairs.size() << " pair(s), closeness " << ext.closeness << "\n";
    } else {
        Stratification s;
        if (in.strata) {
            s = *in.strata;
        } else if (!bootstrap.empty()) {
            const ScalarField pre =
                bootstrap == "mean" ? mean_extension(in.k, f0) : maxf_extension(in.k, f0);
            s = construct_stratification(in.k, pre).first;
        } else {
            throw Error(ErrorCode::ParseError,
                        "stratified/global extension needs --strata or --bootstrap");
        }
        if (mode == "stratified") {
            const StratifiedExtension ext = extend_stratified(in.k, s, f0);
            out["values"] = ext.f_tilde.value;
            json fields = json::object();
            for (std::size_t i = 0; i < s.size(); ++i) {
                json pairs = json::array();
                for (const auto& [a, b] : ext.stratum_fields[i].pairs)
                    pairs.push_back(json::array({a, b}));
                fields[s.names[i]] = std::move(pairs);
            }
            out["stratum_fields"] = std::move(fields);
            out["unconsidered"] = ext.unconsidered;
            std::cerr << "stratified extension over " << s.size() << " strata; "
                      << ext.unconsidered.size() << " unconsidered simplex(es)\n";
        } else if (mode == "global") {
            const ScalarField g = extend_global(in.k, s, f0);
            out["values"] = g.value;
            std::cerr << "global extension over " << s.size() << " strata\n";
        } else {
            throw Error(ErrorCode::ParseError, "unknown extension mode " + mode);
        }
    }
    emit(out.dump(2) + "\n", out_path);
    return 0;
}

int cmd_report(const std::string& path, const std::string& strata_path,
               const std::string& json_out) {
    const LoadedInput in = load(path, strata_path);
    const SimplexSet all = SimplexSet::full(in.k.size());
    const BettiVector b = betti(in.k);
    const long long chi = euler_characteristic(in.k, all);

    json out;
    out["simplices"] = in.k.size();
    out["dimension"] = in.k.dim();
    out["euler_characteristic"] = chi;
    out["betti"] = b.b;
    std::cout << in.k.size() << " simplices, dimension " << in.k.dim() << "\n";
    std::cout << "euler characteristic " << chi << ", betti [";
    for (std::size_t i = 0; i < b.b.size(); ++i) std::cout << (i ? "," : "") << b.b[i];
    std::cout << "]\n";

    if (in.strata) {
        const StratifiedClassification sc = classify_stratified(in.k, in.f, *in.strata);
        long long gc = 0, lc = 0, gn = 0, ln = 0;
        for (auto st : sc.status) {
            if (st == StratStatus::GloballyCritical) ++gc;
            else if (st == StratStatus::LocallyCritical) ++lc;
            else if (st == StratStatus::GloballyNoncritical) ++gn;
            else ++ln;
        }
        out["globally_critical"] = gc;
        out["locally_critical"] = lc;
        out["globally_noncritical"] = gn;
        out["locally_noncritical"] = ln;
        json pcs = json::object();
        for (std::size_t i = 0; i < in.strata->size(); ++i)
            pcs[in.strata->names[i]] = pieces(in.k, in.strata->strata[i]).size();
        out["strata_pieces"] = std::move(pcs);
        std::cout << "critical " << (gc + lc) << " (global " << gc << ", local " << lc
                  << "), noncritical " << (gn + ln) << "\n";
    } else {
        const Classification c = classify(in.k, in.f);
        long long crit = 0, reg = 0, viol = 0;
        for (auto st : c.status) {
            if (st == SimplexStatus::Critical) ++crit;
            else if (st == SimplexStatus::Regular) ++reg;
            else ++viol;
        }
        out["critical"] = crit;
        out["regular"] = reg;
        out["violators"] = viol;
        std::cout << "critical " << crit << ", regular " << reg << ", violators " << viol
                  << "\n";
    }
    if (!json_out.empty()) emit(out.dump(2) + "\n", json_out);
    return 0;
}

int cmd_export_dot(const std::string& path, const std::string& field_path,
                   const std::string& strata_path, const std::string& out_path) {
    LoadedInput in = load(path, strata_path);
    std::optional<VectorField> v;
    if (!field_path.empty()) {
        v = io::read_vector_field_file(field_path);
    } else if (in.strata) {
        v = union_gradient(in.k, in.f, *in.strata);
    } else if (check_dmf(in.k, in.f).ok) {
        v = gradient_of(in.k, in.f);
    }
    emit(io::write_dot(in.k, &in.f, v ? &*v : nullptr), out_path);
    return 0;
}

int cmd_selftest(int cases, std::uint64_t seed, int jobs);

} // namespace

int run(const std::vector<std::string>& args) {
    CLI::App app{"discrete stratified Morse theory toolkit"};
    app.require_subcommand(1);

    std::string complex_path, strata_path, out_path, trace_path, json_out, field_path;
    std::string remove_first, vertices_path, mode = "dmf", bootstrap, separating_path;
    bool piece_local = false, check_maximal = false;
    double eps = 1e-3;
    int cases = 100, jobs = 1;
    std::size_t oracle_bound = 16;
    std::uint64_t seed = 0;
    if (const char* env = std::getenv("DSMT_SEED")) seed = std::strtoull(env, nullptr, 10);

    auto* validate = app.add_subcommand("validate", "check the discrete (stratified) Morse conditions");
    validate->add_option("complex", complex_path)->required();
    validate->add_option("--strata", strata_path);
    validate->add_option("--json", json_out);

    auto* violators = app.add_subcommand("violators", "list violators with their types");
    violators->add_option("complex", complex_path)->required();
    violators->add_option("--json", json_out);

    auto* stratify = app.add_subcommand("stratify", "construct a maximal stratification");
    stratify->add_option("complex", complex_path)->required();
    stratify->add_option("-o,--output", out_path);
    stratify->add_option("--trace", trace_path);
    stratify->add_option("--remove-first", remove_first,
                         "comma-separated simplex ids to remove first while they violate");
    stratify->add_flag("--check-maximal", check_maximal,
                       "run the brute-force coarsening oracle on the result");
    stratify->add_option("--max-oracle", oracle_bound,
                         "size bound for the maximality oracle");

    auto* gradient = app.add_subcommand("gradient", "gradient vector field (union over strata)");
    gradient->add_option("complex", complex_path)->required();
    gradient->add_option("--strata", strata_path);
    gradient->add_flag("--piece-local", piece_local,
                       "pair within connected strata pieces instead of whole strata");
    gradient->add_option("--separating", separating_path,
                         "also write a strata-separating Morse function realizing the field");
    gradient->add_option("-o,--output", out_path);

    auto* simplify_cmd = app.add_subcommand("simplify", "reduce by Morse pairs and verify homology");
    simplify_cmd->add_option("complex", complex_path)->required();
    simplify_cmd->add_option("--strata", strata_path);
    simplify_cmd->add_option("-o,--output", out_path);

    auto* extend = app.add_subcommand("extend", "extend a vertex field");
    extend->add_option("complex", complex_path)->required();
    extend->add_option("--vertices", vertices_path)->required();
    extend->add_option("--mode", mode)->check(CLI::IsMember({"dmf", "stratified", "global"}));
    extend->add_option("--strata", strata_path);
    extend->add_option("--bootstrap", bootstrap)->check(CLI::IsMember({"maxf", "mean"}));
    extend->add_option("--epsilon", eps);
    extend->add_option("-o,--output", out_path);

    auto* report = app.add_subcommand("report", "summary with Betti numbers");
    report->add_option("complex", complex_path)->required();
    report->add_option("--strata", strata_path);
    report->add_option("--json", json_out);

    auto* export_dot = app.add_subcommand("export-dot", "Hasse diagram with gradient arrows");
    export_dot->add_option("complex", complex_path)->required();
    export_dot->add_option("--field", field_path);
    export_dot->add_option("--strata", strata_path);
    export_dot->add_option("-o,--output", out_path);

    auto* selftest = app.add_subcommand("selftest", "randomized property suite");
    selftest->add_option("--cases", cases);
    selftest->add_option("--seed", seed);
    selftest->add_option("--jobs", jobs);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (validate->parsed()) return cmd_validate(complex_path, strata_path, json_out);
        if (violators->parsed()) return cmd_violators(complex_path, json_out);
        if (stratify->parsed())
            return cmd_stratify(complex_path, out_path, trace_path, remove_first,
                                check_maximal, oracle_bound);
        if (gradient->parsed())
            return cmd_gradient(complex_path, strata_path, piece_local, out_path,
                                separating_path);
        if (simplify_cmd->parsed()) return cmd_simplify(complex_path, strata_path, out_path);
        if (extend->parsed())
            return cmd_extend(complex_path, vertices_path, mode, strata_path, bootstrap, eps,
                              out_path);
        if (report->parsed()) return cmd_report(complex_path, strata_path, json_out);
        if (export_dot->parsed())
            return cmd_export_dot(complex_path, field_path, strata_path, out_path);
        if (selftest->parsed()) return cmd_selftest(cases, seed, static_cast<int>(jobs));
    } catch (const Error& e) {
        std::cerr << "error: " << e.what();
        if (!e.witnesses().empty()) {
            std::cerr << " [";
            for (std::size_t i = 0; i < e.witnesses().size(); ++i)
                std::cerr << (i ? "," : "") << e.witnesses()[i];
            std::cerr << "]";
        }
        std::cerr << "\n";
        return exit_code_for(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

namespace {

// One randomized soundness case; returns an error description or empty.
std::string selftest_case(std::uint64_t seed, int index) {
    synthetic::Rng rng(seed * 1000003ULL + static_cast<std::uint64_t>(index));
    const Complex k = synthetic::random_complex(rng);
    const ScalarField f = synthetic::random_field(rng, k);
    const auto [s, trace] = construct_stratification(k, f);

    if (!validate_stratification(k, s).ok) return "stratification invalid";
    if (!check_dsmf(k, f, s).ok) return "result not a DSMF";
    if (!violator_boundary_property(k, f, s)) return "violator boundary property failed";
    if (!minimal_stratum_is_subcomplex(k, s)) return "minimal stratum not a subcomplex";

    const VectorField v = union_gradient(k, f, s);
    if (!is_acyclic(k, v).acyclic) return "union gradient cyclic";
    const ReductionReport r = simplify(k, f, s);
    if (!r.euler_identity()) return "euler identity failed";
    if (!r.homology_preserved()) return "homology not preserved";

    const SeparatingFunction sep = separating_function(k, s, v);
    if (gradient_of(k, sep.g).pairs != v.pairs) return "separating function gradient mismatch";
    return "";
}

int cmd_selftest(int cases, std::uint64_t seed, int jobs) {
    std::atomic<int> failures{0};
    std::atomic<int> next{0};
    std::vector<std::string> messages(static_cast<std::size_t>(cases));

    auto worker = [&]() {
        while (true) {
            const int i = next.fetch_add(1);
            if (i >= cases) break;
            try {
                messages[static_cast<std::size_t>(i)] = selftest_case(seed, i);
            } catch (const std::exception& e) {
                messages[static_cast<std::size_t>(i)] = e.what();
            }
            if (!messages[static_cast<std::size_t>(i)].empty()) ++failures;
        }
    };
    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    for (int i = 0; i < cases; ++i)
        if (!messages[static_cast<std::size_t>(i)].empty())
            std::cout << "case " << i << ": " << messages[static_cast<std::size_t>(i)] << "\n";
    std::cout << (cases - failures.load()) << "/" << cases << " cases passed (seed " << seed
              << ")\n";
    return failures.load() == 0 ? 0 : 1;
}

} // namespace

int run(int argc, char** argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args);
}

} // namespace dsmt::cli
