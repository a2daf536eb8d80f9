#include "dsmt/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace dsmt::io {

using nlohmann::json;

namespace {

json parse(std::istream& in) {
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw Error(ErrorCode::ParseError, std::string("JSON parse failure: ") + e.what());
    }
}

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorCode::ParseError, "cannot open " + path);
    return in;
}

Stratification strata_from_name_map(const Complex& k,
                                    const std::map<std::string, std::vector<SimplexId>>& by_name) {
    Stratification s;
    for (const auto& [name, ids] : by_name) {
        for (SimplexId id : ids)
            if (id < 0 || static_cast<std::size_t>(id) >= k.size())
                throw Error(ErrorCode::ParseError,
                            "stratum " + name + " references simplex " + std::to_string(id) +
                                " outside the complex");
        s.names.push_back(name);
        s.strata.emplace_back(k.size(), ids);
    }
    return s;
}

} // namespace

ComplexFile read_complex(std::istream& in) {
    const json j = parse(in);
    if (!j.is_object() || !j.contains("simplices") || !j["simplices"].is_array())
        throw Error(ErrorCode::ParseError, "complex file needs a \"simplices\" array");

    ComplexFile out;
    std::vector<Simplex> simplices;
    std::vector<double> values;
    std::size_t with_value = 0;
    try {
        for (const auto& js : j["simplices"]) {
            Simplex s;
            for (const auto& v : js.at("vertices")) s.vertices.push_back(v.get<VertexId>());
            simplices.push_back(std::move(s));
            if (js.contains("value")) {
                values.push_back(js["value"].get<double>());
                ++with_value;
            } else {
                values.push_back(0.0);
            }
        }
    } catch (const json::exception& e) {
        throw Error(ErrorCode::ParseError, std::string("bad simplex entry: ") + e.what());
    }
    if (with_value != 0 && with_value != simplices.size())
        throw Error(ErrorCode::ParseError, "values must be given on every simplex or none");

    out.k = Complex::from_simplices(std::move(simplices));
    if (with_value == out.k.size() && with_value > 0) out.f = ScalarField{std::move(values)};

    if (j.contains("strata")) {
        if (!j["strata"].is_object())
            throw Error(ErrorCode::ParseError, "\"strata\" must map simplex indices to names");
        std::map<std::string, std::vector<SimplexId>> by_name;
        for (const auto& [key, name] : j["strata"].items()) {
            SimplexId id;
            try {
                id = static_cast<SimplexId>(std::stol(key));
            } catch (...) {
                throw Error(ErrorCode::ParseError, "bad simplex index \"" + key + "\" in strata");
            }
            if (!name.is_string())
                throw Error(ErrorCode::ParseError, "stratum name must be a string");
            by_name[name.get<std::string>()].push_back(id);
        }
        out.strata = strata_from_name_map(out.k, by_name);
    }
    return out;
}

ComplexFile read_complex_file(const std::string& path) {
    auto in = open_input(path);
    return read_complex(in);
}

std::string write_complex(const Complex& k, const ScalarField* f, const Stratification* s) {
    json j;
    j["simplices"] = json::array();
    for (std::size_t i = 0; i < k.size(); ++i) {
        json js;
        js["vertices"] = k.simplex(static_cast<SimplexId>(i)).vertices;
        if (f) js["value"] = f->value[i];
        j["simplices"].push_back(std::move(js));
    }
    if (s) {
        json names = json::object();
        for (std::size_t si = 0; si < s->size(); ++si)
            for (SimplexId id : s->strata[si].members())
                names[std::to_string(id)] = s->names[si];
        j["strata"] = std::move(names);
    }
    return j.dump(2) + "\n";
}

Stratification read_stratification(std::istream& in, const Complex& k) {
    const json j = parse(in);
    if (!j.is_object())
        throw Error(ErrorCode::ParseError, "stratification file must be a JSON object");
    std::map<std::string, std::vector<SimplexId>> by_name;
    try {
        for (const auto& [name, ids] : j.items())
            for (const auto& id : ids) by_name[name].push_back(id.get<SimplexId>());
    } catch (const json::exception& e) {
        throw Error(ErrorCode::ParseError, std::string("bad stratification entry: ") + e.what());
    }
    return strata_from_name_map(k, by_name);
}

Stratification read_stratification_file(const std::string& path, const Complex& k) {
    auto in = open_input(path);
    return read_stratification(in, k);
}

std::string write_stratification(const Stratification& s) {
    json j = json::object();
    for (std::size_t i = 0; i < s.size(); ++i) j[s.names[i]] = s.strata[i].members();
    return j.dump(2) + "\n";
}

VertexField read_vertex_field(std::istream& in) {
    const json j = parse(in);
    if (!j.is_object() || !j.contains("vertices") || !j["vertices"].is_object())
        throw Error(ErrorCode::ParseError, "vertex field file needs a \"vertices\" object");
    VertexField f0;
    try {
        for (const auto& [key, val] : j["vertices"].items())
            f0.value[static_cast<VertexId>(std::stoll(key))] = val.get<double>();
    } catch (const json::exception& e) {
        throw Error(ErrorCode::ParseError, std::string("bad vertex entry: ") + e.what());
    } catch (const std::exception&) {
        throw Error(ErrorCode::ParseError, "vertex ids must be integers");
    }
    return f0;
}

VertexField read_vertex_field_file(const std::string& path) {
    auto in = open_input(path);
    return read_vertex_field(in);
}

std::string write_vertex_field(const VertexField& f0) {
    json verts = json::object();
    for (const auto& [v, x] : f0.value) verts[std::to_string(v)] = x;
    json j;
    j["vertices"] = std::move(verts);
    return j.dump(2) + "\n";
}

VectorField read_vector_field(std::istream& in) {
    const json j = parse(in);
    if (!j.is_array())
        throw Error(ErrorCode::ParseError, "vector field file must be a JSON array of pairs");
    VectorField v;
    try {
        for (const auto& p : j) {
            if (!p.is_array() || p.size() != 2)
                throw Error(ErrorCode::ParseError, "each pair must be a two-element array");
            v.pairs.emplace_back(p[0].get<SimplexId>(), p[1].get<SimplexId>());
        }
    } catch (const json::exception& e) {
        throw Error(ErrorCode::ParseError, std::string("bad pair entry: ") + e.what());
    }
    v.normalize();
    return v;
}

VectorField read_vector_field_file(const std::string& path) {
    auto in = open_input(path);
    return read_vector_field(in);
}

std::string write_vector_field(const VectorField& v) {
    json j = json::array();
    for (const auto& [a, b] : v.pairs) j.push_back(json::array({a, b}));
    return j.dump(2) + "\n";
}

std::string write_scalar_field(const ScalarField& f) {
    json j;
    j["values"] = f.value;
    return j.dump(2) + "\n";
}

std::string write_trace(const AlgorithmTrace& trace) {
    json j;
    j["removals"] = trace.removals;
    j["initial_violators"] = trace.initial_violators;
    j["dropped"] = trace.dropped;
    j["removed_in_closure"] = trace.in_closure;
    j["raw_frontier"] = trace.raw_frontier;
    j["raw_interior"] = trace.raw_interior;
    j["refinements"] = trace.refinements;
    json grad = json::array();
    for (const auto& [a, b] : trace.stratum_gradient.pairs) grad.push_back(json::array({a, b}));
    j["stratum_gradient"] = std::move(grad);
    return j.dump(2) + "\n";
}

std::string write_reduction_report(const ReductionReport& r) {
    json j;
    j["critical_counts"] = r.critical_counts;
    json coll = json::array();
    for (const auto& [a, b] : r.collapses) coll.push_back(json::array({a, b}));
    j["collapses"] = std::move(coll);
    j["morse_betti"] = r.morse_betti.b;
    j["complex_betti"] = r.complex_betti.b;
    j["euler_characteristic"] = r.euler;
    j["euler_identity"] = r.euler_identity();
    j["homology_preserved"] = r.homology_preserved();
    return j.dump(2) + "\n";
}

std::string write_dot(const Complex& k, const ScalarField* f, const VectorField* v) {
    std::vector<SimplexId> partner(k.size(), -1);
    if (v)
        for (const auto& [a, b] : v->pairs) partner[static_cast<std::size_t>(a)] = b;

    std::ostringstream out;
    out << "digraph hasse {\n  rankdir=BT;\n  node [shape=box, fontsize=10];\n";
    for (std::size_t i = 0; i < k.size(); ++i) {
        out << "  s" << i << " [label=\"{";
        const auto& verts = k.simplex(static_cast<SimplexId>(i)).vertices;
        for (std::size_t p = 0; p < verts.size(); ++p)
            out << (p ? "," : "") << verts[p];
        out << "}";
        if (f) out << " : " << f->value[i];
        out << "\"];\n";
    }
    for (std::size_t i = 0; i < k.size(); ++i) {
        for (SimplexId tau : k.cofacets(static_cast<SimplexId>(i))) {
            if (partner[i] == tau)
                out << "  s" << i << " -> s" << tau << " [color=green, penwidth=2];\n";
            else
                out << "  s" << tau << " -> s" << i << " [color=gray];\n";
        }
    }
    out << "}\n";
    return out.str();
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path);
    if (!out)
        throw Error(ErrorCode::ParseError, "cannot write " + path);
    out << contents;
}

} // namespace dsmt::io
