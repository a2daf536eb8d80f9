#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>

#include "dsmt/cli.hpp"
#include "dsmt/fixtures.hpp"
#include "dsmt/io.hpp"
#include "dsmt/stratify.hpp"
#include "support.hpp"

using namespace dsmt;
using namespace dsmt::testing;

namespace {

struct TempDir {
    std::filesystem::path path;
    TempDir() {
        path = std::filesystem::temp_directory_path() /
               ("dsmt_test_" + std::to_string(::getpid()) + "_" +
                std::to_string(counter()++));
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
    static int& counter() {
        static int c = 0;
        return c;
    }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

std::string slurp(const std::string& p) {
    std::ifstream in(p);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

} // namespace

TEST_CASE("complex json round trip") {
    auto [k, f] = fixtures::pentagon_down();
    const auto [s, trace] = construct_stratification(k, f);
    const std::string text = io::write_complex(k, &f, &s);

    std::istringstream in(text);
    const io::ComplexFile cf = io::read_complex(in);
    REQUIRE(cf.f);
    REQUIRE(cf.strata);
    CHECK(cf.k.size() == k.size());
    for (std::size_t i = 0; i < k.size(); ++i) {
        CHECK(cf.k.simplex(static_cast<SimplexId>(i)).vertices ==
              k.simplex(static_cast<SimplexId>(i)).vertices);
        CHECK(cf.f->value[i] == f.value[i]);
    }
    // Same strata as a name -> member-set map.
    REQUIRE(cf.strata->size() == s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        const int j = cf.strata->index_of(s.names[i]);
        REQUIRE(j >= 0);
        CHECK(cf.strata->strata[static_cast<std::size_t>(j)] == s.strata[i]);
    }

    // Determinism: writing the parsed data again is byte-identical.
    CHECK(io::write_complex(cf.k, &*cf.f, &*cf.strata) == text);
}

TEST_CASE("stratification and field round trips") {
    auto [k, f] = fixtures::tetrahedron();
    const auto [s, trace] = construct_stratification(k, f);
    const std::string stext = io::write_stratification(s);
    std::istringstream sin(stext);
    const Stratification s2 = io::read_stratification(sin, k);
    CHECK(io::write_stratification(s2) == stext);

    const VectorField v = union_gradient(k, f, s);
    const std::string vtext = io::write_vector_field(v);
    std::istringstream vin(vtext);
    CHECK(io::read_vector_field(vin).pairs == v.pairs);

    VertexField f0;
    f0.value = {{-3, 0.5}, {12, 1.25}};
    const std::string ftext = io::write_vertex_field(f0);
    std::istringstream fin(ftext);
    CHECK(io::read_vertex_field(fin).value == f0.value);
}

TEST_CASE("parse failures carry the parse error code") {
    std::istringstream bad("{nope");
    CHECK_THROWS_AS(io::read_complex(bad), Error);
    try {
        std::istringstream again("{nope");
        io::read_complex(again);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ParseError);
    }
}

TEST_CASE("cli validate") {
    TempDir dir;
    auto [k, f] = fixtures::pentagon_down();
    const std::string complex_path = dir.file("pd.json");
    io::write_file(complex_path, io::write_complex(k, &f, nullptr));

    CHECK(cli::run({"validate", complex_path}) == 1); // violators present

    const auto [s, trace] = construct_stratification(k, f);
    const std::string strata_path = dir.file("pd_strata.json");
    io::write_file(strata_path, io::write_stratification(s));
    CHECK(cli::run({"validate", complex_path, "--strata", strata_path}) == 0);

    io::write_file(dir.file("broken.json"), "{");
    CHECK(cli::run({"validate", dir.file("broken.json")}) == 2);
}

TEST_CASE("cli stratify, gradient, simplify, report") {
    TempDir dir;
    auto [k, f] = fixtures::tetrahedron();
    const std::string complex_path = dir.file("tet.json");
    io::write_file(complex_path, io::write_complex(k, &f, nullptr));

    const std::string strata_path = dir.file("strata.json");
    const std::string trace_path = dir.file("trace.json");
    CHECK(cli::run({"stratify", complex_path, "-o", strata_path, "--trace", trace_path}) == 0);
    const Stratification s = io::read_stratification_file(strata_path, k);
    CHECK(s.size() == 5);
    CHECK(slurp(trace_path).find("removals") != std::string::npos);

    const std::string field_path = dir.file("field.json");
    CHECK(cli::run({"gradient", complex_path, "--strata", strata_path, "-o", field_path}) == 0);
    CHECK(io::read_vector_field_file(field_path).pairs.size() == 3);

    const std::string report_path = dir.file("reduction.json");
    CHECK(cli::run({"simplify", complex_path, "-o", report_path}) == 0);
    CHECK(slurp(report_path).find("\"homology_preserved\": true") != std::string::npos);

    CHECK(cli::run({"report", complex_path, "--json", dir.file("report.json")}) == 0);
    CHECK(slurp(dir.file("report.json")).find("\"euler_characteristic\": 2") !=
          std::string::npos);

    // Determinism: stratify twice, byte-identical output.
    const std::string second = dir.file("strata2.json");
    CHECK(cli::run({"stratify", complex_path, "-o", second}) == 0);
    CHECK(slurp(strata_path) == slurp(second));
}

TEST_CASE("cli gradient without strata requires a discrete Morse function") {
    TempDir dir;
    auto [k, f] = fixtures::pentagon_down();
    const std::string complex_path = dir.file("pd.json");
    io::write_file(complex_path, io::write_complex(k, &f, nullptr));
    CHECK(cli::run({"gradient", complex_path, "-o", dir.file("v.json")}) == 1);
}

TEST_CASE("cli extend") {
    TempDir dir;
    auto [k, f] = fixtures::pentagon_down();
    const std::string complex_path = dir.file("pd_plain.json");
    io::write_file(complex_path, io::write_complex(k, nullptr, nullptr));

    VertexField f0;
    for (SimplexId vs : k.vertex_simplices())
        f0.value[k.simplex(vs).vertices[0]] = f(vs);
    const std::string vert_path = dir.file("vertices.json");
    io::write_file(vert_path, io::write_vertex_field(f0));

    CHECK(cli::run({"extend", complex_path, "--vertices", vert_path, "--mode", "dmf", "-o",
                    dir.file("ext.json")}) == 0);
    CHECK(cli::run({"extend", complex_path, "--vertices", vert_path, "--mode", "global",
                    "--bootstrap", "maxf", "-o", dir.file("global.json")}) == 0);
    CHECK(cli::run({"extend", complex_path, "--vertices", vert_path, "--mode", "stratified"}) ==
          2); // needs --strata or --bootstrap
}

TEST_CASE("cli export-dot and violators") {
    TempDir dir;
    auto [k, f] = fixtures::circle();
    const std::string complex_path = dir.file("circle.json");
    io::write_file(complex_path, io::write_complex(k, &f, nullptr));

    CHECK(cli::run({"violators", complex_path, "--json", dir.file("v.json")}) == 0);
    const std::string text = slurp(dir.file("v.json"));
    CHECK(text.find("\"type\": \"I\"") != std::string::npos);
    CHECK(text.find("\"type\": \"II\"") != std::string::npos);

    const auto [s, trace] = construct_stratification(k, f);
    const std::string strata_path = dir.file("s.json");
    io::write_file(strata_path, io::write_stratification(s));
    CHECK(cli::run({"export-dot", complex_path, "--strata", strata_path, "-o",
                    dir.file("h.dot")}) == 0);
    const std::string dot = slurp(dir.file("h.dot"));
    CHECK(dot.find("digraph") != std::string::npos);
    CHECK(dot.find("color=green") != std::string::npos);
}

TEST_CASE("cli selftest") {
    CHECK(cli::run({"selftest", "--cases", "12", "--seed", "7", "--jobs", "2"}) == 0);
}

TEST_CASE("bundled fixture files match the built-in fixtures") {
    const std::string root = FIXTURE_DIR;
    const std::vector<std::pair<std::string, std::pair<Complex, ScalarField>>> expect = {
        {"pentagon_down.json", fixtures::pentagon_down()},
        {"tetrahedron.json", fixtures::tetrahedron()},
        {"pentagon.json", fixtures::pentagon()},
        {"split_octagon.json", fixtures::split_octagon()},
        {"split_square.json", fixtures::split_square()},
        {"circle.json", fixtures::circle()},
    };
    for (const auto& [file, kf] : expect) {
        const io::ComplexFile cf = io::read_complex_file(root + "/" + file);
        const auto& [k, f] = kf;
        REQUIRE(cf.f);
        REQUIRE(cf.k.size() == k.size());
        for (std::size_t i = 0; i < k.size(); ++i) {
            CHECK(cf.k.simplex(static_cast<SimplexId>(i)).vertices ==
                  k.simplex(static_cast<SimplexId>(i)).vertices);
            CHECK(cf.f->value[i] == f.value[i]);
        }
    }
}
