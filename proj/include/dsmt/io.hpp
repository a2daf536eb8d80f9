#ifndef DSMT_IO_HPP
#define DSMT_IO_HPP

#include <iosfwd>
#include <optional>
#include <string>

#include "dsmt/complex.hpp"
#include "dsmt/morse.hpp"
#include "dsmt/strat.hpp"
#include "dsmt/stratify.hpp"

namespace dsmt::io {

/// Contents of a complex file: simplices with optional values and an
/// optional inline stratification.
struct ComplexFile {
    Complex k;
    std::optional<ScalarField> f;
    std::optional<Stratification> strata;
};

/// Complex format: {"simplices": [{"vertices": [...], "value": x}, ...],
/// "strata": {"<simplex index>": "<stratum name>"}} with "value" and
/// "strata" optional. Throws ParseError.
ComplexFile read_complex(std::istream& in);
ComplexFile read_complex_file(const std::string& path);
std::string write_complex(const Complex& k, const ScalarField* f, const Stratification* s);

/// Stratification format: a JSON object mapping stratum names to id lists.
Stratification read_stratification(std::istream& in, const Complex& k);
Stratification read_stratification_file(const std::string& path, const Complex& k);
std::string write_stratification(const Stratification& s);

/// Vertex field format: {"vertices": {"<vertex id>": value, ...}}.
VertexField read_vertex_field(std::istream& in);
VertexField read_vertex_field_file(const std::string& path);
std::string write_vertex_field(const VertexField& f0);

/// Vector field format: a JSON list of [sigma, tau] id pairs.
VectorField read_vector_field(std::istream& in);
VectorField read_vector_field_file(const std::string& path);
std::string write_vector_field(const VectorField& v);

std::string write_scalar_field(const ScalarField& f);

std::string write_trace(const AlgorithmTrace& trace);

std::string write_reduction_report(const ReductionReport& r);

/// Hasse diagram in DOT with the gradient pairs drawn as reversed green
/// arrows.
std::string write_dot(const Complex& k, const ScalarField* f, const VectorField* v);

void write_file(const std::string& path, const std::string& contents);

} // namespace dsmt::io

#endif
