#ifndef DSMT_TYPES_HPP
#define DSMT_TYPES_HPP

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dsmt {

/// Dense index of a simplex inside its host complex.
using SimplexId = int;
/// Vertex label; arbitrary integers, only their order and identity matter.
using VertexId = long long;

/// An open simplex, stored by its strictly increasing vertex list.
struct Simplex {
    std::vector<VertexId> vertices;

    int dim() const { return static_cast<int>(vertices.size()) - 1; }
};

enum class ErrorCode {
    MissingFace,
    DuplicateSimplex,
    BadSimplex,
    NotAMorseFunction,
    NotAMatching,
    CyclicField,
    NotAComplex,
    InvalidStratification,
    NotADSMF,
    NonInjectiveVertexField,
    NonRespectingField,
    ComplexTooLarge,
    ParseError,
};

/// Library error. `witnesses` holds the offending simplex ids when the
/// failure is attributable to concrete simplices (offender lists, cycle
/// members, missing faces).
class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, std::string message, std::vector<SimplexId> witnesses = {})
        : std::runtime_error(std::move(message)), code_(code), witnesses_(std::move(witnesses)) {}

    ErrorCode code() const { return code_; }
    const std::vector<SimplexId>& witnesses() const { return witnesses_; }

  private:
    ErrorCode code_;
    std::vector<SimplexId> witnesses_;
};

} // namespace dsmt

#endif
