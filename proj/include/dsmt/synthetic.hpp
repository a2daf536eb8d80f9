#ifndef DSMT_SYNTHETIC_HPP
#define DSMT_SYNTHETIC_HPP

#include <random>

#include "dsmt/complex.hpp"
#include "dsmt/morse.hpp"

namespace dsmt::synthetic {

using Rng = std::mt19937_64;

/// A random complex with at most `max_simplices` simplices, built from
/// random maximal simplices closed downward. May be disconnected.
Complex random_complex(Rng& rng, std::size_t max_simplices = 20, int max_dim = 3);

/// Independent uniform values on every simplex; ties have probability zero.
ScalarField random_field(Rng& rng, const Complex& k);

/// A random injective field on the vertices.
VertexField random_vertex_field(Rng& rng, const Complex& k);

/// A random acyclic matching, grown pair by pair with acyclicity checks.
VectorField random_acyclic_matching(Rng& rng, const Complex& k);

/// A random discrete Morse function: an integer-valued function realizing a
/// random acyclic matching as its gradient.
ScalarField random_dmf(Rng& rng, const Complex& k);

} // namespace dsmt::synthetic

#endif
