#ifndef DSMT_FIXTURES_HPP
#define DSMT_FIXTURES_HPP

#include <utility>

#include "dsmt/complex.hpp"

namespace dsmt::fixtures {

/// Boundary of an upside-down pentagon. Vertices valued 10,3,4,7,8 and edges
/// 1,2,5,6,9 around the cycle 10-[1]-3-[5]-7-[9]-8-[6]-4-[2]-10. Violators
/// are the simplices valued 10, 1 and 2.
std::pair<Complex, ScalarField> pentagon_down();

/// Boundary of a tetrahedron on values 1..14: vertices 1,3,10,14; edges
/// 2,4,7,8,11,12; triangles 5,6,9,13. Face relations recovered from the
/// documented upper/lower sets of every simplex; the remaining labelling
/// freedom is pinned by the published interior piece {4,5,7,9,12,13}.
std::pair<Complex, ScalarField> tetrahedron();

/// A pentagon whose only violators are the edge valued 0 and the vertex
/// valued 9; reconstruction with critical values {0,1,3,7,8,9} and six
/// strata pieces.
std::pair<Complex, ScalarField> pentagon();

/// An octagon split by a two-edge chord: two junction vertices (30 and 31)
/// and three arcs. Reconstruction: violators {0,10,24,30,31} and removals
/// {30,31} only.
std::pair<Complex, ScalarField> split_octagon();

/// A solid square split into two triangles along the diagonal valued 11;
/// violators {9,10,11} and every simplex critical after stratifying.
std::pair<Complex, ScalarField> split_square();

/// A triangle-boundary circle whose vertex valued 5 and edge valued 0
/// violate the discrete Morse conditions.
std::pair<Complex, ScalarField> circle();

/// Triangulated torus grid, rows x cols quads split into triangles;
/// 6 * rows * cols simplices, all of bounded degree. Values are zero.
Complex torus_grid(int rows, int cols);

/// The simplex id carrying a given value (fixtures use injective values).
SimplexId by_value(const ScalarField& f, double value);

} // namespace dsmt::fixtures

#endif
