#include "dsmt/fixtures.hpp"

#include <cmath>

namespace dsmt::fixtures {

namespace {
using Desc = std::vector<std::pair<std::vector<VertexId>, double>>;
}

std::pair<Complex, ScalarField> pentagon_down() {
    // Cycle 10-[1]-3-[5]-7-[9]-8-[6]-4-[2]-10, vertices named by value.
    const Desc d = {
        {{3}, 3},      {{4}, 4},      {{7}, 7},     {{8}, 8},     {{10}, 10},
        {{3, 10}, 1},  {{4, 10}, 2},  {{3, 7}, 5},  {{4, 8}, 6},  {{7, 8}, 9},
    };
    return build_complex(d);
}

std::pair<Complex, ScalarField> tetrahedron() {
    // Vertices 0..3 carry values 1,3,10,14.
    const Desc d = {
        {{0}, 1},         {{1}, 3},         {{2}, 10},        {{3}, 14},
        {{0, 1}, 2},      {{0, 2}, 4},      {{1, 2}, 7},      {{0, 3}, 8},
        {{1, 3}, 11},     {{2, 3}, 12},
        {{0, 1, 2}, 5},   {{0, 1, 3}, 6},   {{0, 2, 3}, 9},   {{1, 2, 3}, 13},
    };
    return build_complex(d);
}

std::pair<Complex, ScalarField> pentagon() {
    // Cycle 1-[0]-3-[4]-5-[7]-9-[8]-6-[2]-1, vertices named by value.
    const Desc d = {
        {{1}, 1},     {{3}, 3},     {{5}, 5},     {{6}, 6},     {{9}, 9},
        {{1, 3}, 0},  {{3, 5}, 4},  {{5, 9}, 7},  {{6, 9}, 8},  {{1, 6}, 2},
    };
    return build_complex(d);
}

std::pair<Complex, ScalarField> split_octagon() {
    // Junctions 30 and 31, joined by the boundary arcs 30-1-3-5-31 and
    // 30-20-19-25-31 and the chord 30-11-31. Vertices named by value.
    const Desc d = {
        {{30}, 30}, {{31}, 31}, {{1}, 1},   {{3}, 3},   {{5}, 5},
        {{11}, 11}, {{20}, 20}, {{19}, 19}, {{25}, 25},
        {{1, 30}, 0},   {{1, 3}, 2},    {{3, 5}, 4},    {{5, 31}, 6},
        {{11, 30}, 10}, {{11, 31}, 12}, {{20, 30}, 21}, {{19, 20}, 22},
        {{19, 25}, 27}, {{25, 31}, 24},
    };
    return build_complex(d);
}

std::pair<Complex, ScalarField> split_square() {
    // Corners 9,1,10,5 around the square, diagonal {9,10} valued 11.
    const Desc d = {
        {{9}, 9},   {{1}, 1},   {{10}, 10}, {{5}, 5},
        {{1, 9}, 2},   {{1, 10}, 3},  {{5, 10}, 6},  {{5, 9}, 7},  {{9, 10}, 11},
        {{1, 9, 10}, 4},  {{5, 9, 10}, 8},
    };
    return build_complex(d);
}

std::pair<Complex, ScalarField> circle() {
    const Desc d = {
        {{5}, 5}, {{1}, 1}, {{2}, 2},
        {{1, 5}, 0}, {{1, 2}, 3}, {{2, 5}, 4},
    };
    return build_complex(d);
}

Complex torus_grid(int rows, int cols) {
    std::vector<Simplex> simplices;
    auto vid = [&](int r, int c) {
        return static_cast<VertexId>(((r % rows + rows) % rows) * cols + ((c % cols + cols) % cols));
    };
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) simplices.push_back(Simplex{{vid(r, c)}});
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            simplices.push_back(Simplex{{vid(r, c), vid(r, c + 1)}});
            simplices.push_back(Simplex{{vid(r, c), vid(r + 1, c)}});
            simplices.push_back(Simplex{{vid(r, c), vid(r + 1, c + 1)}});
        }
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            simplices.push_back(Simplex{{vid(r, c), vid(r, c + 1), vid(r + 1, c + 1)}});
            simplices.push_back(Simplex{{vid(r, c), vid(r + 1, c), vid(r + 1, c + 1)}});
        }
    return Complex::from_simplices(std::move(simplices));
}

SimplexId by_value(const ScalarField& f, double value) {
    for (std::size_t i = 0; i < f.size(); ++i)
        if (std::abs(f.value[i] - value) < 1e-12) return static_cast<SimplexId>(i);
    throw Error(ErrorCode::BadSimplex, "no simplex carries the requested value");
}

} // namespace dsmt::fixtures
