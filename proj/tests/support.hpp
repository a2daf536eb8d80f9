#ifndef DSMT_TESTS_SUPPORT_HPP
#define DSMT_TESTS_SUPPORT_HPP

#include <cstdlib>
#include <string>
#include <vector>

#include "dsmt/complex.hpp"
#include "dsmt/fixtures.hpp"
#include "dsmt/simplex_set.hpp"

namespace dsmt::testing {

using Desc = std::vector<std::pair<std::vector<VertexId>, double>>;

inline std::pair<Complex, ScalarField> make(const Desc& d) { return build_complex(d); }

/// Segment a(0) -- ab -- b(1) with the given values.
inline std::pair<Complex, ScalarField> segment(double fa = 0, double fb = 1, double fab = 2) {
    return make({{{0}, fa}, {{1}, fb}, {{0, 1}, fab}});
}

inline SimplexSet set_of(const Complex& k, std::vector<SimplexId> ids) {
    return SimplexSet(k.size(), std::move(ids));
}

/// Ids of the simplices carrying the given fixture values.
inline std::vector<SimplexId> ids_by_values(const ScalarField& f, std::vector<double> values) {
    std::vector<SimplexId> out;
    for (double v : values) out.push_back(fixtures::by_value(f, v));
    std::sort(out.begin(), out.end());
    return out;
}

inline std::uint64_t suite_seed() {
    if (const char* env = std::getenv("DSMT_SEED")) return std::strtoull(env, nullptr, 10);
    return 20240915u;
}

} // namespace dsmt::testing

#endif
