#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "dsmt/fixtures.hpp"
#include "dsmt/homology.hpp"
#include "dsmt/pointdata.hpp"
#include "dsmt/stratify.hpp"
#include "dsmt/synthetic.hpp"
#include "support.hpp"

using namespace dsmt;
using namespace dsmt::testing;

namespace {

VertexField vf(std::vector<std::pair<VertexId, double>> entries) {
    VertexField f0;
    for (auto& [v, x] : entries) f0.value[v] = x;
    return f0;
}

bool has_pair(const Complex& k, const VectorField& v, std::vector<VertexId> a,
              std::vector<VertexId> b) {
    const auto ia = k.find(a), ib = k.find(b);
    REQUIRE(ia);
    REQUIRE(ib);
    return std::find(v.pairs.begin(), v.pairs.end(),
                     std::make_pair(*ia, *ib)) != v.pairs.end();
}

} // namespace

TEST_CASE("maxf extension") {
    auto [k, f] = make({{{0}, 0}, {{1}, 0}, {{2}, 0},
                        {{0, 1}, 0}, {{0, 2}, 0}, {{1, 2}, 0}, {{0, 1, 2}, 0}});
    const VertexField f0 = vf({{0, 0}, {1, 1}, {2, 2}});
    const ScalarField m = maxf_extension(k, f0);
    CHECK(m(*k.find({0})) == 0);
    CHECK(m(*k.find({0, 1})) == 1);
    CHECK(m(*k.find({0, 1, 2})) == 2);

    const ScalarField mean = mean_extension(k, f0);
    CHECK(mean(*k.find({0, 1, 2})) == doctest::Approx(1.0));

    CHECK_THROWS_AS(maxf_extension(k, vf({{0, 1}, {1, 1}, {2, 2}})), Error);
}

TEST_CASE("extension on a path") {
    auto [k, f] = make({{{0}, 0}, {{1}, 0}, {{2}, 0}, {{0, 1}, 0}, {{1, 2}, 0}});
    const VertexField f0 = vf({{0, 0}, {1, 1}, {2, 2}});
    const DmfExtension ext = extend_dmf(k, f0, 0.1);

    CHECK(ext.field.pairs.size() == 2);
    CHECK(has_pair(k, ext.field, {1}, {0, 1}));
    CHECK(has_pair(k, ext.field, {2}, {1, 2}));
    const SimplexSet crit = critical_cells(k, ext.field, SimplexSet::full(k.size()));
    CHECK(crit == set_of(k, {*k.find({0})}));

    CHECK(check_dmf(k, ext.f_tilde).ok);
    CHECK(gradient_of(k, ext.f_tilde).pairs == ext.field.pairs);
    CHECK(morse_chain_complex(k, ext.field, SimplexSet::full(k.size())).betti().b ==
          std::vector<long long>{1});
}

TEST_CASE("extension on a triangle boundary") {
    auto [k, f] = make({{{0}, 0}, {{1}, 0}, {{2}, 0},
                        {{0, 1}, 0}, {{0, 2}, 0}, {{1, 2}, 0}});
    const VertexField f0 = vf({{0, 0}, {1, 1}, {2, 2}});
    const DmfExtension ext = extend_dmf(k, f0, 0.1);

    CHECK(has_pair(k, ext.field, {1}, {0, 1}));
    CHECK(has_pair(k, ext.field, {2}, {0, 2}));
    const SimplexSet crit = critical_cells(k, ext.field, SimplexSet::full(k.size()));
    CHECK(crit == set_of(k, {*k.find({0}), *k.find({1, 2})}));
    CHECK(morse_chain_complex(k, ext.field, SimplexSet::full(k.size())).betti().b ==
          std::vector<long long>{1, 1});
}

TEST_CASE("extension on a single vertex") {
    auto [k, f] = make({{{3}, 0}});
    const DmfExtension ext = extend_dmf(k, vf({{3, 0.5}}), 0.1);
    CHECK(ext.field.pairs.empty());
    CHECK(ext.f_tilde(0) == 0.5);
}

TEST_CASE("lower-link cancellation collapses a cone fully") {
    // Cone with apex 9 over the path 0-1-2 valued (0, 2, 1): the recursion
    // on the apex link must cancel a critical pair to leave one critical
    // vertex in the link.
    auto [k, f] = make({{{0}, 0}, {{1}, 0}, {{2}, 0}, {{9}, 0},
                        {{0, 1}, 0}, {{1, 2}, 0},
                        {{0, 9}, 0}, {{1, 9}, 0}, {{2, 9}, 0},
                        {{0, 1, 9}, 0}, {{1, 2, 9}, 0}});
    const VertexField f0 = vf({{0, 0.0}, {2, 1.0}, {1, 2.0}, {9, 10.0}});
    const DmfExtension ext = extend_dmf(k, f0, 0.1);

    CHECK(has_pair(k, ext.field, {1}, {0, 1}));
    CHECK(has_pair(k, ext.field, {9}, {2, 9}));
    CHECK(has_pair(k, ext.field, {0, 9}, {0, 1, 9}));
    CHECK(has_pair(k, ext.field, {1, 9}, {1, 2, 9}));
    const SimplexSet crit = critical_cells(k, ext.field, SimplexSet::full(k.size()));
    CHECK(crit == set_of(k, {*k.find({0}), *k.find({2}), *k.find({1, 2})}));
    CHECK(is_acyclic(k, ext.field).acyclic);
    CHECK(gradient_of(k, ext.f_tilde).pairs == ext.field.pairs);
}

TEST_CASE("closeness to maxf") {
    synthetic::Rng rng(suite_seed() + 10);
    for (int t = 0; t < 25; ++t) {
        const Complex k = synthetic::random_complex(rng, 20, 2);
        const VertexField f0 = synthetic::random_vertex_field(rng, k);
        const double eps = 1e-3 * std::max<double>(1, f0.value.size());
        const DmfExtension ext = extend_dmf(k, f0, eps);
        const ScalarField m = maxf_extension(k, f0);
        for (std::size_t i = 0; i < k.size(); ++i)
            CHECK(std::abs(ext.f_tilde.value[i] - m.value[i]) < eps);
        CHECK(is_acyclic(k, ext.field).acyclic);
        CHECK(check_dmf(k, ext.f_tilde).ok);
        CHECK(gradient_of(k, ext.f_tilde).pairs == ext.field.pairs);
        CHECK(morse_chain_complex(k, ext.field, SimplexSet::full(k.size())).betti() ==
              betti(k));
    }
}

TEST_CASE("stratified extension on a split segment") {
    auto [k, f] = segment();
    Stratification s;
    s.names = {"low", "high"};
    s.strata = {set_of(k, {0}), set_of(k, {1, 2})};
    const VertexField f0 = vf({{0, 0}, {1, 1}});

    const StratifiedExtension ext = extend_stratified(k, s, f0);
    CHECK(ext.stratum_fields[0].pairs.empty());
    CHECK(ext.stratum_fields[1].pairs.empty());
    // The edge has its face outside the stratum and is never considered.
    CHECK(ext.unconsidered == std::vector<SimplexId>{2});
    CHECK(check_dsmf(k, ext.f_tilde, s).ok);
    CHECK(ext.f_tilde(0) == 0);
    CHECK(ext.f_tilde(1) == 1);

    // Trivial stratification behaves like the plain extension.
    const StratifiedExtension triv =
        extend_stratified(k, Stratification::trivial(k), f0);
    const DmfExtension plain = extend_dmf(k, f0, 1.0);
    CHECK(triv.stratum_fields[0].pairs == plain.field.pairs);
    CHECK(triv.unconsidered.empty());
}

TEST_CASE("global extension round trip") {
    auto [k, f] = segment();
    Stratification s;
    s.names = {"low", "high"};
    s.strata = {set_of(k, {0}), set_of(k, {1, 2})};
    const VertexField f0 = vf({{0, 0}, {1, 1}});
    const ScalarField g = extend_global(k, s, f0);
    CHECK(check_dmf(k, g).ok);
    CHECK(g(0) < g(2));
    CHECK(gradient_of(k, g).pairs.empty()); // both stratum fields are empty

    // Pentagon-down pipeline: stratify maxf, then extend.
    auto [kd, fd] = fixtures::pentagon_down();
    VertexField pf0;
    for (SimplexId vs : kd.vertex_simplices())
        pf0.value[kd.simplex(vs).vertices[0]] = fd(vs);
    const ScalarField pre = maxf_extension(kd, pf0);
    const Stratification sd = construct_stratification(kd, pre).first;
    const StratifiedExtension ext = extend_stratified(kd, sd, pf0);
    CHECK(check_dsmf(kd, ext.f_tilde, sd).ok);
    const ScalarField gd = extend_global(kd, sd, pf0);
    CHECK(check_dmf(kd, gd).ok);
}

TEST_CASE("random stratified extensions are sound") {
    synthetic::Rng rng(suite_seed() + 11);
    for (int t = 0; t < 20; ++t) {
        const Complex k = synthetic::random_complex(rng, 20, 2);
        const VertexField f0 = synthetic::random_vertex_field(rng, k);
        const Stratification s =
            construct_stratification(k, maxf_extension(k, f0)).first;

        const StratifiedExtension ext = extend_stratified(k, s, f0);
        CHECK(check_dsmf(k, ext.f_tilde, s).ok);
        VectorField v;
        for (const auto& vi : ext.stratum_fields)
            v.pairs.insert(v.pairs.end(), vi.pairs.begin(), vi.pairs.end());
        v.normalize();
        CHECK(is_acyclic(k, v).acyclic);
        // The assigned values realize exactly the per-stratum fields.
        for (std::size_t i = 0; i < s.size(); ++i)
            CHECK(gradient_of(k, ext.f_tilde, s.strata[i]).pairs ==
                  ext.stratum_fields[i].pairs);

        const ScalarField g = extend_global(k, s, f0);
        CHECK(check_dmf(k, g).ok);
        CHECK(gradient_of(k, g).pairs == v.pairs);
    }
}
