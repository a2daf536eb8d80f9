#include <doctest.h>

#include "dsmt/fixtures.hpp"
#include "dsmt/homology.hpp"
#include "dsmt/morse.hpp"
#include "dsmt/synthetic.hpp"
#include "support.hpp"

using namespace dsmt;
using namespace dsmt::testing;

TEST_CASE("boundary matrices") {
    auto [ks, fs] = segment();
    const Gf2Matrix d1 = boundary_matrix(ks, SimplexSet::full(3), 1);
    CHECK(d1.rows() == 2);
    CHECK(d1.cols() == 1);
    CHECK(d1.get(0, 0));
    CHECK(d1.get(1, 0));

    auto [kp, fp] = make({{{0}, 0}});
    const Gf2Matrix d0 = boundary_matrix(kp, SimplexSet::full(1), 0);
    CHECK(d0.rows() == 0);
    CHECK(d0.cols() == 1);

    auto [kd, fd] = fixtures::pentagon_down();
    const Gf2Matrix pd1 = boundary_matrix(kd, SimplexSet::full(kd.size()), 1);
    CHECK(pd1.rows() == 5);
    CHECK(pd1.cols() == 5);
    for (int c : pd1.column_sums()) CHECK(c == 2);
    CHECK(pd1.rank() == 4);

    auto [kb, fb] = segment();
    CHECK_THROWS_AS(boundary_matrix(kb, set_of(kb, {2}), 1), Error); // not a complex
}

TEST_CASE("betti numbers") {
    auto [kp, fp] = make({{{0}, 0}});
    CHECK(betti(kp).b == std::vector<long long>{1});

    auto [kd, fd] = fixtures::pentagon_down();
    CHECK(betti(kd).b == std::vector<long long>{1, 1});

    auto [k2, f2] = make({{{0}, 0}, {{1}, 0}});
    CHECK(betti(k2).b == std::vector<long long>{2});

    auto [kt, ft] = fixtures::tetrahedron(); // boundary sphere
    CHECK(betti(kt).b == std::vector<long long>{1, 0, 1});
}

TEST_CASE("betti alternating sum equals the euler characteristic") {
    synthetic::Rng rng(suite_seed() + 4);
    for (int t = 0; t < 50; ++t) {
        const Complex k = synthetic::random_complex(rng);
        CHECK(betti(k).alternating_sum() ==
              euler_characteristic(k, SimplexSet::full(k.size())));
    }
}

TEST_CASE("betti numbers survive elementary collapses") {
    synthetic::Rng rng(suite_seed() + 5);
    int exercised = 0;
    for (int t = 0; t < 50; ++t) {
        const Complex k = synthetic::random_complex(rng);
        SimplexSet cur = SimplexSet::full(k.size());
        // Find one free pair and remove it.
        for (SimplexId s : cur.members()) {
            std::vector<SimplexId> cof;
            for (SimplexId c : open_star(k, s).members())
                if (c != s) cof.push_back(c);
            if (cof.size() != 1) continue;
            const BettiVector before = betti(k, cur);
            SimplexSet smaller = cur;
            smaller.erase(s);
            smaller.erase(cof[0]);
            CHECK(betti(k, smaller) == before);
            ++exercised;
            break;
        }
    }
    CHECK(exercised > 0);
}
