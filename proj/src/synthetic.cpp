#include "dsmt/synthetic.hpp"

#include <algorithm>
#include <set>

#include "dsmt/strat.hpp"
#include "dsmt/stratify.hpp"

namespace dsmt::synthetic {

Complex random_complex(Rng& rng, std::size_t max_simplices, int max_dim) {
    const int nv = std::uniform_int_distribution<int>(1, 7)(rng);
    std::set<std::vector<VertexId>> present;
    for (int v = 0; v < nv; ++v) present.insert({static_cast<VertexId>(v)});

    const int attempts = std::uniform_int_distribution<int>(1, 8)(rng);
    for (int t = 0; t < attempts; ++t) {
        const int want = std::uniform_int_distribution<int>(
            2, std::min(nv, max_dim + 1) < 2 ? 2 : std::min(nv, max_dim + 1))(rng);
        std::vector<VertexId> verts(static_cast<std::size_t>(nv));
        for (int v = 0; v < nv; ++v) verts[static_cast<std::size_t>(v)] = v;
        std::shuffle(verts.begin(), verts.end(), rng);
        verts.resize(static_cast<std::size_t>(std::min(want, nv)));
        std::sort(verts.begin(), verts.end());

        // Close the candidate downward, but respect the size budget.
        std::set<std::vector<VertexId>> added;
        const std::size_t m = verts.size();
        for (unsigned mask = 1; mask < (1u << m); ++mask) {
            std::vector<VertexId> sub;
            for (std::size_t j = 0; j < m; ++j)
                if (mask & (1u << j)) sub.push_back(verts[j]);
            if (!present.count(sub)) added.insert(std::move(sub));
        }
        if (present.size() + added.size() > max_simplices) continue;
        present.insert(added.begin(), added.end());
    }

    std::vector<Simplex> simplices;
    for (const auto& verts : present) simplices.push_back(Simplex{verts});
    return Complex::from_simplices(std::move(simplices));
}

ScalarField random_field(Rng& rng, const Complex& k) {
    std::uniform_real_distribution<double> dist(0.0, 1.0);
    ScalarField f;
    f.value.resize(k.size());
    for (auto& x : f.value) x = dist(rng);
    return f;
}

VertexField random_vertex_field(Rng& rng, const Complex& k) {
    std::vector<double> ranks;
    for (std::size_t i = 0; i < k.vertex_simplices().size(); ++i)
        ranks.push_back(static_cast<double>(i));
    std::shuffle(ranks.begin(), ranks.end(), rng);
    VertexField f0;
    std::size_t at = 0;
    for (SimplexId vs : k.vertex_simplices())
        f0.value[k.simplex(vs).vertices[0]] = ranks[at++];
    return f0;
}

VectorField random_acyclic_matching(Rng& rng, const Complex& k) {
    std::vector<SimplexId> order = k.all_ids();
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<bool> paired(k.size(), false);

    VectorField v;
    for (SimplexId s : order) {
        if (paired[static_cast<std::size_t>(s)]) continue;
        std::vector<SimplexId> ups;
        for (SimplexId t : k.cofacets(s))
            if (!paired[static_cast<std::size_t>(t)]) ups.push_back(t);
        std::shuffle(ups.begin(), ups.end(), rng);
        for (SimplexId t : ups) {
            v.pairs.emplace_back(s, t);
            if (is_acyclic(k, v).acyclic) {
                paired[static_cast<std::size_t>(s)] = true;
                paired[static_cast<std::size_t>(t)] = true;
                break;
            }
            v.pairs.pop_back();
        }
    }
    v.normalize();
    return v;
}

ScalarField random_dmf(Rng& rng, const Complex& k) {
    const VectorField v = random_acyclic_matching(rng, k);
    return separating_function(k, Stratification::trivial(k), v).g;
}

} // namespace dsmt::synthetic
