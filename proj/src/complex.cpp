#include "dsmt/complex.hpp"

#include <algorithm>

namespace dsmt {

Complex Complex::from_simplices(std::vector<Simplex> simplices) {
    Complex k;
    k.simplices_ = std::move(simplices);
    const std::size_t n = k.simplices_.size();
    for (std::size_t i = 0; i < n; ++i) {
        auto& verts = k.simplices_[i].vertices;
        if (verts.empty())
            throw Error(ErrorCode::BadSimplex, "simplex with empty vertex list");
        std::sort(verts.begin(), verts.end());
        if (std::adjacent_find(verts.begin(), verts.end()) != verts.end())
            throw Error(ErrorCode::BadSimplex, "simplex with repeated vertex");
        auto [it, inserted] = k.index_.emplace(verts, static_cast<SimplexId>(i));
        if (!inserted)
            throw Error(ErrorCode::DuplicateSimplex, "duplicate simplex in input",
                        {it->second, static_cast<SimplexId>(i)});
        k.dim_ = std::max(k.dim_, k.simplices_[i].dim());
    }

    k.facets_.resize(n);
    k.cofacets_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto& verts = k.simplices_[i].vertices;
        if (verts.size() == 1) {
            k.vertex_simplices_.push_back(static_cast<SimplexId>(i));
            continue;
        }
        std::vector<VertexId> face(verts.size() - 1);
        for (std::size_t drop = 0; drop < verts.size(); ++drop) {
            std::size_t w = 0;
            for (std::size_t j = 0; j < verts.size(); ++j)
                if (j != drop) face[w++] = verts[j];
            auto it = k.index_.find(face);
            if (it == k.index_.end())
                throw Error(ErrorCode::MissingFace, "input is not downward closed",
                            {static_cast<SimplexId>(i)});
            k.facets_[i].push_back(it->second);
            k.cofacets_[static_cast<std::size_t>(it->second)].push_back(static_cast<SimplexId>(i));
        }
        std::sort(k.facets_[i].begin(), k.facets_[i].end());
    }
    for (auto& c : k.cofacets_)
        std::sort(c.begin(), c.end());
    std::sort(k.vertex_simplices_.begin(), k.vertex_simplices_.end(),
              [&](SimplexId a, SimplexId b) {
                  return k.simplices_[static_cast<std::size_t>(a)].vertices[0] <
                         k.simplices_[static_cast<std::size_t>(b)].vertices[0];
              });
    return k;
}

std::optional<SimplexId> Complex::find(const std::vector<VertexId>& vertices) const {
    std::vector<VertexId> key = vertices;
    std::sort(key.begin(), key.end());
    auto it = index_.find(key);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::optional<SimplexId> Complex::vertex_simplex(VertexId v) const {
    return find({v});
}

std::vector<SimplexId> Complex::all_ids() const {
    std::vector<SimplexId> ids(size());
    for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = static_cast<SimplexId>(i);
    return ids;
}

std::pair<Complex, ScalarField>
build_complex(const std::vector<std::pair<std::vector<VertexId>, double>>& simplex_descriptions) {
    std::vector<Simplex> simplices;
    ScalarField f;
    simplices.reserve(simplex_descriptions.size());
    f.value.reserve(simplex_descriptions.size());
    for (const auto& [verts, val] : simplex_descriptions) {
        simplices.push_back(Simplex{verts});
        f.value.push_back(val);
    }
    return {Complex::from_simplices(std::move(simplices)), std::move(f)};
}

} // namespace dsmt
