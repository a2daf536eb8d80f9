#ifndef DSMT_COMPLEX_HPP
#define DSMT_COMPLEX_HPP

#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "dsmt/types.hpp"

namespace dsmt {

/// A finite simplicial complex of open simplices with explicit codimension-1
/// incidence. Immutable after construction; all queries are const and safe
/// for concurrent use.
class Complex {
  public:
    Complex() = default;

    /// Builds a complex from explicit simplices. The input must be downward
    /// closed; faces are never synthesized. Throws MissingFace,
    /// DuplicateSimplex or BadSimplex.
    static Complex from_simplices(std::vector<Simplex> simplices);

    std::size_t size() const { return simplices_.size(); }
    bool empty() const { return simplices_.empty(); }
    int dim() const { return dim_; }

    const Simplex& simplex(SimplexId id) const { return simplices_[static_cast<std::size_t>(id)]; }
    int dim(SimplexId id) const { return simplices_[static_cast<std::size_t>(id)].dim(); }

    /// Codimension-1 faces of `id`, sorted by id.
    std::span<const SimplexId> facets(SimplexId id) const {
        return {facets_[static_cast<std::size_t>(id)]};
    }
    /// Codimension-1 cofaces of `id`, sorted by id.
    std::span<const SimplexId> cofacets(SimplexId id) const {
        return {cofacets_[static_cast<std::size_t>(id)]};
    }

    /// Looks a simplex up by its (sorted) vertex list.
    std::optional<SimplexId> find(const std::vector<VertexId>& vertices) const;

    /// Ids of the 0-simplices, ordered by vertex label.
    const std::vector<SimplexId>& vertex_simplices() const { return vertex_simplices_; }

    /// Id of the 0-simplex carrying vertex `v`, if present.
    std::optional<SimplexId> vertex_simplex(VertexId v) const;

    std::vector<SimplexId> all_ids() const;

  private:
    std::vector<Simplex> simplices_;
    std::vector<std::vector<SimplexId>> facets_;
    std::vector<std::vector<SimplexId>> cofacets_;
    std::map<std::vector<VertexId>, SimplexId> index_;
    std::vector<SimplexId> vertex_simplices_;
    int dim_ = -1;
};

/// A real value attached to every simplex of a host complex.
struct ScalarField {
    std::vector<double> value;

    double operator()(SimplexId id) const { return value[static_cast<std::size_t>(id)]; }
    std::size_t size() const { return value.size(); }
};

/// A real value per vertex, the usual shape of sampled data.
struct VertexField {
    std::map<VertexId, double> value;

    double at(VertexId v) const { return value.at(v); }
    /// Throws NonInjectiveVertexField when two vertices share a value.
    void require_injective() const;
};

/// Builds a complex together with its scalar field from (vertex list, value)
/// descriptions. Simplex ids follow input order. Throws MissingFace when the
/// input is not downward closed and DuplicateSimplex on repeats.
std::pair<Complex, ScalarField>
build_complex(const std::vector<std::pair<std::vector<VertexId>, double>>& simplex_descriptions);

} // namespace dsmt

#endif
