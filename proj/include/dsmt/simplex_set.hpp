#ifndef DSMT_SIMPLEX_SET_HPP
#define DSMT_SIMPLEX_SET_HPP

#include <algorithm>
#include <vector>

#include "dsmt/complex.hpp"
#include "dsmt/types.hpp"

namespace dsmt {

/// A subset of the simplices of a fixed host complex, stored as a sorted id
/// list so that singleton-heavy stratifications stay cheap.
class SimplexSet {
  public:
    SimplexSet() = default;
    explicit SimplexSet(std::size_t universe) : universe_(universe) {}
    SimplexSet(std::size_t universe, std::vector<SimplexId> ids)
        : universe_(universe), ids_(std::move(ids)) {
        std::sort(ids_.begin(), ids_.end());
        ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
    }

    static SimplexSet full(std::size_t universe) {
        SimplexSet s(universe);
        s.ids_.resize(universe);
        for (std::size_t i = 0; i < universe; ++i) s.ids_[i] = static_cast<SimplexId>(i);
        return s;
    }

    std::size_t universe() const { return universe_; }
    std::size_t count() const { return ids_.size(); }
    bool empty() const { return ids_.empty(); }

    bool contains(SimplexId id) const {
        return std::binary_search(ids_.begin(), ids_.end(), id);
    }

    void insert(SimplexId id) {
        auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
        if (it == ids_.end() || *it != id) ids_.insert(it, id);
    }
    void erase(SimplexId id) {
        auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
        if (it != ids_.end() && *it == id) ids_.erase(it);
    }

    /// Member ids in increasing order. The rvalue overload moves the list
    /// out so that ranged loops over temporaries stay valid.
    const std::vector<SimplexId>& members() const& { return ids_; }
    std::vector<SimplexId> members() && { return std::move(ids_); }

    bool subset_of(const SimplexSet& other) const {
        return std::includes(other.ids_.begin(), other.ids_.end(), ids_.begin(), ids_.end());
    }

    bool intersects(const SimplexSet& other) const {
        auto a = ids_.begin();
        auto b = other.ids_.begin();
        while (a != ids_.end() && b != other.ids_.end()) {
            if (*a < *b) ++a;
            else if (*b < *a) ++b;
            else return true;
        }
        return false;
    }

    friend bool operator==(const SimplexSet& a, const SimplexSet& b) {
        return a.ids_ == b.ids_;
    }

    friend SimplexSet operator|(const SimplexSet& a, const SimplexSet& b) {
        SimplexSet out(a.universe_);
        std::set_union(a.ids_.begin(), a.ids_.end(), b.ids_.begin(), b.ids_.end(),
                       std::back_inserter(out.ids_));
        return out;
    }
    friend SimplexSet operator&(const SimplexSet& a, const SimplexSet& b) {
        SimplexSet out(a.universe_);
        std::set_intersection(a.ids_.begin(), a.ids_.end(), b.ids_.begin(), b.ids_.end(),
                              std::back_inserter(out.ids_));
        return out;
    }
    friend SimplexSet operator-(const SimplexSet& a, const SimplexSet& b) {
        SimplexSet out(a.universe_);
        std::set_difference(a.ids_.begin(), a.ids_.end(), b.ids_.begin(), b.ids_.end(),
                            std::back_inserter(out.ids_));
        return out;
    }

  private:
    std::size_t universe_ = 0;
    std::vector<SimplexId> ids_;
};

/// A together with every iterated face of its members.
SimplexSet closure(const Complex& k, const SimplexSet& a);

/// Members of A whose open star in K lies inside A. This is the topological
/// interior of |A| in |K|.
SimplexSet interior(const Complex& k, const SimplexSet& a);

/// closure(A) minus interior(A).
SimplexSet frontier(const Complex& k, const SimplexSet& a);

/// A's connected components under face comparability of any codimension.
/// Components are returned ordered by their smallest member id.
std::vector<SimplexSet> pieces(const Complex& k, const SimplexSet& a);

/// The open star of a single simplex: itself plus all iterated cofaces.
SimplexSet open_star(const Complex& k, SimplexId id);

/// closure of { sigma : f(sigma) <= c }; always downward closed.
SimplexSet sublevel_complex(const Complex& k, const ScalarField& f, double c);

/// Alternating simplex count of A.
long long euler_characteristic(const Complex& k, const SimplexSet& a);

/// True when A is downward closed in K.
bool is_subcomplex(const Complex& k, const SimplexSet& a);

/// The subcomplex of link(v) spanned by simplices all of whose vertices have
/// smaller field value than v. Throws NonInjectiveVertexField.
Complex lower_link(const Complex& k, const VertexField& f0, VertexId v);

} // namespace dsmt

#endif
