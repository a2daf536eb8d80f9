#include "dsmt/homology.hpp"

#include <algorithm>

namespace dsmt {

std::size_t Gf2Matrix::rank() const {
    if (rows_ == 0 || cols_ == 0) return 0;
    std::vector<std::vector<std::uint64_t>> m(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        m[r].assign(data_.begin() + static_cast<long>(r * words_per_row_),
                    data_.begin() + static_cast<long>((r + 1) * words_per_row_));

    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols_ && rank < rows_; ++c) {
        const std::size_t word = c / 64;
        const std::uint64_t bit = std::uint64_t{1} << (c % 64);
        std::size_t pivot = rank;
        while (pivot < rows_ && !(m[pivot][word] & bit)) ++pivot;
        if (pivot == rows_) continue;
        std::swap(m[pivot], m[rank]);
        for (std::size_t r = 0; r < rows_; ++r) {
            if (r != rank && (m[r][word] & bit))
                for (std::size_t w = 0; w < words_per_row_; ++w) m[r][w] ^= m[rank][w];
        }
        ++rank;
    }
    return rank;
}

std::vector<int> Gf2Matrix::column_sums() const {
    std::vector<int> sums(cols_, 0);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (get(r, c)) ++sums[c];
    return sums;
}

namespace {

void require_subcomplex(const Complex& k, const SimplexSet& d) {
    if (!is_subcomplex(k, d))
        throw Error(ErrorCode::NotAComplex, "set is not downward closed");
}

std::vector<SimplexId> simplices_of_dim(const Complex& k, const SimplexSet& d, int p) {
    std::vector<SimplexId> out;
    for (SimplexId id : d.members())
        if (k.dim(id) == p) out.push_back(id);
    return out;
}

} // namespace

Gf2Matrix boundary_matrix(const Complex& k, const SimplexSet& d, int p) {
    require_subcomplex(k, d);
    const auto rows = simplices_of_dim(k, d, p - 1);
    const auto cols = simplices_of_dim(k, d, p);
    std::vector<int> row_of(k.size(), -1);
    for (std::size_t r = 0; r < rows.size(); ++r)
        row_of[static_cast<std::size_t>(rows[r])] = static_cast<int>(r);

    Gf2Matrix m(rows.size(), cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c)
        for (SimplexId f : k.facets(cols[c]))
            m.set(static_cast<std::size_t>(row_of[static_cast<std::size_t>(f)]), c, true);
    return m;
}

BettiVector betti(const Complex& k, const SimplexSet& d) {
    require_subcomplex(k, d);
    int top = -1;
    std::vector<long long> counts;
    for (SimplexId id : d.members()) {
        const int p = k.dim(id);
        if (p > top) { counts.resize(static_cast<std::size_t>(p) + 1, 0); top = p; }
        ++counts[static_cast<std::size_t>(p)];
    }

    BettiVector out;
    if (top < 0) return out;
    std::vector<std::size_t> ranks(static_cast<std::size_t>(top) + 2, 0);
    for (int p = 1; p <= top; ++p)
        ranks[static_cast<std::size_t>(p)] = boundary_matrix(k, d, p).rank();
    out.b.resize(static_cast<std::size_t>(top) + 1);
    for (int p = 0; p <= top; ++p) {
        out.b[static_cast<std::size_t>(p)] =
            counts[static_cast<std::size_t>(p)] -
            static_cast<long long>(ranks[static_cast<std::size_t>(p)]) -
            static_cast<long long>(ranks[static_cast<std::size_t>(p) + 1]);
    }
    while (!out.b.empty() && out.b.back() == 0) out.b.pop_back();
    return out;
}

} // namespace dsmt
