#ifndef DSMT_HOMOLOGY_HPP
#define DSMT_HOMOLOGY_HPP

#include <cstdint>
#include <vector>

#include "dsmt/complex.hpp"
#include "dsmt/simplex_set.hpp"

namespace dsmt {

/// Dense matrix over the 2-element field, rows packed into 64-bit words.
class Gf2Matrix {
  public:
    Gf2Matrix() = default;
    Gf2Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), words_per_row_((cols + 63) / 64),
          data_(rows * words_per_row_, 0) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t r, std::size_t c) const {
        return (data_[r * words_per_row_ + c / 64] >> (c % 64)) & 1u;
    }
    void set(std::size_t r, std::size_t c, bool v) {
        std::uint64_t& w = data_[r * words_per_row_ + c / 64];
        const std::uint64_t bit = std::uint64_t{1} << (c % 64);
        if (v) w |= bit; else w &= ~bit;
    }
    void flip(std::size_t r, std::size_t c) {
        data_[r * words_per_row_ + c / 64] ^= std::uint64_t{1} << (c % 64);
    }

    /// Rank via Gaussian elimination on a scratch copy.
    std::size_t rank() const;

    /// Per-column sums mod 2 interpreted as integers (used in tests).
    std::vector<int> column_sums() const;

  private:
    std::size_t rows_ = 0, cols_ = 0, words_per_row_ = 0;
    std::vector<std::uint64_t> data_;
};

/// Ranks of Z/2 homology per dimension. The alternating sum equals the
/// Euler characteristic.
struct BettiVector {
    std::vector<long long> b;

    friend bool operator==(const BettiVector& x, const BettiVector& y) { return x.b == y.b; }
    long long alternating_sum() const {
        long long s = 0;
        bool plus = true;
        for (long long v : b) { s += plus ? v : -v; plus = !plus; }
        return s;
    }
};

/// The mod-2 boundary map from p-simplices of D to (p-1)-simplices of D.
/// Rows are the (p-1)-simplices and columns the p-simplices of D, each in
/// increasing id order. Throws NotAComplex when D is not downward closed.
Gf2Matrix boundary_matrix(const Complex& k, const SimplexSet& d, int p);

/// Z/2 Betti numbers of a downward closed set, by rank-nullity.
BettiVector betti(const Complex& k, const SimplexSet& d);

inline BettiVector betti(const Complex& k) {
    return betti(k, SimplexSet::full(k.size()));
}

} // namespace dsmt

#endif
