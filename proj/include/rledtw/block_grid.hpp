#pragma once

#include <utility>
#include <vector>

#include "rledtw/metric.hpp"
#include "rledtw/rational.hpp"
#include "rledtw/rle.hpp"

namespace rledtw {

struct BetaStats {
    std::int64_t beta_star_h;
    std::int64_t beta_star_v;
    std::int64_t beta_star;
};

// The k x l block decomposition of the DTW grid: per-block costs, beta
// successor tables, and mu prefix-cost tables. Blocks are addressed
// 1-based in the public API; internal storage is row-major zero-based.
//
// Costs are kept as exact integers scaled by a common denominator so that
// downstream graph arithmetic runs on integers. cost(i,j) equals
// scaled_cost(i,j) / den().
class BlockGrid {
public:
    std::int64_t k() const { return k_; }
    std::int64_t l() const { return l_; }
    std::int64_t m() const { return x_.total_length(); }
    std::int64_t n() const { return y_.total_length(); }
    const RleString& x() const { return x_; }
    const RleString& y() const { return y_; }

    const BigInt& den() const { return den_; }
    const BigInt& scaled_cost(std::int64_t i, std::int64_t j) const { return scost_[idx(i, j)]; }
    Rational cost(std::int64_t i, std::int64_t j) const;

    // Successor indices; 0 means "no strictly cheaper block exists".
    std::int64_t beta_h(std::int64_t i, std::int64_t j) const { return beta_h_[idx(i, j)]; }
    std::int64_t beta_v(std::int64_t i, std::int64_t j) const { return beta_v_[idx(i, j)]; }

    const BigInt& mu_h_scaled(std::int64_t i, std::int64_t j) const { return mu_h_[idx(i, j)]; }
    const BigInt& mu_v_scaled(std::int64_t i, std::int64_t j) const { return mu_v_[idx(i, j)]; }
    Rational mu_h(std::int64_t i, std::int64_t j) const;
    Rational mu_v(std::int64_t i, std::int64_t j) const;

    // Block B_{i,j} spans columns [col_lo(i), col_hi(i)] and rows
    // [row_lo(j), row_hi(j)] of the m x n grid.
    std::int64_t col_lo(std::int64_t i) const { return x_.prefix_sum(i - 1) + 1; }
    std::int64_t col_hi(std::int64_t i) const { return x_.prefix_sum(i); }
    std::int64_t row_lo(std::int64_t j) const { return y_.prefix_sum(j - 1) + 1; }
    std::int64_t row_hi(std::int64_t j) const { return y_.prefix_sum(j); }

    // Cell cost of grid point (i,j), scaled by den().
    const BigInt& scaled_cost_at_point(std::int64_t i, std::int64_t j) const;

private:
    friend BlockGrid build_block_grid(const RleString&, const RleString&, const DistanceFn&);
    friend void compute_beta_h(BlockGrid&);
    friend void compute_beta_v(BlockGrid&);

    std::size_t idx(std::int64_t i, std::int64_t j) const {
        return static_cast<std::size_t>((i - 1) * l_ + (j - 1));
    }

    RleString x_, y_;
    std::int64_t k_ = 0, l_ = 0;
    BigInt den_{1};
    std::vector<BigInt> scost_;
    std::vector<std::int64_t> beta_h_, beta_v_;
    std::vector<BigInt> mu_h_, mu_v_;
};

// Populates all tables: exactly k*l distance evaluations for the costs,
// O(kl) for the mu tables, O(kl log k + kl log l) for the beta tables.
BlockGrid build_block_grid(const RleString& x, const RleString& y, const DistanceFn& d);

// Recompute the beta successor tables from the block costs. build_block_grid
// already calls these; they are exposed for oracle tests.
void compute_beta_h(BlockGrid& grid);
void compute_beta_v(BlockGrid& grid);

// Longest beta_h / beta_v successor chains, via memoized chain walks.
BetaStats beta_stats(const BlockGrid& grid);

// Maps a grid point to its containing block (1-based pair).
std::pair<std::int64_t, std::int64_t> block_of_point(const BlockGrid& grid, std::int64_t i,
                                                     std::int64_t j);

}  // namespace rledtw
