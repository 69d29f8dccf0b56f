#include "rledtw/block_grid.hpp"

#include <algorithm>
#include <functional>

namespace rledtw {

Rational BlockGrid::cost(std::int64_t i, std::int64_t j) const {
    Rational q(scost_[idx(i, j)], den_);
    q.canonicalize();
    return q;
}

Rational BlockGrid::mu_h(std::int64_t i, std::int64_t j) const {
    Rational q(mu_h_[idx(i, j)], den_);
    q.canonicalize();
    return q;
}

Rational BlockGrid::mu_v(std::int64_t i, std::int64_t j) const {
    Rational q(mu_v_[idx(i, j)], den_);
    q.canonicalize();
    return q;
}

const BigInt& BlockGrid::scaled_cost_at_point(std::int64_t i, std::int64_t j) const {
    auto [bi, bj] = block_of_point(*this, i, j);
    return scaled_cost(bi, bj);
}

BlockGrid build_block_grid(const RleString& x, const RleString& y, const DistanceFn& d) {
    BlockGrid g;
    g.x_ = x;
    g.y_ = y;
    g.k_ = x.run_count();
    g.l_ = y.run_count();
    const std::size_t cells = static_cast<std::size_t>(g.k_ * g.l_);
    g.scost_.resize(cells);

    if (d.integral()) {
        for (std::int64_t i = 1; i <= g.k_; ++i)
            for (std::int64_t j = 1; j <= g.l_; ++j)
                g.scost_[g.idx(i, j)] = static_cast<long>(
                    d.eval_int(x.run(i - 1).letter, y.run(j - 1).letter));
    } else {
        std::vector<Rational> cost(cells);
        for (std::int64_t i = 1; i <= g.k_; ++i)
            for (std::int64_t j = 1; j <= g.l_; ++j)
                cost[g.idx(i, j)] = d(x.run(i - 1).letter, y.run(j - 1).letter);
        for (const Rational& c : cost)
            mpz_lcm(g.den_.get_mpz_t(), g.den_.get_mpz_t(), c.get_den().get_mpz_t());
        for (std::size_t t = 0; t < cells; ++t)
            g.scost_[t] = cost[t].get_num() * (g.den_ / cost[t].get_den());
    }

    // mu_h(i,j) = sum_{r<i} m_r * cost(r,j); mu_v(i,j) = sum_{s<j} n_s * cost(i,s)
    g.mu_h_.resize(cells);
    g.mu_v_.resize(cells);
    for (std::int64_t j = 1; j <= g.l_; ++j) g.mu_h_[g.idx(1, j)] = 0;
    for (std::int64_t i = 2; i <= g.k_; ++i)
        for (std::int64_t j = 1; j <= g.l_; ++j)
            g.mu_h_[g.idx(i, j)] =
                g.mu_h_[g.idx(i - 1, j)] + x.run(i - 2).count * g.scost_[g.idx(i - 1, j)];
    for (std::int64_t i = 1; i <= g.k_; ++i) {
        g.mu_v_[g.idx(i, 1)] = 0;
        for (std::int64_t j = 2; j <= g.l_; ++j)
            g.mu_v_[g.idx(i, j)] =
                g.mu_v_[g.idx(i, j - 1)] + y.run(j - 2).count * g.scost_[g.idx(i, j - 1)];
    }

    compute_beta_h(g);
    compute_beta_v(g);
    return g;
}

namespace {

// Next strictly-smaller successor along one line of blocks. A single sweep
// with a monotone stack of pending indices matches the heap-based
// formulation: an index is resolved the first time a cheaper block shows up.
void next_smaller_line(std::int64_t count,
                       const std::function<const BigInt&(std::int64_t)>& cost_at,
                       const std::function<void(std::int64_t, std::int64_t)>& set) {
    std::vector<std::int64_t> pending;
    for (std::int64_t t = 1; t <= count; ++t) {
        while (!pending.empty() && cost_at(pending.back()) > cost_at(t)) {
            set(pending.back(), t);
            pending.pop_back();
        }
        pending.push_back(t);
    }
    for (std::int64_t t : pending) set(t, 0);
}

}  // namespace

void compute_beta_h(BlockGrid& grid) {
    grid.beta_h_.assign(grid.scost_.size(), 0);
    for (std::int64_t j = 1; j <= grid.l_; ++j) {
        next_smaller_line(
            grid.k_, [&](std::int64_t i) -> const BigInt& { return grid.scost_[grid.idx(i, j)]; },
            [&](std::int64_t i, std::int64_t succ) { grid.beta_h_[grid.idx(i, j)] = succ; });
    }
}

void compute_beta_v(BlockGrid& grid) {
    grid.beta_v_.assign(grid.scost_.size(), 0);
    for (std::int64_t i = 1; i <= grid.k_; ++i) {
        next_smaller_line(
            grid.l_, [&](std::int64_t j) -> const BigInt& { return grid.scost_[grid.idx(i, j)]; },
            [&](std::int64_t j, std::int64_t succ) { grid.beta_v_[grid.idx(i, j)] = succ; });
    }
}

BetaStats beta_stats(const BlockGrid& grid) {
    BetaStats s{0, 0, 0};
    std::vector<std::int64_t> len(static_cast<std::size_t>(grid.k() * grid.l()));
    for (std::int64_t j = 1; j <= grid.l(); ++j) {
        for (std::int64_t i = grid.k(); i >= 1; --i) {
            std::int64_t succ = grid.beta_h(i, j);
            std::int64_t v = succ == 0 ? 1 : 1 + len[static_cast<std::size_t>((succ - 1) * grid.l() + (j - 1))];
            len[static_cast<std::size_t>((i - 1) * grid.l() + (j - 1))] = v;
            s.beta_star_h = std::max(s.beta_star_h, v);
        }
    }
    for (std::int64_t i = 1; i <= grid.k(); ++i) {
        for (std::int64_t j = grid.l(); j >= 1; --j) {
            std::int64_t succ = grid.beta_v(i, j);
            std::int64_t v = succ == 0 ? 1 : 1 + len[static_cast<std::size_t>((i - 1) * grid.l() + (succ - 1))];
            len[static_cast<std::size_t>((i - 1) * grid.l() + (j - 1))] = v;
            s.beta_star_v = std::max(s.beta_star_v, v);
        }
    }
    s.beta_star = std::max(s.beta_star_h, s.beta_star_v);
    return s;
}

std::pair<std::int64_t, std::int64_t> block_of_point(const BlockGrid& grid, std::int64_t i,
                                                     std::int64_t j) {
    HatIndex hi = hat_index(grid.x(), i);
    HatIndex hj = hat_index(grid.y(), j);
    return {hi.run_index + 1, hj.run_index + 1};
}

}  // namespace rledtw
