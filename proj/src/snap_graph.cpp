#include "rledtw/snap_graph.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace rledtw {

std::optional<std::int64_t> GeomLadder::cover(std::int64_t d) const {
    auto it = std::lower_bound(values.begin(), values.end(), d);
    if (it == values.end()) return std::nullopt;
    return *it;
}

bool GeomLadder::contains(std::int64_t d) const {
    return std::binary_search(values.begin(), values.end(), d);
}

GeomLadder build_ladder(const Rational& epsilon, std::int64_t limit) {
    if (epsilon <= 0) throw std::invalid_argument("epsilon must be positive");
    if (limit < 1) throw std::invalid_argument("limit must be >= 1");
    GeomLadder ladder;
    ladder.epsilon = epsilon;
    Rational factor = 1 + epsilon;
    BigInt pow_num(1), pow_den(1);
    while (true) {
        BigInt val = floor_div(pow_num, pow_den);
        if (val.fits_slong_p()) {
            std::int64_t v = val.get_si();
            if (ladder.values.empty() || v > ladder.values.back()) ladder.values.push_back(v);
            if (v >= limit) break;
        } else {
            break;  // far past any usable offset
        }
        pow_num *= factor.get_num();
        pow_den *= factor.get_den();
    }
    return ladder;
}

unsigned boundary_tags(const BlockGrid& grid, Point p) {
    HatIndex hi = hat_index(grid.x(), p.i);
    HatIndex hj = hat_index(grid.y(), p.j);
    unsigned tags = 0;
    if (hj.offset == 1) tags |= kBoundaryLower;
    if (hj.offset == grid.y().run(hj.run_index).count) tags |= kBoundaryUpper;
    if (hi.offset == 1) tags |= kBoundaryLeft;
    if (hi.offset == grid.x().run(hi.run_index).count) tags |= kBoundaryRight;
    return tags;
}

std::vector<Point> generate_snap_points(const BlockGrid& grid, const GeomLadder& ladder) {
    std::vector<Point> points;
    for (std::int64_t i = 1; i <= grid.k(); ++i) {
        const std::int64_t c0 = grid.col_lo(i), c1 = grid.col_hi(i);
        for (std::int64_t j = 1; j <= grid.l(); ++j) {
            const std::int64_t r0 = grid.row_lo(j), r1 = grid.row_hi(j);
            points.push_back({c0, r0});
            points.push_back({c1, r0});
            points.push_back({c0, r1});
            points.push_back({c1, r1});
            // the cells next to the lower-left corner keep diagonal steps
            // out of corner points inside the snap set
            if (c0 + 1 <= c1) points.push_back({c0 + 1, r0});
            if (r0 + 1 <= r1) points.push_back({c0, r0 + 1});
            for (std::int64_t delta : ladder.values) {
                bool any = false;
                if (c0 + 1 + delta <= c1) points.push_back({c0 + 1 + delta, r0}), any = true;
                if (r0 + 1 + delta <= r1) points.push_back({c0, r0 + 1 + delta}), any = true;
                if (c0 + delta <= c1) points.push_back({c0 + delta, r1}), any = true;
                if (r0 + delta <= r1) points.push_back({c1, r0 + delta}), any = true;
                if (!any) break;
            }
        }
    }
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    return points;
}

namespace {

std::int64_t ladder_at_least(const GeomLadder& ladder, std::int64_t d) {
    auto v = ladder.cover(std::max<std::int64_t>(d, 1));
    if (!v) throw std::logic_error("ladder does not cover requested offset");
    return *v;
}

}  // namespace

namespace {

Point snap_h_core(const GeomLadder& ladder, bool on_lower, bool on_upper, std::int64_t c0,
                  std::int64_t c1, Point p) {
    if (p.i == c0) return p;
    if (on_lower && p.i == c0 + 1) return p;
    std::int64_t best = c1;
    if (on_lower) {
        std::int64_t cand = c0 + 1 + ladder_at_least(ladder, p.i - c0 - 1);
        if (cand <= c1) best = std::min(best, cand);
    }
    if (on_upper) {
        std::int64_t cand = c0 + ladder_at_least(ladder, p.i - c0);
        if (cand <= c1) best = std::min(best, cand);
    }
    return {best, p.j};
}

Point snap_v_core(const GeomLadder& ladder, bool on_left, bool on_right, std::int64_t r0,
                  std::int64_t r1, Point p) {
    if (p.j == r0) return p;
    if (on_left && p.j == r0 + 1) return p;
    std::int64_t best = r1;
    if (on_left) {
        std::int64_t cand = r0 + 1 + ladder_at_least(ladder, p.j - r0 - 1);
        if (cand <= r1) best = std::min(best, cand);
    }
    if (on_right) {
        std::int64_t cand = r0 + ladder_at_least(ladder, p.j - r0);
        if (cand <= r1) best = std::min(best, cand);
    }
    return {p.i, best};
}

}  // namespace

Point snap_h(const BlockGrid& grid, const GeomLadder& ladder, Point p) {
    HatIndex hj = hat_index(grid.y(), p.j);
    const bool on_lower = hj.offset == 1;
    const bool on_upper = hj.offset == grid.y().run(hj.run_index).count;
    if (!on_lower && !on_upper) throw std::invalid_argument("point not on a horizontal boundary");
    HatIndex hi = hat_index(grid.x(), p.i);
    const std::int64_t i_run = hi.run_index + 1;
    return snap_h_core(ladder, on_lower, on_upper, grid.col_lo(i_run), grid.col_hi(i_run), p);
}

Point snap_v(const BlockGrid& grid, const GeomLadder& ladder, Point p) {
    HatIndex hi = hat_index(grid.x(), p.i);
    const bool on_left = hi.offset == 1;
    const bool on_right = hi.offset == grid.x().run(hi.run_index).count;
    if (!on_left && !on_right) throw std::invalid_argument("point not on a vertical boundary");
    HatIndex hj = hat_index(grid.y(), p.j);
    const std::int64_t j_run = hj.run_index + 1;
    return snap_v_core(ladder, on_left, on_right, grid.row_lo(j_run), grid.row_hi(j_run), p);
}

std::int32_t ApproxGraph::vertex_id(Point p) const {
    auto it = std::lower_bound(vertices.begin(), vertices.end(), p);
    if (it == vertices.end() || *it != p) return -1;
    return static_cast<std::int32_t>(it - vertices.begin());
}

namespace {

// Snap-point columns on a horizontal boundary row r of block (I,J),
// sorted and deduplicated.
std::vector<std::int64_t> hboundary_cols(const BlockGrid& grid, const GeomLadder& ladder,
                                         std::int64_t I, std::int64_t J, std::int64_t r) {
    const std::int64_t c0 = grid.col_lo(I), c1 = grid.col_hi(I);
    std::vector<std::int64_t> cols{c0, c1};
    if (r == grid.row_lo(J)) {
        if (c0 + 1 <= c1) cols.push_back(c0 + 1);
        for (std::int64_t delta : ladder.values) {
            if (c0 + 1 + delta > c1) break;
            cols.push_back(c0 + 1 + delta);
        }
    }
    if (r == grid.row_hi(J)) {
        for (std::int64_t delta : ladder.values) {
            if (c0 + delta > c1) break;
            cols.push_back(c0 + delta);
        }
    }
    std::sort(cols.begin(), cols.end());
    cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
    return cols;
}

std::vector<std::int64_t> vboundary_rows(const BlockGrid& grid, const GeomLadder& ladder,
                                         std::int64_t I, std::int64_t J, std::int64_t c) {
    const std::int64_t r0 = grid.row_lo(J), r1 = grid.row_hi(J);
    std::vector<std::int64_t> rows{r0, r1};
    if (c == grid.col_lo(I)) {
        if (r0 + 1 <= r1) rows.push_back(r0 + 1);
        for (std::int64_t delta : ladder.values) {
            if (r0 + 1 + delta > r1) break;
            rows.push_back(r0 + 1 + delta);
        }
    }
    if (c == grid.col_hi(I)) {
        for (std::int64_t delta : ladder.values) {
            if (r0 + delta > r1) break;
            rows.push_back(r0 + delta);
        }
    }
    std::sort(rows.begin(), rows.end());
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
    return rows;
}

// Two-level lookup over the sorted vertex list: binary search the column,
// then the row within the column's slice.
struct VertexIndex {
    const std::vector<Point>& pts;
    std::vector<std::int64_t> cols;
    std::vector<std::int32_t> off;

    explicit VertexIndex(const std::vector<Point>& sorted) : pts(sorted) {
        for (std::size_t t = 0; t < pts.size(); ++t) {
            if (t == 0 || pts[t].i != pts[t - 1].i) {
                cols.push_back(pts[t].i);
                off.push_back(static_cast<std::int32_t>(t));
            }
        }
        off.push_back(static_cast<std::int32_t>(pts.size()));
    }

    std::int32_t find(Point p) const {
        auto it = std::lower_bound(cols.begin(), cols.end(), p.i);
        if (it == cols.end() || *it != p.i) return -1;
        std::size_t t = static_cast<std::size_t>(it - cols.begin());
        auto b = pts.begin() + off[t], e = pts.begin() + off[t + 1];
        auto jt = std::lower_bound(b, e, p.j,
                                   [](const Point& q, std::int64_t j) { return q.j < j; });
        if (jt == e || jt->j != p.j) return -1;
        return static_cast<std::int32_t>(jt - pts.begin());
    }
};

struct EdgeBuilder {
    const BlockGrid& grid;
    ApproxGraph& g;
    const VertexIndex& index;
    bool record;

    std::int32_t vid(Point p) const {
        std::int32_t id = index.find(p);
        if (id < 0) throw std::logic_error("expected snap point missing from V");
        return id;
    }

    void add_ids(std::int32_t from_id, std::int32_t to_id, Point from, Point to, const BigInt& w,
                 EdgeKind kind, const std::array<Point, 5>& witness) {
        if (to.i < from.i || to.j < from.j || to == from)
            throw std::logic_error("edge violates coordinate monotonicity");
        g.edges.push_back({from_id, to_id, w, kind});
        if (record) g.witnesses.push_back(witness);
    }

    void add(Point from, Point to, const BigInt& w, EdgeKind kind,
             const std::array<Point, 5>& witness) {
        add_ids(vid(from), vid(to), from, to, w, kind, witness);
    }

    void add_step(Point from, Point to, const BigInt& w, EdgeKind kind) {
        add(from, to, w, kind, {from, from, from, from, to});
    }
};

}  // namespace

ApproxGraph build_edges(const BlockGrid& grid, std::vector<Point> vertices,
                        const GeomLadder& ladder, bool record_witnesses) {
    ApproxGraph g;
    std::sort(vertices.begin(), vertices.end());
    g.vertices = std::move(vertices);
    g.den = grid.den();
    const std::int64_t m = grid.m(), n = grid.n();
    g.source = g.vertex_id({1, 1});
    g.sink = g.vertex_id({m, n});
    if (g.source < 0 || g.sink < 0) throw std::logic_error("source or sink missing from V");

    VertexIndex index(g.vertices);
    EdgeBuilder eb{grid, g, index, record_witnesses};
    g.edges.reserve(g.vertices.size() * 10 + 64);

    // Step 1: G0 step edges between corner points, weighted by the source
    // cell (len convention).
    std::vector<std::int64_t> corner_cols, corner_rows;
    for (std::int64_t i = 1; i <= grid.k(); ++i) {
        corner_cols.push_back(grid.col_lo(i));
        corner_cols.push_back(grid.col_hi(i));
    }
    for (std::int64_t j = 1; j <= grid.l(); ++j) {
        corner_rows.push_back(grid.row_lo(j));
        corner_rows.push_back(grid.row_hi(j));
    }
    std::sort(corner_cols.begin(), corner_cols.end());
    corner_cols.erase(std::unique(corner_cols.begin(), corner_cols.end()), corner_cols.end());
    std::sort(corner_rows.begin(), corner_rows.end());
    corner_rows.erase(std::unique(corner_rows.begin(), corner_rows.end()), corner_rows.end());
    auto is_corner_col = [&](std::int64_t c) {
        return std::binary_search(corner_cols.begin(), corner_cols.end(), c);
    };
    auto is_corner_row = [&](std::int64_t r) {
        return std::binary_search(corner_rows.begin(), corner_rows.end(), r);
    };
    for (std::int64_t c : corner_cols) {
        for (std::int64_t r : corner_rows) {
            const BigInt& w = grid.scaled_cost_at_point(c, r);
            const bool ch = c + 1 <= m && is_corner_col(c + 1);
            const bool rv = r + 1 <= n && is_corner_row(r + 1);
            if (ch) eb.add_step({c, r}, {c + 1, r}, w, EdgeKind::Step1);
            if (rv) eb.add_step({c, r}, {c, r + 1}, w, EdgeKind::Step1);
            if (ch && rv) eb.add_step({c, r}, {c + 1, r + 1}, w, EdgeKind::Step1);
        }
    }

    // Steps 2-3: diagonal steps across the upper and right boundaries.
    // Points sitting on both opposite boundaries of a thickness-1 block
    // may have a successor that is not a snap point; those steps are
    // dropped (the shortcut edges route around them).
    for (std::int32_t pi = 0; pi < static_cast<std::int32_t>(g.vertices.size()); ++pi) {
        const Point p = g.vertices[static_cast<std::size_t>(pi)];
        if (p.i == m || p.j == n) continue;
        unsigned tags = boundary_tags(grid, p);
        if (!(tags & (kBoundaryUpper | kBoundaryRight))) continue;
        auto [bi, bj] = block_of_point(grid, p.i, p.j);
        const Point succ{p.i + 1, p.j + 1};
        const std::int32_t sid = index.find(succ);
        if (sid < 0) {
            const bool thin = ((tags & kBoundaryLower) && (tags & kBoundaryUpper)) ||
                              ((tags & kBoundaryLeft) && (tags & kBoundaryRight));
            if (!thin) throw std::logic_error("expected snap point missing from V");
            continue;
        }
        const std::array<Point, 5> wit{p, p, p, p, succ};
        if (tags & kBoundaryUpper)
            eb.add_ids(pi, sid, p, succ, grid.scaled_cost(bi, bj), EdgeKind::Step2, wit);
        if (tags & kBoundaryRight)
            eb.add_ids(pi, sid, p, succ, grid.scaled_cost(bi, bj), EdgeKind::Step3, wit);
    }

    // Step 4: chain edges between consecutive snap points along each
    // block boundary.
    for (std::int64_t I = 1; I <= grid.k(); ++I) {
        for (std::int64_t J = 1; J <= grid.l(); ++J) {
            const BigInt& w = grid.scaled_cost(I, J);
            std::vector<std::int64_t> brows{grid.row_lo(J)};
            if (grid.row_hi(J) != grid.row_lo(J)) brows.push_back(grid.row_hi(J));
            for (std::int64_t r : brows) {
                auto cols = hboundary_cols(grid, ladder, I, J, r);
                for (std::size_t t = 0; t + 1 < cols.size(); ++t)
                    eb.add({cols[t], r}, {cols[t + 1], r}, BigInt(cols[t + 1] - cols[t]) * w,
                           EdgeKind::Step4,
                           {{{cols[t], r}, {cols[t], r}, {cols[t + 1], r}, {cols[t + 1], r}, {cols[t + 1], r}}});
            }
            std::vector<std::int64_t> bcols{grid.col_lo(I)};
            if (grid.col_hi(I) != grid.col_lo(I)) bcols.push_back(grid.col_hi(I));
            for (std::int64_t c : bcols) {
                auto rows = vboundary_rows(grid, ladder, I, J, c);
                for (std::size_t t = 0; t + 1 < rows.size(); ++t)
                    eb.add({c, rows[t]}, {c, rows[t + 1]}, BigInt(rows[t + 1] - rows[t]) * w,
                           EdgeKind::Step4,
                           {{{c, rows[t]}, {c, rows[t]}, {c, rows[t]}, {c, rows[t + 1]}, {c, rows[t + 1]}}});
            }
        }
    }

    // Steps 5-6: shortcut edges realizing truncated h-to-v and v-to-h
    // components, with closed-form lengths from the mu tables.
    BigInt w;
    std::vector<std::int64_t> cand;
    for (std::int32_t pi = 0; pi < static_cast<std::int32_t>(g.vertices.size()); ++pi) {
        const Point p = g.vertices[static_cast<std::size_t>(pi)];
        unsigned tags = boundary_tags(grid, p);
        if (!(tags & (kBoundaryLower | kBoundaryLeft))) continue;
        auto [I, J] = block_of_point(grid, p.i, p.j);

        if (tags & kBoundaryLower) {
            const std::int64_t c_lo = grid.col_lo(I), c_hi = grid.col_hi(I);
            std::int64_t Js = J;
            while (Js != 0) {
                const std::int64_t rs = grid.row_lo(Js);
                const std::int64_t qcol = p.i + (rs - p.j);
                if (qcol > c_hi) break;  // diagonal left the x-run; no later block is reachable
                const BigInt& d1 = grid.scaled_cost(I, Js);
                cand.assign(1, qcol);
                for (std::int64_t delta : ladder.values) {
                    if (qcol + delta >= c_hi) break;
                    cand.push_back(qcol + delta);
                }
                if (c_hi > qcol) cand.push_back(c_hi);
                for (std::int64_t u : cand) {
                    const std::int64_t q3row = rs + (c_hi - u);
                    if (q3row > n) continue;  // diagonal exits the grid
                    Point q3{c_hi, q3row};
                    const std::int64_t J2 = hat_index(grid.y(), q3row).run_index + 1;
                    const std::int64_t r2_lo = grid.row_lo(J2), r2_hi = grid.row_hi(J2);
                    Point q4 = snap_v_core(ladder, c_lo == c_hi, true, r2_lo, r2_hi, q3);
                    if (q4 == p) continue;
                    mpz_sub(w.get_mpz_t(), grid.mu_v_scaled(I, J2).get_mpz_t(),
                            grid.mu_v_scaled(I, J).get_mpz_t());
                    if (u > qcol)
                        mpz_addmul_ui(w.get_mpz_t(), d1.get_mpz_t(),
                                      static_cast<unsigned long>(u - qcol));
                    if (q4.j > r2_lo)
                        mpz_addmul_ui(w.get_mpz_t(), grid.scaled_cost(I, J2).get_mpz_t(),
                                      static_cast<unsigned long>(q4.j - r2_lo));
                    eb.add_ids(pi, eb.vid(q4), p, q4, w, EdgeKind::Step5,
                               {p, Point{qcol, rs}, Point{u, rs}, q3, q4});
                }
                Js = grid.beta_v(I, Js);
            }
        }

        if (tags & kBoundaryLeft) {
            const std::int64_t r_lo = grid.row_lo(J), r_hi = grid.row_hi(J);
            std::int64_t Is = I;
            while (Is != 0) {
                const std::int64_t cs = grid.col_lo(Is);
                const std::int64_t qrow = p.j + (cs - p.i);
                if (qrow > r_hi) break;
                const BigInt& d1 = grid.scaled_cost(Is, J);
                cand.assign(1, qrow);
                for (std::int64_t delta : ladder.values) {
                    if (qrow + delta >= r_hi) break;
                    cand.push_back(qrow + delta);
                }
                if (r_hi > qrow) cand.push_back(r_hi);
                for (std::int64_t v : cand) {
                    const std::int64_t q3col = cs + (r_hi - v);
                    if (q3col > m) continue;
                    Point q3{q3col, r_hi};
                    const std::int64_t I2 = hat_index(grid.x(), q3col).run_index + 1;
                    const std::int64_t c2_lo = grid.col_lo(I2), c2_hi = grid.col_hi(I2);
                    Point q4 = snap_h_core(ladder, r_lo == r_hi, true, c2_lo, c2_hi, q3);
                    if (q4 == p) continue;
                    mpz_sub(w.get_mpz_t(), grid.mu_h_scaled(I2, J).get_mpz_t(),
                            grid.mu_h_scaled(I, J).get_mpz_t());
                    if (v > qrow)
                        mpz_addmul_ui(w.get_mpz_t(), d1.get_mpz_t(),
                                      static_cast<unsigned long>(v - qrow));
                    if (q4.i > c2_lo)
                        mpz_addmul_ui(w.get_mpz_t(), grid.scaled_cost(I2, J).get_mpz_t(),
                                      static_cast<unsigned long>(q4.i - c2_lo));
                    eb.add_ids(pi, eb.vid(q4), p, q4, w, EdgeKind::Step6,
                               {p, Point{cs, qrow}, Point{cs, v}, q3, q4});
                }
                Is = grid.beta_h(Is, J);
            }
        }
    }

    return g;
}

namespace {

void require_shape(bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(what);
}

}  // namespace

Rational htov_edge_length(const BlockGrid& grid, Point p1, Point q1, Point q2, Point q3,
                          Point q4) {
    auto [I, J1] = block_of_point(grid, p1.i, p1.j);
    require_shape(p1.j == grid.row_lo(J1), "not an h-to-v shape");
    for (const Point& p : {q1, q2, q3, q4})
        require_shape(p.i >= grid.col_lo(I) && p.i <= grid.col_hi(I), "not an h-to-v shape");
    require_shape(q1.i - p1.i == q1.j - p1.j && q1.i >= p1.i, "not an h-to-v shape");
    auto [Iq, Jq] = block_of_point(grid, q1.i, q1.j);
    require_shape(q1.j == grid.row_lo(Jq), "not an h-to-v shape");
    require_shape(q2.j == q1.j && q2.i >= q1.i, "not an h-to-v shape");
    require_shape(q3.i - q2.i == q3.j - q2.j && q3.i >= q2.i, "not an h-to-v shape");
    require_shape(q4.i == q3.i && q4.j >= q3.j, "not an h-to-v shape");
    if (q4.j > q3.j) require_shape(q3.i == grid.col_hi(I), "not an h-to-v shape");

    auto [I2, J2] = block_of_point(grid, q4.i, q4.j);
    BigInt w = BigInt(q2.i - q1.i) * grid.scaled_cost(Iq, Jq) + grid.mu_v_scaled(I, J2) -
               grid.mu_v_scaled(I, J1) +
               BigInt(q4.j - grid.row_lo(J2)) * grid.scaled_cost(I2, J2);
    Rational r(w, grid.den());
    r.canonicalize();
    return r;
}

Rational vtoh_edge_length(const BlockGrid& grid, Point p1, Point q1, Point q2, Point q3,
                          Point q4) {
    auto [I1, J] = block_of_point(grid, p1.i, p1.j);
    require_shape(p1.i == grid.col_lo(I1), "not a v-to-h shape");
    for (const Point& p : {q1, q2, q3, q4})
        require_shape(p.j >= grid.row_lo(J) && p.j <= grid.row_hi(J), "not a v-to-h shape");
    require_shape(q1.j - p1.j == q1.i - p1.i && q1.j >= p1.j, "not a v-to-h shape");
    auto [Iq, Jq] = block_of_point(grid, q1.i, q1.j);
    require_shape(q1.i == grid.col_lo(Iq), "not a v-to-h shape");
    require_shape(q2.i == q1.i && q2.j >= q1.j, "not a v-to-h shape");
    require_shape(q3.j - q2.j == q3.i - q2.i && q3.j >= q2.j, "not a v-to-h shape");
    require_shape(q4.j == q3.j && q4.i >= q3.i, "not a v-to-h shape");
    if (q4.i > q3.i) require_shape(q3.j == grid.row_hi(J), "not a v-to-h shape");

    auto [I2, J2] = block_of_point(grid, q4.i, q4.j);
    BigInt w = BigInt(q2.j - q1.j) * grid.scaled_cost(Iq, Jq) + grid.mu_h_scaled(I2, J) -
               grid.mu_h_scaled(I1, J) +
               BigInt(q4.i - grid.col_lo(I2)) * grid.scaled_cost(I2, J2);
    Rational r(w, grid.den());
    r.canonicalize();
    return r;
}

BigInt shortest_path_dag(const ApproxGraph& g) {
    const std::size_t nv = g.vertices.size();
    std::vector<std::int32_t> order(nv);
    for (std::size_t t = 0; t < nv; ++t) order[t] = static_cast<std::int32_t>(t);
    std::sort(order.begin(), order.end(), [&](std::int32_t a, std::int32_t b) {
        const Point& pa = g.vertices[static_cast<std::size_t>(a)];
        const Point& pb = g.vertices[static_cast<std::size_t>(b)];
        auto ka = std::pair{pa.i + pa.j, pa.i};
        auto kb = std::pair{pb.i + pb.j, pb.i};
        return ka < kb;
    });

    // CSR adjacency by source vertex
    std::vector<std::int32_t> head(nv + 1, 0);
    for (const auto& e : g.edges) ++head[static_cast<std::size_t>(e.from) + 1];
    for (std::size_t t = 1; t <= nv; ++t) head[t] += head[t - 1];
    std::vector<std::int32_t> adj(g.edges.size());
    {
        std::vector<std::int32_t> cursor(head.begin(), head.end() - 1);
        for (std::size_t e = 0; e < g.edges.size(); ++e)
            adj[static_cast<std::size_t>(cursor[static_cast<std::size_t>(g.edges[e].from)]++)] =
                static_cast<std::int32_t>(e);
    }

    std::vector<char> reached(nv, 0);
    reached[static_cast<std::size_t>(g.source)] = 1;

    // Fast path: when every weight (and any possible path sum) fits in
    // int64, relax with plain integers instead of bignums.
    std::int64_t max_w = 0;
    bool small = true;
    for (const auto& e : g.edges) {
        if (!e.w.fits_slong_p()) {
            small = false;
            break;
        }
        max_w = std::max(max_w, static_cast<std::int64_t>(e.w.get_si()));
    }
    if (small && (nv == 0 || max_w <= (std::numeric_limits<std::int64_t>::max() / 2) /
                                         static_cast<std::int64_t>(nv + 1))) {
        std::vector<std::int64_t> dist(nv, 0);
        for (std::int32_t v : order) {
            if (!reached[static_cast<std::size_t>(v)]) continue;
            const std::int64_t dv = dist[static_cast<std::size_t>(v)];
            for (std::int32_t t = head[static_cast<std::size_t>(v)];
                 t < head[static_cast<std::size_t>(v) + 1]; ++t) {
                const auto& e =
                    g.edges[static_cast<std::size_t>(adj[static_cast<std::size_t>(t)])];
                const std::int64_t c = dv + e.w.get_si();
                auto to = static_cast<std::size_t>(e.to);
                if (!reached[to] || c < dist[to]) {
                    dist[to] = c;
                    reached[to] = 1;
                }
            }
        }
        if (!reached[static_cast<std::size_t>(g.sink)]) throw std::runtime_error("no path");
        return BigInt(static_cast<long>(dist[static_cast<std::size_t>(g.sink)]));
    }

    std::vector<BigInt> dist(nv);
    BigInt cand;
    for (std::int32_t v : order) {
        if (!reached[static_cast<std::size_t>(v)]) continue;
        for (std::int32_t t = head[static_cast<std::size_t>(v)];
             t < head[static_cast<std::size_t>(v) + 1]; ++t) {
            const auto& e = g.edges[static_cast<std::size_t>(adj[static_cast<std::size_t>(t)])];
            mpz_add(cand.get_mpz_t(), dist[static_cast<std::size_t>(v)].get_mpz_t(),
                    e.w.get_mpz_t());
            auto to = static_cast<std::size_t>(e.to);
            if (!reached[to] || cand < dist[to]) {
                mpz_swap(dist[to].get_mpz_t(), cand.get_mpz_t());
                reached[to] = 1;
            }
        }
    }
    if (!reached[static_cast<std::size_t>(g.sink)]) throw std::runtime_error("no path");
    return dist[static_cast<std::size_t>(g.sink)];
}

}  // namespace rledtw
