#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "rledtw/block_grid.hpp"

namespace rledtw {

struct Point {
    std::int64_t i = 0;
    std::int64_t j = 0;
    friend bool operator==(const Point&, const Point&) = default;
    friend auto operator<=>(const Point&, const Point&) = default;
};

// Geometrically spaced offsets Delta(t) = floor((1+eps)^t), deduplicated.
// Every integer d in [1, limit] has a ladder value in [d, (1+eps)*d].
struct GeomLadder {
    Rational epsilon;
    std::vector<std::int64_t> values;

    // Least ladder value >= d (d >= 1). Defined for d up to the last value.
    std::optional<std::int64_t> cover(std::int64_t d) const;
    bool contains(std::int64_t d) const;
};

GeomLadder build_ladder(const Rational& epsilon, std::int64_t limit);

enum class EdgeKind : std::uint8_t { Step1, Step2, Step3, Step4, Step5, Step6 };

// Which block boundaries a grid point lies on.
enum BoundaryTag : unsigned { kBoundaryLower = 1, kBoundaryUpper = 2, kBoundaryLeft = 4, kBoundaryRight = 8 };
unsigned boundary_tags(const BlockGrid& grid, Point p);

// The weighted DAG over snap points. Edge weights are integers scaled by
// den (shared with the grid); every edge is weakly monotone in both
// coordinates, and parallel edges are permitted.
struct ApproxGraph {
    struct Edge {
        std::int32_t from;
        std::int32_t to;
        BigInt w;  // scaled by den
        EdgeKind kind;
    };

    std::vector<Point> vertices;  // sorted by (i, j)
    std::vector<Edge> edges;
    BigInt den{1};
    std::int32_t source = -1;
    std::int32_t sink = -1;

    // Populated only when build_edges is asked to record witnesses: the
    // five-point h-to-v / v-to-h shape realizing each edge (trivial shapes
    // for step 1-4 edges).
    std::vector<std::array<Point, 5>> witnesses;

    std::int32_t vertex_id(Point p) const;  // -1 if absent
};

// V construction: all block corners plus geometrically spaced boundary
// points (offset 1+Delta(t) from the lower-left corner on lower and left
// boundaries, Delta(t) from the adjacent corner on upper and right
// boundaries). Sorted and deduplicated.
std::vector<Point> generate_snap_points(const BlockGrid& grid, const GeomLadder& ladder);

// Nearest snap point at-or-right-of p on its horizontal boundary, resp.
// at-or-above p on its vertical boundary. Computed analytically from the
// ladder, consistent with generate_snap_points by construction. Throws if
// p is not on a boundary of the claimed orientation.
Point snap_h(const BlockGrid& grid, const GeomLadder& ladder, Point p);
Point snap_v(const BlockGrid& grid, const GeomLadder& ladder, Point p);

// E construction steps 1-6.
ApproxGraph build_edges(const BlockGrid& grid, std::vector<Point> vertices,
                        const GeomLadder& ladder, bool record_witnesses = false);

// Closed-form length (cell-cost sum minus last cell) of the h-to-v shape
// D1+H+D2+U given by the five points, all within one x-run. The v-to-h
// variant mirrors it across the diagonal. Throws std::invalid_argument if
// the points do not form the stated shape.
Rational htov_edge_length(const BlockGrid& grid, Point p1, Point q1, Point q2, Point q3, Point q4);
Rational vtoh_edge_length(const BlockGrid& grid, Point p1, Point q1, Point q2, Point q3, Point q4);

// Exact source-to-sink distance (scaled by g.den) via the DAG shortest-path
// DP in topological order (i+j, then i). Throws std::runtime_error if the
// sink is unreachable.
BigInt shortest_path_dag(const ApproxGraph& g);

}  // namespace rledtw
