#pragma once

// Test-only oracles, independent of the library's index arithmetic: an
// explicit adjacency-list copy of the ball with BFS search, plus a dense
// exact linear solver for constructing operator-kernel witnesses.

#include <optional>
#include <queue>
#include <vector>

#include "treewave/function.hpp"
#include "treewave/operators.hpp"
#include "treewave/polynomial.hpp"
#include "treewave/rational.hpp"
#include "treewave/tree.hpp"

namespace oracles {

using treewave::Rational;
using treewave::TreeBall;
using treewave::TreeFunction;
using treewave::Vertex;

/// Explicit-graph double of a TreeBall: edges stored, searches by BFS.
class AdjacencyOracle {
public:
    explicit AdjacencyOracle(const TreeBall& ball) : adj_(ball.vertex_count()) {
        for (Vertex v = 1; v < ball.vertex_count(); ++v) {
            const Vertex p = ball.parents()[static_cast<std::size_t>(v)];
            adj_[static_cast<std::size_t>(v)].push_back(p);
            adj_[static_cast<std::size_t>(p)].push_back(v);
        }
    }

    std::vector<std::int64_t> bfs_distances(Vertex source) const {
        std::vector<std::int64_t> dist(adj_.size(), -1);
        std::queue<Vertex> queue;
        dist[static_cast<std::size_t>(source)] = 0;
        queue.push(source);
        while (!queue.empty()) {
            const Vertex v = queue.front();
            queue.pop();
            for (const Vertex w : adj_[static_cast<std::size_t>(v)])
                if (dist[static_cast<std::size_t>(w)] < 0) {
                    dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
                    queue.push(w);
                }
        }
        return dist;
    }

    std::int64_t distance(Vertex u, Vertex v) const {
        return bfs_distances(u)[static_cast<std::size_t>(v)];
    }

    std::vector<Vertex> sphere(Vertex v, std::int64_t k) const {
        std::vector<Vertex> out;
        const auto dist = bfs_distances(v);
        for (Vertex w = 0; w < static_cast<Vertex>(adj_.size()); ++w)
            if (dist[static_cast<std::size_t>(w)] == k) out.push_back(w);
        return out;
    }

    /// Mean of f over the k-sphere around v, straight from BFS distances.
    Rational sphere_mean(const TreeFunction& f, Vertex v, std::int64_t k) const {
        const auto dist = bfs_distances(v);
        Rational sum(0);
        std::int64_t count = 0;
        for (Vertex w = 0; w < f.vertex_count(); ++w)
            if (dist[static_cast<std::size_t>(w)] == k) {
                sum += f[w];
                ++count;
            }
        return sum / Rational(count);
    }

private:
    std::vector<std::vector<Vertex>> adj_;
};

/// Gauss-Jordan over exact rationals. Returns a solution of Ax = b with free
/// variables set to zero, or nothing if the system is inconsistent.
inline std::optional<std::vector<Rational>> solve_linear(std::vector<std::vector<Rational>> a,
                                                         std::vector<Rational> b) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows == 0 ? 0 : a[0].size();
    std::vector<std::size_t> pivot_col;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t pivot = row;
        while (pivot < rows && a[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(a[pivot], a[row]);
        std::swap(b[pivot], b[row]);
        const Rational lead = a[row][col];
        for (std::size_t j = col; j < cols; ++j) a[row][j] /= lead;
        b[row] /= lead;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == row || a[i][col] == 0) continue;
            const Rational factor = a[i][col];
            for (std::size_t j = col; j < cols; ++j) a[i][j] -= factor * a[row][j];
            b[i] -= factor * b[row];
        }
        pivot_col.push_back(col);
        ++row;
    }
    for (std::size_t i = row; i < rows; ++i)
        if (b[i] != 0) return std::nullopt;
    std::vector<Rational> x(cols, Rational(0));
    for (std::size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = b[i];
    return x;
}

/**
 * A nonzero element of ker U_n(mu_1) on the radius-r ball, normalized to 1 at
 * the root, found by exact elimination of the homogeneous system. Such
 * elements exist for every n >= 1 (radial ones, for instance), so the solve
 * is expected to succeed.
 */
inline std::optional<TreeFunction> kernel_element(const treewave::TreeBallPtr& ball,
                                                  std::int64_t r, std::int64_t n) {
    const std::int64_t unknowns = ball->ball_size(r);
    const std::int64_t constraints = ball->ball_size(r - treewave::cheb_U(n).degree());
    std::vector<std::vector<Rational>> a;
    std::vector<Rational> b;
    // column j of U_n(mu_1) on B_r = the operator applied to the j-th indicator
    std::vector<std::vector<Rational>> columns;
    for (Vertex j = 0; j < unknowns; ++j) {
        const TreeFunction image =
            treewave::apply_cheb_U(n, TreeFunction::indicator(ball, r, j));
        columns.push_back(image.values());
    }
    for (std::int64_t i = 0; i < constraints; ++i) {
        std::vector<Rational> rowv(static_cast<std::size_t>(unknowns));
        for (Vertex j = 0; j < unknowns; ++j)
            rowv[static_cast<std::size_t>(j)] = columns[static_cast<std::size_t>(j)]
                                                       [static_cast<std::size_t>(i)];
        a.push_back(std::move(rowv));
        b.push_back(Rational(0));
    }
    // normer: value 1 at the root keeps the solution interior-nonzero
    std::vector<Rational> norm(static_cast<std::size_t>(unknowns), Rational(0));
    norm[0] = 1;
    a.push_back(std::move(norm));
    b.push_back(Rational(1));
    auto x = solve_linear(std::move(a), std::move(b));
    if (!x) return std::nullopt;
    return TreeFunction(ball, r, std::move(*x));
}

} // namespace oracles
