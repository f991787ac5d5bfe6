#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <vector>

#include "treewave/error.hpp"

namespace treewave {

using Vertex = std::int64_t;

/**
 * Finite radius-R ball of the homogeneous tree in which every vertex has
 * q+1 neighbours, laid out in BFS order with an implicit index scheme:
 *
 *   - vertex 0 is the root; layer m (distance m from the root) occupies the
 *     contiguous index range [layer_begin(m), layer_end(m));
 *   - the root has q+1 children, every other vertex has q children, and the
 *     children of a vertex form a contiguous range determined by the
 *     vertex's rank within its layer.
 *
 * The layout is fully deterministic, so functions serialized in index order
 * round-trip bit-exactly. Immutable after construction and safe to share
 * across threads.
 */
class TreeBall {
public:
    TreeBall(std::int64_t q, std::int64_t radius) : q_(q), radius_(radius) {
        require(q >= 1, ErrorCode::bad_params, "branching parameter q must be >= 1");
        require(radius >= 0, ErrorCode::bad_params, "ball radius must be >= 0");
        layer_offsets_.reserve(static_cast<std::size_t>(radius) + 2);
        layer_offsets_.push_back(0);
        layer_offsets_.push_back(1);
        std::int64_t layer_size = q + 1;
        for (std::int64_t m = 1; m <= radius; ++m) {
            layer_offsets_.push_back(layer_offsets_.back() + layer_size);
            layer_size *= q;
        }
        parent_.assign(static_cast<std::size_t>(vertex_count()), 0);
        for (std::int64_t m = 2; m <= radius; ++m) {
            const Vertex begin = layer_begin(m);
            const Vertex end = layer_end(m);
            const Vertex parent_begin = layer_begin(m - 1);
            for (Vertex v = begin; v < end; ++v)
                parent_[static_cast<std::size_t>(v)] = parent_begin + (v - begin) / q_;
        }
    }

    std::int64_t q() const { return q_; }
    std::int64_t radius() const { return radius_; }
    std::int64_t vertex_count() const { return layer_offsets_.back(); }

    /// Number of vertices with distance <= r from the root.
    std::int64_t ball_size(std::int64_t r) const {
        require(r >= 0 && r <= radius_, ErrorCode::bad_params, "ball_size: radius out of range");
        return layer_offsets_[static_cast<std::size_t>(r) + 1];
    }

    Vertex layer_begin(std::int64_t m) const { return layer_offsets_[static_cast<std::size_t>(m)]; }
    Vertex layer_end(std::int64_t m) const { return layer_offsets_[static_cast<std::size_t>(m) + 1]; }
    std::int64_t layer_size(std::int64_t m) const { return layer_end(m) - layer_begin(m); }

    const std::vector<Vertex>& layer_offsets() const { return layer_offsets_; }
    const std::vector<Vertex>& parents() const { return parent_; }

    bool valid_vertex(Vertex v) const { return v >= 0 && v < vertex_count(); }

    void check_vertex(Vertex v) const {
        require(valid_vertex(v), ErrorCode::invalid_index,
                "vertex index " + std::to_string(v) + " outside ball");
    }

    /// Distance from the root (= the layer the vertex lives in).
    std::int64_t depth(Vertex v) const {
        check_vertex(v);
        const auto it = std::upper_bound(layer_offsets_.begin(), layer_offsets_.end(), v);
        return static_cast<std::int64_t>(it - layer_offsets_.begin()) - 1;
    }

    Vertex parent(Vertex v) const {
        check_vertex(v);
        require(v != 0, ErrorCode::invalid_index, "root has no parent");
        return parent_[static_cast<std::size_t>(v)];
    }

    std::int64_t child_count(Vertex v) const { return v == 0 ? q_ + 1 : q_; }

    /// Children occupy [first_child(v), first_child(v) + child_count(v)).
    /// Only valid when depth(v) < radius.
    Vertex first_child(Vertex v) const {
        const std::int64_t m = depth(v);
        require(m < radius_, ErrorCode::invalid_index, "vertex on the boundary has no stored children");
        if (v == 0) return layer_begin(1);
        return layer_begin(m + 1) + (v - layer_begin(m)) * q_;
    }

    /// The contiguous index range of descendants exactly `down` levels below
    /// v (the whole layer `down` when v is the root). down = 0 gives [v, v+1).
    std::pair<Vertex, Vertex> descendant_range(Vertex v, std::int64_t down) const {
        const std::int64_t m = depth(v);
        require(down >= 0 && m + down <= radius_, ErrorCode::sphere_out_of_range,
                "descendant range leaves the ball");
        return descendant_range_at(v, m, down);
    }

    /// As descendant_range, with the caller supplying depth(v).
    std::pair<Vertex, Vertex> descendant_range_at(Vertex v, std::int64_t m, std::int64_t down) const {
        if (down == 0) return {v, v + 1};
        if (v == 0) return {layer_begin(down), layer_end(down)};
        std::int64_t span = 1;
        for (std::int64_t i = 0; i < down; ++i) span *= q_;
        const Vertex base = layer_begin(m + down) + (v - layer_begin(m)) * span;
        return {base, base + span};
    }

    /// Edge distance between two vertices, via the lowest common ancestor.
    std::int64_t distance(Vertex u, Vertex v) const {
        check_vertex(u);
        check_vertex(v);
        std::int64_t du = depth(u), dv = depth(v), d = 0;
        while (du > dv) { u = parent_[static_cast<std::size_t>(u)]; --du; ++d; }
        while (dv > du) { v = parent_[static_cast<std::size_t>(v)]; --dv; ++d; }
        while (u != v) {
            u = parent_[static_cast<std::size_t>(u)];
            v = parent_[static_cast<std::size_t>(v)];
            d += 2;
        }
        return d;
    }

    /// Number of vertices at distance exactly k from any fixed vertex.
    std::int64_t sphere_size(std::int64_t k) const {
        if (k == 0) return 1;
        std::int64_t n = q_ + 1;
        for (std::int64_t i = 1; i < k; ++i) n *= q_;
        return n;
    }

    /**
     * Visits every vertex at distance exactly k from v, once each. The
     * sphere is enumerated as the union, over each ancestor a of v at height
     * j <= k, of the depth-(k-j) descendants of a that do not pass through
     * the previous ancestor. Requires depth(v) + k <= radius so the whole
     * sphere lies inside the ball.
     */
    template <typename Visit>
    void for_each_in_sphere(Vertex v, std::int64_t k, Visit&& visit) const {
        const std::int64_t m = depth(v);
        require(k >= 0, ErrorCode::bad_params, "sphere radius must be >= 0");
        require(m + k <= radius_, ErrorCode::sphere_out_of_range,
                "sphere of radius " + std::to_string(k) + " at depth " + std::to_string(m) +
                    " leaves the ball of radius " + std::to_string(radius_));
        for_each_in_sphere_at(v, m, k, visit);
    }

    /// As for_each_in_sphere, with the caller supplying depth(v). This is the
    /// hot path of the mean value sweeps, which walk a layer at a time.
    template <typename Visit>
    void for_each_in_sphere_at(Vertex v, std::int64_t m, std::int64_t k, Visit&& visit) const {
        if (k == 0) { visit(v); return; }
        auto [b0, e0] = descendant_range_at(v, m, k);
        for (Vertex w = b0; w < e0; ++w) visit(w);
        Vertex below = v;
        for (std::int64_t j = 1; j <= std::min(k, m); ++j) {
            const Vertex anc = parent_[static_cast<std::size_t>(below)];
            if (j == k) { visit(anc); break; }
            const Vertex cb = anc == 0 ? layer_begin(1)
                                       : layer_begin(m - j + 1) + (anc - layer_begin(m - j)) * q_;
            const Vertex ce = cb + child_count(anc);
            for (Vertex c = cb; c < ce; ++c) {
                if (c == below) continue;
                auto [b, e] = descendant_range_at(c, m - j + 1, k - j - 1);
                for (Vertex w = b; w < e; ++w) visit(w);
            }
            below = anc;
        }
    }

    /// Materialized sphere, in the deterministic enumeration order.
    std::vector<Vertex> sphere(Vertex v, std::int64_t k) const {
        std::vector<Vertex> out;
        out.reserve(static_cast<std::size_t>(sphere_size(k)));
        for_each_in_sphere(v, k, [&](Vertex w) { out.push_back(w); });
        return out;
    }

    /**
     * The q^k vertices s with d(v,s) = k and d(root,s) = depth(v) + k, i.e.
     * the depth-k descendants of v. Non-root v only; cones of distinct
     * same-layer vertices are disjoint and their union is the whole layer.
     */
    std::vector<Vertex> outward_cone(Vertex v, std::int64_t k) const {
        check_vertex(v);
        require(v != 0, ErrorCode::bad_params, "outward cone is defined for non-root vertices");
        require(k >= 0, ErrorCode::bad_params, "cone depth must be >= 0");
        auto [b, e] = descendant_range(v, k);
        std::vector<Vertex> out;
        out.reserve(static_cast<std::size_t>(e - b));
        for (Vertex w = b; w < e; ++w) out.push_back(w);
        return out;
    }

private:
    std::int64_t q_;
    std::int64_t radius_;
    std::vector<Vertex> layer_offsets_; // radius + 2 boundaries
    std::vector<Vertex> parent_;        // parent_[0] unused
};

using TreeBallPtr = std::shared_ptr<const TreeBall>;

inline TreeBallPtr build_tree(std::int64_t q, std::int64_t radius) {
    return std::make_shared<TreeBall>(q, radius);
}

} // namespace treewave
