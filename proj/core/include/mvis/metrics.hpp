#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mvis/graph.hpp"

namespace mvis {

// All-pairs BFS distances. Unreachable pairs hold a sentinel internally;
// at() refuses to hand the sentinel out as if it were a distance.
class DistanceMatrix {
  public:
    static constexpr int kUnreachable = -1;

    DistanceMatrix() = default;
    DistanceMatrix(int n, std::vector<int> d) : n_(n), d_(std::move(d)) {}

    int order() const { return n_; }
    bool reachable(int u, int v) const { return d_[idx(u, v)] != kUnreachable; }
    int at(int u, int v) const;  // std::logic_error on unreachable pairs
    const int* row(int u) const { return d_.data() + static_cast<std::size_t>(u) * n_; }

  private:
    std::size_t idx(int u, int v) const { return static_cast<std::size_t>(u) * n_ + v; }

    int n_ = 0;
    std::vector<int> d_;
};

DistanceMatrix all_pairs_distances(const Graph& g);

std::optional<int> diameter(const DistanceMatrix& d);  // nullopt when disconnected
std::optional<int> radius(const DistanceMatrix& d);
std::optional<int> girth(const Graph& g);  // nullopt for forests

// counts[u][v] = number of shortest u,v-paths, saturating at the uint64 max.
std::vector<std::vector<std::uint64_t>> geodesic_counts(const Graph& g, const DistanceMatrix& d);

bool is_geodetic(const Graph& g, const DistanceMatrix& d);  // std::invalid_argument on disconnected

}  // namespace mvis
