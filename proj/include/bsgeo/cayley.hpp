#pragma once

#include "bsgeo/normal_form.hpp"

#include <iosfwd>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace bsgeo {

struct ResourceLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Exact distances from the identity out to a fixed radius, plus the
/// individual spheres.  Produced by breadth-first search; the ground truth
/// every other module is checked against.
struct Ball {
    int n = 2;
    int radius = 0;
    std::unordered_map<NormalForm, int, NormalFormHash> distances;
    std::vector<std::vector<NormalForm>> layers;

    size_t size() const { return distances.size(); }
};

/// Frontier-at-a-time BFS over the four generators.  Throws
/// ResourceLimitError once more than `cap` elements are stored.  With
/// threads > 1 each layer is expanded in parallel slices and merged
/// deterministically; output is identical to the serial run.
Ball bfs_ball(int n, int R, size_t cap = 50'000'000, unsigned threads = 1);

/// Elements at distance exactly r.  Throws std::out_of_range if r > radius.
const std::vector<NormalForm>& sphere(const Ball& ball, int r);

/// Conjugation curvature of g at radius r computed entirely from BFS
/// distances: (l(g) - mean over S(r) of l(g^q)) / l(g), exact.
/// Every conjugate must lie inside the ball (radius >= l(g) + 2r).
Rat oracle_kappa(const NormalForm& g, int r, const Ball& ball);

/// CSV lines "u,v,w,distance" sorted lexicographically by (u, v, w).
void write_ball_csv(const Ball& ball, std::ostream& os);

} // namespace bsgeo
