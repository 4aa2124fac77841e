#include "bsgeo/cayley.hpp"

#include <algorithm>
#include <ostream>
#include <string>
#include <thread>

namespace bsgeo {

namespace {

constexpr Gen kGenerators[4] = {Gen::A, Gen::Ainv, Gen::T, Gen::Tinv};

void expand_slice(const std::vector<NormalForm>& frontier, size_t begin, size_t end,
                  std::vector<NormalForm>& out) {
    out.reserve(4 * (end - begin));
    for (size_t i = begin; i < end; ++i)
        for (Gen s : kGenerators) out.push_back(right_multiply(frontier[i], s));
}

} // namespace

Ball bfs_ball(int n, int R, size_t cap, unsigned threads) {
    if (n < 2) throw std::invalid_argument("base n must be >= 2");
    if (R < 0) throw std::invalid_argument("radius must be >= 0");
    if (threads == 0) threads = 1;

    Ball ball;
    ball.n = n;
    ball.radius = R;
    ball.layers.resize(R + 1);
    ball.distances.emplace(identity(n), 0);
    ball.layers[0].push_back(identity(n));

    for (int d = 0; d < R; ++d) {
        const auto& frontier = ball.layers[d];
        std::vector<NormalForm> candidates;
        if (threads <= 1 || frontier.size() < 1024) {
            expand_slice(frontier, 0, frontier.size(), candidates);
        } else {
            std::vector<std::vector<NormalForm>> parts(threads);
            std::vector<std::thread> workers;
            size_t chunk = (frontier.size() + threads - 1) / threads;
            for (unsigned t = 0; t < threads; ++t) {
                size_t b = std::min(frontier.size(), t * chunk);
                size_t e = std::min(frontier.size(), b + chunk);
                workers.emplace_back(expand_slice, std::cref(frontier), b, e,
                                     std::ref(parts[t]));
            }
            for (auto& th : workers) th.join();
            size_t total = 0;
            for (auto& p : parts) total += p.size();
            candidates.reserve(total);
            for (auto& p : parts)
                for (auto& g : p) candidates.push_back(std::move(g));
        }
        auto& next = ball.layers[d + 1];
        for (auto& g : candidates) {
            auto [it, inserted] = ball.distances.emplace(std::move(g), d + 1);
            if (inserted) {
                next.push_back(it->first);
                if (ball.distances.size() > cap)
                    throw ResourceLimitError("ball of radius " + std::to_string(R) +
                                             " in BS(1," + std::to_string(n) +
                                             ") exceeds the element cap of " +
                                             std::to_string(cap));
            }
        }
    }
    return ball;
}

const std::vector<NormalForm>& sphere(const Ball& ball, int r) {
    if (r < 0 || r > ball.radius)
        throw std::out_of_range("sphere radius exceeds the computed ball");
    return ball.layers[r];
}

Rat oracle_kappa(const NormalForm& g, int r, const Ball& ball) {
    if (g.n != ball.n) throw std::invalid_argument("element and ball base differ");
    if (g.is_identity())
        throw std::invalid_argument("kappa is undefined at the identity");
    auto lookup = [&](const NormalForm& h) -> long long {
        auto it = ball.distances.find(h);
        if (it == ball.distances.end())
            throw std::out_of_range(
                "conjugate escapes the ball; enlarge the radius to l(g) + 2r");
        return it->second;
    };
    const long long lg = lookup(g);
    const auto& sph = sphere(ball, r);
    Int total = 0;
    for (const NormalForm& q : sph) {
        NormalForm h = multiply(multiply(q, g), invert(q));
        total += lookup(h);
    }
    Int count = static_cast<long long>(sph.size());
    // (lg - total/count) / lg
    return Rat(Int(lg) * count - total, Int(lg) * count);
}

void write_ball_csv(const Ball& ball, std::ostream& os) {
    std::vector<const NormalForm*> elems;
    elems.reserve(ball.distances.size());
    for (const auto& [g, d] : ball.distances) elems.push_back(&g);
    std::sort(elems.begin(), elems.end(), [](const NormalForm* a, const NormalForm* b) {
        if (a->u != b->u) return a->u < b->u;
        if (a->v != b->v) return a->v < b->v;
        return a->w < b->w;
    });
    for (const NormalForm* g : elems) {
        os << g->u << ',' << g->v.str() << ',' << g->w << ','
           << ball.distances.at(*g) << '\n';
    }
}

} // namespace bsgeo
