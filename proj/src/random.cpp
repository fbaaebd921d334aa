#include "cww/random.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace cww {

std::vector<double> Rng::simplex(std::size_t n) {
    if (n == 1) return {1.0};
    std::vector<double> cuts(n - 1);
    for (double& c : cuts) c = uniform();
    std::sort(cuts.begin(), cuts.end());
    std::vector<double> out(n);
    double prev = 0.0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        out[i] = cuts[i] - prev;
        prev = cuts[i];
    }
    out[n - 1] = 1.0 - prev;
    return out;
}

ProbWord perturb_within(Rng& rng, const ProbWord& base, double radius) {
    const std::size_t n = base.size();
    if (n == 1) return base;
    for (int attempt = 0; attempt < 64; ++attempt) {
        std::vector<double> dir(n);
        double mean = 0.0;
        for (double& d : dir) {
            d = rng.uniform(-1.0, 1.0);
            mean += d;
        }
        mean /= static_cast<double>(n);
        double norm_sq = 0.0;
        for (double& d : dir) {
            d -= mean;
            norm_sq += d * d;
        }
        const double norm = std::sqrt(norm_sq);
        if (norm == 0.0) continue;

        // Largest simplex-preserving step along the direction.
        double t_max = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < n; ++i) {
            if (dir[i] < 0.0) t_max = std::min(t_max, base[i] / -dir[i]);
        }
        const double t = std::min(t_max, rng.uniform() * 0.999 * radius / norm);
        std::vector<double> weights(n);
        for (std::size_t i = 0; i < n; ++i) weights[i] = std::min(std::max(base[i] + t * dir[i], 0.0), 1.0);
        try {
            return ProbWord(base.alphabet(), std::move(weights));
        } catch (const NotADistributionError&) {
            continue;  // clipped too much mass; try a new direction
        }
    }
    return base;
}

}  // namespace cww
