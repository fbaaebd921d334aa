#ifndef CWW_RANDOM_HPP
#define CWW_RANDOM_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "cww/words.hpp"

namespace cww {

// Seeded generator with platform-independent draws: doubles are built
// from the top 53 bits of the engine output instead of going through
// std::uniform_real_distribution, whose stream is implementation-defined.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    std::size_t index(std::size_t n) { return static_cast<std::size_t>(engine_() % n); }

    // Uniform point of the probability simplex by sorted uniform spacings.
    std::vector<double> simplex(std::size_t n);

    ProbWord word(const AlphabetPtr& alphabet) { return ProbWord(alphabet, simplex(alphabet->size())); }

    // A state-transition row; same sampling, different name at call sites.
    std::vector<double> stochastic_row(std::size_t n) { return simplex(n); }

private:
    std::mt19937_64 engine_;
};

// A word within Euclidean distance strictly less than `radius` of `base`:
// move along a random zero-sum direction, staying inside the simplex.
ProbWord perturb_within(Rng& rng, const ProbWord& base, double radius);

}  // namespace cww

#endif
