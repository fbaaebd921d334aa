#include "cww/words.hpp"

#include <cmath>
#include <limits>

namespace cww {

namespace {

void check_alphabet_size(const AlphabetPtr& alphabet, std::size_t n, const char* what) {
    if (!alphabet) throw Error(std::string(what) + ": null alphabet");
    if (alphabet->size() != n) {
        throw Error(std::string(what) + ": got " + std::to_string(n) + " entries for an alphabet of size " +
                    std::to_string(alphabet->size()));
    }
}

// Accept sums already normalized to machine precision as-is so that
// literal fixture tables stay bit-exact; divide out larger drift up to
// kNormTolerance; reject the rest.
std::vector<double> normalize_sum(std::vector<double> values, double sum, const char* what) {
    const double drift = std::abs(sum - 1.0);
    if (drift <= 4.0 * std::numeric_limits<double>::epsilon()) return values;
    if (drift > kNormTolerance) {
        throw NotADistributionError(std::string(what) + ": entries sum to " + std::to_string(sum));
    }
    for (double& v : values) v /= sum;
    return values;
}

}  // namespace

RealVector::RealVector(AlphabetPtr alphabet, std::vector<double> entries)
    : alphabet_(std::move(alphabet)), entries_(std::move(entries)) {
    check_alphabet_size(alphabet_, entries_.size(), "RealVector");
    for (double v : entries_) {
        if (!std::isfinite(v)) throw Error("RealVector: non-finite entry");
    }
}

ProbWord::ProbWord(AlphabetPtr alphabet, std::vector<double> weights)
    : alphabet_(std::move(alphabet)), weights_(std::move(weights)) {
    check_alphabet_size(alphabet_, weights_.size(), "ProbWord");
    double sum = 0.0;
    for (std::size_t i = 0; i < weights_.size(); ++i) {
        const double w = weights_[i];
        if (!(w >= 0.0 && w <= 1.0)) {
            throw NotADistributionError("ProbWord: weight " + std::to_string(w) + " for symbol '" +
                                        alphabet_->symbol(i) + "' is outside [0,1]");
        }
        sum += w;
    }
    weights_ = normalize_sum(std::move(weights_), sum, "ProbWord");
}

std::vector<std::string> ProbWord::support() const {
    std::vector<std::string> result;
    for (std::size_t i = 0; i < weights_.size(); ++i) {
        if (weights_[i] > 0.0) result.push_back(alphabet_->symbol(i));
    }
    return result;
}

FuzzyWord::FuzzyWord(AlphabetPtr alphabet, std::vector<double> memberships)
    : alphabet_(std::move(alphabet)), memberships_(std::move(memberships)) {
    check_alphabet_size(alphabet_, memberships_.size(), "FuzzyWord");
    double sum = 0.0;
    for (std::size_t i = 0; i < memberships_.size(); ++i) {
        const double m = memberships_[i];
        if (!(m >= 0.0 && m <= 1.0)) {
            throw NotADistributionError("FuzzyWord: membership " + std::to_string(m) + " for symbol '" +
                                        alphabet_->symbol(i) + "' is outside [0,1]");
        }
        sum += m;
    }
    if (sum <= 0.0) throw NotADistributionError("FuzzyWord: all memberships are zero");
}

double FuzzyWord::total() const {
    double sum = 0.0;
    for (double m : memberships_) sum += m;
    return sum;
}

ProbWord dirac(const std::string& symbol, const AlphabetPtr& alphabet) {
    const std::size_t i = alphabet->index_of(symbol);
    std::vector<double> weights(alphabet->size(), 0.0);
    weights[i] = 1.0;
    return ProbWord(alphabet, std::move(weights));
}

RealVector scalar_mul(double lambda, const ProbWord& word) {
    if (!(lambda >= 0.0 && lambda <= 1.0)) {
        throw Error("scalar_mul: scalar " + std::to_string(lambda) + " is outside [0,1]");
    }
    std::vector<double> entries(word.size());
    for (std::size_t i = 0; i < entries.size(); ++i) entries[i] = lambda * word[i];
    return RealVector(word.alphabet(), std::move(entries));
}

RealVector linear_combine(const std::vector<std::pair<double, ProbWord>>& terms) {
    if (terms.empty()) throw Error("linear_combine: no terms");
    const AlphabetPtr& alphabet = terms.front().second.alphabet();
    std::vector<double> entries(alphabet->size(), 0.0);
    for (const auto& [k, word] : terms) {
        if (!same_alphabet(word.alphabet(), alphabet)) {
            throw AlphabetMismatchError("linear_combine: words over different alphabets");
        }
        for (std::size_t i = 0; i < entries.size(); ++i) entries[i] += k * word[i];
    }
    return RealVector(alphabet, std::move(entries));
}

ProbWord as_word(const RealVector& v) {
    std::vector<double> weights(v.size());
    double sum = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        double e = v[i];
        if (e < -kNormTolerance || e > 1.0 + kNormTolerance) {
            throw NotADistributionError("as_word: entry " + std::to_string(e) + " for symbol '" +
                                        v.alphabet()->symbol(i) + "' is outside [0,1]");
        }
        weights[i] = std::min(std::max(e, 0.0), 1.0);
        sum += weights[i];
    }
    if (std::abs(sum - 1.0) > kNormTolerance) {
        throw NotADistributionError("as_word: entries sum to " + std::to_string(sum));
    }
    for (double& w : weights) w /= sum;
    return ProbWord(v.alphabet(), std::move(weights));
}

ProbWord normalize_fuzzy(const FuzzyWord& w) {
    const double sum = w.total();
    std::vector<double> weights(w.size());
    for (std::size_t i = 0; i < weights.size(); ++i) weights[i] = w[i] / sum;
    return ProbWord(w.alphabet(), std::move(weights));
}

double euclidean_distance(const ProbWord& a, const ProbWord& b) {
    return euclidean_distance(a.as_vector(), b.as_vector());
}

double euclidean_distance(const RealVector& a, const RealVector& b) {
    if (!same_alphabet(a.alphabet(), b.alphabet())) {
        throw AlphabetMismatchError("euclidean_distance: vectors over different alphabets");
    }
    double sq = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        sq += d * d;
    }
    return std::sqrt(sq);
}

std::vector<double> decompose_in_basis(const ProbWord& word, const std::vector<ProbWord>& basis) {
    const std::size_t n = word.size();
    if (basis.size() != n) {
        throw Error("decompose_in_basis: need exactly " + std::to_string(n) + " basis words, got " +
                    std::to_string(basis.size()));
    }
    for (const ProbWord& b : basis) {
        if (!same_alphabet(b.alphabet(), word.alphabet())) {
            throw AlphabetMismatchError("decompose_in_basis: basis word over a different alphabet");
        }
    }

    // A[j][i] = basis[i](symbol j); solve A k = word.
    std::vector<std::vector<double>> a(n, std::vector<double>(n));
    std::vector<double> rhs(n);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < n; ++i) a[j][i] = basis[i][j];
        rhs[j] = word[j];
    }

    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        for (std::size_t row = col + 1; row < n; ++row) {
            if (std::abs(a[row][col]) > std::abs(a[pivot][col])) pivot = row;
        }
        if (std::abs(a[pivot][col]) < kRankTolerance) {
            throw LinearlyDependentBasisError("decompose_in_basis: basis is linearly dependent");
        }
        if (pivot != col) {
            std::swap(a[pivot], a[col]);
            std::swap(rhs[pivot], rhs[col]);
        }
        for (std::size_t row = col + 1; row < n; ++row) {
            const double f = a[row][col] / a[col][col];
            if (f == 0.0) continue;
            for (std::size_t k = col; k < n; ++k) a[row][k] -= f * a[col][k];
            rhs[row] -= f * rhs[col];
        }
    }

    std::vector<double> k(n);
    for (std::size_t row = n; row-- > 0;) {
        double acc = rhs[row];
        for (std::size_t colv = row + 1; colv < n; ++colv) acc -= a[row][colv] * k[colv];
        k[row] = acc / a[row][row];
    }
    return k;
}

}  // namespace cww
