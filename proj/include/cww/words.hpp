#ifndef CWW_WORDS_HPP
#define CWW_WORDS_HPP

#include <string>
#include <utility>
#include <vector>

#include "cww/alphabet.hpp"

namespace cww {

// Tolerances for floating-point validation. Distribution sums within
// kNormTolerance of 1 are renormalized on construction; beyond it the
// input is rejected.
inline constexpr double kNormTolerance = 1e-9;
inline constexpr double kSolveTolerance = 1e-9;
inline constexpr double kRankTolerance = 1e-12;

class ProbWord;

// An arbitrary real-valued vector indexed by an alphabet. Linear
// combinations of words live here; they need not be stochastic.
class RealVector {
public:
    RealVector(AlphabetPtr alphabet, std::vector<double> entries);

    const AlphabetPtr& alphabet() const { return alphabet_; }
    const std::vector<double>& entries() const { return entries_; }
    double operator[](std::size_t i) const { return entries_[i]; }
    double at(const std::string& symbol) const { return entries_[alphabet_->index_of(symbol)]; }
    std::size_t size() const { return entries_.size(); }

private:
    AlphabetPtr alphabet_;
    std::vector<double> entries_;
};

// A probability distribution over an alphabet: the "word" of computing
// with words. Weights lie in [0,1] and sum to 1 (renormalized within
// kNormTolerance on construction).
class ProbWord {
public:
    ProbWord(AlphabetPtr alphabet, std::vector<double> weights);

    const AlphabetPtr& alphabet() const { return alphabet_; }
    const std::vector<double>& weights() const { return weights_; }
    double operator[](std::size_t i) const { return weights_[i]; }
    double at(const std::string& symbol) const { return weights_[alphabet_->index_of(symbol)]; }
    std::size_t size() const { return weights_.size(); }

    std::vector<std::string> support() const;

    RealVector as_vector() const { return RealVector(alphabet_, weights_); }

private:
    AlphabetPtr alphabet_;
    std::vector<double> weights_;
};

// A possibility distribution (fuzzy subset) over an alphabet. Memberships
// lie in [0,1]; at least one must be positive so that normalization is
// defined.
class FuzzyWord {
public:
    FuzzyWord(AlphabetPtr alphabet, std::vector<double> memberships);

    const AlphabetPtr& alphabet() const { return alphabet_; }
    const std::vector<double>& memberships() const { return memberships_; }
    double operator[](std::size_t i) const { return memberships_[i]; }
    double at(const std::string& symbol) const { return memberships_[alphabet_->index_of(symbol)]; }
    std::size_t size() const { return memberships_.size(); }

    double total() const;

private:
    AlphabetPtr alphabet_;
    std::vector<double> memberships_;
};

// The word putting all mass on one symbol.
ProbWord dirac(const std::string& symbol, const AlphabetPtr& alphabet);

// Componentwise product with a scalar in [0,1]; generally not a word.
RealVector scalar_mul(double lambda, const ProbWord& word);

// Sum of coefficient-weighted words over a shared alphabet.
RealVector linear_combine(const std::vector<std::pair<double, ProbWord>>& terms);

// Gatekeeper from vectors back to words: succeeds iff every entry is in
// [-kNormTolerance, 1+kNormTolerance] and the entries sum to 1 within
// kNormTolerance; clamps and renormalizes. Throws NotADistributionError
// otherwise.
ProbWord as_word(const RealVector& v);

// Scale a fuzzy word by its total so it becomes a probability word.
ProbWord normalize_fuzzy(const FuzzyWord& w);

// Euclidean metric on words seen as points of the probability simplex.
double euclidean_distance(const ProbWord& a, const ProbWord& b);
double euclidean_distance(const RealVector& a, const RealVector& b);

// Coefficients k with word = sum_i k[i] * basis[i], solved by Gaussian
// elimination with partial pivoting. The basis must contain exactly
// |alphabet| words; throws LinearlyDependentBasisError when singular.
std::vector<double> decompose_in_basis(const ProbWord& word, const std::vector<ProbWord>& basis);

}  // namespace cww

#endif
