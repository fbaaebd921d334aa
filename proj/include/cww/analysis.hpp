#ifndef CWW_ANALYSIS_HPP
#define CWW_ANALYSIS_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "cww/grammar.hpp"
#include "cww/transforms.hpp"

namespace cww {

inline constexpr long long kDefaultEnumerationBudget = 2'000'000;

// Right-hand side of the retraction principle, by literal enumeration of
// all label tuples of the input's length: sum over tuples of the word
// language value times the per-position chi weights. Independent of the
// retraction path it checks.
double retraction_principle_oracle(const WordAutomaton& m, const std::vector<std::string>& symbols,
                                   long long budget = kDefaultEnumerationBudget);

// Right-hand side of the extension principle, same enumeration with theta
// weights for the queried words.
double extension_principle_oracle(const WordAutomaton& m, const std::vector<ProbWord>& queries,
                                  long long budget = kDefaultEnumerationBudget);

// Generation probability by literal enumeration of all variable sequences,
// each weighted by the final variable's erasing probability. Exponential;
// desk-scale oracle for the forward evaluator.
double grammar_language_oracle(const ProbGrammar& g, const std::vector<std::string>& input,
                               long long budget = kDefaultEnumerationBudget);

// Outcome of a bounded-length equivalence sweep.
struct EquivalenceReport {
    int max_length = 0;
    double max_abs_gap = 0.0;
    std::vector<std::string> worst_string;
    long long strings_checked = 0;
};

using StringEvaluator = std::function<double(const std::vector<std::string>&)>;

// Exhaustive comparison of two evaluators on every string over `domain`
// up to max_length, in lexicographic order. For all-words evaluators the
// domain is a caller-chosen finite probe set.
EquivalenceReport equivalence_up_to(const StringEvaluator& a, const StringEvaluator& b,
                                    const std::vector<std::string>& domain, int max_length,
                                    long long budget = kDefaultEnumerationBudget);

// A uniform-continuity guarantee: inputs whose per-position distance stays
// below `radius` produce values within `epsilon`.
struct ContinuityBound {
    double epsilon = 0.0;
    int level = 1;
    double radius = 0.0;
    bool for_word_language = false;
};

// Constructive radius for the extension's transition map on strings of
// `level` words: epsilon / ((2|Q|)^(level-1) * sqrt(n)), with the
// word-language variant first splitting epsilon across the finals.
ContinuityBound continuity_radius(const LazyExtensionAutomaton& e, double epsilon, int level,
                                  bool for_word_language);

// Empirical soundness check of a bound: draw string pairs within the
// radius and return the largest value gap observed. Deterministic for a
// given seed.
double continuity_probe(const LazyExtensionAutomaton& e, const ContinuityBound& bound, int samples,
                        std::uint64_t seed);

}  // namespace cww

#endif
