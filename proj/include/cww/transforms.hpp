#ifndef CWW_TRANSFORMS_HPP
#define CWW_TRANSFORMS_HPP

#include <vector>

#include "cww/automaton.hpp"

namespace cww {

// Conditional weight table chi[symbol][label] = label(symbol) / column
// total, built from a word- or fuzzy-labeled automaton. Each covered
// symbol's weights form a probability distribution over the labels.
struct ChiTable {
    AlphabetPtr alphabet;
    std::vector<std::string> label_names;
    std::vector<std::vector<double>> weights;  // [symbol][label]
    std::vector<double> column_totals;         // sum of label masses per symbol
    std::vector<std::size_t> uncovered;        // symbols with zero column total

    bool covered(std::size_t symbol) const { return column_totals[symbol] > 0.0; }
};

ChiTable make_chi(const WordAutomaton& m);

// Weights of the stored labels given one crisp symbol. Throws
// UncoveredSymbolError when no label puts mass on it.
std::vector<double> chi(const WordAutomaton& m, const std::string& symbol);

// Mixture weight of each stored label for an arbitrary query word:
// theta[W] = sum_sigma query(sigma) * chi[sigma][W]. The fuzzy overload
// normalizes the query's memberships first.
std::vector<double> theta(const ChiTable& table, const ProbWord& query);
std::vector<double> theta(const ChiTable& table, const FuzzyWord& query);
std::vector<double> theta(const WordAutomaton& m, const ProbWord& query);

enum class UncoveredPolicy { Fail, RestrictAlphabet };

// The crisp-input automaton induced from a word- or fuzzy-labeled one:
// each symbol's row is the chi-weighted mixture of the label rows. With
// RestrictAlphabet, uncovered symbols are dropped from the alphabet
// instead of raising an error.
WordAutomaton retract(const WordAutomaton& m, UncoveredPolicy policy = UncoveredPolicy::Fail);

// View a crisp-labeled automaton as word-labeled via Dirac payloads.
// Retraction inverts this exactly.
WordAutomaton dirac_identify(const WordAutomaton& m);

// The all-words automaton induced from a word-labeled one, represented by
// its retraction (the two mixing routes agree row for row); keeps the
// source automaton so eval_eq3 can cross-check against the direct
// label-mixture route.
LazyExtensionAutomaton generalized_extend(const WordAutomaton& m,
                                          UncoveredPolicy policy = UncoveredPolicy::Fail);

// The all-words automaton induced from a crisp-labeled one by mixing its
// own rows with the query word's weights.
LazyExtensionAutomaton pacv_extend(const WordAutomaton& m);

// Direct evaluation over the stored word labels: sum_W theta(W) * row(p, W).
// Requires an extension that kept its source.
StateDistribution eval_eq3(const LazyExtensionAutomaton& e, std::size_t state, const ProbWord& query);

// All-words evaluator for a fuzzy-labeled automaton; queries are
// possibility words, normalized before mixing.
struct FuzzyExtension {
    WordAutomaton source;
    ChiTable table;
};

FuzzyExtension fuzzy_generalized_extend(const WordAutomaton& m,
                                        UncoveredPolicy policy = UncoveredPolicy::Fail);

StateDistribution fuzzy_step(const FuzzyExtension& e, std::size_t state, const FuzzyWord& query);
StateDistribution fuzzy_run(const FuzzyExtension& e, const std::vector<FuzzyWord>& input);
double fuzzy_accept(const FuzzyExtension& e, const std::vector<FuzzyWord>& input);

// Transition row for `query` computed through an arbitrary independent
// basis: decompose the query, evaluate the basis words, recombine. Agrees
// with lazy_step whenever the decomposition exists.
StateDistribution extend_via_basis(const LazyExtensionAutomaton& e, std::size_t state, const ProbWord& query,
                                   const std::vector<ProbWord>& basis);

}  // namespace cww

#endif
