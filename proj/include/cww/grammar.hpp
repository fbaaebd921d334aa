#ifndef CWW_GRAMMAR_HPP
#define CWW_GRAMMAR_HPP

#include <string>
#include <vector>

#include "cww/automaton.hpp"
#include "cww/transforms.hpp"

namespace cww {

// A right-linear probabilistic grammar: every production is A -> aB with
// Pr(B | A, a), plus an all-or-nothing erasing production per variable.
// Labels may be crisp terminals, probability words, or fuzzy words, the
// same as automaton input labels.
struct ProbGrammar {
    std::vector<std::string> variables;
    std::vector<InputLabel> labels;
    AlphabetPtr underlying_alphabet;
    // chain_probs[A][label] is a row over successor variables; empty rows
    // are undefined entries (validate reports them).
    std::vector<std::vector<std::vector<double>>> chain_probs;
    std::size_t start = 0;
    std::vector<double> epsilon_probs;  // each exactly 0 or 1

    std::size_t n_variables() const { return variables.size(); }
    std::size_t n_labels() const { return labels.size(); }

    std::size_t variable_index(const std::string& name) const;
    std::size_t label_index(const std::string& name) const;
};

std::vector<std::string> validate(const ProbGrammar& g);
void ensure_valid(const ProbGrammar& g);

// Probability of generating the given label string: forward products over
// the chain probabilities, each terminal derivation weighted by its
// variable's erasing probability. The empty string yields the start
// variable's erasing probability.
double generate_probability(const ProbGrammar& g, const std::vector<std::string>& input);

// The induced automaton: states are the variables, finals are the
// variables that erase with probability 1. Generation and acceptance
// probabilities coincide on every string.
WordAutomaton automaton_from_grammar(const ProbGrammar& g);

// The induced grammar of an automaton: the inverse construction.
ProbGrammar grammar_from_automaton(const WordAutomaton& m);

// Crisp-terminal grammar induced from a word-labeled one by chi-weighted
// mixing of production probabilities; erasing probabilities are unchanged.
ProbGrammar grammar_retract(const ProbGrammar& g, UncoveredPolicy policy = UncoveredPolicy::Fail);

// All-words grammar evaluator: production probabilities for an arbitrary
// query word are theta-weighted mixtures of the stored ones.
struct GrammarExtension {
    ProbGrammar source;
    ChiTable table;
};

GrammarExtension grammar_generalized_extend(const ProbGrammar& g,
                                            UncoveredPolicy policy = UncoveredPolicy::Fail);

double extended_generate_probability(const GrammarExtension& e, const std::vector<ProbWord>& input);

}  // namespace cww

#endif
