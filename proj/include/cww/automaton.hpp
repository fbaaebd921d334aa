#ifndef CWW_AUTOMATON_HPP
#define CWW_AUTOMATON_HPP

#include <optional>
#include <string>
#include <vector>

#include "cww/words.hpp"

namespace cww {

enum class LabelKind { Crisp, Word, Fuzzy };

// An input label: a crisp symbol of the underlying alphabet, a named
// probability word, or a named possibility word.
struct InputLabel {
    std::string name;
    LabelKind kind = LabelKind::Crisp;
    std::optional<ProbWord> word;    // set iff kind == Word
    std::optional<FuzzyWord> fuzzy;  // set iff kind == Fuzzy

    static InputLabel crisp(std::string symbol) { return {std::move(symbol), LabelKind::Crisp, {}, {}}; }
    static InputLabel from_word(std::string name, ProbWord payload) {
        return {std::move(name), LabelKind::Word, std::move(payload), {}};
    }
    static InputLabel from_fuzzy(std::string name, FuzzyWord payload) {
        return {std::move(name), LabelKind::Fuzzy, {}, std::move(payload)};
    }

    // Mass the label puts on the i-th alphabet symbol; a crisp label acts
    // as the Dirac word of its own symbol.
    double mass_on(std::size_t symbol_index, const Alphabet& alphabet) const;
};

// A probability distribution over the states of one automaton, indexed by
// state position.
class StateDistribution {
public:
    explicit StateDistribution(std::vector<double> probs);

    static StateDistribution dirac(std::size_t state, std::size_t n_states);

    const std::vector<double>& probs() const { return probs_; }
    double operator[](std::size_t i) const { return probs_[i]; }
    std::size_t size() const { return probs_.size(); }

private:
    std::vector<double> probs_;
};

// A probabilistic automaton. One representation covers the crisp-input,
// word-input, and fuzzy-input flavors: the labels carry the distinction.
struct WordAutomaton {
    std::vector<std::string> states;
    std::vector<InputLabel> labels;
    AlphabetPtr underlying_alphabet;
    // transitions[state][label] is a row over states; an empty row means
    // the entry was never defined (validate reports it).
    std::vector<std::vector<std::vector<double>>> transitions;
    std::size_t initial = 0;
    std::vector<std::size_t> finals;

    std::size_t n_states() const { return states.size(); }
    std::size_t n_labels() const { return labels.size(); }

    std::size_t state_index(const std::string& name) const;
    std::size_t label_index(const std::string& name) const;
    bool is_final(std::size_t state) const;

    const std::vector<double>& row(std::size_t state, std::size_t label) const {
        return transitions[state][label];
    }

    bool all_labels_crisp() const;
    bool all_labels_word() const;
    bool all_labels_fuzzy() const;
};

// Structural diagnostics per the model invariants: totality of the
// transition table, row stochasticity, initial/final membership, label
// uniqueness, payload alphabets. Empty result means the automaton is valid.
std::vector<std::string> validate(const WordAutomaton& m);

// Validate and throw ValidationError on any violation.
void ensure_valid(const WordAutomaton& m);

// Extended transition: distribution over states after reading the labels
// from `from`. The empty input yields the Dirac distribution at `from`.
StateDistribution run_from(const WordAutomaton& m, std::size_t from, const std::vector<std::string>& input);
StateDistribution run(const WordAutomaton& m, const std::vector<std::string>& input);

// Mass on final states after reading the input from the initial state.
double accept_probability(const WordAutomaton& m, const std::vector<std::string>& input);

// An automaton over all words, represented by a crisp-labeled base whose
// rows are mixed per the queried word's weights. `source`, when present,
// keeps the word-labeled automaton this extension was derived from so the
// direct label-mixture evaluation stays available for cross-checks.
struct LazyExtensionAutomaton {
    WordAutomaton base;
    std::optional<WordAutomaton> source;
};

// Mixture of the base rows at `state` weighted by the word: the row for a
// Dirac word equals the base row of its symbol.
StateDistribution lazy_step(const LazyExtensionAutomaton& e, std::size_t state, const ProbWord& word);

StateDistribution lazy_run_from(const LazyExtensionAutomaton& e, std::size_t from,
                                const std::vector<ProbWord>& input);
StateDistribution lazy_run(const LazyExtensionAutomaton& e, const std::vector<ProbWord>& input);
double lazy_accept(const LazyExtensionAutomaton& e, const std::vector<ProbWord>& input);

}  // namespace cww

#endif
