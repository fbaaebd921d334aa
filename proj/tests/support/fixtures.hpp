#ifndef CWW_TESTS_FIXTURES_HPP
#define CWW_TESTS_FIXTURES_HPP

#include <vector>

#include "cww/automaton.hpp"
#include "cww/grammar.hpp"

namespace cww::tests {

// The two-strategy demo model used across the suites: states q0/q1/q2,
// word labels W1 = 0.9\a + 0.1\b and W2 = 0.1\a + 0.9\b, final state q2.
inline WordAutomaton demo_word_automaton() {
    WordAutomaton m;
    m.underlying_alphabet = make_alphabet({"a", "b"});
    m.states = {"q0", "q1", "q2"};
    m.labels = {
        InputLabel::from_word("W1", ProbWord(m.underlying_alphabet, {0.9, 0.1})),
        InputLabel::from_word("W2", ProbWord(m.underlying_alphabet, {0.1, 0.9})),
    };
    m.initial = 0;
    m.finals = {2};
    m.transitions = {
        // q0:        W1 row               W2 row
        {{0.75, 0.2, 0.05}, {0.05, 0.85, 0.1}},
        // q1
        {{0.4, 0.55, 0.05}, {0.05, 0.55, 0.4}},
        // q2
        {{0.1, 0.85, 0.05}, {0.05, 0.1, 0.85}},
    };
    return m;
}

// The same model as a grammar: variables mirror the states, erasing
// probability 1 exactly at q2.
inline ProbGrammar demo_word_grammar() { return grammar_from_automaton(demo_word_automaton()); }

// The demo model with its labels read as possibility words.
inline WordAutomaton demo_fuzzy_automaton() {
    WordAutomaton m = demo_word_automaton();
    for (InputLabel& l : m.labels) {
        l.kind = LabelKind::Fuzzy;
        l.fuzzy = FuzzyWord(m.underlying_alphabet, l.word->weights());
        l.word.reset();
    }
    return m;
}

}  // namespace cww::tests

#endif
