#ifndef CWW_MODEL_IO_HPP
#define CWW_MODEL_IO_HPP

#include <iosfwd>
#include <string>
#include <variant>

#include "cww/grammar.hpp"

namespace cww {

// JSON model files, format_version 1. An automaton document:
//
//   {
//     "format_version": 1,
//     "kind": "automaton",
//     "alphabet": ["a", "b"],
//     "labels": [{"name": "W1", "kind": "word", "payload": "0.9\\a + 0.1\\b"}],
//     "states": ["q0", "q1"],
//     "initial": "q0",
//     "finals": ["q1"],
//     "transitions": [{"from": "q0", "label": "W1", "to": "q1", "prob": 0.5}, ...],
//     "extended": false
//   }
//
// A grammar document replaces states/initial/finals/transitions with
// variables/start/epsilon_probs/productions, where epsilon_probs maps each
// variable to 0 or 1. Crisp labels omit the payload. Probabilities are
// written in shortest round-trip form, so loading reproduces them bit for
// bit.

struct LoadedModel {
    std::variant<WordAutomaton, ProbGrammar> model;
    bool extended = false;  // produced by an extension command; informational

    bool is_automaton() const { return std::holds_alternative<WordAutomaton>(model); }
    const WordAutomaton& automaton() const { return std::get<WordAutomaton>(model); }
    const ProbGrammar& grammar() const { return std::get<ProbGrammar>(model); }
};

LoadedModel load_model(std::istream& in);
LoadedModel load_model_file(const std::string& path);

void save_model(std::ostream& out, const WordAutomaton& m, bool extended = false);
void save_model(std::ostream& out, const ProbGrammar& g, bool extended = false);
void save_model_file(const std::string& path, const WordAutomaton& m, bool extended = false);
void save_model_file(const std::string& path, const ProbGrammar& g, bool extended = false);

}  // namespace cww

#endif
