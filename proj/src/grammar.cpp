#include "cww/grammar.hpp"

#include <cmath>

#include "cww/errors.hpp"

namespace cww {

namespace {

// Grammars and automata share the same tabular core; reuse the automaton
// validator through the induced automaton where the shapes agree.
WordAutomaton table_view(const ProbGrammar& g) {
    WordAutomaton m;
    m.states = g.variables;
    m.labels = g.labels;
    m.underlying_alphabet = g.underlying_alphabet;
    m.transitions = g.chain_probs;
    m.initial = g.start;
    for (std::size_t v = 0; v < g.epsilon_probs.size(); ++v) {
        if (g.epsilon_probs[v] == 1.0) m.finals.push_back(v);
    }
    return m;
}

}  // namespace

std::size_t ProbGrammar::variable_index(const std::string& name) const {
    for (std::size_t i = 0; i < variables.size(); ++i) {
        if (variables[i] == name) return i;
    }
    throw Error("unknown variable: " + name);
}

std::size_t ProbGrammar::label_index(const std::string& name) const {
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (labels[i].name == name) return i;
    }
    throw UnknownLabelError(name);
}

std::vector<std::string> validate(const ProbGrammar& g) {
    std::vector<std::string> violations = validate(table_view(g));
    if (g.epsilon_probs.size() != g.n_variables()) {
        violations.push_back("epsilon probabilities cover " + std::to_string(g.epsilon_probs.size()) +
                             " variables, expected " + std::to_string(g.n_variables()));
    } else {
        for (std::size_t v = 0; v < g.epsilon_probs.size(); ++v) {
            const double p = g.epsilon_probs[v];
            if (p != 0.0 && p != 1.0) {
                violations.push_back("erasing probability of '" + g.variables[v] + "' is " +
                                     std::to_string(p) + "; must be exactly 0 or 1");
            }
        }
    }
    if (g.underlying_alphabet) {
        for (const auto& v : g.variables) {
            if (g.underlying_alphabet->contains(v)) {
                violations.push_back("variable '" + v + "' collides with a terminal symbol");
            }
        }
    }
    return violations;
}

void ensure_valid(const ProbGrammar& g) {
    auto violations = validate(g);
    if (!violations.empty()) {
        std::string msg = "invalid grammar:";
        for (const auto& v : violations) msg += "\n  - " + v;
        throw ValidationError(msg, std::move(violations));
    }
}

double generate_probability(const ProbGrammar& g, const std::vector<std::string>& input) {
    const std::size_t n = g.n_variables();
    std::vector<double> current(n, 0.0);
    current[g.start] = 1.0;
    for (const std::string& name : input) {
        const std::size_t a = g.label_index(name);
        std::vector<double> next(n, 0.0);
        for (std::size_t v = 0; v < n; ++v) {
            if (current[v] == 0.0) continue;
            const auto& row = g.chain_probs[v][a];
            for (std::size_t w = 0; w < n; ++w) next[w] += current[v] * row[w];
        }
        current = std::move(next);
    }
    double total = 0.0;
    for (std::size_t v = 0; v < n; ++v) total += current[v] * g.epsilon_probs[v];
    return std::min(std::max(total, 0.0), 1.0);
}

WordAutomaton automaton_from_grammar(const ProbGrammar& g) { return table_view(g); }

ProbGrammar grammar_from_automaton(const WordAutomaton& m) {
    ProbGrammar g;
    g.variables = m.states;
    g.labels = m.labels;
    g.underlying_alphabet = m.underlying_alphabet;
    g.chain_probs = m.transitions;
    g.start = m.initial;
    g.epsilon_probs.assign(m.n_states(), 0.0);
    for (std::size_t f : m.finals) g.epsilon_probs[f] = 1.0;
    return g;
}

ProbGrammar grammar_retract(const ProbGrammar& g, UncoveredPolicy policy) {
    ProbGrammar out = grammar_from_automaton(retract(table_view(g), policy));
    out.epsilon_probs = g.epsilon_probs;
    return out;
}

GrammarExtension grammar_generalized_extend(const ProbGrammar& g, UncoveredPolicy policy) {
    ChiTable table = make_chi(table_view(g));
    if (!table.uncovered.empty() && policy == UncoveredPolicy::Fail) {
        std::vector<std::string> names;
        for (std::size_t s : table.uncovered) names.push_back(g.underlying_alphabet->symbol(s));
        throw UncoveredSymbolError(std::move(names));
    }
    return GrammarExtension{g, std::move(table)};
}

double extended_generate_probability(const GrammarExtension& e, const std::vector<ProbWord>& input) {
    const ProbGrammar& g = e.source;
    const std::size_t n = g.n_variables();
    std::vector<double> current(n, 0.0);
    current[g.start] = 1.0;
    for (const ProbWord& query : input) {
        const std::vector<double> weights = theta(e.table, query);
        std::vector<double> next(n, 0.0);
        for (std::size_t v = 0; v < n; ++v) {
            if (current[v] == 0.0) continue;
            for (std::size_t a = 0; a < g.n_labels(); ++a) {
                if (weights[a] == 0.0) continue;
                const auto& row = g.chain_probs[v][a];
                const double f = current[v] * weights[a];
                for (std::size_t w = 0; w < n; ++w) next[w] += f * row[w];
            }
        }
        current = std::move(next);
    }
    double total = 0.0;
    for (std::size_t v = 0; v < n; ++v) total += current[v] * g.epsilon_probs[v];
    return std::min(std::max(total, 0.0), 1.0);
}

}  // namespace cww
