#include "cww/automaton.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <unordered_set>

#include "cww/errors.hpp"

namespace cww {

namespace {

std::vector<double> normalized_state_row(std::vector<double> probs, const char* what) {
    double sum = 0.0;
    for (double& p : probs) {
        // tolerate arithmetic dust just outside the interval
        if (!(p >= -kNormTolerance && p <= 1.0 + kNormTolerance)) {
            throw NotADistributionError(std::string(what) + ": probability " + std::to_string(p) +
                                        " is outside [0,1]");
        }
        p = std::min(std::max(p, 0.0), 1.0);
        sum += p;
    }
    const double drift = std::abs(sum - 1.0);
    if (drift <= 4.0 * std::numeric_limits<double>::epsilon()) return probs;
    if (drift > kNormTolerance) {
        throw NotADistributionError(std::string(what) + ": probabilities sum to " + std::to_string(sum));
    }
    for (double& p : probs) p /= sum;
    return probs;
}

// One forward step: mass(q) = sum_p current(p) * row(p)(q).
std::vector<double> forward_step(const std::vector<double>& current,
                                 const std::vector<std::vector<double>>& rows) {
    const std::size_t n = current.size();
    std::vector<double> next(n, 0.0);
    for (std::size_t p = 0; p < n; ++p) {
        const double mass = current[p];
        if (mass == 0.0) continue;
        const std::vector<double>& row = rows[p];
        for (std::size_t q = 0; q < n; ++q) next[q] += mass * row[q];
    }
    return next;
}

double finals_mass(const WordAutomaton& m, const std::vector<double>& dist) {
    double sum = 0.0;
    for (std::size_t q : m.finals) sum += dist[q];
    return std::min(std::max(sum, 0.0), 1.0);
}

}  // namespace

double InputLabel::mass_on(std::size_t symbol_index, const Alphabet& alphabet) const {
    switch (kind) {
        case LabelKind::Crisp:
            return alphabet.index_of(name) == symbol_index ? 1.0 : 0.0;
        case LabelKind::Word:
            return (*word)[symbol_index];
        case LabelKind::Fuzzy:
            return (*fuzzy)[symbol_index];
    }
    return 0.0;
}

StateDistribution::StateDistribution(std::vector<double> probs)
    : probs_(normalized_state_row(std::move(probs), "StateDistribution")) {
    if (probs_.empty()) throw Error("StateDistribution: no states");
}

StateDistribution StateDistribution::dirac(std::size_t state, std::size_t n_states) {
    std::vector<double> probs(n_states, 0.0);
    probs.at(state) = 1.0;
    return StateDistribution(std::move(probs));
}

std::size_t WordAutomaton::state_index(const std::string& name) const {
    for (std::size_t i = 0; i < states.size(); ++i) {
        if (states[i] == name) return i;
    }
    throw Error("unknown state: " + name);
}

std::size_t WordAutomaton::label_index(const std::string& name) const {
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (labels[i].name == name) return i;
    }
    throw UnknownLabelError(name);
}

bool WordAutomaton::is_final(std::size_t state) const {
    return std::find(finals.begin(), finals.end(), state) != finals.end();
}

bool WordAutomaton::all_labels_crisp() const {
    return std::all_of(labels.begin(), labels.end(),
                       [](const InputLabel& l) { return l.kind == LabelKind::Crisp; });
}

bool WordAutomaton::all_labels_word() const {
    return std::all_of(labels.begin(), labels.end(),
                       [](const InputLabel& l) { return l.kind == LabelKind::Word; });
}

bool WordAutomaton::all_labels_fuzzy() const {
    return std::all_of(labels.begin(), labels.end(),
                       [](const InputLabel& l) { return l.kind == LabelKind::Fuzzy; });
}

std::vector<std::string> validate(const WordAutomaton& m) {
    std::vector<std::string> violations;
    const std::size_t n = m.n_states();

    if (n == 0) violations.push_back("automaton has no states");
    if (m.labels.empty()) violations.push_back("automaton has no input labels");
    if (!m.underlying_alphabet) {
        violations.push_back("automaton has no underlying alphabet");
        return violations;
    }

    {
        std::unordered_set<std::string> seen;
        for (const auto& s : m.states) {
            if (!seen.insert(s).second) violations.push_back("duplicate state name: " + s);
        }
    }
    {
        std::unordered_set<std::string> seen;
        for (const InputLabel& l : m.labels) {
            if (!seen.insert(l.name).second) violations.push_back("duplicate label name: " + l.name);
            switch (l.kind) {
                case LabelKind::Crisp:
                    if (!m.underlying_alphabet->contains(l.name)) {
                        violations.push_back("crisp label '" + l.name + "' is not an alphabet symbol");
                    }
                    break;
                case LabelKind::Word:
                    if (!l.word || !same_alphabet(l.word->alphabet(), m.underlying_alphabet)) {
                        violations.push_back("word label '" + l.name +
                                             "' has no payload over the underlying alphabet");
                    }
                    break;
                case LabelKind::Fuzzy:
                    if (!l.fuzzy || !same_alphabet(l.fuzzy->alphabet(), m.underlying_alphabet)) {
                        violations.push_back("fuzzy label '" + l.name +
                                             "' has no payload over the underlying alphabet");
                    }
                    break;
            }
        }
    }

    if (m.initial >= n) violations.push_back("initial state index out of range");
    for (std::size_t f : m.finals) {
        if (f >= n) violations.push_back("final state index out of range");
    }

    if (m.transitions.size() != n) {
        violations.push_back("transition table has " + std::to_string(m.transitions.size()) +
                             " state rows, expected " + std::to_string(n));
        return violations;
    }
    for (std::size_t p = 0; p < n; ++p) {
        if (m.transitions[p].size() != m.n_labels()) {
            violations.push_back("state '" + m.states[p] + "' has " +
                                 std::to_string(m.transitions[p].size()) + " label rows, expected " +
                                 std::to_string(m.n_labels()));
            continue;
        }
        for (std::size_t a = 0; a < m.n_labels(); ++a) {
            const auto& row = m.transitions[p][a];
            const std::string where = "(" + m.states[p] + ", " + m.labels[a].name + ")";
            if (row.empty()) {
                violations.push_back("missing transition row at " + where);
                continue;
            }
            if (row.size() != n) {
                violations.push_back("transition row at " + where + " has wrong size");
                continue;
            }
            double sum = 0.0;
            bool in_range = true;
            for (double v : row) {
                if (!(v >= 0.0 && v <= 1.0)) in_range = false;
                sum += v;
            }
            if (!in_range) {
                violations.push_back("transition row at " + where + " has a probability outside [0,1]");
            } else if (std::abs(sum - 1.0) > kNormTolerance) {
                violations.push_back("transition row at " + where + " sums to " + std::to_string(sum));
            }
        }
    }
    return violations;
}

void ensure_valid(const WordAutomaton& m) {
    auto violations = validate(m);
    if (!violations.empty()) {
        std::string msg = "invalid automaton:";
        for (const auto& v : violations) msg += "\n  - " + v;
        throw ValidationError(msg, std::move(violations));
    }
}

StateDistribution run_from(const WordAutomaton& m, std::size_t from, const std::vector<std::string>& input) {
    std::vector<double> current(m.n_states(), 0.0);
    current.at(from) = 1.0;
    for (const std::string& name : input) {
        const std::size_t a = m.label_index(name);
        std::vector<double> next(m.n_states(), 0.0);
        for (std::size_t p = 0; p < m.n_states(); ++p) {
            const double mass = current[p];
            if (mass == 0.0) continue;
            const auto& row = m.row(p, a);
            for (std::size_t q = 0; q < m.n_states(); ++q) next[q] += mass * row[q];
        }
        current = std::move(next);
    }
    return StateDistribution(std::move(current));
}

StateDistribution run(const WordAutomaton& m, const std::vector<std::string>& input) {
    return run_from(m, m.initial, input);
}

double accept_probability(const WordAutomaton& m, const std::vector<std::string>& input) {
    return finals_mass(m, run(m, input).probs());
}

StateDistribution lazy_step(const LazyExtensionAutomaton& e, std::size_t state, const ProbWord& word) {
    const WordAutomaton& m = e.base;
    if (!same_alphabet(word.alphabet(), m.underlying_alphabet)) {
        throw AlphabetMismatchError("lazy_step: word is over a different alphabet");
    }
    std::vector<double> mixed(m.n_states(), 0.0);
    for (std::size_t s = 0; s < word.size(); ++s) {
        const double w = word[s];
        if (w == 0.0) continue;
        const std::size_t a = m.label_index(m.underlying_alphabet->symbol(s));
        const auto& row = m.row(state, a);
        for (std::size_t q = 0; q < m.n_states(); ++q) mixed[q] += w * row[q];
    }
    return StateDistribution(std::move(mixed));
}

StateDistribution lazy_run_from(const LazyExtensionAutomaton& e, std::size_t from,
                                const std::vector<ProbWord>& input) {
    const std::size_t n = e.base.n_states();
    std::vector<double> current(n, 0.0);
    current.at(from) = 1.0;
    for (const ProbWord& word : input) {
        std::vector<std::vector<double>> rows(n);
        for (std::size_t p = 0; p < n; ++p) rows[p] = lazy_step(e, p, word).probs();
        current = forward_step(current, rows);
    }
    return StateDistribution(std::move(current));
}

StateDistribution lazy_run(const LazyExtensionAutomaton& e, const std::vector<ProbWord>& input) {
    return lazy_run_from(e, e.base.initial, input);
}

double lazy_accept(const LazyExtensionAutomaton& e, const std::vector<ProbWord>& input) {
    return finals_mass(e.base, lazy_run(e, input).probs());
}

}  // namespace cww
