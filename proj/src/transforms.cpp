#include "cww/transforms.hpp"

#include <algorithm>

#include "cww/errors.hpp"

namespace cww {

namespace {

void require_payload_labels(const WordAutomaton& m, const char* what) {
    for (const InputLabel& l : m.labels) {
        if (l.kind == LabelKind::Crisp) {
            throw Error(std::string(what) + ": label '" + l.name + "' is crisp; expected word or fuzzy labels");
        }
    }
}

std::vector<std::string> names_of(const std::vector<std::size_t>& symbol_indices, const Alphabet& alphabet) {
    std::vector<std::string> names;
    names.reserve(symbol_indices.size());
    for (std::size_t i : symbol_indices) names.push_back(alphabet.symbol(i));
    return names;
}

// Mixture of the automaton's label rows at `state` with the given weights.
std::vector<double> mix_rows(const WordAutomaton& m, std::size_t state, const std::vector<double>& weights) {
    std::vector<double> mixed(m.n_states(), 0.0);
    for (std::size_t a = 0; a < m.n_labels(); ++a) {
        const double w = weights[a];
        if (w == 0.0) continue;
        const auto& row = m.row(state, a);
        for (std::size_t q = 0; q < m.n_states(); ++q) mixed[q] += w * row[q];
    }
    return mixed;
}

}  // namespace

ChiTable make_chi(const WordAutomaton& m) {
    require_payload_labels(m, "make_chi");
    const Alphabet& alphabet = *m.underlying_alphabet;
    const std::size_t n = alphabet.size();
    const std::size_t k = m.n_labels();

    ChiTable table;
    table.alphabet = m.underlying_alphabet;
    table.label_names.reserve(k);
    for (const InputLabel& l : m.labels) table.label_names.push_back(l.name);
    table.weights.assign(n, std::vector<double>(k, 0.0));
    table.column_totals.assign(n, 0.0);

    for (std::size_t s = 0; s < n; ++s) {
        double total = 0.0;
        for (std::size_t a = 0; a < k; ++a) {
            const double mass = m.labels[a].mass_on(s, alphabet);
            table.weights[s][a] = mass;
            total += mass;
        }
        table.column_totals[s] = total;
        if (total > 0.0) {
            for (double& w : table.weights[s]) w /= total;
        } else {
            table.uncovered.push_back(s);
        }
    }
    return table;
}

std::vector<double> chi(const WordAutomaton& m, const std::string& symbol) {
    const ChiTable table = make_chi(m);
    const std::size_t s = m.underlying_alphabet->index_of(symbol);
    if (!table.covered(s)) throw UncoveredSymbolError({symbol});
    return table.weights[s];
}

std::vector<double> theta(const ChiTable& table, const ProbWord& query) {
    if (!same_alphabet(query.alphabet(), table.alphabet)) {
        throw AlphabetMismatchError("theta: query word over a different alphabet");
    }
    std::vector<double> result(table.label_names.size(), 0.0);
    for (std::size_t s = 0; s < query.size(); ++s) {
        const double w = query[s];
        if (w == 0.0) continue;
        if (!table.covered(s)) throw UncoveredSymbolError({table.alphabet->symbol(s)});
        for (std::size_t a = 0; a < result.size(); ++a) result[a] += w * table.weights[s][a];
    }
    return result;
}

std::vector<double> theta(const ChiTable& table, const FuzzyWord& query) {
    return theta(table, normalize_fuzzy(query));
}

std::vector<double> theta(const WordAutomaton& m, const ProbWord& query) {
    return theta(make_chi(m), query);
}

WordAutomaton retract(const WordAutomaton& m, UncoveredPolicy policy) {
    const ChiTable table = make_chi(m);
    if (!table.uncovered.empty() && policy == UncoveredPolicy::Fail) {
        throw UncoveredSymbolError(names_of(table.uncovered, *m.underlying_alphabet));
    }

    std::vector<std::size_t> kept;
    for (std::size_t s = 0; s < m.underlying_alphabet->size(); ++s) {
        if (table.covered(s)) kept.push_back(s);
    }
    if (kept.empty()) throw UncoveredSymbolError(names_of(table.uncovered, *m.underlying_alphabet));

    WordAutomaton out;
    out.states = m.states;
    out.underlying_alphabet = kept.size() == m.underlying_alphabet->size()
                                  ? m.underlying_alphabet
                                  : make_alphabet(names_of(kept, *m.underlying_alphabet));
    out.labels.reserve(kept.size());
    for (std::size_t s : kept) out.labels.push_back(InputLabel::crisp(m.underlying_alphabet->symbol(s)));
    out.initial = m.initial;
    out.finals = m.finals;

    out.transitions.assign(m.n_states(), {});
    for (std::size_t p = 0; p < m.n_states(); ++p) {
        out.transitions[p].reserve(kept.size());
        for (std::size_t s : kept) {
            out.transitions[p].push_back(
                StateDistribution(mix_rows(m, p, table.weights[s])).probs());
        }
    }
    ensure_valid(out);
    return out;
}

WordAutomaton dirac_identify(const WordAutomaton& m) {
    if (!m.all_labels_crisp()) throw Error("dirac_identify: automaton labels must all be crisp");
    WordAutomaton out = m;
    for (InputLabel& l : out.labels) {
        l.kind = LabelKind::Word;
        l.word = dirac(l.name, m.underlying_alphabet);
    }
    return out;
}

LazyExtensionAutomaton generalized_extend(const WordAutomaton& m, UncoveredPolicy policy) {
    LazyExtensionAutomaton e;
    e.base = retract(m, policy);
    e.source = m;
    return e;
}

LazyExtensionAutomaton pacv_extend(const WordAutomaton& m) {
    if (!m.all_labels_crisp()) throw Error("pacv_extend: automaton labels must all be crisp");
    return LazyExtensionAutomaton{m, std::nullopt};
}

StateDistribution eval_eq3(const LazyExtensionAutomaton& e, std::size_t state, const ProbWord& query) {
    if (!e.source) throw Error("eval_eq3: extension has no source automaton");
    const WordAutomaton& src = *e.source;
    return StateDistribution(mix_rows(src, state, theta(src, query)));
}

FuzzyExtension fuzzy_generalized_extend(const WordAutomaton& m, UncoveredPolicy policy) {
    if (!m.all_labels_fuzzy()) throw Error("fuzzy_generalized_extend: automaton labels must all be fuzzy");
    ChiTable table = make_chi(m);
    if (!table.uncovered.empty() && policy == UncoveredPolicy::Fail) {
        throw UncoveredSymbolError(names_of(table.uncovered, *m.underlying_alphabet));
    }
    return FuzzyExtension{m, std::move(table)};
}

StateDistribution fuzzy_step(const FuzzyExtension& e, std::size_t state, const FuzzyWord& query) {
    return StateDistribution(mix_rows(e.source, state, theta(e.table, query)));
}

StateDistribution fuzzy_run(const FuzzyExtension& e, const std::vector<FuzzyWord>& input) {
    const std::size_t n = e.source.n_states();
    std::vector<double> current(n, 0.0);
    current[e.source.initial] = 1.0;
    for (const FuzzyWord& word : input) {
        std::vector<double> next(n, 0.0);
        for (std::size_t p = 0; p < n; ++p) {
            if (current[p] == 0.0) continue;
            const auto step = fuzzy_step(e, p, word);
            for (std::size_t q = 0; q < n; ++q) next[q] += current[p] * step[q];
        }
        current = std::move(next);
    }
    return StateDistribution(std::move(current));
}

double fuzzy_accept(const FuzzyExtension& e, const std::vector<FuzzyWord>& input) {
    const auto dist = fuzzy_run(e, input);
    double sum = 0.0;
    for (std::size_t q : e.source.finals) sum += dist[q];
    return std::min(std::max(sum, 0.0), 1.0);
}

StateDistribution extend_via_basis(const LazyExtensionAutomaton& e, std::size_t state, const ProbWord& query,
                                   const std::vector<ProbWord>& basis) {
    const std::vector<double> k = decompose_in_basis(query, basis);
    std::vector<double> mixed(e.base.n_states(), 0.0);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (k[i] == 0.0) continue;
        const auto row = lazy_step(e, state, basis[i]);
        for (std::size_t q = 0; q < mixed.size(); ++q) mixed[q] += k[i] * row[q];
    }
    // Coefficients may be negative; the recombined row is a distribution
    // whenever the query itself is a word, up to solve tolerance.
    for (double& p : mixed) p = std::min(std::max(p, 0.0), 1.0);
    return StateDistribution(std::move(mixed));
}

}  // namespace cww
