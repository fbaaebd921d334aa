#include "cww/analysis.hpp"

#include <cmath>

#include "cww/errors.hpp"
#include "cww/random.hpp"

namespace cww {

namespace {

long long checked_pow(std::size_t base, std::size_t exp, long long budget) {
    if (base == 0) return exp == 0 ? 1 : 0;
    long long result = 1;
    for (std::size_t i = 0; i < exp; ++i) {
        if (result > budget / static_cast<long long>(base)) return budget + 1;
        result *= static_cast<long long>(base);
    }
    return result;
}

// Enumerate tuples in lexicographic order; keeps floating-point sums
// reproducible regardless of internals.
template <typename Visit>
void for_each_tuple(std::size_t domain, std::size_t length, Visit visit) {
    std::vector<std::size_t> tuple(length, 0);
    while (true) {
        visit(tuple);
        std::size_t pos = length;
        while (pos > 0) {
            --pos;
            if (++tuple[pos] < domain) break;
            tuple[pos] = 0;
            if (pos == 0) return;
        }
        if (length == 0) return;
    }
}

double principle_oracle(const WordAutomaton& m, const std::vector<std::vector<double>>& position_weights,
                        long long budget) {
    const std::size_t l = position_weights.size();
    const std::size_t k = m.n_labels();
    const long long required = checked_pow(k, l, budget);
    if (required > budget) throw BudgetExceededError(required, budget);

    std::vector<std::string> names(l);
    double total = 0.0;
    for_each_tuple(k, l, [&](const std::vector<std::size_t>& tuple) {
        double weight = 1.0;
        for (std::size_t i = 0; i < l; ++i) {
            weight *= position_weights[i][tuple[i]];
            names[i] = m.labels[tuple[i]].name;
        }
        total += accept_probability(m, names) * weight;
    });
    return total;
}

}  // namespace

double retraction_principle_oracle(const WordAutomaton& m, const std::vector<std::string>& symbols,
                                   long long budget) {
    const ChiTable table = make_chi(m);
    std::vector<std::vector<double>> position_weights;
    position_weights.reserve(symbols.size());
    for (const std::string& symbol : symbols) {
        const std::size_t s = m.underlying_alphabet->index_of(symbol);
        if (!table.covered(s)) throw UncoveredSymbolError({symbol});
        position_weights.push_back(table.weights[s]);
    }
    return principle_oracle(m, position_weights, budget);
}

double extension_principle_oracle(const WordAutomaton& m, const std::vector<ProbWord>& queries,
                                  long long budget) {
    const ChiTable table = make_chi(m);
    std::vector<std::vector<double>> position_weights;
    position_weights.reserve(queries.size());
    for (const ProbWord& query : queries) position_weights.push_back(theta(table, query));
    return principle_oracle(m, position_weights, budget);
}

double grammar_language_oracle(const ProbGrammar& g, const std::vector<std::string>& input,
                               long long budget) {
    const std::size_t l = input.size();
    if (l == 0) return g.epsilon_probs[g.start];

    const std::size_t n = g.n_variables();
    const long long required = checked_pow(n, l, budget);
    if (required > budget) throw BudgetExceededError(required, budget);

    std::vector<std::size_t> label_indices;
    label_indices.reserve(l);
    for (const std::string& name : input) label_indices.push_back(g.label_index(name));

    double total = 0.0;
    for_each_tuple(n, l, [&](const std::vector<std::size_t>& vars) {
        double product = 1.0;
        std::size_t prev = g.start;
        for (std::size_t i = 0; i < l; ++i) {
            product *= g.chain_probs[prev][label_indices[i]][vars[i]];
            prev = vars[i];
        }
        total += product * g.epsilon_probs[vars[l - 1]];
    });
    return total;
}

EquivalenceReport equivalence_up_to(const StringEvaluator& a, const StringEvaluator& b,
                                    const std::vector<std::string>& domain, int max_length,
                                    long long budget) {
    if (max_length < 0) throw Error("equivalence_up_to: negative max_length");
    long long required = 0;
    for (int l = 0; l <= max_length; ++l) {
        const long long count = checked_pow(domain.size(), static_cast<std::size_t>(l), budget);
        required += count;
        if (count > budget || required > budget) throw BudgetExceededError(required, budget);
    }

    EquivalenceReport report;
    report.max_length = max_length;
    std::vector<std::string> input;
    for (int l = 0; l <= max_length; ++l) {
        input.assign(static_cast<std::size_t>(l), domain.empty() ? std::string() : domain.front());
        for_each_tuple(domain.size(), static_cast<std::size_t>(l), [&](const std::vector<std::size_t>& tuple) {
            for (std::size_t i = 0; i < tuple.size(); ++i) input[i] = domain[tuple[i]];
            const double gap = std::abs(a(input) - b(input));
            ++report.strings_checked;
            if (gap > report.max_abs_gap) {
                report.max_abs_gap = gap;
                report.worst_string = input;
            }
        });
        if (domain.empty()) break;  // only the empty string exists
    }
    return report;
}

ContinuityBound continuity_radius(const LazyExtensionAutomaton& e, double epsilon, int level,
                                  bool for_word_language) {
    if (!(epsilon > 0.0)) throw Error("continuity_radius: epsilon must be positive");
    if (level < 1) throw Error("continuity_radius: level must be at least 1");

    const double n = static_cast<double>(e.base.underlying_alphabet->size());
    const double n_states = static_cast<double>(e.base.n_states());
    double eps_eff = epsilon;
    if (for_word_language) {
        // With no final states every value is zero and any radius works.
        const double n_finals = std::max<std::size_t>(e.base.finals.size(), 1);
        eps_eff /= n_finals;
    }
    ContinuityBound bound;
    bound.epsilon = epsilon;
    bound.level = level;
    bound.for_word_language = for_word_language;
    bound.radius = eps_eff / (std::pow(2.0 * n_states, level - 1) * std::sqrt(n));
    return bound;
}

double continuity_probe(const LazyExtensionAutomaton& e, const ContinuityBound& bound, int samples,
                        std::uint64_t seed) {
    if (samples < 1) throw Error("continuity_probe: need at least one sample");
    Rng rng(seed);
    const AlphabetPtr& alphabet = e.base.underlying_alphabet;
    const std::size_t level = static_cast<std::size_t>(bound.level);
    const std::size_t n = e.base.n_states();

    double worst = 0.0;
    for (int s = 0; s < samples; ++s) {
        std::vector<ProbWord> first;
        std::vector<ProbWord> second;
        first.reserve(level);
        second.reserve(level);
        for (std::size_t i = 0; i < level; ++i) {
            ProbWord base = rng.word(alphabet);
            ProbWord near = perturb_within(rng, base, bound.radius);
            first.push_back(std::move(base));
            second.push_back(std::move(near));
        }
        if (bound.for_word_language) {
            worst = std::max(worst, std::abs(lazy_accept(e, first) - lazy_accept(e, second)));
        } else {
            for (std::size_t p = 0; p < n; ++p) {
                const auto da = lazy_run_from(e, p, first);
                const auto db = lazy_run_from(e, p, second);
                for (std::size_t q = 0; q < n; ++q) {
                    worst = std::max(worst, std::abs(da[q] - db[q]));
                }
            }
        }
    }
    return worst;
}

}  // namespace cww
