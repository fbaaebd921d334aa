#include "cww/zadeh.hpp"

#include <cctype>
#include <charconv>
#include <vector>

namespace cww {

namespace {

struct Term {
    double weight;
    std::string symbol;
};

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

// term := weight '\' symbol, terms joined by '+'.
std::vector<Term> parse_terms(const std::string& text) {
    std::vector<Term> terms;
    std::size_t pos = 0;
    const std::size_t end = text.size();

    auto skip_ws = [&] {
        while (pos < end && is_space(text[pos])) ++pos;
    };

    skip_ws();
    if (pos == end) throw ParseError("empty word expression");

    while (true) {
        skip_ws();
        const std::size_t num_start = pos;
        while (pos < end && text[pos] != '\\' && text[pos] != '+' && !is_space(text[pos])) ++pos;
        if (pos == end || text[pos] != '\\') {
            throw ParseError("expected '\\' after weight near position " + std::to_string(num_start) +
                             " in '" + text + "'");
        }
        double weight = 0.0;
        const char* first = text.data() + num_start;
        const char* last = text.data() + pos;
        auto [parsed_end, ec] = std::from_chars(first, last, weight);
        if (ec != std::errc() || parsed_end != last || first == last) {
            throw ParseError("bad weight '" + std::string(first, last) + "' in '" + text + "'");
        }
        if (!(weight >= 0.0 && weight <= 1.0)) {
            throw ParseError("weight " + std::string(first, last) + " is outside [0,1]");
        }
        ++pos;  // consume '\'
        const std::size_t sym_start = pos;
        while (pos < end && text[pos] != '+' && text[pos] != '\\' && !is_space(text[pos])) ++pos;
        if (pos == sym_start) throw ParseError("missing symbol after '\\' in '" + text + "'");
        terms.push_back({weight, text.substr(sym_start, pos - sym_start)});

        skip_ws();
        if (pos == end) break;
        if (text[pos] != '+') {
            throw ParseError("expected '+' between terms near position " + std::to_string(pos) + " in '" +
                             text + "'");
        }
        ++pos;
    }
    return terms;
}

std::vector<double> terms_to_values(const std::vector<Term>& terms, const AlphabetPtr& alphabet,
                                    const std::string& text) {
    std::vector<double> values(alphabet->size(), 0.0);
    std::vector<bool> seen(alphabet->size(), false);
    for (const Term& t : terms) {
        const std::size_t i = alphabet->index_of(t.symbol);
        if (seen[i]) throw ParseError("duplicate symbol '" + t.symbol + "' in '" + text + "'");
        seen[i] = true;
        values[i] = t.weight;
    }
    return values;
}

std::string format_double(double v) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

template <typename WordT>
std::string format_support(const WordT& word, const std::vector<double>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (values[i] == 0.0) continue;
        if (!out.empty()) out += " + ";
        out += format_double(values[i]);
        out += '\\';
        out += word.alphabet()->symbol(i);
    }
    return out;
}

}  // namespace

ProbWord parse_prob_word(const std::string& text, const AlphabetPtr& alphabet) {
    return ProbWord(alphabet, terms_to_values(parse_terms(text), alphabet, text));
}

FuzzyWord parse_fuzzy_word(const std::string& text, const AlphabetPtr& alphabet) {
    return FuzzyWord(alphabet, terms_to_values(parse_terms(text), alphabet, text));
}

std::string format_zadeh(const ProbWord& word) { return format_support(word, word.weights()); }

std::string format_zadeh(const FuzzyWord& word) { return format_support(word, word.memberships()); }

}  // namespace cww
