#include "cww/model_io.hpp"

#include <fstream>
#include <json.hpp>

#include "cww/errors.hpp"
#include "cww/zadeh.hpp"

namespace cww {

namespace {

using nlohmann::json;

constexpr int kFormatVersion = 1;

json labels_to_json(const std::vector<InputLabel>& labels) {
    json out = json::array();
    for (const InputLabel& l : labels) {
        json entry{{"name", l.name}};
        switch (l.kind) {
            case LabelKind::Crisp:
                entry["kind"] = "crisp";
                break;
            case LabelKind::Word:
                entry["kind"] = "word";
                entry["payload"] = format_zadeh(*l.word);
                break;
            case LabelKind::Fuzzy:
                entry["kind"] = "fuzzy";
                entry["payload"] = format_zadeh(*l.fuzzy);
                break;
        }
        out.push_back(std::move(entry));
    }
    return out;
}

std::vector<InputLabel> labels_from_json(const json& doc, const AlphabetPtr& alphabet) {
    std::vector<InputLabel> labels;
    for (const json& entry : doc.at("labels")) {
        const std::string name = entry.at("name").get<std::string>();
        const std::string kind = entry.at("kind").get<std::string>();
        if (kind == "crisp") {
            labels.push_back(InputLabel::crisp(name));
        } else if (kind == "word") {
            labels.push_back(
                InputLabel::from_word(name, parse_prob_word(entry.at("payload").get<std::string>(), alphabet)));
        } else if (kind == "fuzzy") {
            labels.push_back(
                InputLabel::from_fuzzy(name, parse_fuzzy_word(entry.at("payload").get<std::string>(), alphabet)));
        } else {
            throw ParseError("label '" + name + "' has unknown kind '" + kind + "'");
        }
    }
    return labels;
}

// Dense (from, label) -> row table out of a triple list; rows with no
// triple at all stay undefined so that validation can report them.
std::vector<std::vector<std::vector<double>>> table_from_triples(
    const json& triples, const std::vector<std::string>& froms, const std::vector<InputLabel>& labels,
    const char* what) {
    std::vector<std::vector<std::vector<double>>> table(
        froms.size(), std::vector<std::vector<double>>(labels.size()));

    auto index_in = [](const std::vector<std::string>& names, const std::string& name, const char* role) {
        for (std::size_t i = 0; i < names.size(); ++i) {
            if (names[i] == name) return i;
        }
        throw ParseError(std::string(role) + " '" + name + "' is not declared");
    };

    for (const json& t : triples) {
        const std::string from = t.at("from").get<std::string>();
        const std::string label = t.at("label").get<std::string>();
        const std::string to = t.at("to").get<std::string>();
        const double prob = t.at("prob").get<double>();
        const std::size_t p = index_in(froms, from, what);
        std::size_t a = labels.size();
        for (std::size_t i = 0; i < labels.size(); ++i) {
            if (labels[i].name == label) {
                a = i;
                break;
            }
        }
        if (a == labels.size()) throw ParseError("label '" + label + "' is not declared");
        const std::size_t q = index_in(froms, to, what);
        auto& row = table[p][a];
        if (row.empty()) row.assign(froms.size(), 0.0);
        row[q] = prob;
    }
    return table;
}

json table_to_triples(const std::vector<std::vector<std::vector<double>>>& table,
                      const std::vector<std::string>& froms, const std::vector<InputLabel>& labels) {
    json out = json::array();
    for (std::size_t p = 0; p < froms.size(); ++p) {
        for (std::size_t a = 0; a < labels.size(); ++a) {
            for (std::size_t q = 0; q < froms.size(); ++q) {
                out.push_back(json{{"from", froms[p]},
                                   {"label", labels[a].name},
                                   {"to", froms[q]},
                                   {"prob", table[p][a][q]}});
            }
        }
    }
    return out;
}

LoadedModel model_from_json(const json& doc) {
    const int version = doc.at("format_version").get<int>();
    if (version != kFormatVersion) {
        throw ParseError("unsupported format_version " + std::to_string(version));
    }
    const std::string kind = doc.at("kind").get<std::string>();
    AlphabetPtr alphabet = make_alphabet(doc.at("alphabet").get<std::vector<std::string>>());

    LoadedModel loaded;
    if (kind == "automaton") {
        WordAutomaton m;
        m.underlying_alphabet = alphabet;
        m.labels = labels_from_json(doc, alphabet);
        m.states = doc.at("states").get<std::vector<std::string>>();
        m.transitions = table_from_triples(doc.at("transitions"), m.states, m.labels, "state");
        m.initial = m.state_index(doc.at("initial").get<std::string>());
        for (const auto& f : doc.at("finals").get<std::vector<std::string>>()) {
            m.finals.push_back(m.state_index(f));
        }
        ensure_valid(m);
        loaded.model = std::move(m);
        loaded.extended = doc.value("extended", false);
    } else if (kind == "grammar") {
        ProbGrammar g;
        g.underlying_alphabet = alphabet;
        g.labels = labels_from_json(doc, alphabet);
        g.variables = doc.at("variables").get<std::vector<std::string>>();
        g.chain_probs = table_from_triples(doc.at("productions"), g.variables, g.labels, "variable");
        g.start = g.variable_index(doc.at("start").get<std::string>());
        g.epsilon_probs.assign(g.n_variables(), 0.0);
        const json& eps = doc.at("epsilon_probs");
        for (auto it = eps.begin(); it != eps.end(); ++it) {
            g.epsilon_probs[g.variable_index(it.key())] = it.value().get<double>();
        }
        ensure_valid(g);
        loaded.model = std::move(g);
        loaded.extended = doc.value("extended", false);
    } else {
        throw ParseError("unknown model kind '" + kind + "'");
    }
    return loaded;
}

json automaton_to_json(const WordAutomaton& m, bool extended) {
    json doc;
    doc["format_version"] = kFormatVersion;
    doc["kind"] = "automaton";
    doc["alphabet"] = m.underlying_alphabet->symbols();
    doc["labels"] = labels_to_json(m.labels);
    doc["states"] = m.states;
    doc["initial"] = m.states.at(m.initial);
    json finals = json::array();
    for (std::size_t f : m.finals) finals.push_back(m.states.at(f));
    doc["finals"] = std::move(finals);
    doc["transitions"] = table_to_triples(m.transitions, m.states, m.labels);
    doc["extended"] = extended;
    return doc;
}

json grammar_to_json(const ProbGrammar& g, bool extended) {
    json doc;
    doc["format_version"] = kFormatVersion;
    doc["kind"] = "grammar";
    doc["alphabet"] = g.underlying_alphabet->symbols();
    doc["labels"] = labels_to_json(g.labels);
    doc["variables"] = g.variables;
    doc["start"] = g.variables.at(g.start);
    json eps = json::object();
    for (std::size_t v = 0; v < g.n_variables(); ++v) eps[g.variables[v]] = g.epsilon_probs[v];
    doc["epsilon_probs"] = std::move(eps);
    doc["productions"] = table_to_triples(g.chain_probs, g.variables, g.labels);
    doc["extended"] = extended;
    return doc;
}

json parse_stream(std::istream& in) {
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed model file: ") + e.what());
    }
}

}  // namespace

LoadedModel load_model(std::istream& in) {
    const json doc = parse_stream(in);
    try {
        return model_from_json(doc);
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed model file: ") + e.what());
    }
}

LoadedModel load_model_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open model file: " + path);
    return load_model(in);
}

void save_model(std::ostream& out, const WordAutomaton& m, bool extended) {
    out << automaton_to_json(m, extended).dump(2) << '\n';
}

void save_model(std::ostream& out, const ProbGrammar& g, bool extended) {
    out << grammar_to_json(g, extended).dump(2) << '\n';
}

void save_model_file(const std::string& path, const WordAutomaton& m, bool extended) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write model file: " + path);
    save_model(out, m, extended);
}

void save_model_file(const std::string& path, const ProbGrammar& g, bool extended) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write model file: " + path);
    save_model(out, g, extended);
}

}  // namespace cww
