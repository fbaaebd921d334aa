// Command-line front end: evaluate models, derive retractions and
// extensions, convert between automata and grammars, and run the
// numerical checks. Exit codes are a contract:
//   0 success / check passed      1 check failed
//   2 malformed or wrong-kind model file
//   3 unknown label or symbol, or unusable input for the model
//   4 uncovered symbol            5 enumeration budget exceeded
#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "cww/analysis.hpp"
#include "cww/model_io.hpp"
#include "cww/random.hpp"
#include "cww/zadeh.hpp"

using nlohmann::json;

namespace {

struct GlobalOptions {
    int precision = 6;
    double tol = 1e-9;
    std::uint64_t seed = 0;
    bool restrict_alphabet = false;
    long long budget = cww::kDefaultEnumerationBudget;
};

class CommandError : public std::runtime_error {
public:
    CommandError(int exit_code, const std::string& what) : std::runtime_error(what), code(exit_code) {}
    int code;
};

std::string format_probability(double value, int precision) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", precision, value);
    return buf;
}

cww::UncoveredPolicy policy_of(const GlobalOptions& opts) {
    return opts.restrict_alphabet ? cww::UncoveredPolicy::RestrictAlphabet : cww::UncoveredPolicy::Fail;
}

// Input tokens: anything containing '\' is one Zadeh word; anything else
// is split on whitespace into label names. The two styles cannot be mixed.
struct ParsedInput {
    std::vector<std::string> names;
    std::vector<std::string> zadeh;  // unparsed word texts
    bool is_words = false;
};

ParsedInput classify_input(const std::vector<std::string>& tokens) {
    ParsedInput input;
    bool has_names = false;
    for (const std::string& token : tokens) {
        if (token.find('\\') != std::string::npos) {
            input.is_words = true;
            input.zadeh.push_back(token);
        } else {
            std::string current;
            for (char c : token) {
                if (std::isspace(static_cast<unsigned char>(c))) {
                    if (!current.empty()) {
                        input.names.push_back(current);
                        has_names = true;
                        current.clear();
                    }
                } else {
                    current += c;
                }
            }
            if (!current.empty()) {
                input.names.push_back(current);
                has_names = true;
            }
        }
    }
    if (input.is_words && has_names) {
        throw CommandError(3, "cannot mix label names and Zadeh words in one input");
    }
    return input;
}

cww::LoadedModel load_or_die(const std::string& path) { return cww::load_model_file(path); }

const cww::WordAutomaton& require_automaton(const cww::LoadedModel& loaded, const char* command) {
    if (!loaded.is_automaton()) {
        throw CommandError(2, std::string("model is a grammar; use 'grammar ") + command + "' instead");
    }
    return loaded.automaton();
}

const cww::ProbGrammar& require_grammar(const cww::LoadedModel& loaded, const char* command) {
    if (loaded.is_automaton()) {
        throw CommandError(2, std::string("model is an automaton; use '") + command + "' instead");
    }
    return loaded.grammar();
}

std::vector<cww::ProbWord> parse_word_inputs(const std::vector<std::string>& texts,
                                             const cww::AlphabetPtr& alphabet) {
    std::vector<cww::ProbWord> words;
    for (const std::string& t : texts) {
        try {
            words.push_back(cww::parse_prob_word(t, alphabet));
        } catch (const cww::UnknownSymbolError&) {
            throw;
        } catch (const cww::Error& e) {
            throw CommandError(3, "bad input word '" + t + "': " + e.what());
        }
    }
    return words;
}

std::vector<cww::FuzzyWord> parse_fuzzy_inputs(const std::vector<std::string>& texts,
                                               const cww::AlphabetPtr& alphabet) {
    std::vector<cww::FuzzyWord> words;
    for (const std::string& t : texts) {
        try {
            words.push_back(cww::parse_fuzzy_word(t, alphabet));
        } catch (const cww::UnknownSymbolError&) {
            throw;
        } catch (const cww::Error& e) {
            throw CommandError(3, "bad input word '" + t + "': " + e.what());
        }
    }
    return words;
}

double eval_model(const cww::LoadedModel& loaded, const ParsedInput& input, const GlobalOptions& opts) {
    if (loaded.is_automaton()) {
        const cww::WordAutomaton& m = loaded.automaton();
        if (!input.is_words) return accept_probability(m, input.names);
        if (m.all_labels_crisp()) {
            return lazy_accept(cww::pacv_extend(m), parse_word_inputs(input.zadeh, m.underlying_alphabet));
        }
        if (m.all_labels_fuzzy()) {
            return fuzzy_accept(cww::fuzzy_generalized_extend(m, policy_of(opts)),
                                parse_fuzzy_inputs(input.zadeh, m.underlying_alphabet));
        }
        throw CommandError(3,
                           "Zadeh-word inputs need a crisp model; run 'extend' (or 'retract') on this "
                           "word-labeled model first");
    }
    const cww::ProbGrammar& g = loaded.grammar();
    if (!input.is_words) return generate_probability(g, input.names);
    const cww::WordAutomaton view = automaton_from_grammar(g);
    if (view.all_labels_crisp()) {
        return lazy_accept(cww::pacv_extend(view), parse_word_inputs(input.zadeh, g.underlying_alphabet));
    }
    throw CommandError(3,
                       "Zadeh-word inputs need a crisp grammar; run 'grammar extend' (or 'grammar "
                       "retract') first");
}

// ---- check reports ----

json equivalence_report_json(const char* kind, const cww::EquivalenceReport& report, double tol) {
    return json{{"kind", kind},
                {"max_length", report.max_length},
                {"strings_checked", report.strings_checked},
                {"max_abs_gap", report.max_abs_gap},
                {"worst_string", report.worst_string},
                {"tolerance", tol},
                {"passed", report.max_abs_gap <= tol}};
}

int emit_report(const json& report) {
    std::cout << report.dump(2) << '\n';
    return report.at("passed").get<bool>() ? 0 : 1;
}

int check_retraction(const cww::LoadedModel& loaded, int max_len, const GlobalOptions& opts) {
    cww::StringEvaluator direct;
    cww::StringEvaluator oracle;
    cww::AlphabetPtr alphabet;

    if (loaded.is_automaton()) {
        const cww::WordAutomaton& m = loaded.automaton();
        if (m.all_labels_crisp()) throw CommandError(3, "retraction check needs word or fuzzy labels");
        auto retracted = std::make_shared<cww::WordAutomaton>(retract(m, policy_of(opts)));
        alphabet = retracted->underlying_alphabet;
        auto source = std::make_shared<cww::WordAutomaton>(m);
        direct = [retracted](const std::vector<std::string>& s) { return accept_probability(*retracted, s); };
        oracle = [source, &opts](const std::vector<std::string>& s) {
            return retraction_principle_oracle(*source, s, opts.budget);
        };
    } else {
        const cww::ProbGrammar& g = loaded.grammar();
        auto retracted = std::make_shared<cww::ProbGrammar>(grammar_retract(g, policy_of(opts)));
        alphabet = retracted->underlying_alphabet;
        auto view = std::make_shared<cww::WordAutomaton>(automaton_from_grammar(g));
        direct = [retracted](const std::vector<std::string>& s) { return generate_probability(*retracted, s); };
        oracle = [view, &opts](const std::vector<std::string>& s) {
            return retraction_principle_oracle(*view, s, opts.budget);
        };
    }
    const auto report = cww::equivalence_up_to(direct, oracle, alphabet->symbols(), max_len, opts.budget);
    return emit_report(equivalence_report_json("retraction", report, opts.tol));
}

int check_extension(const cww::LoadedModel& loaded, int max_len, int samples, const GlobalOptions& opts) {
    const cww::WordAutomaton view =
        loaded.is_automaton() ? loaded.automaton() : automaton_from_grammar(loaded.grammar());
    if (view.all_labels_crisp()) throw CommandError(3, "extension check needs word or fuzzy labels");
    const cww::LazyExtensionAutomaton lazy = generalized_extend(view, policy_of(opts));

    cww::Rng rng(opts.seed);
    double worst = 0.0;
    std::vector<std::string> worst_string;
    long long checked = 0;
    for (int len = 0; len <= max_len; ++len) {
        const int draws = len == 0 ? 1 : samples;
        for (int i = 0; i < draws; ++i) {
            std::vector<cww::ProbWord> queries;
            for (int j = 0; j < len; ++j) queries.push_back(rng.word(view.underlying_alphabet));
            const double a = lazy_accept(lazy, queries);
            const double b = cww::extension_principle_oracle(view, queries, opts.budget);
            ++checked;
            if (std::abs(a - b) > worst) {
                worst = std::abs(a - b);
                worst_string.clear();
                for (const auto& q : queries) worst_string.push_back(format_zadeh(q));
            }
        }
    }
    json report{{"kind", "extension"}, {"max_length", max_len},      {"samples", samples},
                {"seed", opts.seed},   {"strings_checked", checked}, {"max_abs_gap", worst},
                {"worst_string", worst_string}, {"tolerance", opts.tol}, {"passed", worst <= opts.tol}};
    return emit_report(report);
}

cww::StringEvaluator evaluator_of(const cww::LoadedModel& loaded) {
    if (loaded.is_automaton()) {
        auto m = std::make_shared<cww::WordAutomaton>(loaded.automaton());
        return [m](const std::vector<std::string>& s) { return accept_probability(*m, s); };
    }
    auto g = std::make_shared<cww::ProbGrammar>(loaded.grammar());
    return [g](const std::vector<std::string>& s) { return generate_probability(*g, s); };
}

std::vector<std::string> model_label_names(const cww::LoadedModel& loaded) {
    const auto& labels = loaded.is_automaton() ? loaded.automaton().labels : loaded.grammar().labels;
    std::vector<std::string> names;
    for (const auto& l : labels) names.push_back(l.name);
    return names;
}

int check_equiv(const cww::LoadedModel& a, const cww::LoadedModel& b, int max_len,
                const GlobalOptions& opts) {
    const auto domain = model_label_names(a);
    const auto other = model_label_names(b);
    for (const std::string& name : domain) {
        if (std::find(other.begin(), other.end(), name) == other.end()) {
            throw cww::UnknownLabelError(name);
        }
    }
    if (other.size() != domain.size()) {
        throw cww::UnknownLabelError(other.size() > domain.size() ? "extra labels in second model"
                                                                  : "missing labels in second model");
    }
    const auto report = cww::equivalence_up_to(evaluator_of(a), evaluator_of(b), domain, max_len, opts.budget);
    return emit_report(equivalence_report_json("equiv", report, opts.tol));
}

int check_continuity(const cww::LoadedModel& loaded, double epsilon, int level, int samples,
                     bool word_language, const GlobalOptions& opts) {
    const cww::WordAutomaton view =
        loaded.is_automaton() ? loaded.automaton() : automaton_from_grammar(loaded.grammar());
    const cww::LazyExtensionAutomaton lazy =
        view.all_labels_crisp() ? cww::pacv_extend(view) : generalized_extend(view, policy_of(opts));

    const cww::ContinuityBound bound = cww::continuity_radius(lazy, epsilon, level, word_language);
    const double observed = cww::continuity_probe(lazy, bound, samples, opts.seed);
    json report{{"kind", "continuity"},
                {"epsilon", bound.epsilon},
                {"level", bound.level},
                {"radius", bound.radius},
                {"for_word_language", bound.for_word_language},
                {"samples", samples},
                {"seed", opts.seed},
                {"max_observed_gap", observed},
                {"passed", observed < epsilon}};
    return emit_report(report);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"probabilistic automata and grammars over distribution-valued inputs"};
    app.require_subcommand(1);

    GlobalOptions opts;
    app.add_option("--precision", opts.precision, "decimal digits for printed probabilities")
        ->capture_default_str();
    app.add_option("--tol", opts.tol, "tolerance for checks")->capture_default_str();
    app.add_option("--seed", opts.seed, "seed for sampled checks")->capture_default_str();
    app.add_flag("--restrict-alphabet", opts.restrict_alphabet,
                 "drop uncovered symbols instead of failing");
    app.add_option("--budget", opts.budget, "enumeration budget for exhaustive checks")
        ->capture_default_str();

    // eval
    std::string eval_path;
    std::vector<std::string> eval_inputs;
    auto* eval_cmd = app.add_subcommand("eval", "print the acceptance/generation probability of an input");
    eval_cmd->add_option("model", eval_path, "model file")->required();
    eval_cmd->add_option("input", eval_inputs, "label names or Zadeh words");

    // retract / extend
    std::string tf_in, tf_out;
    auto* retract_cmd = app.add_subcommand("retract", "write the crisp-input model induced by the labels");
    retract_cmd->add_option("model", tf_in, "model file")->required();
    retract_cmd->add_option("-o,--out", tf_out, "output file")->required();
    auto* extend_cmd = app.add_subcommand("extend", "write the all-words model (crisp base, extended tag)");
    extend_cmd->add_option("model", tf_in, "model file")->required();
    extend_cmd->add_option("-o,--out", tf_out, "output file")->required();

    // grammar subcommands
    auto* grammar_cmd = app.add_subcommand("grammar", "grammar conversions and transforms");
    grammar_cmd->require_subcommand(1);
    std::string g_in, g_out;
    auto* g_to_auto = grammar_cmd->add_subcommand("to-automaton", "induce the automaton of a grammar");
    auto* g_from_auto = grammar_cmd->add_subcommand("from-automaton", "induce the grammar of an automaton");
    auto* g_retract = grammar_cmd->add_subcommand("retract", "retraction of a word-labeled grammar");
    auto* g_extend = grammar_cmd->add_subcommand("extend", "all-words form of a word-labeled grammar");
    for (auto* sub : {g_to_auto, g_from_auto, g_retract, g_extend}) {
        sub->add_option("model", g_in, "input model file")->required();
        sub->add_option("-o,--out", g_out, "output file")->required();
    }

    // check subcommands
    auto* check_cmd = app.add_subcommand("check", "numerical identity and continuity checks");
    check_cmd->require_subcommand(1);
    std::string c_in, c_in2;
    int c_max_len = 3;
    int c_samples = 50;
    double c_epsilon = 0.001;
    int c_level = 1;
    bool c_word_language = false;
    auto* c_retraction = check_cmd->add_subcommand("retraction", "retraction principle identity");
    c_retraction->add_option("model", c_in)->required();
    c_retraction->add_option("--max-len", c_max_len)->capture_default_str();
    auto* c_extension = check_cmd->add_subcommand("extension", "extension principle identity");
    c_extension->add_option("model", c_in)->required();
    c_extension->add_option("--max-len", c_max_len)->capture_default_str();
    c_extension->add_option("--samples", c_samples)->capture_default_str();
    auto* c_equiv = check_cmd->add_subcommand("equiv", "bounded-length equivalence of two models");
    c_equiv->add_option("model_a", c_in)->required();
    c_equiv->add_option("model_b", c_in2)->required();
    c_equiv->add_option("--max-len", c_max_len)->capture_default_str();
    auto* c_continuity = check_cmd->add_subcommand("continuity", "constructive radius plus probe");
    c_continuity->add_option("model", c_in)->required();
    c_continuity->add_option("--epsilon", c_epsilon)->capture_default_str();
    c_continuity->add_option("--level", c_level)->capture_default_str();
    c_continuity->add_option("--samples", c_samples)->capture_default_str();
    c_continuity->add_flag("--word-language", c_word_language);

    // let --tol/--seed/... appear after the subcommand as well
    const std::function<void(CLI::App*)> enable_fallthrough = [&](CLI::App* cmd) {
        for (CLI::App* sub : cmd->get_subcommands({})) {
            sub->fallthrough();
            enable_fallthrough(sub);
        }
    };
    enable_fallthrough(&app);

    CLI11_PARSE(app, argc, argv);

    try {
        if (eval_cmd->parsed()) {
            const auto loaded = load_or_die(eval_path);
            const double p = eval_model(loaded, classify_input(eval_inputs), opts);
            std::cout << format_probability(p, opts.precision) << '\n';
            return 0;
        }
        if (retract_cmd->parsed()) {
            const auto loaded = load_or_die(tf_in);
            const cww::WordAutomaton& m = require_automaton(loaded, "retract");
            const cww::WordAutomaton r =
                m.all_labels_crisp() ? retract(dirac_identify(m)) : retract(m, policy_of(opts));
            cww::save_model_file(tf_out, r);
            return 0;
        }
        if (extend_cmd->parsed()) {
            const auto loaded = load_or_die(tf_in);
            const cww::WordAutomaton& m = require_automaton(loaded, "extend");
            const cww::WordAutomaton base =
                m.all_labels_crisp() ? m : retract(m, policy_of(opts));
            cww::save_model_file(tf_out, base, /*extended=*/true);
            return 0;
        }
        if (g_to_auto->parsed()) {
            cww::save_model_file(g_out, automaton_from_grammar(require_grammar(load_or_die(g_in), "to-automaton")));
            return 0;
        }
        if (g_from_auto->parsed()) {
            cww::save_model_file(g_out, grammar_from_automaton(require_automaton(load_or_die(g_in), "from-automaton")));
            return 0;
        }
        if (g_retract->parsed()) {
            const auto loaded = load_or_die(g_in);
            const cww::ProbGrammar& g = require_grammar(loaded, "grammar retract");
            const cww::WordAutomaton view = automaton_from_grammar(g);
            const cww::ProbGrammar r = view.all_labels_crisp()
                                           ? grammar_from_automaton(retract(dirac_identify(view)))
                                           : grammar_retract(g, policy_of(opts));
            cww::save_model_file(g_out, r);
            return 0;
        }
        if (g_extend->parsed()) {
            const auto loaded = load_or_die(g_in);
            const cww::ProbGrammar& g = require_grammar(loaded, "grammar extend");
            const cww::WordAutomaton view = automaton_from_grammar(g);
            const cww::ProbGrammar base = view.all_labels_crisp() ? g : grammar_retract(g, policy_of(opts));
            cww::save_model_file(g_out, base, /*extended=*/true);
            return 0;
        }
        if (c_retraction->parsed()) return check_retraction(load_or_die(c_in), c_max_len, opts);
        if (c_extension->parsed()) return check_extension(load_or_die(c_in), c_max_len, c_samples, opts);
        if (c_equiv->parsed()) return check_equiv(load_or_die(c_in), load_or_die(c_in2), c_max_len, opts);
        if (c_continuity->parsed()) {
            return check_continuity(load_or_die(c_in), c_epsilon, c_level, c_samples, c_word_language, opts);
        }
        std::cerr << "no command\n";
        return 2;
    } catch (const CommandError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return e.code;
    } catch (const cww::UncoveredSymbolError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 4;
    } catch (const cww::BudgetExceededError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 5;
    } catch (const cww::UnknownLabelError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const cww::UnknownSymbolError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const cww::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const cww::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const cww::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
