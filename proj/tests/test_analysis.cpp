#include <doctest.h>

#include <cmath>

#include "cww/analysis.hpp"
#include "support/fixtures.hpp"
#include "support/random_models.hpp"

using namespace cww;
using namespace cww::tests;

TEST_CASE("retraction principle on the demo model") {
    const WordAutomaton m = demo_word_automaton();
    const double by_hand = 0.05 * 0.9 * 0.1 + 0.1975 * 0.9 * 0.9 + 0.05 * 0.1 * 0.1 + 0.43 * 0.1 * 0.9;
    CHECK(std::abs(by_hand - 0.203675) <= 1e-12);
    CHECK(std::abs(retraction_principle_oracle(m, {"a", "b"}) - 0.203675) <= 1e-12);
    CHECK(std::abs(retraction_principle_oracle(m, {"a", "b"}) -
                   accept_probability(retract(m), {"a", "b"})) <= 1e-12);
}

TEST_CASE("retraction principle base case is the empty-string acceptance") {
    WordAutomaton m = demo_word_automaton();
    CHECK(retraction_principle_oracle(m, {}) == 0.0);
    m.finals = {0};
    CHECK(retraction_principle_oracle(m, {}) == 1.0);
}

TEST_CASE("retraction principle holds on random models") {
    Rng rng(401);
    for (int trial = 0; trial < 50; ++trial) {
        const WordAutomaton m = random_word_automaton(rng);
        const WordAutomaton r = retract(m);
        std::vector<std::string> s;
        const std::size_t len = rng.index(5);
        for (std::size_t i = 0; i < len; ++i) {
            s.push_back(m.underlying_alphabet->symbol(rng.index(m.underlying_alphabet->size())));
        }
        CHECK(std::abs(retraction_principle_oracle(m, s) - accept_probability(r, s)) <= 1e-9);
    }
}

TEST_CASE("extension principle on the demo model") {
    const WordAutomaton m = demo_word_automaton();
    const ProbWord w(m.underlying_alphabet, {0.2, 0.8});
    CHECK(std::abs(extension_principle_oracle(m, {w, w}) - 0.286467) <= 1e-12);
    CHECK(std::abs(extension_principle_oracle(m, {w, w}) -
                   lazy_accept(generalized_extend(m), {w, w})) <= 1e-12);
}

TEST_CASE("extension principle at dirac words equals the retraction principle") {
    const WordAutomaton m = demo_word_automaton();
    const AlphabetPtr ab = m.underlying_alphabet;
    CHECK(std::abs(extension_principle_oracle(m, {dirac("a", ab), dirac("b", ab)}) -
                   retraction_principle_oracle(m, {"a", "b"})) <= 1e-15);
}

TEST_CASE("extension principle holds on random models") {
    Rng rng(409);
    for (int trial = 0; trial < 50; ++trial) {
        const WordAutomaton m = random_word_automaton(rng);
        const LazyExtensionAutomaton e = generalized_extend(m);
        std::vector<ProbWord> queries;
        const std::size_t len = rng.index(4);
        for (std::size_t i = 0; i < len; ++i) queries.push_back(rng.word(m.underlying_alphabet));
        CHECK(std::abs(extension_principle_oracle(m, queries) - lazy_accept(e, queries)) <= 1e-9);
    }
}

TEST_CASE("grammar principles ride on the induced automaton") {
    Rng rng(419);
    for (int trial = 0; trial < 20; ++trial) {
        const ProbGrammar g = random_word_grammar(rng);
        const WordAutomaton view = automaton_from_grammar(g);

        std::vector<std::string> s;
        const std::size_t len = rng.index(4);
        for (std::size_t i = 0; i < len; ++i) {
            s.push_back(g.underlying_alphabet->symbol(rng.index(g.underlying_alphabet->size())));
        }
        CHECK(std::abs(retraction_principle_oracle(view, s) -
                       generate_probability(grammar_retract(g), s)) <= 1e-9);

        std::vector<ProbWord> queries;
        for (std::size_t i = 0; i < len; ++i) queries.push_back(rng.word(g.underlying_alphabet));
        CHECK(std::abs(extension_principle_oracle(view, queries) -
                       extended_generate_probability(grammar_generalized_extend(g), queries)) <= 1e-9);
    }
}

TEST_CASE("oracles respect their budgets") {
    const WordAutomaton m = demo_word_automaton();
    const std::vector<std::string> s(8, "a");  // 2^8 tuples
    CHECK_THROWS_AS(retraction_principle_oracle(m, s, 100), BudgetExceededError);
    CHECK_NOTHROW(retraction_principle_oracle(m, s, 1000));
    CHECK_THROWS_AS(
        equivalence_up_to([](const auto&) { return 0.0; }, [](const auto&) { return 0.0; },
                          {"x", "y"}, 30, 1000),
        BudgetExceededError);
}

TEST_CASE("equivalence of the demo automaton and grammar") {
    const WordAutomaton m = demo_word_automaton();
    const ProbGrammar g = demo_word_grammar();
    const auto report = equivalence_up_to(
        [&](const std::vector<std::string>& s) { return accept_probability(m, s); },
        [&](const std::vector<std::string>& s) { return generate_probability(g, s); },
        {"W1", "W2"}, 4);
    CHECK(report.max_abs_gap <= 1e-9);
    CHECK(report.strings_checked == 31);  // 1 + 2 + 4 + 8 + 16
    CHECK(report.max_length == 4);
}

TEST_CASE("renaming states preserves the language exactly") {
    Rng rng(421);
    for (int trial = 0; trial < 10; ++trial) {
        const WordAutomaton m = random_word_automaton(rng);
        const WordAutomaton renamed = renamed_copy(m);
        const auto report = equivalence_up_to(
            [&](const std::vector<std::string>& s) { return accept_probability(m, s); },
            [&](const std::vector<std::string>& s) { return accept_probability(renamed, s); },
            label_names(m), 4);
        CHECK(report.max_abs_gap == 0.0);
    }
}

TEST_CASE("state splitting preserves the language") {
    Rng rng(431);
    for (int trial = 0; trial < 10; ++trial) {
        const WordAutomaton m = random_word_automaton(rng);
        const WordAutomaton split = state_split_copy(m, rng.index(m.n_states()));
        REQUIRE(validate(split).empty());
        const auto report = equivalence_up_to(
            [&](const std::vector<std::string>& s) { return accept_probability(m, s); },
            [&](const std::vector<std::string>& s) { return accept_probability(split, s); },
            label_names(m), 4);
        CHECK(report.max_abs_gap <= 1e-12);
    }
}

TEST_CASE("equivalent models keep equivalent retractions and extensions") {
    Rng rng(433);
    for (int trial = 0; trial < 10; ++trial) {
        const WordAutomaton m = random_word_automaton(rng);
        const WordAutomaton other = state_split_copy(renamed_copy(m), rng.index(m.n_states()));

        const WordAutomaton ra = retract(m);
        const WordAutomaton rb = retract(other);
        const auto down = equivalence_up_to(
            [&](const std::vector<std::string>& s) { return accept_probability(ra, s); },
            [&](const std::vector<std::string>& s) { return accept_probability(rb, s); },
            ra.underlying_alphabet->symbols(), 4);
        CHECK(down.max_abs_gap <= 1e-9);

        // all-words evaluators compared on a finite probe set of words
        const LazyExtensionAutomaton ea = generalized_extend(m);
        const LazyExtensionAutomaton eb = generalized_extend(other);
        std::vector<std::string> probe_names;
        std::vector<ProbWord> probes;
        for (int i = 0; i < 3; ++i) {
            probes.push_back(rng.word(m.underlying_alphabet));
            probe_names.push_back("p" + std::to_string(i));
        }
        auto eval = [&](const LazyExtensionAutomaton& e) {
            return [&probes, model = &e](const std::vector<std::string>& names) {
                std::vector<ProbWord> input;
                for (const std::string& n : names) input.push_back(probes[n[1] - '0']);
                return lazy_accept(*model, input);
            };
        };
        const auto up = equivalence_up_to(eval(ea), eval(eb), probe_names, 3);
        CHECK(up.max_abs_gap <= 1e-9);
    }
}

TEST_CASE("worst string is reported") {
    const WordAutomaton m = demo_word_automaton();
    WordAutomaton tweaked = m;
    tweaked.transitions[2][1] = {0.05, 0.15, 0.8};  // perturb (q2, W2)
    const auto report = equivalence_up_to(
        [&](const std::vector<std::string>& s) { return accept_probability(m, s); },
        [&](const std::vector<std::string>& s) { return accept_probability(tweaked, s); },
        {"W1", "W2"}, 2);
    CHECK(report.max_abs_gap > 1e-3);
    REQUIRE(!report.worst_string.empty());
    CHECK(report.worst_string.back() == "W2");
}

TEST_CASE("continuity radius closed form") {
    const LazyExtensionAutomaton e = generalized_extend(demo_word_automaton());

    SUBCASE("level one is epsilon over root n") {
        const ContinuityBound b = continuity_radius(e, 0.001, 1, false);
        CHECK(std::abs(b.radius - std::sqrt(2.0) / 2000.0) <= 1e-18);
        CHECK(b.epsilon == 0.001);
        CHECK(b.level == 1);
    }
    SUBCASE("deeper levels divide by twice the state count per level") {
        const ContinuityBound l1 = continuity_radius(e, 0.006, 1, false);
        const ContinuityBound l2 = continuity_radius(e, 0.006, 2, false);
        const ContinuityBound l3 = continuity_radius(e, 0.006, 3, false);
        CHECK(std::abs(l2.radius - l1.radius / 6.0) <= 1e-18);
        CHECK(std::abs(l3.radius - l1.radius / 36.0) <= 1e-18);
    }
    SUBCASE("word-language variant divides by the number of finals") {
        const ContinuityBound b = continuity_radius(e, 0.006, 2, true);
        CHECK(std::abs(b.radius - 0.006 / (6.0 * std::sqrt(2.0))) <= 1e-15);
        CHECK(b.for_word_language);
    }
    SUBCASE("radius decreases in level and is linear in epsilon") {
        double prev = continuity_radius(e, 0.01, 1, false).radius;
        for (int level = 2; level <= 5; ++level) {
            const double r = continuity_radius(e, 0.01, level, false).radius;
            CHECK(r < prev);
            prev = r;
        }
        const double r1 = continuity_radius(e, 0.004, 3, false).radius;
        const double r2 = continuity_radius(e, 0.008, 3, false).radius;
        CHECK(std::abs(r2 - 2.0 * r1) <= 1e-18);
    }
    SUBCASE("invalid arguments") {
        CHECK_THROWS_AS(continuity_radius(e, 0.0, 1, false), Error);
        CHECK_THROWS_AS(continuity_radius(e, 0.1, 0, false), Error);
    }
}

TEST_CASE("example gap at a nearby word") {
    const LazyExtensionAutomaton e = generalized_extend(demo_word_automaton());
    const AlphabetPtr ab = e.base.underlying_alphabet;
    const ProbWord w(ab, {0.2, 0.8});
    const ProbWord near(ab, {0.2004, 0.7996});
    CHECK(euclidean_distance(w, near) < std::sqrt(2.0) / 2000.0);

    const auto at_w = lazy_step(e, 1, w);
    const auto at_near = lazy_step(e, 1, near);
    CHECK(std::abs(at_near[0] - 0.141112) <= 1e-12);
    CHECK(std::abs(at_near[1] - 0.55) <= 1e-12);
    CHECK(std::abs(at_near[2] - 0.308888) <= 1e-12);
    CHECK(std::abs(std::abs(at_w[0] - at_near[0]) - 0.000112) <= 1e-9);
    CHECK(std::abs(at_w[1] - at_near[1]) <= 1e-9);
    CHECK(std::abs(std::abs(at_w[2] - at_near[2]) - 0.000112) <= 1e-9);
    for (std::size_t q = 0; q < 3; ++q) CHECK(std::abs(at_w[q] - at_near[q]) < 0.001);
}

TEST_CASE("probing never exceeds epsilon inside the proven radius") {
    const LazyExtensionAutomaton e = generalized_extend(demo_word_automaton());
    SUBCASE("demo bound") {
        const ContinuityBound b = continuity_radius(e, 0.001, 1, false);
        CHECK(continuity_probe(e, b, 1000, 12345) < 0.001);
    }
    SUBCASE("levels and random models") {
        Rng rng(439);
        for (int trial = 0; trial < 5; ++trial) {
            const LazyExtensionAutomaton re = generalized_extend(random_word_automaton(rng));
            for (int level = 1; level <= 3; ++level) {
                const ContinuityBound b = continuity_radius(re, 0.01, level, false);
                CHECK(continuity_probe(re, b, 200, 1000 + trial) < 0.01);
                const ContinuityBound bw = continuity_radius(re, 0.01, level, true);
                CHECK(continuity_probe(re, bw, 200, 2000 + trial) < 0.01);
            }
        }
    }
    SUBCASE("identical pairs give zero gap") {
        const ContinuityBound degenerate{0.5, 1, 1e-300, false};
        CHECK(continuity_probe(e, degenerate, 50, 7) == 0.0);
    }
}

TEST_CASE("per-step gaps obey the root-n lipschitz bound") {
    Rng rng(443);
    for (int trial = 0; trial < 20; ++trial) {
        const WordAutomaton m = random_word_automaton(rng);
        const LazyExtensionAutomaton e = generalized_extend(m);
        const double root_n = std::sqrt(static_cast<double>(m.underlying_alphabet->size()));
        for (int probe = 0; probe < 20; ++probe) {
            const ProbWord x = rng.word(m.underlying_alphabet);
            const ProbWord y = rng.word(m.underlying_alphabet);
            const double d = euclidean_distance(x, y);
            for (std::size_t p = 0; p < m.n_states(); ++p) {
                const auto sx = lazy_step(e, p, x);
                const auto sy = lazy_step(e, p, y);
                for (std::size_t q = 0; q < m.n_states(); ++q) {
                    CHECK(std::abs(sx[q] - sy[q]) <= root_n * d + 1e-12);
                }
            }
        }
    }
}

TEST_CASE("probe determinism") {
    const LazyExtensionAutomaton e = generalized_extend(demo_word_automaton());
    const ContinuityBound b = continuity_radius(e, 0.002, 2, true);
    const double first = continuity_probe(e, b, 100, 99);
    const double second = continuity_probe(e, b, 100, 99);
    CHECK(first == second);
    CHECK(first < 0.002);
}
