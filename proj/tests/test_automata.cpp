#include <doctest.h>

#include <cmath>

#include "seqlab/automata.hpp"
#include "seqlab/crosscheck.hpp"
#include "seqlab/error.hpp"
#include "seqlab/presets.hpp"

using namespace seqlab;
using aut::Word;

namespace {

bool accepts(const aut::Dfa& dfa, const Word& w) {
    auto q = aut::run(dfa, w);
    return q && dfa.finals[static_cast<std::size_t>(*q)];
}

}  // namespace

TEST_CASE("zero-padded language automaton, golden ratio") {
    auto dfa = aut::build_a_beta(beta::BetaSpec{{}, {1, 0}});
    REQUIRE(dfa.num_states() == 2);
    CHECK(dfa.delta[0][0] == 0);
    CHECK(dfa.delta[0][1] == 1);
    CHECK(dfa.delta[1][0] == 0);
    CHECK(dfa.delta[1][1] == -1);  // forbidden factor 11
    CHECK(accepts(dfa, Word{0, 1, 0, 1}));
    CHECK_FALSE(accepts(dfa, Word{1, 1}));
}

TEST_CASE("zero-padded language automaton, golden ratio squared") {
    auto dfa = aut::build_a_beta(beta::BetaSpec{{2}, {1}});
    REQUIRE(dfa.num_states() == 2);
    CHECK(dfa.delta[0][0] == 0);
    CHECK(dfa.delta[0][1] == 0);
    CHECK(dfa.delta[0][2] == 1);
    CHECK(dfa.delta[1][0] == 0);
    CHECK(dfa.delta[1][1] == 1);
    CHECK(dfa.delta[1][2] == -1);
}

TEST_CASE("zero-padded language automaton, integer base") {
    auto dfa = aut::build_a_beta(beta::quasi_greedy_from_greedy({5}));
    REQUIRE(dfa.num_states() == 1);
    for (int c = 0; c < 5; ++c) CHECK(dfa.delta[0][static_cast<std::size_t>(c)] == 0);
}

TEST_CASE("greedy language automaton accepts exactly the greedy words") {
    auto fib = presets::make_system("fibonacci");
    const auto& dfa = *fib.l_dfa;
    CHECK(accepts(dfa, Word{}));
    CHECK(accepts(dfa, Word{1}));
    CHECK(accepts(dfa, Word{1, 0}));
    CHECK(accepts(dfa, Word{1, 0, 0}));
    CHECK(accepts(dfa, Word{1, 0, 1}));
    CHECK_FALSE(accepts(dfa, Word{0}));
    CHECK_FALSE(accepts(dfa, Word{0, 1}));
    CHECK_FALSE(accepts(dfa, Word{1, 1}));

    auto base2 = presets::make_system("base2");
    CHECK(accepts(*base2.l_dfa, Word{}));
    CHECK(accepts(*base2.l_dfa, Word{1, 0, 1, 1}));
    CHECK_FALSE(accepts(*base2.l_dfa, Word{0, 1}));
}

TEST_CASE("product automaton of the affine example matches the hand construction") {
    auto sys = presets::make_system("ex41");
    auto seq = presets::make_sequence("ex41");
    auto p = aut::product(*sys.l_dfa, *seq.dfao);
    REQUIRE(p.dfa.num_states() == 3);  // A = (a0',a), B = (a0,a), C = (a1,b)
    CHECK(p.labels == std::vector<std::pair<int, int>>{{0, 0}, {1, 0}, {2, 1}});
    CHECK(p.full_state_bound == 6);
    CHECK(p.dfa.delta[0] == std::vector<int>{-1, 1, 1, 2});
    CHECK(p.dfa.delta[1] == std::vector<int>{1, 1, 1, 2});
    CHECK(p.dfa.delta[2] == std::vector<int>{2, -1, -1, -1});
    CHECK(p.outputs == std::vector<std::string>{"0", "0", "1"});
}

TEST_CASE("product with a constant-output machine mirrors the language automaton") {
    auto fib = presets::make_system("fibonacci");
    aut::Dfao constant;
    constant.dfa = aut::digit_alphabet_dfa_shell(1, 1);
    constant.dfa.delta = {{0, 0}};
    constant.outputs = {"0"};
    auto p = aut::product(*fib.l_dfa, constant);
    CHECK(p.dfa.num_states() == fib.l_dfa->num_states());
    for (int q = 0; q < p.dfa.num_states(); ++q)
        for (std::size_t c = 0; c < p.dfa.alphabet.size(); ++c) {
            int direct = fib.l_dfa->delta[static_cast<std::size_t>(q)][c];
            int lifted = p.dfa.delta[static_cast<std::size_t>(q)][c];
            CHECK(direct == lifted);
        }
}

TEST_CASE("product transitions are componentwise") {
    auto fib = presets::make_system("fibonacci");
    auto seq = presets::make_sequence("fib_sum_digits");
    auto p = aut::product(*fib.l_dfa, *seq.dfao);
    CHECK(p.dfa.num_states() <= 3 * 2);
    // Exhaustive small words: run(P, w) = (run(A, w), run(B, w)).
    for (int len = 0; len <= 10; ++len) {
        for (long code = 0; code < (1L << len); ++code) {
            Word w;
            for (int i = 0; i < len; ++i) w.push_back((code >> i) & 1);
            auto combined = aut::run(p, w);
            auto left = aut::run(*fib.l_dfa, w);
            auto right = aut::run_output(*seq.dfao, w).first;
            if (!left) {
                CHECK_FALSE(combined.has_value());
            } else {
                REQUIRE(combined.has_value());
                CHECK(p.labels[static_cast<std::size_t>(*combined)] ==
                      std::make_pair(*left, right));
            }
        }
    }
}

TEST_CASE("state and output of runs") {
    auto seq = presets::make_sequence("fib_sum_digits");
    // 1001 has digit sum 2, so the parity output is 0.
    auto [state, output] = aut::run_output(*seq.dfao, Word{1, 0, 0, 1});
    CHECK(output == "0");
    CHECK(aut::run_output(*seq.dfao, Word{}).first == seq.dfao->dfa.initial);

    auto a_beta = aut::build_a_beta(beta::BetaSpec{{}, {1, 0}});
    CHECK_FALSE(aut::run(a_beta, Word{1, 1}).has_value());
    CHECK_THROWS_WITH_AS(aut::run(a_beta, Word{7}), doctest::Contains("LetterOutOfAlphabet"),
                         Error);
}

TEST_CASE("path counting agrees with the recurrence on every preset") {
    for (const auto& name : presets::system_names()) {
        auto p = presets::make_system(name);
        if (!p.a_beta) continue;  // the affine preset has no zero-padded automaton
        for (int n = 0; n <= 12; ++n) {
            CHECK(aut::count_accepted(*p.a_beta, n) == p.system->value(static_cast<std::size_t>(n)));
            BigInt expected = n == 0 ? BigInt(1)
                                     : p.system->value(static_cast<std::size_t>(n)) -
                                           p.system->value(static_cast<std::size_t>(n - 1));
            CHECK(aut::count_accepted(*p.l_dfa, n) == expected);
        }
    }
}

TEST_CASE("language growth of the affine example matches its recurrence growth") {
    auto sys = presets::make_system("ex41");
    // The count of accepted words of length n satisfies c(n) = 3 c(n-1) + 1
    // from the main state, so both the language and U(n) grow like 3^n.
    auto a = aut::count_accepted(*sys.l_dfa, 40);
    auto b = aut::count_accepted(*sys.l_dfa, 41);
    double ratio = to_double(BigInt(b * 1000000 / a)) / 1e6;
    CHECK(std::abs(ratio - 3.0) < 1e-3);
}

TEST_CASE("exhaustive language/greedy agreement and a corrupted negative control") {
    auto fib = presets::make_system("fibonacci");
    CHECK_FALSE(check_language_equals_greedy(*fib.l_dfa, *fib.system, 12).has_value());
    auto base2 = presets::make_system("base2");
    CHECK_FALSE(check_language_equals_greedy(*base2.l_dfa, *base2.system, 12).has_value());
    CHECK_FALSE(check_language_equals_greedy(*fib.a_beta, *fib.system, 12, true).has_value());

    auto corrupted = *fib.l_dfa;  // allow the forbidden factor 11
    for (std::size_t s = 0; s < corrupted.delta.size(); ++s) {
        if (corrupted.state_names[s] != "a1") continue;
        corrupted.delta[s][1] = static_cast<int>(s);
    }
    auto mismatch = check_language_equals_greedy(corrupted, *fib.system, 12);
    REQUIRE(mismatch.has_value());
    CHECK(*mismatch == num::DigitWord{1, 1});
}

TEST_CASE("construction is deterministic") {
    auto once = presets::make_system("phi2");
    auto twice = presets::make_system("phi2");
    CHECK(once.l_dfa->delta == twice.l_dfa->delta);
    CHECK(once.l_dfa->state_names == twice.l_dfa->state_names);
    auto seq1 = presets::make_sequence("ex41");
    auto p1 = aut::product(*seq1.system->l_dfa, *seq1.dfao);
    auto p2 = aut::product(*presets::make_sequence("ex41").system->l_dfa, *seq1.dfao);
    CHECK(p1.dfa.delta == p2.dfa.delta);
    CHECK(p1.labels == p2.labels);
}
