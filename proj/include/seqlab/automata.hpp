#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "seqlab/beta_systems.hpp"
#include "seqlab/bigint.hpp"

namespace seqlab::aut {

/// A word is a sequence of letter indices into an automaton's alphabet.
/// For numeration automata the alphabet is "0","1",...,"d" so the index
/// of a letter equals its digit value.
using Word = std::vector<int>;

/// Deterministic finite automaton with partial transitions
/// (a missing transition means reject).
struct Dfa {
    std::vector<std::string> alphabet;       // totally ordered, by index
    std::vector<std::string> state_names;
    int initial = 0;
    std::vector<std::vector<int>> delta;     // delta[state][letter] = state or -1
    std::vector<bool> finals;

    int num_states() const { return static_cast<int>(delta.size()); }
    int letter_index(const std::string& letter) const;  // -1 if absent
};

Dfa digit_alphabet_dfa_shell(int num_states, int max_digit);

/// DFA plus a total output map on states; all states final, transitions
/// total on the alphabet.
struct Dfao {
    Dfa dfa;
    std::vector<std::string> outputs;  // one per state
};

/// Reachable part of Dfa x Dfao, states ordered lexicographically by the
/// component pair so rebuilds are byte-for-byte identical.
struct ProductAutomaton {
    Dfa dfa;                                  // finals = F x R
    std::vector<std::string> outputs;         // inherited from the Dfao
    std::vector<std::pair<int, int>> labels;  // (dfa state, dfao state)
    long full_state_bound = 0;                // |Q| * |R|, used for pigeonhole bounds
};

/// Automaton recognizing 0*L_beta, built from d*_beta(1).
Dfa build_a_beta(const beta::BetaSpec& spec);

/// Automaton recognizing L_beta itself: fresh initial state with no
/// 0-transition, all states final (epsilon is accepted).
Dfa build_l_beta_dfa(const Dfa& a_beta);

ProductAutomaton product(const Dfa& dfa, const Dfao& dfao);

std::optional<int> run(const Dfa& m, std::span<const int> w);
std::optional<int> run(const ProductAutomaton& m, std::span<const int> w);

/// State and output reached by a Dfao (transitions are total).
std::pair<int, std::string> run_output(const Dfao& m, std::span<const int> w);

/// Number of accepted words of the given length, by dynamic programming.
BigInt count_accepted(const Dfa& dfa, int length);

void validate_dfao(const Dfao& m);

}  // namespace seqlab::aut
