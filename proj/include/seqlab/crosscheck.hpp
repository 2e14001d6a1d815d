#pragma once

#include <optional>

#include "seqlab/automata.hpp"
#include "seqlab/numeration.hpp"

namespace seqlab {

/// Exhaustively compares DFA acceptance against greedy membership on all
/// digit words up to the length bound. With `with_leading_zeros` the DFA
/// is expected to recognize 0*L (the zero-padded automaton) instead of L.
/// Returns the first mismatching word, if any.
std::optional<num::DigitWord> check_language_equals_greedy(
    const aut::Dfa& dfa, const num::PositionalSystem& sys, int up_to_len,
    bool with_leading_zeros = false, unsigned long long budget = 100'000'000ULL);

}  // namespace seqlab
