#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "seqlab/automata.hpp"
#include "seqlab/beta_systems.hpp"
#include "seqlab/morphic.hpp"
#include "seqlab/numeration.hpp"

namespace seqlab::presets {

/// A numeration system preset: base2, base10, fibonacci, phi2, ex41.
/// ex41 (the non-Parry Bertrand system U(n+1) = 3U(n) + 1) has no
/// BetaSpec; its L_U automaton is built directly.
struct SystemPreset {
    std::string name;
    std::optional<beta::BetaSpec> spec;
    std::shared_ptr<num::PositionalSystem> system;
    std::optional<aut::Dfa> a_beta;  // 0*L automaton (Parry presets only)
    std::optional<aut::Dfa> l_dfa;   // L automaton (absent for bare custom recurrences)
};

SystemPreset make_system(const std::string& name);
std::vector<std::string> system_names();

/// Builds the full preset (normalized expansion, recurrence, automata)
/// from a quasi-greedy expansion of 1.
SystemPreset make_beta_system(const std::string& name, beta::BetaSpec spec);

/// A sequence preset. Automatic presets (thue_morse, fib_sum_digits,
/// cantor, ex41) carry their DFAO and numeration system; the others
/// (champernowne, periodic:<pattern>, constant) only generate.
struct SequenceHandle {
    std::string name;
    std::optional<SystemPreset> system;  // set iff automatic
    std::optional<aut::Dfao> dfao;       // set iff automatic
    std::function<mor::SequencePrefix(std::size_t)> generate;

    bool automatic() const { return dfao.has_value(); }
};

SequenceHandle make_sequence(const std::string& name);
std::vector<std::string> sequence_names();

/// Binary Champernowne word: concatenated base-2 representations of
/// 0, 1, 2, ...
mor::SequencePrefix champernowne_prefix(std::size_t n);

}  // namespace seqlab::presets
