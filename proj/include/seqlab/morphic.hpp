#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "seqlab/automata.hpp"
#include "seqlab/numeration.hpp"

namespace seqlab::mor {

/// Letters are indices into named alphabets; images may be empty
/// (erasing morphisms are allowed, codings map letters to single letters).
struct Morphism {
    std::vector<std::string> domain;
    std::vector<std::string> codomain;
    std::vector<aut::Word> images;  // one per domain letter

    bool is_coding() const;
    int letter_index(const std::string& letter) const;
};

aut::Word apply(const Morphism& m, std::span<const int> w);

struct MorphicSpec {
    Morphism f;       // self-morphism: domain == codomain
    int seed = 0;     // letter index, f prolongable on it
    Morphism coding;  // possibly erasing (letters may map to epsilon)
};

/// A finite prefix of a sequence over a small alphabet, plus where it
/// came from. Immutable once produced.
struct SequencePrefix {
    std::vector<std::string> alphabet;
    std::vector<std::uint8_t> symbols;
    std::string provenance;

    std::size_t size() const { return symbols.size(); }
};

/// Requires alphabet {0,1}; returns the raw bit view.
std::span<const std::uint8_t> binary_view(const SequencePrefix& s);

/// First N letters of coding(f^omega(seed)) by streaming expansion.
/// `cap` bounds the number of raw fixed-point letters materialized.
SequencePrefix fixed_point_prefix(const MorphicSpec& spec, std::size_t n,
                                  std::size_t cap = std::size_t(1) << 26);

/// Prefix-morphism presentation of the product: phi on {alpha} + product states
/// (undefined transitions contribute epsilon), nu erasing alpha and
/// outputting tau on states. Requires binary outputs.
std::pair<Morphism, Morphism> build_phi_nu(const aut::ProductAutomaton& p);

/// s(n) = tau(dfao run on rep(n)) for n = 0..N-1.
SequencePrefix automatic_prefix(const aut::Dfao& dfao, const num::PositionalSystem& sys,
                                std::size_t n);

struct CrossCheckResult {
    bool ok = true;
    long long mismatch_index = -1;
    std::string detail;
};

/// Compares nu(phi^omega(alpha)) against the DFAO-generated prefix, and
/// the shift of phi^omega(alpha) against the product-state sequence of
/// the genealogically ordered numeration words.
CrossCheckResult cross_check_morphic_vs_automatic(const aut::ProductAutomaton& p,
                                                  const num::PositionalSystem& sys,
                                                  std::size_t n);

}  // namespace seqlab::mor
