#pragma once

#include <optional>
#include <vector>

#include "seqlab/automata.hpp"
#include "seqlab/measures.hpp"
#include "seqlab/morphic.hpp"
#include "seqlab/numeration.hpp"

namespace seqlab::wit {

/// 2k pairwise distinct nonempty numeration-language words driving the
/// product automaton to one common state.
struct CollisionWitness {
    std::vector<num::DigitWord> words;  // genealogically increasing
    int product_state = 0;
    int k = 1;
    long search_bound = 0;  // (2k-1) |Q| |R|, full product size
};

/// Genealogical scan of L, bucketed by product state; returns the first
/// bucket reaching 2k members. Guaranteed within search_bound + 1
/// nonempty words by pigeonhole (asserted).
CollisionWitness find_collisions(const aut::ProductAutomaton& p,
                                 const num::PositionalSystem& sys, int k);

/// Witness from explicitly chosen words (validated: nonempty, greedy,
/// genealogically increasing, same product state).
CollisionWitness witness_from_words(const aut::ProductAutomaton& p,
                                    const num::PositionalSystem& sys,
                                    std::vector<num::DigitWord> words);

struct CorrelationCertificate {
    int k = 1;
    long long m = 0;                // block exponent M
    BigInt block_length;            // U_beta(M)
    std::vector<BigInt> positions;  // p_{u_i} = val(u_i 0^M), strictly increasing
    bool verified = false;

    /// Smallest N for which the certified bound C_2k(s,N) >= U_beta(M) applies.
    BigInt applicable_n() const { return positions.back() + block_length; }
};

CorrelationCertificate build_certificate(const CollisionWitness& w,
                                         const num::PositionalSystem& sys, long long m);

/// Largest M with p_{u_2k} + U(M) <= capacity, or nullopt if even M = 0
/// does not fit.
std::optional<long long> largest_fitting_m(const CollisionWitness& w,
                                           const num::PositionalSystem& sys,
                                           const BigInt& capacity);

/// Checks the 2k blocks coincide and V(s, U(M), D) = U(M); sets verified.
/// Throws Error(Verification) with the failing index otherwise.
void verify_certificate(msr::Bits s, CorrelationCertificate& cert);

struct EmpiricalRow {
    long long n = 0;
    long long value = 0;
    double ratio = 0.0;  // value / N
};

struct EmpiricalTable {
    int order = 0;
    std::vector<EmpiricalRow> rows;
    double min_ratio = 0.0;
    // Reference line N / (b(m+1)) for integer base b and an m-state DFAO,
    // when applicable: the known lower-bound slope for even correlations.
    std::optional<double> reference_slope;
};

/// Exact C_2k(s,N) for N in [n_from, n_to] with the ratio C/N per row.
EmpiricalTable empirical_constant(msr::Bits s, int k, long long n_from, long long n_to,
                                  const msr::CorrelationOptions& opts = {},
                                  std::optional<std::pair<int, int>> base_and_states = {});

struct LinRecWitness {
    long long d = 0;
    std::vector<long long> shifts;  // (0, d, ..., (2k-1)d)
    long long value = 0;            // verified V(s, n, D) = n
};

/// Smallest d > 0 such that the length-n prefix recurs at 0, d, ..., (2k-1)d.
/// Throws Error(Validation, "NoRecurrenceFound...") if none fits the prefix.
LinRecWitness linrec_witness(msr::Bits s, std::size_t n, int k);

struct RecurrenceRow {
    std::size_t n = 0;
    long long max_gap = 0;  // max gap between consecutive occurrences, length-n factors
    double gap_over_n = 0.0;
};

/// Linear-recurrence diagnostic over the prefix.
std::vector<RecurrenceRow> recurrence_constant_estimate(msr::Bits s, std::size_t n_max);

}  // namespace seqlab::wit
