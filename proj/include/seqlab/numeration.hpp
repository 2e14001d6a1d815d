#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "seqlab/automata.hpp"
#include "seqlab/beta_systems.hpp"
#include "seqlab/bigint.hpp"

namespace seqlab::num {

using DigitWord = std::vector<int>;

/// Greedy positional numeration system over a linear recurrence.
/// The value cache grows monotonically; reads are safe from any thread,
/// extension is serialized internally.
class PositionalSystem {
public:
    explicit PositionalSystem(beta::LinearRecurrence rec, int probe_depth = 64);

    const beta::LinearRecurrence& recurrence() const { return rec_; }

    /// U(i), extending the cache as needed.
    BigInt value(std::size_t i) const;

    /// Largest digit of the greedy alphabet A_U = {0, ..., max_digit()}.
    int max_digit() const { return max_digit_; }

    DigitWord rep(const BigInt& n) const;
    BigInt val(std::span<const int> w) const;
    bool is_greedy(std::span<const int> w) const;

    /// |{w : |w| = len, w in 0*L_U}| = U(len), by table lookup.
    BigInt count_words_with_leading_zeros(std::size_t len) const { return value(len); }

    /// Same count by brute-force enumeration over the digit alphabet;
    /// independent cross-check of the lemma, exponential in len.
    BigInt count_words_with_leading_zeros_by_enumeration(int len) const;

private:
    void ensure(std::size_t i) const;

    beta::LinearRecurrence rec_;
    int max_digit_ = 0;
    mutable std::vector<BigInt> cache_;
    mutable std::mutex mutex_;
};

/// Length-bucketed path counting over a DFA, supporting genealogical
/// (length, then dictionary order) enumeration of its language.
class GenealogicalIndex {
public:
    explicit GenealogicalIndex(const aut::Dfa& dfa);

    /// (n+1)-st accepted word in genealogical order.
    aut::Word nth_word(const BigInt& n) const;

    /// Inverse of nth_word; throws if w is not accepted.
    BigInt word_index(std::span<const int> w) const;

    /// Accepted words of exactly the given length.
    BigInt count_length(int len) const;

private:
    const BigInt& paths(int state, int len) const;

    const aut::Dfa& dfa_;
    mutable std::vector<std::vector<BigInt>> table_;  // table_[len][state]
    mutable std::mutex mutex_;
};

struct BertrandCheck {
    bool ok = true;
    std::optional<DigitWord> counterexample;
};

/// Checks w in L <=> w0 in L for every nonempty word over the digit
/// alphabet up to max_len (brute force, budget-capped).
BertrandCheck is_bertrand_up_to(const PositionalSystem& sys, int max_len,
                                unsigned long long budget = 100'000'000ULL);

std::string digits_to_string(std::span<const int> w);

}  // namespace seqlab::num
