#pragma once

#include <vector>

#include "seqlab/bigint.hpp"
#include "seqlab/error.hpp"

namespace seqlab::beta {

/// A Parry number presented combinatorially: the eventually periodic
/// quasi-greedy expansion d*_beta(1) = preperiod (period)^omega.
/// Digits are small non-negative integers.
struct BetaSpec {
    std::vector<int> preperiod;  // t(1) ... t(m)
    std::vector<int> period;     // t(m+1) ... t(m+k), k >= 1

    int m() const { return static_cast<int>(preperiod.size()); }
    int k() const { return static_cast<int>(period.size()); }

    // 1-based digit access into preperiod.period^omega.
    int digit(long long i) const;

    bool operator==(const BetaSpec&) const = default;
};

/// Minimal (m,k) form: trailing preperiod digits equal to the rotated
/// period tail are absorbed, the period is reduced to its primitive root,
/// and an all-zero period (a finite greedy expansion padded with 0^omega)
/// is converted to the quasi-greedy form.
BetaSpec normalize(BetaSpec spec);

/// Parry admissibility: every shift of preperiod.period^omega is
/// lexicographically <= the word itself. Throws Error(Validation) with
/// the violating shift position otherwise.
void validate_parry_expansion(const BetaSpec& spec);

/// d_beta(1) = t(1)...t(m) with t(m) != 0  ->  purely periodic
/// d*_beta(1) = (t(1)...t(m-1)(t(m)-1))^omega, normalized.
BetaSpec quasi_greedy_from_greedy(const std::vector<int>& greedy);

/// U(n) = sum_i coefficients[i-1] * U(n-i) for n >= order.
struct LinearRecurrence {
    std::vector<long long> coefficients;  // c_1 ... c_order
    std::vector<BigInt> initial_values;   // U(0) ... U(order-1)

    int order() const { return static_cast<int>(coefficients.size()); }

    // Extends vals (already holding the initial values or more) to n+1 terms.
    void extend(std::vector<BigInt>& vals, std::size_t n) const;

    // First n terms, validated strictly increasing with U(0) = 1.
    std::vector<BigInt> values(std::size_t n) const;
};

/// Canonical U_beta recurrence attached to a Parry spec.
LinearRecurrence build_recurrence(const BetaSpec& spec);

struct DominantRoot {
    double beta;      // consecutive-ratio estimate at the largest index
    double c;         // U(n) / beta^n at that index
    int index_used;
};

/// Diagnostic estimate of the dominant root and the constant of
/// lim U(n)/beta^n = c. No exactness contract.
DominantRoot dominant_root(const LinearRecurrence& rec, int n_terms,
                           double tolerance = 1e-6);

/// First `len` digits of the greedy beta-expansion of x in [0,1),
/// computed in floating point. Exploration helper only; digits near a
/// boundary may be off by one ulp's worth of carry.
std::vector<int> float_greedy_expansion(double beta_value, double x, int len);

}  // namespace seqlab::beta
