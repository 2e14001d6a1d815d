#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "seqlab/bigint.hpp"
#include "seqlab/error.hpp"

namespace seqlab::msr {

/// Binary prefix view: each byte is 0 or 1.
using Bits = std::span<const std::uint8_t>;

/// Strictly increasing non-negative shifts (d_1, ..., d_k).
class ShiftVector {
public:
    explicit ShiftVector(std::vector<long long> shifts);
    const std::vector<long long>& shifts() const { return shifts_; }
    long long back() const { return shifts_.back(); }
    int order() const { return static_cast<int>(shifts_.size()); }

private:
    std::vector<long long> shifts_;
};

/// U(s,M,a,b) = sum_{j<M} (-1)^{s(a+jb)}
long long walk_sum(Bits s, long long m, long long a, long long b);

struct WellDistReport {
    long long n = 0;
    long long value = 0;
    long long a_star = 0, b_star = 1, m_star = 1;
};

/// W(s,N) = max_{a,b,M} |U(s,M,a,b)| over 0 <= a <= a+(M-1)b < N, b >= 1.
WellDistReport well_distribution(Bits s, long long n);

/// V(s,M,D) = sum_{n<M} (-1)^{s(n+d_1)+...+s(n+d_k)}
long long correlation_sum(Bits s, long long m, const ShiftVector& d);

struct CorrelationReport {
    long long n = 0;
    int order = 0;
    long long value = -1;
    long long m_star = 0;
    std::vector<long long> d_star;
    bool exact = true;
};

struct CorrelationOptions {
    unsigned long long budget = 1'000'000'000ULL;  // elementary steps
    bool sampled = false;                          // lower bounds only
    unsigned long long samples = 100'000;
    std::uint64_t seed = 0;
};

/// C_k(s,N) = max_{M,D : M + d_k <= N} |V(s,M,D)|, exact unless sampled.
CorrelationReport correlation(Bits s, long long n, int k,
                              const CorrelationOptions& opts = {});

/// C_k(s,N) for every N in 1..n_max in a single sweep (same total cost
/// as the largest N). Entry N-1 describes C_k(s,N).
std::vector<CorrelationReport> correlation_profile(Bits s, long long n_max, int k,
                                                   const CorrelationOptions& opts = {});

/// Exact rational c_M(k) = V(s,M,(0,d)) / M (Mahler), d = 0 gives 1.
struct Rational {
    long long num = 0;
    long long den = 1;  // normalized, den > 0, gcd(num,den) = 1
    std::string str() const;
};
Rational mahler_correlation(Bits s, long long m, long long shift);

/// Distinct length-n windows of the prefix (lower approximation of the
/// true factor complexity p_s(n)).
std::size_t factor_complexity(Bits s, std::size_t n);

struct MorseHedlundResult {
    std::vector<long long> d;      // 2k occurrence positions
    long long value = 0;           // certified V(s, n, D) = n
    std::size_t complexity = 0;    // p_s(n) on the provided prefix
    std::size_t window = 0;        // prefix length actually scanned
};

/// Finds a length-n factor occurring >= 2k times within the prefix of
/// length max(2k p_s(n), n+2k-1) and certifies C_2k(s, window) >= n.
MorseHedlundResult morse_hedlund_bound(Bits s, int k, std::size_t n);

}  // namespace seqlab::msr
