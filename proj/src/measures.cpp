#include "seqlab/measures.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <string_view>
#include <unordered_map>
#include <unordered_set>

namespace seqlab::msr {

namespace {

void check_bits(Bits s) {
    for (std::uint8_t b : s)
        if (b > 1) throw Error(ErrorKind::Validation, "sequence is not binary");
}

}  // namespace

ShiftVector::ShiftVector(std::vector<long long> shifts) : shifts_(std::move(shifts)) {
    if (shifts_.empty()) throw Error(ErrorKind::Validation, "empty shift vector");
    if (shifts_.front() < 0)
        throw Error(ErrorKind::Validation, "shifts must be non-negative");
    for (std::size_t i = 1; i < shifts_.size(); ++i)
        if (shifts_[i] <= shifts_[i - 1])
            throw Error(ErrorKind::Validation, "shifts must be strictly increasing");
}

long long walk_sum(Bits s, long long m, long long a, long long b) {
    if (b < 1) throw Error(ErrorKind::Validation, "walk_sum needs b >= 1");
    if (m < 1 || a < 0 || a + (m - 1) * b >= static_cast<long long>(s.size()))
        throw Error(ErrorKind::Validation, "IndexOutOfPrefix in walk_sum");
    long long sum = 0;
    for (long long j = 0; j < m; ++j)
        sum += 1 - 2 * static_cast<long long>(s[static_cast<std::size_t>(a + j * b)]);
    return sum;
}

WellDistReport well_distribution(Bits s, long long n) {
    if (n < 1 || n > static_cast<long long>(s.size()))
        throw Error(ErrorKind::Validation, "well_distribution: N out of prefix");
    WellDistReport best{n, -1, 0, 1, 1};
    for (long long a = 0; a < n; ++a) {
        for (long long b = 1; a + b < n || b == 1; ++b) {
            long long sum = 0;
            for (long long j = 0, idx = a; idx < n; ++j, idx += b) {
                sum += 1 - 2 * static_cast<long long>(s[static_cast<std::size_t>(idx)]);
                const long long v = sum < 0 ? -sum : sum;
                if (v > best.value) best = {n, v, a, b, j + 1};
            }
            if (a + b >= n) break;  // only M = 1 fits; b = 1 already covered it
        }
    }
    return best;
}

long long correlation_sum(Bits s, long long m, const ShiftVector& d) {
    const auto& shifts = d.shifts();
    if (m < 1 || m + shifts.back() > static_cast<long long>(s.size()))
        throw Error(ErrorKind::Validation, "IndexOutOfPrefix in correlation_sum");
    long long sum = 0;
    for (long long i = 0; i < m; ++i) {
        int parity = 0;
        for (long long dj : shifts) parity ^= s[static_cast<std::size_t>(i + dj)];
        sum += 1 - 2 * parity;
    }
    return sum;
}

namespace {

struct BestEntry {
    long long value = -1;
    long long m = 0;
    std::vector<long long> d;
};

// Exact enumeration of all D = (d_1 < ... < d_k) with d_k < n_max,
// folding every window M into the bucket T = M + d_k. Parity arrays are
// carried down the recursion so each leaf costs O(window length).
class ExactEnumerator {
public:
    ExactEnumerator(Bits s, long long n_max, int k, unsigned long long budget)
        : s_(s), n_max_(n_max), k_(k), budget_(budget) {
        best_.resize(static_cast<std::size_t>(n_max) + 1);
        levels_.resize(static_cast<std::size_t>(k) + 1);
    }

    std::vector<BestEntry> enumerate() {
        shifts_.assign(static_cast<std::size_t>(k_), 0);
        descend(1, 0);
        return std::move(best_);
    }

private:
    void descend(int level, long long d_min) {
        // leave room for the remaining k - level shifts and M >= 1
        const long long d_cap = n_max_ - 1 - (k_ - level);
        for (long long d = d_min; d <= d_cap; ++d) {
            shifts_[static_cast<std::size_t>(level - 1)] = d;
            const long long len = n_max_ - d;
            if ((used_ += static_cast<unsigned long long>(len)) > budget_)
                throw Error(ErrorKind::Budget,
                            "BudgetExceeded: exact correlation enumeration "
                            "(consider sampled mode or a larger --budget)");
            auto& parity = levels_[static_cast<std::size_t>(level)];
            parity.resize(static_cast<std::size_t>(len));
            if (level == 1) {
                std::copy(s_.begin() + d, s_.begin() + n_max_, parity.begin());
            } else {
                const auto& prev = levels_[static_cast<std::size_t>(level - 1)];
                for (long long i = 0; i < len; ++i)
                    parity[static_cast<std::size_t>(i)] =
                        prev[static_cast<std::size_t>(i)] ^ s_[static_cast<std::size_t>(i + d)];
            }
            if (level < k_) {
                descend(level + 1, d + 1);
            } else {
                long long sum = 0;
                for (long long i = 0; i < len; ++i) {
                    sum += 1 - 2 * static_cast<long long>(parity[static_cast<std::size_t>(i)]);
                    const long long v = sum < 0 ? -sum : sum;
                    BestEntry& slot = best_[static_cast<std::size_t>(d + i + 1)];
                    if (v > slot.value) {
                        slot.value = v;
                        slot.m = i + 1;
                        slot.d = shifts_;
                    }
                }
            }
        }
    }

    Bits s_;
    long long n_max_;
    int k_;
    unsigned long long budget_;
    unsigned long long used_ = 0;
    std::vector<long long> shifts_;
    std::vector<std::vector<std::uint8_t>> levels_;
    std::vector<BestEntry> best_;
};

std::vector<CorrelationReport> exact_profile(Bits s, long long n_max, int k,
                                             const CorrelationOptions& opts) {
    ExactEnumerator e(s, n_max, k, opts.budget);
    const std::vector<BestEntry> per_t = e.enumerate();

    std::vector<CorrelationReport> out(static_cast<std::size_t>(n_max));
    BestEntry running;
    for (long long n = 1; n <= n_max; ++n) {
        const BestEntry& cand = per_t[static_cast<std::size_t>(n)];
        if (cand.value > running.value) running = cand;
        CorrelationReport& r = out[static_cast<std::size_t>(n - 1)];
        r.n = n;
        r.order = k;
        r.value = running.value;
        r.m_star = running.m;
        r.d_star = running.d;
        r.exact = true;
    }
    return out;
}

}  // namespace

std::vector<CorrelationReport> correlation_profile(Bits s, long long n_max, int k,
                                                   const CorrelationOptions& opts) {
    check_bits(s);
    if (k < 1) throw Error(ErrorKind::Validation, "correlation order must be >= 1");
    if (n_max < 1 || n_max > static_cast<long long>(s.size()))
        throw Error(ErrorKind::Validation, "correlation: N exceeds the prefix");
    if (opts.sampled)
        throw Error(ErrorKind::Validation, "sampled mode supports single-N correlation only");
    return exact_profile(s, n_max, k, opts);
}

CorrelationReport correlation(Bits s, long long n, int k, const CorrelationOptions& opts) {
    check_bits(s);
    if (k < 1) throw Error(ErrorKind::Validation, "correlation order must be >= 1");
    if (n < 1 || n > static_cast<long long>(s.size()))
        throw Error(ErrorKind::Validation, "correlation: N exceeds the prefix");
    if (n < k)
        throw Error(ErrorKind::Validation, "correlation needs N >= k");

    if (!opts.sampled) return exact_profile(s, n, k, opts).back();

    std::mt19937_64 rng(opts.seed);
    CorrelationReport best{n, k, -1, 0, {}, false};
    std::vector<long long> pool(static_cast<std::size_t>(n));
    std::iota(pool.begin(), pool.end(), 0LL);
    unsigned long long used = 0;
    for (unsigned long long it = 0; it < opts.samples; ++it) {
        // uniform sorted k-subset of {0, ..., n-1}
        std::vector<long long> d;
        for (int j = 0; j < k; ++j) {
            const std::size_t pick =
                static_cast<std::size_t>(j) +
                static_cast<std::size_t>(rng() % (pool.size() - static_cast<std::size_t>(j)));
            std::swap(pool[static_cast<std::size_t>(j)], pool[pick]);
            d.push_back(pool[static_cast<std::size_t>(j)]);
        }
        std::sort(d.begin(), d.end());
        const long long len = n - d.back();
        if ((used += static_cast<unsigned long long>(len)) > opts.budget) break;
        long long sum = 0;
        for (long long i = 0; i < len; ++i) {
            int parity = 0;
            for (long long dj : d) parity ^= s[static_cast<std::size_t>(i + dj)];
            sum += 1 - 2 * parity;
            const long long v = sum < 0 ? -sum : sum;
            if (v > best.value) {
                best.value = v;
                best.m_star = i + 1;
                best.d_star = d;
            }
        }
    }
    return best;
}

std::string Rational::str() const {
    return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

Rational mahler_correlation(Bits s, long long m, long long shift) {
    check_bits(s);
    if (shift < 0 || m < 1 || m + shift > static_cast<long long>(s.size()))
        throw Error(ErrorKind::Validation, "IndexOutOfPrefix in mahler_correlation");
    long long v = 0;
    if (shift == 0) {
        v = m;  // exponent 2 s(n) is even
    } else {
        v = correlation_sum(s, m, ShiftVector({0, shift}));
    }
    const long long g = std::gcd(v < 0 ? -v : v, m);
    return Rational{v / g, m / g};
}

std::size_t factor_complexity(Bits s, std::size_t n) {
    if (n == 0) return 1;
    if (n > s.size())
        throw Error(ErrorKind::Validation, "factor_complexity: n exceeds the prefix");
    std::unordered_set<std::string_view> windows;
    const char* base = reinterpret_cast<const char*>(s.data());
    for (std::size_t i = 0; i + n <= s.size(); ++i) windows.emplace(base + i, n);
    return windows.size();
}

MorseHedlundResult morse_hedlund_bound(Bits s, int k, std::size_t n) {
    check_bits(s);
    if (k < 1 || n < 1)
        throw Error(ErrorKind::Validation, "morse_hedlund_bound needs k, n >= 1");
    if (n > s.size())
        throw Error(ErrorKind::Validation, "NotEnoughOccurrences: prefix shorter than n");

    const std::size_t p = factor_complexity(s, n);
    const std::size_t want = static_cast<std::size_t>(2 * k);
    const std::size_t window =
        std::max(want * p, n + want - 1);
    if (window > s.size())
        throw Error(ErrorKind::Validation,
                    "NotEnoughOccurrences: need a prefix of length " + std::to_string(window));

    const char* base = reinterpret_cast<const char*>(s.data());
    std::unordered_map<std::string_view, std::vector<long long>> occurrences;
    for (std::size_t i = 0; i + n <= window; ++i) {
        auto& positions = occurrences[std::string_view(base + i, n)];
        positions.push_back(static_cast<long long>(i));
        if (positions.size() == want) {
            MorseHedlundResult result;
            result.d = positions;
            result.complexity = p;
            result.window = window;
            result.value = correlation_sum(s, static_cast<long long>(n),
                                           ShiftVector(positions));
            if (result.value != static_cast<long long>(n))
                throw Error(ErrorKind::Verification,
                            "morse_hedlund_bound: occurrence blocks disagree");
            return result;
        }
    }
    throw Error(ErrorKind::Validation,
                "NotEnoughOccurrences: no length-" + std::to_string(n) +
                    " factor repeats " + std::to_string(want) + " times in the window");
}

}  // namespace seqlab::msr
