#include "seqlab/beta_systems.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace seqlab::beta {

int BetaSpec::digit(long long i) const {
    // 1-based into preperiod.period^omega
    const long long m_ = m(), k_ = k();
    if (i <= m_) return preperiod[static_cast<std::size_t>(i - 1)];
    return period[static_cast<std::size_t>((i - m_ - 1) % k_)];
}

namespace {

bool all_zero(const std::vector<int>& w) {
    return std::all_of(w.begin(), w.end(), [](int d) { return d == 0; });
}

// Smallest primitive root of a finite word.
std::vector<int> primitive_root(const std::vector<int>& w) {
    const std::size_t n = w.size();
    for (std::size_t p = 1; p < n; ++p) {
        if (n % p != 0) continue;
        bool ok = true;
        for (std::size_t i = p; i < n && ok; ++i) ok = (w[i] == w[i % p]);
        if (ok) return {w.begin(), w.begin() + static_cast<long>(p)};
    }
    return w;
}

}  // namespace

BetaSpec normalize(BetaSpec spec) {
    if (spec.period.empty())
        throw Error(ErrorKind::Validation, "EmptyPeriod: period must be non-empty");
    for (int d : spec.preperiod)
        if (d < 0) throw Error(ErrorKind::Validation, "negative digit in preperiod");
    for (int d : spec.period)
        if (d < 0) throw Error(ErrorKind::Validation, "negative digit in period");

    if (all_zero(spec.period)) {
        // Finite greedy expansion t(1)...t(m) 0^omega: strip the zero tail
        // and take the quasi-greedy form.
        std::vector<int> greedy = spec.preperiod;
        while (!greedy.empty() && greedy.back() == 0) greedy.pop_back();
        if (greedy.empty())
            throw Error(ErrorKind::Validation, "LeadingZero: expansion of 1 is all zeros");
        return quasi_greedy_from_greedy(greedy);
    }

    // Absorb preperiod digits equal to the rotated period tail.
    while (!spec.preperiod.empty() && spec.preperiod.back() == spec.period.back()) {
        spec.period.pop_back();
        spec.period.insert(spec.period.begin(), spec.preperiod.back());
        spec.preperiod.pop_back();
    }
    spec.period = primitive_root(spec.period);
    return spec;
}

void validate_parry_expansion(const BetaSpec& raw) {
    const BetaSpec spec = normalize(raw);
    const int m = spec.m(), k = spec.k();
    // Both the word and any of its shifts are eventually periodic with
    // period k and preperiod <= m+k; agreeing on this many digits means
    // agreeing everywhere.
    const long long horizon = static_cast<long long>(m + k) + 3LL * k + 2;
    for (long long shift = 1; shift <= m + k; ++shift) {
        for (long long i = 1; i <= horizon; ++i) {
            const int a = spec.digit(shift + i);
            const int b = spec.digit(i);
            if (a < b) break;
            if (a > b)
                throw Error(ErrorKind::Validation,
                            "NotAdmissible: shift " + std::to_string(shift) +
                                " exceeds the expansion at digit " + std::to_string(i));
        }
    }
}

BetaSpec quasi_greedy_from_greedy(const std::vector<int>& greedy) {
    if (greedy.empty())
        throw Error(ErrorKind::Validation, "empty greedy expansion");
    if (greedy.back() == 0)
        throw Error(ErrorKind::Validation, "LastDigitZero: greedy d_beta(1) must end in a nonzero digit");
    std::vector<int> period(greedy.begin(), greedy.end() - 1);
    period.push_back(greedy.back() - 1);
    if (all_zero(period))
        throw Error(ErrorKind::Validation, "LeadingZero: quasi-greedy expansion is 0^omega (beta <= 1)");
    return BetaSpec{{}, primitive_root(period)};
}

void LinearRecurrence::extend(std::vector<BigInt>& vals, std::size_t n) const {
    const int ord = order();
    while (vals.size() <= n) {
        const std::size_t i = vals.size();
        BigInt next = 0;
        for (int j = 1; j <= ord; ++j)
            next += BigInt(static_cast<long>(coefficients[static_cast<std::size_t>(j - 1)])) *
                    vals[i - static_cast<std::size_t>(j)];
        vals.push_back(next);
    }
}

std::vector<BigInt> LinearRecurrence::values(std::size_t n) const {
    if (initial_values.empty() || initial_values[0] != 1)
        throw Error(ErrorKind::Validation, "recurrence must start with U(0) = 1");
    std::vector<BigInt> vals = initial_values;
    if (vals.size() > n) vals.resize(n);
    extend(vals, n == 0 ? 0 : n - 1);
    vals.resize(n);
    for (std::size_t i = 1; i < vals.size(); ++i)
        if (vals[i] <= vals[i - 1])
            throw Error(ErrorKind::Validation,
                        "recurrence values not strictly increasing at index " + std::to_string(i));
    return vals;
}

LinearRecurrence build_recurrence(const BetaSpec& raw) {
    const BetaSpec spec = normalize(raw);
    validate_parry_expansion(spec);
    const int m = spec.m(), k = spec.k();
    const int order = m + k;

    LinearRecurrence rec;
    rec.coefficients.assign(static_cast<std::size_t>(order), 0);
    for (int i = 1; i <= order; ++i)
        rec.coefficients[static_cast<std::size_t>(i - 1)] = spec.digit(i);
    // U(n) = t(1)U(n-1) + ... + t(m+k)U(n-m-k) + U(n-k) - t(1)U(n-k-1) - ... - t(m)U(n-m-k)
    rec.coefficients[static_cast<std::size_t>(k - 1)] += 1;
    for (int j = 1; j <= m; ++j)
        rec.coefficients[static_cast<std::size_t>(k + j - 1)] -= spec.digit(j);

    rec.initial_values.emplace_back(1);
    for (int i = 1; i < order; ++i) {
        BigInt v = 1;
        for (int j = 1; j <= i; ++j)
            v += BigInt(spec.digit(j)) * rec.initial_values[static_cast<std::size_t>(i - j)];
        rec.initial_values.push_back(v);
    }
    return rec;
}

DominantRoot dominant_root(const LinearRecurrence& rec, int n_terms, double tolerance) {
    if (n_terms < 2 * rec.order())
        throw Error(ErrorKind::Validation, "dominant_root needs n_terms >= 2 * order");
    const auto vals = rec.values(static_cast<std::size_t>(n_terms) + 1);

    auto ratio = [&](int n) {
        return mpq_class(vals[static_cast<std::size_t>(n)], vals[static_cast<std::size_t>(n - 1)]).get_d();
    };
    const double r_last = ratio(n_terms);
    const double r_prev = ratio(n_terms - 1);
    if (std::fabs(r_last - r_prev) > tolerance)
        throw Error(ErrorKind::Validation,
                    "NonConvergent: consecutive ratio estimates differ by " +
                        std::to_string(std::fabs(r_last - r_prev)));

    // c = U(n) / beta^n via base-2 logarithms (U(n) overflows double quickly).
    long exp2 = 0;
    const double mant = mpz_get_d_2exp(&exp2, vals[static_cast<std::size_t>(n_terms)].get_mpz_t());
    const double log2_u = std::log2(mant) + static_cast<double>(exp2);
    const double c = std::exp2(log2_u - n_terms * std::log2(r_last));
    return DominantRoot{r_last, c, n_terms};
}

std::vector<int> float_greedy_expansion(double beta_value, double x, int len) {
    if (!(beta_value > 1.0))
        throw Error(ErrorKind::Validation, "OutOfRange: beta must be > 1");
    if (!(x >= 0.0 && x < 1.0))
        throw Error(ErrorKind::Validation, "OutOfRange: x must lie in [0,1)");
    if (len < 1) throw Error(ErrorKind::Validation, "OutOfRange: len must be >= 1");
    std::vector<int> digits;
    digits.reserve(static_cast<std::size_t>(len));
    for (int i = 0; i < len; ++i) {
        x *= beta_value;
        // Nudge values a hair below an integer up to it, so that exactly
        // representable boundary points (e.g. x = 1/beta) round the right way.
        int d = static_cast<int>(std::floor(x + 1e-12));
        if (d < 0) d = 0;
        x -= d;
        digits.push_back(d);
    }
    return digits;
}

}  // namespace seqlab::beta
