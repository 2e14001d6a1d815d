#include "seqlab/witness.hpp"

#include <algorithm>
#include <map>
#include <string_view>
#include <unordered_map>

namespace seqlab::wit {

namespace {

bool genealogically_less(const num::DigitWord& a, const num::DigitWord& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace

CollisionWitness find_collisions(const aut::ProductAutomaton& p,
                                 const num::PositionalSystem& sys, int k) {
    if (k < 1) throw Error(ErrorKind::Validation, "collision order k must be >= 1");
    const long bound = (2L * k - 1) * p.full_state_bound;
    std::map<int, std::vector<num::DigitWord>> buckets;
    long scanned = 0;
    for (BigInt n = 1;; ++n) {
        const num::DigitWord w = sys.rep(n);
        const auto state = aut::run(p, w);
        if (!state || !p.dfa.finals[static_cast<std::size_t>(*state)])
            throw Error(ErrorKind::Verification,
                        "product automaton rejects the greedy word rep(" + to_string(n) +
                            ") = " + num::digits_to_string(w));
        auto& bucket = buckets[*state];
        bucket.push_back(w);
        ++scanned;
        if (static_cast<int>(bucket.size()) == 2 * k)
            return CollisionWitness{bucket, *state, k, bound};
        if (scanned > bound)
            throw Error(ErrorKind::Verification,
                        "pigeonhole bound exceeded while scanning for collisions "
                        "(automaton bug)");
    }
}

CollisionWitness witness_from_words(const aut::ProductAutomaton& p,
                                    const num::PositionalSystem& sys,
                                    std::vector<num::DigitWord> words) {
    if (words.empty() || words.size() % 2 != 0)
        throw Error(ErrorKind::Validation, "need a positive even number of words");
    std::optional<int> state;
    for (const auto& w : words) {
        if (w.empty()) throw Error(ErrorKind::Validation, "witness words must be nonempty");
        if (!sys.is_greedy(w))
            throw Error(ErrorKind::Validation,
                        "witness word " + num::digits_to_string(w) + " is not greedy");
        const auto reached = aut::run(p, w);
        if (!reached)
            throw Error(ErrorKind::Validation,
                        "product automaton rejects " + num::digits_to_string(w));
        if (state && *state != *reached)
            throw Error(ErrorKind::Validation, "witness words reach different product states");
        state = *reached;
    }
    for (std::size_t i = 1; i < words.size(); ++i)
        if (!genealogically_less(words[i - 1], words[i]))
            throw Error(ErrorKind::Validation, "witness words must be genealogically increasing");
    const int k = static_cast<int>(words.size() / 2);
    return CollisionWitness{std::move(words), *state, k,
                            (2L * k - 1) * p.full_state_bound};
}

CorrelationCertificate build_certificate(const CollisionWitness& w,
                                         const num::PositionalSystem& sys, long long m) {
    if (m < 0) throw Error(ErrorKind::Validation, "M must be >= 0");
    CorrelationCertificate cert;
    cert.k = w.k;
    cert.m = m;
    cert.block_length = sys.value(static_cast<std::size_t>(m));
    for (const auto& u : w.words) {
        num::DigitWord padded = u;
        padded.insert(padded.end(), static_cast<std::size_t>(m), 0);
        cert.positions.push_back(sys.val(padded));
    }
    for (std::size_t i = 1; i < cert.positions.size(); ++i)
        if (cert.positions[i] <= cert.positions[i - 1])
            throw Error(ErrorKind::Verification, "certificate positions not increasing");
    return cert;
}

std::optional<long long> largest_fitting_m(const CollisionWitness& w,
                                           const num::PositionalSystem& sys,
                                           const BigInt& capacity) {
    std::optional<long long> best;
    for (long long m = 0;; ++m) {
        const CorrelationCertificate cert = build_certificate(w, sys, m);
        if (cert.applicable_n() > capacity) return best;
        best = m;
    }
}

void verify_certificate(msr::Bits s, CorrelationCertificate& cert) {
    if (!fits_ll(cert.applicable_n()) ||
        to_ll(cert.applicable_n()) > static_cast<long long>(s.size()))
        throw Error(ErrorKind::Validation,
                    "prefix too short: certificate needs " + to_string(cert.applicable_n()) +
                        " symbols");
    const long long block = to_ll(cert.block_length);
    std::vector<long long> pos;
    for (const auto& p : cert.positions) pos.push_back(to_ll(p));

    for (std::size_t i = 1; i < pos.size(); ++i)
        for (long long n = 0; n < block; ++n)
            if (s[static_cast<std::size_t>(pos[0] + n)] != s[static_cast<std::size_t>(pos[i] + n)])
                throw Error(ErrorKind::Verification,
                            "VerificationFailed: blocks differ at offset " + std::to_string(n) +
                                " between positions " + std::to_string(pos[0]) + " and " +
                                std::to_string(pos[i]));

    const long long v = msr::correlation_sum(s, block, msr::ShiftVector(pos));
    if (v != block)
        throw Error(ErrorKind::Verification,
                    "VerificationFailed: V = " + std::to_string(v) + ", expected " +
                        std::to_string(block));
    cert.verified = true;
}

EmpiricalTable empirical_constant(msr::Bits s, int k, long long n_from, long long n_to,
                                  const msr::CorrelationOptions& opts,
                                  std::optional<std::pair<int, int>> base_and_states) {
    if (n_from < 1 || n_from > n_to)
        throw Error(ErrorKind::Validation, "bad N range");
    EmpiricalTable table;
    table.order = 2 * k;
    const auto profile = msr::correlation_profile(s, n_to, 2 * k, opts);
    table.min_ratio = 1e300;
    for (long long n = n_from; n <= n_to; ++n) {
        const auto& r = profile[static_cast<std::size_t>(n - 1)];
        const double ratio = static_cast<double>(r.value) / static_cast<double>(n);
        table.rows.push_back({n, r.value, ratio});
        table.min_ratio = std::min(table.min_ratio, ratio);
    }
    if (base_and_states) {
        const auto [b, states] = *base_and_states;
        table.reference_slope = 1.0 / (static_cast<double>(b) * (states + 1));
    }
    return table;
}

LinRecWitness linrec_witness(msr::Bits s, std::size_t n, int k) {
    if (n < 1 || k < 1) throw Error(ErrorKind::Validation, "need n, k >= 1");
    if (n > s.size())
        throw Error(ErrorKind::Validation, "prefix shorter than the requested window");
    const long long reps = 2LL * k - 1;
    const long long d_max = (static_cast<long long>(s.size()) - static_cast<long long>(n)) / reps;
    for (long long d = 1; d <= d_max; ++d) {
        bool ok = true;
        for (long long j = 1; j <= reps && ok; ++j)
            for (std::size_t i = 0; i < n; ++i)
                if (s[i] != s[static_cast<std::size_t>(j * d) + i]) {
                    ok = false;
                    break;
                }
        if (!ok) continue;
        LinRecWitness w;
        w.d = d;
        for (long long j = 0; j < 2 * k; ++j) w.shifts.push_back(j * d);
        w.value = msr::correlation_sum(s, static_cast<long long>(n), msr::ShiftVector(w.shifts));
        if (w.value != static_cast<long long>(n))
            throw Error(ErrorKind::Verification, "linrec witness failed verification");
        return w;
    }
    throw Error(ErrorKind::Validation,
                "NoRecurrenceFound: prefix of length " + std::to_string(n) +
                    " has no aligned recurrence within the scanned window");
}

std::vector<RecurrenceRow> recurrence_constant_estimate(msr::Bits s, std::size_t n_max) {
    std::vector<RecurrenceRow> rows;
    const char* base = reinterpret_cast<const char*>(s.data());
    for (std::size_t n = 1; n <= n_max && n <= s.size(); ++n) {
        std::unordered_map<std::string_view, std::size_t> last_seen;
        long long max_gap = 0;
        for (std::size_t i = 0; i + n <= s.size(); ++i) {
            const std::string_view w(base + i, n);
            const auto [it, inserted] = last_seen.try_emplace(w, i);
            if (!inserted) {
                max_gap = std::max(max_gap, static_cast<long long>(i - it->second));
                it->second = i;
            }
        }
        rows.push_back({n, max_gap, static_cast<double>(max_gap) / static_cast<double>(n)});
    }
    return rows;
}

}  // namespace seqlab::wit
