#include "seqlab/numeration.hpp"

#include <algorithm>

#include "seqlab/error.hpp"

namespace seqlab::num {

PositionalSystem::PositionalSystem(beta::LinearRecurrence rec, int probe_depth)
    : rec_(std::move(rec)) {
    if (rec_.initial_values.empty() || rec_.initial_values[0] != 1)
        throw Error(ErrorKind::Validation, "positional system needs U(0) = 1");
    cache_ = rec_.initial_values;
    ensure(static_cast<std::size_t>(std::max(probe_depth + 1, rec_.order())));
    // A_U = {0, ..., max over probed i of ceil(U(i+1)/U(i)) - 1}
    for (int i = 0; i < probe_depth; ++i) {
        BigInt q, r;
        mpz_cdiv_q(q.get_mpz_t(), cache_[static_cast<std::size_t>(i + 1)].get_mpz_t(),
                   cache_[static_cast<std::size_t>(i)].get_mpz_t());
        const long d = q.get_si() - 1;
        if (d > max_digit_) max_digit_ = static_cast<int>(d);
    }
}

void PositionalSystem::ensure(std::size_t i) const {
    std::lock_guard<std::mutex> lock(mutex_);
    if (cache_.size() > i) return;
    const std::size_t old = cache_.size();
    rec_.extend(cache_, i);
    for (std::size_t j = std::max<std::size_t>(old, 1); j < cache_.size(); ++j)
        if (cache_[j] <= cache_[j - 1])
            throw Error(ErrorKind::Validation,
                        "U not strictly increasing at index " + std::to_string(j));
}

BigInt PositionalSystem::value(std::size_t i) const {
    ensure(i);
    std::lock_guard<std::mutex> lock(mutex_);
    return cache_[i];
}

DigitWord PositionalSystem::rep(const BigInt& n) const {
    if (n < 0) throw Error(ErrorKind::Validation, "rep of a negative integer");
    if (n == 0) return {};
    std::size_t t = 0;
    while (value(t + 1) <= n) ++t;
    DigitWord digits;
    BigInt rest = n;
    for (std::size_t i = t + 1; i-- > 0;) {
        BigInt c = rest / value(i);
        digits.push_back(static_cast<int>(c.get_si()));
        rest -= c * value(i);
    }
    return digits;
}

BigInt PositionalSystem::val(std::span<const int> w) const {
    BigInt sum = 0;
    const std::size_t len = w.size();
    for (std::size_t i = 0; i < len; ++i) {
        const int c = w[i];
        if (c < 0 || c > max_digit_)
            throw Error(ErrorKind::Validation,
                        "DigitOutOfRange: digit " + std::to_string(c));
        sum += BigInt(c) * value(len - 1 - i);
    }
    return sum;
}

bool PositionalSystem::is_greedy(std::span<const int> w) const {
    if (w.empty()) return true;
    if (w.front() == 0) return false;
    const BigInt n = val(w);  // validates digits
    const DigitWord greedy = rep(n);
    return greedy.size() == w.size() && std::equal(w.begin(), w.end(), greedy.begin());
}

BigInt PositionalSystem::count_words_with_leading_zeros_by_enumeration(int len) const {
    if (len == 0) return 1;  // epsilon
    DigitWord w(static_cast<std::size_t>(len), 0);
    BigInt count = 0;
    while (true) {
        // strip leading zeros, then test greedy membership
        std::size_t first = 0;
        while (first < w.size() && w[first] == 0) ++first;
        if (is_greedy(std::span<const int>(w).subspan(first))) ++count;
        // odometer
        std::size_t pos = w.size();
        while (pos > 0 && w[pos - 1] == max_digit_) w[--pos] = 0;
        if (pos == 0) break;
        ++w[pos - 1];
    }
    return count;
}

GenealogicalIndex::GenealogicalIndex(const aut::Dfa& dfa) : dfa_(dfa) {}

const BigInt& GenealogicalIndex::paths(int state, int len) const {
    std::lock_guard<std::mutex> lock(mutex_);
    const std::size_t n = dfa_.delta.size();
    while (table_.size() <= static_cast<std::size_t>(len)) {
        std::vector<BigInt> row(n, BigInt(0));
        if (table_.empty()) {
            for (std::size_t s = 0; s < n; ++s) row[s] = dfa_.finals[s] ? 1 : 0;
        } else {
            const auto& prev = table_.back();
            for (std::size_t s = 0; s < n; ++s)
                for (int to : dfa_.delta[s])
                    if (to >= 0) row[s] += prev[static_cast<std::size_t>(to)];
        }
        table_.push_back(std::move(row));
    }
    return table_[static_cast<std::size_t>(len)][static_cast<std::size_t>(state)];
}

BigInt GenealogicalIndex::count_length(int len) const { return paths(dfa_.initial, len); }

aut::Word GenealogicalIndex::nth_word(const BigInt& n) const {
    BigInt before = 0;
    int len = 0;
    int empty_run = 0;
    while (true) {
        const BigInt cnt = count_length(len);
        if (before + cnt > n) break;
        before += cnt;
        empty_run = (cnt == 0) ? empty_run + 1 : 0;
        // After |Q| consecutive empty lengths no longer word exists
        // (cycle removal reaches every length window of width |Q|).
        if (empty_run > dfa_.num_states())
            throw Error(ErrorKind::Validation,
                        "FiniteLanguage: fewer than the requested number of words");
        ++len;
    }
    BigInt rank = n - before;
    aut::Word w;
    int state = dfa_.initial;
    for (int pos = 0; pos < len; ++pos) {
        const int remaining = len - pos - 1;
        bool advanced = false;
        for (int c = 0; c < static_cast<int>(dfa_.alphabet.size()); ++c) {
            const int to = dfa_.delta[static_cast<std::size_t>(state)][static_cast<std::size_t>(c)];
            if (to < 0) continue;
            const BigInt cnt = paths(to, remaining);
            if (rank < cnt) {
                w.push_back(c);
                state = to;
                advanced = true;
                break;
            }
            rank -= cnt;
        }
        if (!advanced)
            throw Error(ErrorKind::Validation, "internal: genealogical descent failed");
    }
    return w;
}

BigInt GenealogicalIndex::word_index(std::span<const int> w) const {
    const auto end_state = aut::run(dfa_, w);
    if (!end_state || !dfa_.finals[static_cast<std::size_t>(*end_state)])
        throw Error(ErrorKind::Validation, "NotInLanguage");
    BigInt index = 0;
    for (int len = 0; len < static_cast<int>(w.size()); ++len) index += count_length(len);
    int state = dfa_.initial;
    for (std::size_t pos = 0; pos < w.size(); ++pos) {
        const int remaining = static_cast<int>(w.size() - pos - 1);
        for (int c = 0; c < w[pos]; ++c) {
            const int to = dfa_.delta[static_cast<std::size_t>(state)][static_cast<std::size_t>(c)];
            if (to >= 0) index += paths(to, remaining);
        }
        state = dfa_.delta[static_cast<std::size_t>(state)][static_cast<std::size_t>(w[pos])];
    }
    return index;
}

BertrandCheck is_bertrand_up_to(const PositionalSystem& sys, int max_len,
                                unsigned long long budget) {
    unsigned long long used = 0;
    for (int len = 1; len <= max_len; ++len) {
        DigitWord w(static_cast<std::size_t>(len), 0);
        while (true) {
            if (++used > budget)
                throw Error(ErrorKind::Budget, "Bertrand check budget exceeded");
            if (w.front() != 0) {
                DigitWord w0 = w;
                w0.push_back(0);
                if (sys.is_greedy(w) != sys.is_greedy(w0))
                    return BertrandCheck{false, w};
            }
            std::size_t pos = w.size();
            while (pos > 0 && w[pos - 1] == sys.max_digit()) w[--pos] = 0;
            if (pos == 0) break;
            ++w[pos - 1];
        }
    }
    return BertrandCheck{};
}

std::string digits_to_string(std::span<const int> w) {
    std::string s;
    bool multi = false;
    for (int d : w)
        if (d > 9) multi = true;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (multi && i > 0) s += '.';
        s += std::to_string(w[i]);
    }
    return s;
}

}  // namespace seqlab::num
