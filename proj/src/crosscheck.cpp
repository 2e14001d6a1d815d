#include "seqlab/crosscheck.hpp"

#include "seqlab/error.hpp"

namespace seqlab {

std::optional<num::DigitWord> check_language_equals_greedy(
    const aut::Dfa& dfa, const num::PositionalSystem& sys, int up_to_len,
    bool with_leading_zeros, unsigned long long budget) {
    if (static_cast<int>(dfa.alphabet.size()) != sys.max_digit() + 1)
        throw Error(ErrorKind::Validation,
                    "digit alphabet mismatch between automaton and system");
    unsigned long long used = 0;
    for (int len = 0; len <= up_to_len; ++len) {
        num::DigitWord w(static_cast<std::size_t>(len), 0);
        while (true) {
            if (++used > budget)
                throw Error(ErrorKind::Budget, "language cross-check budget exceeded");
            const auto state = aut::run(dfa, w);
            const bool accepted = state && dfa.finals[static_cast<std::size_t>(*state)];
            bool greedy;
            if (with_leading_zeros) {
                std::size_t first = 0;
                while (first < w.size() && w[first] == 0) ++first;
                greedy = sys.is_greedy(std::span<const int>(w).subspan(first));
            } else {
                greedy = sys.is_greedy(w);
            }
            if (accepted != greedy) return w;
            if (len == 0) break;
            std::size_t pos = w.size();
            while (pos > 0 && w[pos - 1] == sys.max_digit()) w[--pos] = 0;
            if (pos == 0) break;
            ++w[pos - 1];
        }
    }
    return std::nullopt;
}

}  // namespace seqlab
