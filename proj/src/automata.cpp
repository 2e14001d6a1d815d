#include "seqlab/automata.hpp"

#include <algorithm>
#include <map>

#include "seqlab/error.hpp"

namespace seqlab::aut {

int Dfa::letter_index(const std::string& letter) const {
    const auto it = std::find(alphabet.begin(), alphabet.end(), letter);
    return it == alphabet.end() ? -1 : static_cast<int>(it - alphabet.begin());
}

Dfa digit_alphabet_dfa_shell(int num_states, int max_digit) {
    Dfa dfa;
    for (int d = 0; d <= max_digit; ++d) dfa.alphabet.push_back(std::to_string(d));
    dfa.delta.assign(static_cast<std::size_t>(num_states),
                     std::vector<int>(static_cast<std::size_t>(max_digit + 1), -1));
    dfa.finals.assign(static_cast<std::size_t>(num_states), true);
    for (int s = 0; s < num_states; ++s) dfa.state_names.push_back("q" + std::to_string(s));
    return dfa;
}

Dfa build_a_beta(const beta::BetaSpec& raw) {
    const beta::BetaSpec spec = beta::normalize(raw);
    beta::validate_parry_expansion(spec);
    const int mk = spec.m() + spec.k();
    const int max_digit = spec.digit(1);  // t(1) = ceil(beta) - 1

    Dfa dfa = digit_alphabet_dfa_shell(mk, max_digit);
    for (int s = 0; s < mk; ++s) dfa.state_names[static_cast<std::size_t>(s)] = "a" + std::to_string(s);

    // delta(a_{i-1}, t) = a_0 for all 1 <= i <= m+k and 0 <= t < t(i)
    for (int i = 1; i <= mk; ++i)
        for (int t = 0; t < spec.digit(i); ++t)
            dfa.delta[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(t)] = 0;
    // delta(a_{i-1}, t(i)) = a_i for 1 <= i < m+k
    for (int i = 1; i < mk; ++i)
        dfa.delta[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(spec.digit(i))] = i;
    // delta(a_{m+k-1}, t(m+k)) = a_m
    dfa.delta[static_cast<std::size_t>(mk - 1)][static_cast<std::size_t>(spec.digit(mk))] = spec.m();
    return dfa;
}

Dfa build_l_beta_dfa(const Dfa& a_beta) {
    Dfa dfa;
    dfa.alphabet = a_beta.alphabet;
    const int n = a_beta.num_states();
    dfa.state_names.push_back("a0'");
    for (const auto& name : a_beta.state_names) dfa.state_names.push_back(name);
    dfa.initial = 0;
    dfa.finals.assign(static_cast<std::size_t>(n + 1), true);
    dfa.delta.assign(static_cast<std::size_t>(n + 1),
                     std::vector<int>(dfa.alphabet.size(), -1));
    for (std::size_t c = 1; c < dfa.alphabet.size(); ++c) {  // no 0-transition from a0'
        const int to = a_beta.delta[static_cast<std::size_t>(a_beta.initial)][c];
        if (to >= 0) dfa.delta[0][c] = to + 1;
    }
    for (int s = 0; s < n; ++s)
        for (std::size_t c = 0; c < dfa.alphabet.size(); ++c) {
            const int to = a_beta.delta[static_cast<std::size_t>(s)][c];
            dfa.delta[static_cast<std::size_t>(s + 1)][c] = to < 0 ? -1 : to + 1;
        }
    return dfa;
}

void validate_dfao(const Dfao& m) {
    if (m.outputs.size() != m.dfa.delta.size())
        throw Error(ErrorKind::Validation, "DFAO output map must be total on states");
    for (const auto& row : m.dfa.delta)
        for (int to : row)
            if (to < 0)
                throw Error(ErrorKind::Validation,
                            "DFAO transition function must be total on the alphabet");
}

ProductAutomaton product(const Dfa& dfa, const Dfao& dfao) {
    if (dfa.alphabet != dfao.dfa.alphabet)
        throw Error(ErrorKind::Validation, "AlphabetMismatch between DFA and DFAO");
    validate_dfao(dfao);

    const int nr = dfao.dfa.num_states();
    const std::size_t letters = dfa.alphabet.size();

    // Reachable pairs, then renumber in (q, r) lexicographic order.
    std::map<std::pair<int, int>, int> seen;
    std::vector<std::pair<int, int>> stack{{dfa.initial, dfao.dfa.initial}};
    seen[stack.back()] = 0;
    while (!stack.empty()) {
        const auto [q, r] = stack.back();
        stack.pop_back();
        for (std::size_t c = 0; c < letters; ++c) {
            const int q2 = dfa.delta[static_cast<std::size_t>(q)][c];
            if (q2 < 0) continue;  // undefined iff the DFA side is undefined
            const int r2 = dfao.dfa.delta[static_cast<std::size_t>(r)][c];
            const std::pair<int, int> next{q2, r2};
            if (seen.emplace(next, 0).second) stack.push_back(next);
        }
    }

    ProductAutomaton p;
    p.full_state_bound = static_cast<long>(dfa.num_states()) * nr;
    p.dfa.alphabet = dfa.alphabet;
    int idx = 0;
    for (auto& [pair, id] : seen) {  // std::map iterates in (q, r) lex order
        id = idx++;
        p.labels.push_back(pair);
        p.dfa.state_names.push_back("(" + dfa.state_names[static_cast<std::size_t>(pair.first)] +
                                    "," + dfao.dfa.state_names[static_cast<std::size_t>(pair.second)] + ")");
    }
    p.dfa.initial = seen.at({dfa.initial, dfao.dfa.initial});
    p.dfa.delta.assign(p.labels.size(), std::vector<int>(letters, -1));
    p.dfa.finals.assign(p.labels.size(), false);
    p.outputs.resize(p.labels.size());
    for (std::size_t s = 0; s < p.labels.size(); ++s) {
        const auto [q, r] = p.labels[s];
        p.dfa.finals[s] = dfa.finals[static_cast<std::size_t>(q)];
        p.outputs[s] = dfao.outputs[static_cast<std::size_t>(r)];
        for (std::size_t c = 0; c < letters; ++c) {
            const int q2 = dfa.delta[static_cast<std::size_t>(q)][c];
            if (q2 < 0) continue;
            const int r2 = dfao.dfa.delta[static_cast<std::size_t>(r)][c];
            p.dfa.delta[s][c] = seen.at({q2, r2});
        }
    }
    return p;
}

std::optional<int> run(const Dfa& m, std::span<const int> w) {
    int state = m.initial;
    for (int letter : w) {
        if (letter < 0 || letter >= static_cast<int>(m.alphabet.size()))
            throw Error(ErrorKind::Validation, "LetterOutOfAlphabet");
        state = m.delta[static_cast<std::size_t>(state)][static_cast<std::size_t>(letter)];
        if (state < 0) return std::nullopt;
    }
    return state;
}

std::optional<int> run(const ProductAutomaton& m, std::span<const int> w) {
    return run(m.dfa, w);
}

std::pair<int, std::string> run_output(const Dfao& m, std::span<const int> w) {
    const auto state = run(m.dfa, w);
    if (!state)
        throw Error(ErrorKind::Validation, "DFAO transition undefined (non-total DFAO)");
    return {*state, m.outputs[static_cast<std::size_t>(*state)]};
}

BigInt count_accepted(const Dfa& dfa, int length) {
    const std::size_t n = dfa.delta.size();
    // paths[s] = number of length-j paths from s into a final state
    std::vector<BigInt> paths(n);
    for (std::size_t s = 0; s < n; ++s) paths[s] = dfa.finals[s] ? 1 : 0;
    for (int j = 0; j < length; ++j) {
        std::vector<BigInt> next(n, BigInt(0));
        for (std::size_t s = 0; s < n; ++s)
            for (int to : dfa.delta[s])
                if (to >= 0) next[s] += paths[static_cast<std::size_t>(to)];
        paths = std::move(next);
    }
    return paths[static_cast<std::size_t>(dfa.initial)];
}

}  // namespace seqlab::aut
