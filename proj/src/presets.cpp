#include "seqlab/presets.hpp"

#include <algorithm>

#include "seqlab/error.hpp"

namespace seqlab::presets {

namespace {

aut::Dfa ex41_l_dfa() {
    // States a0', a0, a1 (all final); a0' -1,2-> a0, a0' -3-> a1,
    // a0 loops on 0,1,2 and -3-> a1, a1 loops on 0.
    aut::Dfa dfa = aut::digit_alphabet_dfa_shell(3, 3);
    dfa.state_names = {"a0'", "a0", "a1"};
    dfa.delta[0][1] = 1;
    dfa.delta[0][2] = 1;
    dfa.delta[0][3] = 2;
    dfa.delta[1][0] = 1;
    dfa.delta[1][1] = 1;
    dfa.delta[1][2] = 1;
    dfa.delta[1][3] = 2;
    dfa.delta[2][0] = 2;
    return dfa;
}

}  // namespace

SystemPreset make_beta_system(const std::string& name, beta::BetaSpec spec) {
    SystemPreset p;
    p.name = name;
    p.spec = beta::normalize(std::move(spec));
    p.system = std::make_shared<num::PositionalSystem>(beta::build_recurrence(*p.spec));
    p.a_beta = aut::build_a_beta(*p.spec);
    p.l_dfa = aut::build_l_beta_dfa(*p.a_beta);
    return p;
}

namespace {

// digit-sum parity DFAO over a two-digit alphabet {0,1}
aut::Dfao parity_dfao() {
    aut::Dfao m;
    m.dfa = aut::digit_alphabet_dfa_shell(2, 1);
    m.dfa.state_names = {"0", "1"};
    m.dfa.delta = {{0, 1}, {1, 0}};
    m.outputs = {"0", "1"};
    return m;
}

aut::Dfao cantor_dfao() {
    // 'b' iff some ternary digit equals 1; the b state absorbs.
    aut::Dfao m;
    m.dfa = aut::digit_alphabet_dfa_shell(2, 2);
    m.dfa.state_names = {"a", "b"};
    m.dfa.delta = {{0, 1, 0}, {1, 1, 1}};
    m.outputs = {"0", "1"};
    return m;
}

aut::Dfao ex41_dfao() {
    // Output 1 once a 3 has been read; completion of the partial b-state
    // transitions is irrelevant on greedy words (only 0s follow a 3).
    aut::Dfao m;
    m.dfa = aut::digit_alphabet_dfa_shell(2, 3);
    m.dfa.state_names = {"a", "b"};
    m.dfa.delta = {{0, 0, 0, 1}, {1, 1, 1, 1}};
    m.outputs = {"0", "1"};
    return m;
}

mor::SequencePrefix periodic_prefix(const std::string& pattern, std::size_t n) {
    if (pattern.empty())
        throw Error(ErrorKind::Validation, "periodic pattern must be nonempty");
    for (char c : pattern)
        if (c != '0' && c != '1')
            throw Error(ErrorKind::Validation, "periodic pattern must be over {0,1}");
    mor::SequencePrefix s;
    s.alphabet = {"0", "1"};
    s.provenance = "periodic:" + pattern;
    s.symbols.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        s.symbols.push_back(static_cast<std::uint8_t>(pattern[i % pattern.size()] - '0'));
    return s;
}

}  // namespace

SystemPreset make_system(const std::string& name) {
    if (name == "base2") return make_beta_system(name, beta::quasi_greedy_from_greedy({2}));
    if (name == "base10") return make_beta_system(name, beta::quasi_greedy_from_greedy({10}));
    if (name == "base3") return make_beta_system(name, beta::quasi_greedy_from_greedy({3}));
    if (name == "fibonacci") return make_beta_system(name, beta::quasi_greedy_from_greedy({1, 1}));
    if (name == "phi2") return make_beta_system(name, beta::BetaSpec{{2}, {1}});
    if (name == "ex41") {
        SystemPreset p;
        p.name = name;
        // U(n+1) = 3U(n) + 1 as the homogeneous order-2 recurrence.
        beta::LinearRecurrence rec;
        rec.coefficients = {4, -3};
        rec.initial_values = {BigInt(1), BigInt(4)};
        p.system = std::make_shared<num::PositionalSystem>(std::move(rec));
        p.l_dfa = ex41_l_dfa();
        return p;
    }
    throw Error(ErrorKind::Validation, "unknown system preset '" + name + "'");
}

std::vector<std::string> system_names() {
    return {"base2", "base3", "base10", "fibonacci", "phi2", "ex41"};
}

mor::SequencePrefix champernowne_prefix(std::size_t n) {
    mor::SequencePrefix s;
    s.alphabet = {"0", "1"};
    s.provenance = "champernowne";
    s.symbols.reserve(n);
    for (unsigned long long v = 0; s.symbols.size() < n; ++v) {
        if (v == 0) {
            s.symbols.push_back(0);
            continue;
        }
        int bits = 0;
        while ((v >> bits) != 0) ++bits;
        for (int b = bits - 1; b >= 0 && s.symbols.size() < n; --b)
            s.symbols.push_back(static_cast<std::uint8_t>((v >> b) & 1));
    }
    return s;
}

SequenceHandle make_sequence(const std::string& name) {
    SequenceHandle h;
    h.name = name;
    if (name == "thue_morse") {
        h.system = make_system("base2");
        h.dfao = parity_dfao();
    } else if (name == "fib_sum_digits") {
        h.system = make_system("fibonacci");
        h.dfao = parity_dfao();
    } else if (name == "cantor") {
        h.system = make_system("base3");
        h.dfao = cantor_dfao();
    } else if (name == "ex41") {
        h.system = make_system("ex41");
        h.dfao = ex41_dfao();
    } else if (name == "champernowne") {
        h.generate = champernowne_prefix;
        return h;
    } else if (name.rfind("periodic:", 0) == 0) {
        const std::string pattern = name.substr(9);
        h.generate = [pattern](std::size_t n) { return periodic_prefix(pattern, n); };
        return h;
    } else if (name == "constant") {
        h.generate = [](std::size_t n) { return periodic_prefix("0", n); };
        return h;
    } else {
        throw Error(ErrorKind::Validation, "unknown sequence preset '" + name + "'");
    }
    const SystemPreset sys = *h.system;
    const aut::Dfao dfao = *h.dfao;
    h.generate = [sys, dfao, name](std::size_t n) {
        auto s = mor::automatic_prefix(dfao, *sys.system, n);
        s.provenance = name;
        return s;
    };
    return h;
}

std::vector<std::string> sequence_names() {
    return {"thue_morse", "fib_sum_digits", "cantor",       "ex41",
            "champernowne", "periodic:<pattern>", "constant"};
}

}  // namespace seqlab::presets
