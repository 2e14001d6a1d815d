#include "seqlab/morphic.hpp"

#include <algorithm>
#include <set>

#include "seqlab/error.hpp"

namespace seqlab::mor {

bool Morphism::is_coding() const {
    return std::all_of(images.begin(), images.end(),
                       [](const aut::Word& w) { return w.size() == 1; });
}

int Morphism::letter_index(const std::string& letter) const {
    const auto it = std::find(domain.begin(), domain.end(), letter);
    return it == domain.end() ? -1 : static_cast<int>(it - domain.begin());
}

aut::Word apply(const Morphism& m, std::span<const int> w) {
    aut::Word out;
    for (int letter : w) {
        if (letter < 0 || letter >= static_cast<int>(m.images.size()))
            throw Error(ErrorKind::Validation, "LetterOutOfAlphabet in morphism application");
        const aut::Word& image = m.images[static_cast<std::size_t>(letter)];
        out.insert(out.end(), image.begin(), image.end());
    }
    return out;
}

std::span<const std::uint8_t> binary_view(const SequencePrefix& s) {
    if (s.alphabet != std::vector<std::string>{"0", "1"})
        throw Error(ErrorKind::Validation,
                    "NonBinaryOutput: measures need a binary sequence");
    return {s.symbols.data(), s.symbols.size()};
}

SequencePrefix fixed_point_prefix(const MorphicSpec& spec, std::size_t n, std::size_t cap) {
    const Morphism& f = spec.f;
    if (spec.seed < 0 || spec.seed >= static_cast<int>(f.images.size()))
        throw Error(ErrorKind::Validation, "seed letter outside the morphism domain");
    const aut::Word& seed_image = f.images[static_cast<std::size_t>(spec.seed)];
    if (seed_image.empty() || seed_image[0] != spec.seed || seed_image.size() < 2)
        throw Error(ErrorKind::Validation,
                    "NotProlongable: f(seed) must start with the seed and grow");

    SequencePrefix out;
    out.provenance = "morphic(seed=" + f.domain[static_cast<std::size_t>(spec.seed)] + ")";
    out.alphabet = spec.coding.codomain;

    // A letter is productive when some letter reachable from it under f
    // (including itself) has a nonempty coding image. Unproductive letters
    // can never contribute to the coded sequence.
    std::vector<bool> productive(f.images.size(), false);
    for (std::size_t i = 0; i < f.images.size(); ++i)
        productive[i] = !spec.coding.images[i].empty();
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t i = 0; i < f.images.size(); ++i) {
            if (productive[i]) continue;
            for (int target : f.images[i])
                if (productive[static_cast<std::size_t>(target)]) {
                    productive[i] = true;
                    changed = true;
                    break;
                }
        }
    }

    std::vector<std::uint8_t> coded;
    coded.reserve(n);
    aut::Word raw = seed_image;
    std::size_t expand = 1;  // raw[0..expand) already has its image in raw
    std::size_t emit = 0;    // raw letters already pushed through the coding
    // productive letters in the unexpanded suffix raw[expand..); once this
    // hits zero no further coded letters can ever appear
    std::size_t pending_productive = 0;
    for (std::size_t i = expand; i < raw.size(); ++i)
        if (productive[static_cast<std::size_t>(raw[i])]) ++pending_productive;
    while (coded.size() < n) {
        while (emit < raw.size() && coded.size() < n) {
            const aut::Word& image = spec.coding.images[static_cast<std::size_t>(raw[emit])];
            for (int letter : image) coded.push_back(static_cast<std::uint8_t>(letter));
            ++emit;
        }
        if (coded.size() >= n) break;
        if (expand >= raw.size() || pending_productive == 0)
            throw Error(ErrorKind::Validation, "FiniteImage: the coded fixed point is finite");
        if (raw.size() > cap)
            throw Error(ErrorKind::Capacity,
                        "fixed-point expansion exceeded the letter cap");
        if (productive[static_cast<std::size_t>(raw[expand])]) --pending_productive;
        const aut::Word& image = f.images[static_cast<std::size_t>(raw[expand])];
        for (int letter : image)
            if (productive[static_cast<std::size_t>(letter)]) ++pending_productive;
        raw.insert(raw.end(), image.begin(), image.end());
        ++expand;
    }
    out.symbols = std::move(coded);
    return out;
}

std::pair<Morphism, Morphism> build_phi_nu(const aut::ProductAutomaton& p) {
    const int states = p.dfa.num_states();
    std::vector<std::string> letters{"alpha"};
    for (const auto& name : p.dfa.state_names) letters.push_back(name);

    Morphism phi;
    phi.domain = letters;
    phi.codomain = letters;
    phi.images.push_back({0, p.dfa.initial + 1});  // phi(alpha) = alpha (a0, r0)
    for (int s = 0; s < states; ++s) {
        aut::Word image;
        for (std::size_t c = 0; c < p.dfa.alphabet.size(); ++c) {
            const int to = p.dfa.delta[static_cast<std::size_t>(s)][c];
            if (to >= 0) image.push_back(to + 1);  // undefined contributes epsilon
        }
        phi.images.push_back(std::move(image));
    }

    Morphism nu;
    nu.domain = letters;
    nu.codomain = {"0", "1"};
    nu.images.push_back({});  // nu(alpha) = epsilon
    for (int s = 0; s < states; ++s) {
        const std::string& out = p.outputs[static_cast<std::size_t>(s)];
        if (out != "0" && out != "1")
            throw Error(ErrorKind::Validation,
                        "NonBinaryOutput: product output '" + out + "'");
        nu.images.push_back({out == "0" ? 0 : 1});
    }
    return {std::move(phi), std::move(nu)};
}

SequencePrefix automatic_prefix(const aut::Dfao& dfao, const num::PositionalSystem& sys,
                                std::size_t n) {
    aut::validate_dfao(dfao);
    if (sys.max_digit() >= static_cast<int>(dfao.dfa.alphabet.size()))
        throw Error(ErrorKind::Validation,
                    "DFAO alphabet smaller than the numeration digit alphabet");

    std::vector<std::string> alphabet(dfao.outputs.begin(), dfao.outputs.end());
    std::sort(alphabet.begin(), alphabet.end());
    alphabet.erase(std::unique(alphabet.begin(), alphabet.end()), alphabet.end());

    SequencePrefix out;
    out.alphabet = alphabet;
    out.provenance = "automatic(N=" + std::to_string(n) + ")";
    out.symbols.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const num::DigitWord w = sys.rep(BigInt(static_cast<unsigned long>(i)));
        const auto [state, output] = aut::run_output(dfao, w);
        const auto it = std::lower_bound(alphabet.begin(), alphabet.end(), output);
        out.symbols.push_back(static_cast<std::uint8_t>(it - alphabet.begin()));
    }
    return out;
}

CrossCheckResult cross_check_morphic_vs_automatic(const aut::ProductAutomaton& p,
                                                  const num::PositionalSystem& sys,
                                                  std::size_t n) {
    auto [phi, nu] = build_phi_nu(p);

    MorphicSpec coded_spec{phi, 0, nu};
    const SequencePrefix morphic_side = fixed_point_prefix(coded_spec, n);

    // Raw fixed point, for the shifted state-sequence check: the (i+1)-st
    // letter of phi^omega(alpha) is the product state reached by the i-th
    // word of L in genealogical order.
    Morphism identity;
    identity.domain = phi.domain;
    identity.codomain = phi.domain;
    for (int i = 0; i < static_cast<int>(phi.domain.size()); ++i) identity.images.push_back({i});
    const SequencePrefix raw = fixed_point_prefix({phi, 0, identity}, n + 1);

    for (std::size_t i = 0; i < n; ++i) {
        const num::DigitWord w = sys.rep(BigInt(static_cast<unsigned long>(i)));
        const auto state = aut::run(p, w);
        if (!state)
            return {false, static_cast<long long>(i), "product automaton rejects rep(n)"};
        const std::string& output = p.outputs[static_cast<std::size_t>(*state)];
        const std::uint8_t coded = morphic_side.symbols[i];
        if (morphic_side.alphabet[coded] != output)
            return {false, static_cast<long long>(i),
                    "nu(phi^omega(alpha)) disagrees with the DFAO output"};
        if (raw.symbols[i + 1] != static_cast<std::uint8_t>(*state + 1))
            return {false, static_cast<long long>(i),
                    "shifted fixed point disagrees with the state sequence"};
    }
    return {};
}

}  // namespace seqlab::mor
