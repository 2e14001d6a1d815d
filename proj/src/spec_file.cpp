#include "seqlab/spec_file.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "seqlab/error.hpp"

namespace seqlab::specfile {

namespace {

struct Entry {
    std::string key;
    std::string value;
    int line = 0;
};

struct Section {
    std::string name;
    int line = 0;
    std::vector<Entry> entries;

    const Entry* find(const std::string& key) const {
        for (const auto& e : entries)
            if (e.key == key) return &e;
        return nullptr;
    }
    std::vector<const Entry*> all(const std::string& key) const {
        std::vector<const Entry*> out;
        for (const auto& e : entries)
            if (e.key == key) out.push_back(&e);
        return out;
    }
};

[[noreturn]] void fail(const std::string& origin, int line, const std::string& msg) {
    throw Error(ErrorKind::Validation, origin + ":" + std::to_string(line) + ": " + msg);
}

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

std::vector<Section> tokenize(const std::string& text, const std::string& origin,
                              std::string& canonical) {
    std::vector<Section> sections;
    std::istringstream in(text);
    std::string raw;
    std::ostringstream canon;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        std::string s = raw;
        if (auto pos = s.find('#'); pos != std::string::npos) s.erase(pos);
        s = trim(s);
        if (s.empty()) continue;
        if (s.front() == '[') {
            if (s.back() != ']') fail(origin, line, "unterminated section header");
            std::string name = trim(s.substr(1, s.size() - 2));
            if (name.empty()) fail(origin, line, "empty section name");
            sections.push_back(Section{name, line, {}});
            canon << '[' << name << "]\n";
            continue;
        }
        auto eq = s.find('=');
        if (eq == std::string::npos) fail(origin, line, "expected 'key = value'");
        if (sections.empty()) fail(origin, line, "entry before any [section]");
        Entry e;
        e.key = trim(s.substr(0, eq));
        e.value = trim(s.substr(eq + 1));
        e.line = line;
        if (e.key.empty()) fail(origin, line, "empty key");
        canon << e.key << " = " << e.value << '\n';
        sections.back().entries.push_back(std::move(e));
    }
    canonical = canon.str();
    return sections;
}

std::vector<int> parse_ints(const std::string& origin, const Entry& e) {
    std::vector<int> out;
    for (const auto& tok : split_ws(e.value)) {
        try {
            std::size_t used = 0;
            int v = std::stoi(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
            out.push_back(v);
        } catch (const std::exception&) {
            fail(origin, e.line, "'" + e.key + "': not an integer: '" + tok + "'");
        }
    }
    return out;
}

presets::SystemPreset parse_system(const std::string& origin, const Section& sec) {
    if (const Entry* e = sec.find("preset")) return presets::make_system(e->value);
    const Entry* period = sec.find("period");
    if (period) {
        beta::BetaSpec spec;
        if (const Entry* pre = sec.find("preperiod"))
            spec.preperiod = parse_ints(origin, *pre);
        spec.period = parse_ints(origin, *period);
        try {
            return presets::make_beta_system("custom", std::move(spec));
        } catch (const Error& err) {
            fail(origin, period->line, err.what());
        }
    }
    const Entry* coeff = sec.find("coefficients");
    const Entry* init = sec.find("initial");
    if (coeff && init) {
        beta::LinearRecurrence rec;
        for (int c : parse_ints(origin, *coeff)) rec.coefficients.push_back(c);
        for (int v : parse_ints(origin, *init)) rec.initial_values.push_back(BigInt(static_cast<long>(v)));
        presets::SystemPreset p;
        p.name = "custom";
        try {
            p.system = std::make_shared<num::PositionalSystem>(std::move(rec));
        } catch (const Error& err) {
            fail(origin, coeff->line, err.what());
        }
        return p;
    }
    fail(origin, sec.line, "[system] needs 'preset', 'period', or 'coefficients'+'initial'");
}

aut::Dfao parse_automaton(const std::string& origin, const Section& sec,
                          const presets::SystemPreset& system) {
    const Entry* states = sec.find("states");
    if (!states) fail(origin, sec.line, "[automaton] needs 'states'");
    aut::Dfao m;
    m.dfa.state_names = split_ws(states->value);
    if (m.dfa.state_names.empty()) fail(origin, states->line, "'states' is empty");
    int max_digit = system.system->max_digit();
    for (int d = 0; d <= max_digit; ++d) m.dfa.alphabet.push_back(std::to_string(d));
    int n = static_cast<int>(m.dfa.state_names.size());
    m.dfa.delta.assign(n, std::vector<int>(max_digit + 1, -1));
    m.dfa.finals.assign(n, true);
    m.outputs.assign(n, "");

    auto state_index = [&](const Entry& e, const std::string& name) {
        auto it = std::find(m.dfa.state_names.begin(), m.dfa.state_names.end(), name);
        if (it == m.dfa.state_names.end())
            fail(origin, e.line, "unknown state '" + name + "'");
        return static_cast<int>(it - m.dfa.state_names.begin());
    };

    if (const Entry* e = sec.find("initial"))
        m.dfa.initial = state_index(*e, e->value);
    for (const Entry* e : sec.all("transition")) {
        auto toks = split_ws(e->value);
        if (toks.size() != 3) fail(origin, e->line, "'transition' needs: state digit state");
        int from = state_index(*e, toks[0]);
        int letter = m.dfa.letter_index(toks[1]);
        if (letter < 0) fail(origin, e->line, "digit '" + toks[1] + "' outside the system alphabet");
        m.dfa.delta[from][letter] = state_index(*e, toks[2]);
    }
    std::vector<bool> has_output(n, false);
    for (const Entry* e : sec.all("output")) {
        auto toks = split_ws(e->value);
        if (toks.size() != 2) fail(origin, e->line, "'output' needs: state letter");
        int st = state_index(*e, toks[0]);
        m.outputs[st] = toks[1];
        has_output[st] = true;
    }
    for (int i = 0; i < n; ++i)
        if (!has_output[i])
            fail(origin, sec.line, "state '" + m.dfa.state_names[i] + "' has no output");
    try {
        aut::validate_dfao(m);
    } catch (const Error& err) {
        fail(origin, sec.line, err.what());
    }
    return m;
}

mor::Morphism parse_maps(const std::string& origin, const Section& sec, const std::string& key) {
    mor::Morphism f;
    std::vector<std::vector<std::string>> raw_images;
    for (const Entry* e : sec.all(key)) {
        auto arrow = e->value.find("->");
        if (arrow == std::string::npos) fail(origin, e->line, "'" + key + "' needs 'letter -> image'");
        auto lhs = split_ws(trim(e->value.substr(0, arrow)));
        if (lhs.size() != 1) fail(origin, e->line, "'" + key + "' left side must be one letter");
        if (f.letter_index(lhs[0]) >= 0)
            fail(origin, e->line, "duplicate image for letter '" + lhs[0] + "'");
        f.domain.push_back(lhs[0]);
        raw_images.push_back(split_ws(trim(e->value.substr(arrow + 2))));
    }
    if (f.domain.empty()) fail(origin, sec.line, "[morphism] has no '" + key + "' entries");
    if (key == "map") {
        f.codomain = f.domain;
    } else {
        std::set<std::string> letters;
        for (const auto& img : raw_images) letters.insert(img.begin(), img.end());
        f.codomain.assign(letters.begin(), letters.end());
    }
    for (std::size_t i = 0; i < raw_images.size(); ++i) {
        aut::Word img;
        for (const auto& letter : raw_images[i]) {
            auto it = std::find(f.codomain.begin(), f.codomain.end(), letter);
            if (it == f.codomain.end())
                fail(origin, sec.all(key)[i]->line, "letter '" + letter + "' has no image");
            img.push_back(static_cast<int>(it - f.codomain.begin()));
        }
        if (key == "coding" && img.size() > 1)
            fail(origin, sec.all(key)[i]->line, "coding images must have length <= 1");
        f.images.push_back(std::move(img));
    }
    return f;
}

mor::MorphicSpec parse_morphism(const std::string& origin, const Section& sec) {
    mor::MorphicSpec spec;
    spec.f = parse_maps(origin, sec, "map");
    spec.coding = parse_maps(origin, sec, "coding");
    if (spec.coding.domain != spec.f.domain)
        fail(origin, sec.line, "coding must be defined on exactly the morphism letters");
    const Entry* seed = sec.find("seed");
    if (!seed) fail(origin, sec.line, "[morphism] needs 'seed'");
    spec.seed = spec.f.letter_index(seed->value);
    if (spec.seed < 0) fail(origin, seed->line, "unknown seed letter '" + seed->value + "'");
    return spec;
}

}  // namespace

std::string fnv1a_hex(const std::string& text) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

ParsedSpec parse_spec_text(const std::string& text, const std::string& origin) {
    std::string canonical;
    auto sections = tokenize(text, origin, canonical);
    if (sections.empty()) fail(origin, 1, "spec file has no sections");

    ParsedSpec spec;
    spec.digest = fnv1a_hex(canonical);
    const Section* sys_sec = nullptr;
    const Section* aut_sec = nullptr;
    const Section* mor_sec = nullptr;
    const Section* seq_sec = nullptr;
    for (const auto& sec : sections) {
        const Section** slot = nullptr;
        if (sec.name == "system") slot = &sys_sec;
        else if (sec.name == "automaton") slot = &aut_sec;
        else if (sec.name == "morphism") slot = &mor_sec;
        else if (sec.name == "sequence") slot = &seq_sec;
        else fail(origin, sec.line, "unknown section [" + sec.name + "]");
        if (*slot) fail(origin, sec.line, "duplicate section [" + sec.name + "]");
        *slot = &sec;
    }

    if (sys_sec) spec.system = parse_system(origin, *sys_sec);
    if (mor_sec) spec.morphic = parse_morphism(origin, *mor_sec);

    std::optional<aut::Dfao> dfao;
    if (aut_sec) {
        if (!spec.system) fail(origin, aut_sec->line, "[automaton] requires a [system] section");
        dfao = parse_automaton(origin, *aut_sec, *spec.system);
    }

    if (!seq_sec) {
        if (!spec.system && !spec.morphic)
            fail(origin, sections.front().line, "spec defines neither a system nor a sequence");
        return spec;
    }

    const Entry* kind = seq_sec->find("kind");
    if (!kind) fail(origin, seq_sec->line, "[sequence] needs 'kind'");
    if (kind->value == "preset") {
        const Entry* name = seq_sec->find("name");
        if (!name) fail(origin, seq_sec->line, "kind = preset needs 'name'");
        spec.sequence = presets::make_sequence(name->value);
    } else if (kind->value == "dfao") {
        if (!spec.system || !dfao)
            fail(origin, kind->line, "kind = dfao needs [system] and [automaton] sections");
        presets::SequenceHandle h;
        h.name = "spec:dfao";
        h.system = spec.system;
        h.dfao = dfao;
        auto sys = spec.system->system;
        auto machine = *dfao;
        h.generate = [sys, machine](std::size_t n) {
            return mor::automatic_prefix(machine, *sys, n);
        };
        spec.sequence = std::move(h);
    } else if (kind->value == "morphic") {
        if (!spec.morphic) fail(origin, kind->line, "kind = morphic needs a [morphism] section");
        presets::SequenceHandle h;
        h.name = "spec:morphic";
        auto ms = *spec.morphic;
        h.generate = [ms](std::size_t n) { return mor::fixed_point_prefix(ms, n); };
        spec.sequence = std::move(h);
    } else if (kind->value == "periodic") {
        const Entry* pattern = seq_sec->find("pattern");
        if (!pattern) fail(origin, seq_sec->line, "kind = periodic needs 'pattern'");
        spec.sequence = presets::make_sequence("periodic:" + pattern->value);
    } else if (kind->value == "champernowne" || kind->value == "constant") {
        spec.sequence = presets::make_sequence(kind->value);
    } else {
        fail(origin, kind->line, "unknown sequence kind '" + kind->value + "'");
    }
    return spec;
}

ParsedSpec parse_spec_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::Validation, "cannot open spec file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_spec_text(buf.str(), path);
}

}  // namespace seqlab::specfile
