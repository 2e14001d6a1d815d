#include "seqlab/report.hpp"

#include <cstdio>
#include <istream>

#include "seqlab/error.hpp"

namespace seqlab::report {

namespace {

std::string format_ratio(double r) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.9g", r);
    return buf;
}

std::string join_shifts(const std::vector<long long>& d) {
    std::string out;
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (i) out += ';';
        out += std::to_string(d[i]);
    }
    return out;
}

}  // namespace

MeasureRow from_correlation(const msr::CorrelationReport& r) {
    MeasureRow row;
    row.n = r.n;
    row.order = r.order;
    row.value = r.value;
    row.m_star = r.m_star;
    row.d_star = r.d_star;
    row.exact = r.exact;
    return row;
}

std::string measure_csv(const std::vector<MeasureRow>& rows) {
    std::string out = "N,order,value,ratio_value_over_N,M_star,D_star,mode\n";
    for (const auto& r : rows) {
        out += std::to_string(r.n);
        out += ',';
        out += std::to_string(r.order);
        out += ',';
        out += std::to_string(r.value);
        out += ',';
        out += format_ratio(r.ratio());
        out += ',';
        out += std::to_string(r.m_star);
        out += ',';
        out += join_shifts(r.d_star);
        out += ',';
        out += r.exact ? "exact" : "sampled";
        out += '\n';
    }
    return out;
}

nlohmann::json measure_json(const std::vector<MeasureRow>& rows) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : rows) {
        arr.push_back({{"N", r.n},
                       {"order", r.order},
                       {"value", r.value},
                       {"ratio_value_over_N", r.ratio()},
                       {"M_star", r.m_star},
                       {"D_star", r.d_star},
                       {"mode", r.exact ? "exact" : "sampled"}});
    }
    return arr;
}

nlohmann::json certificate_json(const wit::CorrelationCertificate& cert) {
    nlohmann::json positions = nlohmann::json::array();
    for (const auto& p : cert.positions) positions.push_back(to_string(p));
    return {{"order", 2 * cert.k},
            {"M", cert.m},
            {"block_length", to_string(cert.block_length)},
            {"positions", positions},
            {"applicable_N", to_string(cert.applicable_n())},
            {"verified", cert.verified}};
}

nlohmann::json run_report(const std::string& spec_digest, const nlohmann::json& parameters) {
    return {{"tool", kToolVersion},
            {"schema_version", kSchemaVersion},
            {"spec_digest", spec_digest},
            {"parameters", parameters}};
}

void write_prefix(std::ostream& out, const mor::SequencePrefix& s) {
    std::string letters;
    for (const auto& a : s.alphabet) {
        if (a.size() != 1)
            throw Error(ErrorKind::Validation,
                        "prefix files need one-character letters, got '" + a + "'");
        letters += a;
    }
    out << "#seqlab v1 alphabet=" << letters << '\n';
    for (auto sym : s.symbols) out << s.alphabet[sym];
    out << '\n';
}

mor::SequencePrefix read_prefix(std::istream& in, const std::string& origin) {
    std::string header;
    if (!std::getline(in, header) || header.rfind("#seqlab v1 alphabet=", 0) != 0)
        throw Error(ErrorKind::Validation, origin + ": missing '#seqlab v1' header");
    std::string letters = header.substr(std::string("#seqlab v1 alphabet=").size());
    if (letters.empty()) throw Error(ErrorKind::Validation, origin + ": empty alphabet");
    mor::SequencePrefix s;
    for (char c : letters) s.alphabet.push_back(std::string(1, c));
    s.provenance = origin;
    std::string body;
    std::getline(in, body);
    s.symbols.reserve(body.size());
    for (char c : body) {
        auto pos = letters.find(c);
        if (pos == std::string::npos)
            throw Error(ErrorKind::Validation,
                        origin + ": symbol '" + std::string(1, c) + "' not in alphabet");
        s.symbols.push_back(static_cast<std::uint8_t>(pos));
    }
    return s;
}

}  // namespace seqlab::report
