#pragma once

#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "seqlab/measures.hpp"
#include "seqlab/morphic.hpp"
#include "seqlab/witness.hpp"

namespace seqlab::report {

inline constexpr const char* kToolVersion = "seqlab 1.0.0";
inline constexpr int kSchemaVersion = 1;

/// One measure-table row; ratio is value/N.
struct MeasureRow {
    long long n = 0;
    int order = 0;
    long long value = 0;
    long long m_star = 0;
    std::vector<long long> d_star;
    bool exact = true;

    double ratio() const { return n > 0 ? double(value) / double(n) : 0.0; }
};

MeasureRow from_correlation(const msr::CorrelationReport& r);

/// Columns: N, order, value, ratio_value_over_N, M_star,
/// D_star (semicolon-joined), mode. Byte-deterministic.
std::string measure_csv(const std::vector<MeasureRow>& rows);

nlohmann::json measure_json(const std::vector<MeasureRow>& rows);
nlohmann::json certificate_json(const wit::CorrelationCertificate& cert);

/// Report envelope: tool version, schema version, spec digest, echoed
/// parameters, then payload fields supplied by the caller. Timing (if
/// any) is added separately by the CLI so bodies stay deterministic.
nlohmann::json run_report(const std::string& spec_digest, const nlohmann::json& parameters);

/// Prefix file: header line `#seqlab v1 alphabet=<letters>`, then the
/// symbols on one line with no separators. Requires one-character letters.
void write_prefix(std::ostream& out, const mor::SequencePrefix& s);
mor::SequencePrefix read_prefix(std::istream& in, const std::string& origin = "<prefix>");

}  // namespace seqlab::report
