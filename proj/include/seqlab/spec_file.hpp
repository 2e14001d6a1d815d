#pragma once

#include <optional>
#include <string>

#include "seqlab/morphic.hpp"
#include "seqlab/presets.hpp"

namespace seqlab::specfile {

/// A parsed sequence/system spec file. A file may define just a
/// numeration system (for `numsys`) or a full sequence generator.
struct ParsedSpec {
    std::string digest;  // stable hash of the canonical text
    std::optional<presets::SystemPreset> system;
    std::optional<mor::MorphicSpec> morphic;
    std::optional<presets::SequenceHandle> sequence;
};

/// Structured text format with named sections and `key = value` lines:
///
///   [system]
///   preset = fibonacci
///   # or a quasi-greedy expansion of 1:
///   preperiod = 2
///   period = 1
///   # or a bare recurrence (no automaton available):
///   coefficients = 2 -1
///   initial = 1 2
///
///   [automaton]            # output automaton over the system's digits
///   states = a b
///   initial = a
///   transition = a 0 a     # repeated: state digit state
///   transition = a 1 b
///   output = a 0           # repeated: state output-letter
///   output = b 1
///
///   [morphism]
///   map = a -> a b         # repeated; empty right side = erasing
///   map = b -> b a
///   seed = a
///   coding = a -> 0        # repeated
///   coding = b -> 1
///
///   [sequence]
///   kind = preset | dfao | morphic | periodic | champernowne | constant
///   name = thue_morse      # kind = preset
///   pattern = 01           # kind = periodic
///
/// Validation errors carry `origin:line:` locations.
ParsedSpec parse_spec_text(const std::string& text, const std::string& origin = "<spec>");
ParsedSpec parse_spec_file(const std::string& path);

/// FNV-1a 64-bit hex digest, used for report provenance.
std::string fnv1a_hex(const std::string& text);

}  // namespace seqlab::specfile
