#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "lnd/parser/normalize.hpp"
#include "lnd/parser/parser.hpp"

namespace lnd {

/// Variables of printed formulas: the ring's t, u, x, y, z plus the
/// slice written as the formal symbol s.
VarSet printed_varset();

/// A printed formula as it enters the diff engine.
struct SourceForm {
  std::string raw;
  std::string normalized;
  std::string provenance;  // e.g. "expansion of phi(z)"
  std::string target;      // phi_t .. phi_z, or s
  std::vector<NormalizationWarning> warnings;
  std::optional<Polynomial> poly;  // over printed_varset()
  std::optional<ParseError> error;
};

/// Normalizes and parses `raw`; parse failures are stored, not thrown.
SourceForm make_source_form(std::string raw, std::string provenance, std::string target);

/// Reads a data file: UTF-8 text, one polynomial, `#` lines are comments.
/// Recognized comment headers: `# provenance:`, `# target:`, `# raw:` and
/// `# normalization-warning:`. Without a target header the target is taken
/// from the file name (`phi_x.txt` -> phi_x, `s_*.txt` -> s). Throws
/// std::runtime_error when the file cannot be read.
SourceForm load_source_file(const std::filesystem::path& path);

/// Body of a data file (comment lines dropped, lines joined by spaces).
std::string read_polynomial_file(const std::filesystem::path& path);

}  // namespace lnd
