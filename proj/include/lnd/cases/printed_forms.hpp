#pragma once

#include <filesystem>
#include <vector>

#include "lnd/cases/paper_instance.hpp"
#include "lnd/cases/report.hpp"
#include "lnd/parser/source_form.hpp"

namespace lnd {

/// Diffs printed formulas against the instance's own expansions.
///
/// Expanded sources (no s) are compared term by term with the computed
/// polynomial. Closed forms in s are first expanded with the computed slice;
/// if that disagrees, the difference is reported per power of s against the
/// Dixmier series with s kept formal. Unparseable sources produce a single
/// entry. Output is sorted by location, then by monomial in print order.
std::vector<ErrataEntry> compare_printed_forms(const PaperInstance& inst,
                                               const std::vector<SourceForm>& sources);

/// Every `*.txt` below `dir`, loaded in lexicographic path order.
std::vector<SourceForm> load_source_dir(const std::filesystem::path& dir);

}  // namespace lnd
