#pragma once

/**
 * Machine-readable output: CSV grids (RFC-4180-style quoting) and JSON
 * records. Absent cells render as empty CSV fields / JSON null, never 0.
 * Output is deterministic: fixed key order, no timestamps.
 */

#include <string>

#include "runpaths/polyseq.hpp"
#include "runpaths/report.hpp"
#include "runpaths/series.hpp"
#include "runpaths/tables.hpp"

namespace runpaths::render {

// Grid with an index header row (column coordinates) and index column (row
// coordinates), rows printed top-down from the highest row coordinate the way
// the tables are usually displayed.
std::string table_to_csv(const tables::CountTable& table);

// {"kind": ..., "r": ..., "alpha": ..., "n_min": ..., "m_min": ...,
//  "rows": [[...], ...]} with rows ascending in m and values as decimal
// strings (arbitrary precision does not fit JSON numbers).
std::string table_to_json(const tables::CountTable& table);

std::string series_to_json(const series::TruncatedSeries& s);
std::string series_to_csv(const series::TruncatedSeries& s);

// {"degree": d, "coefficients": ["c0", "c1", ...]} with exact "p/q" strings
std::string poly_to_json(const polyseq::Polynomial& p);

std::string report_to_json(const CheckReport& report);
std::string report_to_text(const CheckReport& report);

std::string csv_quote(const std::string& field);

}  // namespace runpaths::render
