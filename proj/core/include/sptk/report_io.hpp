#pragma once

#include <string>

#include "sptk/identities.hpp"

namespace sptk {

/* Rendering of verification runs. Output is deterministic for a given
 * RunConfig: fixed catalog order, fixed field order, LF line endings.
 * Bijection cells are aggregated into one row per rule (BIJ-THM1A,
 * BIJ-L1, ...) so that every row fits the common report schema
 *   {id, params, cells_checked, max_abs_deviation, status, elapsed_ms}
 * where a bijection cell's deviation is |domain - codomain| plus the
 * number of round-trip and class failures. */
std::string render_report(const VerifyRunResult& result, const RunConfig& cfg);

// One row per cell, for `verify bijection` output.
std::string render_bijection_cells(const std::vector<BijectionReport>& reports,
                                   const RunConfig& cfg);

enum class TableKind { SPTKD, SPTKDO, B0B1, BASE };

/* Counter tables. Text aligns columns; csv uses headers "k,n,value"
 * (B0B1: "k,n,b0,b1"; BASE: "kind,n,value"); json is an array of
 * {counter, params, value} objects. */
std::string render_table(TableKind kind, const RunConfig& cfg);

// Coefficients c_0..c_N as a two-column table in the configured format.
std::string render_series(const TruncatedSeries& series, const std::string& label,
                          const RunConfig& cfg);

// 0 when everything passed, 1 otherwise (the CLI maps config errors to 2).
int exit_code(const VerifyRunResult& result);

const char* to_string(OutputFormat format);
const char* to_string(TableKind kind);

}  // namespace sptk
