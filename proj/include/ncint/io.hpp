/** \file io.hpp
 *  \brief File formats: spectrum CSV, matrix and model JSON, and the CSV
 *         report writer.
 *
 *  All numeric output is decimal with 17 significant digits (%.17g), which
 *  round-trips IEEE doubles exactly and satisfies the 15-digit contract.
 *  Reports are UTF-8 with LF line endings; identical inputs produce
 *  byte-identical files.
 */

#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "ncint/core.hpp"
#include "ncint/models.hpp"
#include "ncint/spectra.hpp"

namespace ncint::io {

/// %.17g rendering of a double.
std::string format_double(double v);

/// CSV report: optional '#'-prefixed preamble lines (command, model id,
/// seed), one header line, then data rows.
struct Csv {
  std::vector<std::string> preamble;
  std::string header;
  std::vector<std::vector<std::string>> rows;
};

/// Write the report to path (UTF-8, LF endings).  Throws std::runtime_error
/// when the path cannot be written.
void emit_report(const std::string& path, const Csv& report);

/// Spectrum CSV with header index,re,im.
void write_spectrum_csv(const std::string& path, const spectra::SpectralSequence& seq);

/// Read a spectrum CSV; rows may be in any order (sort_sequence normalizes).
spectra::SpectralSequence read_spectrum_csv(const std::string& path);

/// Matrix JSON: {"dim": n, "entries": [[re, im], ...]} row-major.
void write_matrix_json(const std::string& path, const CMatrix& m);
CMatrix read_matrix_json(const std::string& path);

/// Torus model JSON:
/// {"n", "m", "cutoff", "symmetrized", "fhat": [{"k": [ints], "re", "im"}]}.
/// Unknown keys are rejected.
models::TorusSymbolModel model_from_json(const nlohmann::json& j);
nlohmann::json model_to_json(const models::TorusSymbolModel& m);
void write_model_json(const std::string& path, const models::TorusSymbolModel& m);
models::TorusSymbolModel read_model_json(const std::string& path);

}  // namespace ncint::io
