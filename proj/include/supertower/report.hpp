#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

#include "supertower/curvefile.hpp"

namespace supertower {

inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr const char* kSchemaVersion = "1";

/// Process exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;
inline constexpr int kExitParse = 2;
inline constexpr int kExitValidation = 3;

enum class Verdict { Certified, NotCertified, Reducible };

std::string to_string(Verdict v);
int exit_code(Verdict v);

struct AnalysisOptions {
  /// Added to (never overrides) the curve file's own assertion.
  bool assert_splits = false;
  int cyclotomic_bound = 8;
};

struct Analysis {
  nlohmann::json report;
  Verdict verdict = Verdict::NotCertified;
};

/// Full pipeline: normalize, stratify, tower table, W_s presentations,
/// block shapes, exceptional cases, certification. All numbers in the
/// report are strings. Throws ValidationError for an invalid model.
Analysis analyze(const CurveFile& file, const AnalysisOptions& options = {});

/// Input echo plus the normalization section only.
nlohmann::json normalize_report(const CurveFile& file);

/// Canonical text form: sorted keys, two-space indent, trailing LF.
std::string dump(const nlohmann::json& doc);

/// Reads and parses one curve file. ParseError if unreadable or malformed.
CurveFile load_curve_file(const std::filesystem::path& path);

struct BatchOptions {
  int jobs = 1;
  AnalysisOptions analysis;
  /// When set, each report is also written to <out_dir>/<stem>.report.json.
  std::optional<std::filesystem::path> out_dir;
};

struct BatchResult {
  nlohmann::json summary;
  int exit_code = kExitOk;
};

/// Analyzes every *.curve file in `dir` (non-recursive), in parallel with
/// `jobs` workers. Entries are ordered by filename whatever the job count.
/// Per-file failures are recorded, not thrown; exit code 1 if any occurred.
/// Throws ArgumentError if `dir` is not a directory.
BatchResult run_batch(const std::filesystem::path& dir, const BatchOptions& options);

}  // namespace supertower
