#pragma once

// The end-to-end verification run: tables, inequalities, cone, Hilbert basis,
// generator invariants and saturation sampling, each compared with the
// reference values.

#include "d4/golden.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace d4 {

struct StageResult {
  std::string name;
  bool pass = true;
  /// key -> JSON-encoded value, in insertion order.
  std::vector<std::pair<std::string, std::string>> facts;
  std::vector<std::string> failures;
  double seconds = 0;

  void fact(const std::string& key, const std::string& json_value) { facts.emplace_back(key, json_value); }
  void check(bool ok, const std::string& what);
};

struct PipelineOptions {
  std::uint64_t seed = 20240601;
  std::size_t samples = 500;
  int bound = 4;
  const golden::Fixtures* fixtures = nullptr;  ///< embedded when null
};

struct PipelineReport {
  std::uint64_t seed = 0;
  std::size_t samples = 0;
  int bound = 0;
  std::vector<StageResult> stages;

  bool pass() const;
  std::optional<std::string> first_failing_stage() const;
  /// Deterministic: contains no timings.
  std::string json() const;
  std::string markdown() const;
  std::string timings_json() const;
};

StageResult check_tables(const golden::Fixtures& fixtures);
StageResult check_inequalities(const golden::Fixtures& fixtures);
StageResult check_cone();
StageResult check_hilbert(const golden::Fixtures& fixtures);
StageResult check_generators(const golden::Fixtures& fixtures);
StageResult check_saturation(std::size_t samples, int bound, std::uint64_t seed);

/// One exported record per inequality of the full system.
struct InequalityRecord {
  std::vector<long> coefficients;
  int parabolic = 0;  ///< 0 for chamber inequalities
  std::vector<std::string> triple_words;
  std::vector<std::string> classes;
  std::string kind;      ///< "ETI", "WTI" or "CHAMBER"
  std::string orbit_id;  ///< e.g. "ETI(2)#3"; "chamber" for chamber inequalities
  std::size_t orbit_size = 0;
};

std::vector<InequalityRecord> inequality_records(const golden::Fixtures& fixtures = golden::Fixtures::embedded());
std::string inequalities_json(const golden::Fixtures& fixtures = golden::Fixtures::embedded());
/// Grouped ETI(k) / WTI(k) with one row per orbit.
std::string inequalities_markdown(const golden::Fixtures& fixtures = golden::Fixtures::embedded());
std::vector<InequalityRecord> read_inequalities_json(const std::string& text);

/// Runs every stage in order. Stages after a failure still run so the report
/// is complete.
PipelineReport run_pipeline(const PipelineOptions& options);

}  // namespace d4
