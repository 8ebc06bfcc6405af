#pragma once

// Run configurations for each batch subcommand and the report documents
// they produce. Reports depend only on the configuration, never on the
// thread count.

#include "cyclogcd/champion.hpp"
#include "cyclogcd/ff_construction.hpp"

#include <string>
#include <variant>

namespace cyclogcd {

enum class Format { Json, Csv };

struct RunOptions {
  Format format = Format::Json;
  unsigned threads = 1;
};

struct GcdSeqConfig {
  u64 a = 2, b = 3, M = 1, N = 1, n_max = 10;
};

struct ChampionConfig {
  ChampionParams params;
};

struct DensityConfig {
  u64 N = 2, d = 1, a = 2, b = 3, x = 1'000'000;
};

struct DeltaConfig {
  u64 limit = 100;
  bool squarefree = false;
};

struct LemmaConfig {
  u64 N = 2, a = 3, b = 5, p_max = 20000, m_max = 20;
};

struct FFConfig {
  ff::FFParams params;
  std::string a_poly = "0,1";
  std::string b_poly = "1,1";
  unsigned deg_min = 1;
  unsigned deg_max = 4;
  bool verify = false;
  u64 n_cap = ff::kDefaultNCap;
};

struct MonitorConfig {
  u64 a = 2, b = 3, n_min = 100, n_max = 2000;
};

using RunConfig =
    std::variant<GcdSeqConfig, ChampionConfig, DensityConfig, DeltaConfig, LemmaConfig, FFConfig, MonitorConfig>;

const char* subcommand_name(const RunConfig& config);

// Executes the configured run and renders its report. Validation errors
// propagate as InvalidArgument / HypothesisViolation, failed certificates as
// VerificationFailure.
std::string run_report(const RunConfig& config, const RunOptions& options);

const char* library_version();

}  // namespace cyclogcd
