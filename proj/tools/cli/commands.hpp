#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "harmonic/classify.hpp"

namespace harmonic::cli {

enum ExitCode : int { kOk = 0, kInvalidInput = 2, kInternalFailure = 3 };

struct CommandResult {
  int exit_code = kOk;
  std::string out;
  std::string err;
};

struct AnalyzeArgs {
  std::int64_t a = 0, b = 0, c = 0;
  bool json = false;
  std::string svg_path;       ///< empty: no xy drawing
  std::string billiard_path;  ///< empty: no billiard drawing
  bool annotate = false;
};

struct TableArgs {
  std::int64_t max_ab = 30;
  bool json = false;
  unsigned jobs = 0;  ///< 0: one per hardware thread
};

struct CfArgs {
  std::int64_t alpha = 0;
  std::int64_t beta = 0;
};

CommandResult cmd_analyze(const AnalyzeArgs& args);
CommandResult cmd_table(const TableArgs& args);
CommandResult cmd_cf(const CfArgs& args);

/// Full command line, argv[0] included.
CommandResult run(const std::vector<std::string>& argv);

/// The report in the stable JSON layout, plus a few extra fields.
nlohmann::json to_json(const AnalysisReport& report);

}  // namespace harmonic::cli
