#pragma once

#include "smh/cli/config.hpp"
#include "smh/cli/properties.hpp"
#include "smh/zeros.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace smh::cli {

enum ExitCode : int
{
    kExitOk = 0,
    kExitVerificationFailed = 1,
    kExitConfigError = 2,
    kExitNumericFailure = 3,
};

struct RunOptions
{
    std::filesystem::path out_dir = ".";
    bool full_precision = false;
    int threads = 1;
};

struct JobResult
{
    int exit_code = kExitOk;
    std::vector<std::filesystem::path> written;
    std::string summary;
};

/// Six significant digits, the precision of the published tables.
std::string format_6g(double v);
std::string format_full(double v);

/// Writes through a temporary file in the same directory, then renames.
void write_atomically(const std::filesystem::path& path, const std::string& content);

/// experiment_id,n,index,raw_zero,scaled_zero,limit,abs_error (plus *_full
/// columns when full_precision is set), one row per (n, index) and a final
/// "limit" block.
std::string tables_csv(const ExperimentConfig& cfg, const ConvergenceTable& table, bool full_precision);

struct CurveData
{
    std::vector<double> x;
    std::vector<double> limit;
    std::vector<int> degrees;
    std::vector<std::vector<double>> scaled; ///< per degree: n^{-alpha} Q_n(1 - x^2/(2n^2))
};

CurveData mh_curve(const ExperimentConfig& cfg);
std::string curve_csv(const CurveData& data, bool full_precision);
/// 600x240 viewBox with one polyline per curve and a legend.
std::string curve_svg(const CurveData& data, const std::string& title);

JobResult run_tables(const ExperimentConfig& cfg, const RunOptions& opts);
JobResult run_zeros(const ExperimentConfig& cfg, const RunOptions& opts);
JobResult run_limits(const ExperimentConfig& cfg, const RunOptions& opts);
JobResult run_mh_curve(const ExperimentConfig& cfg, const RunOptions& opts);

struct VerifyOptions
{
    bool fast = false;         ///< skip rows with n > 250 and the n = 500 zero checks
    std::string only;          ///< restrict to one table id ("table5"); "properties" runs only the property suite
    double raw_tolerance = 1e-6;
    double scaled_tolerance = 5e-4;
    bool properties = true;
    int threads = 1;
};

struct CellCheck
{
    std::string table;
    std::string row; ///< degree or "limit"
    int index = 0;
    double expected = 0.0;
    double actual = 0.0;
    double abs_error = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

struct VerifyReport
{
    std::vector<CellCheck> cells;
    std::vector<PropertyResult> properties;

    bool passed() const;
    std::vector<CellCheck> failures() const;
    std::string text() const;
    std::string csv() const;
};

VerifyReport verify(const VerifyOptions& opts);
JobResult run_verify(const VerifyOptions& vopts, const RunOptions& opts);

/// Dispatches on cfg.job. Verification uses default VerifyOptions.
JobResult run_job(const ExperimentConfig& cfg, const RunOptions& opts);

} // namespace smh::cli
