#pragma once

#include "smh/rational.hpp"
#include "smh/sobolev.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace smh::cli {

enum class Job
{
    Tables,
    Zeros,
    MhCurve,
    Limits,
    Verify,
};

std::string to_string(Job job);
Job parse_job(std::string_view name);

/// Configuration problem with its location. `line` is 0 when the problem is
/// not tied to a single line (e.g. a missing key).
class ConfigError : public std::runtime_error
{
public:
    ConfigError(int line, std::string field, const std::string& message);

    int line() const { return line_; }
    const std::string& field() const { return field_; }

private:
    int line_;
    std::string field_;
};

struct ExperimentConfig
{
    std::string id = "experiment";
    Job job = Job::Tables;

    Rational alpha;
    Rational beta;
    int j = 0;

    MassPreset preset = MassPreset::Plain;
    Rational M;
    Rational gamma;
    std::map<int, double> custom_values;

    std::vector<int> degrees{150};
    int zero_count = 4;
    double x_max = 18.0;
    int points = 361;

    /// Empty means "<id>.csv" / "<id>.svg" inside the output directory;
    /// "none" disables the file.
    std::string csv_path;
    std::string svg_path;

    SobolevSetup setup() const;

    friend bool operator==(const ExperimentConfig&, const ExperimentConfig&) = default;
};

/// Parses the sectioned key = value format:
///
///   [experiment]  id, job
///   [setup]       alpha, beta, j
///   [mass]        preset, M, gamma, custom (n:value pairs)
///   [run]         degrees, zero_count, x_max, points
///   [output]      csv, svg
///
/// '#' starts a comment. Rationals are written "p/q" or as decimals.
ExperimentConfig parse_config(std::string_view text);
ExperimentConfig load_config(const std::string& path);
std::string serialize_config(const ExperimentConfig& cfg);

std::vector<std::string> preset_names();
/// Throws ConfigError for unknown names.
ExperimentConfig preset(std::string_view name);

} // namespace smh::cli
