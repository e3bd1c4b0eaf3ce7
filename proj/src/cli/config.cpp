#include "smh/cli/config.hpp"

#include <algorithm>
#include <charconv>
#include <cctype>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace smh::cli {

namespace {

std::string trim(std::string_view s)
{
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b])))
        ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1])))
        --e;
    return std::string(s.substr(b, e - b));
}

std::vector<std::string> split(std::string_view s, char sep)
{
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        out.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
        if (pos == std::string_view::npos)
            break;
        start = pos + 1;
    }
    return out;
}

int parse_int(const std::string& text, int line, const std::string& field)
{
    int value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size())
        throw ConfigError(line, field, "expected an integer, got '" + text + "'");
    return value;
}

double parse_real(const std::string& text, int line, const std::string& field)
{
    std::size_t used = 0;
    double value = 0.0;
    try {
        value = std::stod(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != text.size() || text.empty() || !std::isfinite(value))
        throw ConfigError(line, field, "expected a real number, got '" + text + "'");
    return value;
}

Rational parse_rational(const std::string& text, int line, const std::string& field)
{
    try {
        return Rational::parse(text);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(line, field, e.what());
    }
}

std::string real_text(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

const std::set<std::string> kKnownKeys = {
    "experiment.id", "experiment.job", "setup.alpha", "setup.beta",   "setup.j",    "mass.preset", "mass.M",
    "mass.gamma",    "mass.custom",    "run.degrees", "run.zero_count", "run.x_max", "run.points", "output.csv",
    "output.svg",
};

ExperimentConfig with_setup(std::string id, Job job, Rational alpha, Rational beta, int j, MassPreset preset,
                            Rational M, Rational gamma, std::vector<int> degrees)
{
    ExperimentConfig c;
    c.id = std::move(id);
    c.job = job;
    c.alpha = alpha;
    c.beta = beta;
    c.j = j;
    c.preset = preset;
    c.M = M;
    c.gamma = gamma;
    c.degrees = std::move(degrees);
    return c;
}

} // namespace

ConfigError::ConfigError(int line, std::string field, const std::string& message)
    : std::runtime_error(
          (line > 0 ? "line " + std::to_string(line) + ": " : std::string()) + field + ": " + message),
      line_(line), field_(std::move(field))
{
}

std::string to_string(Job job)
{
    switch (job) {
    case Job::Tables:
        return "tables";
    case Job::Zeros:
        return "zeros";
    case Job::MhCurve:
        return "mh-curve";
    case Job::Limits:
        return "limits";
    case Job::Verify:
        return "verify";
    }
    return "tables";
}

Job parse_job(std::string_view name)
{
    for (Job job : {Job::Tables, Job::Zeros, Job::MhCurve, Job::Limits, Job::Verify})
        if (to_string(job) == name)
            return job;
    throw ConfigError(0, "job", "unknown job '" + std::string(name) + "'");
}

SobolevSetup ExperimentConfig::setup() const
{
    SobolevSetup s;
    s.params = JacobiParams(alpha.to_double(), beta.to_double());
    s.j = j;
    s.mass.preset = preset;
    s.mass.M = M.to_double();
    s.mass.gamma = gamma.to_double();
    s.mass.custom_values = custom_values;
    s.exact_alpha = alpha;
    s.exact_gamma = gamma;
    return s;
}

ExperimentConfig parse_config(std::string_view text)
{
    ExperimentConfig cfg;
    std::string section;
    std::set<std::string> seen;
    int line_no = 0;
    std::istringstream in{std::string(text)};
    std::string raw;
    while (std::getline(in, raw)) {
        ++line_no;
        const auto hash = raw.find('#');
        const std::string line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
        if (line.empty())
            continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw ConfigError(line_no, line, "unterminated section header");
            section = trim(line.substr(1, line.size() - 2));
            if (section != "experiment" && section != "setup" && section != "mass" && section != "run" && section != "output")
                throw ConfigError(line_no, section, "unknown section");
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError(line_no, line, "expected 'key = value'");
        const std::string key = section + "." + trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (!kKnownKeys.contains(key))
            throw ConfigError(line_no, key, "unknown key");
        if (!seen.insert(key).second)
            throw ConfigError(line_no, key, "duplicate key");

        if (key == "experiment.id") {
            if (value.empty())
                throw ConfigError(line_no, key, "id must not be empty");
            cfg.id = value;
        } else if (key == "experiment.job") {
            try {
                cfg.job = parse_job(value);
            } catch (const ConfigError& e) {
                throw ConfigError(line_no, key, "unknown job '" + value + "'");
            }
        } else if (key == "setup.alpha") {
            cfg.alpha = parse_rational(value, line_no, key);
            if (!(cfg.alpha > Rational(-1)))
                throw ConfigError(line_no, key, "alpha must exceed -1");
        } else if (key == "setup.beta") {
            cfg.beta = parse_rational(value, line_no, key);
            if (!(cfg.beta > Rational(-1)))
                throw ConfigError(line_no, key, "beta must exceed -1");
        } else if (key == "setup.j") {
            cfg.j = parse_int(value, line_no, key);
            if (cfg.j < 0)
                throw ConfigError(line_no, key, "j must be nonnegative");
        } else if (key == "mass.preset") {
            try {
                cfg.preset = parse_mass_preset(value);
            } catch (const std::invalid_argument& e) {
                throw ConfigError(line_no, key, e.what());
            }
        } else if (key == "mass.M") {
            cfg.M = parse_rational(value, line_no, key);
            if (cfg.M < Rational(0))
                throw ConfigError(line_no, key, "M must be nonnegative");
        } else if (key == "mass.gamma") {
            cfg.gamma = parse_rational(value, line_no, key);
        } else if (key == "mass.custom") {
            cfg.custom_values.clear();
            if (!value.empty()) {
                for (const auto& item : split(value, ',')) {
                    const auto colon = item.find(':');
                    if (colon == std::string::npos)
                        throw ConfigError(line_no, key, "expected n:value, got '" + item + "'");
                    const int n = parse_int(trim(item.substr(0, colon)), line_no, key);
                    const double v = parse_real(trim(item.substr(colon + 1)), line_no, key);
                    if (n < 1 || v < 0.0)
                        throw ConfigError(line_no, key, "entries need n >= 1 and a nonnegative mass");
                    cfg.custom_values[n] = v;
                }
            }
        } else if (key == "run.degrees") {
            cfg.degrees.clear();
            for (const auto& item : split(value, ','))
                cfg.degrees.push_back(parse_int(item, line_no, key));
            if (cfg.degrees.empty() || !std::is_sorted(cfg.degrees.begin(), cfg.degrees.end())
                || cfg.degrees.front() < 1)
                throw ConfigError(line_no, key, "degrees must be a nonempty ascending list of positive integers");
        } else if (key == "run.zero_count") {
            cfg.zero_count = parse_int(value, line_no, key);
            if (cfg.zero_count < 1)
                throw ConfigError(line_no, key, "zero_count must be >= 1");
        } else if (key == "run.x_max") {
            cfg.x_max = parse_real(value, line_no, key);
            if (!(cfg.x_max > 0.0))
                throw ConfigError(line_no, key, "x_max must be positive");
        } else if (key == "run.points") {
            cfg.points = parse_int(value, line_no, key);
            if (cfg.points < 2)
                throw ConfigError(line_no, key, "points must be >= 2");
        } else if (key == "output.csv") {
            cfg.csv_path = value;
        } else if (key == "output.svg") {
            cfg.svg_path = value;
        }
    }
    if (cfg.zero_count > cfg.degrees.front())
        throw ConfigError(0, "run.zero_count", "zero_count exceeds the smallest degree");
    if (cfg.preset == MassPreset::Custom)
        for (int n : cfg.degrees)
            if (!cfg.custom_values.contains(n))
                throw ConfigError(0, "mass.custom", "no mass given for n = " + std::to_string(n));
    return cfg;
}

ExperimentConfig load_config(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError(0, path, "cannot open configuration file");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

std::string serialize_config(const ExperimentConfig& cfg)
{
    std::ostringstream os;
    os << "[experiment]\nid = " << cfg.id << "\njob = " << to_string(cfg.job) << "\n\n";
    os << "[setup]\nalpha = " << cfg.alpha.to_string() << "\nbeta = " << cfg.beta.to_string() << "\nj = " << cfg.j
       << "\n\n";
    os << "[mass]\npreset = " << to_string(cfg.preset) << "\nM = " << cfg.M.to_string()
       << "\ngamma = " << cfg.gamma.to_string() << "\n";
    if (!cfg.custom_values.empty()) {
        os << "custom = ";
        bool first = true;
        for (const auto& [n, v] : cfg.custom_values) {
            os << (first ? "" : ", ") << n << ':' << real_text(v);
            first = false;
        }
        os << "\n";
    }
    os << "\n[run]\ndegrees = ";
    for (std::size_t i = 0; i < cfg.degrees.size(); ++i)
        os << (i ? ", " : "") << cfg.degrees[i];
    os << "\nzero_count = " << cfg.zero_count << "\nx_max = " << real_text(cfg.x_max) << "\npoints = " << cfg.points
       << "\n";
    if (!cfg.csv_path.empty() || !cfg.svg_path.empty()) {
        os << "\n[output]\n";
        if (!cfg.csv_path.empty())
            os << "csv = " << cfg.csv_path << "\n";
        if (!cfg.svg_path.empty())
            os << "svg = " << cfg.svg_path << "\n";
    }
    return os.str();
}

std::vector<std::string> preset_names()
{
    return {"table1", "table2", "table3", "table4", "table5", "table6", "table7", "table8",
            "figure-supercritical", "figure-subcritical", "figure-critical-smallM", "figure-critical-bigM"};
}

ExperimentConfig preset(std::string_view name)
{
    const std::vector<int> table_degrees{150, 250, 500};
    const std::vector<int> figure_degrees{150, 500};
    const std::string id(name);
    // Four parameter sets: supercritical, subcritical, and critical with a
    // small and a large mass.
    const auto super = [&](Job job, std::vector<int> ns) {
        return with_setup(id, job, Rational(3), Rational(1), 3, MassPreset::ExpRational, Rational(1, 2), Rational(25),
                          std::move(ns));
    };
    const auto sub = [&](Job job, std::vector<int> ns) {
        return with_setup(id, job, Rational(3), Rational(-1, 2), 3, MassPreset::LogRatio, Rational(7, 2), Rational(4),
                          std::move(ns));
    };
    const auto critical = [&](Job job, std::vector<int> ns, Rational M) {
        return with_setup(id, job, Rational(-9, 10), Rational(-9, 10), 3, MassPreset::PolyRatio, M, Rational(61, 5),
                          std::move(ns));
    };
    if (name == "table1" || name == "table2")
        return super(Job::Tables, table_degrees);
    if (name == "table3" || name == "table4")
        return sub(Job::Tables, table_degrees);
    if (name == "table5" || name == "table6")
        return critical(Job::Tables, table_degrees, Rational(5));
    if (name == "table7" || name == "table8")
        return critical(Job::Tables, table_degrees, Rational(1000000));
    if (name == "figure-supercritical")
        return super(Job::MhCurve, figure_degrees);
    if (name == "figure-subcritical")
        return sub(Job::MhCurve, figure_degrees);
    if (name == "figure-critical-smallM")
        return critical(Job::MhCurve, figure_degrees, Rational(5));
    if (name == "figure-critical-bigM")
        return critical(Job::MhCurve, figure_degrees, Rational(1000000));
    throw ConfigError(0, "preset", "unknown preset '" + id + "'");
}

} // namespace smh::cli
