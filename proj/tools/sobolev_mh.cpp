#include "smh/cli/config.hpp"
#include "smh/cli/jobs.hpp"
#include "smh/zeros.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>

using namespace smh::cli;

int main(int argc, char** argv)
{
    CLI::App app{"Varying discrete Jacobi-Sobolev polynomials: zeros, Mehler-Heine limits, and table reproduction"};
    std::string job_name;
    std::string preset_name;
    std::string config_path;
    std::string out_dir = ".";
    std::string only;
    bool full_precision = false;
    bool fast = false;
    bool list = false;
    int threads = 1;

    app.add_option("job", job_name, "tables | zeros | mh-curve | limits | verify");
    auto* preset_opt = app.add_option("--preset", preset_name, "named parameter set (see --list-presets)");
    app.add_option("--config", config_path, "configuration file")->excludes(preset_opt);
    app.add_option("--out", out_dir, "output directory (SOBOLEV_MH_OUT overrides)");
    app.add_option("--only", only, "verify: restrict to one table id, or 'properties'");
    app.add_flag("--full-precision", full_precision, "add full-precision columns");
    app.add_flag("--fast", fast, "verify: skip degrees above 250");
    app.add_option("--threads", threads, "worker threads")->check(CLI::Range(1, 256));
    app.add_flag("--list-presets", list, "print preset names and exit");
    CLI11_PARSE(app, argc, argv);

    if (list) {
        for (const auto& name : preset_names())
            std::cout << name << '\n';
        return kExitOk;
    }
    if (const char* env = std::getenv("SOBOLEV_MH_OUT"); env && *env)
        out_dir = env;

    RunOptions opts;
    opts.out_dir = out_dir;
    opts.full_precision = full_precision;
    opts.threads = threads;

    try {
        if (job_name.empty())
            throw ConfigError(0, "job", "a job is required");
        const Job job = parse_job(job_name);
        JobResult result;
        if (job == Job::Verify) {
            VerifyOptions v;
            v.fast = fast;
            v.only = only;
            v.threads = threads;
            result = run_verify(v, opts);
        } else {
            if (preset_name.empty() == config_path.empty())
                throw ConfigError(0, "preset", "give exactly one of --preset or --config");
            ExperimentConfig cfg = config_path.empty() ? preset(preset_name) : load_config(config_path);
            cfg.job = job;
            result = run_job(cfg, opts);
        }
        std::cout << result.summary;
        if (!result.summary.empty() && result.summary.back() != '\n')
            std::cout << '\n';
        for (const auto& p : result.written)
            std::cerr << "wrote " << p.string() << '\n';
        return result.exit_code;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitConfigError;
    } catch (const smh::ZeroSearchError& e) {
        std::cerr << "numeric failure: " << e.what() << '\n';
        return kExitNumericFailure;
    } catch (const std::exception& e) {
        std::cerr << "numeric failure: " << e.what() << '\n';
        return kExitNumericFailure;
    }
}
