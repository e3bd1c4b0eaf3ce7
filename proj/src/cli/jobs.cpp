#include "smh/cli/jobs.hpp"

#include "smh/cli/golden.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <future>
#include <map>
#include <sstream>

namespace smh::cli {

namespace fs = std::filesystem;

namespace {

fs::path resolve_output(const std::string& configured, const fs::path& out_dir, const std::string& fallback)
{
    if (configured == "none")
        return {};
    if (configured.empty())
        return out_dir / fallback;
    const fs::path p(configured);
    return p.is_absolute() ? p : out_dir / p;
}

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + "\"";
}

std::string xml_escape(const std::string& s)
{
    std::string out;
    for (char c : s) {
        switch (c) {
        case '&':
            out += "&amp;";
            break;
        case '<':
            out += "&lt;";
            break;
        case '>':
            out += "&gt;";
            break;
        case '"':
            out += "&quot;";
            break;
        default:
            out += c;
        }
    }
    return out;
}

struct TableCells
{
    std::optional<double> raw, scaled, limit;
};

// Zero index i (1-based) -> the quantities reported in its CSV row.
TableCells cells_for(const ConvergenceRow& row, const ConvergenceTable& table, int i)
{
    TableCells c;
    c.raw = row.raw[static_cast<std::size_t>(i - 1)];
    const int skip = row.scaled.outside_zero ? 1 : 0;
    const int k = i - 1 - skip;
    if (k >= 0 && k < static_cast<int>(row.scaled.values.size()))
        c.scaled = row.scaled.values[static_cast<std::size_t>(k)];
    if (k >= 0 && k < static_cast<int>(table.limit.size()))
        c.limit = table.limit[static_cast<std::size_t>(k)];
    return c;
}

fs::path emit(const fs::path& path, const std::string& content, JobResult& result)
{
    if (path.empty())
        return path;
    write_atomically(path, content);
    result.written.push_back(path);
    return path;
}

} // namespace

std::string format_6g(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

std::string format_full(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_atomically(const fs::path& path, const std::string& content)
{
    if (path.has_parent_path())
        fs::create_directories(path.parent_path());
    fs::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out)
            throw std::runtime_error("cannot write " + tmp.string());
        out << content;
        out.flush();
        if (!out)
            throw std::runtime_error("write failed for " + tmp.string());
    }
    fs::rename(tmp, path);
}

std::string tables_csv(const ExperimentConfig& cfg, const ConvergenceTable& table, bool full_precision)
{
    std::ostringstream os;
    os << "experiment_id,n,index,raw_zero,scaled_zero,limit,abs_error";
    if (full_precision)
        os << ",raw_zero_full,scaled_zero_full,limit_full";
    os << '\n';
    const auto put = [&](const std::optional<double>& v, auto formatter) {
        os << ',';
        if (v)
            os << formatter(*v);
    };
    const std::string id = csv_field(cfg.id);
    int skip = 0;
    for (const auto& row : table.rows) {
        skip = row.scaled.outside_zero ? 1 : 0;
        for (int i = 1; i <= static_cast<int>(row.raw.size()); ++i) {
            const TableCells c = cells_for(row, table, i);
            std::optional<double> err;
            if (c.scaled && c.limit)
                err = std::abs(*c.scaled - *c.limit);
            os << id << ',' << row.n << ',' << i;
            put(c.raw, format_6g);
            put(c.scaled, format_6g);
            put(c.limit, format_6g);
            put(err, format_6g);
            if (full_precision) {
                put(c.raw, format_full);
                put(c.scaled, format_full);
                put(c.limit, format_full);
            }
            os << '\n';
        }
    }
    for (std::size_t k = 0; k < table.limit.size(); ++k) {
        os << id << ",limit," << (static_cast<int>(k) + 1 + skip) << ",,," << format_6g(table.limit[k]) << ',';
        if (full_precision)
            os << ",,," << format_full(table.limit[k]);
        os << '\n';
    }
    return os.str();
}

CurveData mh_curve(const ExperimentConfig& cfg)
{
    const SobolevSetup setup = cfg.setup();
    const LimitFunction lf = limit_coeffs(setup);
    CurveData data;
    data.degrees = cfg.degrees;
    for (int i = 0; i < cfg.points; ++i) {
        const double x = cfg.x_max * i / (cfg.points - 1);
        data.x.push_back(x);
        data.limit.push_back(limit_eval(lf, x));
    }
    for (int n : cfg.degrees) {
        const JacobiSeries q = sobolev_polynomial(setup, n);
        const double scale = std::pow(static_cast<double>(n), -setup.params.alpha);
        const double inv = 1.0 / (2.0 * static_cast<double>(n) * n);
        std::vector<double> ys;
        for (double x : data.x)
            ys.push_back(scale * clenshaw_eval(q, 1.0 - x * x * inv));
        data.scaled.push_back(std::move(ys));
    }
    return data;
}

std::string curve_csv(const CurveData& data, bool full_precision)
{
    const auto f = full_precision ? format_full : format_6g;
    std::ostringstream os;
    os << "x,limit";
    for (int n : data.degrees)
        os << ",q_" << n;
    os << '\n';
    for (std::size_t i = 0; i < data.x.size(); ++i) {
        os << f(data.x[i]) << ',' << f(data.limit[i]);
        for (const auto& ys : data.scaled)
            os << ',' << f(ys[i]);
        os << '\n';
    }
    return os.str();
}

std::string curve_svg(const CurveData& data, const std::string& title)
{
    constexpr double width = 600, height = 240;
    constexpr double left = 48, right = 12, top = 24, bottom = 28;
    double lo = 0.0, hi = 0.0;
    const auto widen = [&](const std::vector<double>& ys) {
        for (double y : ys)
            if (std::isfinite(y)) {
                lo = std::min(lo, y);
                hi = std::max(hi, y);
            }
    };
    widen(data.limit);
    for (const auto& ys : data.scaled)
        widen(ys);
    if (hi - lo < 1e-12)
        hi = lo + 1.0;
    const double pad = 0.05 * (hi - lo);
    lo -= pad;
    hi += pad;
    const double x0 = data.x.front(), x1 = data.x.back();
    const auto px = [&](double x) { return left + (x - x0) / (x1 - x0) * (width - left - right); };
    const auto py = [&](double y) { return top + (hi - y) / (hi - lo) * (height - top - bottom); };

    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(2);
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 600 240\" width=\"600\" height=\"240\" "
          "font-family=\"sans-serif\" font-size=\"10\">\n";
    os << "<rect width=\"600\" height=\"240\" fill=\"white\"/>\n";
    os << "<text x=\"" << width / 2 << "\" y=\"14\" text-anchor=\"middle\">" << xml_escape(title) << "</text>\n";
    os << "<rect x=\"" << left << "\" y=\"" << top << "\" width=\"" << width - left - right << "\" height=\""
       << height - top - bottom << "\" fill=\"none\" stroke=\"black\" stroke-width=\"0.8\"/>\n";
    if (lo < 0.0 && hi > 0.0)
        os << "<line x1=\"" << left << "\" y1=\"" << py(0.0) << "\" x2=\"" << width - right << "\" y2=\"" << py(0.0)
           << "\" stroke=\"#999\" stroke-width=\"0.6\" stroke-dasharray=\"3,3\"/>\n";
    for (int k = 0; k <= 6; ++k) {
        const double x = x0 + (x1 - x0) * k / 6.0;
        os << "<text x=\"" << px(x) << "\" y=\"" << height - bottom + 12 << "\" text-anchor=\"middle\">"
           << format_6g(x) << "</text>\n";
    }
    for (double y : {lo + pad, hi - pad})
        os << "<text x=\"" << left - 4 << "\" y=\"" << py(y) + 3 << "\" text-anchor=\"end\">" << format_6g(y)
           << "</text>\n";

    static const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};
    std::vector<std::pair<std::string, const std::vector<double>*>> curves;
    curves.emplace_back("limit", &data.limit);
    for (std::size_t k = 0; k < data.scaled.size(); ++k)
        curves.emplace_back("n=" + std::to_string(data.degrees[k]), &data.scaled[k]);
    for (std::size_t c = 0; c < curves.size(); ++c) {
        os << "<polyline fill=\"none\" stroke=\"" << colors[c % 6] << "\" stroke-width=\"" << (c == 0 ? 1.6 : 1.0)
           << "\"" << (c == 0 ? "" : " stroke-dasharray=\"5,2\"") << " points=\"";
        const auto& ys = *curves[c].second;
        for (std::size_t i = 0; i < ys.size(); ++i)
            if (std::isfinite(ys[i]))
                os << px(data.x[i]) << ',' << py(ys[i]) << ' ';
        os << "\"/>\n";
    }
    const double lx = width - right - 90;
    os << "<g class=\"legend\">\n";
    for (std::size_t c = 0; c < curves.size(); ++c) {
        const double ly = top + 12 + 13.0 * c;
        os << "<line x1=\"" << lx << "\" y1=\"" << ly - 3 << "\" x2=\"" << lx + 20 << "\" y2=\"" << ly - 3
           << "\" stroke=\"" << colors[c % 6] << "\" stroke-width=\"1.4\"/>";
        os << "<text x=\"" << lx + 25 << "\" y=\"" << ly << "\">" << xml_escape(curves[c].first) << "</text>\n";
    }
    os << "</g>\n</svg>\n";
    return os.str();
}

JobResult run_tables(const ExperimentConfig& cfg, const RunOptions& opts)
{
    const ConvergenceTable table = convergence_table(cfg.setup(), cfg.degrees, cfg.zero_count, opts.threads);
    JobResult result;
    const std::string csv = tables_csv(cfg, table, opts.full_precision);
    emit(resolve_output(cfg.csv_path, opts.out_dir, cfg.id + ".csv"), csv, result);
    result.summary = csv;
    return result;
}

JobResult run_zeros(const ExperimentConfig& cfg, const RunOptions& opts)
{
    const SobolevSetup setup = cfg.setup();
    std::vector<std::future<ZeroSet>> pending;
    const auto policy = opts.threads > 1 ? std::launch::async : std::launch::deferred;
    for (int n : cfg.degrees)
        pending.push_back(std::async(policy, [&setup, n] { return sobolev_zeros(setup, n); }));
    const auto f = opts.full_precision ? format_full : format_6g;
    std::ostringstream os;
    os << "experiment_id,n,index,zero,outside\n";
    for (auto& p : pending) {
        const ZeroSet zs = p.get();
        for (std::size_t i = 0; i < zs.zeros.size(); ++i)
            os << csv_field(cfg.id) << ',' << zs.n << ',' << i + 1 << ',' << f(zs.zeros[i]) << ','
               << (zs.zeros[i] > 1.0 ? 1 : 0) << '\n';
    }
    JobResult result;
    emit(resolve_output(cfg.csv_path, opts.out_dir, cfg.id + "_zeros.csv"), os.str(), result);
    result.summary = os.str();
    return result;
}

JobResult run_limits(const ExperimentConfig& cfg, const RunOptions& opts)
{
    const SobolevSetup setup = cfg.setup();
    const LimitFunction lf = limit_coeffs(setup);
    const int count = cfg.zero_count - (predicts_outside_zero(setup) ? 1 : 0);
    const auto f = opts.full_precision ? format_full : format_6g;
    std::ostringstream os;
    const std::string prefix = csv_field(cfg.id) + ',' + to_string(lf.regime.tag) + ',' + f(lf.regime.threshold) + ',';
    os << "experiment_id,regime,threshold,quantity,index,value\n";
    for (std::size_t i = 0; i < lf.b.size(); ++i)
        os << prefix << "b," << i << ',' << f(lf.b[i]) << '\n';
    if (count > 0) {
        const auto zeros = limit_zeros(lf, count);
        for (std::size_t i = 0; i < zeros.size(); ++i)
            os << prefix << "zero," << i + 1 << ',' << f(zeros[i]) << '\n';
    }
    if (setup.j > 0)
        os << prefix << "V,0," << f(critical_threshold_V(setup.params.alpha, setup.params.beta, setup.j)) << '\n';
    JobResult result;
    emit(resolve_output(cfg.csv_path, opts.out_dir, cfg.id + "_limits.csv"), os.str(), result);
    result.summary = os.str();
    return result;
}

JobResult run_mh_curve(const ExperimentConfig& cfg, const RunOptions& opts)
{
    const CurveData data = mh_curve(cfg);
    JobResult result;
    emit(resolve_output(cfg.csv_path, opts.out_dir, cfg.id + ".csv"), curve_csv(data, opts.full_precision), result);
    const SobolevSetup setup = cfg.setup();
    const std::string title = to_string(classify(setup).tag) + ": alpha=" + cfg.alpha.to_string()
                              + ", beta=" + cfg.beta.to_string() + ", j=" + std::to_string(cfg.j)
                              + ", gamma=" + cfg.gamma.to_string();
    emit(resolve_output(cfg.svg_path, opts.out_dir, cfg.id + ".svg"), curve_svg(data, title), result);
    result.summary = "wrote " + std::to_string(result.written.size()) + " file(s)";
    return result;
}

bool VerifyReport::passed() const
{
    return std::all_of(cells.begin(), cells.end(), [](const CellCheck& c) { return c.pass; })
           && std::all_of(properties.begin(), properties.end(), [](const PropertyResult& p) { return p.pass; });
}

std::vector<CellCheck> VerifyReport::failures() const
{
    std::vector<CellCheck> out;
    std::copy_if(cells.begin(), cells.end(), std::back_inserter(out), [](const CellCheck& c) { return !c.pass; });
    return out;
}

std::string VerifyReport::text() const
{
    std::ostringstream os;
    std::map<std::string, std::pair<int, int>> per_table; // passed, total
    std::vector<std::string> order;
    for (const auto& c : cells) {
        if (!per_table.contains(c.table))
            order.push_back(c.table);
        auto& [ok, total] = per_table[c.table];
        ok += c.pass ? 1 : 0;
        ++total;
    }
    for (const auto& id : order) {
        const auto [ok, total] = per_table[id];
        os << (ok == total ? "PASS " : "FAIL ") << id << ": " << ok << "/" << total << " cells within tolerance\n";
    }
    for (const auto& c : cells)
        if (!c.pass)
            os << "  " << c.table << " row " << c.row << " index " << c.index << ": expected "
               << format_6g(c.expected) << ", got " << format_full(c.actual) << " (|err| " << format_6g(c.abs_error)
               << " > " << format_6g(c.tolerance) << ")\n";
    for (const auto& p : properties)
        os << (p.pass ? "PASS " : "FAIL ") << p.name << ": " << format_6g(p.worst) << " (bound "
           << format_6g(p.bound) << ") " << p.detail << "\n";
    os << (passed() ? "verification passed\n" : "verification FAILED\n");
    return os.str();
}

std::string VerifyReport::csv() const
{
    std::ostringstream os;
    os << "check,row,index,expected,actual,abs_error,tolerance,pass\n";
    for (const auto& c : cells)
        os << c.table << ',' << c.row << ',' << c.index << ',' << format_full(c.expected) << ','
           << format_full(c.actual) << ',' << format_full(c.abs_error) << ',' << format_full(c.tolerance) << ','
           << (c.pass ? 1 : 0) << '\n';
    for (const auto& p : properties)
        os << csv_field(p.name) << ",,," << ",," << format_full(p.worst) << ',' << format_full(p.bound) << ','
           << (p.pass ? 1 : 0) << '\n';
    return os.str();
}

VerifyReport verify(const VerifyOptions& opts)
{
    VerifyReport report;
    const bool properties_only = opts.only == "properties";
    std::vector<const GoldenTable*> selected;
    for (const auto& g : golden_tables())
        if (!properties_only && (opts.only.empty() || opts.only == g.id))
            selected.push_back(&g);
    if (!opts.only.empty() && !properties_only && selected.empty())
        throw ConfigError(0, "only", "unknown table '" + opts.only + "'");

    // Tables 1/2, 3/4, ... share a parameter set; compute each set once.
    std::map<std::string, ConvergenceTable> computed;
    std::map<std::string, std::future<ConvergenceTable>> pending;
    const auto policy = opts.threads > 1 ? std::launch::async : std::launch::deferred;
    for (const GoldenTable* g : selected) {
        ExperimentConfig cfg = preset(g->preset);
        cfg.id.clear();
        const std::string key = serialize_config(cfg);
        if (pending.contains(key))
            continue;
        std::vector<int> degrees;
        for (int n : cfg.degrees)
            if (!opts.fast || n <= 250)
                degrees.push_back(n);
        pending.emplace(key, std::async(policy, [cfg, degrees] {
                            return convergence_table(cfg.setup(), degrees, cfg.zero_count);
                        }));
    }
    for (auto& [key, f] : pending)
        computed.emplace(key, f.get());

    for (const GoldenTable* g : selected) {
        ExperimentConfig cfg = preset(g->preset);
        cfg.id.clear();
        const ConvergenceTable& table = computed.at(serialize_config(cfg));
        const double tol = g->scaled ? opts.scaled_tolerance : opts.raw_tolerance;
        for (const auto& golden_row : g->rows) {
            const auto it = std::find_if(table.rows.begin(), table.rows.end(),
                                         [&](const ConvergenceRow& r) { return r.n == golden_row.n; });
            if (it == table.rows.end())
                continue;
            const auto& actual = g->scaled ? it->scaled.values : it->raw;
            for (std::size_t i = 0; i < golden_row.values.size(); ++i) {
                CellCheck c{g->id, std::to_string(golden_row.n), static_cast<int>(i) + 1, golden_row.values[i]};
                c.actual = i < actual.size() ? actual[i] : std::nan("");
                c.abs_error = std::abs(c.actual - c.expected);
                c.tolerance = tol;
                c.pass = c.abs_error <= tol;
                report.cells.push_back(c);
            }
        }
        for (std::size_t i = 0; i < g->limit.size(); ++i) {
            CellCheck c{g->id, "limit", static_cast<int>(i) + 1, g->limit[i]};
            c.actual = i < table.limit.size() ? table.limit[i] : std::nan("");
            c.abs_error = std::abs(c.actual - c.expected);
            c.tolerance = opts.scaled_tolerance;
            c.pass = c.abs_error <= c.tolerance;
            report.cells.push_back(c);
        }
    }
    if (opts.properties && (opts.only.empty() || properties_only))
        report.properties = property_suite(opts.fast);
    return report;
}

JobResult run_verify(const VerifyOptions& vopts, const RunOptions& opts)
{
    const VerifyReport report = verify(vopts);
    JobResult result;
    emit(opts.out_dir / "verify_report.txt", report.text(), result);
    emit(opts.out_dir / "verify_report.csv", report.csv(), result);
    result.summary = report.text();
    result.exit_code = report.passed() ? kExitOk : kExitVerificationFailed;
    return result;
}

JobResult run_job(const ExperimentConfig& cfg, const RunOptions& opts)
{
    switch (cfg.job) {
    case Job::Tables:
        return run_tables(cfg, opts);
    case Job::Zeros:
        return run_zeros(cfg, opts);
    case Job::Limits:
        return run_limits(cfg, opts);
    case Job::MhCurve:
        return run_mh_curve(cfg, opts);
    case Job::Verify: {
        VerifyOptions v;
        v.threads = opts.threads;
        return run_verify(v, opts);
    }
    }
    return {};
}

} // namespace smh::cli
