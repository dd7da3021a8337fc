#include "hardy/commands.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "hardy/bounds.hpp"
#include "hardy/example_weights.hpp"
#include "hardy/report.hpp"
#include "hardy/variational.hpp"
#include "hardy/weight_io.hpp"

namespace hardy {

int exit_code(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::InvalidArgument:
        case ErrorKind::Degenerate: return kExitInvalidArgs;
        case ErrorKind::BadInput: return kExitBadInput;
        case ErrorKind::NumericFailure: return kExitNumericFailure;
    }
    return kExitNumericFailure;
}

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

struct CommonOptions {
    std::string kase = "nd";
    double p = 2.0;
    double q = 2.0;
    std::string out_path;
    bool no_timings = false;
};

struct FileOptions {
    std::string weights;
};

struct EstimateOptions {
    int restarts = 4;
    std::uint64_t seed = 0;
    bool oracle = false;
    int max_iterations = 10000;
};

struct ExampleOptions {
    int id = 51;
    std::vector<Index> n_list;
    double alpha = 1.0;
    double beta = 1.0;
    double r = 0.5;
    double b = 1.0;
    bool estimate = false;
};

void add_exponents(CLI::App* cmd, CommonOptions& o) {
    cmd->add_option("--p", o.p, "exponent p > 1")->required();
    cmd->add_option("--q", o.q, "exponent q > 1")->required();
    cmd->add_option("--out", o.out_path, "write the report here instead of stdout");
    cmd->add_flag("--no-timings", o.no_timings, "omit wall-clock timings from reports");
}

class Sink {
public:
    Sink(const std::string& path, std::ostream& fallback) : out_(&fallback) {
        if (!path.empty()) {
            file_.open(path, std::ios::binary);
            if (!file_) fail(ErrorKind::InvalidArgument, "cannot open output file " + path);
            out_ = &file_;
        }
    }
    std::ostream& stream() { return *out_; }

private:
    std::ofstream file_;
    std::ostream* out_;
};

std::optional<double> tail_increment(BoundaryCase c, const WeightedInterval& w, const Exponents& e,
                                     double b_lower) {
    const auto half = static_cast<Index>(w.size() / 2);
    const bool pairs = c == BoundaryCase::DD || c == BoundaryCase::NN;
    if (half < (pairs ? 2 : 1)) return std::nullopt;
    const auto head = w.sub(w.first(), w.first() + half - 1);
    return b_lower - lower_constant(c, head, e).value;
}

Report bounds_report(BoundaryCase c, const WeightedInterval& w, const Exponents& e) {
    const auto t0 = Clock::now();
    Report r = Report::from_bounds(compute_bounds(c, w, e));
    r.timings_ms.emplace_back("boundsMs", ms_since(t0));
    r.tail_increment = tail_increment(c, w, e, r.b_lower);
    return r;
}

void add_estimate(Report& r, BoundaryCase c, const WeightedInterval& w, const Exponents& e,
                  const EstimateOptions& o) {
    EstimateConfig cfg;
    cfg.restarts = o.restarts;
    cfg.seed = o.seed;
    cfg.max_iterations = o.max_iterations;
    cfg.oracle = o.oracle;
    const auto t0 = Clock::now();
    const auto est = estimate_A(c, w, e, cfg);
    r.timings_ms.emplace_back("estimateMs", ms_since(t0));
    r.a_hat = est.a_hat;
    r.oracle_value = est.oracle_value;
    r.extra["converged"] = est.converged;
    r.extra["iterations"] = est.iterations;
}

void emit(std::ostream& out, const Report& r, const CommonOptions& o, bool pretty) {
    const auto j = r.to_json(!o.no_timings);
    out << (pretty ? j.dump(2) : j.dump()) << '\n';
}

ordered_json common_params(const char* command, const CommonOptions& o) {
    ordered_json j;
    j["command"] = command;
    j["case"] = o.kase;
    j["p"] = o.p;
    j["q"] = o.q;
    return j;
}

int cmd_bounds(const CommonOptions& o, const FileOptions& f, std::ostream& out) {
    const Exponents e(o.p, o.q);
    const BoundaryCase c = parse_case(o.kase);
    const auto w = read_weights(f.weights).to_interval(e.p());
    Report r = bounds_report(c, w, e);
    r.params = common_params("bounds", o);
    r.params["weights"] = f.weights;
    Sink sink(o.out_path, out);
    emit(sink.stream(), r, o, true);
    return kExitOk;
}

int cmd_estimate(const CommonOptions& o, const FileOptions& f, const EstimateOptions& est,
                 std::ostream& out) {
    const Exponents e(o.p, o.q);
    const BoundaryCase c = parse_case(o.kase);
    if (est.oracle && !(e.p() == 2.0 && e.q() == 2.0))
        fail(ErrorKind::InvalidArgument, "--oracle is only available for p = q = 2");
    const auto w = read_weights(f.weights).to_interval(e.p());
    Report r = bounds_report(c, w, e);
    add_estimate(r, c, w, e, est);
    r.params = common_params("estimate", o);
    r.params["weights"] = f.weights;
    r.params["restarts"] = est.restarts;
    r.params["seed"] = est.seed;
    r.params["oracle"] = est.oracle;
    r.params["maxIterations"] = est.max_iterations;
    Sink sink(o.out_path, out);
    emit(sink.stream(), r, o, true);
    return kExitOk;
}

WeightedInterval example_weights(const ExampleOptions& x, const Exponents& e, Index N) {
    switch (x.id) {
        case 51: return gen_example51(e, N);
        case 52: return gen_example52(x.alpha, x.beta, e, N);
        case 53: return gen_example53(x.r, x.b, e, N);
        default: fail(ErrorKind::InvalidArgument, "--id must be 51, 52 or 53");
    }
}

BoundaryCase example_case(int id) {
    switch (id) {
        case 51: return BoundaryCase::ND;
        case 52: return BoundaryCase::DD;
        default: return BoundaryCase::NN;
    }
}

std::vector<Index> default_n_list(int id) {
    switch (id) {
        case 51: return {1000, 10000};
        case 52: return {1000, 10000, 100000};
        default: return {10, 50};
    }
}

/// Matching tolerance for the displayed closed forms.
constexpr double kClosedFormTol = 1e-10;

int cmd_example(const CommonOptions& o, const ExampleOptions& x, const EstimateOptions& est,
                std::ostream& out) {
    const Exponents e(o.p, o.q);
    if (x.id != 51 && x.id != 52 && x.id != 53)
        fail(ErrorKind::InvalidArgument, "--id must be 51, 52 or 53");
    if (x.id == 53) {
        require(x.r > 0.0 && x.r < 1.0, ErrorKind::InvalidArgument, "example 53 needs 0 < r < 1");
        require(x.b > 0.0, ErrorKind::InvalidArgument, "example 53 needs b > 0");
    }
    const BoundaryCase c = example_case(x.id);
    const auto n_list = x.n_list.empty() ? default_n_list(x.id) : x.n_list;
    for (std::size_t k = 1; k < n_list.size(); ++k)
        require(n_list[k] > n_list[k - 1], ErrorKind::InvalidArgument, "--n-list must be increasing");

    CommonOptions shown = o;
    shown.kase = std::string(case_name(c));
    ordered_json params = common_params("example", shown);
    params["id"] = x.id;
    if (x.id == 52) {
        params["alpha"] = x.alpha;
        params["beta"] = x.beta;
    } else if (x.id == 53) {
        params["r"] = x.r;
        params["b"] = x.b;
    }
    if (x.estimate) {
        params["restarts"] = est.restarts;
        params["seed"] = est.seed;
    }

    Sink sink(o.out_path, out);
    std::vector<double> uppers;
    for (Index N : n_list) {
        const auto w = example_weights(x, e, N);
        Report r = bounds_report(c, w, e);
        if (x.estimate) add_estimate(r, c, w, e, est);
        r.params = params;
        r.params["N"] = N;
        if (x.id == 51) {
            r.extra["limit"] = 1.0;
        } else if (x.id == 53) {
            const auto cf = example53_closed_form(x.r, x.b, e, N);
            ordered_json j;
            j["upper"] = cf.upper;
            j["lower"] = cf.lower;
            j["upperMatch"] = std::abs(r.b_upper - cf.upper) <= kClosedFormTol * std::abs(cf.upper);
            j["lowerMatch"] = std::abs(r.b_lower - cf.lower) <= kClosedFormTol * std::abs(cf.lower);
            j["tolerance"] = kClosedFormTol;
            r.extra["closedForm"] = std::move(j);
        }
        uppers.push_back(r.b_upper);
        emit(sink.stream(), r, o, false);
    }
    if (x.id == 52 && n_list.size() >= 2) {
        const auto g = classify_growth(n_list, uppers);
        ordered_json j;
        j["classification"] = std::string(growth_name(g.verdict));
        j["expected"] = example52_valid(x.alpha, x.beta, e) ? "bounded" : "divergent";
        j["threshold"] = example52_threshold(x.beta, e);
        j["n"] = g.n;
        j["bUpper"] = g.b;
        j["ratios"] = g.ratios;
        j["params"] = params;
        sink.stream() << j.dump() << '\n';
    }
    return kExitOk;
}

int cmd_weights(const CommonOptions& o, const ExampleOptions& x, Index N) {
    const Exponents e(o.p, o.q);
    require(!o.out_path.empty(), ErrorKind::InvalidArgument, "weights needs --out FILE");
    write_weights(o.out_path, WeightFile::from_interval(example_weights(x, e, N)));
    return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Two-sided estimates for optimal constants of discrete weighted Hardy inequalities", "hardy"};
    app.require_subcommand(1);

    CommonOptions common;
    FileOptions file;
    EstimateOptions est;
    ExampleOptions ex;
    Index weights_n = 100;

    const std::vector<std::string> cases{"nd", "dn", "dd", "nn"};
    auto add_case = [&](CLI::App* cmd) {
        cmd->add_option("--case", common.kase, "boundary case")
            ->required()
            ->transform(CLI::IsMember(cases, CLI::ignore_case));
    };
    auto add_estimate_opts = [&](CLI::App* cmd) {
        cmd->add_option("--restarts", est.restarts, "random restarts")->check(CLI::NonNegativeNumber);
        cmd->add_option("--seed", est.seed, "random seed");
        cmd->add_option("--max-iterations", est.max_iterations, "iteration cap per phase")
            ->check(CLI::PositiveNumber);
    };
    auto add_example_params = [&](CLI::App* cmd) {
        cmd->add_option("--id", ex.id, "example: 51, 52 or 53")->required();
        cmd->add_option("--alpha", ex.alpha, "example 52: u_n = n^-alpha");
        cmd->add_option("--beta", ex.beta, "example 52: v_n = n^beta");
        cmd->add_option("--r", ex.r, "example 53: ratio 0 < r < 1");
        cmd->add_option("--b", ex.b, "example 53: scale b > 0");
    };

    auto* bounds = app.add_subcommand("bounds", "two-sided estimate for a weight file");
    add_case(bounds);
    add_exponents(bounds, common);
    bounds->add_option("--weights", file.weights, "JSON or CSV weight file")->required();

    auto* estimate = app.add_subcommand("estimate", "two-sided estimate plus a variational lower bound");
    add_case(estimate);
    add_exponents(estimate, common);
    estimate->add_option("--weights", file.weights, "JSON or CSV weight file")->required();
    add_estimate_opts(estimate);
    estimate->add_flag("--oracle", est.oracle, "compare with the exact p = q = 2 eigenvalue");

    auto* example = app.add_subcommand("example", "truncation sweeps of the worked examples");
    add_exponents(example, common);
    add_example_params(example);
    example->add_option("--n-list", ex.n_list, "comma-separated truncations")->delimiter(',');
    example->add_flag("--estimate", ex.estimate, "also run the variational estimator");
    add_estimate_opts(example);

    auto* weights = app.add_subcommand("weights", "write example weights to a JSON or CSV file");
    add_exponents(weights, common);
    add_example_params(weights);
    weights->add_option("--n", weights_n, "truncation N")->check(CLI::PositiveNumber);

    std::vector<const char*> argv{"hardy"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInvalidArgs;
    }

    try {
        if (bounds->parsed()) return cmd_bounds(common, file, out);
        if (estimate->parsed()) return cmd_estimate(common, file, est, out);
        if (example->parsed()) return cmd_example(common, ex, est, out);
        if (weights->parsed()) return cmd_weights(common, ex, weights_n);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_code(e.kind());
    } catch (const std::bad_alloc&) {
        err << "error: out of memory\n";
        return kExitNumericFailure;
    }
    return kExitInvalidArgs;
}

}  // namespace hardy
