#include "cubewalk/hitting.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <mutex>
#include <ostream>
#include <thread>

#include "cubewalk/error.hpp"

namespace cubewalk {

namespace {

constexpr double kTieEps = 1e-9;

double target_probability(const WalkState& s, std::uint64_t target) {
    double p = 0.0;
    for (int k = 0; k < s.coin_slots(); ++k)
        p += std::norm(s.amp(k, target));
    return p;
}

int worker_count(std::size_t jobs) {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    if (const char* env = std::getenv("CUBEWALK_THREADS")) {
        long cap = std::strtol(env, nullptr, 10);
        if (cap >= 1 && static_cast<unsigned long>(cap) < hw) hw = static_cast<unsigned>(cap);
    }
    return static_cast<int>(std::min<std::size_t>(hw, jobs));
}

} // namespace

Window default_window(const CubelikeGraph& g) {
    return Window{1, static_cast<int>(std::ceil(M_PI * g.degree() / 2.0)) + 5};
}

double one_shot_probability(const CubelikeGraph& g, int steps, const BitString& start, const BitString& target,
                            CoinPadding padding) {
    if (target.width != g.n)
        fail(ErrorCode::WidthMismatch, "target width " + std::to_string(target.width) + " for dimension " + std::to_string(g.n));
    WalkState s = initial_state(g, start, padding);
    evolve(s, steps);
    return target_probability(s, target.value);
}

HittingRecord find_hitting_time(const CubelikeGraph& g, const BitString& start, std::optional<BitString> target,
                                std::optional<Window> window, CoinPadding padding) {
    BitString targ = target.value_or(target_vertex(g));
    if (targ.width != g.n)
        fail(ErrorCode::WidthMismatch, "target width " + std::to_string(targ.width) + " for dimension " + std::to_string(g.n));
    Window win = window.value_or(default_window(g));
    if (win.lo < 0 || win.hi < win.lo)
        fail(ErrorCode::EmptyWindow, "window [" + std::to_string(win.lo) + "," + std::to_string(win.hi) + "]");

    WalkState s = initial_state(g, start, padding);
    std::vector<double> probe(static_cast<std::size_t>(win.hi) + 1, -1.0);
    if (win.lo == 0)
        probe[0] = target_probability(s, targ.value);
    double best = -1.0;
    for (int t = 1; t <= win.hi; ++t) {
        step(s);
        if (t >= win.lo) {
            probe[static_cast<std::size_t>(t)] = target_probability(s, targ.value);
            best = std::max(best, probe[static_cast<std::size_t>(t)]);
        }
    }
    if (win.lo == 0)
        best = std::max(best, probe[0]);

    // Peak selection among near-ties: minimum perfect hitting time, or the
    // peak nearest the conjectured pi*degree/2 line.
    const double conj = M_PI * g.degree() / 2.0;
    int chosen = -1;
    for (int t = win.lo; t <= win.hi; ++t) {
        double p = probe[static_cast<std::size_t>(t)];
        if (p < best - kTieEps) continue;
        if (best >= 1.0 - kTieEps) {
            chosen = t;
            break;
        }
        if (chosen < 0 || std::abs(t - conj) < std::abs(chosen - conj) - 1e-12)
            chosen = t;
    }

    HittingRecord rec;
    rec.graph = "n=" + std::to_string(g.n) + " delta=" + std::to_string(g.degree());
    rec.steps = chosen;
    rec.target = targ;
    rec.probability = probe[static_cast<std::size_t>(chosen)];
    rec.window = win;
    return rec;
}

const char* family_name(Family f) {
    switch (f) {
        case Family::Hypercube: return "hypercube";
        case Family::Augmented: return "augmented";
        case Family::Random: return "random";
        case Family::Complete: return "complete";
    }
    return "?";
}

CoinPadding family_padding(Family f) {
    return f == Family::Complete ? CoinPadding::Loop : CoinPadding::Zero;
}

namespace {

CubelikeGraph family_graph(const SweepOptions& o, int n) {
    switch (o.family) {
        case Family::Hypercube: return hypercube(n);
        case Family::Augmented: return augmented_cube(n);
        case Family::Random: return random_cubelike(n, o.extra, o.seed);
        case Family::Complete: return complete_graph(n);
    }
    fail(ErrorCode::InvalidArgument, "unknown family");
}

} // namespace

SweepReport family_sweep(const SweepOptions& options) {
    if (options.n_to < options.n_from)
        fail(ErrorCode::InvalidArgument, "empty dimension range");
    const CoinPadding padding = options.padding.value_or(family_padding(options.family));
    const std::size_t jobs = static_cast<std::size_t>(options.n_to - options.n_from + 1);

    SweepReport report;
    report.rows.resize(jobs);

    std::atomic<std::size_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_lock;
    auto run = [&]() {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= jobs) return;
            try {
                int n = options.n_from + static_cast<int>(i);
                CubelikeGraph g = family_graph(options, n);
                HittingRecord rec = find_hitting_time(g, BitString(0, n), std::nullopt, std::nullopt, padding);
                report.rows[i] = SweepRow{options.family, n, g.degree(), rec.steps, rec.target, rec.probability};
            } catch (...) {
                std::scoped_lock lk(error_lock);
                if (!first_error) first_error = std::current_exception();
            }
        }
    };

    int workers = worker_count(jobs);
    if (workers <= 1) {
        run();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int i = 0; i < workers; ++i)
            pool.emplace_back(run);
        for (auto& th : pool)
            th.join();
    }
    if (first_error)
        std::rethrow_exception(first_error);

    std::vector<double> deltas, steps;
    for (const auto& row : report.rows) {
        deltas.push_back(row.delta);
        steps.push_back(row.steps);
        if ((row.steps & 1) != (row.delta & 1))
            ++report.parity_violations;
    }
    report.fit = least_squares(deltas, steps);
    return report;
}

LinearFit least_squares(const std::vector<double>& x, const std::vector<double>& y) {
    LinearFit fit;
    if (x.size() != y.size() || x.size() < 2)
        return fit;
    const double count = static_cast<double>(x.size());
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= count;
    my /= count;
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
    }
    if (sxx == 0.0)
        return fit;
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    fit.valid = true;
    return fit;
}

ConjectureVerdict conjecture_check(const SweepReport& report) {
    if (report.rows.size() < 3)
        fail(ErrorCode::TooFewRows, "conjecture check needs at least 3 rows, got " + std::to_string(report.rows.size()));
    ConjectureVerdict v;
    v.slope = report.fit.slope;
    v.slope_gap = std::abs(report.fit.slope - M_PI / 2.0);
    for (const auto& row : report.rows)
        v.max_step_gap = std::max(v.max_step_gap, std::abs(row.steps - M_PI * row.delta / 2.0));
    v.parity_violations = report.parity_violations;
    return v;
}

void write_sweep_csv(std::ostream& out, const SweepReport& report) {
    out << "family,n,delta,T,target_bits,p\n";
    char buf[64];
    for (const auto& row : report.rows) {
        std::snprintf(buf, sizeof buf, "%.12g", row.probability);
        out << family_name(row.family) << ',' << row.n << ',' << row.delta << ',' << row.steps << ','
            << row.target.text() << ',' << buf << '\n';
    }
    std::snprintf(buf, sizeof buf, "%.12g", report.fit.slope);
    out << "# slope=" << (report.fit.valid ? buf : "nan") << '\n';
    std::snprintf(buf, sizeof buf, "%.12g", report.fit.intercept);
    out << "# intercept=" << (report.fit.valid ? buf : "nan") << '\n';
    out << "# parity_violations=" << report.parity_violations << '\n';
}

void write_sweep_plot(std::ostream& out, const SweepReport& report) {
    for (const auto& row : report.rows)
        out << row.delta << '\t' << row.steps << '\n';
}

} // namespace cubewalk
