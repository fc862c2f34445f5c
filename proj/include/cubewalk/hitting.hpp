#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cubewalk/walk.hpp"

namespace cubewalk {

struct Window {
    int lo = 1;
    int hi = 1;
};

// [1, ceil(pi*degree/2) + 5]: wide enough to contain every family peak while
// excluding later recurrences such as the T=23 revival on the 3-cube.
Window default_window(const CubelikeGraph& g);

struct HittingRecord {
    std::string graph;
    int steps = 0;          // T
    BitString target;
    double probability = 0.0;
    Window window;
};

double one_shot_probability(const CubelikeGraph& g, int steps, const BitString& start, const BitString& target,
                            CoinPadding padding = CoinPadding::Zero);

// Scans the window for the probability peak at the target. Near-equal peaks
// (within 1e-9) are resolved deterministically: a perfect hit takes the
// earliest tied step (the minimum perfect hitting time); otherwise the tied
// step nearest pi*degree/2 wins, earlier step on a residual tie.
HittingRecord find_hitting_time(const CubelikeGraph& g, const BitString& start,
                                std::optional<BitString> target = std::nullopt,
                                std::optional<Window> window = std::nullopt,
                                CoinPadding padding = CoinPadding::Zero);

enum class Family { Hypercube, Augmented, Random, Complete };

const char* family_name(Family f);

// Complete graphs walk with loop padding: the coin register is exactly the
// group, padded slots shift along the identity, and the walker provably
// returns to the start with probability 1 at T=4.
CoinPadding family_padding(Family f);

struct SweepRow {
    Family family;
    int n = 0;
    int delta = 0;
    int steps = 0;
    BitString target;
    double probability = 0.0;
};

struct LinearFit {
    double slope = 0.0;
    double intercept = 0.0;
    bool valid = false; // needs >= 2 rows with distinct degrees
};

struct SweepReport {
    std::vector<SweepRow> rows;
    LinearFit fit;                // T against degree
    int parity_violations = 0;    // rows with parity(T) != parity(degree)
};

struct SweepOptions {
    Family family = Family::Hypercube;
    int n_from = 3;
    int n_to = 3;
    int extra = 0;              // random family: degree n+extra
    std::uint64_t seed = 0;
    std::optional<CoinPadding> padding; // default: family_padding
};

// One hitting record per dimension, rows distributed across worker threads
// (capped by CUBEWALK_THREADS) with a deterministic merge.
SweepReport family_sweep(const SweepOptions& options);

struct ConjectureVerdict {
    double slope = 0.0;
    double slope_gap = 0.0;     // |slope - pi/2|
    double max_step_gap = 0.0;  // max |T - pi*degree/2|
    int parity_violations = 0;
};

// Reports the fit of T against degree relative to the T = pi*degree/2 line;
// thresholds are the caller's business.
ConjectureVerdict conjecture_check(const SweepReport& report);

// Header `family,n,delta,T,target_bits,p`, then fit and parity comment lines.
void write_sweep_csv(std::ostream& out, const SweepReport& report);

// Two columns per row: degree and T.
void write_sweep_plot(std::ostream& out, const SweepReport& report);

LinearFit least_squares(const std::vector<double>& x, const std::vector<double>& y);

} // namespace cubewalk
