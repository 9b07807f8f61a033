#pragma once

#include "betaproof/hpfloat.hpp"
#include "betaproof/rational.hpp"

#include <functional>
#include <string>

namespace betaproof::proof {

/// One grid cell, rounded to double for output.
struct SweepRow {
    double x, y, beta, new_bound, ivady_lower, alzer_lower, margin_new, margin_ivady;
};

inline constexpr const char* kSweepCsvHeader = "x,y,beta,new_bound,ivady_lower,alzer_lower,margin_new,margin_ivady";
std::string csv_line(const SweepRow& row);

struct SweepSummary {
    int grid_n = 0;
    std::size_t cells = 0;
    HPFloat alpha;
    HPFloat min_margin_new;  // B - new bound
    Rational argmin_x, argmin_y;
    HPFloat min_margin_ivady_lower;  // B - (x+y-xy)/(xy)
    HPFloat min_margin_ivady_upper;  // (x+y)/(xy(1+xy)) - B
    HPFloat min_margin_alzer_lower;  // B - alzer lower with alpha
    HPFloat min_margin_alzer_upper;  // alzer upper with beta = 1, minus B
    /// Cells where the new bound exceeds Ivady's lower bound by more than the
    /// error budget (exactly the cells with x + y < 1).
    std::size_t new_beats_ivady = 0;
};

/// Evaluates the bounds on {(i/n, j/n) : 1 <= i, j <= n}. Rows reach `sink` in
/// row-major order regardless of `threads`. Throws std::invalid_argument with
/// "grid_n must be ≥ 2" for n < 2.
SweepSummary sweep_theorem(int grid_n, const Precision& prec = {},
                           const std::function<void(const SweepRow&)>& sink = {}, unsigned threads = 1);

}  // namespace betaproof::proof
