#pragma once

#include <functional>
#include <vector>

namespace shrinkcert {

struct Bracket {
    double lo = 0.0;
    double hi = 0.0;
    double root = 0.0;
    double residual = 0.0;
    int iterations = 0;
};

// Bisection down to hi - lo <= width. Throws std::domain_error without a sign change.
Bracket bisect(const std::function<double(double)>& f, double lo, double hi, double width = 1e-12);

// Smallest x in [lo, hi] with pred(x) true, assuming pred is monotone (false then true).
double bisect_threshold(const std::function<bool(double)>& pred, double lo, double hi, double width = 1e-13);

struct PatternResult {
    std::vector<double> x;
    double value = 0.0;
    int evaluations = 0;
    std::vector<double> final_step;
};

// Compass search maximizing f inside the box [lo, hi]; each round runs until no
// axis move improves, then shrinks the step.
PatternResult pattern_search(const std::function<double(const std::vector<double>&)>& f, std::vector<double> x0,
                             std::vector<double> step, const std::vector<double>& lo, const std::vector<double>& hi,
                             int rounds = 3, double shrink = 0.5, int max_moves_per_round = 200);

std::vector<double> linspace(double a, double b, int n);
std::vector<double> logspace(double a, double b, int n);

// Runs body(i) for i in [0, n) on up to `threads` workers. Callers write into
// slot i so the merge order never depends on scheduling.
void parallel_for(int n, int threads, const std::function<void(int)>& body);

int default_threads();
void set_default_threads(int threads);

}  // namespace shrinkcert
