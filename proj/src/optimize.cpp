#include "shrinkcert/optimize.hpp"

#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace shrinkcert {

namespace {
std::atomic<int> g_threads{1};
}

Bracket bisect(const std::function<double(double)>& f, double lo, double hi, double width) {
    if (!(lo < hi)) throw std::invalid_argument("bisect needs lo < hi");
    double flo = f(lo);
    const double fhi = f(hi);
    if (flo == 0.0) return {lo, lo, lo, 0.0, 0};
    if (fhi == 0.0) return {hi, hi, hi, 0.0, 0};
    if ((flo > 0.0) == (fhi > 0.0)) throw std::domain_error("no sign change on the bracket");
    int it = 0;
    while (hi - lo > width && it < 400) {
        const double mid = 0.5 * (lo + hi);
        if (!(mid > lo && mid < hi)) break;
        const double fm = f(mid);
        ++it;
        if (fm == 0.0) return {mid, mid, mid, 0.0, it};
        if ((fm > 0.0) == (flo > 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    const double root = 0.5 * (lo + hi);
    return {lo, hi, root, f(root), it};
}

double bisect_threshold(const std::function<bool(double)>& pred, double lo, double hi, double width) {
    if (pred(lo)) return lo;
    if (!pred(hi)) throw std::domain_error("threshold not reached on the interval");
    while (hi - lo > width * std::max(1.0, std::fabs(hi))) {
        const double mid = 0.5 * (lo + hi);
        if (!(mid > lo && mid < hi)) break;
        if (pred(mid))
            hi = mid;
        else
            lo = mid;
    }
    return hi;
}

PatternResult pattern_search(const std::function<double(const std::vector<double>&)>& f, std::vector<double> x0,
                             std::vector<double> step, const std::vector<double>& lo, const std::vector<double>& hi,
                             int rounds, double shrink, int max_moves_per_round) {
    const std::size_t n = x0.size();
    if (step.size() != n || lo.size() != n || hi.size() != n) throw std::invalid_argument("pattern_search dimension mismatch");
    PatternResult res;
    res.x = x0;
    res.value = f(x0);
    res.evaluations = 1;
    for (int r = 0; r < rounds; ++r) {
        for (int move = 0; move < max_moves_per_round; ++move) {
            bool improved = false;
            for (std::size_t d = 0; d < n && !improved; ++d) {
                for (double sgn : {1.0, -1.0}) {
                    std::vector<double> x = res.x;
                    x[d] = std::min(hi[d], std::max(lo[d], x[d] + sgn * step[d]));
                    if (x[d] == res.x[d]) continue;
                    const double v = f(x);
                    ++res.evaluations;
                    if (v > res.value) {
                        res.value = v;
                        res.x = x;
                        improved = true;
                        break;
                    }
                }
            }
            if (!improved) break;
        }
        for (double& s : step) s *= shrink;
    }
    res.final_step = step;
    return res;
}

std::vector<double> linspace(double a, double b, int n) {
    if (n < 1) throw std::invalid_argument("linspace needs n >= 1");
    std::vector<double> v(n);
    if (n == 1) {
        v[0] = a;
        return v;
    }
    for (int i = 0; i < n; ++i) v[i] = a + (b - a) * double(i) / double(n - 1);
    v[n - 1] = b;
    return v;
}

std::vector<double> logspace(double a, double b, int n) {
    if (!(a > 0.0 && b > 0.0)) throw std::invalid_argument("logspace needs positive endpoints");
    std::vector<double> v = linspace(std::log(a), std::log(b), n);
    for (double& x : v) x = std::exp(x);
    v.front() = a;
    v.back() = b;
    return v;
}

void parallel_for(int n, int threads, const std::function<void(int)>& body) {
    if (threads <= 1 || n <= 1) {
        for (int i = 0; i < n; ++i) body(i);
        return;
    }
    std::atomic<int> next{0};
    std::exception_ptr failure;
    std::mutex m;
    auto worker = [&]() {
        while (true) {
            const int i = next.fetch_add(1);
            if (i >= n) return;
            try {
                body(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(m);
                if (!failure) failure = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    const int k = std::min(threads, n);
    for (int t = 0; t < k; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
}

int default_threads() { return g_threads.load(); }

void set_default_threads(int threads) {
    if (threads < 1) throw std::invalid_argument("threads must be >= 1");
    g_threads.store(threads);
}

}  // namespace shrinkcert
