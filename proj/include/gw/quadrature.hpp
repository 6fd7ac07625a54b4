#ifndef GW_QUADRATURE_HPP
#define GW_QUADRATURE_HPP

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gw {

enum class QuadratureMethod { AdaptiveSimpson, Trapezoidal };

struct QuadratureSpec {
    QuadratureMethod method = QuadratureMethod::AdaptiveSimpson;
    double rel_tol = 1e-6;
    std::int64_t max_evals = 10'000'000;
    int initial_panels = 64; // Trapezoidal only

    void validate() const {
        if (!(rel_tol >= 1e-12 && rel_tol <= 1e-2))
            throw std::invalid_argument("QuadratureSpec: rel_tol must lie in [1e-12, 1e-2]");
        if (max_evals < 100)
            throw std::invalid_argument("QuadratureSpec: max_evals must be >= 100");
        if (initial_panels < 1)
            throw std::invalid_argument("QuadratureSpec: initial_panels must be >= 1");
    }
};

struct QuadratureResult {
    std::complex<double> value{};
    double err_estimate = 0.0;
    std::int64_t evals = 0;
    double wall_time = 0.0;        // seconds
    std::optional<double> xi_max{}; // semi-infinite truncation point, when applicable
};

// Integration stopped before reaching the requested tolerance (eval budget
// exhausted or tolerance unattainable); carries the best estimate so far.
class QuadratureError : public std::runtime_error {
public:
    QuadratureError(const std::string& what, QuadratureResult partial)
        : std::runtime_error(what), partial_(partial) {}
    const QuadratureResult& partial() const { return partial_; }

private:
    QuadratureResult partial_;
};

// The integrand returned a non-finite value.
class IntegrandError : public std::runtime_error {
public:
    explicit IntegrandError(double abscissa)
        : std::runtime_error("integrand returned a non-finite value at x = " +
                             std::to_string(abscissa)),
          abscissa_(abscissa) {}
    double abscissa() const { return abscissa_; }

private:
    double abscissa_;
};

// The envelope tail bound never fell below the requested threshold within
// the hard cap of the semi-infinite transform variable.
class TruncationError : public std::runtime_error {
public:
    explicit TruncationError(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {

struct KahanComplex {
    std::complex<double> sum{};
    std::complex<double> comp{};
    void add(std::complex<double> v) {
        const std::complex<double> y = v - comp;
        const std::complex<double> t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
};

template <class F>
struct CountedEval {
    F& f;
    std::int64_t count = 0;
    std::complex<double> operator()(double x) {
        ++count;
        const std::complex<double> v = f(x);
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) throw IntegrandError(x);
        return v;
    }
};

struct SimpsonPanel {
    double a, h;
    std::complex<double> fa, fm, fb;
    std::complex<double> s;
    double tol;
    int depth;
};

// One full adaptive pass at absolute tolerance eps_total. The interval is
// pre-split into `roots` panels so that an accidental agreement of the
// coarse rule on a heavily oscillatory integrand cannot end the recursion
// at the top level; every panel is also forced one level down.
template <class Eval>
void simpson_pass(Eval& eval, double a, double b, double eps_total, std::int64_t max_evals,
                  int roots, std::complex<double>& value, double& err, bool& budget_hit,
                  bool& depth_capped) {
    constexpr int kMaxDepth = 50;
    constexpr int kMinDepth = 1;
    const double w = (b - a) / roots;

    std::vector<std::complex<double>> grid(2 * roots + 1);
    for (int i = 0; i <= 2 * roots; ++i) grid[i] = eval(a + 0.5 * w * i);

    std::vector<SimpsonPanel> stack;
    stack.reserve(roots + 2 * kMaxDepth);
    for (int i = roots - 1; i >= 0; --i) {
        SimpsonPanel p{a + w * i, w, grid[2 * i], grid[2 * i + 1], grid[2 * i + 2], {},
                       eps_total / roots, 0};
        p.s = p.h / 6.0 * (p.fa + 4.0 * p.fm + p.fb);
        stack.push_back(p);
    }

    KahanComplex acc;
    std::complex<double> pending{};
    for (const auto& p : stack) pending += p.s;
    err = 0.0;
    budget_hit = false;
    depth_capped = false;

    while (!stack.empty()) {
        if (eval.count + 2 > max_evals) {
            budget_hit = true;
            value = acc.sum + pending;
            return;
        }
        SimpsonPanel p = stack.back();
        stack.pop_back();
        pending -= p.s;

        const double h2 = 0.5 * p.h;
        const std::complex<double> fl = eval(p.a + 0.25 * p.h);
        const std::complex<double> fr = eval(p.a + 0.75 * p.h);
        const std::complex<double> sl = h2 / 6.0 * (p.fa + 4.0 * fl + p.fm);
        const std::complex<double> sr = h2 / 6.0 * (p.fm + 4.0 * fr + p.fb);
        const std::complex<double> diff = sl + sr - p.s;
        const double panel_err = std::abs(diff) / 15.0;

        if (p.depth >= kMinDepth && (panel_err <= p.tol || p.depth >= kMaxDepth)) {
            acc.add(sl + sr + diff / 15.0);
            err += panel_err;
            if (p.depth >= kMaxDepth && panel_err > p.tol) depth_capped = true;
            continue;
        }
        stack.push_back({p.a + h2, h2, p.fm, fr, p.fb, sr, 0.5 * p.tol, p.depth + 1});
        stack.push_back({p.a, h2, p.fa, fl, p.fm, sl, 0.5 * p.tol, p.depth + 1});
        pending += sl + sr;
    }
    value = acc.sum;
}

// abs_tol (optional) is an absolute error floor: accuracy demands never drop
// below it even when the integral itself nearly cancels. Zero means purely
// relative control.
template <class Eval>
QuadratureResult simpson_adaptive(Eval& eval, double a, double b, const QuadratureSpec& spec,
                                  double abs_tol = 0.0) {
    constexpr int kRoots = 32;
    QuadratureResult r;

    // First pass scales the tolerance off the coarse root estimate; if the
    // converged value turns out much smaller (cancellation), re-run tighter.
    double scale = 0.0;
    {
        // cheap probe: Simpson on the root grid
        const double w = (b - a) / kRoots;
        std::complex<double> probe{};
        for (int i = 0; i < kRoots; ++i) {
            const double x0 = a + i * w;
            probe += w / 6.0 *
                     (eval(x0) + 4.0 * eval(x0 + 0.5 * w) + eval(x0 + w));
        }
        scale = std::max(std::abs(probe), 1e-300);
    }

    // The coarse probe can misjudge the magnitude of an oscillatory integral
    // by orders, so the first pass runs loose purely to pin the scale; later
    // passes run at the requested tolerance against the converged magnitude.
    double tol_factor = std::max(spec.rel_tol, 1e-2);
    for (int pass = 0; pass < 6; ++pass) {
        std::complex<double> value{};
        double err = 0.0;
        bool budget_hit = false;
        bool depth_capped = false;
        simpson_pass(eval, a, b, std::max(tol_factor * scale, abs_tol), spec.max_evals, kRoots,
                     value, err, budget_hit, depth_capped);
        r.value = value;
        r.err_estimate = err;
        r.evals = eval.count;
        if (budget_hit) {
            r.err_estimate = std::numeric_limits<double>::infinity();
            throw QuadratureError("adaptive Simpson: eval budget exhausted before convergence", r);
        }
        const double target =
            std::max(spec.rel_tol * std::max(std::abs(value), 1e-300), abs_tol);
        if (err <= target) return r;
        scale = std::max(std::abs(value), 1e-300);
        tol_factor = spec.rel_tol;
    }
    if (r.err_estimate <=
        std::max(spec.rel_tol * std::max(std::abs(r.value), 1e-300), abs_tol))
        return r;
    throw QuadratureError("adaptive Simpson: requested relative tolerance unattainable", r);
}

template <class Eval>
QuadratureResult trapezoid_doubling(Eval& eval, double a, double b, const QuadratureSpec& spec,
                                    double abs_tol = 0.0) {
    std::int64_t n = spec.initial_panels;
    double h = (b - a) / static_cast<double>(n);

    KahanComplex acc;
    acc.add(0.5 * eval(a));
    acc.add(0.5 * eval(b));
    for (std::int64_t i = 1; i < n; ++i) acc.add(eval(a + h * static_cast<double>(i)));
    std::complex<double> t = acc.sum * h;

    QuadratureResult r;
    while (true) {
        if (eval.count + n > spec.max_evals) {
            r.value = t;
            r.err_estimate = std::numeric_limits<double>::infinity();
            r.evals = eval.count;
            throw QuadratureError("trapezoidal: eval budget exhausted before convergence", r);
        }
        const double h2 = 0.5 * h;
        KahanComplex odd;
        for (std::int64_t i = 0; i < n; ++i)
            odd.add(eval(a + h2 * static_cast<double>(2 * i + 1)));
        const std::complex<double> t2 = 0.5 * t + odd.sum * h2;
        const double diff = std::abs(t2 - t);
        n *= 2;
        h = h2;
        if (diff <= std::max(spec.rel_tol * std::abs(t2), abs_tol)) {
            r.value = t2;
            r.err_estimate = diff;
            r.evals = eval.count;
            return r;
        }
        t = t2;
    }
}

} // namespace detail

// Integrate a complex-valued function over [a, b] to the spec's relative
// tolerance. On success err_estimate <= rel_tol * |value|.
template <class F>
QuadratureResult integrate_finite(F&& f, double a, double b, const QuadratureSpec& spec) {
    spec.validate();
    if (!(a < b)) throw std::invalid_argument("integrate_finite: requires a < b");
    const auto t0 = std::chrono::steady_clock::now();
    detail::CountedEval<F> eval{f};
    QuadratureResult r = (spec.method == QuadratureMethod::AdaptiveSimpson)
                             ? detail::simpson_adaptive(eval, a, b, spec)
                             : detail::trapezoid_doubling(eval, a, b, spec);
    r.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

// Integrate f over [0, inf) given a decreasing envelope with
// envelope(x) >= |f(x)| beyond some point. The truncation point is pushed
// out until the envelope tail bound drops below a tenth of the error goal,
// so the discarded tail can never dominate the error budget; the finite
// part runs at 0.9 * rel_tol. Hard cap at x = 50. abs_floor, when positive,
// is an absolute error floor for callers that combine this integral with a
// dominant partner term and do not need relative accuracy of a nearly
// cancelled value.
template <class F, class Env>
QuadratureResult integrate_semi_infinite(F&& f, Env&& envelope, const QuadratureSpec& spec,
                                         double abs_floor = 0.0) {
    spec.validate();
    constexpr double kHardCap = 50.0;
    constexpr int kGridN = 1000;
    const auto t0 = std::chrono::steady_clock::now();

    // Tail bounds of the envelope on a fixed grid, integrated backwards from
    // the hard cap by the trapezoidal rule.
    std::vector<double> tail(kGridN + 1, 0.0);
    std::vector<double> env(kGridN + 1, 0.0);
    const double step = kHardCap / kGridN;
    for (int i = 0; i <= kGridN; ++i) {
        env[i] = envelope(step * i);
        if (!std::isfinite(env[i]) || env[i] < 0.0)
            throw std::invalid_argument("integrate_semi_infinite: envelope must be finite and >= 0");
    }
    for (int i = kGridN - 1; i >= 0; --i)
        tail[i] = tail[i + 1] + 0.5 * step * (env[i] + env[i + 1]);

    const auto smallest_point_with_tail_below = [&](double threshold) -> std::optional<double> {
        for (int i = 0; i <= kGridN; ++i)
            if (tail[i] <= threshold) return step * i;
        return std::nullopt;
    };

    detail::CountedEval<F> eval{f};
    const auto run = [&](double upper, double rel_tol, double abs_tol) {
        QuadratureSpec inner = spec;
        inner.rel_tol = rel_tol;
        return (inner.method == QuadratureMethod::AdaptiveSimpson)
                   ? detail::simpson_adaptive(eval, 0.0, upper, inner, abs_tol)
                   : detail::trapezoid_doubling(eval, 0.0, upper, inner, abs_tol);
    };

    // Cheap magnitude estimate on a preliminary envelope-based truncation;
    // it only steers the choice of the final truncation point.
    double t_est = smallest_point_with_tail_below(1e-4 * tail[0]).value_or(kHardCap);
    if (t_est <= 0.0) t_est = step;
    double scale =
        std::abs(run(t_est, std::max(1e-3, spec.rel_tol), 10.0 * abs_floor).value);

    QuadratureResult out;
    for (int round = 0; round < 3; ++round) {
        const double goal = std::max(spec.rel_tol * std::max(scale, 1e-300), abs_floor);
        const double threshold = 0.1 * goal;
        const auto t_final = smallest_point_with_tail_below(threshold);
        if (!t_final)
            throw TruncationError(
                "integrate_semi_infinite: envelope tail stays above threshold up to the hard cap");
        const QuadratureResult full =
            run(std::max(*t_final, t_est), 0.9 * spec.rel_tol, 0.9 * abs_floor);
        out.value = full.value;
        out.err_estimate = full.err_estimate + threshold;
        out.xi_max = std::max(*t_final, t_est);
        // The threshold was derived from the estimate; accept once the
        // converged magnitude confirms it.
        if (std::abs(full.value) >= 0.5 * scale) break;
        scale = std::max(std::abs(full.value), 1e-300);
    }

    out.evals = eval.count;
    out.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return out;
}

} // namespace gw

#endif
