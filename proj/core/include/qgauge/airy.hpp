#pragma once

namespace qgauge {

/// Ai(x), Ai'(x) and a conservative bound on the absolute error of `ai`.
struct AiryResult {
    double ai = 0.0;
    double ai_prime = 0.0;
    double est_abs_error = 0.0;
};

/// Airy function of the first kind on the real line.
///
/// Regions:
///   - |x| <= 5: the two Maclaurin series, Ai = c1 f(x) - c2 g(x).
///   - x > 5: exponentially decaying asymptotic expansion.
///   - -9 <= x < -5: Taylor stepping of Ai'' = x Ai from the series value at x = -5.
///   - x < -9: oscillatory asymptotic expansion.
///
/// Accuracy is max(1e-10, 1e-12 |Ai|) on [-30, 10]; the support is |x| <= 200.
class AiryEvaluator {
public:
    /// Gamma(1/3) and Gamma(2/3), from which c1 = Ai(0) and c2 = -Ai'(0) follow.
    struct Constants {
        double gamma_one_third;
        double gamma_two_thirds;
    };

    static constexpr Constants standard_constants{2.6789385347077476, 1.3541179394264004};

    static constexpr double max_abs_argument = 200.0;
    static constexpr double series_limit = 5.0;
    static constexpr double oscillatory_limit = -9.0;

    explicit AiryEvaluator(Constants constants = standard_constants);

    /// Throws DomainError for non-finite x or |x| > 200.
    AiryResult operator()(double x) const;

    const Constants& constants() const noexcept { return constants_; }

private:
    AiryResult series(double x) const;
    AiryResult taylor_from_anchor(double x) const;

    Constants constants_;
    double c1_;
    double c2_;
    AiryResult anchor_;  // series value at x = -series_limit
};

/// Ai(x) with the standard constants.
AiryResult airy_ai(double x);

/// Independent high-accuracy Ai(x) by quadrature of the integral representation
///   Ai(x) = (1/pi) e^{k^3/3 - k x} int_0^inf e^{-k s^2} cos(s^3/3 + (x - k^2) s) ds,
/// obtained by shifting the contour of (1/2pi) int e^{i(t^3/3 + x t)} dt to Im t = k.
/// Slow; meant for tests and verification suites.
///
/// Requires x in [-50, 20] and tol in [1e-14, 1e-6] (DomainError otherwise).
/// Throws ConvergenceFailure when the quadrature error estimate exceeds tol.
double airy_oracle(double x, double tol);

}  // namespace qgauge
