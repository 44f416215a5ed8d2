#include "qgauge/airy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "qgauge/errors.hpp"

namespace qgauge {

namespace {

constexpr double eps = std::numeric_limits<double>::epsilon();
constexpr double max_taylor_step = 0.5;
constexpr int max_series_terms = 200;

// Coefficients u_k and v_k of the Airy asymptotic expansions.
struct AsymptoticCoefficients {
    static constexpr int count = 40;
    double u[count];
    double v[count];

    constexpr AsymptoticCoefficients() : u{}, v{} {
        u[0] = 1.0;
        v[0] = 1.0;
        for (int k = 1; k < count; ++k) {
            const double kk = k;
            u[k] = u[k - 1] * (6 * kk - 5) * (6 * kk - 3) * (6 * kk - 1) / ((2 * kk - 1) * 216 * kk);
            v[k] = -u[k] * (6 * kk + 1) / (6 * kk - 1);
        }
    }
};

constexpr AsymptoticCoefficients asymptotic{};

// Sums sign(k) c_k / z^k for k = first, first+stride, ... until the terms stop
// decreasing or drop below rounding. Returns the sum and the first omitted
// term's magnitude.
struct TruncatedSum {
    double value = 0.0;
    double tail = 0.0;
};

TruncatedSum asymptotic_sum(const double* coeff, int first, int stride, double z, bool alternate) {
    TruncatedSum out;
    double previous = std::numeric_limits<double>::infinity();
    double sign = 1.0;
    for (int k = first; k < AsymptoticCoefficients::count; k += stride) {
        const double term = coeff[k] / std::pow(z, k);
        if (std::abs(term) >= previous) {
            out.tail = std::abs(term);
            return out;
        }
        out.value += sign * term;
        previous = std::abs(term);
        if (alternate) sign = -sign;
        if (previous < 0.25 * eps * std::abs(out.value)) {
            out.tail = previous * eps;
            return out;
        }
    }
    out.tail = previous;
    return out;
}

// Adaptive 7-point Gauss / 15-point Kronrod rule with an absolute tolerance.
struct QuadratureResult {
    double value = 0.0;
    double error = 0.0;
    double l1 = 0.0;
};

constexpr double kronrod_nodes[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
constexpr double kronrod_weights[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
// Gauss weights belong to the odd-indexed Kronrod nodes.
constexpr double gauss_weights[4] = {0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
                                     0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <class F>
QuadratureResult kronrod_15(const F& f, double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double fc = f(center);
    double kronrod = kronrod_weights[7] * fc;
    double gauss = gauss_weights[3] * fc;
    double l1 = kronrod_weights[7] * std::abs(fc);
    for (int j = 0; j < 7; ++j) {
        const double dx = half * kronrod_nodes[j];
        const double f1 = f(center - dx);
        const double f2 = f(center + dx);
        kronrod += kronrod_weights[j] * (f1 + f2);
        l1 += kronrod_weights[j] * (std::abs(f1) + std::abs(f2));
        if (j % 2 == 1) gauss += gauss_weights[j / 2] * (f1 + f2);
    }
    return {kronrod * half, std::abs((kronrod - gauss) * half), l1 * std::abs(half)};
}

template <class F>
QuadratureResult adaptive_kronrod(const F& f, double a, double b, double tol, int depth) {
    QuadratureResult whole = kronrod_15(f, a, b);
    const double rounding_floor = 50.0 * eps * whole.l1;
    if (whole.error <= std::max(tol, rounding_floor) || depth == 0) {
        return whole;
    }
    const double mid = 0.5 * (a + b);
    const QuadratureResult left = adaptive_kronrod(f, a, mid, 0.5 * tol, depth - 1);
    const QuadratureResult right = adaptive_kronrod(f, mid, b, 0.5 * tol, depth - 1);
    return {left.value + right.value, left.error + right.error, left.l1 + right.l1};
}

}  // namespace

AiryEvaluator::AiryEvaluator(Constants constants) : constants_(constants) {
    if (!(constants.gamma_one_third > 0.0) || !(constants.gamma_two_thirds > 0.0)) {
        throw InvalidArgument("Airy constants must be positive");
    }
    c1_ = 1.0 / (std::cbrt(9.0) * constants.gamma_two_thirds);
    c2_ = 1.0 / (std::cbrt(3.0) * constants.gamma_one_third);
    anchor_ = series(-series_limit);
}

AiryResult AiryEvaluator::series(double x) const {
    const double x3 = x * x * x;
    // f = sum a_k x^{3k}, g = sum b_k x^{3k+1} and their derivatives.
    double f = 1.0, g = x, fp = 0.0, gp = 1.0;
    double tf = 1.0, tg = x, tfp = x * x / 2.0, tgp = 1.0;
    double magnitude = c1_ + c2_ * std::abs(x);
    fp = tfp;
    for (int k = 0; k < max_series_terms; ++k) {
        const double kk = k;
        tf *= x3 / ((3 * kk + 2) * (3 * kk + 3));
        tg *= x3 / ((3 * kk + 3) * (3 * kk + 4));
        tgp *= x3 / ((3 * kk + 1) * (3 * kk + 3));
        f += tf;
        g += tg;
        gp += tgp;
        if (k > 0) {
            tfp *= x3 / ((3 * kk) * (3 * kk + 2));
            fp += tfp;
        }
        magnitude += c1_ * std::abs(tf) + c2_ * std::abs(tg);
        const double largest = std::max({std::abs(tf), std::abs(tg), std::abs(tfp), std::abs(tgp)});
        if (largest < 0.1 * eps * std::min(1.0, std::max(std::abs(f), std::abs(g)))) break;
    }
    AiryResult r;
    r.ai = c1_ * f - c2_ * g;
    r.ai_prime = c1_ * fp - c2_ * gp;
    r.est_abs_error = 4.0 * eps * magnitude + eps * std::abs(r.ai);
    return r;
}

AiryResult AiryEvaluator::taylor_from_anchor(double x) const {
    // Step from the anchor at -series_limit towards x using the local Taylor
    // expansion y(x0 + h) = sum c_n h^n with c_{n+2} = (x0 c_n + c_{n-1}) / ((n+2)(n+1)).
    const double start = -series_limit;
    const int steps = std::max(1, static_cast<int>(std::ceil((start - x) / max_taylor_step)));
    const double h = (x - start) / steps;
    double y = anchor_.ai;
    double dy = anchor_.ai_prime;
    double x0 = start;
    for (int s = 0; s < steps; ++s) {
        double c_prev = 0.0, c0 = y, c1 = dy;  // c_{n-1}, c_n, c_{n+1}
        double value = c0 + c1 * h;
        double deriv = c1;
        double hn = h;  // h^{n+1}
        for (int n = 0; n < max_series_terms; ++n) {
            const double c2 = (x0 * c0 + c_prev) / ((n + 2.0) * (n + 1.0));
            deriv += (n + 2.0) * c2 * hn;
            hn *= h;
            value += c2 * hn;
            c_prev = c0;
            c0 = c1;
            c1 = c2;
            if (std::abs(c2 * hn) < 0.1 * eps * eps && std::abs(c0 * hn) < 0.1 * eps * eps) break;
            if (std::abs(c2 * hn) < 0.01 * eps * std::abs(value) &&
                std::abs(c0 * hn / h) < 0.01 * eps * std::abs(value) && n > 4) {
                break;
            }
        }
        y = value;
        dy = deriv;
        x0 += h;
    }
    AiryResult r;
    r.ai = y;
    r.ai_prime = dy;
    // The oscillatory region neither amplifies nor damps perturbations; the
    // anchor error is carried along and each step adds a few ulps.
    r.est_abs_error = 2.0 * anchor_.est_abs_error + 8.0 * eps * steps;
    return r;
}

AiryResult AiryEvaluator::operator()(double x) const {
    if (!std::isfinite(x) || std::abs(x) > max_abs_argument) {
        throw DomainError("airy_ai: argument " + std::to_string(x) + " outside [-200, 200]");
    }
    if (std::abs(x) <= series_limit) return series(x);
    if (x < -series_limit && x >= oscillatory_limit) return taylor_from_anchor(x);

    constexpr double inv_sqrt_pi = std::numbers::inv_sqrtpi;
    AiryResult r;
    if (x > 0.0) {
        const double zeta = 2.0 / 3.0 * x * std::sqrt(x);
        const double quarter = std::sqrt(std::sqrt(x));
        const double decay = std::exp(-zeta);
        const TruncatedSum su = asymptotic_sum(asymptotic.u, 0, 1, zeta, true);
        const TruncatedSum sv = asymptotic_sum(asymptotic.v, 0, 1, zeta, true);
        const double prefactor = 0.5 * inv_sqrt_pi * decay / quarter;
        r.ai = prefactor * su.value;
        r.ai_prime = -0.5 * inv_sqrt_pi * quarter * decay * sv.value;
        r.est_abs_error = prefactor * (su.tail + 4.0 * eps * std::abs(su.value));
        return r;
    }

    const double z = -x;
    const double zeta = 2.0 / 3.0 * z * std::sqrt(z);
    const double quarter = std::sqrt(std::sqrt(z));
    const double phase = zeta - std::numbers::pi / 4.0;
    const double c = std::cos(phase);
    const double s = std::sin(phase);
    // Even and odd parts of the expansions, each with alternating signs.
    const TruncatedSum ue = asymptotic_sum(asymptotic.u, 0, 2, zeta, true);
    const TruncatedSum uo = asymptotic_sum(asymptotic.u, 1, 2, zeta, true);
    const TruncatedSum ve = asymptotic_sum(asymptotic.v, 0, 2, zeta, true);
    const TruncatedSum vo = asymptotic_sum(asymptotic.v, 1, 2, zeta, true);
    r.ai = inv_sqrt_pi / quarter * (c * ue.value + s * uo.value);
    r.ai_prime = inv_sqrt_pi * quarter * (s * ve.value - c * vo.value);
    // Rounding of the phase zeta dominates for large |x|.
    r.est_abs_error =
        inv_sqrt_pi / quarter * (ue.tail + uo.tail + 4.0 * eps * (1.0 + zeta));
    return r;
}

AiryResult airy_ai(double x) {
    static const AiryEvaluator evaluator;
    return evaluator(x);
}

double airy_oracle(double x, double tol) {
    if (!std::isfinite(x) || x < -50.0 || x > 20.0) {
        throw DomainError("airy_oracle: argument " + std::to_string(x) + " outside [-50, 20]");
    }
    if (!(tol >= 1e-14 && tol <= 1e-6)) {
        throw DomainError("airy_oracle: tolerance outside [1e-14, 1e-6]");
    }

    // Height of the shifted contour. For x > 1 it passes through the saddle at
    // i sqrt(x); for x < 0 it is lowered so that the prefactor e^{k|x|} stays
    // below e^2 and rounding in the oscillatory sum is not amplified.
    double kappa;
    if (x >= 1.0) {
        kappa = std::sqrt(x);
    } else if (x >= 0.0) {
        kappa = 1.0;
    } else {
        kappa = std::min(1.0, 2.0 / -x);
    }
    const double log_prefactor = kappa * kappa * kappa / 3.0 - kappa * x;
    const double prefactor = std::exp(log_prefactor) / std::numbers::pi;

    const double linear = x - kappa * kappa;
    auto integrand = [kappa, linear](double s) {
        return std::exp(-kappa * s * s) * std::cos(s * s * s / 3.0 + linear * s);
    };

    // Truncate where the Gaussian envelope is far below the requested tolerance.
    const double cutoff = std::sqrt(std::max(40.0, std::log(prefactor / tol) + 5.0) / kappa);

    // Split into pieces of roughly one local oscillation so that the adaptive
    // rule never has to bisect blindly through hundreds of periods.
    double total = 0.0;
    double error = 0.0;
    double l1 = 0.0;
    const double raw_tol = 0.25 * tol / prefactor;
    double a = 0.0;
    int pieces = 0;
    while (a < cutoff) {
        const double frequency = std::abs(a * a + linear) + 1.0;
        const double b = std::min(cutoff, a + 2.0 * std::numbers::pi / frequency);
        ++pieces;
        const QuadratureResult piece = adaptive_kronrod(integrand, a, b, raw_tol * (b - a) / cutoff, 20);
        total += piece.value;
        error += piece.error;
        l1 += piece.l1;
        a = b;
    }
    // Each piece's sum carries a few ulps of its L1 mass.
    const double abs_error = prefactor * (error + 4.0 * eps * l1 + eps * pieces * std::abs(total) / 4.0);
    if (!(abs_error <= tol) || !std::isfinite(total)) {
        throw ConvergenceFailure("airy_oracle: quadrature error estimate " + std::to_string(abs_error / tol) +
                                 " x tol at x = " + std::to_string(x));
    }
    return prefactor * total;
}

}  // namespace qgauge
