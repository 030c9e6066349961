#include "hyperind/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hyperind::bounds {

namespace {

using boost::multiprecision::cpp_int;

/// log of -log(1 - 2^{-r}) and friends, shared by the constant evaluators.
struct FormulaParts {
    double log_one_minus;     // log(1 - 2^{-r}), negative
    double log_neg_log;       // log(-log(1 - 2^{-r}))
    double log_poly;          // log(r (3r - 1))
    double log_denominator;   // log(r (3r-1) 2^r (-log(1 - 2^{-r})))
};

FormulaParts formula_parts(unsigned r) {
    const double two_pow_minus_r = std::exp2(-static_cast<double>(r));
    FormulaParts parts;
    parts.log_one_minus = std::log1p(-two_pow_minus_r);
    parts.log_neg_log = std::log(-parts.log_one_minus);
    parts.log_poly = std::log(static_cast<double>(r) * (3.0 * r - 1.0));
    parts.log_denominator =
        parts.log_poly + static_cast<double>(r) * std::log(2.0) + parts.log_neg_log;
    return parts;
}

} // namespace

double c_r_value(unsigned r) {
    if (r < 1) throw std::invalid_argument("c_r_value: r must be >= 1");
    const FormulaParts parts = formula_parts(r);
    const double log_c = (std::lgamma(static_cast<double>(r) + 1.0) - parts.log_denominator) /
                         static_cast<double>(r);
    return std::exp(log_c);
}

ConstantReport c_r_constant(unsigned r) {
    if (r < 2) throw std::invalid_argument("c_r_constant: r must be >= 2");
    ConstantReport report;
    report.r = r;
    report.c_r = c_r_value(r);
    report.asymptote_ratio = report.c_r * std::exp(1.0) / static_cast<double>(r);
    report.log_r_factorial = std::lgamma(static_cast<double>(r) + 1.0);
    report.r_factorial = std::exp(report.log_r_factorial);
    report.r_times_3r_minus_1 = static_cast<double>(r) * (3.0 * r - 1.0);
    report.two_pow_r = std::exp2(static_cast<double>(r));
    report.log_one_minus_2_pow_minus_r = formula_parts(r).log_one_minus;
    return report;
}

FlaggedValue main_lower_bound(double n, double d, unsigned r) {
    if (r < 2) throw std::invalid_argument("main_lower_bound: r must be >= 2");
    if (!(n > 0.0) || !(d > 0.0)) throw std::invalid_argument("main_lower_bound: need n, d > 0");
    if (d >= n) throw std::invalid_argument("main_lower_bound: requires d < n");
    const double log_ratio = std::log(n / d);
    if (log_ratio <= 0.0) return FlaggedValue{0.0, true};
    const double inner = std::log(n / d) + std::log(log_ratio);
    return FlaggedValue{c_r_value(r) * std::exp(inner / static_cast<double>(r)), false};
}

double chernoff_general(double variance, double cap, double lambda) {
    if (variance < 0.0 || cap <= 0.0 || lambda < 0.0) {
        throw std::invalid_argument("chernoff_general: need V >= 0, b > 0, lambda >= 0");
    }
    if (lambda == 0.0) return 1.0;
    return std::exp(-(lambda * lambda) / (2.0 * variance + cap * lambda));
}

double chernoff_binomial(double mu, double eps) {
    if (mu < 0.0 || eps < 0.0) {
        throw std::invalid_argument("chernoff_binomial: need mu >= 0, eps >= 0");
    }
    return std::min(1.0, 2.0 * std::exp(-eps * eps * mu / 2.0));
}

Lemma3Sum lemma3_sum(std::uint64_t k, double q, double b) {
    if (!(q > 0.0) || q > 1.0) throw std::invalid_argument("lemma3_sum: q must lie in (0, 1]");
    if (!(b > 0.0)) throw std::invalid_argument("lemma3_sum: b must be positive");
    Lemma3Sum result;
    result.asymptote = std::min(q * static_cast<double>(k), b);
    if (k == 0) return result;
    if (q == 1.0) {
        result.exact = std::min(static_cast<double>(k), b);
        return result;
    }
    const double log_q = std::log(q);
    const double log_1mq = std::log1p(-q);
    const double lg_k = std::lgamma(static_cast<double>(k) + 1.0);
    double sum = 0.0;
    double compensation = 0.0; // Neumaier
    for (std::uint64_t j = 1; j <= k; ++j) {
        const double log_pmf = lg_k - std::lgamma(static_cast<double>(j) + 1.0) -
                               std::lgamma(static_cast<double>(k - j) + 1.0) +
                               static_cast<double>(j) * log_q +
                               static_cast<double>(k - j) * log_1mq;
        const double term = std::exp(log_pmf) * std::min(static_cast<double>(j), b);
        const double t = sum + term;
        compensation += (std::abs(sum) >= std::abs(term)) ? (sum - t) + term : (term - t) + sum;
        sum = t;
    }
    result.exact = sum + compensation;
    return result;
}

Rational lemma3_sum_rational(unsigned k, const Rational& q, const Rational& b) {
    if (q <= 0 || q > 1) throw std::invalid_argument("lemma3_sum_rational: q must lie in (0, 1]");
    if (b <= 0) throw std::invalid_argument("lemma3_sum_rational: b must be positive");
    if (k > 5000) throw std::invalid_argument("lemma3_sum_rational: k too large for rational mode");
    const Rational one_minus_q = Rational(1) - q;
    Rational sum = 0;
    cpp_int binom = 1;
    Rational q_pow = 1;
    // (1-q)^{k-j} built from the top power downward.
    std::vector<Rational> one_minus_pows(k + 1);
    one_minus_pows[0] = 1;
    for (unsigned i = 1; i <= k; ++i) one_minus_pows[i] = one_minus_pows[i - 1] * one_minus_q;
    for (unsigned j = 0; j <= k; ++j) {
        const Rational capped = std::min(Rational(j), b);
        sum += Rational(binom) * q_pow * one_minus_pows[k - j] * capped;
        binom = binom * (k - j) / (j + 1);
        q_pow *= q;
    }
    return sum;
}

namespace {

double log_binomial(double n, double k) {
    if (k < 0.0 || k > n) return -std::numeric_limits<double>::infinity();
    return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

} // namespace

FirstMomentReport first_moment(double n, unsigned r, double d, double epsilon) {
    if (r < 2) throw std::invalid_argument("first_moment: r must be >= 2");
    if (!(n > r)) throw std::invalid_argument("first_moment: requires n > r");
    if (!(d >= 1.0)) throw std::invalid_argument("first_moment: requires d >= 1");
    if (!(epsilon > 0.0)) throw std::invalid_argument("first_moment: requires epsilon > 0");
    if (d > n - r) throw std::invalid_argument("first_moment: d may not exceed n - r (p <= 1)");

    FirstMomentReport report;
    report.n = n;
    report.r = r;
    report.d = d;
    report.epsilon = epsilon;
    report.p = d / (n - static_cast<double>(r));

    const double factorial_root =
        std::exp(std::lgamma(static_cast<double>(r) + 2.0) / static_cast<double>(r));
    const double body = std::exp(
        (std::log(n / d) + std::log(std::log(n))) / static_cast<double>(r));
    report.x = static_cast<std::uint64_t>(std::ceil((1.0 + epsilon) * factorial_root * body));
    report.x_exceeds_n = static_cast<double>(report.x) > n;

    const double x = static_cast<double>(report.x);
    const double sets_per_edge = log_binomial(x, static_cast<double>(r) + 1.0);
    const double log_one_minus_p = std::log1p(-report.p);
    double second_term;
    if (sets_per_edge == -std::numeric_limits<double>::infinity()) {
        second_term = 0.0; // x < r+1: no (r+1)-subsets at all
    } else {
        second_term = std::exp(sets_per_edge) * log_one_minus_p;
    }
    report.log_expected_count = log_binomial(n, x) + second_term;

    report.growth_lhs = (d / n) * std::pow(x - static_cast<double>(r), static_cast<double>(r) + 1.0) /
                        std::exp(std::lgamma(static_cast<double>(r) + 2.0));
    report.growth_rhs = x * std::log(n);
    return report;
}

RamseyReport ramsey_upper(unsigned r, double t, std::optional<double> c_override) {
    if (r < 2) throw std::invalid_argument("ramsey_upper: r must be >= 2");
    if (!(t >= 3.0)) throw std::invalid_argument("ramsey_upper: t must be >= 3");

    RamseyReport report;
    report.r = r;
    report.t = t;
    report.c = c_override.value_or(c_r_value(r - 1));
    report.small_t = t < 10.0;

    // c ((n log n)/t)^{1/(r-1)} >= t  <=>  n log n >= t (t/c)^{r-1}.
    const double log_target = std::log(t) + static_cast<double>(r - 1) * (std::log(t) - std::log(report.c));
    const double target = std::exp(log_target);

    // Solve n log n = target by Newton; the function is convex and the seed
    // target/log(target) starts below the root.
    double n = std::max(3.0, target / std::max(1.0, log_target));
    for (int iter = 0; iter < 100; ++iter) {
        const double f = n * std::log(n) - target;
        const double fp = std::log(n) + 1.0;
        const double next = n - f / fp;
        if (!(next > 0.0)) break;
        if (std::abs(next - n) <= 1e-12 * n) { n = next; break; }
        n = next;
    }
    report.n_upper = n;
    report.scaling = std::exp(static_cast<double>(r) * std::log(t)) / std::log(t);
    report.ratio_to_scaling = report.n_upper / report.scaling;
    return report;
}

} // namespace hyperind::bounds
