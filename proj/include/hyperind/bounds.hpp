#pragma once

#include <cstdint>
#include <optional>

#include <boost/multiprecision/cpp_int.hpp>

#include "hyperind/errors.hpp"

namespace hyperind::bounds {

using Rational = boost::multiprecision::cpp_rational;

/// The main lower-bound constant
///   c_r = ( r! / (-r(3r-1) 2^r log(1 - 2^{-r})) )^{1/r}
/// together with the raw formula inputs, for auditability.
struct ConstantReport {
    unsigned r = 2;
    double c_r = 0.0;
    /// c_r * e / r; tends to 1 as r grows.
    double asymptote_ratio = 0.0;
    double r_factorial = 0.0;      // overflows to inf past r = 170
    double log_r_factorial = 0.0;  // always finite
    double r_times_3r_minus_1 = 0.0;
    double two_pow_r = 0.0;
    double log_one_minus_2_pow_minus_r = 0.0;
};

ConstantReport c_r_constant(unsigned r); // requires r >= 2

/// Formula value alone; defined down to r = 1 (the Ramsey inversion
/// evaluates the constant one uniformity lower).
double c_r_value(unsigned r);

struct FlaggedValue {
    double value = 0.0;
    bool flagged = false;
};

/// c_r * ((n/d) log(n/d))^{1/r}. Requires d < n; a nonpositive log would be
/// reported as a flagged zero rather than a NaN.
FlaggedValue main_lower_bound(double n, double d, unsigned r);

/// exp(-lambda^2 / (2V + b lambda)); 1 at lambda = 0.
double chernoff_general(double variance, double cap, double lambda);

/// min(1, 2 exp(-eps^2 mu / 2)).
double chernoff_binomial(double mu, double eps);

struct Lemma3Sum {
    double exact = 0.0;     // sum_j C(k,j) q^j (1-q)^{k-j} min(j, b)
    double asymptote = 0.0; // min(qk, b)
};

/// Stable log-space evaluation of E[min(Binomial(k, q), b)].
Lemma3Sum lemma3_sum(std::uint64_t k, double q, double b);

/// Same sum in exact rational arithmetic (q, b rational; k <= 5000).
Rational lemma3_sum_rational(unsigned k, const Rational& q, const Rational& b);

struct FirstMomentReport {
    double n = 0.0;
    unsigned r = 2;
    double d = 1.0;
    double epsilon = 0.0;
    double p = 0.0;             // d / (n - r)
    std::uint64_t x = 0;        // ceil((1+eps) ((r+1)!)^{1/r} ((n/d) log n)^{1/r})
    double log_expected_count = 0.0;
    double growth_lhs = 0.0;    // (d/n) (x-r)^{r+1} / (r+1)!
    double growth_rhs = 0.0;    // x log n
    bool x_exceeds_n = false;
};

FirstMomentReport first_moment(double n, unsigned r, double d, double epsilon);

struct RamseyReport {
    unsigned r = 2;
    double t = 3.0;
    double c = 0.0;        // constant used in the inversion (overridable)
    double n_upper = 0.0;  // smallest n with c ((n log n)/t)^{1/(r-1)} >= t
    double scaling = 0.0;  // t^r / log t
    double ratio_to_scaling = 0.0;
    bool small_t = false;
};

/// Inverts the case split behind the Ramsey bound: below the returned n, a
/// 2-coloring avoiding the forbidden configuration in red forces a blue
/// complete r-graph on t vertices. c defaults to the lower-bound constant
/// at uniformity r (index r-1 in the formula).
RamseyReport ramsey_upper(unsigned r, double t, std::optional<double> c_override = {});

} // namespace hyperind::bounds
