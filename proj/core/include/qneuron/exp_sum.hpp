#pragma once

#include <span>
#include <vector>

#include "qneuron/amplitude.hpp"

namespace qneuron {

/// One term A * exp(i*omega*(dot(frequencies, x) + bias)).  Unlike Universe,
/// amplitude is explicit and frequencies/bias may have either sign, which
/// makes this the natural carrier for truncated Fourier expansions.
struct ExpSumTerm {
    double amplitude = 0.0;  // >= 0
    std::vector<double> frequencies;
    double bias = 0.0;
};

struct ExpSum {
    double omega = two_pi;
    std::vector<ExpSumTerm> terms;
};

void validate(const ExpSum& sum);

std::size_t input_arity(const ExpSum& sum);

Amplitude evaluate(const ExpSum& sum, std::span<const double> x);

/// Closed interval [lo, hi], lo < hi.
struct Interval {
    double lo = 0.0;
    double hi = 1.0;
};

/// Axis-aligned box, one interval per input dimension.
struct RectDomain {
    std::vector<Interval> intervals;
};

void validate(const RectDomain& domain);

}  // namespace qneuron
