#include "qneuron/exp_sum.hpp"

#include <cmath>
#include <stdexcept>

namespace qneuron {

void validate(const ExpSum& sum) {
    if (!(sum.omega > 0.0) || !std::isfinite(sum.omega))
        throw std::invalid_argument("ExpSum: omega must be positive");
    const std::size_t arity = input_arity(sum);
    for (const ExpSumTerm& term : sum.terms) {
        if (!(term.amplitude >= 0.0) || !std::isfinite(term.amplitude))
            throw std::invalid_argument("ExpSum: amplitudes must be non-negative");
        if (term.frequencies.size() != arity)
            throw std::invalid_argument("ExpSum: inconsistent input arity across terms");
        for (double l : term.frequencies)
            if (!std::isfinite(l))
                throw std::invalid_argument("ExpSum: non-finite frequency");
        if (!std::isfinite(term.bias))
            throw std::invalid_argument("ExpSum: non-finite bias");
    }
}

std::size_t input_arity(const ExpSum& sum) {
    return sum.terms.empty() ? 0 : sum.terms.front().frequencies.size();
}

Amplitude evaluate(const ExpSum& sum, std::span<const double> x) {
    if (!sum.terms.empty() && x.size() != input_arity(sum))
        throw std::invalid_argument("ExpSum: input arity mismatch");
    Amplitude acc{0.0, 0.0};
    for (const ExpSumTerm& term : sum.terms) {
        double phase = term.bias;
        for (std::size_t j = 0; j < term.frequencies.size(); ++j)
            phase += term.frequencies[j] * x[j];
        acc += std::polar(term.amplitude, sum.omega * phase);
    }
    return acc;
}

void validate(const RectDomain& domain) {
    if (domain.intervals.empty())
        throw std::invalid_argument("RectDomain: at least one dimension required");
    for (const Interval& iv : domain.intervals)
        if (!(iv.lo < iv.hi) || !std::isfinite(iv.lo) || !std::isfinite(iv.hi))
            throw std::invalid_argument("RectDomain: intervals must satisfy lo < hi");
}

}  // namespace qneuron
