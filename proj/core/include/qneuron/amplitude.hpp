#pragma once

#include <cmath>
#include <complex>
#include <span>

namespace qneuron {

using Amplitude = std::complex<double>;

inline constexpr double two_pi = 6.283185307179586476925286766559;

/// Detection probability of a single amplitude, |z|^2.
inline double probability(const Amplitude& z) {
    return z.real() * z.real() + z.imag() * z.imag();
}

/// Coherent superposition: plain left-to-right sum.  Summation order is part
/// of the contract so that results are reproducible bit-for-bit.
inline Amplitude amplitude_sum(std::span<const Amplitude> amplitudes) {
    Amplitude acc{0.0, 0.0};
    for (const Amplitude& z : amplitudes) acc += z;
    return acc;
}

/// Upper bound for | |z|^2 - |z1|^2 |, tight when z and z1 are collinear:
///   | |z|^2 - |z1|^2 | = |z - z1| * |z + z1| <= |z - z1| * (|z| + |z1|).
inline double modsq_gap_bound(const Amplitude& z, const Amplitude& z1) {
    return std::abs(z - z1) * (std::abs(z) + std::abs(z1));
}

}  // namespace qneuron
