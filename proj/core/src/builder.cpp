#include "qneuron/builder.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

namespace qneuron {

namespace {

/// Does f look periodic along dimension `dim`?  Compares the two opposite
/// faces at a handful of probe points.
bool probe_periodic(const TargetFn& f, const RectDomain& domain, std::size_t dim) {
    static constexpr double fractions[] = {0.0, 0.5, 0.25, 0.75, 0.375};
    const std::size_t d = domain.intervals.size();
    std::vector<double> a(d), b(d);
    for (double frac : fractions) {
        for (std::size_t j = 0; j < d; ++j) {
            const Interval& iv = domain.intervals[j];
            a[j] = b[j] = iv.lo + frac * (iv.hi - iv.lo);
        }
        a[dim] = domain.intervals[dim].lo;
        b[dim] = domain.intervals[dim].hi;
        const double fa = f(a), fb = f(b);
        if (std::abs(fa - fb) > 1e-9 * std::max({1.0, std::abs(fa), std::abs(fb)}))
            return false;
    }
    return true;
}

/// In-place DFT along one dimension of a flat row-major tensor:
///   out[k+B] = (1/M) * sum_m in[m] * exp(-i*2*pi*(k)*m/M),  k in [-B, B].
void transform_dim(std::vector<Amplitude>& data, const std::vector<std::size_t>& dims,
                   std::size_t dim) {
    const std::size_t m_count = dims[dim];
    const std::int64_t band = (static_cast<std::int64_t>(m_count) - 1) / 2;
    std::size_t stride = 1;
    for (std::size_t j = dim + 1; j < dims.size(); ++j) stride *= dims[j];
    const std::size_t block = stride * m_count;

    std::vector<Amplitude> line(m_count), coeffs(m_count);
    for (std::size_t base = 0; base < data.size(); base += block) {
        for (std::size_t off = 0; off < stride; ++off) {
            for (std::size_t m = 0; m < m_count; ++m)
                line[m] = data[base + off + m * stride];
            for (std::int64_t k = -band; k <= band; ++k) {
                Amplitude acc{0.0, 0.0};
                for (std::size_t m = 0; m < m_count; ++m)
                    acc += line[m] * std::polar(1.0, -two_pi * static_cast<double>(k) *
                                                         static_cast<double>(m) /
                                                         static_cast<double>(m_count));
                coeffs[static_cast<std::size_t>(k + band)] = acc / static_cast<double>(m_count);
            }
            for (std::size_t m = 0; m < m_count; ++m)
                data[base + off + m * stride] = coeffs[m];
        }
    }
}

}  // namespace

ExpSum fourier_sqrt(const TargetFn& f, const RectDomain& domain, double omega,
                    std::span<const int> orders, DomainExtension extension,
                    double coefficient_cutoff) {
    validate(domain);
    const std::size_t d = domain.intervals.size();
    if (!f) throw std::invalid_argument("fourier_sqrt: target function required");
    if (!(omega > 0.0) || !std::isfinite(omega))
        throw std::invalid_argument("fourier_sqrt: omega must be positive");
    if (orders.size() != d)
        throw std::invalid_argument("fourier_sqrt: one truncation order per dimension required");
    for (int order : orders)
        if (order < 0) throw std::invalid_argument("fourier_sqrt: orders must be non-negative");
    if (!(coefficient_cutoff >= 0.0))
        throw std::invalid_argument("fourier_sqrt: cutoff must be non-negative");

    std::vector<bool> periodic(d);
    for (std::size_t j = 0; j < d; ++j) {
        switch (extension) {
            case DomainExtension::periodic: periodic[j] = true; break;
            case DomainExtension::mirrored: periodic[j] = false; break;
            case DomainExtension::automatic: periodic[j] = probe_periodic(f, domain, j); break;
        }
    }

    std::vector<std::size_t> dims(d);
    std::vector<double> periods(d);
    std::size_t total = 1;
    for (std::size_t j = 0; j < d; ++j) {
        const double width = domain.intervals[j].hi - domain.intervals[j].lo;
        periods[j] = periodic[j] ? width : 2.0 * width;
        dims[j] = 2 * static_cast<std::size_t>(orders[j]) + 1;
        total *= dims[j];
    }

    // Sample sqrt(f) on the uniform grid of one effective period per dimension,
    // folding mirrored dimensions back into the box.
    std::vector<Amplitude> data(total);
    std::vector<std::size_t> idx(d, 0);
    std::vector<double> x(d);
    for (std::size_t flat = 0; flat < total; ++flat) {
        for (std::size_t j = 0; j < d; ++j) {
            const Interval& iv = domain.intervals[j];
            const double width = iv.hi - iv.lo;
            double t = static_cast<double>(idx[j]) * periods[j] / static_cast<double>(dims[j]);
            if (!periodic[j] && t > width) t = 2.0 * width - t;
            x[j] = iv.lo + t;
        }
        const double value = f(x);
        if (!std::isfinite(value))
            throw std::domain_error("fourier_sqrt: target is not finite at a sample point");
        if (value < 0.0)
            throw std::domain_error("fourier_sqrt: target is negative at a sample point");
        data[flat] = Amplitude{std::sqrt(value), 0.0};
        for (std::size_t j = d; j-- > 0;) {
            if (++idx[j] < dims[j]) break;
            idx[j] = 0;
        }
    }

    for (std::size_t j = 0; j < d; ++j) transform_dim(data, dims, j);

    ExpSum sum;
    sum.omega = omega;
    std::fill(idx.begin(), idx.end(), 0);
    for (std::size_t flat = 0; flat < total; ++flat) {
        Amplitude c = data[flat];
        ExpSumTerm term;
        term.frequencies.resize(d);
        double lo_phase = 0.0;
        for (std::size_t j = 0; j < d; ++j) {
            const std::int64_t k =
                static_cast<std::int64_t>(idx[j]) - static_cast<std::int64_t>(orders[j]);
            term.frequencies[j] = two_pi * static_cast<double>(k) / (omega * periods[j]);
            lo_phase += two_pi * static_cast<double>(k) * domain.intervals[j].lo / periods[j];
        }
        // Basis functions are exp(i*2*pi*k*(x - lo)/P); absorb the -lo part here
        // so terms read exp(i*omega*(freq . x + bias)).
        c *= std::polar(1.0, -lo_phase);
        if (std::abs(c) >= coefficient_cutoff && std::abs(c) > 0.0) {
            term.amplitude = std::abs(c);
            term.bias = std::arg(c) / omega;
            sum.terms.push_back(std::move(term));
        }
        for (std::size_t j = d; j-- > 0;) {
            if (++idx[j] < dims[j]) break;
            idx[j] = 0;
        }
    }
    return sum;
}

ExpSum fourier_sqrt(const TargetFn& f, const RectDomain& domain, double omega, int order,
                    DomainExtension extension, double coefficient_cutoff) {
    std::vector<int> orders(domain.intervals.size(), order);
    return fourier_sqrt(f, domain, omega, orders, extension, coefficient_cutoff);
}

ExpSum positivize(const ExpSum& sum) {
    validate(sum);
    if (sum.terms.empty()) return sum;
    double min_freq = std::numeric_limits<double>::infinity();
    double min_bias = std::numeric_limits<double>::infinity();
    for (const ExpSumTerm& term : sum.terms) {
        for (double l : term.frequencies) min_freq = std::min(min_freq, l);
        min_bias = std::min(min_bias, term.bias);
    }
    const double freq_shift = std::max(0.0, -min_freq) + 1.0;
    const double bias_shift = std::max(0.0, -min_bias) + 1.0;
    ExpSum out = sum;
    for (ExpSumTerm& term : out.terms) {
        for (double& l : term.frequencies) l += freq_shift;
        term.bias += bias_shift;
    }
    return out;
}

double amplitude_radius(const ExpSum& sum) {
    double radius = 0.0;
    for (const ExpSumTerm& term : sum.terms) radius += term.amplitude;
    return radius;
}

WgmNeuron round_to_wgm(const ExpSum& sum, double L) {
    validate(sum);
    if (!(L > 0.0) || !std::isfinite(L))
        throw std::invalid_argument("round_to_wgm: scale L must be positive");
    for (const ExpSumTerm& term : sum.terms) {
        for (double l : term.frequencies)
            if (!(l > 0.0))
                throw std::invalid_argument("round_to_wgm: input must be positivized (frequencies > 0)");
        if (!(term.bias > 0.0))
            throw std::invalid_argument("round_to_wgm: input must be positivized (biases > 0)");
    }
    WgmNeuron neuron;
    neuron.omega = sum.omega;
    neuron.universes.reserve(sum.terms.size());
    for (const ExpSumTerm& term : sum.terms) {
        double prod = 1.0;
        for (double l : term.frequencies) prod *= l;
        const double a = term.amplitude * prod * (L + term.bias);
        if (!(a < 9.0e18))
            throw std::overflow_error("round_to_wgm: multiplicity exceeds 64-bit range");
        Universe u;
        u.multiplicity = static_cast<std::int64_t>(std::floor(a)) + 1;
        u.lengths = term.frequencies;
        u.bias_length = L + term.bias;
        neuron.universes.push_back(std::move(u));
    }
    return neuron;
}

double rounding_bound(const ExpSum& sum, double L) {
    double bound = 0.0;
    for (const ExpSumTerm& term : sum.terms) {
        double prod = 1.0;
        for (double l : term.frequencies) prod *= l;
        bound += 1.0 / (prod * (L + term.bias));
    }
    return bound;
}

double sup_grid_error(const TargetFn& f,
                      const std::function<double(std::span<const double>)>& g,
                      const RectDomain& domain, int points_per_dim) {
    validate(domain);
    if (points_per_dim < 2)
        throw std::invalid_argument("sup_grid_error: at least two points per dimension");
    const std::size_t d = domain.intervals.size();
    const std::size_t pts = static_cast<std::size_t>(points_per_dim);
    std::size_t total = 1;
    for (std::size_t j = 0; j < d; ++j) total *= pts;
    std::vector<std::size_t> idx(d, 0);
    std::vector<double> x(d);
    double sup = 0.0;
    for (std::size_t flat = 0; flat < total; ++flat) {
        for (std::size_t j = 0; j < d; ++j) {
            const Interval& iv = domain.intervals[j];
            x[j] = iv.lo + (iv.hi - iv.lo) * static_cast<double>(idx[j]) /
                               static_cast<double>(pts - 1);
        }
        sup = std::max(sup, std::abs(f(x) - g(x)));
        for (std::size_t j = d; j-- > 0;) {
            if (++idx[j] < pts) break;
            idx[j] = 0;
        }
    }
    return sup;
}

BuildResult build(const TargetFn& f, const RectDomain& domain, double epsilon, double omega,
                  const BuildOptions& options) {
    validate(domain);
    if (!(epsilon > 0.0) || !std::isfinite(epsilon))
        throw std::invalid_argument("build: epsilon must be positive");
    if (options.initial_order < 0 || options.max_order < std::max(options.initial_order, 1))
        throw std::invalid_argument("build: invalid order range");
    const std::size_t d = domain.intervals.size();
    const int grid = options.validation_points_per_dim > 0 ? options.validation_points_per_dim
                     : (d == 1 ? 201 : 51);

    ExpSum g0;
    int order_used = -1;
    for (int order = options.initial_order;;) {
        g0 = fourier_sqrt(f, domain, omega, order, options.extension,
                          options.coefficient_cutoff);
        const double err = sup_grid_error(
            f, [&](std::span<const double> x) { return probability(evaluate(g0, x)); },
            domain, grid);
        if (err < epsilon / 2.0) {
            order_used = order;
            break;
        }
        if (order >= options.max_order)
            throw std::runtime_error(
                "build: truncation order cap reached before the epsilon/2 target");
        order = std::min(order == 0 ? 1 : 2 * order, options.max_order);
    }

    const ExpSum g1 = positivize(g0);
    const double radius = amplitude_radius(g1);
    // delta solves delta*(2*radius + delta) = epsilon/2 exactly.
    const double delta = -radius + std::sqrt(radius * radius + epsilon / 2.0);
    double inv_prod_sum = 0.0;
    for (const ExpSumTerm& term : g1.terms) {
        double prod = 1.0;
        for (double l : term.frequencies) prod *= l;
        inv_prod_sum += 1.0 / prod;
    }
    const double L = g1.terms.empty() ? 1.0 : inv_prod_sum / delta;

    BuildResult result;
    result.neuron = round_to_wgm(g1, L);
    result.approximant = g1;
    result.report.order = order_used;
    result.report.universe_count = result.neuron.universes.size();
    result.report.scale = L;
    result.report.epsilon = epsilon;
    result.report.grid_points_per_dim = grid;
    result.report.sup_error = sup_grid_error(
        f,
        [&](std::span<const double> x) { return output(result.neuron, x); },
        domain, grid);
    if (!(result.report.sup_error < epsilon))
        throw std::runtime_error("build: rounded neuron exceeded the epsilon budget");
    return result;
}

}  // namespace qneuron
