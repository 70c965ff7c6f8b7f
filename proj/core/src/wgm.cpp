#include "qneuron/wgm.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qneuron {

void validate(const WgmNeuron& neuron) {
    if (!(neuron.omega > 0.0) || !std::isfinite(neuron.omega))
        throw std::invalid_argument("WgmNeuron: omega must be positive");
    const std::size_t arity = input_arity(neuron);
    for (const Universe& u : neuron.universes) {
        if (u.multiplicity < 1)
            throw std::invalid_argument("WgmNeuron: multiplicity must be a positive integer");
        if (u.lengths.size() != arity)
            throw std::invalid_argument("WgmNeuron: inconsistent input arity across universes");
        for (double l : u.lengths)
            if (!(l > 0.0) || !std::isfinite(l))
                throw std::invalid_argument("WgmNeuron: waveguide lengths must be positive");
        if (!(u.bias_length > 0.0) || !std::isfinite(u.bias_length))
            throw std::invalid_argument("WgmNeuron: bias length must be positive");
    }
}

std::size_t input_arity(const WgmNeuron& neuron) {
    return neuron.universes.empty() ? 0 : neuron.universes.front().lengths.size();
}

Amplitude evaluate(const WgmNeuron& neuron, std::span<const double> x) {
    if (x.size() != input_arity(neuron) && !neuron.universes.empty())
        throw std::invalid_argument("WgmNeuron: input arity mismatch");
    Amplitude acc{0.0, 0.0};
    for (const Universe& u : neuron.universes) {
        double coeff = static_cast<double>(u.multiplicity) / u.bias_length;
        double phase = u.bias_length;
        for (std::size_t j = 0; j < u.lengths.size(); ++j) {
            coeff /= u.lengths[j];
            phase += u.lengths[j] * x[j];
        }
        acc += std::polar(coeff, neuron.omega * phase);
    }
    return acc;
}

double output(const WgmNeuron& neuron, std::span<const double> x) {
    return probability(evaluate(neuron, x));
}

std::vector<double> parameters(const WgmNeuron& neuron) {
    std::vector<double> params;
    params.reserve(neuron.universes.size() * (input_arity(neuron) + 1));
    for (const Universe& u : neuron.universes) {
        params.insert(params.end(), u.lengths.begin(), u.lengths.end());
        params.push_back(u.bias_length);
    }
    return params;
}

WgmNeuron with_parameters(const WgmNeuron& neuron, std::span<const double> params) {
    if (params.size() != neuron.universes.size() * (input_arity(neuron) + 1))
        throw std::invalid_argument("WgmNeuron: parameter count mismatch");
    WgmNeuron out = neuron;
    std::size_t i = 0;
    for (Universe& u : out.universes) {
        for (double& l : u.lengths) l = std::max(params[i++], 1e-9);
        u.bias_length = std::max(params[i++], 1e-9);
    }
    return out;
}

double model_output(const WgmNeuron& neuron, std::span<const double> x) {
    return output(neuron, x);
}

}  // namespace qneuron
