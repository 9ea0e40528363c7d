#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include "spinmem/pattern.hpp"
#include "spinmem/synapse.hpp"

namespace spinmem::nn {

/// Signum-neuron configuration. The bias term is carried explicitly but the
/// model fixes it at zero. Tie rule: an input signal exactly at the
/// threshold fires -1.
struct NeuronConfig {
    double theta = 0.0;
    double bias = 0.0;
};

enum class DecodeRule { nn, convolutional, hamming };

DecodeRule parse_rule(const std::string& name);
std::string rule_name(DecodeRule rule);

/// One pass through the two-layer network: exit neuron j fires +1 iff
/// h_j = sum_i w_ij * x_in_i + bias strictly exceeds its triggering level
/// x0_j * theta (theta oriented along the neuron's stored sign; a tie
/// fires -1).
codec::SpinPattern nn_decode(const SynapseMatrix& w, const NeuronConfig& cfg,
                             const codec::SpinPattern& x_in);

/// Q = sum_i x0_i * x_in_i; -N <= Q <= N, Q has the parity of N.
long long convolution(const codec::SpinPattern& x0, const codec::SpinPattern& x_in);

/// D = number of differing components; Q = N - 2D.
long long hamming_distance(const codec::SpinPattern& x0, const codec::SpinPattern& x_in);

/// Whether x_in is decoded back to x0 under the chosen rule. For an intact
/// learned matrix all three rules agree: nn output equals x0 iff
/// Q > theta/eta iff D < (N - theta/eta)/2.
bool classify(const codec::SpinPattern& x0, const NeuronConfig& cfg, double eta,
              const codec::SpinPattern& x_in, DecodeRule rule);

/// Same decision against an already-built (possibly damaged) matrix.
bool classify(const SynapseMatrix& w, const NeuronConfig& cfg,
              const codec::SpinPattern& x_in, DecodeRule rule);

}  // namespace spinmem::nn
