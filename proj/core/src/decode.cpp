#include "spinmem/decode.hpp"

namespace spinmem::nn {

DecodeRule parse_rule(const std::string& name) {
    if (name == "nn") return DecodeRule::nn;
    if (name == "convolutional" || name == "conv") return DecodeRule::convolutional;
    if (name == "hamming") return DecodeRule::hamming;
    throw std::invalid_argument("unknown decode rule '" + name + "'");
}

std::string rule_name(DecodeRule rule) {
    switch (rule) {
        case DecodeRule::nn: return "nn";
        case DecodeRule::convolutional: return "convolutional";
        case DecodeRule::hamming: return "hamming";
    }
    throw std::logic_error("rule_name: bad enum");
}

codec::SpinPattern nn_decode(const SynapseMatrix& w, const NeuronConfig& cfg,
                             const codec::SpinPattern& x_in) {
    const std::size_t n = w.size();
    if (x_in.size() != n)
        throw std::invalid_argument("nn_decode: input dimension mismatch");
    const auto& x0 = w.reference();
    std::vector<std::int8_t> out(n);
    for (std::size_t j = 0; j < n; ++j) {
        double h = cfg.bias;
        for (std::size_t i = 0; i < n; ++i) h += w.weight(i, j) * x_in[i];
        // the threshold sits on the exit neuron's preferred-sign axis:
        // h_j = eta*x0_j*Q, so every exit neuron compares Q against theta/eta
        // and the network matches the convolutional rule on the whole grid.
        // Ties fall to -1.
        out[j] = h > x0[j] * cfg.theta ? +1 : -1;
    }
    return codec::SpinPattern(std::move(out));
}

long long convolution(const codec::SpinPattern& x0, const codec::SpinPattern& x_in) {
    if (x0.size() != x_in.size())
        throw std::invalid_argument("convolution: length mismatch");
    long long q = 0;
    for (std::size_t i = 0; i < x0.size(); ++i) q += x0[i] * x_in[i];
    return q;
}

long long hamming_distance(const codec::SpinPattern& x0, const codec::SpinPattern& x_in) {
    if (x0.size() != x_in.size())
        throw std::invalid_argument("hamming_distance: length mismatch");
    long long d = 0;
    for (std::size_t i = 0; i < x0.size(); ++i)
        if (x0[i] != x_in[i]) ++d;
    return d;
}

bool classify(const codec::SpinPattern& x0, const NeuronConfig& cfg, double eta,
              const codec::SpinPattern& x_in, DecodeRule rule) {
    if (eta <= 0.0) throw std::invalid_argument("classify: eta must be > 0");
    switch (rule) {
        case DecodeRule::nn:
            return nn_decode(SynapseMatrix::learn(x0, eta), cfg, x_in) == x0;
        case DecodeRule::convolutional:
            return static_cast<double>(convolution(x0, x_in)) > cfg.theta / eta;
        case DecodeRule::hamming: {
            const auto n = static_cast<double>(x0.size());
            return static_cast<double>(hamming_distance(x0, x_in)) <
                   (n - cfg.theta / eta) / 2.0;
        }
    }
    throw std::logic_error("classify: bad enum");
}

bool classify(const SynapseMatrix& w, const NeuronConfig& cfg,
              const codec::SpinPattern& x_in, DecodeRule rule) {
    switch (rule) {
        case DecodeRule::nn:
            return nn_decode(w, cfg, x_in) == w.reference();
        case DecodeRule::convolutional:
            return static_cast<double>(convolution(w.reference(), x_in)) >
                   cfg.theta / w.eta();
        case DecodeRule::hamming: {
            const auto n = static_cast<double>(w.size());
            return static_cast<double>(hamming_distance(w.reference(), x_in)) <
                   (n - cfg.theta / w.eta()) / 2.0;
        }
    }
    throw std::logic_error("classify: bad enum");
}

}  // namespace spinmem::nn
