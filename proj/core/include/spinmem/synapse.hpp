#pragma once

#include <cstddef>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "spinmem/pattern.hpp"

namespace spinmem::nn {

/// Structural damage: killed entrance neurons (whole outgoing weight rows
/// zeroed) and individually disrupted entrance->exit links. Indices 0-based.
struct DamageSpec {
    std::set<std::size_t> killed_entrance;
    std::set<std::pair<std::size_t, std::size_t>> disrupted_links;

    bool empty() const { return killed_entrance.empty() && disrupted_links.empty(); }

    /// Text form, 1-based: "kill:3,7;cut:(1,2),(4,9)". Round-trippable.
    static DamageSpec parse(const std::string& text);
    std::string str() const;
};

/// Perfectly learned one-pattern synapse matrix, w[i][j] = eta * x0_i * x0_j
/// with i the entrance index and j the exit index. Rank 1 and symmetric
/// until structural damage zeroes entries.
class SynapseMatrix {
public:
    static SynapseMatrix learn(const codec::SpinPattern& x0, double eta);

    std::size_t size() const { return x0_.size(); }
    double eta() const { return eta_; }
    const codec::SpinPattern& reference() const { return x0_; }
    double weight(std::size_t entrance, std::size_t exit) const {
        return weights_[entrance * size() + exit];
    }

    /// Copy with the listed neurons/links zeroed; reference and eta unchanged.
    SynapseMatrix damaged(const DamageSpec& spec) const;

private:
    SynapseMatrix(codec::SpinPattern x0, double eta, std::vector<double> weights)
        : x0_(std::move(x0)), eta_(eta), weights_(std::move(weights)) {}

    codec::SpinPattern x0_;
    double eta_;
    std::vector<double> weights_;  // row-major, row = entrance neuron
};

}  // namespace spinmem::nn
