#include <doctest.h>

#include <cstdint>

#include "spinmem/decode.hpp"
#include "spinmem/mask.hpp"
#include "spinmem/synapse.hpp"

using namespace spinmem;
using namespace spinmem::codec;
using namespace spinmem::nn;

namespace {

SpinPattern pattern_from_bits(std::uint64_t bits, int n) {
    std::vector<std::int8_t> c(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) c[i] = (bits >> i) & 1 ? +1 : -1;
    return SpinPattern(std::move(c));
}

}  // namespace

TEST_CASE("learn: rank-1 outer product scaled by eta") {
    auto x0 = SpinPattern::parse("+-++-");
    auto w1 = SynapseMatrix::learn(x0, 1.0);
    auto w2 = SynapseMatrix::learn(x0, 2.0);
    for (std::size_t i = 0; i < 5; ++i) {
        CHECK(w1.weight(i, i) == 1.0);  // x0_i^2 = 1
        for (std::size_t j = 0; j < 5; ++j) {
            CHECK(w1.weight(i, j) == x0[i] * x0[j]);
            CHECK(w1.weight(i, j) == w1.weight(j, i));
            CHECK(w2.weight(i, j) == 2.0 * w1.weight(i, j));
        }
    }
    auto all_plus = SynapseMatrix::learn(SpinPattern::parse("+++"), 1.0);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) CHECK(all_plus.weight(i, j) == 1.0);
    CHECK_THROWS_AS(SynapseMatrix::learn(x0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(SynapseMatrix::learn(x0, -1.0), std::invalid_argument);
}

TEST_CASE("structural damage zeroes exactly the listed entries") {
    auto x0 = SpinPattern::parse("+-++-++--");
    auto w = SynapseMatrix::learn(x0, 1.0);

    SUBCASE("empty spec is the identity") {
        auto d = w.damaged({});
        for (std::size_t i = 0; i < 9; ++i)
            for (std::size_t j = 0; j < 9; ++j) CHECK(d.weight(i, j) == w.weight(i, j));
    }
    SUBCASE("killing every entrance neuron zeroes the matrix") {
        DamageSpec spec;
        for (std::size_t i = 0; i < 9; ++i) spec.killed_entrance.insert(i);
        auto d = w.damaged(spec);
        for (std::size_t i = 0; i < 9; ++i)
            for (std::size_t j = 0; j < 9; ++j) CHECK(d.weight(i, j) == 0.0);
    }
    SUBCASE("10 random cuts leave exactly 10 zero entries") {
        DamageSpec spec;
        NoiseSource noise(31);
        while (spec.disrupted_links.size() < 10)
            spec.disrupted_links.insert({static_cast<std::size_t>(noise.below(9)),
                                         static_cast<std::size_t>(noise.below(9))});
        auto d = w.damaged(spec);
        int zeros = 0;
        for (std::size_t i = 0; i < 9; ++i)
            for (std::size_t j = 0; j < 9; ++j)
                if (d.weight(i, j) == 0.0) ++zeros;
        CHECK(zeros == 10);
        CHECK(d.reference() == x0);
        CHECK(d.eta() == 1.0);
    }
    SUBCASE("out-of-range indices rejected") {
        DamageSpec spec;
        spec.killed_entrance.insert(9);
        CHECK_THROWS_AS(w.damaged(spec), std::invalid_argument);
    }
}

TEST_CASE("damage spec text form round-trips (1-based)") {
    auto spec = DamageSpec::parse("kill:3,7;cut:(1,2),(4,9)");
    CHECK(spec.killed_entrance == std::set<std::size_t>{2, 6});
    CHECK(spec.disrupted_links ==
          std::set<std::pair<std::size_t, std::size_t>>{{0, 1}, {3, 8}});
    CHECK(DamageSpec::parse(spec.str()).str() == spec.str());
    CHECK(DamageSpec::parse("").empty());
    CHECK_THROWS_AS(DamageSpec::parse("kill:0"), std::invalid_argument);
    CHECK_THROWS_AS(DamageSpec::parse("chop:1"), std::invalid_argument);
    CHECK_THROWS_AS(DamageSpec::parse("cut:(1)"), std::invalid_argument);
}

TEST_CASE("nn_decode fixed points") {
    auto x0 = SpinPattern::parse("+-++-++--");
    auto w = SynapseMatrix::learn(x0, 1.0);
    NeuronConfig cfg{0.0, 0.0};
    CHECK(nn_decode(w, cfg, x0) == x0);
    CHECK(nn_decode(w, cfg, x0.negated()) == x0.negated());
    CHECK_THROWS_AS(nn_decode(w, cfg, SpinPattern::parse("+-+")), std::invalid_argument);
}

TEST_CASE("inputs within Hamming distance 2 of x0 are always retrieved at theta=0") {
    auto x0 = SpinPattern::parse("+-++-++--");
    auto w = SynapseMatrix::learn(x0, 1.0);
    NeuronConfig cfg{0.0, 0.0};
    for (std::uint64_t bits = 0; bits < 512; ++bits) {
        auto x_in = pattern_from_bits(bits, 9);
        if (hamming_distance(x0, x_in) == 2) {
            CHECK(convolution(x0, x_in) == 5);
            CHECK(nn_decode(w, cfg, x_in) == x0);
        }
    }
}

TEST_CASE("convolution and Hamming distance: Q = N - 2D over all 512 inputs") {
    auto x0 = SpinPattern::parse("+-++-++--");
    CHECK(convolution(x0, x0) == 9);
    CHECK(convolution(x0, x0.negated()) == -9);
    CHECK(hamming_distance(x0, x0) == 0);
    CHECK(hamming_distance(x0, x0.negated()) == 9);
    for (std::uint64_t bits = 0; bits < 512; ++bits) {
        auto x_in = pattern_from_bits(bits, 9);
        const auto q = convolution(x0, x_in);
        const auto d = hamming_distance(x0, x_in);
        CHECK(q == 9 - 2 * d);
        CHECK(q >= -9);
        CHECK(q <= 9);
        CHECK((q - 9) % 2 == 0);
    }
    CHECK_THROWS_AS(convolution(x0, SpinPattern::parse("++")), std::invalid_argument);
}

TEST_CASE("three decoding rules agree on every input for an intact matrix") {
    auto x0 = SpinPattern::parse("+-++-++--");
    for (double eta : {0.5, 1.0, 2.0}) {
        auto w = SynapseMatrix::learn(x0, eta);
        for (int theta = -10; theta <= 8; theta += 2) {
            NeuronConfig cfg{static_cast<double>(theta), 0.0};
            for (std::uint64_t bits = 0; bits < 512; ++bits) {
                auto x_in = pattern_from_bits(bits, 9);
                const bool a = classify(w, cfg, x_in, DecodeRule::nn);
                const bool b = classify(w, cfg, x_in, DecodeRule::convolutional);
                const bool h = classify(w, cfg, x_in, DecodeRule::hamming);
                CHECK(a == b);
                CHECK(b == h);
            }
        }
    }
}

TEST_CASE("eta scaling: classify(eta, theta) equals classify(1, theta/eta)") {
    auto x0 = SpinPattern::parse("+-++-++--");
    for (double eta : {0.5, 1.0, 2.0, 10.0}) {
        for (int theta = -10; theta <= 8; theta += 2) {
            NeuronConfig scaled{static_cast<double>(theta), 0.0};
            NeuronConfig unit{static_cast<double>(theta) / eta, 0.0};
            for (std::uint64_t bits = 0; bits < 512; ++bits) {
                auto x_in = pattern_from_bits(bits, 9);
                CHECK(classify(x0, scaled, eta, x_in, DecodeRule::nn) ==
                      classify(x0, unit, 1.0, x_in, DecodeRule::nn));
            }
        }
    }
}

TEST_CASE("tie rule: h exactly at theta fires -1") {
    // all-plus x0, input with D = 2 gives Q = 1 everywhere, so h_j = 1
    auto x0 = SpinPattern::parse("+++++");
    auto w = SynapseMatrix::learn(x0, 1.0);
    auto x_in = SpinPattern::parse("--+++");
    CHECK(convolution(x0, x_in) == 1);
    NeuronConfig at_tie{1.0, 0.0};
    auto out = nn_decode(w, at_tie, x_in);
    for (std::size_t j = 0; j < 5; ++j) CHECK(out[j] == -1);
    // just below the tie the same input is retrieved
    NeuronConfig below{0.0, 0.0};
    CHECK(nn_decode(w, below, x_in) == x0);
}

TEST_CASE("classify success and failure endpoints") {
    auto x0 = SpinPattern::parse("+-++-++--");
    NeuronConfig cfg{0.0, 0.0};
    for (auto rule : {DecodeRule::nn, DecodeRule::convolutional, DecodeRule::hamming}) {
        CHECK(classify(x0, cfg, 1.0, x0, rule));
        CHECK_FALSE(classify(x0, cfg, 1.0, x0.negated(), rule));
    }
}

TEST_CASE("damaged recognition holds iff every +1 exit neuron keeps an intact in-link") {
    auto x0 = SpinPattern::parse("+-++-++--");
    auto w = SynapseMatrix::learn(x0, 1.0);
    NeuronConfig cfg{0.0, 0.0};

    SUBCASE("pure neuron killing with N_k < N always recognizes x0") {
        NoiseSource noise(77);
        for (int trial = 0; trial < 20; ++trial) {
            DamageSpec spec;
            auto mask = sample_mask(9, 8, noise);
            for (std::size_t i = 0; i < 9; ++i)
                if (mask.marked(i)) spec.killed_entrance.insert(i);
            CHECK(nn_decode(w.damaged(spec), cfg, x0) == x0);
        }
    }
    SUBCASE("random cut sets: recognition matches the link-coverage condition") {
        NoiseSource noise(78);
        for (int trial = 0; trial < 50; ++trial) {
            DamageSpec spec;
            const auto cuts = 1 + noise.below(70);
            while (spec.disrupted_links.size() < cuts)
                spec.disrupted_links.insert({static_cast<std::size_t>(noise.below(9)),
                                             static_cast<std::size_t>(noise.below(9))});
            auto dw = w.damaged(spec);
            bool covered = true;
            for (std::size_t j = 0; j < 9; ++j) {
                if (x0[j] != +1) continue;
                int intact = 0;
                for (std::size_t i = 0; i < 9; ++i)
                    if (dw.weight(i, j) != 0.0) ++intact;
                if (intact == 0) covered = false;
            }
            CHECK((nn_decode(dw, cfg, x0) == x0) == covered);
        }
    }
    SUBCASE("fully killed network cannot output any +1") {
        DamageSpec spec;
        for (std::size_t i = 0; i < 9; ++i) spec.killed_entrance.insert(i);
        auto out = nn_decode(w.damaged(spec), cfg, x0);
        for (std::size_t j = 0; j < 9; ++j) CHECK(out[j] == -1);
    }
}
