#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "spinmem/noise.hpp"

namespace spinmem::codec {

/// Dense pattern of N signs, every component exactly +1 or -1.
class SpinPattern {
public:
    explicit SpinPattern(std::vector<std::int8_t> components)
        : components_(std::move(components)) {
        if (components_.empty())
            throw std::invalid_argument("SpinPattern: length must be >= 1");
        for (auto c : components_)
            if (c != +1 && c != -1)
                throw std::invalid_argument("SpinPattern: components must be +1 or -1");
    }

    static SpinPattern all_plus(std::size_t n) {
        return SpinPattern(std::vector<std::int8_t>(n, +1));
    }

    static SpinPattern random(std::size_t n, NoiseSource& noise) {
        std::vector<std::int8_t> c(n);
        for (auto& v : c) v = static_cast<std::int8_t>(noise.sign());
        return SpinPattern(std::move(c));
    }

    /// Text form: one of "+-" per component, e.g. "+-++-".
    static SpinPattern parse(std::string_view text) {
        std::vector<std::int8_t> c;
        c.reserve(text.size());
        for (char ch : text) {
            if (ch == '+') c.push_back(+1);
            else if (ch == '-') c.push_back(-1);
            else throw std::invalid_argument(std::string("SpinPattern: bad character '") + ch + "'");
        }
        return SpinPattern(std::move(c));
    }

    std::string str() const {
        std::string s;
        s.reserve(size());
        for (auto c : components_) s.push_back(c > 0 ? '+' : '-');
        return s;
    }

    std::size_t size() const { return components_.size(); }
    int operator[](std::size_t i) const { return components_[i]; }

    SpinPattern negated() const {
        auto c = components_;
        for (auto& v : c) v = static_cast<std::int8_t>(-v);
        return SpinPattern(std::move(c));
    }

    friend bool operator==(const SpinPattern& a, const SpinPattern& b) {
        return a.components_ == b.components_;
    }
    friend bool operator!=(const SpinPattern& a, const SpinPattern& b) { return !(a == b); }

    const std::vector<std::int8_t>& components() const { return components_; }

private:
    std::vector<std::int8_t> components_;
};

/// Sparse pattern over {-1, 0, +1}; zeros are silent channels.
class TernaryPattern {
public:
    explicit TernaryPattern(std::vector<std::int8_t> components)
        : components_(std::move(components)) {
        if (components_.empty())
            throw std::invalid_argument("TernaryPattern: length must be >= 1");
        for (auto c : components_)
            if (c < -1 || c > +1)
                throw std::invalid_argument("TernaryPattern: components must be -1, 0 or +1");
    }

    /// Text form adds '0' for silent channels, e.g. "+-0+".
    static TernaryPattern parse(std::string_view text) {
        std::vector<std::int8_t> c;
        c.reserve(text.size());
        for (char ch : text) {
            if (ch == '+') c.push_back(+1);
            else if (ch == '-') c.push_back(-1);
            else if (ch == '0') c.push_back(0);
            else throw std::invalid_argument(std::string("TernaryPattern: bad character '") + ch + "'");
        }
        return TernaryPattern(std::move(c));
    }

    std::string str() const {
        std::string s;
        s.reserve(size());
        for (auto c : components_) s.push_back(c > 0 ? '+' : (c < 0 ? '-' : '0'));
        return s;
    }

    std::size_t size() const { return components_.size(); }
    int operator[](std::size_t i) const { return components_[i]; }

private:
    std::vector<std::int8_t> components_;
};

}  // namespace spinmem::codec
