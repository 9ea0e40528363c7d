#include "spinmem/synapse.hpp"

#include <charconv>
#include <sstream>

namespace spinmem::nn {

SynapseMatrix SynapseMatrix::learn(const codec::SpinPattern& x0, double eta) {
    if (eta <= 0.0) throw std::invalid_argument("learn: eta must be > 0");
    const std::size_t n = x0.size();
    std::vector<double> w(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            w[i * n + j] = eta * x0[i] * x0[j];
    return SynapseMatrix(x0, eta, std::move(w));
}

SynapseMatrix SynapseMatrix::damaged(const DamageSpec& spec) const {
    const std::size_t n = size();
    for (auto k : spec.killed_entrance)
        if (k >= n) throw std::invalid_argument("damaged: killed-neuron index out of range");
    for (auto& [i, j] : spec.disrupted_links)
        if (i >= n || j >= n)
            throw std::invalid_argument("damaged: disrupted-link index out of range");

    SynapseMatrix out = *this;
    for (auto k : spec.killed_entrance)
        for (std::size_t j = 0; j < n; ++j) out.weights_[k * n + j] = 0.0;
    for (auto& [i, j] : spec.disrupted_links) out.weights_[i * n + j] = 0.0;
    return out;
}

namespace {

std::size_t parse_index(std::string_view s) {
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || v == 0)
        throw std::invalid_argument("DamageSpec: bad index '" + std::string(s) + "' (1-based)");
    return v - 1;  // text form is 1-based
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> parts;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        auto next = s.find(sep, pos);
        if (next == std::string_view::npos) next = s.size();
        parts.push_back(s.substr(pos, next - pos));
        pos = next + 1;
    }
    return parts;
}

}  // namespace

DamageSpec DamageSpec::parse(const std::string& text) {
    DamageSpec spec;
    if (text.empty()) return spec;
    for (auto section : split(text, ';')) {
        if (section.empty()) continue;
        if (section.starts_with("kill:")) {
            for (auto item : split(section.substr(5), ',')) {
                if (item.empty()) continue;
                if (!spec.killed_entrance.insert(parse_index(item)).second)
                    throw std::invalid_argument("DamageSpec: duplicate killed neuron");
            }
        } else if (section.starts_with("cut:")) {
            // pairs look like (1,2),(4,9); split on "),(" boundaries
            std::string_view body = section.substr(4);
            while (!body.empty()) {
                if (body.front() != '(')
                    throw std::invalid_argument("DamageSpec: expected '(' in cut list");
                auto close = body.find(')');
                if (close == std::string_view::npos)
                    throw std::invalid_argument("DamageSpec: unterminated pair in cut list");
                auto pair = body.substr(1, close - 1);
                auto comma = pair.find(',');
                if (comma == std::string_view::npos)
                    throw std::invalid_argument("DamageSpec: pair needs two indices");
                auto i = parse_index(pair.substr(0, comma));
                auto j = parse_index(pair.substr(comma + 1));
                if (!spec.disrupted_links.insert({i, j}).second)
                    throw std::invalid_argument("DamageSpec: duplicate disrupted link");
                body.remove_prefix(close + 1);
                if (!body.empty()) {
                    if (body.front() != ',')
                        throw std::invalid_argument("DamageSpec: expected ',' between pairs");
                    body.remove_prefix(1);
                }
            }
        } else {
            throw std::invalid_argument("DamageSpec: unknown section '" + std::string(section) + "'");
        }
    }
    return spec;
}

std::string DamageSpec::str() const {
    std::ostringstream os;
    bool first_section = true;
    if (!killed_entrance.empty()) {
        os << "kill:";
        bool first = true;
        for (auto k : killed_entrance) {
            if (!first) os << ',';
            os << (k + 1);
            first = false;
        }
        first_section = false;
    }
    if (!disrupted_links.empty()) {
        if (!first_section) os << ';';
        os << "cut:";
        bool first = true;
        for (auto& [i, j] : disrupted_links) {
            if (!first) os << ',';
            os << '(' << (i + 1) << ',' << (j + 1) << ')';
            first = false;
        }
    }
    return os.str();
}

}  // namespace spinmem::nn
