#include "spinmem/catalog.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace spinmem::amu {

namespace {

constexpr const char* kHeader = "spinmem-catalog v1";

std::string format_eta(double eta) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", eta);
    return buf;
}

std::string record_payload(const std::string& id, std::size_t n, const std::string& eta,
                           const std::string& signs) {
    return id + " " + std::to_string(n) + " " + eta + " " + signs;
}

}  // namespace

std::uint32_t TraceCatalog::record_checksum(const std::string& payload) {
    // FNV-1a 32
    std::uint32_t h = 2166136261u;
    for (unsigned char c : payload) {
        h ^= c;
        h *= 16777619u;
    }
    return h;
}

TraceCatalog TraceCatalog::open(const std::string& path) {
    TraceCatalog cat(path);
    std::ifstream in(path);
    if (!in) return cat;

    std::string line;
    if (!std::getline(in, line) || line != kHeader)
        throw IntegrityError("catalog '" + path + "': missing or unsupported header");

    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::istringstream is(line);
        std::string kind;
        is >> kind;
        if (kind == "trace") {
            std::string id, eta_text, signs;
            std::size_t n = 0;
            std::uint32_t crc = 0;
            if (!(is >> id >> n >> eta_text >> signs >> std::hex >> crc))
                throw IntegrityError("catalog '" + path + "': malformed record at line " +
                                     std::to_string(lineno));
            const auto payload = record_payload(id, n, eta_text, signs);
            if (record_checksum(payload) != crc)
                throw IntegrityError("catalog '" + path + "': checksum mismatch at line " +
                                     std::to_string(lineno));
            auto x0 = codec::SpinPattern::parse(signs);
            if (x0.size() != n)
                throw IntegrityError("catalog '" + path + "': length mismatch at line " +
                                     std::to_string(lineno));
            const double eta = std::stod(eta_text);
            // append-only replay: a later trace with the same id wins
            cat.traces_.insert_or_assign(id, Trace{id, std::move(x0), eta});
        } else if (kind == "tomb") {
            std::string id;
            if (!(is >> id))
                throw IntegrityError("catalog '" + path + "': malformed tombstone at line " +
                                     std::to_string(lineno));
            cat.traces_.erase(id);
        } else {
            throw IntegrityError("catalog '" + path + "': unknown record '" + kind + "'");
        }
    }
    return cat;
}

void TraceCatalog::append_line(const std::string& line) {
    const bool fresh = !std::filesystem::exists(path_);
    std::ofstream out(path_, std::ios::app);
    if (!out) throw std::runtime_error("catalog '" + path_ + "': cannot open for writing");
    if (fresh) out << kHeader << "\n";
    out << line << "\n";
    if (!out) throw std::runtime_error("catalog '" + path_ + "': write failed");
}

void TraceCatalog::store(const std::string& id, const codec::SpinPattern& x0, double eta) {
    if (id.empty() || id.find_first_of(" \t\n") != std::string::npos)
        throw std::invalid_argument("store: trace id must be nonempty without whitespace");
    if (eta <= 0.0) throw std::invalid_argument("store: eta must be > 0");
    if (traces_.contains(id)) throw ConflictError("store: trace id '" + id + "' already exists");

    const auto eta_text = format_eta(eta);
    const auto signs = x0.str();
    const auto payload = record_payload(id, x0.size(), eta_text, signs);
    char crc[16];
    std::snprintf(crc, sizeof(crc), "%08x", record_checksum(payload));
    append_line("trace " + payload + " " + crc);
    traces_.insert_or_assign(id, Trace{id, x0, eta});
}

const TraceCatalog::Trace& TraceCatalog::get(const std::string& id) const {
    auto it = traces_.find(id);
    if (it == traces_.end()) throw std::out_of_range("catalog: unknown trace id '" + id + "'");
    return it->second;
}

void TraceCatalog::remove(const std::string& id) {
    auto it = traces_.find(id);
    if (it == traces_.end()) throw std::out_of_range("catalog: unknown trace id '" + id + "'");
    append_line("tomb " + id);
    traces_.erase(it);
}

std::vector<std::string> TraceCatalog::ids() const {
    std::vector<std::string> out;
    out.reserve(traces_.size());
    for (auto& [id, _] : traces_) out.push_back(id);
    return out;
}

}  // namespace spinmem::amu
