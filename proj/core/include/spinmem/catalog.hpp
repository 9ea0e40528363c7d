#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "spinmem/pattern.hpp"
#include "spinmem/synapse.hpp"

namespace spinmem::amu {

struct ConflictError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IntegrityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// File-backed reference-memory catalog. Append-only text file with a
/// versioned header; removals are tombstone lines. Each record carries a
/// checksum so corruption is caught on load.
class TraceCatalog {
public:
    struct Trace {
        std::string id;
        codec::SpinPattern x0;
        double eta;
    };

    /// Loads the file if it exists, otherwise starts an empty catalog that
    /// will be created on first store.
    static TraceCatalog open(const std::string& path);

    /// Stores x0 (the reference tag; the learned matrix is recreated from
    /// x0 and eta on demand) and appends the record to the file.
    void store(const std::string& id, const codec::SpinPattern& x0, double eta);

    bool validate(const std::string& id) const { return traces_.contains(id); }

    const Trace& get(const std::string& id) const;

    /// Appends a tombstone; the id becomes free for reuse.
    void remove(const std::string& id);

    std::vector<std::string> ids() const;
    const std::string& path() const { return path_; }

    static std::uint32_t record_checksum(const std::string& payload);

private:
    explicit TraceCatalog(std::string path) : path_(std::move(path)) {}
    void append_line(const std::string& line);

    std::string path_;
    std::map<std::string, Trace> traces_;
};

}  // namespace spinmem::amu
