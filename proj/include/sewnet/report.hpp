#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "sewnet/scalars.hpp"

namespace sewnet {

struct ReportCheck {
    std::string group;
    std::string name;
    Real residual = 0;
    bool pass = true;
    std::string note;
};

// One verification run's results. The machine-readable document is the
// source of truth; the text rendering is derived from the same fields, so
// the two never disagree. Output is deterministic: insertion order is kept
// and the header always echoes seed and tolerance.
class RunReport {
public:
    RunReport(std::string command, std::uint64_t seed, Real tol);

    void meta(const std::string& key, const std::string& value);
    void add(const std::string& group, const std::string& name, Real residual,
             bool pass, const std::string& note = "");

    bool ok() const;
    const std::vector<ReportCheck>& checks() const { return checks_; }

    std::string to_json() const;
    std::string to_text() const;
    // format is "text" or "json-like"; anything else throws
    // std::invalid_argument.
    std::string render(const std::string& format) const;

private:
    std::string command_;
    std::uint64_t seed_ = 0;
    Real tol_ = 0;
    std::vector<std::pair<std::string, std::string>> meta_;
    std::vector<ReportCheck> checks_;
};

}  // namespace sewnet
