#include "sewnet/report.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

#include "json.hpp"

namespace sewnet {

namespace {

std::string fmt_res(Real r) {
    char b[40];
    std::snprintf(b, sizeof(b), "%.3Le", r);
    return b;
}

}  // namespace

RunReport::RunReport(std::string command, std::uint64_t seed, Real tol)
    : command_(std::move(command)), seed_(seed), tol_(tol) {}

void RunReport::meta(const std::string& key, const std::string& value) {
    meta_.emplace_back(key, value);
}

void RunReport::add(const std::string& group, const std::string& name,
                    Real residual, bool pass, const std::string& note) {
    checks_.push_back({group, name, residual, pass, note});
}

bool RunReport::ok() const {
    for (const auto& c : checks_)
        if (!c.pass) return false;
    return true;
}

std::string RunReport::to_json() const {
    nlohmann::ordered_json j;
    j["schema"] = "sewnet-report/1";
    j["command"] = command_;
    j["seed"] = seed_;
    j["tol"] = double(tol_);
    auto m = nlohmann::ordered_json::object();
    for (const auto& [k, v] : meta_) m[k] = v;
    j["meta"] = m;
    auto arr = nlohmann::ordered_json::array();
    for (const auto& c : checks_) {
        nlohmann::ordered_json e;
        e["group"] = c.group;
        e["name"] = c.name;
        e["residual"] = double(c.residual);
        e["pass"] = c.pass;
        if (!c.note.empty()) e["note"] = c.note;
        arr.push_back(std::move(e));
    }
    j["checks"] = arr;
    j["pass"] = ok();
    return j.dump(2) + "\n";
}

std::string RunReport::to_text() const {
    std::string out = "sewnet " + command_ + " (schema sewnet-report/1)\n";
    out += "seed: " + std::to_string(seed_) + "   tol: " + fmt_res(tol_) + "\n";
    for (const auto& [k, v] : meta_) out += k + ": " + v + "\n";
    out += "\n";
    std::size_t wg = 0, wn = 0;
    for (const auto& c : checks_) {
        wg = std::max(wg, c.group.size());
        wn = std::max(wn, c.name.size());
    }
    int np = 0;
    for (const auto& c : checks_) {
        if (c.pass) ++np;
        out += "  [" + c.group + "]" + std::string(wg - c.group.size(), ' ') +
               " " + c.name + std::string(wn - c.name.size(), ' ') +
               "  residual " + fmt_res(c.residual) + "  " +
               (c.pass ? "pass" : "FAIL");
        if (!c.note.empty()) out += "  (" + c.note + ")";
        out += "\n";
    }
    out += "\nsummary: " + std::to_string(np) + "/" +
           std::to_string(checks_.size()) + " passed\n";
    out += ok() ? "PASS\n" : "FAIL\n";
    return out;
}

std::string RunReport::render(const std::string& format) const {
    if (format == "text") return to_text();
    if (format == "json-like") return to_json();
    throw std::invalid_argument("unknown format '" + format + "'");
}

}  // namespace sewnet
