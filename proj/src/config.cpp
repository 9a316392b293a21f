#include "fracdimer/config.hpp"

#include <cmath>
#include <cstdlib>
#include <optional>
#include <string>

#include "fracdimer/errors.hpp"

namespace fracdimer {
namespace {

const std::set<std::string> kScalarParams = {"nu1", "nu2",  "v12",
                                             "p",   "tau", "hbar_tau"};
const std::set<std::string> kSweepable = {"nu1", "nu2", "v12", "p", "tau"};
const char* const kRequired[] = {"nu1", "nu2", "v12", "p", "tau"};

std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::optional<double> parse_real(const std::string& s) {
    if (s.empty()) return std::nullopt;
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (end != s.c_str() + s.size() || !std::isfinite(v)) return std::nullopt;
    return v;
}

std::optional<int> parse_int(const std::string& s) {
    if (s.empty()) return std::nullopt;
    char* end = nullptr;
    const long v = std::strtol(s.c_str(), &end, 10);
    if (end != s.c_str() + s.size() || v < -1000000000L || v > 1000000000L)
        return std::nullopt;
    return static_cast<int>(v);
}

[[noreturn]] void fail(int line, const std::string& msg) {
    if (line > 0) throw parse_error(line, msg);
    throw invalid_argument_error(msg);
}

}  // namespace

StateKind preset_from_name(const std::string& name) {
    if (name == "ground_excited") return StateKind::ground_excited;
    if (name == "single_excitation") return StateKind::single_excitation;
    throw invalid_argument_error("unknown preset '" + name + "'");
}

const char* preset_name(StateKind kind) {
    switch (kind) {
        case StateKind::ground_excited: return "ground_excited";
        case StateKind::single_excitation: return "single_excitation";
        case StateKind::custom: break;
    }
    return "custom";
}

void SweepSpec::validate() const {
    for (const auto& [name, value] : fixed) {
        if (!kScalarParams.count(name))
            throw validation_error("unknown parameter '" + name + "'");
        if (!std::isfinite(value))
            throw validation_error("parameter '" + name + "' must be finite");
    }
    if (steps < 2) throw validation_error("steps must be >= 2");
    if (!(t_max > 0.0) || !std::isfinite(t_max))
        throw validation_error("t_max must be > 0");
    if (varied.size() > 2)
        throw validation_error("at most 2 varied axes are supported");

    std::set<std::string> seen;
    for (const SweepAxis& ax : varied) {
        if (!kSweepable.count(ax.name))
            throw validation_error(kScalarParams.count(ax.name)
                                       ? "parameter '" + ax.name +
                                             "' cannot be varied"
                                       : "unknown parameter '" + ax.name + "'");
        if (ax.count < 2)
            throw validation_error("axis '" + ax.name +
                                   "': count must be >= 2");
        if (!std::isfinite(ax.start) || !std::isfinite(ax.stop))
            throw validation_error("axis '" + ax.name +
                                   "': bounds must be finite");
        if (!seen.insert(ax.name).second)
            throw validation_error("parameter '" + ax.name +
                                   "' is varied twice");
        if (fixed.count(ax.name))
            throw validation_error("parameter '" + ax.name +
                                   "' is both fixed and varied");
    }
    for (const char* name : kRequired) {
        if (!fixed.count(name) && !seen.count(name))
            throw validation_error(std::string("parameter '") + name +
                                   "' must be fixed or varied");
    }

    auto range_check = [&](const std::string& name, double lo, double hi,
                           bool lo_open, const char* what) {
        auto in = [&](double v) {
            return (lo_open ? v > lo : v >= lo) && v <= hi;
        };
        auto it = fixed.find(name);
        if (it != fixed.end() && !in(it->second))
            throw validation_error(name + " must be in " + what);
        for (const SweepAxis& ax : varied)
            if (ax.name == name && (!in(ax.start) || !in(ax.stop)))
                throw validation_error("axis '" + name + "': values must be in " +
                                       what);
    };
    range_check("tau", 0.0, 1.0, true, "(0, 1]");
    range_check("p", 0.0, 1.0, false, "[0, 1]");
    auto hb = fixed.find("hbar_tau");
    if (hb != fixed.end() && !(hb->second > 0.0))
        throw validation_error("hbar_tau must be > 0");
}

void ConfigBuilder::apply(const std::string& key, const std::string& value,
                          int line, bool allow_override) {
    if (!allow_override) {
        if (seen_.count(key)) fail(line, "duplicate key '" + key + "'");
        seen_.insert(key);
    }

    auto erase_axis = [&](const std::string& name) {
        for (auto it = varied_.begin(); it != varied_.end(); ++it)
            if (it->name == name) {
                varied_.erase(it);
                return;
            }
    };

    if (key.rfind("vary.", 0) == 0) {
        const std::string name = key.substr(5);
        if (!kSweepable.count(name))
            fail(line, kScalarParams.count(name)
                           ? "parameter '" + name + "' cannot be varied"
                           : "unknown parameter '" + name + "' in '" + key + "'");
        const size_t c1 = value.find(':');
        const size_t c2 = c1 == std::string::npos ? std::string::npos
                                                  : value.find(':', c1 + 1);
        if (c2 == std::string::npos ||
            value.find(':', c2 + 1) != std::string::npos)
            fail(line, "expected 'start:stop:count' for '" + key + "'");
        const auto start = parse_real(trim(value.substr(0, c1)));
        const auto stop = parse_real(trim(value.substr(c1 + 1, c2 - c1 - 1)));
        const auto count = parse_int(trim(value.substr(c2 + 1)));
        if (!start || !stop) fail(line, "invalid number in '" + key + "'");
        if (!count) fail(line, "invalid count in '" + key + "'");
        SweepAxis ax{name, *start, *stop, *count};
        if (allow_override) {
            fixed_.erase(name);
            for (SweepAxis& existing : varied_)
                if (existing.name == name) {
                    existing = ax;
                    return;
                }
        }
        varied_.push_back(ax);
        return;
    }

    if (kScalarParams.count(key)) {
        const auto v = parse_real(value);
        if (!v) fail(line, "invalid number '" + value + "' for key '" + key + "'");
        if (allow_override) erase_axis(key);
        fixed_[key] = *v;
        return;
    }
    if (key == "t_max") {
        const auto v = parse_real(value);
        if (!v) fail(line, "invalid number '" + value + "' for key 't_max'");
        t_max_ = *v;
        return;
    }
    if (key == "steps") {
        const auto v = parse_int(value);
        if (!v) fail(line, "invalid integer '" + value + "' for key 'steps'");
        steps_ = *v;
        return;
    }
    if (key == "preset") {
        if (value == "ground_excited") {
            preset_ = StateKind::ground_excited;
        } else if (value == "single_excitation") {
            preset_ = StateKind::single_excitation;
        } else {
            fail(line, "unknown preset '" + value + "'");
        }
        return;
    }
    fail(line, "unknown key '" + key + "'");
}

void ConfigBuilder::apply_text(const std::string& text) {
    int line_no = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        const size_t nl = text.find('\n', pos);
        std::string line = nl == std::string::npos
                               ? text.substr(pos)
                               : text.substr(pos, nl - pos);
        ++line_no;
        pos = nl == std::string::npos ? text.size() + 1 : nl + 1;

        const size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;

        const size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw parse_error(line_no, "expected 'key = value'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty()) throw parse_error(line_no, "missing key");
        if (value.empty())
            throw parse_error(line_no, "missing value for key '" + key + "'");
        apply(key, value, line_no, false);
    }
}

void ConfigBuilder::set(const std::string& key, const std::string& value) {
    apply(key, trim(value), 0, true);
}

SweepSpec ConfigBuilder::finish() const {
    SweepSpec s;
    s.fixed = fixed_;
    s.varied = varied_;
    if (!t_max_) throw validation_error("t_max is required");
    if (!steps_) throw validation_error("steps is required");
    s.t_max = *t_max_;
    s.steps = *steps_;
    s.preset = preset_.value_or(StateKind::single_excitation);
    if (!s.fixed.count("hbar_tau")) s.fixed["hbar_tau"] = 1.0;
    s.validate();
    return s;
}

SweepSpec parse_config(const std::string& text) {
    ConfigBuilder b;
    b.apply_text(text);
    return b.finish();
}

}  // namespace fracdimer
