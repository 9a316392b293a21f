// Sweep configuration: flat line-oriented `key = value` text parsed into a
// validated SweepSpec, plus an incremental builder used by the C API and the
// CLI (flags override config-file entries).
#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "fracdimer/tfse.hpp"

namespace fracdimer {

struct SweepAxis {
    std::string name;   // one of nu1, nu2, v12, p, tau
    double start = 0.0;
    double stop = 0.0;
    int count = 0;      // >= 2; sample i = start + i*(stop-start)/(count-1)
};

struct SweepSpec {
    std::map<std::string, double> fixed;  // nu1, nu2, v12, p, tau, hbar_tau
    std::vector<SweepAxis> varied;        // declaration order, at most 2
    double t_max = 0.0;
    int steps = 0;                        // >= 2; t_i = i*t_max/(steps-1)
    StateKind preset = StateKind::single_excitation;

    void validate() const;  // throws validation_error naming the violation
};

// "ground_excited" / "single_excitation" <-> StateKind.
StateKind preset_from_name(const std::string& name);
const char* preset_name(StateKind kind);

// Accumulates entries one at a time.  apply_text() enforces the config-file
// rules (comments, duplicate/unknown keys rejected, line-numbered errors);
// set() is the override path: it replaces earlier values and converts a
// varied parameter back to fixed when given a scalar.
class ConfigBuilder {
public:
    void apply_text(const std::string& text);              // parse_error
    void set(const std::string& key, const std::string& value);
    SweepSpec finish() const;  // fills defaults, validates completeness

private:
    void apply(const std::string& key, const std::string& value, int line,
               bool allow_override);

    std::map<std::string, double> fixed_;
    std::vector<SweepAxis> varied_;
    std::optional<double> t_max_;
    std::optional<int> steps_;
    std::optional<StateKind> preset_;
    std::set<std::string> seen_;  // duplicate detection for apply_text
};

// One-shot parse of a whole config file.
SweepSpec parse_config(const std::string& text);

}  // namespace fracdimer
