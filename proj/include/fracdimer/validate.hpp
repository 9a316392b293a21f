// Built-in self-check suite: fast named oracle checks over every module,
// reported as pass/fail with a one-line diagnostic.  Backs the CLI
// `validate` subcommand.
#pragma once

#include <string>
#include <vector>

namespace fracdimer {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;  // empty when passed
};

std::vector<CheckResult> run_validation();

}  // namespace fracdimer
