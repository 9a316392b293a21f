// Exception hierarchy shared by all fracdimer modules.
#pragma once

#include <stdexcept>
#include <string>

namespace fracdimer {

// Base class so callers can catch everything from this library at once.
class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

class invalid_argument_error : public error {
public:
    using error::error;
};

class not_hermitian_error : public error {
public:
    using error::error;
};

class non_convergent_error : public error {
public:
    using error::error;
};

class out_of_domain_error : public error {
public:
    using error::error;
};

class zeta_underflow_error : public error {
public:
    using error::error;
};

class norm_collapse_error : public error {
public:
    using error::error;
};

class step_size_too_coarse_error : public error {
public:
    using error::error;
};

class invalid_density_matrix_error : public error {
public:
    using error::error;
};

class parse_error : public error {
public:
    parse_error(int line, const std::string& what)
        : error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

class validation_error : public error {
public:
    using error::error;
};

class unknown_field_error : public error {
public:
    using error::error;
};

class io_error : public error {
public:
    using error::error;
};

}  // namespace fracdimer
