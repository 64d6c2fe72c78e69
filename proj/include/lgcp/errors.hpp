#pragma once

#include <stdexcept>
#include <string>

namespace lgcp {

// Exit codes used by the CLI: 0 success, 2 config, 3 data validation, 4 numerical.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
    static constexpr int exit_code = 2;
};

struct DataError : std::runtime_error {
    explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
    static constexpr int exit_code = 3;
};

struct NumericError : std::runtime_error {
    explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
    static constexpr int exit_code = 4;
};

// Point lies outside the triangulated domain.
struct OutsideDomainError : DataError {
    explicit OutsideDomainError(const std::string& msg) : DataError(msg) {}
};

}
