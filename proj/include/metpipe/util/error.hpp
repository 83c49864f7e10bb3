#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace metpipe {

/// Error with a short machine-parsable code ("io", "parse", "unit", "data", "usage").
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(code + ": " + message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

[[noreturn]] inline void fail(const std::string& code, const std::string& message) {
    throw Error(code, message);
}

} // namespace metpipe
