#pragma once

#include <stdexcept>
#include <string>

namespace slowmem {

// Every failure surfaces as an Error with a stable machine-parsable category.
// The CLI prints "error: <category>: <message>" and exits nonzero.
class Error : public std::runtime_error {
public:
    Error(std::string category, const std::string& message)
        : std::runtime_error(category + ": " + message), category_(std::move(category)) {}

    const std::string& category() const { return category_; }

private:
    std::string category_;
};

inline Error resolution_too_coarse(const std::string& msg) { return Error("resolution_too_coarse", msg); }
inline Error empty_region(const std::string& msg) { return Error("empty_region", msg); }
inline Error not_on_boundary(const std::string& msg) { return Error("not_on_boundary", msg); }
inline Error unsupported_region(const std::string& msg) { return Error("unsupported_region", msg); }
inline Error unsupported_dimension(const std::string& msg) { return Error("unsupported_dimension", msg); }
inline Error empty_window(const std::string& msg) { return Error("empty_window", msg); }
inline Error solver_diverged(const std::string& msg) { return Error("solver_diverged", msg); }
inline Error too_large(const std::string& msg) { return Error("too_large", msg); }
inline Error config_invalid(const std::string& msg) { return Error("config_invalid", msg); }
inline Error io_error(const std::string& msg) { return Error("io_error", msg); }

}  // namespace slowmem
