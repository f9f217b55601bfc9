#pragma once

#include <stdexcept>
#include <string>

namespace f1arr {

// Failure categories, mapped one-to-one onto CLI exit codes:
// Input -> 2, Invariant -> 1 (a mathematical self-check failed, i.e. an
// implementation bug), Budget -> 3.
enum class ErrorKind { Input, Invariant, Budget };

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& msg)
        : std::runtime_error(msg), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

    static Error input(const std::string& msg) { return Error(ErrorKind::Input, msg); }
    static Error invariant(const std::string& msg) { return Error(ErrorKind::Invariant, msg); }
    static Error budget(const std::string& msg) { return Error(ErrorKind::Budget, msg); }

private:
    ErrorKind kind_;
};

}  // namespace f1arr
