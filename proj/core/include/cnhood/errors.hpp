#pragma once

#include <stdexcept>
#include <string>

namespace cnh {

// Malformed input text. line() is 1-based and refers to the offending line.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

// An exact computation refused to run because it would exceed a hard cap
// (path enumeration limits, factorial ordering limits, brute-force guards).
class ResourceError : public std::runtime_error {
public:
    explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace cnh
