#pragma once

#include <stdexcept>
#include <string>

namespace tdesc {

// Malformed text literal. Everything else thrown by the library
// (std::invalid_argument, std::domain_error) is a domain error.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace tdesc
