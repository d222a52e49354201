#pragma once

#include <stdexcept>
#include <string>

namespace rpq {

// Bad user input: parameters outside their documented domain.
class validation_error : public std::domain_error {
public:
    explicit validation_error(const std::string& what) : std::domain_error(what) {}
};

// A truncation window hit its hard cap before capturing the requested mass.
class truncation_error : public std::runtime_error {
public:
    truncation_error(const std::string& what, long bound, double captured)
        : std::runtime_error(what), bound(bound), captured(captured) {}
    long bound;
    double captured;
};

} // namespace rpq
