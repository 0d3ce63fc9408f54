#ifndef SIEVED_ERRORS_HPP
#define SIEVED_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sieved {

// Caller passed something structurally wrong (order mismatch, bad range, ...).
struct usage_error : std::invalid_argument {
    explicit usage_error(const std::string& what) : std::invalid_argument(what) {}
};

struct division_by_zero : std::domain_error {
    explicit division_by_zero(const std::string& what) : std::domain_error(what) {}
};

// A division that the theory guarantees to be exact turned out not to be.
// Signals an index/convention fault, never user input.
struct exactness_error : std::logic_error {
    explicit exactness_error(const std::string& what) : std::logic_error(what) {}
};

} // namespace sieved

#endif
