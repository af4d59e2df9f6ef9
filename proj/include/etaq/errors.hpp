#ifndef ETAQ_ERRORS_HPP
#define ETAQ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace etaq {

/* Contract violations use std::invalid_argument directly. */

/* A value left the signed 128-bit range. Never wrapped. */
struct overflow_error : public std::overflow_error {
    explicit overflow_error(std::string const & what)
        : std::overflow_error(what) {}
};

/* Something that was proved to hold did not: an implementation bug. */
struct internal_inconsistency : public std::logic_error {
    explicit internal_inconsistency(std::string const & what)
        : std::logic_error(what) {}
};

struct cap_exceeded : public std::runtime_error {
    explicit cap_exceeded(std::string const & what)
        : std::runtime_error(what) {}
};

struct resource_limit : public std::runtime_error {
    explicit resource_limit(std::string const & what)
        : std::runtime_error(what) {}
};

} // namespace etaq

#endif /* ETAQ_ERRORS_HPP */
