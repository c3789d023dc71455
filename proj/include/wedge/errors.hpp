#ifndef WEDGE_ERRORS_HPP
#define WEDGE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace wedge {

// Operands live in polynomial rings of different arity.
struct ArityMismatch : std::invalid_argument {
    explicit ArityMismatch(const std::string& what) : std::invalid_argument(what) {}
};

// A configured size limit was hit; the message names the cap and its value.
struct CapExceeded : std::runtime_error {
    CapExceeded(const std::string& cap, std::size_t limit, std::size_t reached)
        : std::runtime_error(cap + " cap exceeded: limit " + std::to_string(limit) +
                             ", reached " + std::to_string(reached)),
          cap_name(cap), cap_limit(limit) {}
    std::string cap_name;
    std::size_t cap_limit;
};

} // namespace wedge

#endif
