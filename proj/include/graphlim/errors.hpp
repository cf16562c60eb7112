#ifndef GRAPHLIM_ERRORS_HPP
#define GRAPHLIM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace graphlim {

// An argument is outside an operation's domain (bad subset, mismatched
// node counts, malformed file, ...).
class DomainError : public std::invalid_argument {
public:
    explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

// The input is well formed but larger than the brute-force ceilings this
// library commits to (everything here is meant to run in seconds).
class CapacityError : public std::runtime_error {
public:
    explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

// The normalizing constant of an exponential family vanished; the requested
// distribution does not exist.
class DegenerateFamilyError : public DomainError {
public:
    explicit DegenerateFamilyError(const std::string& what) : DomainError(what) {}
};

} // namespace graphlim

#endif
