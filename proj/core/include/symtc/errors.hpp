#ifndef SYMTC_ERRORS_HPP
#define SYMTC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace symtc {

// Bad user input: malformed files, out-of-range indices, disconnected
// space where a connected one is required.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// The declared connectivity was refuted (either by reduced mod-2 homology
// below the declared degree, or by a lower bound exceeding the upper bound).
class GuardRefuted : public std::runtime_error {
public:
    explicit GuardRefuted(const std::string& what) : std::runtime_error(what) {}
};

// An internal invariant failed; always a bug, never a user error.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

inline void internal_check(bool cond, const char* msg) {
    if (!cond)
        throw InternalError(msg);
}

}  // namespace symtc

#endif
