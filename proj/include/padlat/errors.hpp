#pragma once

#include <stdexcept>
#include <string>

namespace padlat {

/// Input matrix (or generator set) does not have the rank the operation needs.
class RankError : public std::runtime_error {
public:
    explicit RankError(const std::string& what) : std::runtime_error(what) {}
};

/// Two objects built over different primes or ambient dimensions were combined.
class ContextMismatch : public std::invalid_argument {
public:
    explicit ContextMismatch(const std::string& what) : std::invalid_argument(what) {}
};

/// Malformed textual input (scalar strings, JSON envelopes).
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace padlat
