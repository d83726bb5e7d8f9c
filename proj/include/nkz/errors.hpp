#pragma once

#include <stdexcept>
#include <string>

namespace nkz {

/// Malformed or out-of-contract input (bad degree, bad index, violated precondition).
class InvalidInput : public std::runtime_error {
public:
    explicit InvalidInput(const std::string& what) : std::runtime_error(what) {}
};

/// A configurable cap (degree cap, lattice cap, probe limit) was exceeded.
/// Deliberately distinct from InvalidInput: callers map these to different exit codes.
class ResourceLimit : public std::runtime_error {
public:
    explicit ResourceLimit(const std::string& what) : std::runtime_error(what) {}
};

struct Limits {
    int max_degree = 12;
    std::size_t lattice_cap = 20000;
    int probe_limit = 6;
};

} // namespace nkz
