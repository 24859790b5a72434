#pragma once

#include <stdexcept>
#include <string>

namespace bfall {

/// Malformed or out-of-contract input (bad vertex, improper coloring, ...).
class input_error : public std::invalid_argument {
public:
    explicit input_error(const std::string & what) : std::invalid_argument(what) {}
};

/// A search or enumeration refused to start because it would exceed its guard.
class size_error : public std::runtime_error {
public:
    explicit size_error(const std::string & what) : std::runtime_error(what) {}
};

} // namespace bfall
