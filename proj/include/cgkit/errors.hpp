#pragma once

#include <stdexcept>
#include <string>

namespace cgkit {

// bad user input: malformed files, unknown nodes, out-of-range options
struct input_error : std::invalid_argument {
    explicit input_error(const std::string& msg) : std::invalid_argument(msg) {}
};

// a computation that started from valid input but could not produce a valid result
struct algorithm_error : std::runtime_error {
    explicit algorithm_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace cgkit
