#pragma once

#include <stdexcept>
#include <string>

namespace braidlab {

// Thrown on malformed text input (CLI exit code 2).
struct parse_error : std::runtime_error {
    explicit parse_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Thrown on out-of-range generator/strand/index arguments (CLI exit code 3).
struct index_error : std::out_of_range {
    explicit index_error(const std::string& msg) : std::out_of_range(msg) {}
};

// Thrown when a requested computation exceeds the configured budget (CLI exit code 4).
struct budget_error : std::runtime_error {
    explicit budget_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Thrown on states that are impossible for valid inputs (non-exact Dynkin
// division, odd crossing parity on a pure braid, unsolvable exact solve).
struct internal_error : std::logic_error {
    explicit internal_error(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace braidlab
