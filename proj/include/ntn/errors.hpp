#pragma once

#include <stdexcept>
#include <string>

namespace ntn {

// Thrown when a series or iteration fails to converge within its budget.
struct numeric_error : std::runtime_error {
    explicit numeric_error(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when a snapshot has no co-channel node in the target group.
struct empty_channel_error : std::runtime_error {
    explicit empty_channel_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace ntn
