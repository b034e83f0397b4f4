#pragma once

#include <stdexcept>
#include <string>

namespace szego {

/// A condition the mathematics rules out (singular Fischer matrix, an
/// inconsistent projection system). Seeing one means a bug, not bad input.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& what) : std::logic_error("internal error: " + what) {}
};

}  // namespace szego
