#ifndef MEDIANFORGE_TESTS_SUPPORT_HPP
#define MEDIANFORGE_TESTS_SUPPORT_HPP

#include "medianforge/error.hpp"

#include <functional>
#include <optional>
#include <ostream>

namespace medianforge {
inline std::ostream& operator<<(std::ostream& os, Errc c) { return os << to_string(c); }
} // namespace medianforge

/// Code of the medianforge::Error thrown by f, if any.
inline std::optional<medianforge::Errc> code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const medianforge::Error& e) {
        return e.code();
    }
    return std::nullopt;
}

#endif
