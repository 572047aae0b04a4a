#ifndef UFI_ERROR_HPP
#define UFI_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace ufi {

/// Failure categories; the CLI maps them onto exit codes 2, 3 and 4.
enum class ErrorKind {
    parse,
    guard,
    precondition,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message, std::string witness = {})
        : std::runtime_error(message), kind_(kind), witness_(std::move(witness)) {}

    ErrorKind kind() const noexcept { return kind_; }

    /// Human-readable evidence for the failure, e.g. an incomparable pair of links.
    const std::string& witness() const noexcept { return witness_; }

private:
    ErrorKind kind_;
    std::string witness_;
};

[[noreturn]] inline void fail_parse(const std::string& message) {
    throw Error(ErrorKind::parse, message);
}

[[noreturn]] inline void fail_guard(const std::string& message) {
    throw Error(ErrorKind::guard, message);
}

[[noreturn]] inline void fail_precondition(const std::string& message, std::string witness = {}) {
    throw Error(ErrorKind::precondition, message, std::move(witness));
}

inline void require(bool condition, const std::string& message, std::string witness = {}) {
    if (!condition) {
        fail_precondition(message, std::move(witness));
    }
}

/// Size guards for the exhaustive and homological routines.
struct Limits {
    int max_vertices = 20;
    std::size_t max_faces = 4096;
    std::size_t max_generators = 25;
    std::size_t max_variables = 14;
    int max_power = 4;
    int max_chromatic_vertices = 16;
    std::size_t max_lattice = 250000;
    std::size_t max_decomposition_nodes = 2000000;

    /// Limits with every guard lifted far enough for internal cross-checks.
    static Limits relaxed() {
        Limits l;
        l.max_vertices = 64;
        l.max_faces = 1u << 22;
        l.max_generators = 1u << 20;
        l.max_variables = 64;
        l.max_power = 16;
        l.max_chromatic_vertices = 24;
        l.max_lattice = 1u << 24;
        l.max_decomposition_nodes = 1u << 26;
        return l;
    }
};

} // namespace ufi

#endif
