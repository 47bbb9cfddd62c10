#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace msr {

enum class ErrorKind {
    self_loop,
    duplicate_edge,
    zero_weight,
    vertex_out_of_range,
    weight_overflow,
    disconnected,
    size_cap,
    not_bipartite,
    invalid_argument,
    parse,
    trivial_no,
    timeout,
};

inline std::string_view to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::self_loop: return "self-loop";
    case ErrorKind::duplicate_edge: return "duplicate edge";
    case ErrorKind::zero_weight: return "zero weight";
    case ErrorKind::vertex_out_of_range: return "vertex out of range";
    case ErrorKind::weight_overflow: return "weight overflow";
    case ErrorKind::disconnected: return "disconnected graph";
    case ErrorKind::size_cap: return "size cap exceeded";
    case ErrorKind::not_bipartite: return "not bipartite";
    case ErrorKind::invalid_argument: return "invalid argument";
    case ErrorKind::parse: return "parse error";
    case ErrorKind::trivial_no: return "trivial no-instance";
    case ErrorKind::timeout: return "timeout";
    }
    return "unknown";
}

/// Every failure raised by the library carries a machine-readable kind so
/// callers (notably the CLI) can map it onto exit codes.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind)
    {
    }

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace msr
