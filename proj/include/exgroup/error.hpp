#pragma once

#include <stdexcept>
#include <string>

namespace exg {

/// Error categories for all preconditions and structural failures.
enum class errc {
    not_a_group,
    invalid_parameters,
    empty_set,
    too_small,
    too_large,
    bad_partition,
    not_a_schur_ring,
    bad_connection_set,
    bad_prime,
    no_such_x,
    not_regular,
    search_space_too_large,
    io_error,
    internal,
};

inline const char* errc_name(errc code) {
    switch (code) {
        case errc::not_a_group: return "NotAGroup";
        case errc::invalid_parameters: return "InvalidParameters";
        case errc::empty_set: return "EmptySet";
        case errc::too_small: return "TooSmall";
        case errc::too_large: return "TooLarge";
        case errc::bad_partition: return "BadPartition";
        case errc::not_a_schur_ring: return "NotASchurRing";
        case errc::bad_connection_set: return "BadConnectionSet";
        case errc::bad_prime: return "BadPrime";
        case errc::no_such_x: return "NoSuchX";
        case errc::not_regular: return "NotRegular";
        case errc::search_space_too_large: return "SearchSpaceTooLarge";
        case errc::io_error: return "IOError";
        case errc::internal: return "InternalError";
    }
    return "Error";
}

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& msg)
        : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

    errc code() const { return code_; }

private:
    errc code_;
};

/// Failure of one stage of a multi-stage pipeline; remembers which stage.
class StageFailure : public Error {
public:
    StageFailure(std::string stage, std::string detail)
        : Error(errc::internal, "stage " + stage + " failed: " + detail),
          stage_(std::move(stage)), detail_(std::move(detail)) {}

    const std::string& stage() const { return stage_; }
    const std::string& detail() const { return detail_; }

private:
    std::string stage_;
    std::string detail_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) { throw Error(code, msg); }

inline void require(bool cond, errc code, const std::string& msg) {
    if (!cond) fail(code, msg);
}

} // namespace exg
