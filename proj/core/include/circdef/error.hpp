#ifndef CIRCDEF_ERROR_HPP
#define CIRCDEF_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace circdef {

enum class ErrorCode {
    NotCubic,
    ParallelEdge,
    LoopEdge,
    BadVertexId,
    DuplicateSlotTag,
    Malformed6,
    HasDangles,
    ParseError,
    GroupArityMismatch,
    NotAdjacent,
    ShapeMismatch,
    NotSimple,
    TooFewCopies,
    SeedNotSnark,
    BadParameter,
    Acyclic,
    Disconnected,
    NotBridgeless,
    NoCycle,
    UnknownTag,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

} // namespace circdef

#endif
