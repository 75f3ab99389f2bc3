#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ccm {

enum class ErrorKind {
    Format,        // bad magic, bad characters, malformed text
    Length,        // truncated payload or ragged rows
    Degenerate,    // nothing to trace, zero perimeter, zero height span
    Tracing,       // tracing did not close within its step budget
    Search,        // torus walk did not close within its step budget
    Io,
    Usage,
};

// Pipeline stage an error was raised in; None for standalone calls.
enum class Stage {
    None,
    Ingest,
    Trace,
    Resample,
    Normalize,
    Features,
    Potential,
    Search,
};

std::string_view to_string(ErrorKind kind) noexcept;
std::string_view to_string(Stage stage) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what, Stage stage = Stage::None)
        : std::runtime_error(what), kind_(kind), stage_(stage)
    {}

    ErrorKind kind() const noexcept { return kind_; }
    Stage stage() const noexcept { return stage_; }

    Error with_stage(Stage stage) const { return Error(kind_, what(), stage); }

private:
    ErrorKind kind_;
    Stage stage_;
};

} // namespace ccm
