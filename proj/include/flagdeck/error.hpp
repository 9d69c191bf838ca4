#ifndef FLAGDECK_ERROR_HPP
#define FLAGDECK_ERROR_HPP

#include <stdexcept>
#include <string>

namespace flagdeck {

/// Base class for every error raised by the library. Precondition violations
/// (bad input, membership failures) are reported by throwing; refusals that
/// are legitimate answers (no Boolean decomposition, failed compatibility)
/// are returned as values instead.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

} // namespace flagdeck

#endif
