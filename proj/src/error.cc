#include <hog/error.hh>

namespace hog
{
    auto error_code_name(ErrorCode code) -> std::string_view
    {
        switch (code) {
        case ErrorCode::bad_format: return "BAD_FORMAT";
        case ErrorCode::not_found: return "NOT_FOUND";
        case ErrorCode::not_owner: return "NOT_OWNER";
        case ErrorCode::unauthenticated: return "UNAUTHENTICATED";
        case ErrorCode::bad_query: return "BAD_QUERY";
        }
        return "UNKNOWN";
    }

    Error::Error(ErrorCode code, const std::string & message, std::optional<std::size_t> offset,
        std::optional<std::size_t> line) :
        std::runtime_error(message),
        _code(code),
        _offset(offset),
        _line(line)
    {
    }
}
