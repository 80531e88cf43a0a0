#ifndef HOG_ERROR_HH
#define HOG_ERROR_HH

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hog
{
    enum class ErrorCode
    {
        bad_format,
        not_found,
        not_owner,
        unauthenticated,
        bad_query
    };

    auto error_code_name(ErrorCode code) -> std::string_view;

    /// User-facing failure. Every layer above graph-core reports bad input
    /// through this type; the api layer maps the code onto its error envelope.
    class Error : public std::runtime_error
    {
    public:
        Error(ErrorCode code, const std::string & message, std::optional<std::size_t> offset = std::nullopt,
            std::optional<std::size_t> line = std::nullopt);

        auto code() const noexcept -> ErrorCode { return _code; }
        auto offset() const noexcept -> std::optional<std::size_t> { return _offset; }
        auto line() const noexcept -> std::optional<std::size_t> { return _line; }

    private:
        ErrorCode _code;
        std::optional<std::size_t> _offset;
        std::optional<std::size_t> _line;
    };

    inline auto format_error(const std::string & message, std::optional<std::size_t> offset = std::nullopt,
        std::optional<std::size_t> line = std::nullopt) -> Error
    {
        return Error{ErrorCode::bad_format, message, offset, line};
    }
}

#endif
