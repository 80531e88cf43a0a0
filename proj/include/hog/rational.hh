#ifndef HOG_RATIONAL_HH
#define HOG_RATIONAL_HH

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace hog
{
    /// Exact rational in lowest terms with a positive denominator.
    /// Arithmetic throws std::overflow_error when a result leaves int64 range.
    class Rational
    {
    public:
        constexpr Rational() = default;
        constexpr Rational(std::int64_t value) : _num(value), _den(1) {}
        Rational(std::int64_t num, std::int64_t den);

        auto num() const noexcept -> std::int64_t { return _num; }
        auto den() const noexcept -> std::int64_t { return _den; }
        auto is_integer() const noexcept -> bool { return _den == 1; }

        auto to_string() const -> std::string;

        /// Accepts "7", "-4/3", "2.5".
        static auto parse(std::string_view text) -> std::optional<Rational>;

        friend auto operator+(const Rational & a, const Rational & b) -> Rational;
        friend auto operator-(const Rational & a, const Rational & b) -> Rational;
        friend auto operator*(const Rational & a, const Rational & b) -> Rational;
        /// Throws std::domain_error on division by zero.
        friend auto operator/(const Rational & a, const Rational & b) -> Rational;
        friend auto operator-(const Rational & a) -> Rational;

        friend auto operator==(const Rational & a, const Rational & b) noexcept -> bool = default;
        friend auto operator<=>(const Rational & a, const Rational & b) noexcept -> std::strong_ordering;

    private:
        std::int64_t _num = 0;
        std::int64_t _den = 1;
    };

    auto operator<<(std::ostream & out, const Rational & r) -> std::ostream &;
}

#endif
