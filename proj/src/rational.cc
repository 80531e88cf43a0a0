#include <hog/rational.hh>

#include <charconv>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace hog
{
    namespace
    {
        using Wide = __int128;

        auto narrow(Wide value) -> std::int64_t
        {
            if (value > std::numeric_limits<std::int64_t>::max() || value < std::numeric_limits<std::int64_t>::min())
                throw std::overflow_error("rational arithmetic overflow");
            return static_cast<std::int64_t>(value);
        }

        auto abs_wide(Wide v) -> Wide { return v < 0 ? -v : v; }

        auto gcd_wide(Wide a, Wide b) -> Wide
        {
            a = abs_wide(a);
            b = abs_wide(b);
            while (b != 0) {
                Wide t = a % b;
                a = b;
                b = t;
            }
            return a;
        }

        auto make(Wide num, Wide den) -> Rational
        {
            if (den == 0)
                throw std::domain_error("division by zero");
            if (den < 0) {
                num = -num;
                den = -den;
            }
            Wide g = gcd_wide(num, den);
            if (g > 1) {
                num /= g;
                den /= g;
            }
            return Rational{narrow(num), narrow(den)};
        }
    }

    Rational::Rational(std::int64_t num, std::int64_t den)
    {
        if (den == 0)
            throw std::domain_error("division by zero");
        Wide n = num, d = den;
        if (d < 0) {
            n = -n;
            d = -d;
        }
        Wide g = gcd_wide(n, d);
        if (g > 1) {
            n /= g;
            d /= g;
        }
        _num = narrow(n);
        _den = narrow(d);
    }

    auto Rational::to_string() const -> std::string
    {
        if (_den == 1)
            return std::to_string(_num);
        return std::to_string(_num) + "/" + std::to_string(_den);
    }

    auto Rational::parse(std::string_view text) -> std::optional<Rational>
    {
        auto parse_int = [](std::string_view s) -> std::optional<std::int64_t> {
            if (s.empty())
                return std::nullopt;
            std::int64_t v = 0;
            auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
            if (ec != std::errc{} || ptr != s.data() + s.size())
                return std::nullopt;
            return v;
        };

        if (auto slash = text.find('/'); slash != std::string_view::npos) {
            auto n = parse_int(text.substr(0, slash));
            auto d = parse_int(text.substr(slash + 1));
            if (! n || ! d || *d == 0)
                return std::nullopt;
            return Rational{*n, *d};
        }

        if (auto dot = text.find('.'); dot != std::string_view::npos) {
            auto whole = text.substr(0, dot);
            auto frac = text.substr(dot + 1);
            if (frac.empty() || frac.size() > 18 || frac.find_first_not_of("0123456789") != std::string_view::npos)
                return std::nullopt;
            bool negative = ! whole.empty() && whole.front() == '-';
            if (negative || (! whole.empty() && whole.front() == '+'))
                whole.remove_prefix(1);
            std::int64_t w = 0;
            if (! whole.empty()) {
                auto v = parse_int(whole);
                if (! v || *v < 0)
                    return std::nullopt;
                w = *v;
            }
            auto f = parse_int(frac);
            if (! f)
                return std::nullopt;
            std::int64_t scale = 1;
            for (std::size_t i = 0; i < frac.size(); ++i)
                scale *= 10;
            try {
                Rational r = Rational{w} + Rational{*f, scale};
                return negative ? -r : r;
            }
            catch (const std::overflow_error &) {
                return std::nullopt;
            }
        }

        if (auto v = parse_int(text))
            return Rational{*v};
        return std::nullopt;
    }

    auto operator+(const Rational & a, const Rational & b) -> Rational
    {
        return make(Wide{a._num} * b._den + Wide{b._num} * a._den, Wide{a._den} * b._den);
    }

    auto operator-(const Rational & a, const Rational & b) -> Rational
    {
        return make(Wide{a._num} * b._den - Wide{b._num} * a._den, Wide{a._den} * b._den);
    }

    auto operator*(const Rational & a, const Rational & b) -> Rational
    {
        return make(Wide{a._num} * b._num, Wide{a._den} * b._den);
    }

    auto operator/(const Rational & a, const Rational & b) -> Rational
    {
        if (b._num == 0)
            throw std::domain_error("division by zero");
        return make(Wide{a._num} * b._den, Wide{a._den} * b._num);
    }

    auto operator-(const Rational & a) -> Rational
    {
        return make(-Wide{a._num}, a._den);
    }

    auto operator<=>(const Rational & a, const Rational & b) noexcept -> std::strong_ordering
    {
        Wide lhs = Wide{a._num} * b._den, rhs = Wide{b._num} * a._den;
        if (lhs < rhs)
            return std::strong_ordering::less;
        if (lhs > rhs)
            return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    auto operator<<(std::ostream & out, const Rational & r) -> std::ostream &
    {
        return out << r.to_string();
    }
}
