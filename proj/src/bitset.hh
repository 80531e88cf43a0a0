#ifndef HOG_SRC_BITSET_HH
#define HOG_SRC_BITSET_HH

#include <bit>
#include <cstdint>
#include <vector>

namespace hog::detail
{
    class Bitset
    {
    public:
        Bitset() = default;
        explicit Bitset(int size) : _words((size + 63) / 64, 0) {}

        void set(int i) { _words[i >> 6] |= std::uint64_t{1} << (i & 63); }
        void reset(int i) { _words[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
        auto test(int i) const -> bool { return (_words[i >> 6] >> (i & 63)) & 1; }

        auto empty() const -> bool
        {
            for (auto w : _words)
                if (w)
                    return false;
            return true;
        }

        auto count() const -> int
        {
            int c = 0;
            for (auto w : _words)
                c += std::popcount(w);
            return c;
        }

        /// Lowest set index, or -1.
        auto first() const -> int
        {
            for (std::size_t i = 0; i < _words.size(); ++i)
                if (_words[i])
                    return static_cast<int>(i * 64) + std::countr_zero(_words[i]);
            return -1;
        }

        auto intersect_with(const Bitset & other) -> Bitset &
        {
            for (std::size_t i = 0; i < _words.size(); ++i)
                _words[i] &= other._words[i];
            return *this;
        }

        auto subtract(const Bitset & other) -> Bitset &
        {
            for (std::size_t i = 0; i < _words.size(); ++i)
                _words[i] &= ~other._words[i];
            return *this;
        }

        template <typename F_>
        void for_each(F_ && f) const
        {
            for (std::size_t i = 0; i < _words.size(); ++i)
                for (auto w = _words[i]; w; w &= w - 1)
                    f(static_cast<int>(i * 64) + std::countr_zero(w));
        }

    private:
        std::vector<std::uint64_t> _words;
    };
}

#endif
