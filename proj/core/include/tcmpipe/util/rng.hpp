#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace tcmpipe::util {

// Deterministic random source. mt19937_64 output is pinned by the standard,
// and bounded draws avoid std::uniform_int_distribution (whose mapping is
// implementation-defined), so seeded results are identical across platforms
// and compilers.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next()
    {
        return engine_();
    }

    // Unbiased draw from [0, n). n must be > 0.
    std::uint64_t bounded(std::uint64_t n)
    {
        std::uint64_t threshold = (0 - n) % n;
        for (;;)
        {
            std::uint64_t x = engine_();
            if (x >= threshold)
            {
                return x % n;
            }
        }
    }

    // Uniform double in [0, 1) with 53 bits of precision.
    double unit()
    {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    // In-place Fisher-Yates shuffle.
    template <typename T> void shuffle(std::vector<T>& items)
    {
        for (std::size_t i = items.size(); i > 1; --i)
        {
            std::size_t j = static_cast<std::size_t>(bounded(i));
            std::swap(items[i - 1], items[j]);
        }
    }

    // Sample k distinct indices from [0, n) without replacement, in draw order.
    std::vector<std::size_t> sample_indices(std::size_t n, std::size_t k)
    {
        std::vector<std::size_t> pool(n);
        for (std::size_t i = 0; i < n; ++i)
        {
            pool[i] = i;
        }
        std::vector<std::size_t> picked;
        picked.reserve(k);
        for (std::size_t draw = 0; draw < k && draw < n; ++draw)
        {
            std::size_t j = draw + static_cast<std::size_t>(bounded(n - draw));
            std::swap(pool[draw], pool[j]);
            picked.push_back(pool[draw]);
        }
        return picked;
    }

  private:
    std::mt19937_64 engine_;
};

} // namespace tcmpipe::util
