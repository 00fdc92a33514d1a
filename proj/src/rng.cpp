#include "homlab/rng.hpp"

#include <stdexcept>

namespace homlab {

std::uint64_t CounterRng::uniform_below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("uniform_below: zero bound");
    const std::uint64_t limit = bound * (UINT64_MAX / bound);
    for (;;) {
        const std::uint64_t u = next();
        if (u < limit) return u % bound;
    }
}

std::size_t sample_exact(std::span<const Rat> weights, CounterRng& rng) {
    if (weights.empty()) throw std::invalid_argument("sample_exact: empty weights");
    Rat total{0};
    for (const Rat& w : weights) {
        if (w < 0) throw std::invalid_argument("sample_exact: negative weight");
        total += w;
    }
    if (total == 0) throw std::invalid_argument("sample_exact: zero total weight");

    std::vector<Rat> cum(weights.size());
    Rat acc{0};
    for (std::size_t i = 0; i < weights.size(); ++i) {
        acc += weights[i];
        cum[i] = acc / total;
    }

    // u is known only as the dyadic interval [k, k+1) / 2^(64*words); keep
    // appending 64-bit draws until the interval lies inside one cell.
    BigInt k{rng.next()};
    unsigned words = 1;
    for (;;) {
        const BigInt scale = BigInt{1} << (64 * words);
        // first cell with k/scale < cum[cell]; always exists since cum.back() == 1
        std::size_t cell = 0;
        while (!(k * rat_den(cum[cell]) < rat_num(cum[cell]) * scale)) ++cell;
        // accept iff (k+1)/scale <= cum[cell], i.e. the interval fits the cell
        if ((k + 1) * rat_den(cum[cell]) <= rat_num(cum[cell]) * scale) return cell;
        k = (k << 64) | BigInt{rng.next()};
        ++words;
    }
}

}  // namespace homlab
