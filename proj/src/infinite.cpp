#include "cword/infinite.hpp"

#include <stdexcept>

#include "cword/abelian.hpp"
#include "cword/ternary.hpp"

namespace cword {

BitSource BitSource::fibonacci() {
    BitSource s;
    s.kind_ = Kind::Fibonacci;
    return s;
}

BitSource BitSource::explicit_bits(std::string_view bits) {
    if (bits.empty()) throw std::invalid_argument("bit pattern must be non-empty");
    BitSource s;
    s.kind_ = Kind::Bits;
    for (char c : bits) {
        if (c != '0' && c != '1') throw std::invalid_argument("bit pattern must be 0/1");
        s.bits_.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    return s;
}

BitSource BitSource::seeded(std::uint64_t seed) {
    BitSource s;
    s.kind_ = Kind::Seeded;
    s.seed_ = seed;
    return s;
}

namespace {

// Prefix of the substitution word 0 -> 01, 1 -> 0.
std::vector<std::uint8_t> fibonacci_prefix(std::size_t length) {
    std::vector<std::uint8_t> w{0};
    while (w.size() < length) {
        std::vector<std::uint8_t> next;
        next.reserve(2 * w.size());
        for (std::uint8_t b : w) {
            if (b == 0) {
                next.push_back(0);
                next.push_back(1);
            } else {
                next.push_back(0);
            }
        }
        w = std::move(next);
    }
    w.resize(length);
    return w;
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Mirror negative indices: -1, -2, ... read the non-negative side backwards.
std::int64_t fold_index(std::int64_t i) { return i >= 0 ? i : -1 - i; }

}  // namespace

int BitSource::bit(std::int64_t index) const {
    switch (kind_) {
        case Kind::Fibonacci: {
            std::int64_t i = fold_index(index);
            return fibonacci_prefix(static_cast<std::size_t>(i) + 1)[i];
        }
        case Kind::Bits: {
            std::int64_t n = static_cast<std::int64_t>(bits_.size());
            std::int64_t r = ((index % n) + n) % n;
            return bits_[r];
        }
        case Kind::Seeded:
            return static_cast<int>(splitmix64(seed_ ^ static_cast<std::uint64_t>(index)) & 1u);
    }
    return 0;
}

std::vector<std::uint8_t> BitSource::bits_in_range(std::int64_t first, std::int64_t last) const {
    if (first > last) throw std::invalid_argument("bad bit range");
    std::vector<std::uint8_t> out;
    out.reserve(static_cast<std::size_t>(last - first));
    if (kind_ == Kind::Fibonacci) {
        std::size_t need = 0;
        for (std::int64_t i = first; i < last; ++i)
            need = std::max<std::size_t>(need, fold_index(i) + 1);
        auto prefix = fibonacci_prefix(need);
        for (std::int64_t i = first; i < last; ++i) out.push_back(prefix[fold_index(i)]);
    } else {
        for (std::int64_t i = first; i < last; ++i)
            out.push_back(static_cast<std::uint8_t>(bit(i)));
    }
    return out;
}

MorphismSpec morphism_images(int m, int n) {
    if (m % 2 != 0) throw std::invalid_argument("m must be even");
    Word image = phi(christoffel(Slope{m, n}));  // 0 Q 2
    Word q(std::vector<Letter>(image.letters.begin() + 1, image.letters.end() - 1), 3);
    Word zero2{{2, 0}, 3}, zero0{{0, 2}, 3};
    MorphismSpec spec{Slope{m, n}, q, q + zero2, q + zero0};
    return spec;
}

Word expand(const BitSource& source, const MorphismSpec& spec,
            std::int64_t begin, std::int64_t end) {
    if (begin > end) throw std::invalid_argument("bad index range");
    const std::int64_t block = static_cast<std::int64_t>(spec.image0.size());
    auto floor_div = [](std::int64_t a, std::int64_t b) {
        return a >= 0 ? a / b : -((-a + b - 1) / b);
    };
    std::int64_t first_bit = floor_div(begin, block);
    std::int64_t last_bit = floor_div(end + block - 1, block);
    auto bits = source.bits_in_range(first_bit, last_bit);

    Word out;
    out.alphabet = 3;
    out.letters.reserve(static_cast<std::size_t>(end - begin));
    for (std::int64_t b = first_bit; b < last_bit; ++b) {
        const Word& img = bits[b - first_bit] == 0 ? spec.image0 : spec.image1;
        std::int64_t base = b * block;
        for (std::int64_t i = 0; i < block; ++i) {
            std::int64_t pos = base + i;
            if (pos >= begin && pos < end) out.letters.push_back(img.letters[i]);
        }
    }
    return out;
}

int window_complexity(const Word& segment, int n) {
    return spectrum(segment, n).complexity();
}

}  // namespace cword
