#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "cword/christoffel.hpp"
#include "cword/word.hpp"

namespace cword {

/// A bi-infinite binary sequence driving the morphism. Bit index 0 is where
/// the image of position 0 starts; negative indices extend leftward.
///   fibonacci  the substitution word 0 -> 01, 1 -> 0, mirrored to the left
///              (aperiodic by construction)
///   bits       a finite pattern repeated bi-infinitely (no aperiodicity
///              guarantee)
///   seeded     bits hashed from a 64-bit seed; aperiodic with probability
///              1 but not certified
class BitSource {
  public:
    enum class Kind { Fibonacci, Bits, Seeded };

    static BitSource fibonacci();
    static BitSource explicit_bits(std::string_view bits);
    static BitSource seeded(std::uint64_t seed);

    Kind kind() const { return kind_; }
    bool aperiodic_certified() const { return kind_ == Kind::Fibonacci; }

    int bit(std::int64_t index) const;
    std::vector<std::uint8_t> bits_in_range(std::int64_t first, std::int64_t last) const;

  private:
    BitSource() = default;
    Kind kind_ = Kind::Fibonacci;
    std::vector<std::uint8_t> bits_;
    std::uint64_t seed_ = 0;
};

/// Images of the block substitution built from phi(C(m, n)) = 0 Q 2 with m
/// even: 0 -> Q20 and 1 -> Q02, both of length m + n.
struct MorphismSpec {
    Slope base;
    Word q;
    Word image0;
    Word image1;
};

MorphismSpec morphism_images(int m, int n);

/// The ternary segment of the bi-infinite image covering positions
/// [begin, end). Position p lies in the image of bit floor(p / (m+n)).
Word expand(const BitSource& source, const MorphismSpec& spec,
            std::int64_t begin, std::int64_t end);

/// Number of distinct Parikh vectors among the length-n factors of the
/// linear segment.
int window_complexity(const Word& segment, int n);

}  // namespace cword
