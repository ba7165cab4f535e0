#pragma once

#include <optional>
#include <set>

#include "cword/word.hpp"

namespace cword {

/// Slope of a Christoffel word: k horizontal steps (zeros) and n vertical
/// steps (ones), coprime.
struct Slope {
    int zeros = 0;
    int ones = 0;

    auto operator<=>(const Slope&) const = default;
};

bool is_coprime(const Slope& s);

/// Lower Christoffel word C(k, n): the lattice path of length k + n under
/// the line y = (n/k) x, touching it only at the endpoints. All geometry
/// is exact integer cross-multiplication.
Word christoffel(const Slope& s);

Word christoffel_power(const Slope& s, int p);

/// Q from the unique factorization w = 0 Q 1 of a Christoffel word;
/// throws when w is not of that form or Q is not a palindrome.
Word palindrome_factor(const Word& w);

/// Slope iff w literally equals the Christoffel word of its letter counts.
std::optional<Slope> is_christoffel(const Word& w);

struct BinaryClassification {
    Slope slope;
    int power = 1;
};

/// For a balanced binary class, the unique (slope, power) with
/// cw = [C(slope)^power]; empty for unbalanced classes and classes
/// missing a letter.
std::optional<BinaryClassification> classify_binary(const CircularWord& cw);

/// All C(k, n) with k + n <= max_len.
std::set<Word> enumerate_christoffel(int max_len);

}  // namespace cword
