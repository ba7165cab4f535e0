#pragma once

#include <optional>
#include <set>

#include "cword/christoffel.hpp"
#include "cword/word.hpp"

namespace cword {

/// Substitution on binary words with an even number of zeros: every 1
/// becomes 2 and every second occurrence of 0 becomes 1. The image is a
/// ternary word of the same length.
Word phi(const Word& w);

/// Inverse of phi where it exists: 2 -> 1, and the 0/1 letters must
/// alternate 0,1,0,1,... (they all map back to 0).
std::optional<Word> undo_phi(const Word& w);

/// Variant substitution on binary words with an even number of ones:
/// every second occurrence of 1 becomes 2.
Word phi_prime(const Word& w);

/// F_N = F_{N-1} (letter N-1) F_{N-1}, starting from F_1 = "0".
/// Length 2^N - 1, letter counts 2^{N-1}, ..., 2, 1; palindromic.
Word fraenkel(int alphabet_size);

/// A power of a Christoffel word with the pair "10" swapped to "01" at a
/// chosen non-empty subset of the block borders. The base slope must have
/// an even zero count; border i in {1, .., power-1} is the junction between
/// block i and block i+1 of the linear representative.
struct TwistSpec {
    Slope base;
    int power = 2;
    std::set<int> borders;
};

void validate(const TwistSpec& spec);
Word twisted(const TwistSpec& spec);

/// The six letter-permutation images of the class [01210].
std::set<CircularWord> d3_words();

/// Constructive pieces of the classification. All sets hold canonical
/// classes of length <= max_len that contain all three letters.
std::set<CircularWord> phi_image_classes(int max_len);      // S3 [phi(C')]
std::set<CircularWord> fraenkel_power_classes(int max_len); // [F3]
std::set<CircularWord> phi_twisted_classes(int max_len);    // S3 [phi(C^tw)]
std::set<CircularWord> d3_power_classes(int max_len);       // [D3]

/// Balanced ternary classes: S3 [phi(C')] with [F3] adjoined.
std::set<CircularWord> enumerate_b3(int max_len, bool primitive_only = false);

/// Abelian-3-bounded ternary classes: enumerate_b3 plus the twisted
/// images and the d3 powers.
std::set<CircularWord> enumerate_m3(int max_len, bool primitive_only = false);

enum class Label {
    NotAllLetters,
    BalancedPhi,
    BalancedFraenkel,
    M3Twisted,
    M3D3,
    OutsideM3,
};

const char* to_string(Label label);

/// Constructive membership answer. Witness fields are filled per label and
/// regenerate the class exactly:
///   BalancedPhi      sigma(phi(C(slope)^power))
///   BalancedFraenkel sigma(F3)^power
///   M3Twisted        sigma(phi(twisted(slope, power, borders)))
///   M3D3             sigma(01210)^power
/// OutsideM3 carries diagnostics instead.
struct ClassificationResult {
    Label label = Label::OutsideM3;
    std::optional<Slope> slope;
    std::optional<int> power;
    std::optional<LetterPermutation> perm;
    std::set<int> borders;
    std::optional<int> max_complexity;
    std::optional<int> min_nonbalanced_scale;
};

/// Decide membership by constructive matching (orbit search plus candidate
/// regeneration); the brute-force oracle is never consulted.
ClassificationResult classify(const CircularWord& cw);

/// Rebuild the class a classification witness describes.
std::optional<CircularWord> reconstruct(const ClassificationResult& r);

}  // namespace cword
