#pragma once

#include <compare>
#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace cword {

using Letter = std::uint8_t;

/// Letters of an N-ary alphabet are the indices 0..N-1; they render as the
/// digit characters '0','1','2',... only at the I/O boundary.
struct Alphabet {
    int size = 0;

    char symbol(Letter a) const;
    Letter index(char c) const;
};

/// A finite word over an N-ary alphabet. The empty word is allowed here
/// (it is the unit of concatenation); circular words reject it.
struct Word {
    std::vector<Letter> letters;
    int alphabet = 0;

    Word() = default;
    Word(std::vector<Letter> ls, int alphabet_size);

    /// Parse a digit string. alphabet_size == 0 infers N as max digit + 1.
    static Word parse(std::string_view digits, int alphabet_size = 0);

    std::size_t size() const { return letters.size(); }
    bool empty() const { return letters.empty(); }
    Letter operator[](std::size_t i) const { return letters[i]; }

    std::string str() const;

    auto operator<=>(const Word&) const = default;
};

Word operator+(const Word& a, const Word& b);

/// w repeated p times.
Word power(const Word& w, int p);

Word rotate(const Word& w, std::size_t k);

/// All distinct cyclic shifts of w.
std::set<Word> rotations(const Word& w);

/// Index of the lexicographically least rotation (Booth's algorithm, O(n)).
std::size_t least_rotation_index(const Word& w);

/// A conjugacy class of nonempty words, stored by its lexicographically
/// least rotation. Two classes are equal iff their canonical words are.
class CircularWord {
  public:
    explicit CircularWord(const Word& w);

    /// Wrap a word already known to be its own least rotation.
    static CircularWord from_canonical(Word w);

    const Word& canonical() const { return canonical_; }
    std::size_t size() const { return canonical_.size(); }
    int alphabet() const { return canonical_.alphabet; }
    std::string str() const { return canonical_.str(); }

    auto operator<=>(const CircularWord&) const = default;

  private:
    CircularWord() = default;
    Word canonical_;
};

CircularWord canonicalize(const Word& w);

/// [w]^p = [w^p].
CircularWord power(const CircularWord& cw, int p);

struct PrimitiveDecomposition {
    Word root;
    int exponent = 1;
};

/// Smallest-period root v and exponent p with w = v^p; p == 1 iff primitive.
PrimitiveDecomposition primitive_decomposition(const Word& w);

bool is_primitive(const Word& w);

Word invert(const Word& w);
bool is_palindrome(const Word& w);

/// A letter permutation, stored as the image table perm[letter].
using LetterPermutation = std::vector<Letter>;

LetterPermutation identity_permutation(int alphabet_size);
LetterPermutation inverse(const LetterPermutation& sigma);

/// All N! permutations in lexicographic order of their image tables.
std::vector<LetterPermutation> all_permutations(int alphabet_size);

/// Letterwise image; sigma must be a bijection on the word's alphabet.
Word apply_permutation(const LetterPermutation& sigma, const Word& w);

/// Orbit of a class under letter permutations and inversion. Its size
/// divides 2 * N!.
std::set<CircularWord> orbit(const CircularWord& cw);

/// Split the occurrences of letter a round-robin over k letters: occurrence
/// p (0-based, scanning the canonical representative) keeps a when
/// p % k == 0 and otherwise becomes the (p % k)-th new letter. New letters
/// are appended after the existing alphabet, so the result lives over
/// N + k - 1 letters. Requires the count of a to be divisible by k.
CircularWord letter_split(const CircularWord& cw, Letter a, int k);

}  // namespace cword
