#include "cword/word.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace cword {

char Alphabet::symbol(Letter a) const {
    if (a >= size || a > 9) throw std::invalid_argument("letter beyond digit range");
    return static_cast<char>('0' + a);
}

Letter Alphabet::index(char c) const {
    if (c < '0' || c > '9') throw std::invalid_argument("not a digit");
    Letter a = static_cast<Letter>(c - '0');
    if (a >= size) throw std::invalid_argument("digit beyond alphabet");
    return a;
}

Word::Word(std::vector<Letter> ls, int alphabet_size)
    : letters(std::move(ls)), alphabet(alphabet_size) {
    if (alphabet < 1) throw std::invalid_argument("alphabet size must be positive");
    for (Letter a : letters)
        if (a >= alphabet) throw std::invalid_argument("letter index beyond alphabet");
}

Word Word::parse(std::string_view digits, int alphabet_size) {
    std::vector<Letter> ls;
    ls.reserve(digits.size());
    int max_seen = -1;
    for (char c : digits) {
        if (c < '0' || c > '9') throw std::invalid_argument("word must be a digit string");
        Letter a = static_cast<Letter>(c - '0');
        max_seen = std::max(max_seen, static_cast<int>(a));
        ls.push_back(a);
    }
    int n = alphabet_size > 0 ? alphabet_size : max_seen + 1;
    if (n < 1) n = 1;  // empty word over the trivial alphabet
    return Word(std::move(ls), n);
}

std::string Word::str() const {
    Alphabet ab{alphabet};
    std::string s;
    s.reserve(size());
    for (Letter a : letters) s.push_back(ab.symbol(a));
    return s;
}

Word operator+(const Word& a, const Word& b) {
    Word r = a;
    r.alphabet = std::max(a.alphabet, b.alphabet);
    r.letters.insert(r.letters.end(), b.letters.begin(), b.letters.end());
    return r;
}

Word power(const Word& w, int p) {
    if (p < 1) throw std::invalid_argument("power must be positive");
    Word r;
    r.alphabet = w.alphabet;
    r.letters.reserve(w.size() * p);
    for (int i = 0; i < p; ++i)
        r.letters.insert(r.letters.end(), w.letters.begin(), w.letters.end());
    return r;
}

Word rotate(const Word& w, std::size_t k) {
    if (w.empty()) throw std::invalid_argument("empty word");
    k %= w.size();
    Word r = w;
    std::rotate(r.letters.begin(), r.letters.begin() + k, r.letters.end());
    return r;
}

std::set<Word> rotations(const Word& w) {
    if (w.empty()) throw std::invalid_argument("empty word");
    std::set<Word> out;
    for (std::size_t k = 0; k < w.size(); ++k) out.insert(rotate(w, k));
    return out;
}

std::size_t least_rotation_index(const Word& w) {
    // Booth's least-rotation algorithm over the doubled word.
    if (w.empty()) throw std::invalid_argument("empty word");
    const auto& s = w.letters;
    const std::size_t n = s.size();
    std::vector<std::ptrdiff_t> f(2 * n, -1);
    std::size_t k = 0;
    for (std::size_t j = 1; j < 2 * n; ++j) {
        Letter sj = s[j % n];
        std::ptrdiff_t i = f[j - k - 1];
        while (i != -1 && sj != s[(k + i + 1) % n]) {
            if (sj < s[(k + i + 1) % n]) k = j - i - 1;
            i = f[i];
        }
        if (sj != s[(k + i + 1) % n]) {
            if (sj < s[k % n]) k = j;
            f[j - k] = -1;
        } else {
            f[j - k] = i + 1;
        }
    }
    return k % n;
}

CircularWord::CircularWord(const Word& w) {
    if (w.empty()) throw std::invalid_argument("empty word has no circular class");
    canonical_ = rotate(w, least_rotation_index(w));
}

CircularWord CircularWord::from_canonical(Word w) {
    if (w.empty()) throw std::invalid_argument("empty word has no circular class");
    CircularWord cw;
    cw.canonical_ = std::move(w);
    return cw;
}

CircularWord canonicalize(const Word& w) { return CircularWord(w); }

CircularWord power(const CircularWord& cw, int p) {
    return CircularWord(power(cw.canonical(), p));
}

PrimitiveDecomposition primitive_decomposition(const Word& w) {
    if (w.empty()) throw std::invalid_argument("empty word");
    const std::size_t n = w.size();
    for (std::size_t d = 1; d <= n / 2; ++d) {
        if (n % d != 0) continue;
        bool periodic = true;
        for (std::size_t i = d; i < n && periodic; ++i)
            periodic = w.letters[i] == w.letters[i - d];
        if (periodic) {
            Word root(std::vector<Letter>(w.letters.begin(), w.letters.begin() + d),
                      w.alphabet);
            return {std::move(root), static_cast<int>(n / d)};
        }
    }
    return {w, 1};
}

bool is_primitive(const Word& w) { return primitive_decomposition(w).exponent == 1; }

Word invert(const Word& w) {
    Word r = w;
    std::reverse(r.letters.begin(), r.letters.end());
    return r;
}

bool is_palindrome(const Word& w) {
    return std::equal(w.letters.begin(),
                      w.letters.begin() + w.size() / 2,
                      w.letters.rbegin());
}

LetterPermutation identity_permutation(int alphabet_size) {
    LetterPermutation p(alphabet_size);
    std::iota(p.begin(), p.end(), Letter{0});
    return p;
}

LetterPermutation inverse(const LetterPermutation& sigma) {
    LetterPermutation inv(sigma.size());
    for (std::size_t a = 0; a < sigma.size(); ++a) inv[sigma[a]] = static_cast<Letter>(a);
    return inv;
}

std::vector<LetterPermutation> all_permutations(int alphabet_size) {
    std::vector<LetterPermutation> out;
    LetterPermutation p = identity_permutation(alphabet_size);
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

static void check_bijection(const LetterPermutation& sigma, int alphabet_size) {
    if (static_cast<int>(sigma.size()) != alphabet_size)
        throw std::invalid_argument("permutation size does not match alphabet");
    std::vector<bool> seen(alphabet_size, false);
    for (Letter a : sigma) {
        if (a >= alphabet_size || seen[a])
            throw std::invalid_argument("letter map is not a bijection");
        seen[a] = true;
    }
}

Word apply_permutation(const LetterPermutation& sigma, const Word& w) {
    check_bijection(sigma, w.alphabet);
    Word r = w;
    for (Letter& a : r.letters) a = sigma[a];
    return r;
}

std::set<CircularWord> orbit(const CircularWord& cw) {
    std::set<CircularWord> out;
    for (const auto& sigma : all_permutations(cw.alphabet())) {
        Word img = apply_permutation(sigma, cw.canonical());
        out.insert(CircularWord(img));
        out.insert(CircularWord(invert(img)));
    }
    return out;
}

CircularWord letter_split(const CircularWord& cw, Letter a, int k) {
    if (k < 2) throw std::invalid_argument("split arity must be at least 2");
    const Word& w = cw.canonical();
    if (a >= w.alphabet) throw std::invalid_argument("letter beyond alphabet");
    long count = std::count(w.letters.begin(), w.letters.end(), a);
    if (count == 0 || count % k != 0)
        throw std::invalid_argument("occurrence count not divisible by split arity");

    const int n = w.alphabet;
    Word r = w;
    r.alphabet = n + k - 1;
    long p = 0;
    for (Letter& x : r.letters) {
        if (x != a) continue;
        long j = p++ % k;
        if (j > 0) x = static_cast<Letter>(n + j - 1);
    }
    return CircularWord(r);
}

}  // namespace cword
