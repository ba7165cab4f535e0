#include "cword/christoffel.hpp"

#include <numeric>
#include <stdexcept>

#include "cword/abelian.hpp"

namespace cword {

bool is_coprime(const Slope& s) {
    return s.zeros >= 1 && s.ones >= 1 && std::gcd(s.zeros, s.ones) == 1;
}

Word christoffel(const Slope& s) {
    if (s.zeros < 1 || s.ones < 1) throw std::invalid_argument("slope parts must be positive");
    if (std::gcd(s.zeros, s.ones) != 1) throw std::invalid_argument("not coprime");
    const long long k = s.zeros, n = s.ones;
    std::vector<Letter> letters;
    letters.reserve(k + n);
    long long x = 0, y = 0;
    for (long long step = 0; step < k + n; ++step) {
        if ((y + 1) * k <= n * x) {
            letters.push_back(1);
            ++y;
        } else {
            letters.push_back(0);
            ++x;
        }
    }
    return Word(std::move(letters), 2);
}

Word christoffel_power(const Slope& s, int p) { return power(christoffel(s), p); }

Word palindrome_factor(const Word& w) {
    if (w.size() < 2 || w.letters.front() != 0 || w.letters.back() != 1)
        throw std::invalid_argument("word is not of the form 0Q1");
    Word q(std::vector<Letter>(w.letters.begin() + 1, w.letters.end() - 1), w.alphabet);
    if (!is_palindrome(q)) throw std::invalid_argument("middle factor is not a palindrome");
    return q;
}

std::optional<Slope> is_christoffel(const Word& w) {
    if (w.alphabet > 2 || w.size() < 2) return std::nullopt;
    ParikhVector counts = parikh(w);
    Slope s{counts[0], w.alphabet == 2 ? counts[1] : 0};
    if (!is_coprime(s)) return std::nullopt;
    if (christoffel(s) != w) return std::nullopt;
    return s;
}

std::optional<BinaryClassification> classify_binary(const CircularWord& cw) {
    if (cw.alphabet() != 2) return std::nullopt;
    ParikhVector counts = parikh(cw.canonical());
    if (counts[0] == 0 || counts[1] == 0) return std::nullopt;
    if (!is_balanced(cw)) return std::nullopt;
    auto [root, exponent] = primitive_decomposition(cw.canonical());
    Slope s{0, 0};
    {
        ParikhVector rc = parikh(root);
        s = Slope{rc[0], rc[1]};
    }
    if (!is_coprime(s)) return std::nullopt;
    if (CircularWord(christoffel(s)) != CircularWord(root)) return std::nullopt;
    return BinaryClassification{s, exponent};
}

std::set<Word> enumerate_christoffel(int max_len) {
    if (max_len < 2) throw std::invalid_argument("max length must be at least 2");
    std::set<Word> out;
    for (int k = 1; k < max_len; ++k)
        for (int n = 1; k + n <= max_len; ++n)
            if (std::gcd(k, n) == 1) out.insert(christoffel(Slope{k, n}));
    return out;
}

}  // namespace cword
