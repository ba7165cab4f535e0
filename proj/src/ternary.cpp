#include "cword/ternary.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "cword/abelian.hpp"

namespace cword {

Word phi(const Word& w) {
    if (w.alphabet > 2) throw std::invalid_argument("phi expects a binary word");
    ParikhVector counts = parikh(w);
    int zeros = counts[0];
    int ones = w.alphabet == 2 ? counts[1] : 0;
    if (zeros < 2 || zeros % 2 != 0)
        throw std::invalid_argument("phi needs an even, positive number of zeros");
    if (ones < 1) throw std::invalid_argument("phi needs at least one 1");
    Word r(w.letters, 3);
    int p = 0;
    for (Letter& a : r.letters) {
        if (a == 1) {
            a = 2;
        } else if (p++ % 2 == 1) {
            a = 1;
        }
    }
    return r;
}

std::optional<Word> undo_phi(const Word& w) {
    if (w.alphabet != 3) return std::nullopt;
    int twos = 0;
    int parity = 0;
    std::vector<Letter> pre;
    pre.reserve(w.size());
    for (Letter a : w.letters) {
        switch (a) {
            case 2:
                ++twos;
                pre.push_back(1);
                break;
            case 0:
            case 1:
                if (a != parity) return std::nullopt;  // 0/1 letters must alternate
                parity ^= 1;
                pre.push_back(0);
                break;
            default:
                return std::nullopt;
        }
    }
    if (parity != 0) return std::nullopt;  // odd zero count in the preimage
    if (twos == 0 || pre.size() == static_cast<std::size_t>(twos)) return std::nullopt;
    return Word(std::move(pre), 2);
}

Word phi_prime(const Word& w) {
    if (w.alphabet > 2) throw std::invalid_argument("phi' expects a binary word");
    ParikhVector counts = parikh(w);
    int zeros = counts[0];
    int ones = w.alphabet == 2 ? counts[1] : 0;
    if (ones < 2 || ones % 2 != 0)
        throw std::invalid_argument("phi' needs an even, positive number of ones");
    if (zeros < 1) throw std::invalid_argument("phi' needs at least one 0");
    Word r(w.letters, 3);
    int p = 0;
    for (Letter& a : r.letters)
        if (a == 1 && p++ % 2 == 1) a = 2;
    return r;
}

Word fraenkel(int alphabet_size) {
    if (alphabet_size < 1) throw std::invalid_argument("alphabet size must be positive");
    Word f(std::vector<Letter>{0}, 1);
    for (int n = 2; n <= alphabet_size; ++n) {
        Word next = f;
        next.alphabet = n;
        next.letters.push_back(static_cast<Letter>(n - 1));
        next.letters.insert(next.letters.end(), f.letters.begin(), f.letters.end());
        f = std::move(next);
    }
    return f;
}

void validate(const TwistSpec& spec) {
    if (!is_coprime(spec.base)) throw std::invalid_argument("not coprime");
    if (spec.base.zeros % 2 != 0)
        throw std::invalid_argument("twist base must have an even zero count");
    if (spec.power < 2) throw std::invalid_argument("twist power must be at least 2");
    if (spec.borders.empty()) throw std::invalid_argument("border set must be non-empty");
    for (int b : spec.borders)
        if (b < 1 || b >= spec.power) throw std::invalid_argument("border index out of range");
}

Word twisted(const TwistSpec& spec) {
    validate(spec);
    Word w = christoffel_power(spec.base, spec.power);
    const std::size_t block = spec.base.zeros + spec.base.ones;
    for (int b : spec.borders) {
        // last letter of block b is 1, first letter of block b+1 is 0
        std::swap(w.letters[b * block - 1], w.letters[b * block]);
    }
    return w;
}

std::set<CircularWord> d3_words() {
    const Word seed = Word::parse("01210");
    std::set<CircularWord> out;
    for (const auto& sigma : all_permutations(3))
        out.insert(CircularWord(apply_permutation(sigma, seed)));
    return out;
}

// Powers of Christoffel words with an even total zero count, presented as
// (slope, power) pairs with a word length bound.
template <typename F>
static void for_each_c_prime(int max_len, F&& f) {
    for (int k = 1; k < max_len; ++k)
        for (int n = 1; k + n <= max_len; ++n) {
            if (std::gcd(k, n) != 1) continue;
            for (int p = 1; p * (k + n) <= max_len; ++p)
                if (p * k % 2 == 0) f(Slope{k, n}, p);
        }
}

static void insert_s3_images(const Word& w, std::set<CircularWord>& out) {
    for (const auto& sigma : all_permutations(3))
        out.insert(CircularWord(apply_permutation(sigma, w)));
}

std::set<CircularWord> phi_image_classes(int max_len) {
    std::set<CircularWord> out;
    for_each_c_prime(max_len, [&](Slope s, int p) {
        insert_s3_images(phi(christoffel_power(s, p)), out);
    });
    return out;
}

std::set<CircularWord> fraenkel_power_classes(int max_len) {
    std::set<CircularWord> out;
    const Word f3 = fraenkel(3);
    for (int p = 1; p * static_cast<int>(f3.size()) <= max_len; ++p)
        insert_s3_images(power(f3, p), out);
    return out;
}

std::set<CircularWord> phi_twisted_classes(int max_len) {
    std::set<CircularWord> out;
    // Twisted bases need an even zero count of the base itself.
    for (int k = 2; k < max_len; k += 2)
        for (int n = 1; k + n <= max_len; ++n) {
            if (std::gcd(k, n) != 1) continue;
            for (int p = 2; p * (k + n) <= max_len; ++p) {
                for (unsigned mask = 1; mask < (1u << (p - 1)); ++mask) {
                    TwistSpec spec{Slope{k, n}, p, {}};
                    for (int b = 1; b < p; ++b)
                        if (mask & (1u << (b - 1))) spec.borders.insert(b);
                    insert_s3_images(phi(twisted(spec)), out);
                }
            }
        }
    return out;
}

std::set<CircularWord> d3_power_classes(int max_len) {
    std::set<CircularWord> out;
    for (const CircularWord& d : d3_words())
        for (int p = 1; p * static_cast<int>(d.size()) <= max_len; ++p)
            out.insert(power(d, p));
    return out;
}

static std::set<CircularWord> filter_primitive(std::set<CircularWord> classes) {
    std::erase_if(classes, [](const CircularWord& cw) {
        return !is_primitive(cw.canonical());
    });
    return classes;
}

std::set<CircularWord> enumerate_b3(int max_len, bool primitive_only) {
    if (max_len < 3) throw std::invalid_argument("max length must be at least 3");
    std::set<CircularWord> out = phi_image_classes(max_len);
    out.merge(fraenkel_power_classes(max_len));
    return primitive_only ? filter_primitive(std::move(out)) : out;
}

std::set<CircularWord> enumerate_m3(int max_len, bool primitive_only) {
    std::set<CircularWord> out = enumerate_b3(max_len);
    out.merge(phi_twisted_classes(max_len));
    out.merge(d3_power_classes(max_len));
    return primitive_only ? filter_primitive(std::move(out)) : out;
}

const char* to_string(Label label) {
    switch (label) {
        case Label::NotAllLetters: return "NOT_ALL_LETTERS";
        case Label::BalancedPhi: return "BALANCED_PHI";
        case Label::BalancedFraenkel: return "BALANCED_FRAENKEL";
        case Label::M3Twisted: return "M3_TWISTED";
        case Label::M3D3: return "M3_D3";
        case Label::OutsideM3: return "OUTSIDE_M3";
    }
    return "?";
}

// Match the primitive root of cw against the S3 images of seed; on success
// report the permutation and the exponent.
static std::optional<ClassificationResult> match_orbit_power(const CircularWord& cw,
                                                             const Word& seed,
                                                             Label label) {
    auto [root, exponent] = primitive_decomposition(cw.canonical());
    if (root.size() != seed.size()) return std::nullopt;
    CircularWord root_class = CircularWord(root);
    for (const auto& sigma : all_permutations(3)) {
        if (CircularWord(apply_permutation(sigma, seed)) == root_class) {
            ClassificationResult r;
            r.label = label;
            r.perm = sigma;
            r.power = exponent;
            return r;
        }
    }
    return std::nullopt;
}

// Linear word b equal to some Christoffel power C(s)^p: slope and power.
static std::optional<BinaryClassification> christoffel_power_form(const Word& b) {
    auto [root, exponent] = primitive_decomposition(b);
    auto s = is_christoffel(root);
    if (!s) return std::nullopt;
    return BinaryClassification{*s, exponent};
}

// b as a twisted word: recover base slope, power, borders.
static std::optional<TwistSpec> twisted_form(const Word& b) {
    ParikhVector counts = parikh(b);
    const int len = static_cast<int>(b.size());
    for (int p = 2; p <= len; ++p) {
        if (len % p || counts[0] % p || counts[1] % p) continue;
        Slope s{counts[0] / p, counts[1] / p};
        if (s.zeros % 2 != 0 || !is_coprime(s)) continue;
        const int block = len / p;
        Word base = christoffel(s);
        Word plain = power(base, p);
        std::set<int> borders;
        bool ok = true;
        for (int i = 0; i < len && ok; ++i) {
            if (b.letters[i] == plain.letters[i]) continue;
            // a difference must be a "10" -> "01" swap at a block border
            if (i % block == block - 1 && i + 1 < len &&
                b.letters[i] == 0 && b.letters[i + 1] == 1 &&
                plain.letters[i] == 1 && plain.letters[i + 1] == 0) {
                borders.insert(i / block + 1);
                ++i;
            } else {
                ok = false;
            }
        }
        if (!ok || borders.empty()) continue;
        TwistSpec spec{s, p, std::move(borders)};
        if (twisted(spec) == b) return spec;
    }
    return std::nullopt;
}

// Search sigma and a rotation whose phi-preimage satisfies `accept`.
template <typename Accept>
static bool search_phi_preimage(const CircularWord& cw, Accept&& accept) {
    for (const auto& sigma : all_permutations(3)) {
        Word u = apply_permutation(inverse(sigma), cw.canonical());
        for (std::size_t r = 0; r < u.size(); ++r) {
            auto b = undo_phi(rotate(u, r));
            if (b && accept(sigma, *b)) return true;
        }
    }
    return false;
}

ClassificationResult classify(const CircularWord& cw) {
    ClassificationResult result;
    bool all_letters = cw.alphabet() == 3;
    if (all_letters) {
        ParikhVector counts = parikh(cw.canonical());
        all_letters = std::find(counts.begin(), counts.end(), 0) == counts.end();
    }
    if (!all_letters) {
        result.label = Label::NotAllLetters;
        return result;
    }

    if (is_balanced(cw)) {
        if (auto r = match_orbit_power(cw, fraenkel(3), Label::BalancedFraenkel)) return *r;
        bool found = search_phi_preimage(cw, [&](const LetterPermutation& sigma, const Word& b) {
            auto cp = christoffel_power_form(b);
            if (!cp) return false;
            result.label = Label::BalancedPhi;
            result.slope = cp->slope;
            result.power = cp->power;
            result.perm = sigma;
            return true;
        });
        if (found) return result;
        throw std::logic_error("balanced ternary class matched no constructive family");
    }

    if (is_abelian_bounded(cw, 3)) {
        if (auto r = match_orbit_power(cw, Word::parse("01210"), Label::M3D3)) return *r;
        bool found = search_phi_preimage(cw, [&](const LetterPermutation& sigma, const Word& b) {
            auto tw = twisted_form(b);
            if (!tw) return false;
            result.label = Label::M3Twisted;
            result.slope = tw->base;
            result.power = tw->power;
            result.borders = tw->borders;
            result.perm = sigma;
            return true;
        });
        if (found) return result;
        throw std::logic_error("abelian-3-bounded class matched no constructive family");
    }

    result.label = Label::OutsideM3;
    result.max_complexity = max_complexity(cw);
    result.min_nonbalanced_scale = minimal_nonbalanced_scale(cw);
    return result;
}

std::optional<CircularWord> reconstruct(const ClassificationResult& r) {
    switch (r.label) {
        case Label::BalancedPhi:
            return CircularWord(apply_permutation(
                *r.perm, phi(christoffel_power(*r.slope, *r.power))));
        case Label::BalancedFraenkel:
            return CircularWord(power(apply_permutation(*r.perm, fraenkel(3)), *r.power));
        case Label::M3Twisted:
            return CircularWord(apply_permutation(
                *r.perm, phi(twisted(TwistSpec{*r.slope, *r.power, r.borders}))));
        case Label::M3D3:
            return CircularWord(
                power(apply_permutation(*r.perm, Word::parse("01210")), *r.power));
        default:
            return std::nullopt;
    }
}

}  // namespace cword
