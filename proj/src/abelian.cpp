#include "cword/abelian.hpp"

#include <algorithm>
#include <stdexcept>

namespace cword {

ParikhVector parikh(const Word& w) {
    ParikhVector counts(w.alphabet, 0);
    for (Letter a : w.letters) ++counts[a];
    return counts;
}

Spectrum spectrum(const Word& w, int n) {
    if (n < 1 || static_cast<std::size_t>(n) > w.size())
        throw std::invalid_argument("window length out of range");
    Spectrum sp;
    sp.n = n;
    ParikhVector window(w.alphabet, 0);
    for (int i = 0; i < n; ++i) ++window[w.letters[i]];
    sp.vectors.insert(window);
    for (std::size_t i = n; i < w.size(); ++i) {
        ++window[w.letters[i]];
        --window[w.letters[i - n]];
        sp.vectors.insert(window);
    }
    return sp;
}

// Sliding window over the doubled canonical word, one start per position.
template <typename Visit>
static void scan_cyclic_windows(const Word& w, int n, Visit&& visit) {
    const std::size_t ell = w.size();
    ParikhVector window(w.alphabet, 0);
    for (int i = 0; i < n; ++i) ++window[w.letters[i % ell]];
    if (!visit(window)) return;
    for (std::size_t s = 1; s < ell; ++s) {
        ++window[w.letters[(s + n - 1) % ell]];
        --window[w.letters[s - 1]];
        if (!visit(window)) return;
    }
}

Spectrum circular_spectrum(const CircularWord& cw, int n) {
    if (n < 1 || static_cast<std::size_t>(n) > cw.size())
        throw std::invalid_argument("window length out of range");
    Spectrum sp;
    sp.n = n;
    scan_cyclic_windows(cw.canonical(), n, [&](const ParikhVector& v) {
        sp.vectors.insert(v);
        return true;
    });
    return sp;
}

int abelian_complexity(const CircularWord& cw, int n) {
    return circular_spectrum(cw, n).complexity();
}

int max_complexity(const CircularWord& cw) {
    int best = 0;
    for (int n = 1; n <= static_cast<int>(cw.size()); ++n)
        best = std::max(best, abelian_complexity(cw, n));
    return best;
}

bool is_abelian_bounded(const CircularWord& cw, int p) {
    for (int n = 1; n <= static_cast<int>(cw.size()); ++n) {
        std::set<ParikhVector> seen;
        bool ok = true;
        scan_cyclic_windows(cw.canonical(), n, [&](const ParikhVector& v) {
            seen.insert(v);
            ok = static_cast<int>(seen.size()) <= p;
            return ok;
        });
        if (!ok) return false;
    }
    return true;
}

// Balance at a fixed scale: per letter, max window count - min <= 1.
static bool balanced_at_scale(const Word& w, int n) {
    ParikhVector lo(w.alphabet, 0), hi(w.alphabet, 0);
    bool ok = true;
    bool first = true;
    scan_cyclic_windows(w, n, [&](const ParikhVector& v) {
        if (first) {
            lo = hi = v;
            first = false;
        } else {
            for (int a = 0; a < w.alphabet; ++a) {
                lo[a] = std::min(lo[a], v[a]);
                hi[a] = std::max(hi[a], v[a]);
                if (hi[a] - lo[a] > 1) ok = false;
            }
        }
        return ok;
    });
    return ok;
}

bool is_balanced(const CircularWord& cw) {
    for (int n = 1; n < static_cast<int>(cw.size()); ++n)
        if (!balanced_at_scale(cw.canonical(), n)) return false;
    return true;
}

bool is_balanced(const Word& w) {
    if (w.empty()) throw std::invalid_argument("empty word");
    for (int n = 1; n <= static_cast<int>(w.size()); ++n) {
        ParikhVector lo(w.alphabet, 0), hi(w.alphabet, 0);
        ParikhVector window(w.alphabet, 0);
        for (int i = 0; i < n; ++i) ++window[w.letters[i]];
        lo = hi = window;
        for (std::size_t i = n; i < w.size(); ++i) {
            ++window[w.letters[i]];
            --window[w.letters[i - n]];
            for (int a = 0; a < w.alphabet; ++a) {
                lo[a] = std::min(lo[a], window[a]);
                hi[a] = std::max(hi[a], window[a]);
                if (hi[a] - lo[a] > 1) return false;
            }
        }
    }
    return true;
}

std::optional<int> minimal_nonbalanced_scale(const CircularWord& cw) {
    for (int n = 1; n < static_cast<int>(cw.size()); ++n)
        if (!balanced_at_scale(cw.canonical(), n)) return n;
    return std::nullopt;
}

int balanced_complexity_bound(int alphabet_size) {
    if (alphabet_size < 1) throw std::invalid_argument("alphabet size must be positive");
    // central binomial coefficient C(N, N/2)
    long long c = 1;
    for (int i = 1; i <= alphabet_size / 2; ++i)
        c = c * (alphabet_size - i + 1) / i;
    return static_cast<int>(c);
}

}  // namespace cword
