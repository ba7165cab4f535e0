#pragma once

#include <optional>
#include <set>
#include <vector>

#include "cword/word.hpp"

namespace cword {

/// Per-letter occurrence counts; index = letter, sum = word length.
using ParikhVector = std::vector<int>;

ParikhVector parikh(const Word& w);

/// The set of Parikh vectors of all length-n factors.
struct Spectrum {
    int n = 0;
    std::set<ParikhVector> vectors;

    int complexity() const { return static_cast<int>(vectors.size()); }
};

/// n-spectrum of the linear word (factors of w only).
Spectrum spectrum(const Word& w, int n);

/// n-spectrum of the class: Parikh vectors of all ell cyclic windows.
Spectrum circular_spectrum(const CircularWord& cw, int n);

int abelian_complexity(const CircularWord& cw, int n);
int max_complexity(const CircularWord& cw);

/// True iff abelian_complexity(cw, n) <= p for every 1 <= n <= ell.
bool is_abelian_bounded(const CircularWord& cw, int p);

/// Balance in the sense of per-letter window counts differing by at most 1.
/// The circular variant ranges over all cyclic windows, the linear one over
/// factors of the given representative only.
bool is_balanced(const CircularWord& cw);
bool is_balanced(const Word& w);

/// Least window length at which the balance condition fails.
std::optional<int> minimal_nonbalanced_scale(const CircularWord& cw);

/// max_k C(N, k), the complexity bound attained by balanced words.
int balanced_complexity_bound(int alphabet_size);

}  // namespace cword
