#pragma once

#include <set>
#include <string>
#include <vector>

#include "cword/word.hpp"

namespace cword {

/// Definition-level classification of every necklace of one length:
/// balance and the abelian-3 bound are checked window by window, with no
/// constructive shortcut. Only canonical classes containing all N letters
/// are kept.
struct LengthClassification {
    int alphabet = 0;
    int length = 0;
    std::set<CircularWord> necklaces;
    std::set<CircularWord> balanced;
    std::set<CircularWord> bounded3;
};

/// Every length-L canonical class over the N-letter alphabet containing
/// all N letters, exactly once. N must be 2 or 3.
std::set<CircularWord> enumerate_necklaces(int alphabet, int length);

/// Serial reference implementation of the scan.
LengthClassification brute_classify_serial(int alphabet, int length);

/// OpenMP scan partitioned by string prefix; threads <= 0 picks the
/// runtime default. Results are merged deterministically and equal the
/// serial reference bit for bit.
LengthClassification brute_classify(int alphabet, int length, int threads = 0);

/// Comparison of the brute-force sets against the constructive
/// enumerations, plus the disjointness of the constructive pieces.
/// Mismatches list the offending words verbatim; an empty list means the
/// classification theorems hold at every checked length.
struct OracleReport {
    int alphabet = 0;
    int max_len = 0;
    std::vector<LengthClassification> by_length;
    std::vector<std::string> mismatches;

    bool ok() const { return mismatches.empty(); }
};

OracleReport verify_theorems(int alphabet, int max_len, int threads = 0);

}  // namespace cword
