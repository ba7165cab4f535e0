#include "cword/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "cword/abelian.hpp"
#include "cword/christoffel.hpp"
#include "cword/ternary.hpp"

namespace cword {

namespace {

// A canonical string with all letters present starts with 0, so only
// suffixes after a fixed leading 0 are enumerated: N^(L-1) candidates.
// Candidate index -> letters, lowest-significance digit last.
void decode(std::int64_t index, int alphabet, std::vector<Letter>& letters) {
    for (std::size_t i = letters.size(); i-- > 1;) {
        letters[i] = static_cast<Letter>(index % alphabet);
        index /= alphabet;
    }
    letters[0] = 0;
}

// Is s its own least rotation? Plain comparison with early exit.
bool is_least_rotation(const std::vector<Letter>& s) {
    const std::size_t n = s.size();
    for (std::size_t r = 1; r < n; ++r) {
        for (std::size_t i = 0; i < n; ++i) {
            Letter a = s[i], b = s[(r + i) % n];
            if (a != b) {
                if (b < a) return false;
                break;
            }
        }
    }
    return true;
}

bool all_letters_present(const std::vector<Letter>& s, int alphabet) {
    int mask = 0;
    for (Letter a : s) mask |= 1 << a;
    return mask == (1 << alphabet) - 1;
}

std::int64_t pow_ll(int base, int exp) {
    std::int64_t r = 1;
    while (exp-- > 0) r *= base;
    return r;
}

void check_domain(int alphabet, int length) {
    if (alphabet != 2 && alphabet != 3)
        throw std::invalid_argument("oracle supports alphabets 2 and 3");
    if (length < alphabet)
        throw std::invalid_argument("length must be at least the alphabet size");
}

void classify_candidate(std::vector<Letter> s, int alphabet, LengthClassification& out) {
    Word w(std::move(s), alphabet);
    CircularWord cw = CircularWord::from_canonical(std::move(w));
    bool balanced = is_balanced(cw);
    bool bounded = is_abelian_bounded(cw, 3);
    if (balanced) out.balanced.insert(cw);
    if (bounded) out.bounded3.insert(cw);
    out.necklaces.insert(std::move(cw));
}

}  // namespace

std::set<CircularWord> enumerate_necklaces(int alphabet, int length) {
    check_domain(alphabet, length);
    std::set<CircularWord> out;
    std::vector<Letter> s(length);
    const std::int64_t total = pow_ll(alphabet, length - 1);
    for (std::int64_t idx = 0; idx < total; ++idx) {
        decode(idx, alphabet, s);
        if (is_least_rotation(s) && all_letters_present(s, alphabet))
            out.insert(CircularWord::from_canonical(Word(s, alphabet)));
    }
    return out;
}

LengthClassification brute_classify_serial(int alphabet, int length) {
    check_domain(alphabet, length);
    LengthClassification out{alphabet, length, {}, {}, {}};
    std::vector<Letter> s(length);
    const std::int64_t total = pow_ll(alphabet, length - 1);
    for (std::int64_t idx = 0; idx < total; ++idx) {
        decode(idx, alphabet, s);
        if (is_least_rotation(s) && all_letters_present(s, alphabet))
            classify_candidate(s, alphabet, out);
    }
    return out;
}

LengthClassification brute_classify(int alphabet, int length, int threads) {
    check_domain(alphabet, length);
    LengthClassification out{alphabet, length, {}, {}, {}};
    const std::int64_t total = pow_ll(alphabet, length - 1);
#ifdef _OPENMP
    const int workers = threads > 0 ? threads : omp_get_max_threads();
    std::vector<LengthClassification> partial(
        workers, LengthClassification{alphabet, length, {}, {}, {}});
#pragma omp parallel num_threads(workers)
    {
        const int me = omp_get_thread_num();
        std::vector<Letter> s(length);
#pragma omp for schedule(static)
        for (std::int64_t idx = 0; idx < total; ++idx) {
            decode(idx, alphabet, s);
            if (is_least_rotation(s) && all_letters_present(s, alphabet))
                classify_candidate(s, alphabet, partial[me]);
        }
    }
    for (auto& p : partial) {
        out.necklaces.merge(p.necklaces);
        out.balanced.merge(p.balanced);
        out.bounded3.merge(p.bounded3);
    }
#else
    (void)threads;
    out = brute_classify_serial(alphabet, length);
    (void)total;
#endif
    return out;
}

namespace {

void report_difference(const char* what, int length, const std::set<CircularWord>& brute,
                       const std::set<CircularWord>& constructive,
                       std::vector<std::string>& mismatches) {
    auto describe = [&](const CircularWord& cw, const char* side) {
        std::ostringstream os;
        os << what << " L=" << length << ' ' << side << ": " << cw.str();
        mismatches.push_back(os.str());
    };
    for (const auto& cw : brute)
        if (!constructive.count(cw)) describe(cw, "oracle-only");
    for (const auto& cw : constructive)
        if (!brute.count(cw)) describe(cw, "constructive-only");
}

std::set<CircularWord> of_length(const std::set<CircularWord>& classes, int length) {
    std::set<CircularWord> out;
    for (const auto& cw : classes)
        if (static_cast<int>(cw.size()) == length) out.insert(cw);
    return out;
}

}  // namespace

OracleReport verify_theorems(int alphabet, int max_len, int threads) {
    check_domain(alphabet, max_len);
    OracleReport report{alphabet, max_len, {}, {}};

    if (alphabet == 3) {
        auto b3 = enumerate_b3(max_len);
        auto m3 = enumerate_m3(max_len);
        auto phi_part = phi_image_classes(max_len);
        auto fraenkel_part = fraenkel_power_classes(max_len);
        auto twisted_part = phi_twisted_classes(max_len);
        auto d3_part = d3_power_classes(max_len);
        for (int len = 3; len <= max_len; ++len) {
            auto brute = brute_classify(3, len, threads);
            report_difference("balanced", len, brute.balanced, of_length(b3, len),
                              report.mismatches);
            report_difference("bounded3", len, brute.bounded3, of_length(m3, len),
                              report.mismatches);
            // the disjoint unions behind both classifications
            auto overlap = [&](const std::set<CircularWord>& a,
                               const std::set<CircularWord>& b, const char* what) {
                for (const auto& cw : of_length(a, len))
                    if (b.count(cw)) {
                        std::ostringstream os;
                        os << what << " L=" << len << " overlap: " << cw.str();
                        report.mismatches.push_back(os.str());
                    }
            };
            overlap(phi_part, fraenkel_part, "phi/fraenkel");
            overlap(b3, twisted_part, "b3/twisted");
            overlap(b3, d3_part, "b3/d3");
            overlap(twisted_part, d3_part, "twisted/d3");
            report.by_length.push_back(std::move(brute));
        }
    } else {
        std::set<CircularWord> christoffel_powers;
        for (const Word& c : enumerate_christoffel(max_len))
            for (int p = 1; p * static_cast<int>(c.size()) <= max_len; ++p)
                christoffel_powers.insert(CircularWord(power(c, p)));
        for (int len = 2; len <= max_len; ++len) {
            auto brute = brute_classify(2, len, threads);
            report_difference("balanced", len, brute.balanced,
                              of_length(christoffel_powers, len), report.mismatches);
            for (const auto& cw : brute.necklaces) {
                bool balanced = brute.balanced.count(cw) > 0;
                bool low_complexity = max_complexity(cw) <= 2;
                bool classified = classify_binary(cw).has_value();
                if (balanced != low_complexity || balanced != classified) {
                    std::ostringstream os;
                    os << "binary equivalence L=" << len << " fails: " << cw.str();
                    report.mismatches.push_back(os.str());
                }
            }
            report.by_length.push_back(std::move(brute));
        }
    }
    return report;
}

}  // namespace cword
