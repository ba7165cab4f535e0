// Acceptance suite: one pass/fail line per criterion, exit code = number of
// failed criteria. Criteria 1-2 replay the full classification against the
// brute-force scan; the rest pin golden values, lemma-level properties and
// runtime budgets.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "cword/abelian.hpp"
#include "cword/christoffel.hpp"
#include "cword/geometry.hpp"
#include "cword/infinite.hpp"
#include "cword/oracle.hpp"
#include "cword/ternary.hpp"
#include "cword/tree.hpp"

using namespace cword;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Criterion {
    int id;
    std::string name;
    std::function<bool(std::string&)> run;
};

std::set<CircularWord> of_length(const std::set<CircularWord>& classes, int length) {
    std::set<CircularWord> out;
    for (const auto& cw : classes)
        if (static_cast<int>(cw.size()) == length) out.insert(cw);
    return out;
}

std::string diff_note(const std::set<CircularWord>& brute,
                      const std::set<CircularWord>& constructive, int length) {
    std::ostringstream os;
    for (const auto& cw : brute)
        if (!constructive.count(cw)) os << " L=" << length << " oracle-only " << cw.str();
    for (const auto& cw : constructive)
        if (!brute.count(cw)) os << " L=" << length << " constructive-only " << cw.str();
    return os.str();
}

constexpr int kOracleMaxLen = 14;

// Shared brute-force scan for criteria 1 and 2.
struct OracleRun {
    std::vector<LengthClassification> by_length;  // L = 3..14
    double time_l12 = 0, time_l14 = 0;
};

const OracleRun& oracle_run() {
    static const OracleRun run = [] {
        OracleRun r;
        for (int len = 3; len <= kOracleMaxLen; ++len) {
            auto start = Clock::now();
            r.by_length.push_back(brute_classify_serial(3, len));
            double elapsed = seconds_since(start);
            if (len == 12) r.time_l12 = elapsed;
            if (len == 14) r.time_l14 = elapsed;
        }
        return r;
    }();
    return run;
}

CircularWord orbit_representative(const CircularWord& cw) { return *orbit(cw).begin(); }

bool tree_completeness(int depth, int max_len, std::string& note) {
    std::set<CircularWord> from_tree;
    visit(*build_tree(depth), [&](const TreeNode& node) {
        if (static_cast<int>(node.word.size()) <= max_len)
            from_tree.insert(orbit_representative(node.word));
    });
    std::set<CircularWord> expected;
    auto fraenkel_classes = fraenkel_power_classes(max_len);
    for (const auto& cw : enumerate_b3(max_len, true))
        if (!fraenkel_classes.count(cw)) expected.insert(orbit_representative(cw));

    std::ostringstream os;
    for (const auto& cw : expected)
        if (!from_tree.count(cw)) os << " missing " << cw.str();
    for (const auto& cw : from_tree)
        if (!expected.count(cw)) os << " extra " << cw.str();
    note = os.str();
    return from_tree == expected;
}

}  // namespace

int main() {
    std::vector<Criterion> criteria;

    criteria.push_back({1, "balanced ternary classes equal the constructive set, L=3..14",
                        [](std::string& note) {
        auto b3 = enumerate_b3(kOracleMaxLen);
        bool ok = true;
        for (const auto& lc : oracle_run().by_length) {
            std::string diff = diff_note(lc.balanced, of_length(b3, lc.length), lc.length);
            if (!diff.empty()) ok = false;
            note += diff;
        }
        std::ostringstream os;
        os << " (serial scan: L=12 " << oracle_run().time_l12 << "s, L=14 "
           << oracle_run().time_l14 << "s)";
        note += os.str();
        if (oracle_run().time_l12 > 10.0 || oracle_run().time_l14 > 300.0) {
            ok = false;
            note += " runtime budget exceeded";
        }
        return ok;
    }});

    criteria.push_back({2, "abelian-3-bounded classes equal the constructive set, pieces disjoint",
                        [](std::string& note) {
        auto m3 = enumerate_m3(kOracleMaxLen);
        auto b3 = enumerate_b3(kOracleMaxLen);
        auto twisted_part = phi_twisted_classes(kOracleMaxLen);
        auto d3_part = d3_power_classes(kOracleMaxLen);
        bool ok = true;
        for (const auto& lc : oracle_run().by_length) {
            std::string diff = diff_note(lc.bounded3, of_length(m3, lc.length), lc.length);
            if (!diff.empty()) ok = false;
            note += diff;
            for (const auto& cw : of_length(twisted_part, lc.length))
                if (b3.count(cw) || d3_part.count(cw)) {
                    ok = false;
                    note += " overlap " + cw.str();
                }
            for (const auto& cw : of_length(d3_part, lc.length))
                if (b3.count(cw)) {
                    ok = false;
                    note += " overlap " + cw.str();
                }
        }
        return ok;
    }});

    criteria.push_back({3, "binary: balanced = complexity<=2 = christoffel power, L<=14",
                        [](std::string& note) {
        bool ok = true;
        for (int len = 2; len <= 14; ++len) {
            auto lc = brute_classify_serial(2, len);
            for (const auto& cw : lc.necklaces) {
                bool balanced = lc.balanced.count(cw) > 0;
                bool low = max_complexity(cw) <= 2;
                bool classified = classify_binary(cw).has_value();
                if (balanced != low || balanced != classified) {
                    ok = false;
                    note += " fails at " + cw.str();
                }
            }
        }
        return ok;
    }});

    criteria.push_back({4, "golden words are byte-exact", [](std::string& note) {
        auto expect = [&](const std::string& got, const std::string& want) {
            if (got != want) note += " got " + got + " want " + want;
            return got == want;
        };
        bool ok = true;
        ok &= expect(christoffel(Slope{2, 3}).str(), "01011");
        ok &= expect(phi(christoffel(Slope{4, 3})).str(), "0120212");
        ok &= expect(twisted({Slope{2, 1}, 3, {1}}).str(), "000101001");
        ok &= expect(twisted({Slope{2, 1}, 3, {2}}).str(), "001000101");
        ok &= expect(twisted({Slope{2, 1}, 3, {1, 2}}).str(), "000100101");
        ok &= expect(fraenkel(3).str(), "0102010");
        ok &= parikh(fraenkel(3)) == ParikhVector{4, 2, 1};
        if (parikh(fraenkel(3)) != ParikhVector{4, 2, 1}) note += " fraenkel parikh wrong";
        return ok;
    }});

    criteria.push_back({5, "phi-image spectra saturate (k even) or dip to 2 at n=M (k odd)",
                        [](std::string& note) {
        bool ok = true;
        for (int k = 1; k < 20; ++k)
            for (int n = 1; k + n <= 20; ++n) {
                if (std::gcd(k, n) != 1) continue;
                if (k % 2 == 0) {
                    CircularWord cw(phi(christoffel(Slope{k, n})));
                    for (int m = 1; m < k + n; ++m)
                        if (abelian_complexity(cw, m) != 3) {
                            ok = false;
                            note += " C(" + std::to_string(k) + "," + std::to_string(n) +
                                    ") m=" + std::to_string(m);
                        }
                } else {
                    CircularWord cw(phi(christoffel_power(Slope{k, n}, 2)));
                    if (abelian_complexity(cw, k + n) != 2) {
                        ok = false;
                        note += " C(" + std::to_string(k) + "," + std::to_string(n) + ")^2";
                    }
                }
            }
        return ok;
    }});

    criteria.push_back({6, "3d approximations equal phi images and project to 2d paths",
                        [](std::string& note) {
        auto start = Clock::now();
        bool ok = true;
        for (int m = 1; m < 20; ++m)
            for (int n = 1; m + n <= 20; ++n) {
                if (std::gcd(m, n) != 1) continue;
                int p = m % 2 == 0 ? 1 : 2;
                auto [path, word] = path3d({m, n});
                Word binary = christoffel_power(Slope{m, n}, p);
                if (word != phi(binary) || project_to_diagonal(path) != path_of_word(binary)) {
                    ok = false;
                    note += " (" + std::to_string(m) + "," + std::to_string(n) + ")";
                }
            }
        double elapsed = seconds_since(start);
        std::ostringstream os;
        os << " (" << elapsed << "s)";
        note += os.str();
        if (elapsed > 1.0) {
            ok = false;
            note += " runtime budget exceeded";
        }
        return ok;
    }});

    criteria.push_back({7, "lemma suite over all necklaces of length <= 12", [](std::string& note) {
        bool ok = true;
        auto fail = [&](const char* what, const CircularWord& cw) {
            ok = false;
            note += std::string(" ") + what + " " + cw.str();
        };
        for (int alphabet : {2, 3}) {
            int bound = balanced_complexity_bound(alphabet);
            for (int len = alphabet; len <= 12; ++len) {
                auto lc = brute_classify_serial(alphabet, len);
                for (const auto& cw : lc.necklaces) {
                    for (int n = 1; n < len; ++n)
                        if (abelian_complexity(cw, n) != abelian_complexity(cw, len - n))
                            fail("symmetry", cw);
                    bool trivial = false;
                    for (int n = 1; n < len && !trivial; ++n)
                        trivial = abelian_complexity(cw, n) == 1;
                    if (trivial != (primitive_decomposition(cw.canonical()).exponent > 1))
                        fail("reducibility", cw);
                    bool balanced = lc.balanced.count(cw) > 0;
                    for (int p : {2, 3})
                        if (is_balanced(power(cw, p)) != balanced) fail("power-balance", cw);
                    if (balanced && max_complexity(cw) > bound) fail("K_N bound", cw);
                }
            }
        }
        return ok;
    }});

    criteria.push_back({8, "fibonacci-driven segments: complexity == 3 for n <= 200",
                        [](std::string& note) {
        auto start = Clock::now();
        bool ok = true;
        for (auto [m, n] : {std::pair{2, 1}, std::pair{4, 3}}) {
            auto spec = morphism_images(m, n);
            Word segment = expand(BitSource::fibonacci(), spec, 0, 5000);
            for (int k = 1; k <= 200; ++k) {
                int c = window_complexity(segment, k);
                if (c != 3) {  // the bound <= 3 plus the observed equality
                    ok = false;
                    note += " n=" + std::to_string(k) + " complexity " + std::to_string(c);
                }
            }
        }
        double elapsed = seconds_since(start);
        std::ostringstream os;
        os << " (" << elapsed << "s)";
        note += os.str();
        if (elapsed > 5.0) {
            ok = false;
            note += " runtime budget exceeded";
        }
        return ok;
    }});

    criteria.push_back({9, "tree at depth 8 covers primitive balanced classes of length <= 12",
                        [](std::string& note) {
        return tree_completeness(8, 12, note);
    }});

    criteria.push_back({10, "twisting every cyclic border of [C(2,1)^p] is conjugation",
                        [](std::string& note) {
        bool ok = true;
        for (int p : {2, 3, 4}) {
            Word w = christoffel_power(Slope{2, 1}, p);
            for (int b = 1; b < p; ++b) std::swap(w.letters[b * 3 - 1], w.letters[b * 3]);
            std::swap(w.letters[w.size() - 1], w.letters[0]);
            if (CircularWord(w) != CircularWord(christoffel_power(Slope{2, 1}, p))) {
                ok = false;
                note += " p=" + std::to_string(p);
            }
        }
        return ok;
    }});

    int failures = 0;
    for (auto& criterion : criteria) {
        std::string note;
        bool ok = criterion.run(note);
        if (!ok) ++failures;
        std::printf("[%s] criterion %2d: %s%s\n", ok ? "PASS" : "FAIL", criterion.id,
                    criterion.name.c_str(), note.c_str());
        std::fflush(stdout);
    }

    // Informative only: the same completeness check with the tree deepened
    // far enough to reach the pair (1,10), whose word has length 12.
    {
        std::string note;
        bool ok = tree_completeness(9, 12, note);
        std::printf("[%s] note: tree completeness at depth 9 (length <= 12)%s\n",
                    ok ? "PASS" : "FAIL", note.c_str());
    }

    std::printf("%d of %zu criteria failed\n", failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
