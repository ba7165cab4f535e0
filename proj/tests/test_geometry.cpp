#include <doctest.h>

#include <numeric>

#include "cword/geometry.hpp"
#include "cword/ternary.hpp"

using namespace cword;

namespace {

int count_occurrences(const std::string& haystack, const std::string& needle) {
    int count = 0;
    for (std::size_t pos = haystack.find(needle); pos != std::string::npos;
         pos = haystack.find(needle, pos + needle.size()))
        ++count;
    return count;
}

}  // namespace

TEST_CASE("path3d golden words") {
    CHECK(path3d({4, 3}).second.str() == "0120212");
    CHECK(path3d({1, 1}).second.str() == "0212");
    CHECK(path3d({2, 1}).second.str() == "012");
    CHECK_THROWS(path3d({2, 4}));
    CHECK_THROWS(path3d({0, 1}));
}

TEST_CASE("path3d equals the phi image of the right christoffel power") {
    for (int m = 1; m < 20; ++m)
        for (int n = 1; m + n <= 20; ++n) {
            if (std::gcd(m, n) != 1) continue;
            int p = m % 2 == 0 ? 1 : 2;
            auto [path, word] = path3d({m, n});
            CHECK(word == phi(christoffel_power(Slope{m, n}, p)));
            CHECK(word.size() == static_cast<std::size_t>(p) * (m + n));
            CHECK(project_to_diagonal(path) ==
                  path_of_word(christoffel_power(Slope{m, n}, p)));
        }
}

TEST_CASE("path3d stays under its plane and stops on it") {
    for (int m = 1; m < 16; ++m)
        for (int n = 1; m + n <= 16; ++n) {
            if (std::gcd(m, n) != 1) continue;
            auto [path, word] = path3d({m, n});
            long long x = 0, y = 0, z = 0;
            for (Step s : path.steps) {
                if (s == Step::X) ++x;
                else if (s == Step::Y) ++y;
                else ++z;
                CHECK(z * m <= n * (x + y));
            }
            CHECK(x == y);
            CHECK(z * m == n * (x + y));
        }
}

TEST_CASE("projection maps steps as expected") {
    LatticePath empty{3, {}};
    CHECK(project_to_diagonal(empty).steps.empty());
    auto projected = project_to_diagonal(path3d({1, 1}).first);
    CHECK(word_of_path(projected).str() == "0101");
}

TEST_CASE("path2d") {
    CHECK(word_of_path(path2d(Slope{2, 3})).str() == "01011");
    CHECK(word_of_path(path2d(Slope{1, 1})).str() == "01");
    CHECK(word_of_path(path2d(Slope{2, 1})).str() == "001");
}

TEST_CASE("svg path output") {
    SvgStyle style;
    style.guide = {{2, 3}};
    std::string svg = svg_path(path2d(Slope{2, 3}), style);
    CHECK(svg.rfind("<?xml version=\"1.0\" encoding=\"UTF-8\"?>", 0) == 0);
    CHECK(count_occurrences(svg, "<line class=\"guide\"") == 1);
    CHECK(count_occurrences(svg, "<line x1=") == 5);
    CHECK(count_occurrences(svg, "</svg>") == 1);

    std::string iso = svg_path(path3d({4, 3}).first);
    CHECK(count_occurrences(iso, "<line x1=") == 7);
}

TEST_CASE("svg necklace output") {
    std::string svg = svg_necklace(CircularWord(Word::parse("0102010")));
    CHECK(count_occurrences(svg, "<polygon") == 3);
    std::string tiny = svg_necklace(CircularWord(Word::parse("012")));
    CHECK(count_occurrences(tiny, "<polygon") == 3);
    CHECK(count_occurrences(tiny, "</svg>") == 1);
}
