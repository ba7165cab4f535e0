#include <doctest.h>

#include <numeric>

#include "cword/abelian.hpp"
#include "cword/christoffel.hpp"
#include "cword/oracle.hpp"

using namespace cword;

namespace {

template <typename F>
void for_each_coprime(int max_len, F&& f) {
    for (int k = 1; k < max_len; ++k)
        for (int n = 1; k + n <= max_len; ++n)
            if (std::gcd(k, n) == 1) f(Slope{k, n});
}

}  // namespace

TEST_CASE("christoffel words") {
    CHECK(christoffel(Slope{2, 3}).str() == "01011");
    CHECK(christoffel(Slope{2, 1}).str() == "001");
    CHECK(christoffel(Slope{1, 1}).str() == "01");
    CHECK(christoffel(Slope{4, 3}).str() == "0010101");
    CHECK(christoffel(Slope{1, 4}).str() == "01111");
    CHECK(christoffel_power(Slope{2, 1}, 3).str() == "001001001");
    CHECK_THROWS_WITH(christoffel(Slope{2, 4}), "not coprime");
    CHECK_THROWS(christoffel(Slope{0, 1}));
}

TEST_CASE("christoffel letter counts match the slope") {
    for_each_coprime(30, [](Slope s) {
        Word w = christoffel(s);
        CHECK(parikh(w) == ParikhVector{s.zeros, s.ones});
        CHECK(is_primitive(w));
        CHECK(is_balanced(CircularWord(w)));
    });
}

TEST_CASE("the christoffel path touches its line only at the endpoints") {
    for_each_coprime(20, [](Slope s) {
        long long x = 0, y = 0;
        int touches = 1;  // the origin
        for (Letter a : christoffel(s).letters) {
            a == 0 ? ++x : ++y;
            if (y * s.zeros == x * s.ones) ++touches;
            CHECK(y * s.zeros <= x * s.ones);  // never above the line
        }
        CHECK(touches == 2);
    });
}

TEST_CASE("palindrome factor") {
    CHECK(palindrome_factor(Word::parse("01011")).str() == "101");
    CHECK(palindrome_factor(Word::parse("01")).str() == "");
    CHECK(palindrome_factor(Word::parse("001")).str() == "0");
    CHECK_THROWS(palindrome_factor(Word::parse("10100")));
    CHECK_THROWS(palindrome_factor(Word::parse("0")));
    for_each_coprime(30, [](Slope s) {
        CHECK(is_palindrome(palindrome_factor(christoffel(s))));
    });
}

TEST_CASE("is_christoffel") {
    auto s = is_christoffel(Word::parse("01011"));
    REQUIRE(s.has_value());
    CHECK(*s == Slope{2, 3});
    CHECK(!is_christoffel(Word::parse("10100")).has_value());
    CHECK(!is_christoffel(Word::parse("0011")).has_value());
    CHECK(!is_christoffel(Word::parse("0")).has_value());
    for_each_coprime(25, [](Slope s) {
        CHECK(is_christoffel(christoffel(s)) == s);
    });
}

TEST_CASE("classify_binary") {
    auto c = classify_binary(CircularWord(Word::parse("0101101011")));
    REQUIRE(c.has_value());
    CHECK(c->slope == Slope{2, 3});
    CHECK(c->power == 2);
    CHECK(!classify_binary(CircularWord(Word::parse("0011"))).has_value());
    auto unit = classify_binary(CircularWord(Word::parse("01")));
    REQUIRE(unit.has_value());
    CHECK(unit->slope == Slope{1, 1});
    CHECK(unit->power == 1);
    CHECK(!classify_binary(CircularWord(Word::parse("0", 2))).has_value());
}

TEST_CASE("classify_binary inverts christoffel powers") {
    for_each_coprime(12, [](Slope s) {
        for (int p = 1; p * (s.zeros + s.ones) <= 24; ++p) {
            auto c = classify_binary(CircularWord(christoffel_power(s, p)));
            REQUIRE(c.has_value());
            CHECK(c->slope == s);
            CHECK(c->power == p);
        }
    });
}

TEST_CASE("enumerate_christoffel") {
    std::set<std::string> got;
    for (const Word& w : enumerate_christoffel(3)) got.insert(w.str());
    CHECK(got == std::set<std::string>{"01", "001", "011"});
    std::set<std::string> two;
    for (const Word& w : enumerate_christoffel(2)) two.insert(w.str());
    CHECK(two == std::set<std::string>{"01"});
    bool found = false;
    for (const Word& w : enumerate_christoffel(5)) found = found || w.str() == "01011";
    CHECK(found);
    CHECK_THROWS(enumerate_christoffel(1));
}

TEST_CASE("balanced binary necklaces are exactly christoffel powers") {
    for (int len = 2; len <= 12; ++len) {
        for (const auto& cw : enumerate_necklaces(2, len)) {
            bool balanced = is_balanced(cw);
            bool low = max_complexity(cw) <= 2;
            bool classified = classify_binary(cw).has_value();
            CHECK(balanced == low);
            CHECK(balanced == classified);
        }
    }
}
