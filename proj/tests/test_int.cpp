#include <doctest.h>

#include <random>

#include "numap/errors.hpp"
#include "numap/int.hpp"

using namespace numap;

TEST_CASE("Int construction and decimal round-trip") {
    CHECK(Int().str() == "0");
    CHECK(Int(0).str() == "0");
    CHECK(Int(-1).str() == "-1");
    CHECK(Int(123456789012345678LL).str() == "123456789012345678");
    CHECK(Int::from_string("007") == Int(7));
    CHECK(Int::from_string("-0") == Int(0));
    CHECK(Int::from_string("000000000000") == Int(0));
    CHECK(Int::from_string("+42") == Int(42));
    CHECK(Int::from_string("123456789012345678901234567890").str() ==
          "123456789012345678901234567890");
    CHECK_THROWS_AS(Int::from_string(""), ParseError);
    CHECK_THROWS_AS(Int::from_string("12a"), ParseError);
    CHECK_THROWS_AS(Int::from_string("--5"), ParseError);
}

TEST_CASE("Int arithmetic agrees with native integers on a sampled grid") {
    std::mt19937_64 gen(7);
    for (int iter = 0; iter < 2000; ++iter) {
        long long a = static_cast<long long>(gen() % 2000001) - 1000000;
        long long b = static_cast<long long>(gen() % 2000001) - 1000000;
        CHECK(Int(a) + Int(b) == Int(a + b));
        CHECK(Int(a) - Int(b) == Int(a - b));
        CHECK(Int(a) * Int(b) == Int(a * b));
        if (b != 0) {
            CHECK(Int(a) / Int(b) == Int(a / b));
            CHECK(Int(a) % Int(b) == Int(a % b));
        }
        CHECK((Int(a) <=> Int(b)) == (a <=> b));
    }
}

TEST_CASE("Int multi-limb multiplication and division") {
    Int two_pow_100(1);
    for (int i = 0; i < 100; ++i) two_pow_100 *= Int(2);
    CHECK(two_pow_100.str() == "1267650600228229401496703205376");

    Int big = Int::from_string("123456789012345678901234567890");
    Int small = Int::from_string("987654321098765");
    Int prod = big * small;
    CHECK(prod / small == big);
    CHECK(prod % small == Int(0));
    CHECK((prod + Int(17)) % small == Int(17));

    // divmod identity a == q*b + r with |r| < |b| and sign(r) == sign(a)
    std::mt19937_64 gen(11);
    for (int iter = 0; iter < 300; ++iter) {
        long long raw_a = static_cast<long long>(gen()) % 1000000007LL;
        long long raw_b = static_cast<long long>(gen()) % 10007LL;
        if (raw_b == 0) raw_b = 3;
        Int a = Int(raw_a) * Int(raw_a) + Int(raw_a);
        Int b(raw_b);
        Int q, r;
        Int::divmod(a, b, q, r);
        CHECK(q * b + r == a);
        CHECK(r.abs() < b.abs());
        if (!r.is_zero()) CHECK(r.sign() == a.sign());
    }
}

TEST_CASE("Int exact division asserts divisibility") {
    CHECK(Int(24).div_exact(Int(6)) == Int(4));
    CHECK(Int(-24).div_exact(Int(6)) == Int(-4));
    CHECK_THROWS_AS(Int(25).div_exact(Int(6)), std::logic_error);
}

TEST_CASE("Int gcd") {
    CHECK(Int::gcd(Int(12), Int(18)) == Int(6));
    CHECK(Int::gcd(Int(-12), Int(18)) == Int(6));
    CHECK(Int::gcd(Int(0), Int(5)) == Int(5));
    CHECK(Int::gcd(Int(0), Int(0)) == Int(0));
}

TEST_CASE("Rat canonical form and arithmetic") {
    CHECK(Rat(Int(2), Int(4)) == Rat(Int(1), Int(2)));
    CHECK(Rat(Int(1), Int(-2)) == Rat(Int(-1), Int(2)));
    CHECK(Rat(Int(0), Int(-7)).str() == "0");
    CHECK(Rat(Int(-1), Int(2)).str() == "-1/2");
    CHECK(Rat(Int(6), Int(3)).is_integral());
    CHECK(Rat::from_string("-1/2") == Rat(Int(-1), Int(2)));
    CHECK(Rat::from_string("5") == Rat(Int(5)));

    Rat half(Int(1), Int(2));
    Rat third(Int(1), Int(3));
    CHECK(half + third == Rat(Int(5), Int(6)));
    CHECK(half - third == Rat(Int(1), Int(6)));
    CHECK(half * third == Rat(Int(1), Int(6)));
    CHECK((half + (-half)).is_zero());
}
