#include "helpers.hpp"

using namespace mazelab;

TEST_CASE("rng matches the SplitMix64 reference stream") {
    Rng r(0);
    CHECK(r.next() == 0xe220a8397b1dcdafULL);
    CHECK(r.next() == 0x6e789e6aa1b965f4ULL);
    CHECK(r.next() == 0x06c45d188009454fULL);
}

TEST_CASE("derived streams are reproducible and distinct") {
    Rng a = Rng::derive(5, 0);
    Rng b = Rng::derive(5, 0);
    CHECK(a.next() == b.next());
    CHECK(a.next() == b.next());
    CHECK(Rng::derive(5, 1).next() != Rng::derive(5, 0).next());
    CHECK(Rng::derive(6, 0).next() != Rng::derive(5, 0).next());
}

TEST_CASE("bounded draws stay in range and cover the range") {
    Rng r(42);
    for (uint64_t n : {1ULL, 2ULL, 3ULL, 10ULL, 1000ULL}) {
        std::vector<char> hit(n, 0);
        for (int i = 0; i < 2000; ++i) {
            uint64_t x = r.below(n);
            CHECK(x < n);
            hit[x] = 1;
        }
        if (n <= 10) CHECK(std::count(hit.begin(), hit.end(), 1) == static_cast<long>(n));
    }
    Rng ones(7);
    for (int i = 0; i < 100; ++i) CHECK(ones.below(1) == 0);
}

TEST_CASE("coin flips are roughly balanced") {
    Rng r(9);
    int heads = 0;
    for (int i = 0; i < 10000; ++i) heads += r.next_bit() ? 1 : 0;
    CHECK(heads > 4500);
    CHECK(heads < 5500);
}

TEST_CASE("rationals canonicalize and serialize with explicit denominators") {
    CHECK(fraction_str(make_rational(1, 2)) == "1/2");
    CHECK(fraction_str(make_rational(2, 4)) == "1/2");
    CHECK(fraction_str(make_rational(0, 5)) == "0/1");
    CHECK(fraction_str(make_rational(4, 4)) == "1/1");
    CHECK(fraction_str(make_rational(-1, 2)) == "-1/2");
    CHECK(make_rational(mpz_class(3), mpz_class(9)) == make_rational(1, 3));
}

TEST_CASE("probability and denominator predicates") {
    CHECK(is_probability(make_rational(0, 1)));
    CHECK(is_probability(make_rational(1, 1)));
    CHECK(is_probability(make_rational(1, 2)));
    CHECK_FALSE(is_probability(make_rational(3, 2)));
    CHECK_FALSE(is_probability(make_rational(-1, 2)));

    CHECK(denominator_divides(make_rational(1, 8), 2, 3));
    CHECK_FALSE(denominator_divides(make_rational(1, 8), 2, 2));
    CHECK_FALSE(denominator_divides(make_rational(1, 12), 2, 10));
    CHECK(denominator_divides(make_rational(1, 12), 6, 2));
    CHECK(denominator_divides(make_rational(1, 1), 2, 0));
}
