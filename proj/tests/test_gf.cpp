#include <random>
#include <vector>

#include "doctest.h"
#include "weightforge/gf.hpp"

using namespace weightforge;

namespace {

std::vector<unsigned> supported_orders() {
    std::vector<unsigned> out;
    for (unsigned q = 2; q <= 256; ++q) {
        unsigned p = 0;
        for (unsigned d = 2; d * d <= q; ++d)
            if (q % d == 0) {
                p = d;
                break;
            }
        if (p == 0) {
            out.push_back(q);  // prime
            continue;
        }
        unsigned t = q;
        while (t % p == 0) t /= p;
        if (t == 1) out.push_back(q);
    }
    return out;
}

void check_axioms(const Field& f, uint8_t a, uint8_t b, uint8_t c) {
    CHECK(f.add(a, b) == f.add(b, a));
    CHECK(f.mul(a, b) == f.mul(b, a));
    CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
    CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
    CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
}

}  // namespace

TEST_CASE("GF(5) is plain mod-5 arithmetic") {
    Field f = field_new(5);
    CHECK(f.q() == 5);
    CHECK(f.p() == 5);
    CHECK(f.m() == 1);
    CHECK(f.modulus().empty());
    CHECK(f.mul(2, 3) == 1);
    CHECK(f.inv(2) == 3);
    CHECK(f.add(4, 3) == 2);
    CHECK(f.neg(2) == 3);
    CHECK(f.sub(1, 3) == 3);
}

TEST_CASE("GF(4) uses x^2+x+1 and the digit encoding") {
    Field f = field_new(4);
    CHECK(f.p() == 2);
    CHECK(f.m() == 2);
    CHECK(f.modulus() == std::vector<uint8_t>{1, 1, 1});
    // 2 <-> x, 3 <-> x+1: x(x+1) = x^2+x = 1 mod x^2+x+1
    CHECK(f.mul(2, 3) == 1);
    CHECK(f.inv(2) == 3);
    CHECK(f.add(2, 3) == 1);  // addition is XOR of encodings
}

TEST_CASE("GF(9) gets the smallest-lex modulus x^2+1") {
    Field f = field_new(9);
    CHECK(f.modulus() == std::vector<uint8_t>{1, 0, 1});
    for (unsigned a = 1; a < 9; ++a) CHECK(f.mul(uint8_t(a), f.inv(uint8_t(a))) == 1);
}

TEST_CASE("GF(2) characteristic") {
    CHECK(field_new(2).add(1, 1) == 0);
}

TEST_CASE("GF(7): pow(3, 6) = 1") {
    CHECK(field_new(7).pow(3, 6) == 1);
    CHECK(field_new(7).pow(3, 0) == 1);
    CHECK(field_new(7).pow(0, 3) == 0);
}

TEST_CASE("non prime powers rejected") {
    CHECK_THROWS_AS(field_new(6), NotPrimePower);
    CHECK_THROWS_AS(field_new(12), NotPrimePower);
    CHECK_THROWS_AS(field_new(0), NotPrimePower);
    CHECK_THROWS_AS(field_new(1), NotPrimePower);
}

TEST_CASE("order cap") {
    CHECK_THROWS_AS(field_new(257), CapExceeded);
    CHECK_THROWS_AS(field_new(512), CapExceeded);
}

TEST_CASE("arithmetic errors") {
    Field f = field_new(5);
    CHECK_THROWS_AS(f.inv(0), DivisionByZero);
    CHECK_THROWS_AS(f.add(5, 0), OutOfRange);
    CHECK_THROWS_AS(f.mul(0, 9), OutOfRange);
    CHECK_THROWS_AS(f.inv(200), OutOfRange);
}

TEST_CASE("field axioms hold for every supported order") {
    std::mt19937_64 rng(20240817);
    for (unsigned q : supported_orders()) {
        CAPTURE(q);
        Field f = field_new(q);
        for (unsigned a = 0; a < q; ++a) {
            CHECK(f.add(uint8_t(a), f.neg(uint8_t(a))) == 0);
            CHECK(f.add(uint8_t(a), 0) == a);
            CHECK(f.mul(uint8_t(a), 1) == a);
            if (a != 0) CHECK(f.mul(uint8_t(a), f.inv(uint8_t(a))) == 1);
        }
        if (q <= 16) {
            for (unsigned a = 0; a < q; ++a)
                for (unsigned b = 0; b < q; ++b)
                    for (unsigned c = 0; c < q; ++c)
                        check_axioms(f, uint8_t(a), uint8_t(b), uint8_t(c));
        } else {
            for (int i = 0; i < 10000; ++i)
                check_axioms(f, uint8_t(rng() % q), uint8_t(rng() % q), uint8_t(rng() % q));
        }
    }
}

TEST_CASE("field_new is deterministic") {
    for (unsigned q : {9u, 16u, 251u, 256u}) {
        Field a = field_new(q);
        Field b = field_new(q);
        CHECK(a.modulus() == b.modulus());
        bool same = true;
        for (size_t i = 0; i < size_t(q) * q; ++i) {
            same = same && a.add_table()[i] == b.add_table()[i];
            same = same && a.mul_table()[i] == b.mul_table()[i];
        }
        for (size_t i = 0; i < q; ++i) {
            same = same && a.neg_table()[i] == b.neg_table()[i];
            same = same && a.inv_table()[i] == b.inv_table()[i];
        }
        CHECK(same);
    }
}
