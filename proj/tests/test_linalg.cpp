#include <random>

#include "doctest.h"
#include "support/oracle.hpp"
#include "weightforge/kernels.hpp"
#include "weightforge/linalg.hpp"

using namespace weightforge;

namespace {

FqVector vec(const Field& f, std::vector<uint8_t> e) { return {f, std::move(e)}; }

FqVector add_vectors(const FqVector& u, const FqVector& v) {
    std::vector<uint8_t> out(u.size());
    for (size_t i = 0; i < u.size(); ++i) out[i] = u.field().add(u[i], v[i]);
    return {u.field(), std::move(out)};
}

FqVector scale_vector(uint8_t a, const FqVector& v) {
    std::vector<uint8_t> out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = v.field().mul(a, v[i]);
    return {v.field(), std::move(out)};
}

}  // namespace

TEST_CASE("encode basics") {
    Field f2 = field_new(2);
    LinearCode c{GenMatrix(f2, {{1, 0, 1}, {0, 1, 1}})};
    CHECK(encode(c, vec(f2, {0, 0})) == vec(f2, {0, 0, 0}));
    CHECK(encode(c, vec(f2, {1, 1})) == vec(f2, {1, 1, 0}));

    Field f3 = field_new(3);
    LinearCode c3{GenMatrix(f3, {{1, 1, 1}})};
    CHECK(encode(c3, vec(f3, {2})) == vec(f3, {2, 2, 2}));

    CHECK_THROWS_AS(encode(c, vec(f2, {1})), DimensionMismatch);
}

TEST_CASE("rref_rank") {
    Field f2 = field_new(2);
    GenMatrix id(f2, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    CHECK(rref_rank(id).rank == 3);

    Field f5 = field_new(5);
    GenMatrix dup(f5, {{1, 2, 3}, {1, 2, 3}});
    CHECK(rref_rank(dup).rank == 1);
    CHECK(dup.row(1) == std::vector<uint8_t>{1, 2, 3});  // input untouched

    GenMatrix m(f2, {{1, 1}, {1, 1}, {0, 1}});
    RrefResult rr = rref_rank(m);
    CHECK(rr.rank == 2);
    CHECK(rr.pivot_cols == std::vector<size_t>{0, 1});
}

TEST_CASE("full-rank requirement") {
    Field f2 = field_new(2);
    try {
        LinearCode bad{GenMatrix(f2, {{1, 1}, {1, 1}})};
        FAIL("expected NotFullRank");
    } catch (const NotFullRank& e) {
        CHECK(e.rank == 1);
    }
}

TEST_CASE("weight and distance basics") {
    Field f2 = field_new(2);
    Field f3 = field_new(3);
    CHECK(hamming_weight(vec(f3, {0, 0, 0, 0, 0, 0})) == 0);
    CHECK(hamming_weight(vec(f2, {1, 1, 1, 1})) == 4);
    CHECK(hamming_weight(vec(f3, {0, 2, 0, 1, 2})) == 3);

    FqVector v = vec(f3, {1, 2, 0});
    CHECK(hamming_distance(v, v) == 0);
    CHECK(hamming_distance(vec(f2, {1, 0, 1}), vec(f2, {0, 0, 1})) == 1);
    CHECK(hamming_distance(vec(f3, {1, 1, 1}), vec(f3, {0, 0, 1})) == 2);

    CHECK_THROWS_AS(hamming_distance(vec(f2, {1, 0}), vec(f2, {1, 0, 0})), DimensionMismatch);
    CHECK_THROWS_AS(hamming_distance(vec(f2, {1, 0}), vec(f3, {1, 0})), DimensionMismatch);
}

TEST_CASE("entries must be field elements") {
    Field f3 = field_new(3);
    CHECK_THROWS_AS(FqVector(f3, {0, 3}), OutOfRange);
    CHECK_THROWS_AS(GenMatrix(f3, {{0, 5}}), OutOfRange);
}

TEST_CASE("scalar multiples preserve weight; distance is a metric") {
    std::mt19937_64 rng(42);
    for (unsigned q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
        Field f = field_new(q);
        for (int rep = 0; rep < 50; ++rep) {
            size_t n = 1 + rng() % 16;
            FqVector v = oracle::random_vector(f, n, rng);
            for (unsigned a = 1; a < q; ++a)
                CHECK(hamming_weight(scale_vector(uint8_t(a), v)) == hamming_weight(v));

            FqVector u = oracle::random_vector(f, n, rng);
            FqVector w = oracle::random_vector(f, n, rng);
            CHECK(hamming_distance(u, w) <=
                  hamming_distance(u, v) + hamming_distance(v, w));
            CHECK(hamming_distance(u, w) == hamming_distance(w, u));
            CHECK((hamming_distance(u, w) == 0) == (u == w));
        }
    }
}

TEST_CASE("encode is linear") {
    std::mt19937_64 rng(43);
    for (unsigned q : {2u, 3u, 4u, 5u, 9u}) {
        Field f = field_new(q);
        for (int rep = 0; rep < 25; ++rep) {
            size_t k = 1 + rng() % 3, n = k + rng() % 10;
            LinearCode code = oracle::random_code(f, k, n, rng);
            FqVector u = oracle::random_vector(f, k, rng);
            FqVector v = oracle::random_vector(f, k, rng);
            CHECK(encode(code, add_vectors(u, v)) ==
                  add_vectors(encode(code, u), encode(code, v)));
            uint8_t a = uint8_t(rng() % q);
            CHECK(encode(code, scale_vector(a, u)) == scale_vector(a, encode(code, u)));
        }
    }
}

TEST_CASE("binary packed representation agrees with the byte path") {
    std::mt19937_64 rng(44);
    Field f2 = field_new(2);
    const auto& scalar = kern::scalar_ops();
    for (int rep = 0; rep < 200; ++rep) {
        size_t n = 1 + rng() % 200;
        FqVector u = oracle::random_vector(f2, n, rng);
        FqVector v = oracle::random_vector(f2, n, rng);
        // packed() drives hamming_weight/distance for q=2; compare with
        // plain byte counts
        CHECK(hamming_weight(u) == scalar.count_nonzero(u.elems().data(), n));
        CHECK(hamming_distance(u, v) ==
              scalar.count_diff(u.elems().data(), v.elems().data(), n));
    }
}

TEST_CASE("code membership") {
    Field f3 = field_new(3);
    LinearCode c{GenMatrix(f3, {{1, 1, 1}})};
    CHECK(c.contains(vec(f3, {2, 2, 2})));
    CHECK(c.contains(vec(f3, {0, 0, 0})));
    CHECK(!c.contains(vec(f3, {0, 0, 1})));
}
