#include <cstdlib>
#include <map>
#include <random>

#include "doctest.h"
#include "support/oracle.hpp"
#include "weightforge/construct.hpp"
#include "weightforge/spectrum.hpp"

using namespace weightforge;

namespace {

FqVector vec(const Field& f, std::vector<uint8_t> e) { return {f, std::move(e)}; }

std::map<uint64_t, uint64_t> as_map(const WeightSpectrum& sp) {
    return {sp.entries.begin(), sp.entries.end()};
}

struct EnvGuard {
    const char* name;
    explicit EnvGuard(const char* n, const char* value) : name(n) { setenv(n, value, 1); }
    ~EnvGuard() { unsetenv(name); }
};

}  // namespace

TEST_CASE("mws_bound") {
    CHECK(mws_bound(3, 3) == 14);
    for (unsigned k = 1; k <= 20; ++k) CHECK(mws_bound(2, k) == (uint64_t{1} << k));
    for (unsigned q : {2u, 3u, 4u, 5u, 7u, 9u}) CHECK(mws_bound(q, 1) == 2);
    CHECK(mws_bound(2, 62) == (uint64_t{1} << 62));
    CHECK_THROWS_AS(mws_bound(2, 63), CapExceeded);
}

TEST_CASE("spectrum of known codes") {
    Field f2 = field_new(2);
    LinearCode rep{GenMatrix(f2, {{1, 1}})};
    WeightSpectrum sp = spectrum(rep);
    CHECK(as_map(sp) == std::map<uint64_t, uint64_t>{{0, 1}, {2, 1}});

    WeightSpectrum simplex23 = spectrum(simplex(2, 3));
    CHECK(as_map(simplex23) == std::map<uint64_t, uint64_t>{{0, 1}, {4, 7}});

    Field f3 = field_new(3);
    LinearCode worked{GenMatrix(f3, {{1, 1, 1, 0, 0, 0}, {0, 0, 1, 1, 1, 1}})};
    CHECK(as_map(spectrum(worked)) ==
          std::map<uint64_t, uint64_t>{{0, 1}, {3, 2}, {4, 2}, {5, 2}, {6, 2}});
}

TEST_CASE("distinct_weights") {
    CHECK(distinct_weights(simplex(3, 2)) == std::pair<size_t, size_t>{2, 1});
    Field f2 = field_new(2);
    LinearCode dim1{GenMatrix(f2, {{1, 1, 0, 1}})};
    CHECK(distinct_weights(dim1) == std::pair<size_t, size_t>{2, 1});
    ConstructionResult mws22 = mws_construct(2, 2, 5);
    CHECK(distinct_weights(mws22.code) == std::pair<size_t, size_t>{4, 3});
}

TEST_CASE("coset_profile worked examples") {
    Field f2 = field_new(2);
    LinearCode rep2{GenMatrix(f2, {{1, 1}})};
    TranslateWitness w = coset_profile(rep2, vec(f2, {1, 0}));
    CHECK(w.distinct_coset_weights == 1);
    REQUIRE(w.collision.has_value());
    CHECK(w.collision->first == vec(f2, {0}));
    CHECK(w.collision->second == vec(f2, {1}));

    Field f3 = field_new(3);
    LinearCode rep3{GenMatrix(f3, {{1, 1, 1}})};
    TranslateWitness w3 = coset_profile(rep3, vec(f3, {0, 0, 1}));
    CHECK(w3.distinct_coset_weights == 3);
    CHECK(!w3.collision.has_value());
    CHECK(coset_distances(rep3, vec(f3, {0, 0, 1})) == std::vector<uint64_t>{1, 2, 3});

    CHECK_THROWS_AS(coset_profile(rep2, vec(f2, {1, 1})), XInCode);
    CHECK_THROWS_AS(coset_profile(rep2, vec(f2, {0, 0})), XInCode);
}

TEST_CASE("projective enumeration equals brute force") {
    std::mt19937_64 rng(2718);
    for (unsigned q : {2u, 3u, 4u, 5u}) {
        Field f = field_new(q);
        for (int rep = 0; rep < 100; ++rep) {
            size_t k = 1 + rng() % 4;
            size_t n = k + rng() % (21 - k);
            LinearCode code = oracle::random_code(f, k, n, rng);
            CHECK(as_map(spectrum(code)) == oracle::brute_spectrum(code));
        }
    }
}

TEST_CASE("packed binary lane equals the generic byte lane") {
    std::mt19937_64 rng(3141);
    Field f2 = field_new(2);
    for (int rep = 0; rep < 100; ++rep) {
        size_t k = 1 + rng() % 4;
        size_t n = k + 1 + rng() % 20;
        LinearCode code = oracle::random_code(f2, k, n, rng);
        WeightSpectrum generic =
            detail::spectrum_with_lane(code, detail::EnumLane::GenericBytes);
        WeightSpectrum packed =
            detail::spectrum_with_lane(code, detail::EnumLane::PackedBinary);
        CHECK(as_map(generic) == as_map(packed));

        FqVector x = oracle::random_vector_outside(code, rng);
        TranslateWitness wg =
            detail::coset_profile_with_lane(code, x, detail::EnumLane::GenericBytes);
        TranslateWitness wp =
            detail::coset_profile_with_lane(code, x, detail::EnumLane::PackedBinary);
        CHECK(wg.distinct_coset_weights == wp.distinct_coset_weights);
        CHECK(wg.collision == wp.collision);
    }
}

TEST_CASE("coset histogram equals brute force; coset invariances") {
    std::mt19937_64 rng(1618);
    for (unsigned q : {2u, 3u, 4u, 5u}) {
        Field f = field_new(q);
        for (int rep = 0; rep < 40; ++rep) {
            size_t k = 1 + rng() % 3;
            size_t n = k + 1 + rng() % 10;
            LinearCode code = oracle::random_code(f, k, n, rng);
            FqVector x = oracle::random_vector_outside(code, rng);

            std::map<uint64_t, uint64_t> brute = oracle::brute_coset_histogram(code, x);
            std::vector<uint64_t> hist = detail::coset_histogram(code, x);
            std::map<uint64_t, uint64_t> got;
            for (uint64_t d = 0; d < hist.size(); ++d)
                if (hist[d]) got[d] = hist[d];
            CHECK(got == brute);

            // translating x by a codeword keeps the distinct count
            FqVector c = encode(code, oracle::random_vector(f, k, rng));
            std::vector<uint8_t> shifted(n);
            for (size_t i = 0; i < n; ++i) shifted[i] = f.add(x[i], c[i]);
            FqVector xs(f, std::move(shifted));
            CHECK(coset_profile(code, x).distinct_coset_weights ==
                  coset_profile(code, xs).distinct_coset_weights);

            // scaling x by a nonzero scalar keeps the whole distance multiset
            uint8_t a = uint8_t(1 + rng() % (q - 1));
            std::vector<uint8_t> scaled(n);
            for (size_t i = 0; i < n; ++i) scaled[i] = f.mul(a, x[i]);
            FqVector xa(f, std::move(scaled));
            CHECK(oracle::brute_coset_histogram(code, xa) == brute);
        }
    }
}

TEST_CASE("spectrum structural invariants on random codes") {
    std::mt19937_64 rng(9999);
    for (unsigned q : {2u, 3u, 5u, 9u}) {
        Field f = field_new(q);
        for (int rep = 0; rep < 30; ++rep) {
            size_t k = 1 + rng() % 3;
            size_t n = k + rng() % 12;
            LinearCode code = oracle::random_code(f, k, n, rng);
            WeightSpectrum sp = spectrum(code);
            REQUIRE(!sp.entries.empty());
            CHECK(sp.entries.front() == std::pair<uint64_t, uint64_t>{0, 1});
            uint64_t sum = 0;
            for (const auto& [w, mult] : sp.entries) {
                sum += mult;
                if (w != 0) CHECK(mult % (q - 1) == 0);
            }
            CHECK(sum == detail::pow_checked(q, k));
            CHECK(sp.distinct_total() <= mws_bound(q, k));
        }
    }
}

TEST_CASE("enumeration cap") {
    Field f2 = field_new(2);
    LinearCode code{GenMatrix(f2, {{1, 0, 0, 0, 1},
                                   {0, 1, 0, 0, 1},
                                   {0, 0, 1, 0, 1},
                                   {0, 0, 0, 1, 1}})};
    {
        EnvGuard guard("WEIGHTFORGE_ENUM_CAP", "8");
        CHECK(enumeration_cap() == 8);
        CHECK_THROWS_AS(spectrum(code), EnumerationCapExceeded);
        CHECK_THROWS_AS(coset_profile(code, FqVector(f2, {1, 1, 1, 1, 1})),
                        EnumerationCapExceeded);
    }
    CHECK(enumeration_cap() == kDefaultEnumCap);
    CHECK(spectrum(code).distinct_total() >= 2);
}

TEST_CASE("is_mws") {
    CHECK(!is_mws(simplex(2, 3)));  // 2 distinct vs bound 8
    Field f2 = field_new(2);
    CHECK(is_mws(LinearCode{GenMatrix(f2, {{1, 1}})}));  // bound for k=1 is 2
    CHECK(is_mws(mws_construct(3, 2, 7).code));
}
