#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "weightforge/linalg.hpp"

namespace weightforge {

/// Default cap on q^k for exhaustive enumeration. Overridable with the
/// WEIGHTFORGE_ENUM_CAP environment variable (decimal integer).
inline constexpr uint64_t kDefaultEnumCap = uint64_t{1} << 22;

uint64_t enumeration_cap();

/// Exact multiset of codeword weights of a code.
struct WeightSpectrum {
    uint64_t q = 0, k = 0, n = 0;
    /// (weight, multiplicity), sorted by weight. Contains (0, 1) exactly;
    /// multiplicities of nonzero weights are divisible by q - 1 and sum
    /// with 1 to q^k.
    std::vector<std::pair<uint64_t, uint64_t>> entries;

    size_t distinct_total() const { return entries.size(); }
    size_t distinct_nonzero() const { return entries.size() - 1; }
    uint64_t max_weight() const { return entries.back().first; }
};

/// A translate x outside a code together with its coset weight profile.
struct TranslateWitness {
    FqVector x;
    uint64_t distinct_coset_weights = 0;
    /// Lexicographically smallest pair of distinct messages whose
    /// codewords are equidistant from x; present iff
    /// distinct_coset_weights < q^k.
    std::optional<std::pair<FqVector, FqVector>> collision;
};

/// (q^k - 1)/(q - 1) + 1, the maximum possible number of distinct weights
/// (zero included) of a k-dimensional code over GF(q).
uint64_t mws_bound(uint64_t q, uint64_t k);

/// Exact weight spectrum by exhaustive enumeration. One representative
/// per projective message class is enumerated (first nonzero message
/// entry equal to 1) and each nonzero weight is counted with multiplicity
/// q - 1, which equals full enumeration. Throws EnumerationCapExceeded
/// when q^k exceeds the cap, and BoundViolated if the result were ever to
/// exceed mws_bound.
WeightSpectrum spectrum(const LinearCode& code);

/// (distinct_total, distinct_nonzero); total = nonzero + 1.
std::pair<size_t, size_t> distinct_weights(const LinearCode& code);

/// Full q^k coset enumeration of the distances {d(c, x) : c in code}
/// (cosets have no scalar symmetry, so no projective shortcut applies).
/// Throws XInCode when x lies in the code.
TranslateWitness coset_profile(const LinearCode& code, const FqVector& x);

/// Distinct coset distances, sorted ascending.
std::vector<uint64_t> coset_distances(const LinearCode& code, const FqVector& x);

/// True iff the code attains mws_bound(q, k) distinct weights.
bool is_mws(const LinearCode& code);

namespace detail {

/// Enumeration lane: the byte-table path works for every field; the
/// packed path bit-packs GF(2) codewords so the inner step is
/// XOR + popcount over 64-bit words. Auto picks packed for q = 2.
/// Both lanes produce identical results (equivalence-tested).
enum class EnumLane { Auto, GenericBytes, PackedBinary };

WeightSpectrum spectrum_with_lane(const LinearCode& code, EnumLane lane);
TranslateWitness coset_profile_with_lane(const LinearCode& code, const FqVector& x,
                                         EnumLane lane);

/// Histogram of coset distances: index d -> number of codewords at
/// distance d from x.
std::vector<uint64_t> coset_histogram(const LinearCode& code, const FqVector& x,
                                      EnumLane lane = EnumLane::Auto);

/// q^k with overflow guard; throws CapExceeded beyond 2^62.
uint64_t pow_checked(uint64_t q, uint64_t k);

}  // namespace detail

}  // namespace weightforge
