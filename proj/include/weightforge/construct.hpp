#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "weightforge/spectrum.hpp"

namespace weightforge {

/// Default number of random translates sampled per dimension step.
inline constexpr uint64_t kTranslateSamples = 256;

struct TraceStep {
    enum class Kind {
        BaseDim1,
        BaseSimplex,
        Widen,
        FindTranslate,
        Refine,
        ExtendLemma1,
        ExtendLemma3,
        ExtendLemma4,
    };
    Kind kind{};
    uint64_t old_count = 0, new_count = 0;       // Refine
    uint64_t old_len = 0, new_len = 0;           // Widen / Refine / Base* / Extend*
    uint64_t samples_tried = 0, best_count = 0;  // FindTranslate
    uint64_t m = 0;                              // appended all-one columns (Extend)
};

const char* to_string(TraceStep::Kind kind);

/// The step sequence of a construction run, for reproducibility and for
/// the length-bound diagnostic.
struct ConstructionTrace {
    uint64_t q = 0;
    uint64_t seed = 0;
    std::vector<TraceStep> steps;
    uint64_t final_len = 0, final_k = 0, final_distinct = 0;
};

struct ConstructionResult {
    LinearCode code;
    ConstructionTrace trace;
};

/// EnumerationCapExceeded carrying the construction progress made before
/// the cap tripped.
struct ConstructionCapExceeded : EnumerationCapExceeded {
    ConstructionCapExceeded(const std::string& msg, ConstructionTrace partial)
        : EnumerationCapExceeded(msg), trace(std::move(partial)) {}
    ConstructionTrace trace;
};

/// Simplex code: one generator column per projective point, canonically
/// the nonzero columns whose topmost nonzero entry is 1, ordered as
/// base-q integers read top to bottom. Equidistant with weight q^(k-1).
LinearCode simplex(unsigned q, unsigned k);

/// Dimension k+1 code [[G, 0], [x, 1...1]] with m = max codeword weight
/// of the input appended as all-one columns. Requires a full coset
/// spectrum (all q^k distances distinct); the exact distinct-count
/// postcondition (old + q^k) is verified by enumeration.
LinearCode extend_full_translate(const LinearCode& code, const FqVector& x);

/// Triple every coordinate, then perturb one coordinate of the tripled
/// translate (chosen from the lexicographically smallest collision pair)
/// so the distinct coset count strictly increases. For q >= 3 the
/// replacement follows the two-case rule on (alpha, beta, gamma); for
/// q = 2 the coordinate is flipped. Both the mod-3 structure of the
/// pre-perturbation distances and the strict increase are verified by
/// enumeration on every call.
std::pair<LinearCode, FqVector> refine_translate(const LinearCode& code, const FqVector& x);

/// Best translate among `samples` seeded uniform draws (vectors inside
/// the code are discarded and redrawn past `samples` if none qualified):
/// maximal distinct coset count, ties to the lexicographically smaller x.
/// Deterministic given the seed.
TranslateWitness find_translate(const LinearCode& code, uint64_t samples, uint64_t seed);

/// Maximum-weight-spectrum code of dimension k over GF(q): induction from
/// the dimension-1 base code <(1)>, at each dimension sampling a
/// translate, refining it until its coset spectrum is full, and extending.
/// The result attains mws_bound(q, k) exactly (enumeration-checked).
ConstructionResult mws_construct(unsigned q, unsigned k, uint64_t seed);

/// Dimension k+1 code with s+1 distinct nonzero weights from a dimension-k
/// code with s: prepend an all-zero row and adjoin the (k+1)-simplex
/// block, which shifts every nonzero weight by q^k.
LinearCode lemma3_extend(const LinearCode& code);

/// Dimension k+1 code with q^k + s distinct nonzero weights from an
/// arbitrary dimension-k code with s, via the translate pipeline.
ConstructionResult lemma4_extend(const LinearCode& code, uint64_t seed);

/// Binary code of dimension k with exactly s distinct nonzero weights,
/// any s in {1, ..., 2^k - 1}.
ConstructionResult binary_weight_count_code(unsigned k, uint64_t s, uint64_t seed);

/// Closure of the nonzero-weight counts reachable at dimension k:
/// R(1) = {1}; R(j+1) = {1} + {s+1} + {q^j + s}. Pure arithmetic, no
/// codes built. Sorted ascending.
std::vector<uint64_t> reachable_counts(uint64_t q, uint64_t k);

struct LengthBoundStep {
    unsigned dim_from = 0, dim_to = 0;
    uint64_t pre_extend_len = 0;  // length of the code the extension was applied to
    uint64_t achieved_len = 0;
    uint64_t bound = 0;  // (3^(q^dim - 1) + 1) * pre_extend_len, saturating
};

struct LengthBoundReport {
    std::vector<LengthBoundStep> steps;
};

/// Check every dimension step of an mws_construct trace against the
/// coarse length bound; throws BoundViolated on failure.
LengthBoundReport length_bound_check(const ConstructionTrace& trace);

namespace detail {

/// Each coordinate repeated `factor` times; weights scale by `factor`.
LinearCode repeat_coordinates(const LinearCode& code, unsigned factor);
FqVector repeat_coordinates(const FqVector& v, unsigned factor);

uint64_t mix_seed(uint64_t seed, uint64_t salt);

struct FindResult {
    TranslateWitness witness;
    uint64_t samples_tried = 0;
};
FindResult find_translate_traced(const LinearCode& code, uint64_t samples, uint64_t seed);

}  // namespace detail

}  // namespace weightforge
