#include "weightforge/construct.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <string>

#include "spectrum_internal.hpp"

namespace weightforge {

const char* to_string(TraceStep::Kind kind) {
    switch (kind) {
        case TraceStep::Kind::BaseDim1: return "base_dim1";
        case TraceStep::Kind::BaseSimplex: return "base_simplex";
        case TraceStep::Kind::Widen: return "widen";
        case TraceStep::Kind::FindTranslate: return "find_translate";
        case TraceStep::Kind::Refine: return "refine";
        case TraceStep::Kind::ExtendLemma1: return "extend_lemma1";
        case TraceStep::Kind::ExtendLemma3: return "extend_lemma3";
        case TraceStep::Kind::ExtendLemma4: return "extend_lemma4";
    }
    return "?";
}

namespace detail {

LinearCode repeat_coordinates(const LinearCode& code, unsigned factor) {
    std::vector<std::vector<uint8_t>> rows(code.dim());
    for (size_t i = 0; i < code.dim(); ++i) {
        const auto& src = code.generator().row(i);
        rows[i].reserve(src.size() * factor);
        for (uint8_t e : src)
            for (unsigned t = 0; t < factor; ++t) rows[i].push_back(e);
    }
    return LinearCode(GenMatrix(code.field(), std::move(rows)));
}

FqVector repeat_coordinates(const FqVector& v, unsigned factor) {
    std::vector<uint8_t> out;
    out.reserve(v.size() * factor);
    for (uint8_t e : v.elems())
        for (unsigned t = 0; t < factor; ++t) out.push_back(e);
    return {v.field(), std::move(out)};
}

uint64_t mix_seed(uint64_t seed, uint64_t salt) {
    // splitmix64 finalizer over seed xor salted golden ratio
    uint64_t z = seed ^ (salt + 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

FindResult find_translate_traced(const LinearCode& code, uint64_t samples, uint64_t seed) {
    if (samples < 1) throw Error("find_translate requires samples >= 1");
    const size_t n = code.length(), k = code.dim();
    if (n == k)
        throw NoVectorOutsideCode("code of length n = k is the whole space");
    detail::pow_checked(code.field().q(), k);  // overflow guard before enumerating

    const unsigned q = code.field().q();
    std::mt19937_64 rng(seed);
    CosetScratch scratch;
    std::vector<uint8_t> buf(n);

    bool have_best = false;
    FqVector best_x(code.field(), std::vector<uint8_t>(n, 0));
    uint64_t best_count = 0;
    uint64_t draws = 0;
    while (draws < samples || !have_best) {
        ++draws;
        for (size_t i = 0; i < n; ++i) buf[i] = uint8_t(rng() % q);
        FqVector x(code.field(), buf);
        if (code.contains(x)) continue;
        uint64_t cnt = coset_distinct_count(code, x, scratch);
        if (!have_best || cnt > best_count ||
            (cnt == best_count && lex_less(x, best_x))) {
            have_best = true;
            best_x = std::move(x);
            best_count = cnt;
        }
    }
    TranslateWitness w = coset_profile(code, best_x);
    if (w.distinct_coset_weights != best_count)
        throw VerificationFailed("translate search and profile disagree on the coset count");
    return {std::move(w), draws};
}

}  // namespace detail

namespace {

using detail::CosetScratch;
using Kind = TraceStep::Kind;

// The pipeline requires n > k before translates exist; the only code that
// starts at n = k is the dimension-1 base, which gets every coordinate
// doubled (weights scale, distinct counts are unchanged).
LinearCode widen_if_full_space(LinearCode code, std::vector<TraceStep>& steps) {
    if (code.length() != code.dim()) return code;
    TraceStep st{};
    st.kind = Kind::Widen;
    st.old_len = code.length();
    LinearCode widened = detail::repeat_coordinates(code, 2);
    st.new_len = widened.length();
    steps.push_back(st);
    return widened;
}

struct RefineOutcome {
    LinearCode code;
    FqVector x;
    TranslateWitness post;
};

RefineOutcome refine_impl(const LinearCode& code, const FqVector& x) {
    const Field& f = code.field();
    const unsigned q = f.q();

    TranslateWitness pre = coset_profile(code, x);  // throws XInCode if inside
    if (!pre.collision)
        throw NoCollision("coset spectrum is already full; nothing to refine");

    LinearCode tripled = detail::repeat_coordinates(code, 3);
    FqVector x3 = detail::repeat_coordinates(x, 3);

    // verified postcondition: before the perturbation every coset
    // distance is a multiple of 3
    for (uint64_t d : coset_distances(tripled, x3))
        if (d % 3 != 0)
            throw VerificationFailed("tripled coset distance " + std::to_string(d) +
                                     " not divisible by 3");

    const auto& [u1, u2] = *pre.collision;
    FqVector c1 = detail::repeat_coordinates(encode(code, u1), 3);
    FqVector c2 = detail::repeat_coordinates(encode(code, u2), 3);
    size_t j = 0;
    while (j < c1.size() && c1[j] == c2[j]) ++j;
    if (j == c1.size())
        throw VerificationFailed("collision pair encodes to equal codewords");

    const uint8_t alpha = c1[j], beta = c2[j], gamma = x3[j];
    uint8_t replacement;
    if (q == 2) {
        replacement = gamma ^ 1;  // binary variant: flip
    } else if (gamma == alpha || gamma == beta) {
        uint8_t e = 0;
        while (e == alpha || e == beta) ++e;  // smallest element distinct from both
        replacement = e;
    } else {
        replacement = alpha;
    }

    std::vector<uint8_t> xe = x3.elems();
    xe[j] = replacement;
    FqVector xp(f, std::move(xe));

    TranslateWitness post = coset_profile(tripled, xp);  // also proves xp is outside
    if (post.distinct_coset_weights <= pre.distinct_coset_weights)
        throw VerificationFailed("refine did not increase the distinct coset count (" +
                                 std::to_string(pre.distinct_coset_weights) + " -> " +
                                 std::to_string(post.distinct_coset_weights) + ")");
    return {std::move(tripled), std::move(xp), std::move(post)};
}

struct ExtendOutcome {
    LinearCode code;
    uint64_t m = 0;
    uint64_t distinct_total = 0;
};

ExtendOutcome extend_impl(const LinearCode& code, const FqVector& x) {
    const Field& f = code.field();
    const uint64_t qk = detail::pow_checked(f.q(), code.dim());

    TranslateWitness prof = coset_profile(code, x);  // throws XInCode if inside
    if (prof.collision)
        throw TranslateNotFull("coset spectrum has " +
                               std::to_string(prof.distinct_coset_weights) + " < q^k = " +
                               std::to_string(qk) + " distinct distances");

    WeightSpectrum sp = spectrum(code);
    const uint64_t m = sp.max_weight();
    const size_t n = code.length();

    std::vector<std::vector<uint8_t>> rows(code.dim() + 1);
    for (size_t i = 0; i < code.dim(); ++i) {
        rows[i] = code.generator().row(i);
        rows[i].resize(n + m, 0);
    }
    rows.back() = x.elems();
    rows.back().resize(n + m, 1);
    LinearCode bigger{GenMatrix(f, std::move(rows))};

    WeightSpectrum sp2 = spectrum(bigger);
    if (sp2.distinct_total() != sp.distinct_total() + qk)
        throw VerificationFailed(
            "extension produced " + std::to_string(sp2.distinct_total()) +
            " distinct weights, expected " + std::to_string(sp.distinct_total() + qk));
    return {std::move(bigger), m, sp2.distinct_total()};
}

// One dimension step of the Theorem-1 pipeline: sample, refine to a full
// coset spectrum, extend.
LinearCode dimension_step(LinearCode code, uint64_t seed, std::vector<TraceStep>& steps,
                          Kind extend_kind) {
    code = widen_if_full_space(std::move(code), steps);

    detail::FindResult found = detail::find_translate_traced(code, kTranslateSamples, seed);
    {
        TraceStep st{};
        st.kind = Kind::FindTranslate;
        st.samples_tried = found.samples_tried;
        st.best_count = found.witness.distinct_coset_weights;
        steps.push_back(st);
    }

    FqVector x = found.witness.x;
    uint64_t count = found.witness.distinct_coset_weights;
    const uint64_t full = detail::pow_checked(code.field().q(), code.dim());
    while (count < full) {
        RefineOutcome r = refine_impl(code, x);
        TraceStep st{};
        st.kind = Kind::Refine;
        st.old_count = count;
        st.new_count = r.post.distinct_coset_weights;
        st.old_len = code.length();
        st.new_len = r.code.length();
        steps.push_back(st);
        code = std::move(r.code);
        x = std::move(r.x);
        count = r.post.distinct_coset_weights;
    }

    ExtendOutcome e = extend_impl(code, x);
    TraceStep st{};
    st.kind = extend_kind;
    st.m = e.m;
    st.new_len = e.code.length();
    steps.push_back(st);
    return std::move(e.code);
}

void fill_finals(ConstructionTrace& trace, const LinearCode& code, uint64_t distinct) {
    trace.final_len = code.length();
    trace.final_k = code.dim();
    trace.final_distinct = distinct;
}

uint64_t pow2_checked(unsigned k) {
    if (k >= 63) throw CapExceeded("2^k overflows the guard (k = " + std::to_string(k) + ")");
    return uint64_t{1} << k;
}

}  // namespace

LinearCode simplex(unsigned q, unsigned k) {
    if (k < 1) throw Error("simplex requires k >= 1");
    Field f = field_new(q);
    const uint64_t total = detail::pow_checked(q, k);
    if (total > enumeration_cap())
        throw EnumerationCapExceeded("q^k = " + std::to_string(total) +
                                     " exceeds the enumeration cap");
    std::vector<std::vector<uint8_t>> rows(k);
    std::vector<uint8_t> digits(k);
    for (uint64_t t = 1; t < total; ++t) {
        uint64_t v = t;
        for (size_t i = k; i-- > 0;) {  // base-q digits, top row most significant
            digits[i] = uint8_t(v % q);
            v /= q;
        }
        size_t lead = 0;
        while (digits[lead] == 0) ++lead;
        if (digits[lead] != 1) continue;
        for (size_t i = 0; i < k; ++i) rows[i].push_back(digits[i]);
    }
    return LinearCode(GenMatrix(f, std::move(rows)));
}

LinearCode extend_full_translate(const LinearCode& code, const FqVector& x) {
    return extend_impl(code, x).code;
}

std::pair<LinearCode, FqVector> refine_translate(const LinearCode& code, const FqVector& x) {
    RefineOutcome r = refine_impl(code, x);
    return {std::move(r.code), std::move(r.x)};
}

TranslateWitness find_translate(const LinearCode& code, uint64_t samples, uint64_t seed) {
    return detail::find_translate_traced(code, samples, seed).witness;
}

ConstructionResult mws_construct(unsigned q, unsigned k, uint64_t seed) {
    if (k < 1) throw Error("mws_construct requires k >= 1");
    Field f = field_new(q);

    ConstructionTrace trace;
    trace.q = q;
    trace.seed = seed;

    LinearCode code{GenMatrix(f, {{1}})};
    {
        TraceStep st{};
        st.kind = Kind::BaseDim1;
        st.new_len = code.length();
        trace.steps.push_back(st);
    }

    try {
        for (unsigned d = 1; d < k; ++d)
            code = dimension_step(std::move(code), detail::mix_seed(seed, d), trace.steps,
                                  Kind::ExtendLemma1);
        WeightSpectrum sp = spectrum(code);
        if (sp.distinct_total() != mws_bound(q, k))
            throw VerificationFailed("mws_construct reached " +
                                     std::to_string(sp.distinct_total()) +
                                     " distinct weights, bound is " +
                                     std::to_string(mws_bound(q, k)));
        fill_finals(trace, code, sp.distinct_total());
    } catch (const ConstructionCapExceeded&) {
        throw;
    } catch (const EnumerationCapExceeded& e) {
        throw ConstructionCapExceeded(e.what(), std::move(trace));
    }
    return {std::move(code), std::move(trace)};
}

LinearCode lemma3_extend(const LinearCode& code) {
    const Field& f = code.field();
    const unsigned q = f.q();
    const size_t k = code.dim();

    WeightSpectrum before = spectrum(code);
    LinearCode right = simplex(q, unsigned(k + 1));
    const uint64_t qk = detail::pow_checked(q, k);

    // [[0 | S], [G | S]]: zero row prepended on the left block, simplex
    // generator of dimension k+1 as the right block
    std::vector<std::vector<uint8_t>> rows(k + 1);
    rows[0].assign(code.length(), 0);
    for (size_t i = 0; i < k; ++i) rows[i + 1] = code.generator().row(i);
    for (size_t i = 0; i < k + 1; ++i) {
        const auto& srow = right.generator().row(i);
        rows[i].insert(rows[i].end(), srow.begin(), srow.end());
    }
    LinearCode result{GenMatrix(f, std::move(rows))};

    // verified: the nonzero weight set is {q^k} + {q^k + w}
    WeightSpectrum after = spectrum(result);
    if (after.distinct_nonzero() != before.distinct_nonzero() + 1)
        throw VerificationFailed("lemma3 extension did not add exactly one distinct weight");
    std::vector<uint64_t> expected{qk};
    for (const auto& [w, mult] : before.entries)
        if (w != 0) expected.push_back(qk + w);
    std::sort(expected.begin(), expected.end());
    std::vector<uint64_t> got;
    for (const auto& [w, mult] : after.entries)
        if (w != 0) got.push_back(w);
    if (got != expected)
        throw VerificationFailed("lemma3 extension weights are not the q^k-shifted input");
    return result;
}

ConstructionResult lemma4_extend(const LinearCode& code, uint64_t seed) {
    const unsigned q = code.field().q();
    const uint64_t qk = detail::pow_checked(q, code.dim());
    const uint64_t s = spectrum(code).distinct_nonzero();

    ConstructionTrace trace;
    trace.q = q;
    trace.seed = seed;
    LinearCode result{code};
    try {
        result = dimension_step(std::move(result), seed, trace.steps, Kind::ExtendLemma4);
        WeightSpectrum sp = spectrum(result);
        if (sp.distinct_nonzero() != qk + s)
            throw VerificationFailed("lemma4 extension has " +
                                     std::to_string(sp.distinct_nonzero()) +
                                     " distinct nonzero weights, expected " +
                                     std::to_string(qk + s));
        fill_finals(trace, result, sp.distinct_total());
    } catch (const ConstructionCapExceeded&) {
        throw;
    } catch (const EnumerationCapExceeded& e) {
        throw ConstructionCapExceeded(e.what(), std::move(trace));
    }
    return {std::move(result), std::move(trace)};
}

ConstructionResult binary_weight_count_code(unsigned k, uint64_t s, uint64_t seed) {
    if (k < 1) throw Error("binary_weight_count_code requires k >= 1");
    const uint64_t limit = pow2_checked(k);
    if (s < 1 || s > limit - 1)
        throw SOutOfRange("s = " + std::to_string(s) + " outside {1, ..., 2^k - 1} for k = " +
                          std::to_string(k));

    ConstructionTrace trace;
    trace.q = 2;
    trace.seed = seed;
    LinearCode code = [&]() -> LinearCode {
        if (s == 1) {
            LinearCode base = simplex(2, k);
            TraceStep st{};
            st.kind = Kind::BaseSimplex;
            st.new_len = base.length();
            trace.steps.push_back(st);
            return base;
        }
        const uint64_t half = uint64_t{1} << (k - 1);
        if (s <= half) {
            ConstructionResult sub = binary_weight_count_code(k - 1, s - 1, seed);
            trace.steps = std::move(sub.trace.steps);
            LinearCode ext = lemma3_extend(sub.code);
            TraceStep st{};
            st.kind = Kind::ExtendLemma3;
            st.new_len = ext.length();
            trace.steps.push_back(st);
            return ext;
        }
        ConstructionResult sub = binary_weight_count_code(k - 1, s - half, seed);
        trace.steps = std::move(sub.trace.steps);
        ConstructionResult ext = lemma4_extend(sub.code, detail::mix_seed(seed, k));
        for (TraceStep& st : ext.trace.steps) trace.steps.push_back(st);
        return std::move(ext.code);
    }();

    WeightSpectrum sp = spectrum(code);
    if (code.dim() != k || sp.distinct_nonzero() != s)
        throw VerificationFailed("binary_weight_count_code(" + std::to_string(k) + ", " +
                                 std::to_string(s) + ") produced dimension " +
                                 std::to_string(code.dim()) + " with " +
                                 std::to_string(sp.distinct_nonzero()) +
                                 " distinct nonzero weights");
    fill_finals(trace, code, sp.distinct_total());
    return {std::move(code), std::move(trace)};
}

std::vector<uint64_t> reachable_counts(uint64_t q, uint64_t k) {
    if (k < 1) throw Error("reachable_counts requires k >= 1");
    detail::pow_checked(q, k);  // overflow guard
    std::vector<uint64_t> reach{1};
    uint64_t power = 1;  // q^j
    for (uint64_t j = 1; j < k; ++j) {
        power *= q;
        std::vector<uint64_t> next{1};
        next.reserve(2 * reach.size() + 1);
        for (uint64_t s : reach) next.push_back(s + 1);
        for (uint64_t s : reach) next.push_back(power + s);
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        reach = std::move(next);
    }
    return reach;
}

namespace {

uint64_t sat_pow(uint64_t base, uint64_t exp) {
    uint64_t r = 1;
    for (uint64_t i = 0; i < exp; ++i) {
        if (r > std::numeric_limits<uint64_t>::max() / base)
            return std::numeric_limits<uint64_t>::max();
        r *= base;
    }
    return r;
}

uint64_t sat_mul(uint64_t a, uint64_t b) {
    if (b != 0 && a > std::numeric_limits<uint64_t>::max() / b)
        return std::numeric_limits<uint64_t>::max();
    return a * b;
}

}  // namespace

LengthBoundReport length_bound_check(const ConstructionTrace& trace) {
    if (trace.steps.empty() || trace.steps.front().kind != Kind::BaseDim1)
        throw Error("length_bound_check expects a trace from mws_construct");
    const uint64_t q = trace.q;
    if (q < 2) throw Error("trace is missing the field order");

    LengthBoundReport report;
    uint64_t len = 0;
    unsigned dim = 1;
    for (const TraceStep& st : trace.steps) {
        switch (st.kind) {
            case Kind::BaseDim1:
                len = st.new_len ? st.new_len : 1;
                break;
            case Kind::Widen:
            case Kind::Refine:
                if (st.old_len != len)
                    throw Error("inconsistent trace: step starts from length " +
                                std::to_string(st.old_len) + ", expected " +
                                std::to_string(len));
                len = st.new_len;
                break;
            case Kind::FindTranslate:
                break;
            case Kind::ExtendLemma1: {
                uint64_t qd = sat_pow(q, dim);
                uint64_t factor =
                    qd == std::numeric_limits<uint64_t>::max() || qd - 1 >= 41
                        ? std::numeric_limits<uint64_t>::max()
                        : sat_pow(3, qd - 1);
                uint64_t bound = factor == std::numeric_limits<uint64_t>::max()
                                     ? factor
                                     : sat_mul(factor + 1, len);
                LengthBoundStep rs{dim, dim + 1, len, st.new_len, bound};
                report.steps.push_back(rs);
                if (st.new_len > bound)
                    throw BoundViolated("dimension step " + std::to_string(dim) + " -> " +
                                        std::to_string(dim + 1) + " reached length " +
                                        std::to_string(st.new_len) + " above the bound " +
                                        std::to_string(bound));
                len = st.new_len;
                ++dim;
                break;
            }
            default:
                throw Error("unexpected step kind in an mws_construct trace");
        }
    }
    return report;
}

}  // namespace weightforge
