#include "weightforge/spectrum.hpp"

#include <cerrno>
#include <cstdlib>
#include <string>

#include "spectrum_internal.hpp"
#include "weightforge/kernels.hpp"

namespace weightforge {

uint64_t enumeration_cap() {
    if (const char* env = std::getenv("WEIGHTFORGE_ENUM_CAP")) {
        char* end = nullptr;
        errno = 0;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && end && *end == '\0' && errno == 0) return v;
    }
    return kDefaultEnumCap;
}

namespace detail {

uint64_t pow_checked(uint64_t q, uint64_t k) {
    const uint64_t limit = uint64_t{1} << 62;
    uint64_t r = 1;
    for (uint64_t i = 0; i < k; ++i) {
        if (r > limit / q)
            throw CapExceeded("q^k overflows the 2^62 guard (q=" + std::to_string(q) +
                              ", k=" + std::to_string(k) + ")");
        r *= q;
    }
    return r;
}

}  // namespace detail

namespace {

using detail::EnumLane;

uint64_t checked_message_count(const LinearCode& code) {
    uint64_t total = detail::pow_checked(code.field().q(), code.dim());
    uint64_t cap = enumeration_cap();
    if (total > cap)
        throw EnumerationCapExceeded(
            "q^k = " + std::to_string(total) + " exceeds the enumeration cap " +
            std::to_string(cap) + " (override with WEIGHTFORGE_ENUM_CAP)");
    return total;
}

bool use_packed(const LinearCode& code, EnumLane lane) {
    if (lane == EnumLane::Auto) return code.field().q() == 2;
    if (lane == EnumLane::PackedBinary) {
        if (code.field().q() != 2)
            throw Error("packed enumeration lane requires q = 2");
        return true;
    }
    return false;
}

// --- enumeration contexts ------------------------------------------------
//
// Both contexts hold the running codeword (or coset element) and apply
// one "message digit changed from a to b" step as a fused
// add-and-count-nonzeros kernel call, so each enumerated vector costs
// O(n) regardless of k.

class ByteCtx {
public:
    explicit ByteCtx(const LinearCode& code)
        : ops_(kern::active_ops()),
          f_(code.field()),
          q_(f_.q()),
          k_(code.dim()),
          n_(code.length()),
          cur_(n_, 0) {
        if (f_.p() == 2)
            kind_ = AddKind::Xor;
        else if (f_.m() == 1)
            kind_ = AddKind::ModP;
        else
            kind_ = AddKind::Table;
        // scaled_[r*q + s] = s * row_r
        scaled_.resize(size_t(k_) * q_);
        const uint8_t* mul = f_.mul_table();
        for (size_t r = 0; r < k_; ++r) {
            const auto& row = code.generator().row(r);
            for (unsigned s = 1; s < q_; ++s) {
                auto& dst = scaled_[r * q_ + s];
                dst.resize(n_);
                for (size_t j = 0; j < n_; ++j) dst[j] = mul[size_t(s) * q_ + row[j]];
            }
        }
    }

    void load_row(size_t r) { cur_ = scaled_[r * q_ + 1]; }

    void load_neg(const FqVector& x) {
        const uint8_t* neg = f_.neg_table();
        for (size_t j = 0; j < n_; ++j) cur_[j] = neg[x[j]];
    }

    size_t current_weight() const { return ops_.count_nonzero(cur_.data(), n_); }

    size_t step(size_t r, uint8_t old_digit, uint8_t new_digit) {
        uint8_t delta = f_.sub(new_digit, old_digit);
        const uint8_t* srow = scaled_[r * q_ + delta].data();
        switch (kind_) {
            case AddKind::Xor:
                return ops_.xor_count(cur_.data(), cur_.data(), srow, n_);
            case AddKind::ModP:
                return ops_.addmod_count(cur_.data(), cur_.data(), srow, n_, uint8_t(f_.p()));
            default:
                return ops_.table_add_count(cur_.data(), cur_.data(), srow, n_,
                                            f_.add_table(), q_);
        }
    }

private:
    enum class AddKind { Xor, ModP, Table };
    const kern::Ops& ops_;
    const Field& f_;
    unsigned q_;
    size_t k_, n_;
    AddKind kind_;
    std::vector<std::vector<uint8_t>> scaled_;
    std::vector<uint8_t> cur_;
};

class PackedCtx {
public:
    explicit PackedCtx(const LinearCode& code)
        : ops_(kern::active_ops()),
          n_(code.length()),
          words_((code.length() + 63) / 64),
          cur_(words_, 0) {
        rows_.resize(code.dim());
        for (size_t r = 0; r < code.dim(); ++r) {
            rows_[r].assign(words_, 0);
            const auto& row = code.generator().row(r);
            for (size_t j = 0; j < n_; ++j)
                if (row[j]) rows_[r][j / 64] |= uint64_t{1} << (j % 64);
        }
    }

    void load_row(size_t r) { cur_ = rows_[r]; }

    void load_neg(const FqVector& x) { cur_ = x.packed(); }  // -x = x over GF(2)

    size_t current_weight() const {
        return size_t(ops_.popcount_words(cur_.data(), words_));
    }

    size_t step(size_t r, uint8_t, uint8_t) {
        return size_t(ops_.xor_words_count(cur_.data(), cur_.data(), rows_[r].data(), words_));
    }

private:
    const kern::Ops& ops_;
    size_t n_, words_;
    std::vector<std::vector<uint64_t>> rows_;
    std::vector<uint64_t> cur_;
};

// Visits the weight of one codeword per projective message class (first
// nonzero message entry = 1): for each position j of the leading 1, the
// suffix digits run through a reflected q-ary Gray sequence so exactly one
// digit changes per step.
template <class Ctx, class Visit>
void enumerate_projective(Ctx& ctx, unsigned q, size_t k, Visit&& visit) {
    for (size_t j = 0; j < k; ++j) {
        ctx.load_row(j);
        visit(ctx.current_weight());
        const size_t t = k - 1 - j;
        if (t == 0) continue;
        std::vector<uint8_t> d(t, 0);
        std::vector<int8_t> dir(t, 1);
        for (;;) {
            size_t i = 0;
            while (i < t) {
                int nd = int(d[i]) + dir[i];
                if (nd >= 0 && nd < int(q)) break;
                dir[i] = -dir[i];
                ++i;
            }
            if (i == t) break;
            uint8_t old = d[i];
            d[i] = uint8_t(int(old) + dir[i]);
            visit(ctx.step(j + 1 + i, old, d[i]));
        }
    }
}

// Visits (weight of c_msg - x, lex rank of msg) for all q^k messages in
// lexicographic message order (coordinate 0 most significant), so the
// visit rank is simply the step counter. Odometer wraps touch several
// digits but amortize to O(1) row updates per step.
template <class Ctx, class Visit>
void enumerate_coset(Ctx& ctx, const FqVector& x, unsigned q, size_t k, Visit&& visit) {
    ctx.load_neg(x);
    std::vector<uint8_t> msg(k, 0);
    uint64_t rank = 0;
    visit(ctx.current_weight(), rank);
    for (;;) {
        size_t i = k;
        while (i > 0 && msg[i - 1] == q - 1) --i;
        if (i == 0) break;
        size_t w = 0;
        for (size_t j = i; j < k; ++j) {
            msg[j] = 0;
            w = ctx.step(j, uint8_t(q - 1), 0);
        }
        uint8_t old = msg[i - 1];
        msg[i - 1] = uint8_t(old + 1);
        w = ctx.step(i - 1, old, msg[i - 1]);
        visit(w, ++rank);
    }
}

// First two messages (by lex rank) attaining each distance.
struct PairTracker {
    struct Slot {
        uint8_t cnt = 0;
        uint64_t first = 0, second = 0;
    };
    std::vector<Slot> slots;

    explicit PairTracker(size_t n) : slots(n + 1) {}

    void observe(size_t w, uint64_t rank) {
        Slot& s = slots[w];
        if (s.cnt == 0) {
            s.first = rank;
            s.cnt = 1;
        } else if (s.cnt == 1) {
            s.second = rank;
            s.cnt = 2;
        }
    }
};

FqVector message_from_rank(const Field& f, size_t k, uint64_t rank) {
    const uint64_t q = f.q();
    std::vector<uint8_t> digits(k, 0);
    for (size_t i = k; i-- > 0;) {
        digits[i] = uint8_t(rank % q);
        rank /= q;
    }
    return {f, std::move(digits)};
}

void validate_translate(const LinearCode& code, const FqVector& x) {
    if (x.field() != code.field() || x.size() != code.length())
        throw DimensionMismatch("translate must match the code's field and length");
    if (code.contains(x))
        throw XInCode("translate vector lies in the code (rank does not increase)");
}

}  // namespace

uint64_t mws_bound(uint64_t q, uint64_t k) {
    if (k < 1) throw Error("mws_bound requires k >= 1");
    uint64_t total = detail::pow_checked(q, k);
    return (total - 1) / (q - 1) + 1;
}

namespace detail {

WeightSpectrum spectrum_with_lane(const LinearCode& code, EnumLane lane) {
    const unsigned q = code.field().q();
    const size_t k = code.dim(), n = code.length();
    const uint64_t total = checked_message_count(code);

    std::vector<uint64_t> hist(n + 1, 0);
    auto visit = [&hist](size_t w) { ++hist[w]; };
    if (use_packed(code, lane)) {
        PackedCtx ctx(code);
        enumerate_projective(ctx, q, k, visit);
    } else {
        ByteCtx ctx(code);
        enumerate_projective(ctx, q, k, visit);
    }

    if (hist[0] != 0)
        throw VerificationFailed("nonzero projective representative of weight 0");

    WeightSpectrum sp;
    sp.q = q;
    sp.k = k;
    sp.n = n;
    sp.entries.emplace_back(0, 1);
    uint64_t mult_sum = 1;
    for (size_t w = 1; w <= n; ++w) {
        if (hist[w] == 0) continue;
        sp.entries.emplace_back(w, hist[w] * (q - 1));
        mult_sum += hist[w] * (q - 1);
    }
    if (mult_sum != total)
        throw VerificationFailed("spectrum multiplicities sum to " + std::to_string(mult_sum) +
                                 ", expected q^k = " + std::to_string(total));
    if (sp.entries.size() > mws_bound(q, k))
        throw BoundViolated("code has " + std::to_string(sp.entries.size()) +
                            " distinct weights, above the bound " +
                            std::to_string(mws_bound(q, k)));
    return sp;
}

TranslateWitness coset_profile_with_lane(const LinearCode& code, const FqVector& x,
                                         EnumLane lane) {
    validate_translate(code, x);
    const unsigned q = code.field().q();
    const size_t k = code.dim();
    const uint64_t total = checked_message_count(code);

    PairTracker tracker(code.length());
    auto visit = [&tracker](size_t w, uint64_t rank) { tracker.observe(w, rank); };
    if (use_packed(code, lane)) {
        PackedCtx ctx(code);
        enumerate_coset(ctx, x, q, k, visit);
    } else {
        ByteCtx ctx(code);
        enumerate_coset(ctx, x, q, k, visit);
    }

    uint64_t distinct = 0;
    for (const auto& s : tracker.slots) distinct += s.cnt != 0;

    TranslateWitness w{x, distinct, std::nullopt};
    if (distinct < total) {
        // lexicographically smallest colliding pair: the slot whose first
        // attainer is lex-smallest, paired with its second attainer
        const PairTracker::Slot* best = nullptr;
        for (const auto& s : tracker.slots)
            if (s.cnt == 2 && (!best || s.first < best->first)) best = &s;
        if (!best) throw VerificationFailed("distinct < q^k but no colliding slot");
        w.collision = std::make_pair(message_from_rank(code.field(), k, best->first),
                                     message_from_rank(code.field(), k, best->second));
    }
    return w;
}

std::vector<uint64_t> coset_histogram(const LinearCode& code, const FqVector& x,
                                      EnumLane lane) {
    validate_translate(code, x);
    checked_message_count(code);
    std::vector<uint64_t> hist(code.length() + 1, 0);
    auto visit = [&hist](size_t w, uint64_t) { ++hist[w]; };
    const unsigned q = code.field().q();
    if (use_packed(code, lane)) {
        PackedCtx ctx(code);
        enumerate_coset(ctx, x, q, code.dim(), visit);
    } else {
        ByteCtx ctx(code);
        enumerate_coset(ctx, x, q, code.dim(), visit);
    }
    return hist;
}

uint64_t coset_distinct_count(const LinearCode& code, const FqVector& x,
                              CosetScratch& scratch) {
    scratch.seen.resize(code.length() + 1, 0);
    scratch.touched.clear();
    auto visit = [&scratch](size_t w, uint64_t) {
        if (!scratch.seen[w]) {
            scratch.seen[w] = 1;
            scratch.touched.push_back(uint32_t(w));
        }
    };
    const unsigned q = code.field().q();
    if (use_packed(code, EnumLane::Auto)) {
        PackedCtx ctx(code);
        enumerate_coset(ctx, x, q, code.dim(), visit);
    } else {
        ByteCtx ctx(code);
        enumerate_coset(ctx, x, q, code.dim(), visit);
    }
    uint64_t distinct = scratch.touched.size();
    for (uint32_t w : scratch.touched) scratch.seen[w] = 0;
    return distinct;
}

}  // namespace detail

WeightSpectrum spectrum(const LinearCode& code) {
    return detail::spectrum_with_lane(code, detail::EnumLane::Auto);
}

std::pair<size_t, size_t> distinct_weights(const LinearCode& code) {
    WeightSpectrum sp = spectrum(code);
    return {sp.distinct_total(), sp.distinct_nonzero()};
}

TranslateWitness coset_profile(const LinearCode& code, const FqVector& x) {
    return detail::coset_profile_with_lane(code, x, detail::EnumLane::Auto);
}

std::vector<uint64_t> coset_distances(const LinearCode& code, const FqVector& x) {
    std::vector<uint64_t> hist = detail::coset_histogram(code, x);
    std::vector<uint64_t> out;
    for (uint64_t d = 0; d < hist.size(); ++d)
        if (hist[d]) out.push_back(d);
    return out;
}

bool is_mws(const LinearCode& code) {
    return spectrum(code).distinct_total() == mws_bound(code.field().q(), code.dim());
}

}  // namespace weightforge
