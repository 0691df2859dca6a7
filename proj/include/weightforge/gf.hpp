#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "weightforge/errors.hpp"

namespace weightforge {

/// Largest supported field order; keeps every full q x q table at or
/// below 64 KiB.
inline constexpr unsigned kMaxFieldOrder = 256;

/// Finite field GF(q), q = p^m.
///
/// Elements are encoded as the integers 0..q-1 read as base-p digit
/// vectors of the polynomial representation: the digit at p^i is the
/// coefficient of x^i. Under this encoding 0 and 1 are the additive and
/// multiplicative identities, and for prime fields the encoding is just
/// the residue itself. Extension fields are built modulo the
/// lexicographically smallest monic irreducible polynomial of degree m
/// over GF(p), coefficients compared from the constant term upward, so
/// two Field objects with equal q are table-identical.
///
/// Field is a cheap value handle over immutable shared tables; copies
/// are O(1) and all operations are pure, so instances may be shared
/// freely across threads.
class Field {
public:
    unsigned q() const { return impl_->q; }
    unsigned p() const { return impl_->p; }
    unsigned m() const { return impl_->m; }

    /// Modulus coefficients c0..cm (constant term first, leading 1
    /// included); empty for prime fields.
    const std::vector<uint8_t>& modulus() const { return impl_->modulus; }

    uint8_t add(uint8_t a, uint8_t b) const {
        check(a); check(b);
        return impl_->add[size_t(a) * impl_->q + b];
    }
    uint8_t sub(uint8_t a, uint8_t b) const {
        check(a); check(b);
        return impl_->add[size_t(a) * impl_->q + impl_->neg[b]];
    }
    uint8_t mul(uint8_t a, uint8_t b) const {
        check(a); check(b);
        return impl_->mul[size_t(a) * impl_->q + b];
    }
    uint8_t neg(uint8_t a) const {
        check(a);
        return impl_->neg[a];
    }
    uint8_t inv(uint8_t a) const {
        check(a);
        if (a == 0) throw DivisionByZero("inv(0) is undefined");
        return impl_->inv[a];
    }
    /// a^e by square-and-multiply; pow(0, 0) = 1.
    uint8_t pow(uint8_t a, uint64_t e) const;

    // Raw tables for inner loops; no range checks. add/mul are q x q
    // row-major (index a*q + b), neg/inv have q entries (inv[0] unused).
    const uint8_t* add_table() const { return impl_->add.data(); }
    const uint8_t* mul_table() const { return impl_->mul.data(); }
    const uint8_t* neg_table() const { return impl_->neg.data(); }
    const uint8_t* inv_table() const { return impl_->inv.data(); }

    /// Fields compare equal iff they have the same order (construction
    /// is deterministic, so equal order implies identical tables).
    bool operator==(const Field& other) const {
        return impl_ == other.impl_ || impl_->q == other.impl_->q;
    }
    bool operator!=(const Field& other) const { return !(*this == other); }

private:
    struct Impl {
        unsigned q, p, m;
        std::vector<uint8_t> modulus;
        std::vector<uint8_t> add, mul, neg, inv;
    };

    explicit Field(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

    void check(uint8_t a) const {
        if (a >= impl_->q)
            throw OutOfRange("element encoding " + std::to_string(a) +
                             " out of range for GF(" + std::to_string(impl_->q) + ")");
    }

    std::shared_ptr<const Impl> impl_;

    friend Field field_new(unsigned q);
};

/// Build GF(q) for a prime power 2 <= q <= 256. Deterministic: repeated
/// calls with equal q produce identical tables.
Field field_new(unsigned q);

}  // namespace weightforge
