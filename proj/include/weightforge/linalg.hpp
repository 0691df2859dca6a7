#pragma once

#include <cstdint>
#include <vector>

#include "weightforge/gf.hpp"

namespace weightforge {

/// Length-n vector over GF(q). Immutable after construction. For q = 2 a
/// packed 64-bit-word image is kept alongside the bytes, so weight and
/// distance reduce to XOR + popcount; the packed and byte paths give
/// identical results.
class FqVector {
public:
    FqVector(Field field, std::vector<uint8_t> elems);

    const Field& field() const { return field_; }
    size_t size() const { return elems_.size(); }
    const std::vector<uint8_t>& elems() const { return elems_; }
    uint8_t operator[](size_t i) const { return elems_[i]; }

    /// Bit-packed image (LSB of word 0 = coordinate 0); empty unless q = 2.
    const std::vector<uint64_t>& packed() const { return packed_; }

    bool operator==(const FqVector& other) const {
        return field_ == other.field_ && elems_ == other.elems_;
    }
    bool operator!=(const FqVector& other) const { return !(*this == other); }

private:
    Field field_;
    std::vector<uint8_t> elems_;
    std::vector<uint64_t> packed_;
};

size_t hamming_weight(const FqVector& v);
size_t hamming_distance(const FqVector& u, const FqVector& v);

/// Elementwise lexicographic order (coordinate 0 most significant).
bool lex_less(const FqVector& u, const FqVector& v);

/// k x n matrix over GF(q); rows share the field and length.
class GenMatrix {
public:
    GenMatrix(Field field, std::vector<std::vector<uint8_t>> rows);

    const Field& field() const { return field_; }
    size_t k() const { return rows_.size(); }
    size_t n() const { return n_; }
    const std::vector<uint8_t>& row(size_t i) const { return rows_[i]; }
    const std::vector<std::vector<uint8_t>>& rows() const { return rows_; }
    FqVector row_vector(size_t i) const { return {field_, rows_[i]}; }

    bool operator==(const GenMatrix& other) const {
        return field_ == other.field_ && rows_ == other.rows_;
    }

private:
    Field field_;
    size_t n_;
    std::vector<std::vector<uint8_t>> rows_;
};

struct RrefResult {
    GenMatrix reduced;
    size_t rank;
    std::vector<size_t> pivot_cols;  // one per nonzero row of `reduced`
};

/// Row-reduced echelon form with first-nonzero pivot selection (leftmost
/// column, topmost row). Deterministic; the input is not modified.
RrefResult rref_rank(const GenMatrix& mat);

/// A linear [n, k]_q code given by a full-rank generator matrix, with the
/// reduced form cached for membership tests.
class LinearCode {
public:
    /// Throws NotFullRank (carrying the computed rank) if rank(gen) < k.
    explicit LinearCode(GenMatrix gen);

    const GenMatrix& generator() const { return gen_; }
    const Field& field() const { return gen_.field(); }
    size_t dim() const { return gen_.k(); }
    size_t length() const { return gen_.n(); }
    size_t rank() const { return gen_.k(); }

    /// Membership via reduction against the cached RREF.
    bool contains(const FqVector& x) const;

private:
    GenMatrix gen_;
    GenMatrix rref_;
    std::vector<size_t> pivots_;
};

/// Message-by-generator product; linear in the message.
FqVector encode(const LinearCode& code, const FqVector& message);

}  // namespace weightforge
