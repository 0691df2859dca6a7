#include "weightforge/linalg.hpp"

#include <algorithm>
#include <string>

#include "weightforge/kernels.hpp"

namespace weightforge {

FqVector::FqVector(Field field, std::vector<uint8_t> elems)
    : field_(std::move(field)), elems_(std::move(elems)) {
    const unsigned q = field_.q();
    for (uint8_t e : elems_)
        if (e >= q)
            throw OutOfRange("vector entry " + std::to_string(e) + " out of range for GF(" +
                             std::to_string(q) + ")");
    if (q == 2) {
        packed_.assign((elems_.size() + 63) / 64, 0);
        for (size_t i = 0; i < elems_.size(); ++i)
            if (elems_[i]) packed_[i / 64] |= uint64_t(1) << (i % 64);
    }
}

size_t hamming_weight(const FqVector& v) {
    if (v.field().q() == 2)
        return size_t(kern::active_ops().popcount_words(v.packed().data(), v.packed().size()));
    return kern::active_ops().count_nonzero(v.elems().data(), v.size());
}

size_t hamming_distance(const FqVector& u, const FqVector& v) {
    if (u.field() != v.field() || u.size() != v.size())
        throw DimensionMismatch("hamming_distance: mismatched lengths or fields");
    if (u.field().q() == 2) {
        std::vector<uint64_t> tmp(u.packed().size());
        return size_t(kern::active_ops().xor_words_count(tmp.data(), u.packed().data(),
                                                          v.packed().data(), tmp.size()));
    }
    return kern::active_ops().count_diff(u.elems().data(), v.elems().data(), u.size());
}

bool lex_less(const FqVector& u, const FqVector& v) {
    return std::lexicographical_compare(u.elems().begin(), u.elems().end(),
                                        v.elems().begin(), v.elems().end());
}

GenMatrix::GenMatrix(Field field, std::vector<std::vector<uint8_t>> rows)
    : field_(std::move(field)), rows_(std::move(rows)) {
    if (rows_.empty()) throw DimensionMismatch("matrix needs at least one row");
    n_ = rows_[0].size();
    if (n_ == 0) throw DimensionMismatch("matrix needs at least one column");
    const unsigned q = field_.q();
    for (const auto& r : rows_) {
        if (r.size() != n_) throw DimensionMismatch("ragged rows");
        for (uint8_t e : r)
            if (e >= q)
                throw OutOfRange("matrix entry " + std::to_string(e) + " out of range for GF(" +
                                 std::to_string(q) + ")");
    }
}

RrefResult rref_rank(const GenMatrix& mat) {
    const Field& f = mat.field();
    const size_t k = mat.k(), n = mat.n();
    std::vector<std::vector<uint8_t>> rows = mat.rows();
    std::vector<size_t> pivots;

    size_t r = 0;
    for (size_t col = 0; col < n && r < k; ++col) {
        size_t piv = r;
        while (piv < k && rows[piv][col] == 0) ++piv;
        if (piv == k) continue;
        std::swap(rows[r], rows[piv]);
        // normalize the pivot to 1, then clear the column everywhere else
        uint8_t scale = f.inv(rows[r][col]);
        if (scale != 1)
            for (size_t j = col; j < n; ++j) rows[r][j] = f.mul(scale, rows[r][j]);
        for (size_t i = 0; i < k; ++i) {
            if (i == r || rows[i][col] == 0) continue;
            uint8_t factor = rows[i][col];
            for (size_t j = col; j < n; ++j)
                rows[i][j] = f.sub(rows[i][j], f.mul(factor, rows[r][j]));
        }
        pivots.push_back(col);
        ++r;
    }
    return {GenMatrix(f, std::move(rows)), r, std::move(pivots)};
}

LinearCode::LinearCode(GenMatrix gen)
    : gen_(std::move(gen)), rref_(gen_), pivots_() {
    RrefResult rr = rref_rank(gen_);
    if (rr.rank != gen_.k())
        throw NotFullRank("generator matrix has rank " + std::to_string(rr.rank) +
                              " < k = " + std::to_string(gen_.k()),
                          rr.rank);
    rref_ = std::move(rr.reduced);
    pivots_ = std::move(rr.pivot_cols);
}

bool LinearCode::contains(const FqVector& x) const {
    if (x.field() != field() || x.size() != length())
        throw DimensionMismatch("contains: mismatched length or field");
    const Field& f = field();
    std::vector<uint8_t> y = x.elems();
    for (size_t i = 0; i < pivots_.size(); ++i) {
        uint8_t c = y[pivots_[i]];
        if (c == 0) continue;
        const auto& row = rref_.row(i);
        for (size_t j = 0; j < y.size(); ++j) y[j] = f.sub(y[j], f.mul(c, row[j]));
    }
    return std::all_of(y.begin(), y.end(), [](uint8_t v) { return v == 0; });
}

FqVector encode(const LinearCode& code, const FqVector& message) {
    if (message.field() != code.field() || message.size() != code.dim())
        throw DimensionMismatch("encode: message length must equal k, fields must match");
    const Field& f = code.field();
    std::vector<uint8_t> out(code.length(), 0);
    for (size_t i = 0; i < code.dim(); ++i) {
        uint8_t a = message[i];
        if (a == 0) continue;
        const auto& row = code.generator().row(i);
        for (size_t j = 0; j < out.size(); ++j) out[j] = f.add(out[j], f.mul(a, row[j]));
    }
    return {f, std::move(out)};
}

}  // namespace weightforge
