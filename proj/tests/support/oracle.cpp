#include "support/oracle.hpp"

#include <stdexcept>

namespace oracle {

using weightforge::Field;
using weightforge::FqVector;
using weightforge::GenMatrix;
using weightforge::LinearCode;

namespace {

// Calls fn(message) for every message vector in odometer order.
template <class Fn>
void for_all_messages(unsigned q, size_t k, Fn&& fn) {
    std::vector<uint8_t> msg(k, 0);
    for (;;) {
        fn(msg);
        size_t i = k;
        while (i > 0 && msg[i - 1] == q - 1) msg[--i] = 0;
        if (i == 0) break;
        ++msg[i - 1];
    }
}

size_t plain_weight(const std::vector<uint8_t>& v) {
    size_t w = 0;
    for (uint8_t e : v) w += e != 0;
    return w;
}

}  // namespace

std::map<uint64_t, uint64_t> brute_spectrum(const LinearCode& code) {
    std::map<uint64_t, uint64_t> hist;
    const unsigned q = code.field().q();
    for_all_messages(q, code.dim(), [&](const std::vector<uint8_t>& msg) {
        FqVector c = encode(code, FqVector(code.field(), msg));
        ++hist[plain_weight(c.elems())];
    });
    return hist;
}

std::map<uint64_t, uint64_t> brute_coset_histogram(const LinearCode& code,
                                                   const FqVector& x) {
    std::map<uint64_t, uint64_t> hist;
    const unsigned q = code.field().q();
    for_all_messages(q, code.dim(), [&](const std::vector<uint8_t>& msg) {
        FqVector c = encode(code, FqVector(code.field(), msg));
        size_t d = 0;
        for (size_t j = 0; j < c.size(); ++j) d += c[j] != x[j];
        ++hist[d];
    });
    return hist;
}

std::vector<uint64_t> brute_coset_distances(const LinearCode& code, const FqVector& x) {
    std::vector<uint64_t> out;
    for (const auto& [d, cnt] : brute_coset_histogram(code, x)) out.push_back(d);
    return out;
}

std::vector<uint64_t> brute_distinct_weights(const LinearCode& code) {
    std::vector<uint64_t> out;
    for (const auto& [w, cnt] : brute_spectrum(code)) out.push_back(w);
    return out;
}

std::set<uint64_t> closure_reachable(uint64_t q, uint64_t k) {
    std::set<uint64_t> reach{1};
    uint64_t power = 1;
    for (uint64_t j = 1; j < k; ++j) {
        power *= q;
        std::set<uint64_t> next{1};
        for (uint64_t s : reach) {
            next.insert(s + 1);
            next.insert(power + s);
        }
        reach = std::move(next);
    }
    return reach;
}

FqVector random_vector(const Field& f, size_t n, std::mt19937_64& rng) {
    std::vector<uint8_t> v(n);
    for (size_t i = 0; i < n; ++i) v[i] = uint8_t(rng() % f.q());
    return {f, std::move(v)};
}

LinearCode random_code(const Field& f, size_t k, size_t n, std::mt19937_64& rng) {
    for (int attempt = 0; attempt < 1000; ++attempt) {
        std::vector<std::vector<uint8_t>> rows(k);
        for (auto& row : rows) {
            row.resize(n);
            for (auto& e : row) e = uint8_t(rng() % f.q());
        }
        try {
            return LinearCode(GenMatrix(f, std::move(rows)));
        } catch (const weightforge::NotFullRank&) {
            continue;
        }
    }
    throw std::runtime_error("random_code: no full-rank draw in 1000 attempts");
}

FqVector random_vector_outside(const LinearCode& code, std::mt19937_64& rng) {
    for (int attempt = 0; attempt < 100000; ++attempt) {
        FqVector x = random_vector(code.field(), code.length(), rng);
        if (!code.contains(x)) return x;
    }
    throw std::runtime_error("random_vector_outside: everything sampled was in the code");
}

}  // namespace oracle
