#include "weightforge/gf.hpp"

#include <algorithm>

namespace weightforge {

namespace {

// q = p^m with p prime, or nothing.
struct PrimePower {
    unsigned p, m;
};

std::pair<bool, PrimePower> factor_prime_power(unsigned q) {
    if (q < 2) return {false, {}};
    unsigned p = 0;
    for (unsigned d = 2; d * d <= q; ++d) {
        if (q % d == 0) {
            p = d;
            break;
        }
    }
    if (p == 0) return {true, {q, 1}};  // q itself is prime
    unsigned m = 0, t = q;
    while (t % p == 0) {
        t /= p;
        ++m;
    }
    if (t != 1) return {false, {}};
    return {true, {p, m}};
}

// Polynomials over GF(p) as coefficient vectors, constant term first.
// All arithmetic below is only used at field-construction time.

void poly_mod(std::vector<unsigned>& r, const std::vector<uint8_t>& d, unsigned p) {
    // d is monic of degree d.size()-1
    const size_t deg = d.size() - 1;
    for (size_t i = r.size(); i-- > deg;) {
        unsigned c = r[i] % p;
        if (c == 0) continue;
        r[i] = 0;
        for (size_t j = 0; j < deg; ++j)
            r[i - deg + j] = (r[i - deg + j] + c * (p - d[j] % p)) % p;
    }
    r.resize(std::min(r.size(), deg));
}

bool divides(const std::vector<uint8_t>& divisor, const std::vector<uint8_t>& poly, unsigned p) {
    std::vector<unsigned> r(poly.begin(), poly.end());
    poly_mod(r, divisor, p);
    return std::all_of(r.begin(), r.end(), [](unsigned c) { return c == 0; });
}

// Trial division by every monic polynomial of degree 1..m/2.
bool is_irreducible(const std::vector<uint8_t>& poly, unsigned p, unsigned m) {
    for (unsigned deg = 1; deg <= m / 2; ++deg) {
        uint64_t total = 1;
        for (unsigned i = 0; i < deg; ++i) total *= p;
        for (uint64_t t = 0; t < total; ++t) {
            std::vector<uint8_t> div(deg + 1, 0);
            uint64_t tt = t;
            for (unsigned i = 0; i < deg; ++i) {
                div[i] = uint8_t(tt % p);
                tt /= p;
            }
            div[deg] = 1;
            if (divides(div, poly, p)) return false;
        }
    }
    return true;
}

// Smallest monic irreducible of degree m over GF(p), comparing the
// coefficient tuple (c0, c1, ..., c_{m-1}) lexicographically.
std::vector<uint8_t> smallest_irreducible(unsigned p, unsigned m) {
    uint64_t total = 1;
    for (unsigned i = 0; i < m; ++i) total *= p;
    for (uint64_t t = 0; t < total; ++t) {
        std::vector<uint8_t> poly(m + 1, 0);
        // lex order keys on c0 first, so c0 is the slowest-moving digit of t
        for (unsigned i = 0; i < m; ++i) {
            uint64_t weight = 1;
            for (unsigned j = i + 1; j < m; ++j) weight *= p;
            poly[i] = uint8_t((t / weight) % p);
        }
        poly[m] = 1;
        if (is_irreducible(poly, p, m)) return poly;
    }
    throw VerificationFailed("no irreducible polynomial found (impossible)");
}

void to_digits(unsigned a, unsigned p, unsigned m, unsigned* out) {
    for (unsigned i = 0; i < m; ++i) {
        out[i] = a % p;
        a /= p;
    }
}

unsigned from_digits(const unsigned* d, unsigned p, unsigned m) {
    unsigned v = 0;
    for (unsigned i = m; i-- > 0;) v = v * p + d[i];
    return v;
}

}  // namespace

uint8_t Field::pow(uint8_t a, uint64_t e) const {
    check(a);
    uint8_t base = a, result = 1;
    const uint8_t* mul = impl_->mul.data();
    const size_t q = impl_->q;
    while (e != 0) {
        if (e & 1) result = mul[size_t(result) * q + base];
        base = mul[size_t(base) * q + base];
        e >>= 1;
    }
    return result;
}

Field field_new(unsigned q) {
    if (q > kMaxFieldOrder)
        throw CapExceeded("field order " + std::to_string(q) + " exceeds cap " +
                          std::to_string(kMaxFieldOrder));
    auto [ok, pm] = factor_prime_power(q);
    if (!ok)
        throw NotPrimePower(std::to_string(q) + " is not a prime power");

    auto impl = std::make_shared<Field::Impl>();
    impl->q = q;
    impl->p = pm.p;
    impl->m = pm.m;
    if (pm.m > 1) impl->modulus = smallest_irreducible(pm.p, pm.m);

    const unsigned p = pm.p, m = pm.m;
    impl->add.resize(size_t(q) * q);
    impl->mul.resize(size_t(q) * q);
    impl->neg.resize(q);
    impl->inv.resize(q, 0);

    std::vector<unsigned> da(m), db(m), prod;
    for (unsigned a = 0; a < q; ++a) {
        to_digits(a, p, m, da.data());
        for (unsigned b = 0; b < q; ++b) {
            to_digits(b, p, m, db.data());
            // addition is digit-wise mod p
            unsigned sum_digits[16];
            for (unsigned i = 0; i < m; ++i) sum_digits[i] = (da[i] + db[i]) % p;
            impl->add[size_t(a) * q + b] = uint8_t(from_digits(sum_digits, p, m));
            // multiplication: polynomial product reduced by the modulus
            if (m == 1) {
                impl->mul[size_t(a) * q + b] = uint8_t((a * b) % p);
            } else {
                prod.assign(2 * m - 1, 0);
                for (unsigned i = 0; i < m; ++i)
                    for (unsigned j = 0; j < m; ++j)
                        prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
                poly_mod(prod, impl->modulus, p);
                unsigned digits[16] = {};
                for (size_t i = 0; i < prod.size(); ++i) digits[i] = prod[i];
                impl->mul[size_t(a) * q + b] = uint8_t(from_digits(digits, p, m));
            }
        }
    }
    for (unsigned a = 0; a < q; ++a) {
        unsigned d[16];
        to_digits(a, p, m, d);
        for (unsigned i = 0; i < m; ++i) d[i] = (p - d[i]) % p;
        impl->neg[a] = uint8_t(from_digits(d, p, m));
    }
    for (unsigned a = 1; a < q; ++a) {
        bool found = false;
        for (unsigned b = 1; b < q; ++b) {
            if (impl->mul[size_t(a) * q + b] == 1) {
                impl->inv[a] = uint8_t(b);
                found = true;
                break;
            }
        }
        if (!found)
            throw VerificationFailed("no inverse for element " + std::to_string(a) +
                                     " in GF(" + std::to_string(q) + ")");
    }
    return Field(std::move(impl));
}

}  // namespace weightforge
