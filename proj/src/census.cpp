#include "glcover/census.hpp"

#include "glcover/error.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace glcover {

MuFunction::MuFunction(std::vector<MuEntry> entries) {
    std::sort(entries.begin(), entries.end());
    for (const auto& e : entries) {
        if (e.d == 0 || e.m == 0) throw DomainError("mu labels need d >= 1 and m >= 1");
        if (e.mult == 0) continue;
        if (!entries_.empty() && entries_.back().d == e.d && entries_.back().m == e.m) {
            entries_.back().mult += e.mult;
        } else {
            entries_.push_back(e);
        }
    }
}

unsigned MuFunction::operator()(unsigned d, unsigned m) const {
    for (const auto& e : entries_) {
        if (e.d == d && e.m == m) return e.mult;
    }
    return 0;
}

unsigned MuFunction::weight() const {
    unsigned w = 0;
    for (const auto& e : entries_) w += e.d * e.m * e.mult;
    return w;
}

std::string MuFunction::to_string() const {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i) os << ", ";
        os << "mu(" << entries_[i].d << ',' << entries_[i].m << ")=" << entries_[i].mult;
    }
    os << '}';
    return os.str();
}

namespace {

struct PhiBuilder {
    unsigned n;
    std::vector<MuEntry> current;
    std::vector<MuFunction> out;

    // Splits `count` blocks of size k over the divisor labels divs[idx..].
    void split(unsigned k, unsigned remaining_after, const std::vector<unsigned>& divs, std::size_t idx,
               unsigned count) {
        if (idx + 1 == divs.size()) {
            const std::size_t mark = current.size();
            if (count > 0) current.push_back({divs[idx], k / divs[idx], count});
            parts(k - 1, remaining_after);
            current.resize(mark);
            return;
        }
        for (unsigned c = 0; c <= count; ++c) {
            const std::size_t mark = current.size();
            if (c > 0) current.push_back({divs[idx], k / divs[idx], c});
            split(k, remaining_after, divs, idx + 1, count - c);
            current.resize(mark);
        }
    }

    // Chooses how many blocks of size k, k-1, ..., 1 make up `remaining`.
    void parts(unsigned k, unsigned remaining) {
        if (remaining == 0) {
            out.emplace_back(current);
            return;
        }
        if (k == 0) return;
        std::vector<unsigned> divs;
        for (unsigned d = 1; d <= k; ++d) {
            if (k % d == 0) divs.push_back(d);
        }
        for (unsigned c = 0; c * k <= remaining; ++c) split(k, remaining - c * k, divs, 0, c);
    }
};

IntPolynomial q_to_the_minus_one(unsigned d) {
    return IntPolynomial::monomial(1, d) - IntPolynomial(BigInt(1));
}

BigInt factorial(unsigned k) {
    BigInt f;
    mpz_fac_ui(f.get_mpz_t(), k);
    return f;
}

} // namespace

std::vector<MuFunction> enumerate_phi(unsigned n) {
    PhiBuilder b{n, {}, {}};
    b.parts(n, n);
    std::sort(b.out.begin(), b.out.end());
    return std::move(b.out);
}

RationalFunction normalizer_order(const MuFunction& mu) {
    IntPolynomial result(BigInt(1));
    for (const auto& e : mu.support()) {
        // m = 1: d (1 - q^-d) q^d = d (q^d - 1)
        // m > 1: d (1 - q^-d)^2 q^(2dm-d) = d (q^d - 1)^2 q^(2dm-3d)
        IntPolynomial base = q_to_the_minus_one(e.d) * BigInt(e.d);
        if (e.m > 1) {
            base *= q_to_the_minus_one(e.d);
            base = base.shifted(2 * e.d * e.m - 3 * e.d);
        }
        result *= base.pow(e.mult);
        result *= factorial(e.mult);
    }
    return RationalFunction(std::move(result));
}

RationalFunction b_coefficient(unsigned n) {
    if (n == 0) return RationalFunction(1);
    RationalFunction sum;
    for (const auto& mu : enumerate_phi(n)) sum += normalizer_order(mu).inverse();
    return sum;
}

IntPolynomial gl_order(unsigned n) {
    IntPolynomial result(BigInt(1));
    for (unsigned i = 0; i < n; ++i) {
        result *= IntPolynomial::monomial(1, n) - IntPolynomial::monomial(1, i);
    }
    return result;
}

IntPolynomial a_polynomial(unsigned n) {
    if (n == 0) throw DomainError("a_polynomial needs n >= 1");
    RationalFunction product = b_coefficient(n) * RationalFunction(gl_order(n));
    auto poly = product.as_int_polynomial();
    if (!poly) {
        throw ConsistencyError("b_" + std::to_string(n) + " * |GL_" + std::to_string(n) +
                               "(q)| is not an integer polynomial: " + product.to_string());
    }
    return *poly;
}

CensusRow census_row(unsigned n) {
    CensusRow row;
    row.n = n;
    row.b_n = b_coefficient(n);
    row.class_count = enumerate_phi(n).size();
    if (n >= 1) {
        auto poly = (row.b_n * RationalFunction(gl_order(n))).as_int_polynomial();
        if (!poly) throw ConsistencyError("b_n * |GL_n(q)| is not an integer polynomial");
        row.a_poly = *poly;
    } else {
        row.a_poly = IntPolynomial(BigInt(1));
    }
    return row;
}

bool is_prime_power(std::uint64_t q) {
    if (q < 2) return false;
    std::uint64_t p = 2;
    while (p * p <= q && q % p != 0) ++p;
    if (q % p != 0) return true; // q is prime
    while (q % p == 0) q /= p;
    return q == 1;
}

BigInt omega_closed(unsigned n, std::uint64_t q) {
    if (n == 0) throw DomainError("omega_closed needs n >= 1");
    if (!is_prime_power(q)) throw DomainError(std::to_string(q) + " is not a prime power");
    const BigInt qz(static_cast<unsigned long>(q));
    if (q > n) return a_polynomial(n).eval(qz);
    if (q == n && q > 2) {
        // The split-torus class is the one covering member without a cyclic element.
        const BigInt cover = a_polynomial(n).eval(qz);
        const BigInt group = gl_order(n).eval(qz);
        BigInt torus_norm;
        mpz_pow_ui(torus_norm.get_mpz_t(), BigInt(qz - 1).get_mpz_t(), static_cast<unsigned long>(q));
        torus_norm *= factorial(static_cast<unsigned>(q));
        if (!mpz_divisible_p(group.get_mpz_t(), torus_norm.get_mpz_t())) {
            throw ConsistencyError("|GL_q(q)| is not divisible by (q-1)^q q!");
        }
        return cover - group / torus_norm;
    }
    throw UnsupportedRegime("no exact formula for omega(GL_" + std::to_string(n) + "(" + std::to_string(q) +
                            ")): need q > n, or q = n > 2");
}

std::vector<BigInt> stabilized_prefix(unsigned n) {
    if (n < 2) throw DomainError("stabilized_prefix needs n >= 2");
    const unsigned len = n / 2;
    std::vector<BigInt> c(len);
    c[0] = 1;
    for (unsigned k = 1; k < len; ++k) {
        const unsigned e = k * (k + 1) / 2;
        for (unsigned r = 0; r < e; ++r) {
            for (unsigned s = k; s < len; ++s) c[s] += c[s - k];
        }
    }
    return c;
}

} // namespace glcover
