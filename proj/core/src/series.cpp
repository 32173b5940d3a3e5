#include "sptk/series.hpp"

#include <sstream>
#include <stdexcept>

namespace sptk {

namespace {

long long add_checked(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("TruncatedSeries: coefficient addition overflow");
    return r;
}

long long mul_checked(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("TruncatedSeries: coefficient multiplication overflow");
    return r;
}

int check_truncation(int truncation) {
    if (truncation < 0)
        throw std::invalid_argument("TruncatedSeries: truncation must be >= 0");
    return truncation;
}

}  // namespace

TruncatedSeries::TruncatedSeries(int truncation)
    : coeffs_(static_cast<std::size_t>(check_truncation(truncation)) + 1, 0) {}

TruncatedSeries TruncatedSeries::constant(long long c, int truncation) {
    TruncatedSeries s(truncation);
    s.coeffs_[0] = c;
    return s;
}

TruncatedSeries TruncatedSeries::monomial(long long c, int degree, int truncation) {
    if (degree < 0)
        throw std::invalid_argument("TruncatedSeries: monomial degree must be >= 0");
    TruncatedSeries s(truncation);
    if (degree <= truncation)
        s.coeffs_[static_cast<std::size_t>(degree)] = c;
    return s;
}

long long TruncatedSeries::operator[](int i) const {
    if (i < 0 || i > truncation())
        return 0;
    return coeffs_[static_cast<std::size_t>(i)];
}

int TruncatedSeries::degree() const {
    for (int i = truncation(); i >= 0; --i)
        if (coeffs_[static_cast<std::size_t>(i)] != 0)
            return i;
    return -1;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& rhs) {
    if (rhs.truncation() < truncation())
        coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        coeffs_[i] = add_checked(coeffs_[i], rhs.coeffs_[i]);
    return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& rhs) {
    if (rhs.truncation() < truncation())
        coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        coeffs_[i] = add_checked(coeffs_[i], -rhs.coeffs_[i]);
    return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(long long scalar) {
    for (auto& c : coeffs_)
        c = mul_checked(c, scalar);
    return *this;
}

TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) {
    a += b;
    return a;
}

TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) {
    a -= b;
    return a;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    const int n = std::min(a.truncation(), b.truncation());
    TruncatedSeries prod(n);
    for (int i = 0; i <= n; ++i) {
        const long long ai = a[i];
        if (ai == 0)
            continue;
        for (int j = 0; i + j <= n; ++j) {
            if (b[j] == 0)
                continue;
            auto& cell = prod.coeffs_[static_cast<std::size_t>(i + j)];
            cell = add_checked(cell, mul_checked(ai, b[j]));
        }
    }
    return prod;
}

TruncatedSeries operator*(long long scalar, TruncatedSeries a) {
    a *= scalar;
    return a;
}

TruncatedSeries operator-(TruncatedSeries a) {
    a *= -1;
    return a;
}

TruncatedSeries TruncatedSeries::shifted(int j) const {
    if (j < 0)
        throw std::invalid_argument("TruncatedSeries: shift by negative exponent");
    TruncatedSeries s(truncation());
    for (int i = 0; i + j <= truncation(); ++i)
        s.coeffs_[static_cast<std::size_t>(i + j)] = coeffs_[static_cast<std::size_t>(i)];
    return s;
}

TruncatedSeries TruncatedSeries::truncated(int new_truncation) const {
    if (new_truncation < 0 || new_truncation > truncation())
        throw std::invalid_argument("TruncatedSeries: bad truncation restriction");
    TruncatedSeries s(new_truncation);
    for (int i = 0; i <= new_truncation; ++i)
        s.coeffs_[static_cast<std::size_t>(i)] = coeffs_[static_cast<std::size_t>(i)];
    return s;
}

void TruncatedSeries::mul_binomial(int sign, int exponent) {
    // (1 - sign*q^e): new c[i] = c[i] - sign*c[i-e], updated high to low.
    for (int i = truncation(); i >= exponent; --i) {
        auto& cell = coeffs_[static_cast<std::size_t>(i)];
        cell = add_checked(cell, mul_checked(-sign, coeffs_[static_cast<std::size_t>(i - exponent)]));
    }
}

std::string TruncatedSeries::str() const {
    std::ostringstream out;
    bool first = true;
    for (int i = 0; i <= truncation(); ++i) {
        const long long c = (*this)[i];
        if (c == 0)
            continue;
        if (first) {
            if (c < 0)
                out << '-';
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        const long long mag = c < 0 ? -c : c;
        if (i == 0) {
            out << mag;
        } else {
            if (mag != 1)
                out << mag << '*';
            out << 'q';
            if (i > 1)
                out << '^' << i;
        }
    }
    if (first)
        out << '0';
    return out.str();
}

TruncatedSeries pochhammer(const PochSpec& spec, int truncation) {
    if (spec.base_exp < 1)
        throw std::invalid_argument("pochhammer: base exponent must be >= 1");
    if (spec.step < 1)
        throw std::invalid_argument("pochhammer: step must be >= 1");
    if (spec.sign != 1 && spec.sign != -1)
        throw std::invalid_argument("pochhammer: sign must be +1 or -1");
    if (spec.factors && *spec.factors < 0)
        throw std::invalid_argument("pochhammer: factor count must be >= 0");
    TruncatedSeries s = TruncatedSeries::constant(1, truncation);
    long long exponent = spec.base_exp;
    for (long long j = 0; !spec.factors || j < *spec.factors; ++j) {
        if (exponent > truncation)
            break;  // remaining factors are 1 mod q^{N+1}
        s.mul_binomial(spec.sign, static_cast<int>(exponent));
        exponent += spec.step;
    }
    return s;
}

TruncatedSeries base_gf(BaseKind kind, int truncation) {
    switch (kind) {
    case BaseKind::PD:
        return pochhammer({1, 1, -1, std::nullopt}, truncation);
    case BaseKind::PDE:
        return pochhammer({2, 2, -1, std::nullopt}, truncation);
    case BaseKind::PDO:
        return pochhammer({1, 2, -1, std::nullopt}, truncation);
    case BaseKind::PDO_SIGNED:
        return pochhammer({1, 2, 1, std::nullopt}, truncation);
    }
    throw std::invalid_argument("base_gf: bad kind");
}

TruncatedSeries genfun(GenfunFlavor flavor, int k, int truncation) {
    if (k < 1)
        throw std::invalid_argument("genfun: k must be >= 1");
    int step = 1;
    int sign = -1;
    switch (flavor) {
    case GenfunFlavor::SPTKD:
        break;
    case GenfunFlavor::SPTKD_SIGNED:
        sign = 1;
        break;
    case GenfunFlavor::SPTKDO:
        step = 2;
        break;
    case GenfunFlavor::SPTKDO_SIGNED:
        step = 2;
        sign = 1;
        break;
    }
    TruncatedSeries sum(truncation);
    for (long long m = 1; k * m <= truncation; ++m) {
        auto term = pochhammer({static_cast<int>(m) + 1, step, sign, std::nullopt}, truncation);
        sum += term.shifted(static_cast<int>(k * m));
    }
    return sum;
}

TruncatedSeries poly_family(PolyFamily family, int k, int truncation) {
    if (k < 1)
        throw std::invalid_argument("poly_family: k must be >= 1");
    TruncatedSeries p(truncation);
    switch (family) {
    case PolyFamily::P:
        p = TruncatedSeries::constant(1, truncation);
        for (int j = 2; j <= k; ++j) {
            auto factor = TruncatedSeries::monomial(1, j - 1, truncation) -
                          TruncatedSeries::constant(1, truncation);
            p = factor * p + TruncatedSeries::monomial(1, j - 1, truncation);
        }
        return p;
    case PolyFamily::T:
        p = TruncatedSeries::monomial(-1, 1, truncation);
        for (int j = 2; j <= k; ++j) {
            auto factor = TruncatedSeries::monomial(1, 1, truncation) -
                          TruncatedSeries::monomial(1, 2 * j - 1, truncation);
            p = factor * p - TruncatedSeries::monomial(1, 2 * j - 1, truncation);
        }
        return p;
    case PolyFamily::V:
        p = TruncatedSeries::monomial(2, 1, truncation);
        for (int j = 2; j <= k; ++j) {
            auto factor = TruncatedSeries::monomial(1, 2 * j - 1, truncation) -
                          TruncatedSeries::monomial(1, 1, truncation);
            p = factor * p + TruncatedSeries::monomial(2, j, truncation);
        }
        return p;
    case PolyFamily::W:
        p = TruncatedSeries::monomial(1, 1, truncation);
        for (int j = 2; j <= k; ++j) {
            auto factor = TruncatedSeries::monomial(1, 2 * j - 1, truncation) -
                          TruncatedSeries::monomial(1, 1, truncation);
            p = factor * p + TruncatedSeries::monomial(1, 2 * j - 1, truncation);
        }
        return p;
    }
    throw std::invalid_argument("poly_family: bad family");
}

TruncatedSeries theorem_rhs(TheoremId id, int k, int truncation) {
    if (k < 1)
        throw std::invalid_argument("theorem_rhs: k must be >= 1");
    const int parity_sign = k % 2 == 0 ? 1 : -1;
    switch (id) {
    case TheoremId::THM1: {
        auto rhs = poly_family(PolyFamily::P, k, truncation) *
                   pochhammer({1, 1, -1, std::nullopt}, truncation);
        rhs += parity_sign * pochhammer({1, 1, 1, k - 1}, truncation);
        return rhs;
    }
    case TheoremId::THM2: {
        auto rhs = poly_family(PolyFamily::T, k, truncation) *
                   pochhammer({1, 2, 1, std::nullopt}, truncation);
        rhs += 2 * pochhammer({2, 2, 1, k - 1}, truncation).shifted(k);
        return rhs;
    }
    case TheoremId::THM3: {
        auto rhs = poly_family(PolyFamily::V, k, truncation) *
                   pochhammer({2, 2, -1, std::nullopt}, truncation);
        rhs += poly_family(PolyFamily::W, k, truncation) *
               pochhammer({1, 2, -1, std::nullopt}, truncation);
        rhs += (2 * parity_sign) * pochhammer({2, 2, 1, k - 1}, truncation).shifted(k);
        return rhs;
    }
    }
    throw std::invalid_argument("theorem_rhs: bad id");
}

const char* to_string(GenfunFlavor flavor) {
    switch (flavor) {
    case GenfunFlavor::SPTKD:
        return "SPTKD";
    case GenfunFlavor::SPTKD_SIGNED:
        return "SPTKD_SIGNED";
    case GenfunFlavor::SPTKDO:
        return "SPTKDO";
    case GenfunFlavor::SPTKDO_SIGNED:
        return "SPTKDO_SIGNED";
    }
    return "?";
}

const char* to_string(TheoremId id) {
    switch (id) {
    case TheoremId::THM1:
        return "THM1";
    case TheoremId::THM2:
        return "THM2";
    case TheoremId::THM3:
        return "THM3";
    }
    return "?";
}

}  // namespace sptk
