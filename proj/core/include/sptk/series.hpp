#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sptk/base_counts.hpp"

namespace sptk {

/* A formal power series over the integers modulo q^{N+1}: exact 64-bit
 * coefficients c[0..N]. Every arithmetic step is overflow-checked and
 * throws std::overflow_error rather than wrapping. Operations on operands
 * with different truncations produce the smaller truncation. */
class TruncatedSeries {
public:
    explicit TruncatedSeries(int truncation);
    static TruncatedSeries constant(long long c, int truncation);
    static TruncatedSeries monomial(long long c, int degree, int truncation);

    int truncation() const { return static_cast<int>(coeffs_.size()) - 1; }
    long long operator[](int i) const;  // 0 outside [0, truncation]
    const std::vector<long long>& coeffs() const { return coeffs_; }

    // Largest i with c[i] != 0, or -1 for the zero series. Meaningful for
    // polynomial values whose true degree is below the truncation.
    int degree() const;

    TruncatedSeries& operator+=(const TruncatedSeries& rhs);
    TruncatedSeries& operator-=(const TruncatedSeries& rhs);
    TruncatedSeries& operator*=(long long scalar);

    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b);
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b);
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator*(long long scalar, TruncatedSeries a);
    friend TruncatedSeries operator-(TruncatedSeries a);

    // Multiplication by q^j; j < 0 is an error. Truncation is preserved.
    TruncatedSeries shifted(int j) const;

    // Restriction to a lower truncation (new_truncation <= truncation()).
    TruncatedSeries truncated(int new_truncation) const;

    // In-place multiplication by the binomial (1 - sign * q^exponent).
    void mul_binomial(int sign, int exponent);

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

    std::string str() const;  // "1 - q + 2*q^3"

private:
    std::vector<long long> coeffs_;
};

/* The product prod_{j=0}^{m-1} (1 - sign * q^{base_exp + j*step}); factors
 * absent (empty optional) means the infinite product, of which only the
 * factors with exponent <= truncation contribute mod q^{N+1}. */
struct PochSpec {
    int base_exp;  // >= 1
    int step;      // >= 1
    int sign;      // +1 for factors (1 - q^e), -1 for (1 + q^e)
    std::optional<long long> factors;
};

TruncatedSeries pochhammer(const PochSpec& spec, int truncation);

// Generating function of the matching base counting function:
// PD -> prod (1+q^j), PDE -> prod (1+q^{2j}), PDO -> prod (1+q^{2j-1}),
// PDO_SIGNED -> prod (1-q^{2j-1}).
TruncatedSeries base_gf(BaseKind kind, int truncation);

/* The four class generating functions: sum_{m>=1} q^{km} * F_m(q) where
 * F_m runs over the distinct parts above the smallest part m.
 *   SPTKD         F_m = prod_{j>m} (1 + q^j)
 *   SPTKD_SIGNED  F_m = prod_{j>m} (1 - q^j)        (weight (-1)^t)
 *   SPTKDO        F_m = prod_{j>m, j opp. parity} (1 + q^j)
 *   SPTKDO_SIGNED same with (1 - q^j)
 * The sum stops at m = floor(N/k); later terms vanish mod q^{N+1}. */
enum class GenfunFlavor { SPTKD, SPTKD_SIGNED, SPTKDO, SPTKDO_SIGNED };

TruncatedSeries genfun(GenfunFlavor flavor, int k, int truncation);

/* Polynomial families defined by first-order recurrences:
 *   P_1 = 1,   P_k = (q^{k-1} - 1) P_{k-1} + q^{k-1}
 *   T_1 = -q,  T_k = (q - q^{2k-1}) T_{k-1} - q^{2k-1}
 *   V_1 = 2q,  V_k = (q^{2k-1} - q) V_{k-1} + 2 q^k
 *   W_1 = q,   W_k = (q^{2k-1} - q) W_{k-1} + q^{2k-1}   */
enum class PolyFamily { P, T, V, W };

TruncatedSeries poly_family(PolyFamily family, int k, int truncation);

/* Closed-form right-hand sides the generating functions are checked against:
 *   THM1: P_k(q) (-q;q)_inf + (-1)^k (q;q)_{k-1}
 *   THM2: T_k(q) (q;q^2)_inf + 2 q^k (q^2;q^2)_{k-1}
 *   THM3: V_k(q) (-q^2;q^2)_inf + W_k(q) (-q;q^2)_inf + 2 (-q)^k (q^2;q^2)_{k-1} */
enum class TheoremId { THM1, THM2, THM3 };

TruncatedSeries theorem_rhs(TheoremId id, int k, int truncation);

const char* to_string(GenfunFlavor flavor);
const char* to_string(TheoremId id);

}  // namespace sptk
