#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace knotlineage {

// Laurent polynomial in two variables (v, z), the value domain of the skein
// computation.  Terms are kept sorted by (z_exp, v_exp) with nonzero
// coefficients, so the default comparison is a total order and equal
// polynomials compare equal.  Exponents stay far below the int16 range for
// diagrams of the sizes handled here; coefficients fit comfortably in int64.
class SkeinPolynomial {
public:
    struct Term {
        int16_t zexp = 0;
        int16_t vexp = 0;
        int64_t coef = 0;
        auto operator<=>(const Term&) const = default;
    };

    SkeinPolynomial() = default;  // zero
    explicit SkeinPolynomial(int64_t constant);
    static SkeinPolynomial term(int64_t coef, int vexp, int zexp);
    static SkeinPolynomial one() { return SkeinPolynomial(1); }
    // (v^-1 - v) / z: the value of a 2-component crossingless unlink.
    static SkeinPolynomial delta();

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;

    SkeinPolynomial& operator+=(const SkeinPolynomial& o);
    SkeinPolynomial& operator-=(const SkeinPolynomial& o);
    friend SkeinPolynomial operator+(SkeinPolynomial a, const SkeinPolynomial& b) {
        a += b;
        return a;
    }
    friend SkeinPolynomial operator-(SkeinPolynomial a, const SkeinPolynomial& b) {
        a -= b;
        return a;
    }
    SkeinPolynomial operator*(const SkeinPolynomial& o) const;
    SkeinPolynomial operator-() const;

    // v -> v^-1, z -> -z: the value of the mirror image diagram.
    SkeinPolynomial mirror() const;
    bool mirror_symmetric() const { return *this == mirror(); }
    // min(p, p.mirror()): a chirality-blind lookup key.
    SkeinPolynomial mirror_canonical() const;

    SkeinPolynomial pow(int k) const;  // k >= 0

    // |value at v = 1, z = t^(1/2) - t^(-1/2), t = -1| i.e. z^2 = -4.
    // Defined for single-component values (even nonnegative z exponents).
    int64_t determinant() const;

    // Human form, z-degree major, e.g. "2v^2 - v^4 + v^2 z^2".
    std::string text() const;

    const std::vector<Term>& terms() const { return terms_; }

    bool operator==(const SkeinPolynomial&) const = default;
    std::strong_ordering operator<=>(const SkeinPolynomial&) const = default;

private:
    std::vector<Term> terms_;
};

}  // namespace knotlineage
