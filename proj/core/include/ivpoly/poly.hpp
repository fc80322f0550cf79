#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ivpoly/arith.hpp"

namespace ivpoly {

// Polynomial over Z, coefficients ascending by degree, canonical form with no
// trailing zero coefficients (the zero polynomial has an empty vector).
class ZPoly {
public:
    ZPoly() = default;
    explicit ZPoly(std::vector<Int> coeffs);

    static ZPoly constant(Int c);
    static ZPoly x();
    // x - r
    static ZPoly linear_root(const Int& r);
    // prod (x - r) over the multiset of roots; empty -> 1
    static ZPoly from_roots(const std::vector<Int>& roots);

    bool is_zero() const { return coeffs_.empty(); }
    // degree of the zero polynomial is -1
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Int>& coeffs() const { return coeffs_; }
    Int coeff(size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Int(0); }
    const Int& leading() const;
    bool is_monic() const { return !is_zero() && leading() == 1; }

    // gcd of coefficients (0 for the zero polynomial)
    Int content() const;

    Int operator()(const Int& a) const;

    ZPoly operator-() const;
    friend ZPoly operator+(const ZPoly& a, const ZPoly& b);
    friend ZPoly operator-(const ZPoly& a, const ZPoly& b);
    friend ZPoly operator*(const ZPoly& a, const ZPoly& b);

    friend bool operator==(const ZPoly& a, const ZPoly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const ZPoly& a, const ZPoly& b) { return !(a == b); }
    friend bool operator<(const ZPoly& a, const ZPoly& b);

private:
    void trim();

    std::vector<Int> coeffs_;
};

// Exact product; the empty list yields 1.
ZPoly poly_product(const std::vector<ZPoly>& fs);

// Element of Q[x] in the form num/den with den >= 1 and gcd(content(num), den) = 1;
// reduction happens at construction, so equality is structural.
class RationalPoly {
public:
    RationalPoly() : den_(1) {}
    RationalPoly(ZPoly num, Int den);

    const ZPoly& num() const { return num_; }
    const Int& den() const { return den_; }
    int degree() const { return num_.degree(); }

    Rat operator()(const Int& a) const;

    friend bool operator==(const RationalPoly& a, const RationalPoly& b) {
        return a.den_ == b.den_ && a.num_ == b.num_;
    }
    friend bool operator!=(const RationalPoly& a, const RationalPoly& b) { return !(a == b); }

private:
    ZPoly num_;
    Int den_;
};

// Fixed divisor of a nonzero integer polynomial: the positive generator of the
// ideal generated by all its values, computed as gcd(g(0), ..., g(deg g)).
// The gcd of deg+1 consecutive values divides every value of g, so this equals
// the gcd over all of Z. Throws std::invalid_argument on the zero polynomial.
Int fixed_divisor(const ZPoly& g);

// Independent oracle: gcd of g(a) for a in [0, range]; range >= deg(g).
Int fixed_divisor_bruteforce(const ZPoly& g, const Int& range);

// f maps Z into Z, i.e. den divides the fixed divisor of num.
bool is_int_valued(const RationalPoly& f);

// Fixed divisor of f as an integer-valued polynomial is 1. Throws
// std::invalid_argument when f is not integer-valued.
bool is_image_primitive(const RationalPoly& f);

// Text format: ascending coefficient list with optional denominator,
// e.g. "[0,-1,1]/2" for (x^2 - x)/2. Denominator omitted when 1.
std::string to_string(const ZPoly& g);
std::string to_string(const RationalPoly& f);
ZPoly parse_zpoly(std::string_view text);
RationalPoly parse_rational_poly(std::string_view text);

}  // namespace ivpoly
