#include "ivpoly/poly.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace ivpoly {

ZPoly::ZPoly(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void ZPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

ZPoly ZPoly::constant(Int c) {
    ZPoly g;
    if (c != 0) g.coeffs_.push_back(std::move(c));
    return g;
}

ZPoly ZPoly::x() { return ZPoly({0, 1}); }

ZPoly ZPoly::linear_root(const Int& r) { return ZPoly({-r, 1}); }

ZPoly ZPoly::from_roots(const std::vector<Int>& roots) {
    ZPoly g = constant(1);
    for (const Int& r : roots) g = g * linear_root(r);
    return g;
}

const Int& ZPoly::leading() const {
    if (is_zero()) throw std::invalid_argument("leading coefficient of zero polynomial");
    return coeffs_.back();
}

Int ZPoly::content() const {
    Int g = 0;
    for (const Int& c : coeffs_) g = gcd_int(g, c);
    return g;
}

Int ZPoly::operator()(const Int& a) const {
    Int v = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) v = v * a + *it;
    return v;
}

ZPoly ZPoly::operator-() const {
    ZPoly g = *this;
    for (Int& c : g.coeffs_) c = -c;
    return g;
}

ZPoly operator+(const ZPoly& a, const ZPoly& b) {
    std::vector<Int> out(std::max(a.coeffs_.size(), b.coeffs_.size()), Int(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
    for (size_t i = 0; i < b.coeffs_.size(); ++i) out[i] += b.coeffs_[i];
    return ZPoly(std::move(out));
}

ZPoly operator-(const ZPoly& a, const ZPoly& b) { return a + (-b); }

ZPoly operator*(const ZPoly& a, const ZPoly& b) {
    if (a.is_zero() || b.is_zero()) return ZPoly();
    std::vector<Int> out(a.coeffs_.size() + b.coeffs_.size() - 1, Int(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i)
        for (size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return ZPoly(std::move(out));
}

bool operator<(const ZPoly& a, const ZPoly& b) {
    if (a.coeffs_.size() != b.coeffs_.size()) return a.coeffs_.size() < b.coeffs_.size();
    for (size_t i = a.coeffs_.size(); i-- > 0;)
        if (a.coeffs_[i] != b.coeffs_[i]) return a.coeffs_[i] < b.coeffs_[i];
    return false;
}

ZPoly poly_product(const std::vector<ZPoly>& fs) {
    ZPoly g = ZPoly::constant(1);
    for (const ZPoly& f : fs) g = g * f;
    return g;
}

RationalPoly::RationalPoly(ZPoly num, Int den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_ == 0) throw std::invalid_argument("RationalPoly: zero denominator");
    if (den_ < 0) {
        den_ = -den_;
        num_ = -num_;
    }
    Int g = gcd_int(num_.content(), den_);
    if (g > 1) {
        std::vector<Int> c = num_.coeffs();
        for (Int& v : c) v /= g;
        num_ = ZPoly(std::move(c));
        den_ /= g;
    }
    if (num_.is_zero()) den_ = 1;
}

Rat RationalPoly::operator()(const Int& a) const { return Rat(num_(a), den_); }

Int fixed_divisor(const ZPoly& g) {
    if (g.is_zero()) throw std::invalid_argument("fixed divisor of zero polynomial");
    Int d = 0;
    for (Int a = 0; a <= g.degree(); ++a) d = gcd_int(d, g(a));
    return d;
}

Int fixed_divisor_bruteforce(const ZPoly& g, const Int& range) {
    if (g.is_zero()) throw std::invalid_argument("fixed divisor of zero polynomial");
    if (range < g.degree())
        throw std::invalid_argument("fixed_divisor_bruteforce: range < degree");
    Int d = 0;
    for (Int a = 0; a <= range; ++a) d = gcd_int(d, g(a));
    return d;
}

bool is_int_valued(const RationalPoly& f) {
    if (f.num().is_zero()) return true;
    return fixed_divisor(f.num()) % f.den() == 0;
}

bool is_image_primitive(const RationalPoly& f) {
    if (!is_int_valued(f)) throw std::invalid_argument("is_image_primitive: not integer-valued");
    if (f.num().is_zero()) return false;
    return fixed_divisor(f.num()) == f.den();
}

std::string to_string(const ZPoly& g) {
    std::string out = "[";
    const auto& c = g.coeffs();
    if (c.empty()) {
        out += "0";
    } else {
        for (size_t i = 0; i < c.size(); ++i) {
            if (i) out += ",";
            out += c[i].str();
        }
    }
    out += "]";
    return out;
}

std::string to_string(const RationalPoly& f) {
    std::string out = to_string(f.num());
    if (f.den() != 1) out += "/" + f.den().str();
    return out;
}

namespace {

void skip_ws(std::string_view& s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
}

Int parse_int_token(std::string_view& s) {
    skip_ws(s);
    size_t n = 0;
    if (n < s.size() && (s[n] == '+' || s[n] == '-')) ++n;
    size_t start = n;
    while (n < s.size() && std::isdigit(static_cast<unsigned char>(s[n]))) ++n;
    if (n == start) throw std::invalid_argument("polynomial parse error: expected integer");
    Int v(std::string(s.substr(0, n)));
    s.remove_prefix(n);
    return v;
}

std::vector<Int> parse_coeff_list(std::string_view& s) {
    skip_ws(s);
    if (s.empty() || s.front() != '[')
        throw std::invalid_argument("polynomial parse error: expected '['");
    s.remove_prefix(1);
    std::vector<Int> coeffs;
    skip_ws(s);
    if (!s.empty() && s.front() == ']') {
        s.remove_prefix(1);
        return coeffs;
    }
    while (true) {
        coeffs.push_back(parse_int_token(s));
        skip_ws(s);
        if (!s.empty() && s.front() == ',') {
            s.remove_prefix(1);
            continue;
        }
        if (!s.empty() && s.front() == ']') {
            s.remove_prefix(1);
            return coeffs;
        }
        throw std::invalid_argument("polynomial parse error: expected ',' or ']'");
    }
}

}  // namespace

ZPoly parse_zpoly(std::string_view text) {
    std::string_view s = text;
    std::vector<Int> coeffs = parse_coeff_list(s);
    skip_ws(s);
    if (!s.empty()) throw std::invalid_argument("polynomial parse error: trailing input");
    return ZPoly(std::move(coeffs));
}

RationalPoly parse_rational_poly(std::string_view text) {
    std::string_view s = text;
    std::vector<Int> coeffs = parse_coeff_list(s);
    skip_ws(s);
    Int den = 1;
    if (!s.empty() && s.front() == '/') {
        s.remove_prefix(1);
        den = parse_int_token(s);
        if (den <= 0) throw std::invalid_argument("polynomial parse error: denominator must be positive");
        skip_ws(s);
    }
    if (!s.empty()) throw std::invalid_argument("polynomial parse error: trailing input");
    return RationalPoly(ZPoly(std::move(coeffs)), den);
}

}  // namespace ivpoly
