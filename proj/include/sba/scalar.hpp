#ifndef SBA_SCALAR_HPP
#define SBA_SCALAR_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace sba {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ShapeError : Error {
    using Error::Error;
};
struct ValidationError : Error {
    using Error::Error;
};
struct UnknownIdError : Error {
    using Error::Error;
};
struct UnsupportedError : Error {
    using Error::Error;
};
struct MissingStructureError : Error {
    using Error::Error;
};

/// An exact element of Q(i). Both rational parts are kept in lowest terms
/// (cpp_rational normalizes on construction), so equality is structural.
class GaussScalar {
public:
    GaussScalar() = default;
    GaussScalar(int n) : re_(n) {}  // NOLINT: implicit on purpose
    GaussScalar(BigRat re, BigRat im = 0) : re_(std::move(re)), im_(std::move(im)) {}

    /// Builds a scalar from the four stored integers; throws ValidationError on a
    /// zero denominator (malformed-scalar input).
    static GaussScalar from_parts(const BigInt& re_num, const BigInt& re_den,
                                  const BigInt& im_num, const BigInt& im_den);

    static GaussScalar i() { return GaussScalar(BigRat(0), BigRat(1)); }

    const BigRat& re() const { return re_; }
    const BigRat& im() const { return im_; }
    BigInt re_num() const { return numerator(re_); }
    BigInt re_den() const { return denominator(re_); }
    BigInt im_num() const { return numerator(im_); }
    BigInt im_den() const { return denominator(im_); }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_one() const { return re_ == 1 && im_ == 0; }
    bool is_rational() const { return im_ == 0; }

    GaussScalar operator-() const { return GaussScalar(-re_, -im_); }
    GaussScalar conj() const { return GaussScalar(re_, -im_); }

    GaussScalar& operator+=(const GaussScalar& o);
    GaussScalar& operator-=(const GaussScalar& o);
    GaussScalar& operator*=(const GaussScalar& o);
    GaussScalar& operator/=(const GaussScalar& o);

    friend GaussScalar operator+(GaussScalar a, const GaussScalar& b) { return a += b; }
    friend GaussScalar operator-(GaussScalar a, const GaussScalar& b) { return a -= b; }
    friend GaussScalar operator*(GaussScalar a, const GaussScalar& b) { return a *= b; }
    friend GaussScalar operator/(GaussScalar a, const GaussScalar& b) { return a /= b; }

    /// Multiplicative inverse; throws Error on zero.
    GaussScalar inv() const;

    /// |a|^2 = a * conj(a), a nonnegative rational.
    BigRat norm() const { return re_ * re_ + im_ * im_; }

    friend bool operator==(const GaussScalar& a, const GaussScalar& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussScalar& a, const GaussScalar& b) { return !(a == b); }
    /// Arbitrary total order, used for canonical sorting only.
    friend bool operator<(const GaussScalar& a, const GaussScalar& b) {
        if (a.re_ != b.re_) return a.re_ < b.re_;
        return a.im_ < b.im_;
    }

    /// Canonical text form "a/b+c/d*i" with zero parts omitted, e.g. "1",
    /// "-1/2*i", "3/4-1/4*i". Printing and parsing round-trip bit-exactly.
    std::string str() const;

    /// Parses the canonical form (plus the shorthands "i", "-i", "+i").
    /// Throws ValidationError on malformed input.
    static GaussScalar parse(const std::string& text);

private:
    BigRat re_ = 0;
    BigRat im_ = 0;
};

/// All r in Q(i) with r*r == s (0, 1 or 2 of them).
std::set<GaussScalar> sqrt_roots(const GaussScalar& s);

/// Univariate polynomial over Q(i), coefficients lowest degree first.
/// The zero polynomial is the empty coefficient list.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<GaussScalar> coeffs) : c_(std::move(coeffs)) { trim(); }

    static UniPoly constant(const GaussScalar& a) { return UniPoly({a}); }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<GaussScalar>& coeffs() const { return c_; }
    const GaussScalar& coeff(size_t k) const;

    GaussScalar eval(const GaussScalar& x) const;

    UniPoly operator+(const UniPoly& o) const;
    UniPoly operator-(const UniPoly& o) const;
    UniPoly operator*(const UniPoly& o) const;

    /// Divides by (x - r); requires r to be a root.
    UniPoly deflate(const GaussScalar& r) const;

    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

    std::string str(const std::string& var = "t") const;

private:
    void trim();
    std::vector<GaussScalar> c_;
};

struct UnivariateSolution {
    std::set<GaussScalar> roots;       // all roots in Q(i)
    std::vector<UniPoly> unresolved;   // factors whose roots lie outside Q(i)
};

/// Finds every Q(i)-root of p (degree <= 4). Factors that provably have no
/// root in Q(i) are returned in `unresolved`, never dropped.
/// Throws UnsupportedError for degree > 4 and ValidationError for the zero
/// polynomial.
UnivariateSolution solve_univariate(const UniPoly& p);

}  // namespace sba

#endif
