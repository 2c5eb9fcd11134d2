#include "sba/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <sstream>

namespace sba {

GaussScalar GaussScalar::from_parts(const BigInt& re_num, const BigInt& re_den,
                                    const BigInt& im_num, const BigInt& im_den) {
    if (re_den == 0 || im_den == 0) throw ValidationError("malformed scalar: zero denominator");
    return GaussScalar(BigRat(re_num, re_den), BigRat(im_num, im_den));
}

GaussScalar& GaussScalar::operator+=(const GaussScalar& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

GaussScalar& GaussScalar::operator-=(const GaussScalar& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

GaussScalar& GaussScalar::operator*=(const GaussScalar& o) {
    BigRat re = re_ * o.re_ - im_ * o.im_;
    BigRat im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

GaussScalar GaussScalar::inv() const {
    if (is_zero()) throw Error("division by zero in Q(i)");
    BigRat n = norm();
    return GaussScalar(re_ / n, -im_ / n);
}

GaussScalar& GaussScalar::operator/=(const GaussScalar& o) { return *this *= o.inv(); }

namespace {

std::string rat_str(const BigRat& r) {
    std::ostringstream os;
    os << numerator(r);
    if (denominator(r) != 1) os << "/" << denominator(r);
    return os.str();
}

}  // namespace

std::string GaussScalar::str() const {
    if (re_ == 0 && im_ == 0) return "0";
    std::string out;
    if (re_ != 0) out = rat_str(re_);
    if (im_ != 0) {
        if (out.empty()) {
            out = rat_str(im_) + "*i";
        } else if (im_ > 0) {
            out += "+" + rat_str(im_) + "*i";
        } else {
            out += "-" + rat_str(-im_) + "*i";
        }
    }
    return out;
}

namespace {

struct Cursor {
    const std::string& s;
    size_t pos = 0;
    bool done() const { return pos >= s.size(); }
    char peek() const { return s[pos]; }
};

BigInt parse_digits(Cursor& c) {
    if (c.done() || !std::isdigit(static_cast<unsigned char>(c.peek())))
        throw ValidationError("malformed scalar: expected digits in '" + c.s + "'");
    BigInt v = 0;
    while (!c.done() && std::isdigit(static_cast<unsigned char>(c.peek()))) {
        v = v * 10 + (c.peek() - '0');
        ++c.pos;
    }
    return v;
}

}  // namespace

GaussScalar GaussScalar::parse(const std::string& text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    if (s.empty()) throw ValidationError("malformed scalar: empty string");

    Cursor c{s};
    BigRat re = 0, im = 0;
    bool first = true;
    while (!c.done()) {
        int sign = 1;
        if (c.peek() == '+' || c.peek() == '-') {
            sign = (c.peek() == '-') ? -1 : 1;
            ++c.pos;
        } else if (!first) {
            throw ValidationError("malformed scalar: missing sign in '" + text + "'");
        }
        first = false;
        if (!c.done() && c.peek() == 'i') {
            ++c.pos;
            im += sign;
            continue;
        }
        BigInt num = parse_digits(c);
        BigInt den = 1;
        if (!c.done() && c.peek() == '/') {
            ++c.pos;
            den = parse_digits(c);
            if (den == 0) throw ValidationError("malformed scalar: zero denominator");
        }
        bool imaginary = false;
        if (!c.done() && c.peek() == '*') {
            ++c.pos;
            if (c.done() || c.peek() != 'i')
                throw ValidationError("malformed scalar: expected i after * in '" + text + "'");
            ++c.pos;
            imaginary = true;
        } else if (!c.done() && c.peek() == 'i') {
            ++c.pos;
            imaginary = true;
        }
        BigRat v(num, den);
        if (sign < 0) v = -v;
        if (imaginary)
            im += v;
        else
            re += v;
    }
    return GaussScalar(re, im);
}

namespace {

std::optional<BigInt> int_sqrt_exact(const BigInt& n) {
    if (n < 0) return std::nullopt;
    BigInt r = sqrt(n);
    if (r * r == n) return r;
    return std::nullopt;
}

std::optional<BigRat> rat_sqrt_exact(const BigRat& q) {
    if (q < 0) return std::nullopt;
    auto sn = int_sqrt_exact(numerator(q));
    if (!sn) return std::nullopt;
    auto sd = int_sqrt_exact(denominator(q));
    if (!sd) return std::nullopt;
    return BigRat(*sn, *sd);
}

}  // namespace

std::set<GaussScalar> sqrt_roots(const GaussScalar& s) {
    std::set<GaussScalar> out;
    if (s.is_zero()) {
        out.insert(GaussScalar(0));
        return out;
    }
    if (s.is_rational()) {
        const BigRat& a = s.re();
        if (a > 0) {
            if (auto r = rat_sqrt_exact(a)) {
                out.insert(GaussScalar(*r));
                out.insert(GaussScalar(-*r));
            }
        } else {
            if (auto r = rat_sqrt_exact(-a)) {
                out.insert(GaussScalar(BigRat(0), *r));
                out.insert(GaussScalar(BigRat(0), -*r));
            }
        }
        return out;
    }
    // c^2 - d^2 = a, 2cd = b with b != 0; needs |s| to be a rational square.
    auto m = rat_sqrt_exact(s.norm());
    if (!m) return out;
    auto c = rat_sqrt_exact((s.re() + *m) / 2);
    if (!c || *c == 0) return out;
    BigRat d = s.im() / (2 * *c);
    GaussScalar r(*c, d);
    if (r * r == s) {
        out.insert(r);
        out.insert(-r);
    }
    return out;
}

const GaussScalar& UniPoly::coeff(size_t k) const {
    static const GaussScalar zero(0);
    return k < c_.size() ? c_[k] : zero;
}

void UniPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

GaussScalar UniPoly::eval(const GaussScalar& x) const {
    GaussScalar acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
    std::vector<GaussScalar> r(std::max(c_.size(), o.c_.size()), GaussScalar(0));
    for (size_t k = 0; k < r.size(); ++k) r[k] = coeff(k) + o.coeff(k);
    return UniPoly(std::move(r));
}

UniPoly UniPoly::operator-(const UniPoly& o) const {
    std::vector<GaussScalar> r(std::max(c_.size(), o.c_.size()), GaussScalar(0));
    for (size_t k = 0; k < r.size(); ++k) r[k] = coeff(k) - o.coeff(k);
    return UniPoly(std::move(r));
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
    if (is_zero() || o.is_zero()) return UniPoly();
    std::vector<GaussScalar> r(c_.size() + o.c_.size() - 1, GaussScalar(0));
    for (size_t a = 0; a < c_.size(); ++a)
        for (size_t b = 0; b < o.c_.size(); ++b) r[a + b] += c_[a] * o.c_[b];
    return UniPoly(std::move(r));
}

UniPoly UniPoly::deflate(const GaussScalar& r) const {
    if (is_zero()) throw Error("deflating the zero polynomial");
    std::vector<GaussScalar> q(c_.size() - 1, GaussScalar(0));
    GaussScalar carry = c_.back();
    for (size_t k = c_.size() - 1; k > 0; --k) {
        q[k - 1] = carry;
        carry = c_[k - 1] + carry * r;
    }
    if (!carry.is_zero()) throw Error("deflate: not a root");
    return UniPoly(std::move(q));
}

std::string UniPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t k = c_.size(); k-- > 0;) {
        if (c_[k].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << c_[k].str() << ")";
        if (k >= 1) os << "*" << var;
        if (k >= 2) os << "^" << k;
    }
    return os.str();
}

namespace {

// --- arithmetic in Z[i], used for the generalized rational-root search ---

struct GInt {
    BigInt a = 0, b = 0;  // a + b*i
    bool is_zero() const { return a == 0 && b == 0; }
    friend GInt operator*(const GInt& x, const GInt& y) {
        return {x.a * y.a - x.b * y.b, x.a * y.b + x.b * y.a};
    }
    friend bool operator<(const GInt& x, const GInt& y) {
        if (x.a != y.a) return x.a < y.a;
        return x.b < y.b;
    }
    friend bool operator==(const GInt& x, const GInt& y) { return x.a == y.a && x.b == y.b; }
    BigInt norm() const { return a * a + b * b; }
};

std::optional<GInt> exact_div(const GInt& z, const GInt& w) {
    BigInt n = w.norm();
    if (n == 0) return std::nullopt;
    BigInt pa = z.a * w.a + z.b * w.b;
    BigInt pb = z.b * w.a - z.a * w.b;
    if (pa % n != 0 || pb % n != 0) return std::nullopt;
    return GInt{pa / n, pb / n};
}

constexpr long kTrialDivisionBound = 1000000;

// Gaussian prime factors of z (up to units), with multiplicities.
std::vector<std::pair<GInt, int>> gaussian_factorize(GInt z) {
    if (z.is_zero()) throw Error("factorizing zero");
    std::vector<std::pair<GInt, int>> factors;
    BigInt n = z.norm();
    std::vector<BigInt> rational_primes;
    BigInt m = n;
    for (BigInt p = 2; p * p <= m; ++p) {
        if (p > kTrialDivisionBound)
            throw UnsupportedError("root search: coefficient norm too large to factor");
        if (m % p == 0) {
            rational_primes.push_back(p);
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) rational_primes.push_back(m);

    auto peel = [&z, &factors](const GInt& gp) {
        int mult = 0;
        while (true) {
            auto q = exact_div(z, gp);
            if (!q) break;
            z = *q;
            ++mult;
        }
        if (mult > 0) factors.emplace_back(gp, mult);
    };

    for (const BigInt& p : rational_primes) {
        if (p == 2) {
            peel(GInt{1, 1});
        } else if (p % 4 == 3) {
            peel(GInt{p, 0});
        } else {
            // p = a^2 + b^2 splits into two conjugate Gaussian primes.
            for (BigInt a = 1; a * a <= p; ++a) {
                if (auto b = int_sqrt_exact(p - a * a)) {
                    peel(GInt{a, *b});
                    peel(GInt{a, -*b});
                    break;
                }
            }
        }
    }
    return factors;
}

// All divisors of z up to unit multiples.
std::vector<GInt> gaussian_divisors(const GInt& z) {
    auto factors = gaussian_factorize(z);
    std::vector<GInt> divs{GInt{1, 0}};
    for (const auto& [gp, mult] : factors) {
        std::vector<GInt> next;
        for (const GInt& d : divs) {
            GInt acc = d;
            next.push_back(acc);
            for (int k = 0; k < mult; ++k) {
                acc = acc * gp;
                next.push_back(acc);
            }
        }
        divs = std::move(next);
    }
    std::sort(divs.begin(), divs.end());
    divs.erase(std::unique(divs.begin(), divs.end()), divs.end());
    return divs;
}

// Clears denominators: returns the coefficients of p as Gaussian integers.
std::vector<GInt> integralize(const UniPoly& p) {
    BigInt l = 1;
    for (const auto& c : p.coeffs()) {
        l = lcm(l, denominator(c.re()));
        l = lcm(l, denominator(c.im()));
    }
    std::vector<GInt> out;
    for (const auto& c : p.coeffs()) {
        BigRat re = c.re() * l;
        BigRat im = c.im() * l;
        out.push_back(GInt{numerator(re), numerator(im)});
    }
    return out;
}

// One Q(i)-root of p (degree >= 1, nonzero constant term), if any exists.
std::optional<GaussScalar> find_gaussian_rational_root(const UniPoly& p) {
    auto ic = integralize(p);
    const GInt& a0 = ic.front();
    const GInt& an = ic.back();
    static const GaussScalar units[4] = {GaussScalar(1), GaussScalar(-1), GaussScalar::i(),
                                         GaussScalar(0) - GaussScalar::i()};
    std::set<GaussScalar> seen;
    for (const GInt& dp : gaussian_divisors(a0)) {
        GaussScalar num(BigRat(dp.a), BigRat(dp.b));
        for (const GInt& dq : gaussian_divisors(an)) {
            GaussScalar den(BigRat(dq.a), BigRat(dq.b));
            GaussScalar base = num / den;
            for (const auto& u : units) {
                GaussScalar cand = base * u;
                if (!seen.insert(cand).second) continue;
                if (p.eval(cand).is_zero()) return cand;
            }
        }
    }
    return std::nullopt;
}

}  // namespace

UnivariateSolution solve_univariate(const UniPoly& p) {
    if (p.is_zero()) throw ValidationError("solve_univariate: zero polynomial");
    if (p.degree() > 4) throw UnsupportedError("solve_univariate: degree > 4 unsupported");

    UnivariateSolution sol;
    UniPoly w = p;

    while (w.degree() >= 1 && w.coeff(0).is_zero()) {
        sol.roots.insert(GaussScalar(0));
        std::vector<GaussScalar> shifted(w.coeffs().begin() + 1, w.coeffs().end());
        w = UniPoly(std::move(shifted));
    }

    while (w.degree() >= 1) {
        if (w.degree() == 1) {
            sol.roots.insert(-w.coeff(0) / w.coeff(1));
            break;
        }
        if (w.degree() == 2) {
            GaussScalar disc = w.coeff(1) * w.coeff(1) - GaussScalar(4) * w.coeff(2) * w.coeff(0);
            auto rs = sqrt_roots(disc);
            if (rs.empty()) {
                sol.unresolved.push_back(w);
            } else {
                GaussScalar two_a = GaussScalar(2) * w.coeff(2);
                for (const auto& r : rs) sol.roots.insert((r - w.coeff(1)) / two_a);
            }
            break;
        }
        auto root = find_gaussian_rational_root(w);
        if (!root) {
            sol.unresolved.push_back(w);
            break;
        }
        sol.roots.insert(*root);
        w = w.deflate(*root);
        // Deflation can reintroduce the same root; deflate to multiplicity one.
        while (w.degree() >= 1 && w.eval(*root).is_zero()) w = w.deflate(*root);
    }
    return sol;
}

}  // namespace sba
