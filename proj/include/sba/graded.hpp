#ifndef SBA_GRADED_HPP
#define SBA_GRADED_HPP

#include "sba/linalg.hpp"
#include "sba/scalar.hpp"

#include <array>
#include <map>
#include <string>
#include <vector>

namespace sba {

/// A Z/2-graded vector space, given by its even and odd dimensions.
/// The even basis vector e_1^0 is reserved for the unit, hence n0 >= 1.
struct Superspace {
    size_t n0 = 1;
    size_t n1 = 0;

    size_t dim() const { return n0 + n1; }
    size_t dim_of_parity(int p) const { return p == 0 ? n0 : n1; }

    friend bool operator==(const Superspace& a, const Superspace& b) {
        return a.n0 == b.n0 && a.n1 == b.n1;
    }
    friend bool operator!=(const Superspace& a, const Superspace& b) { return !(a == b); }
};

/// The scalar line K viewed as a superspace.
inline Superspace scalar_space() { return Superspace{1, 0}; }

/// Index of a basis vector: parity block plus 1-based position inside it.
struct BasisIndex {
    int parity = 0;
    size_t pos = 1;

    friend bool operator==(const BasisIndex& a, const BasisIndex& b) {
        return a.parity == b.parity && a.pos == b.pos;
    }
    friend bool operator<(const BasisIndex& a, const BasisIndex& b) {
        if (a.parity != b.parity) return a.parity < b.parity;
        return a.pos < b.pos;
    }

    bool valid_in(const Superspace& s) const {
        return (parity == 0 || parity == 1) && pos >= 1 && pos <= s.dim_of_parity(parity);
    }
    /// Position in the flattened basis (even block first), 0-based.
    size_t flat(const Superspace& s) const { return parity == 0 ? pos - 1 : s.n0 + pos - 1; }

    std::string str() const;
};

inline BasisIndex unit_index() { return BasisIndex{0, 1}; }

/// All basis indices of s, even block first.
std::vector<BasisIndex> basis_of(const Superspace& s);

/// Sparse vector in a superspace; absent coefficients are zero.
class GradedVector {
public:
    GradedVector() = default;
    explicit GradedVector(Superspace space) : space_(space) {}

    static GradedVector basis_vector(Superspace space, BasisIndex b, GaussScalar c = GaussScalar(1));

    const Superspace& space() const { return space_; }
    const std::map<BasisIndex, GaussScalar>& terms() const { return c_; }

    bool is_zero() const { return c_.empty(); }
    GaussScalar coeff(const BasisIndex& b) const;
    void add_term(const BasisIndex& b, const GaussScalar& c);

    GradedVector& operator+=(const GradedVector& o);
    GradedVector& operator-=(const GradedVector& o);
    GradedVector& operator*=(const GaussScalar& s);
    friend GradedVector operator+(GradedVector a, const GradedVector& b) { return a += b; }
    friend GradedVector operator-(GradedVector a, const GradedVector& b) { return a -= b; }
    friend GradedVector operator*(const GaussScalar& s, GradedVector v) { return v *= s; }

    friend bool operator==(const GradedVector& a, const GradedVector& b) {
        return a.space_ == b.space_ && a.c_ == b.c_;
    }

    /// -1 if not homogeneous (mixed or zero support counts as homogeneous of
    /// either parity only when empty; zero returns -2).
    int homogeneous_parity() const;

    std::vector<GaussScalar> dense() const;
    static GradedVector from_dense(Superspace space, const std::vector<GaussScalar>& v);

    std::string str(const std::vector<std::string>* labels = nullptr) const;

private:
    Superspace space_;
    std::map<BasisIndex, GaussScalar> c_;
};

/// Element of a tensor product of 2 or 3 superspaces, coefficient-indexed by
/// basis tuples.
class TensorVector {
public:
    TensorVector() = default;
    explicit TensorVector(std::vector<Superspace> factors);

    struct Key {
        std::array<BasisIndex, 3> idx;
        size_t arity = 2;
        friend bool operator<(const Key& a, const Key& b) {
            if (a.arity != b.arity) return a.arity < b.arity;
            for (size_t k = 0; k < a.arity; ++k) {
                if (a.idx[k] < b.idx[k]) return true;
                if (b.idx[k] < a.idx[k]) return false;
            }
            return false;
        }
        friend bool operator==(const Key& a, const Key& b) {
            if (a.arity != b.arity) return false;
            for (size_t k = 0; k < a.arity; ++k)
                if (!(a.idx[k] == b.idx[k])) return false;
            return true;
        }
    };

    static Key key2(BasisIndex a, BasisIndex b) { return Key{{a, b, {}}, 2}; }
    static Key key3(BasisIndex a, BasisIndex b, BasisIndex c) { return Key{{a, b, c}, 3}; }

    size_t arity() const { return factors_.size(); }
    const std::vector<Superspace>& factors() const { return factors_; }
    const std::map<Key, GaussScalar>& terms() const { return c_; }

    bool is_zero() const { return c_.empty(); }
    GaussScalar coeff(const Key& k) const;
    void add_term(const Key& k, const GaussScalar& c);

    TensorVector& operator+=(const TensorVector& o);
    TensorVector& operator-=(const TensorVector& o);
    TensorVector& operator*=(const GaussScalar& s);
    friend TensorVector operator+(TensorVector a, const TensorVector& b) { return a += b; }
    friend TensorVector operator-(TensorVector a, const TensorVector& b) { return a -= b; }
    friend TensorVector operator*(const GaussScalar& s, TensorVector v) { return v *= s; }

    friend bool operator==(const TensorVector& a, const TensorVector& b) {
        return a.factors_ == b.factors_ && a.c_ == b.c_;
    }

    std::string str(const std::vector<std::string>* labels = nullptr) const;

private:
    std::vector<Superspace> factors_;
    std::map<Key, GaussScalar> c_;
};

/// v (x) w as an element of A (x) B.
TensorVector tensor_of(const GradedVector& v, const GradedVector& w);
TensorVector tensor_of(const GradedVector& v, const GradedVector& w, const GradedVector& u);

/// The Koszul-signed swap tau: e (x) f -> (-1)^{|e||f|} f (x) e, extended
/// linearly. Requires a two-factor tensor.
TensorVector superflip(const TensorVector& t);

/// Parity-homogeneous linear map between superspaces in block form. An even
/// map (parity 0) preserves parities; an odd map (parity 1) swaps them.
/// block0 acts on even-basis coordinates of the domain, block1 on odd ones;
/// the image lands in parity (source parity + map parity) mod 2.
class GradedLinearMap {
public:
    GradedLinearMap() = default;
    GradedLinearMap(Superspace domain, Superspace codomain, int parity = 0);
    GradedLinearMap(Superspace domain, Superspace codomain, Mat block0, Mat block1,
                    int parity = 0);

    static GradedLinearMap identity(const Superspace& s);

    const Superspace& domain() const { return dom_; }
    const Superspace& codomain() const { return cod_; }
    int parity() const { return parity_; }
    const Mat& block(int p) const { return p == 0 ? b0_ : b1_; }
    Mat& block(int p) { return p == 0 ? b0_ : b1_; }

    /// Sets S(e_src) += c * e_dst. Parities must agree with the map parity.
    void add_entry(BasisIndex dst, BasisIndex src, const GaussScalar& c);
    GaussScalar entry(BasisIndex dst, BasisIndex src) const;

    GradedVector apply(const GradedVector& v) const;
    GradedVector apply_basis(const BasisIndex& b) const;

    /// Composition this ∘ other.
    GradedLinearMap compose(const GradedLinearMap& other) const;

    /// Both blocks square and invertible. Only meaningful for even maps.
    bool invertible() const;
    GradedLinearMap inverse() const;

    friend bool operator==(const GradedLinearMap& a, const GradedLinearMap& b) {
        return a.dom_ == b.dom_ && a.cod_ == b.cod_ && a.parity_ == b.parity_ &&
               a.b0_ == b.b0_ && a.b1_ == b.b1_;
    }

private:
    Superspace dom_, cod_;
    int parity_ = 0;
    Mat b0_, b1_;
};

/// (f (x) g)(a (x) b) = (-1)^{|g||a|} f(a) (x) g(b), extended linearly.
TensorVector apply_tensor_maps(const GradedLinearMap& f, const GradedLinearMap& g,
                               const TensorVector& t);

/// Three-factor version: (f (x) g (x) h) with the Koszul signs
/// (-1)^{|g||a| + |h|(|a|+|b|)}.
TensorVector apply_tensor_maps(const GradedLinearMap& f, const GradedLinearMap& g,
                               const GradedLinearMap& h, const TensorVector& t);

/// Identifies K (x) A or A (x) K with A by dropping the scalar factor
/// (which must be the 1-dimensional even space).
GradedVector strip_scalar_factor(const TensorVector& t, size_t which_factor);

}  // namespace sba

#endif
