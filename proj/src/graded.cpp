#include "sba/graded.hpp"

#include <sstream>

namespace sba {

std::string BasisIndex::str() const {
    std::ostringstream os;
    os << "e" << pos << "^" << parity;
    return os.str();
}

std::vector<BasisIndex> basis_of(const Superspace& s) {
    std::vector<BasisIndex> out;
    out.reserve(s.dim());
    for (size_t i = 1; i <= s.n0; ++i) out.push_back(BasisIndex{0, i});
    for (size_t i = 1; i <= s.n1; ++i) out.push_back(BasisIndex{1, i});
    return out;
}

GradedVector GradedVector::basis_vector(Superspace space, BasisIndex b, GaussScalar c) {
    if (!b.valid_in(space)) throw ShapeError("basis index out of range: " + b.str());
    GradedVector v(space);
    v.add_term(b, c);
    return v;
}

GaussScalar GradedVector::coeff(const BasisIndex& b) const {
    auto it = c_.find(b);
    return it == c_.end() ? GaussScalar(0) : it->second;
}

void GradedVector::add_term(const BasisIndex& b, const GaussScalar& c) {
    if (!b.valid_in(space_)) throw ShapeError("basis index out of range: " + b.str());
    if (c.is_zero()) return;
    auto [it, inserted] = c_.emplace(b, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) c_.erase(it);
    }
}

GradedVector& GradedVector::operator+=(const GradedVector& o) {
    if (space_ != o.space_) throw ShapeError("vector sum: space mismatch");
    for (const auto& [b, c] : o.c_) add_term(b, c);
    return *this;
}

GradedVector& GradedVector::operator-=(const GradedVector& o) {
    if (space_ != o.space_) throw ShapeError("vector difference: space mismatch");
    for (const auto& [b, c] : o.c_) add_term(b, -c);
    return *this;
}

GradedVector& GradedVector::operator*=(const GaussScalar& s) {
    if (s.is_zero()) {
        c_.clear();
        return *this;
    }
    for (auto& [b, c] : c_) c *= s;
    return *this;
}

int GradedVector::homogeneous_parity() const {
    if (c_.empty()) return -2;
    int p = c_.begin()->first.parity;
    for (const auto& [b, c] : c_)
        if (b.parity != p) return -1;
    return p;
}

std::vector<GaussScalar> GradedVector::dense() const {
    std::vector<GaussScalar> out(space_.dim(), GaussScalar(0));
    for (const auto& [b, c] : c_) out[b.flat(space_)] = c;
    return out;
}

GradedVector GradedVector::from_dense(Superspace space, const std::vector<GaussScalar>& v) {
    if (v.size() != space.dim()) throw ShapeError("from_dense: size mismatch");
    GradedVector out(space);
    size_t k = 0;
    for (const auto& b : basis_of(space)) out.add_term(b, v[k++]);
    return out;
}

namespace {

std::string label_of(const BasisIndex& b, const Superspace& s,
                     const std::vector<std::string>* labels) {
    if (labels && b.flat(s) < labels->size()) return (*labels)[b.flat(s)];
    return b.str();
}

void append_term(std::ostringstream& os, bool& first, const GaussScalar& c,
                 const std::string& body) {
    std::string cs = c.str();
    if (!first) os << " + ";
    first = false;
    if (cs == "1")
        os << body;
    else if (cs == "-1")
        os << "-" << body;
    else
        os << "(" << cs << ")" << body;
}

}  // namespace

std::string GradedVector::str(const std::vector<std::string>* labels) const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [b, c] : c_) append_term(os, first, c, label_of(b, space_, labels));
    return os.str();
}

TensorVector::TensorVector(std::vector<Superspace> factors) : factors_(std::move(factors)) {
    if (factors_.size() != 2 && factors_.size() != 3)
        throw ShapeError("tensor vectors carry 2 or 3 factors");
}

GaussScalar TensorVector::coeff(const Key& k) const {
    auto it = c_.find(k);
    return it == c_.end() ? GaussScalar(0) : it->second;
}

void TensorVector::add_term(const Key& k, const GaussScalar& c) {
    if (k.arity != factors_.size()) throw ShapeError("tensor term arity mismatch");
    for (size_t f = 0; f < k.arity; ++f)
        if (!k.idx[f].valid_in(factors_[f]))
            throw ShapeError("tensor index out of range: " + k.idx[f].str());
    if (c.is_zero()) return;
    auto [it, inserted] = c_.emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) c_.erase(it);
    }
}

TensorVector& TensorVector::operator+=(const TensorVector& o) {
    if (factors_ != o.factors_) throw ShapeError("tensor sum: factor mismatch");
    for (const auto& [k, c] : o.c_) add_term(k, c);
    return *this;
}

TensorVector& TensorVector::operator-=(const TensorVector& o) {
    if (factors_ != o.factors_) throw ShapeError("tensor difference: factor mismatch");
    for (const auto& [k, c] : o.c_) add_term(k, -c);
    return *this;
}

TensorVector& TensorVector::operator*=(const GaussScalar& s) {
    if (s.is_zero()) {
        c_.clear();
        return *this;
    }
    for (auto& [k, c] : c_) c *= s;
    return *this;
}

std::string TensorVector::str(const std::vector<std::string>* labels) const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : c_) {
        std::string body;
        for (size_t f = 0; f < k.arity; ++f) {
            if (f) body += "(x)";
            body += label_of(k.idx[f], factors_[f], labels);
        }
        append_term(os, first, c, body);
    }
    return os.str();
}

TensorVector tensor_of(const GradedVector& v, const GradedVector& w) {
    TensorVector t({v.space(), w.space()});
    for (const auto& [a, ca] : v.terms())
        for (const auto& [b, cb] : w.terms()) t.add_term(TensorVector::key2(a, b), ca * cb);
    return t;
}

TensorVector tensor_of(const GradedVector& v, const GradedVector& w, const GradedVector& u) {
    TensorVector t({v.space(), w.space(), u.space()});
    for (const auto& [a, ca] : v.terms())
        for (const auto& [b, cb] : w.terms())
            for (const auto& [c, cc] : u.terms())
                t.add_term(TensorVector::key3(a, b, c), ca * cb * cc);
    return t;
}

TensorVector superflip(const TensorVector& t) {
    if (t.arity() != 2) throw ShapeError("superflip needs exactly two factors");
    TensorVector out({t.factors()[1], t.factors()[0]});
    for (const auto& [k, c] : t.terms()) {
        GaussScalar v = c;
        if (k.idx[0].parity == 1 && k.idx[1].parity == 1) v = -v;
        out.add_term(TensorVector::key2(k.idx[1], k.idx[0]), v);
    }
    return out;
}

GradedLinearMap::GradedLinearMap(Superspace domain, Superspace codomain, int parity)
    : dom_(domain), cod_(codomain), parity_(parity) {
    if (parity != 0 && parity != 1) throw ShapeError("map parity must be 0 or 1");
    b0_ = Mat(cod_.dim_of_parity(parity), dom_.n0);
    b1_ = Mat(cod_.dim_of_parity((1 + parity) % 2), dom_.n1);
}

GradedLinearMap::GradedLinearMap(Superspace domain, Superspace codomain, Mat block0, Mat block1,
                                 int parity)
    : dom_(domain), cod_(codomain), parity_(parity), b0_(std::move(block0)), b1_(std::move(block1)) {
    if (parity != 0 && parity != 1) throw ShapeError("map parity must be 0 or 1");
    if (b0_.rows() != cod_.dim_of_parity(parity % 2) || b0_.cols() != dom_.n0 ||
        b1_.rows() != cod_.dim_of_parity((1 + parity) % 2) || b1_.cols() != dom_.n1)
        throw ShapeError("graded map: block shape mismatch");
}

GradedLinearMap GradedLinearMap::identity(const Superspace& s) {
    return GradedLinearMap(s, s, Mat::identity(s.n0), Mat::identity(s.n1), 0);
}

void GradedLinearMap::add_entry(BasisIndex dst, BasisIndex src, const GaussScalar& c) {
    if (!src.valid_in(dom_) || !dst.valid_in(cod_)) throw ShapeError("map entry out of range");
    if (dst.parity != (src.parity + parity_) % 2)
        throw ShapeError("map entry violates the declared parity");
    block(src.parity).at(dst.pos - 1, src.pos - 1) += c;
}

GaussScalar GradedLinearMap::entry(BasisIndex dst, BasisIndex src) const {
    if (dst.parity != (src.parity + parity_) % 2) return GaussScalar(0);
    return block(src.parity).at(dst.pos - 1, src.pos - 1);
}

GradedVector GradedLinearMap::apply_basis(const BasisIndex& b) const {
    if (!b.valid_in(dom_)) throw ShapeError("apply: index out of range");
    GradedVector out(cod_);
    int out_parity = (b.parity + parity_) % 2;
    const Mat& m = block(b.parity);
    for (size_t r = 0; r < m.rows(); ++r)
        out.add_term(BasisIndex{out_parity, r + 1}, m.at(r, b.pos - 1));
    return out;
}

GradedVector GradedLinearMap::apply(const GradedVector& v) const {
    if (v.space() != dom_) throw ShapeError("apply: domain mismatch");
    GradedVector out(cod_);
    for (const auto& [b, c] : v.terms()) out += c * apply_basis(b);
    return out;
}

GradedLinearMap GradedLinearMap::compose(const GradedLinearMap& other) const {
    if (other.cod_ != dom_) throw ShapeError("compose: domain mismatch");
    GradedLinearMap out(other.dom_, cod_, (parity_ + other.parity_) % 2);
    for (const auto& src : basis_of(other.dom_)) {
        GradedVector img = apply(other.apply_basis(src));
        for (const auto& [dst, c] : img.terms()) out.add_entry(dst, src, c);
    }
    return out;
}

bool GradedLinearMap::invertible() const {
    if (parity_ != 0 || dom_ != cod_) return false;
    return !b0_.det().is_zero() && !b1_.det().is_zero();
}

GradedLinearMap GradedLinearMap::inverse() const {
    if (parity_ != 0 || dom_ != cod_) throw ShapeError("inverse: map must be even endo");
    auto i0 = b0_.inverse();
    auto i1 = b1_.inverse();
    if (!i0 || !i1) throw Error("inverse: singular block");
    return GradedLinearMap(cod_, dom_, *i0, *i1, 0);
}

TensorVector apply_tensor_maps(const GradedLinearMap& f, const GradedLinearMap& g,
                               const TensorVector& t) {
    if (t.arity() != 2) throw ShapeError("apply_tensor_maps: need a two-factor tensor");
    if (t.factors()[0] != f.domain() || t.factors()[1] != g.domain())
        throw ShapeError("apply_tensor_maps: domain mismatch");
    TensorVector out({f.codomain(), g.codomain()});
    for (const auto& [k, c] : t.terms()) {
        GaussScalar v = c;
        if (g.parity() == 1 && k.idx[0].parity == 1) v = -v;
        out += v * tensor_of(f.apply_basis(k.idx[0]), g.apply_basis(k.idx[1]));
    }
    return out;
}

TensorVector apply_tensor_maps(const GradedLinearMap& f, const GradedLinearMap& g,
                               const GradedLinearMap& h, const TensorVector& t) {
    if (t.arity() != 3) throw ShapeError("apply_tensor_maps: need a three-factor tensor");
    if (t.factors()[0] != f.domain() || t.factors()[1] != g.domain() ||
        t.factors()[2] != h.domain())
        throw ShapeError("apply_tensor_maps: domain mismatch");
    TensorVector out({f.codomain(), g.codomain(), h.codomain()});
    for (const auto& [k, c] : t.terms()) {
        GaussScalar v = c;
        int pa = k.idx[0].parity, pb = k.idx[1].parity;
        int sign = g.parity() * pa + h.parity() * ((pa + pb) % 2);
        if (sign % 2 == 1) v = -v;
        out += v * tensor_of(f.apply_basis(k.idx[0]), g.apply_basis(k.idx[1]),
                             h.apply_basis(k.idx[2]));
    }
    return out;
}

GradedVector strip_scalar_factor(const TensorVector& t, size_t which_factor) {
    if (t.arity() != 2) throw ShapeError("strip_scalar_factor: need two factors");
    if (which_factor > 1) throw ShapeError("strip_scalar_factor: factor index");
    if (t.factors()[which_factor] != scalar_space())
        throw ShapeError("strip_scalar_factor: factor is not the scalar line");
    GradedVector out(t.factors()[1 - which_factor]);
    for (const auto& [k, c] : t.terms()) out.add_term(k.idx[1 - which_factor], c);
    return out;
}

}  // namespace sba
