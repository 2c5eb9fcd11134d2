#include "sba/constructions.hpp"

#include "sba/builder.hpp"

#include <numeric>

namespace sba {

std::string variant_name(VariantKind k) {
    switch (k) {
        case VariantKind::Op: return "op";
        case VariantKind::Cop: return "cop";
        case VariantKind::OpCop: return "opcop";
    }
    throw Error("unknown variant kind");
}

SuperBialgebraData variant(const SuperBialgebraData& d, VariantKind k) {
    SuperBialgebraData out = d;
    out.id = variant_name(k) + "(" + d.id + ")";
    out.provenance = "";
    bool flip_mult = k == VariantKind::Op || k == VariantKind::OpCop;
    bool flip_comult = k == VariantKind::Cop || k == VariantKind::OpCop;

    if (flip_mult) {
        MultTable m(d.space);
        for (const auto& a : basis_of(d.space))
            for (const auto& b : basis_of(d.space)) {
                GradedVector v = d.mult.entry(b, a);
                if (a.parity == 1 && b.parity == 1) v *= GaussScalar(-1);
                m.set(a, b, std::move(v));
            }
        out.mult = std::move(m);
    }
    if (flip_comult && d.comult) {
        ComultTable c(d.space);
        for (const auto& a : basis_of(d.space)) c.set(a, superflip(d.comult->entry(a)));
        out.comult = std::move(c);
    }
    if (d.antipode) {
        if (k == VariantKind::OpCop) {
            out.antipode = d.antipode;
        } else if (d.antipode->invertible()) {
            out.antipode = d.antipode->inverse();
        } else {
            out.antipode.reset();
        }
    }
    return out;
}

SuperBialgebraData dual(const SuperBialgebraData& d) {
    if (!d.is_bialgebra())
        throw MissingStructureError("dual: record '" + d.id + "' is not a full bialgebra record");
    const Superspace s = d.space;
    const auto basis = basis_of(s);

    SuperBialgebraData raw;
    raw.id = "dual(" + d.id + ")";
    raw.space = s;
    raw.mult = MultTable(s);

    // mult* from the comultiplication constants, with the pairing sign on
    // odd (x) odd dual pairs.
    for (const auto& i : basis)
        for (const auto& j : basis) {
            GradedVector out(s);
            for (const auto& k : basis) {
                GaussScalar c = d.comult->entry(k).coeff(TensorVector::key2(i, j));
                if (i.parity == 1 && j.parity == 1) c = -c;
                out.add_term(k, c);
            }
            raw.mult.set(i, j, std::move(out));
        }

    // comult* from the multiplication constants.
    ComultTable ct(s);
    for (const auto& k : basis) {
        TensorVector out({s, s});
        for (const auto& a : basis)
            for (const auto& b : basis) {
                GaussScalar c = d.mult.entry(a, b).coeff(k);
                if (a.parity == 1 && b.parity == 1) c = -c;
                out.add_term(TensorVector::key2(a, b), c);
            }
        ct.set(k, std::move(out));
    }
    raw.comult = std::move(ct);

    // counit* is evaluation at the unit of d.
    CounitVector cv(s);
    cv.set(unit_index(), GaussScalar(1));
    raw.counit = std::move(cv);

    if (d.antipode)
        raw.antipode = GradedLinearMap(s, s, d.antipode->block(0).transpose(),
                                       d.antipode->block(1).transpose(), 0);

    // The dual unit is the counit functional sum xi_i f_i; rotate it into
    // the e_1^0 slot (xi_1 = 1 keeps this invertible).
    GradedLinearMap t = GradedLinearMap::identity(s);
    for (size_t i = 1; i <= s.n0; ++i)
        t.block(0).at(i - 1, 0) = d.counit->value(BasisIndex{0, i});
    SuperBialgebraData out = change_basis(raw, t);
    out.id = raw.id;

    TensorVector grouplike({s, s});
    grouplike.add_term(TensorVector::key2(unit_index(), unit_index()), GaussScalar(1));
    if (!(out.comult->entry(unit_index()) == grouplike) || !out.mult.validate().empty())
        throw Error("dual: internal consistency, dual unit is not group-like for '" + d.id + "'");
    return out;
}

namespace {

// Pair basis of a tensor product: parity-0 pairs first, ordered by the flat
// positions of the two factors; the unit pair lands first.
struct PairBasis {
    Superspace space;
    std::vector<std::pair<BasisIndex, BasisIndex>> pairs;  // flat order
    std::map<std::pair<size_t, size_t>, size_t> flat_of;   // (flatA, flatB) -> flat

    PairBasis(const Superspace& a, const Superspace& b) {
        std::vector<std::pair<BasisIndex, BasisIndex>> even, odd;
        for (const auto& x : basis_of(a))
            for (const auto& y : basis_of(b))
                ((x.parity + y.parity) % 2 == 0 ? even : odd).emplace_back(x, y);
        space = Superspace{even.size(), odd.size()};
        pairs = even;
        pairs.insert(pairs.end(), odd.begin(), odd.end());
        for (size_t f = 0; f < pairs.size(); ++f)
            flat_of[{pairs[f].first.flat(a), pairs[f].second.flat(b)}] = f;
    }

    BasisIndex index_of(const BasisIndex& x, const BasisIndex& y, const Superspace& a,
                        const Superspace& b) const {
        size_t f = flat_of.at({x.flat(a), y.flat(b)});
        return f < space.n0 ? BasisIndex{0, f + 1} : BasisIndex{1, f - space.n0 + 1};
    }
};

}  // namespace

SuperBialgebraData tensor_product(const SuperBialgebraData& a, const SuperBialgebraData& b) {
    if (!a.is_bialgebra() || !b.is_bialgebra())
        throw MissingStructureError("tensor_product: both records must be full bialgebras");
    PairBasis pb(a.space, b.space);

    SuperBialgebraData out;
    out.id = "tensor(" + a.id + "," + b.id + ")";
    out.space = pb.space;
    out.mult = MultTable(pb.space);

    auto pair_vector = [&](const GradedVector& va, const GradedVector& vb,
                           const GaussScalar& scale) {
        GradedVector v(pb.space);
        for (const auto& [xa, ca] : va.terms())
            for (const auto& [xb, cb] : vb.terms())
                v.add_term(pb.index_of(xa, xb, a.space, b.space), scale * ca * cb);
        return v;
    };

    for (size_t f = 0; f < pb.pairs.size(); ++f)
        for (size_t g = 0; g < pb.pairs.size(); ++g) {
            const auto& [x1, y1] = pb.pairs[f];
            const auto& [x2, y2] = pb.pairs[g];
            GaussScalar sign(1);
            if (y1.parity == 1 && x2.parity == 1) sign = GaussScalar(-1);
            BasisIndex i = f < pb.space.n0 ? BasisIndex{0, f + 1} : BasisIndex{1, f - pb.space.n0 + 1};
            BasisIndex j = g < pb.space.n0 ? BasisIndex{0, g + 1} : BasisIndex{1, g - pb.space.n0 + 1};
            out.mult.set(i, j, pair_vector(a.mult.entry(x1, x2), b.mult.entry(y1, y2), sign));
        }

    ComultTable ct(pb.space);
    for (size_t f = 0; f < pb.pairs.size(); ++f) {
        const auto& [x, y] = pb.pairs[f];
        BasisIndex i = f < pb.space.n0 ? BasisIndex{0, f + 1} : BasisIndex{1, f - pb.space.n0 + 1};
        TensorVector delta({pb.space, pb.space});
        for (const auto& [ka, ca] : a.comult->entry(x).terms())
            for (const auto& [kb, cb] : b.comult->entry(y).terms()) {
                GaussScalar c = ca * cb;
                if (ka.idx[1].parity == 1 && kb.idx[0].parity == 1) c = -c;
                delta.add_term(
                    TensorVector::key2(pb.index_of(ka.idx[0], kb.idx[0], a.space, b.space),
                                       pb.index_of(ka.idx[1], kb.idx[1], a.space, b.space)),
                    c);
            }
        ct.set(i, std::move(delta));
    }
    out.comult = std::move(ct);

    CounitVector cv(pb.space);
    for (size_t f = 0; f < pb.space.n0; ++f) {
        const auto& [x, y] = pb.pairs[f];
        cv.set(BasisIndex{0, f + 1}, a.counit->value(x) * b.counit->value(y));
    }
    out.counit = std::move(cv);

    if (a.antipode && b.antipode) {
        GradedLinearMap s(pb.space, pb.space, 0);
        for (size_t f = 0; f < pb.pairs.size(); ++f) {
            const auto& [x, y] = pb.pairs[f];
            BasisIndex src = f < pb.space.n0 ? BasisIndex{0, f + 1}
                                             : BasisIndex{1, f - pb.space.n0 + 1};
            GaussScalar sign(1);
            if (x.parity == 1 && y.parity == 1) sign = GaussScalar(-1);
            GradedVector img =
                pair_vector(a.antipode->apply_basis(x), b.antipode->apply_basis(y), sign);
            for (const auto& [dst, c] : img.terms()) s.add_entry(dst, src, c);
        }
        out.antipode = std::move(s);
    }

    if (!a.labels.empty() && !b.labels.empty()) {
        for (const auto& [x, y] : pb.pairs)
            out.labels.push_back(a.labels[x.flat(a.space)] + "@" + b.labels[y.flat(b.space)]);
    }
    return out;
}

SuperBialgebraData group_algebra_z2() {
    return RecordBuilder("GroupAlgebraZ2", 2, 0, {"1", "g"})
        .mult("g", "g", "1")
        .comult("g", "g@g")
        .counit("g", "1")
        .antipode("g", "g")
        .build(true);
}

SuperBialgebraData lambda_k() {
    return RecordBuilder("LambdaK", 1, 1, {"1", "x"})
        .mult("x", "x", "0")
        .comult("x", "1@x + x@1")
        .antipode("x", "-x")
        .build(true);
}

SuperBialgebraData lambda_k2() {
    SuperBialgebraData d = RecordBuilder("LambdaK2", 2, 2, {"1", "z", "x", "y"})
                               .mult("x", "x", "0")
                               .mult("y", "y", "0")
                               .mult("x", "y", "z")
                               .mult("y", "x", "-z")
                               .mult("x", "z", "0")
                               .mult("z", "x", "0")
                               .mult("y", "z", "0")
                               .mult("z", "y", "0")
                               .mult("z", "z", "0")
                               .comult("x", "1@x + x@1")
                               .comult("y", "1@y + y@1")
                               .comult("z", "1@z + z@1 + x@y - y@x")
                               .antipode("x", "-x")
                               .antipode("y", "-y")
                               .antipode("z", "z")
                               .build(true);
    return d;
}

SuperBialgebraData hopf_h1() {
    return RecordBuilder("H1", 2, 2, {"1", "x", "y", "z"})
        .mult("x", "x", "x")
        .mult("x", "y", "z")
        .mult("y", "x", "z")
        .mult("x", "z", "z")
        .mult("z", "x", "z")
        .mult("y", "y", "0")
        .mult("y", "z", "0")
        .mult("z", "y", "0")
        .mult("z", "z", "0")
        .comult("x", "1@x + x@1 - 2*x@x")
        .comult("y", "1@y + y@1")
        .comult("z", "1@z + z@1 + y@x + x@y - 2*x@z - 2*z@x")
        .antipode("x", "x")
        .antipode("y", "-y")
        .antipode("z", "-z")
        .build(true);
}

SuperBialgebraData hopf_h2() {
    return RecordBuilder("H2", 2, 2, {"1", "x", "y", "z"})
        .mult("x", "x", "x")
        .mult("x", "y", "z")
        .mult("y", "x", "y - z")
        .mult("x", "z", "z")
        .mult("z", "x", "0")
        .mult("y", "y", "0")
        .mult("y", "z", "0")
        .mult("z", "y", "0")
        .mult("z", "z", "0")
        .comult("x", "1@x + x@1 - 2*x@x")
        .comult("y", "1@y + y@1 - 2*x@y - 2*y@x")
        .comult("z", "1@z + z@1 - x@y - y@x")
        .antipode("x", "x")
        .antipode("y", "y")
        .antipode("z", "y - z")
        .build(true);
}

SuperBialgebraData hopf_h3() {
    SuperBialgebraData d = lambda_k2();
    d.id = "H3";
    return d;
}

SuperBialgebraData hopf_h4() {
    return RecordBuilder("H4", 2, 2, {"1", "x", "y", "z"})
        .mult("x", "x", "x")
        .mult("x", "y", "z")
        .mult("y", "x", "z")
        .mult("x", "z", "z")
        .mult("z", "x", "z")
        .mult("y", "y", "0")
        .mult("y", "z", "0")
        .mult("z", "y", "0")
        .mult("z", "z", "0")
        .comult("x", "1@x + x@1 - 2*x@x")
        .comult("y", "1@y + y@1 - 2*x@y")
        .comult("z", "1@z + z@1 + y@x - x@y - 2*z@x")
        .antipode("x", "x")
        .antipode("y", "2*z - y")
        .antipode("z", "z")
        .build(true);
}

SuperBialgebraData hopf_h5(const GaussScalar& root) {
    if (!(root == GaussScalar::i()) && !(root == -GaussScalar::i()))
        throw ValidationError("H5 needs a primitive 4th root of unity (i or -i)");
    std::string a = root.str();
    return RecordBuilder(std::string("H5(") + (root == GaussScalar::i() ? "i" : "-i") + ")", 3, 1,
                         {"1", "x", "x^2", "y"})
        .mult("x", "x", "x^2")
        .mult("x", "x^2", "x")
        .mult("x^2", "x", "x")
        .mult("x^2", "x^2", "x^2")
        .mult("x", "y", "0")
        .mult("y", "x", "0")
        .mult("x^2", "y", "0")
        .mult("y", "x^2", "0")
        .mult("y", "y", "1 - x^2")
        .comult("x", "x@x - " + a + "*y@y")
        .comult("x^2", "1@1 - 1@x^2 - x^2@1 + 2*x^2@x^2")
        .comult("y", "x@y + y@x")
        .counit("x", "1")
        .counit("x^2", "1")
        .antipode("x", "x")
        .antipode("x^2", "x^2")
        .antipode("y", a + "*y")
        .build(true);
}

SuperBialgebraData m2_graded() {
    // M_2(K) with even part spanned by 1 and p = E11, odd part by u = E12,
    // v = E21.
    return RecordBuilder("M2Graded", 2, 2, {"1", "p", "u", "v"})
        .mult("p", "p", "p")
        .mult("p", "u", "u")
        .mult("u", "p", "0")
        .mult("p", "v", "0")
        .mult("v", "p", "v")
        .mult("u", "u", "0")
        .mult("v", "v", "0")
        .mult("u", "v", "p")
        .mult("v", "u", "1 - p")
        .build(false);
}

SuperBialgebraData trivial_from(const SuperBialgebraData& bialgebra) {
    if (bialgebra.space.n1 != 0)
        throw ValidationError("trivial_from: payload must be purely even");
    SuperBialgebraData out = bialgebra;
    out.id = "trivial(" + bialgebra.id + ")";
    return out;
}

SuperBialgebraData named_family(const std::string& name) {
    if (name == "GroupAlgebraZ2") return group_algebra_z2();
    if (name == "LambdaK") return lambda_k();
    if (name == "LambdaK2") return lambda_k2();
    if (name == "H1") return hopf_h1();
    if (name == "H2") return hopf_h2();
    if (name == "H3") return hopf_h3();
    if (name == "H4") return hopf_h4();
    if (name == "H5" || name == "H5(i)") return hopf_h5(GaussScalar::i());
    if (name == "H5(-i)") return hopf_h5(-GaussScalar::i());
    if (name == "M2Graded") return m2_graded();
    throw UnknownIdError("unknown named family '" + name + "'");
}

}  // namespace sba
