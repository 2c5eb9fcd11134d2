#include "sba/axioms.hpp"

#include <array>

namespace sba {

std::string axiom_name(AxiomId a) {
    switch (a) {
        case AxiomId::Associativity: return "Associativity";
        case AxiomId::Unit: return "Unit";
        case AxiomId::Coassociativity: return "Coassociativity";
        case AxiomId::Counit: return "Counit";
        case AxiomId::CompatDeltaMu: return "CompatDeltaMu";
        case AxiomId::CompatDeltaEta: return "CompatDeltaEta";
        case AxiomId::CompatEpsMu: return "CompatEpsMu";
        case AxiomId::CompatEpsEta: return "CompatEpsEta";
        case AxiomId::GrouplikeUnit: return "GrouplikeUnit";
        case AxiomId::Commutative: return "Commutative";
        case AxiomId::Cocommutative: return "Cocommutative";
    }
    throw Error("unknown axiom id");
}

AxiomId axiom_from_name(const std::string& name) {
    static const std::array<AxiomId, 11> all = {
        AxiomId::Associativity, AxiomId::Unit,          AxiomId::Coassociativity,
        AxiomId::Counit,        AxiomId::CompatDeltaMu, AxiomId::CompatDeltaEta,
        AxiomId::CompatEpsMu,   AxiomId::CompatEpsEta,  AxiomId::GrouplikeUnit,
        AxiomId::Commutative,   AxiomId::Cocommutative};
    for (AxiomId a : all)
        if (axiom_name(a) == name) return a;
    throw UnknownIdError("unknown axiom '" + name + "'");
}

std::string AxiomViolation::residual_str(const std::vector<std::string>* labels) const {
    if (std::holds_alternative<GradedVector>(residual))
        return std::get<GradedVector>(residual).str(labels);
    return std::get<TensorVector>(residual).str(labels);
}

namespace {

void need_comult(const SuperBialgebraData& d, AxiomId a) {
    if (!d.comult)
        throw MissingStructureError("axiom " + axiom_name(a) + ": record '" + d.id +
                                    "' has no comultiplication");
}

void need_counit(const SuperBialgebraData& d, AxiomId a) {
    if (!d.counit)
        throw MissingStructureError("axiom " + axiom_name(a) + ": record '" + d.id +
                                    "' has no counit");
}

GradedVector scalar_vec(const GaussScalar& c) {
    GradedVector v(scalar_space());
    v.add_term(unit_index(), c);
    return v;
}

void push_if_nonzero(AxiomReport& rep, std::vector<BasisIndex> where, std::string tag,
                     GradedVector residual) {
    if (residual.is_zero()) return;
    rep.holds = false;
    rep.violations.push_back({std::move(where), std::move(tag), std::move(residual)});
}

void push_if_nonzero(AxiomReport& rep, std::vector<BasisIndex> where, std::string tag,
                     TensorVector residual) {
    if (residual.is_zero()) return;
    rep.holds = false;
    rep.violations.push_back({std::move(where), std::move(tag), std::move(residual)});
}

// (Delta (x) id) Delta(a)  resp.  (id (x) Delta) Delta(a); Delta is even, so
// no Koszul signs appear.
TensorVector coassoc_side(const SuperBialgebraData& d, const BasisIndex& a, bool delta_first) {
    TensorVector two = comultiply(d, GradedVector::basis_vector(d.space, a));
    TensorVector out({d.space, d.space, d.space});
    for (const auto& [k, c] : two.terms()) {
        const TensorVector& inner = d.comult->entry(delta_first ? k.idx[0] : k.idx[1]);
        for (const auto& [ki, ci] : inner.terms()) {
            if (delta_first)
                out.add_term(TensorVector::key3(ki.idx[0], ki.idx[1], k.idx[1]), c * ci);
            else
                out.add_term(TensorVector::key3(k.idx[0], ki.idx[0], ki.idx[1]), c * ci);
        }
    }
    return out;
}

}  // namespace

AxiomReport check_axiom(const SuperBialgebraData& d, AxiomId a) {
    AxiomReport rep{a, true, {}};
    const auto basis = basis_of(d.space);

    switch (a) {
        case AxiomId::Associativity: {
            for (const auto& x : basis)
                for (const auto& y : basis)
                    for (const auto& z : basis) {
                        GradedVector lhs = multiply(d, d.mult.entry(x, y),
                                                    GradedVector::basis_vector(d.space, z));
                        GradedVector rhs = multiply(d, GradedVector::basis_vector(d.space, x),
                                                    d.mult.entry(y, z));
                        push_if_nonzero(rep, {x, y, z}, "", lhs - rhs);
                    }
            break;
        }
        case AxiomId::Unit: {
            for (const auto& b : basis) {
                GradedVector eb = GradedVector::basis_vector(d.space, b);
                push_if_nonzero(rep, {b}, "left", d.mult.entry(unit_index(), b) - eb);
                push_if_nonzero(rep, {b}, "right", d.mult.entry(b, unit_index()) - eb);
            }
            break;
        }
        case AxiomId::Coassociativity: {
            need_comult(d, a);
            for (const auto& b : basis)
                push_if_nonzero(rep, {b}, "",
                                coassoc_side(d, b, true) - coassoc_side(d, b, false));
            break;
        }
        case AxiomId::Counit: {
            need_comult(d, a);
            need_counit(d, a);
            for (const auto& b : basis) {
                GradedVector eb = GradedVector::basis_vector(d.space, b);
                const TensorVector& delta = d.comult->entry(b);
                GradedVector left(d.space), right(d.space);
                for (const auto& [k, c] : delta.terms()) {
                    left.add_term(k.idx[1], c * d.counit->value(k.idx[0]));
                    right.add_term(k.idx[0], c * d.counit->value(k.idx[1]));
                }
                push_if_nonzero(rep, {b}, "eps(x)id", left - eb);
                push_if_nonzero(rep, {b}, "id(x)eps", right - eb);
            }
            break;
        }
        case AxiomId::CompatDeltaMu: {
            need_comult(d, a);
            for (const auto& x : basis)
                for (const auto& y : basis) {
                    TensorVector lhs = comultiply(d, d.mult.entry(x, y));
                    TensorVector rhs =
                        koszul_product(d, d.comult->entry(x), d.comult->entry(y));
                    push_if_nonzero(rep, {x, y}, "", lhs - rhs);
                }
            break;
        }
        case AxiomId::CompatDeltaEta: {
            need_comult(d, a);
            TensorVector expected({d.space, d.space});
            expected.add_term(TensorVector::key2(unit_index(), unit_index()), GaussScalar(1));
            push_if_nonzero(rep, {unit_index()}, "", d.comult->entry(unit_index()) - expected);
            break;
        }
        case AxiomId::CompatEpsMu: {
            need_counit(d, a);
            for (const auto& x : basis)
                for (const auto& y : basis) {
                    GaussScalar lhs = d.counit->value(d.mult.entry(x, y));
                    GaussScalar rhs = d.counit->value(x) * d.counit->value(y);
                    push_if_nonzero(rep, {x, y}, "", scalar_vec(lhs - rhs));
                }
            break;
        }
        case AxiomId::CompatEpsEta: {
            need_counit(d, a);
            push_if_nonzero(rep, {unit_index()}, "",
                            scalar_vec(d.counit->value(unit_index()) - GaussScalar(1)));
            break;
        }
        case AxiomId::GrouplikeUnit: {
            need_comult(d, a);
            need_counit(d, a);
            TensorVector expected({d.space, d.space});
            expected.add_term(TensorVector::key2(unit_index(), unit_index()), GaussScalar(1));
            push_if_nonzero(rep, {unit_index()}, "Delta(1)",
                            d.comult->entry(unit_index()) - expected);
            push_if_nonzero(rep, {unit_index()}, "eps(1)",
                            scalar_vec(d.counit->value(unit_index()) - GaussScalar(1)));
            break;
        }
        case AxiomId::Commutative: {
            for (const auto& x : basis)
                for (const auto& y : basis) {
                    GradedVector rhs = d.mult.entry(y, x);
                    if (x.parity == 1 && y.parity == 1) rhs *= GaussScalar(-1);
                    push_if_nonzero(rep, {x, y}, "", d.mult.entry(x, y) - rhs);
                }
            break;
        }
        case AxiomId::Cocommutative: {
            need_comult(d, a);
            for (const auto& b : basis) {
                const TensorVector& delta = d.comult->entry(b);
                push_if_nonzero(rep, {b}, "", delta - superflip(delta));
            }
            break;
        }
    }
    return rep;
}

std::vector<AxiomReport> check_all(const SuperBialgebraData& d) {
    if (!d.is_bialgebra())
        throw MissingStructureError("check_all: record '" + d.id +
                                    "' is not a full bialgebra record");
    std::vector<AxiomReport> reports;
    reports.reserve(kStructuralAxioms.size());
    for (AxiomId a : kStructuralAxioms) reports.push_back(check_axiom(d, a));
    return reports;
}

bool all_hold(const std::vector<AxiomReport>& reports) {
    for (const auto& r : reports)
        if (!r.holds) return false;
    return true;
}

bool is_commutative(const SuperBialgebraData& d) {
    return check_axiom(d, AxiomId::Commutative).holds;
}

bool is_cocommutative(const SuperBialgebraData& d) {
    return check_axiom(d, AxiomId::Cocommutative).holds;
}

}  // namespace sba
