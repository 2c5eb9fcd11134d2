#include "sba/antipode.hpp"

#include <sstream>

namespace sba {

namespace {

// Variable layout: even block first, lambda^0_{k,i} at (k-1)*n0 + (i-1),
// then the odd block shifted by n0^2.
size_t var_index(const Superspace& s, int parity, size_t k, size_t i) {
    size_t n = s.dim_of_parity(parity);
    size_t base = parity == 0 ? 0 : s.n0 * s.n0;
    return base + (k - 1) * n + (i - 1);
}

}  // namespace

AntipodeResult solve_antipode(const SuperBialgebraData& d) {
    if (!d.is_bialgebra())
        throw MissingStructureError("solve_antipode: record '" + d.id +
                                    "' is not a full bialgebra record");
    AntipodeResult result{AntipodeResult::Status::NotFound, std::nullopt, std::nullopt, 0, true};
    result.precondition_ok = all_hold(check_all(d));

    const size_t nvars = d.space.n0 * d.space.n0 + d.space.n1 * d.space.n1;
    std::vector<std::vector<GaussScalar>> rows;
    std::vector<GaussScalar> rhs;
    std::vector<std::string> origin;

    auto emit = [&](const BasisIndex& a, bool s_on_left) {
        const TensorVector& delta = d.comult->entry(a);
        // Accumulate, per output basis vector b, the linear form in lambda.
        std::map<BasisIndex, std::vector<GaussScalar>> forms;
        for (const auto& [key, dcoeff] : delta.terms()) {
            const BasisIndex j = key.idx[0], k = key.idx[1];
            const BasisIndex acted = s_on_left ? j : k;
            size_t n = d.space.dim_of_parity(acted.parity);
            for (size_t m = 1; m <= n; ++m) {
                BasisIndex img{acted.parity, m};
                const GradedVector& prod =
                    s_on_left ? d.mult.entry(img, k) : d.mult.entry(j, img);
                for (const auto& [b, c] : prod.terms()) {
                    auto& form = forms[b];
                    if (form.empty()) form.assign(nvars, GaussScalar(0));
                    form[var_index(d.space, acted.parity, m, acted.pos)] += dcoeff * c;
                }
            }
        }
        GaussScalar eps_a = d.counit->value(a);
        // Make sure the unit component row exists even if no lambda occurs in it.
        if (!eps_a.is_zero() && forms.find(unit_index()) == forms.end())
            forms[unit_index()].assign(nvars, GaussScalar(0));
        for (auto& [b, form] : forms) {
            rows.push_back(std::move(form));
            rhs.push_back(b == unit_index() ? eps_a : GaussScalar(0));
            std::ostringstream os;
            os << "identity " << (s_on_left ? "mu(S(x)id)Delta" : "mu(id(x)S)Delta") << " on "
               << a.str() << ", component " << b.str();
            origin.push_back(os.str());
        }
    };

    for (const auto& a : basis_of(d.space)) {
        emit(a, true);
        emit(a, false);
    }

    Mat m(rows.size(), nvars);
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < nvars; ++j) m.at(i, j) = rows[i][j];
    LinearSolveResult lin = solve_linear(std::move(m), rhs);

    switch (lin.status) {
        case SolveStatus::Inconsistent:
            result.status = AntipodeResult::Status::NotFound;
            result.certificate =
                InconsistencyCertificate{origin[lin.inconsistent_row], lin.inconsistent_residual};
            return result;
        case SolveStatus::Underdetermined:
            result.status = AntipodeResult::Status::NonUnique;
            result.solution_space_dim = lin.nullity;
            return result;
        case SolveStatus::Unique: {
            GradedLinearMap s(d.space, d.space, 0);
            for (int p : {0, 1}) {
                size_t n = d.space.dim_of_parity(p);
                for (size_t k = 1; k <= n; ++k)
                    for (size_t i = 1; i <= n; ++i)
                        s.add_entry(BasisIndex{p, k}, BasisIndex{p, i},
                                    lin.solution[var_index(d.space, p, k, i)]);
            }
            if (!satisfies_antipode_identity(d, s))
                throw Error("solve_antipode: internal check failed on '" + d.id + "'");
            result.status = AntipodeResult::Status::Found;
            result.antipode = std::move(s);
            return result;
        }
    }
    throw Error("unreachable");
}

bool satisfies_antipode_identity(const SuperBialgebraData& d, const GradedLinearMap& s) {
    if (!d.is_bialgebra()) return false;
    for (const auto& a : basis_of(d.space)) {
        const TensorVector& delta = d.comult->entry(a);
        GradedVector left(d.space), right(d.space);
        for (const auto& [key, c] : delta.terms()) {
            left += c * multiply(d, s.apply_basis(key.idx[0]),
                                 GradedVector::basis_vector(d.space, key.idx[1]));
            right += c * multiply(d, GradedVector::basis_vector(d.space, key.idx[0]),
                                  s.apply_basis(key.idx[1]));
        }
        GradedVector expected = d.counit->value(a) * d.unit_vector();
        if (!(left == expected) || !(right == expected)) return false;
    }
    return true;
}

bool AntipodePropertiesReport::all_applicable_hold() const {
    if (!valid) return false;
    for (const auto& p : properties)
        if (p.applicable && !p.holds) return false;
    return true;
}

AntipodePropertiesReport verify_properties(const SuperBialgebraData& d,
                                           const GradedLinearMap& s) {
    AntipodePropertiesReport rep;
    rep.valid = satisfies_antipode_identity(d, s);
    if (!rep.valid) return rep;

    const auto basis = basis_of(d.space);

    // 1) S mu = mu tau (S (x) S): S(ab) = (-1)^{|a||b|} S(b) S(a)
    {
        bool ok = true;
        for (const auto& a : basis)
            for (const auto& b : basis) {
                GradedVector lhs = s.apply(d.mult.entry(a, b));
                GradedVector rhs = multiply(d, s.apply_basis(b), s.apply_basis(a));
                if (a.parity == 1 && b.parity == 1) rhs *= GaussScalar(-1);
                if (!(lhs == rhs)) ok = false;
            }
        rep.properties.push_back({1, "anti-homomorphism with superflip", true, ok, ""});
    }
    // 2) S eta = eta
    rep.properties.push_back(
        {2, "S(1) = 1", true, s.apply(d.unit_vector()) == d.unit_vector(), ""});
    // 3) eps S = eps
    {
        bool ok = true;
        for (const auto& a : basis)
            if (!(d.counit->value(s.apply_basis(a)) ==
                  d.counit->value(GradedVector::basis_vector(d.space, a))))
                ok = false;
        rep.properties.push_back({3, "eps after S is eps", true, ok, ""});
    }
    // 4) tau (S (x) S) Delta = Delta S
    {
        bool ok = true;
        for (const auto& a : basis) {
            TensorVector lhs = superflip(apply_tensor_maps(s, s, d.comult->entry(a)));
            TensorVector rhs = comultiply(d, s.apply_basis(a));
            if (!(lhs == rhs)) ok = false;
        }
        rep.properties.push_back({4, "tau(S(x)S)Delta = Delta S", true, ok, ""});
    }
    // 5) S^2 = id on (co)commutative records
    {
        bool applicable = is_commutative(d) || is_cocommutative(d);
        bool ok = true;
        if (applicable) {
            GradedLinearMap s2 = s.compose(s);
            ok = s2 == GradedLinearMap::identity(d.space);
        }
        rep.properties.push_back({5, "S squared is the identity", applicable, ok, ""});
    }
    // 6) bijective S: the coopposite with S^-1 is again a Hopf record
    {
        bool applicable = s.invertible();
        bool ok = true;
        std::string detail;
        if (applicable) {
            SuperBialgebraData cop = d;
            ComultTable flipped(d.space);
            for (const auto& a : basis) flipped.set(a, superflip(d.comult->entry(a)));
            cop.comult = std::move(flipped);
            GradedLinearMap sinv = s.inverse();
            bool axioms_ok = all_hold(check_all(cop));
            bool identity_ok = satisfies_antipode_identity(cop, sinv);
            ok = axioms_ok && identity_ok;
            if (!axioms_ok) detail = "coopposite fails an axiom";
            if (!identity_ok) detail += std::string(detail.empty() ? "" : "; ") +
                                        "S^-1 fails the convolution identity on the coopposite";
        }
        rep.properties.push_back({6, "coopposite carries S^-1", applicable, ok, detail});
    }
    // 7) both blocks invertible
    rep.properties.push_back({7, "S bijective", true, s.invertible(), ""});
    return rep;
}

namespace {

std::string family_of(const SuperBialgebraData& d) {
    const std::string& id = d.id;
    auto open = id.find("_{");
    auto close = id.find('}');
    std::string fam;
    if (open != std::string::npos && close != std::string::npos && close > open + 2)
        fam = id.substr(open + 2, close - open - 2);
    else
        fam = id;
    if (id.size() >= 2 && id.substr(id.size() - 2) == "/3") fam += "/3";
    return fam;
}

}  // namespace

CensusTable hopf_census(const std::vector<SuperBialgebraData>& records) {
    CensusTable table;
    for (const auto& rec : records) {
        AntipodeResult res = solve_antipode(rec);
        if (!res.precondition_ok)
            throw Error("hopf_census: record '" + rec.id + "' fails check_all");
        CensusRow row{rec.id, family_of(rec), rec.space.dim(), res.status};
        auto& agg = table.per_family[row.family];
        agg.first += 1;
        if (res.found()) {
            agg.second += 1;
            table.found_total += 1;
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

}  // namespace sba
