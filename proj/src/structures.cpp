#include "sba/structures.hpp"

#include <sstream>

namespace sba {

void MultTable::set(BasisIndex i, BasisIndex j, GradedVector out) {
    if (!i.valid_in(space_) || !j.valid_in(space_))
        throw ShapeError("mult table: index out of range");
    if (out.space() != space_) throw ShapeError("mult table: value space mismatch");
    if (out.is_zero())
        entries_.erase({i, j});
    else
        entries_[{i, j}] = std::move(out);
}

const GradedVector& MultTable::entry(BasisIndex i, BasisIndex j) const {
    auto it = entries_.find({i, j});
    if (it != entries_.end()) return it->second;
    if (zero_.space() != space_) zero_ = GradedVector(space_);
    return zero_;
}

void MultTable::fill_unit_rows() {
    for (const auto& b : basis_of(space_)) {
        set(unit_index(), b, GradedVector::basis_vector(space_, b));
        if (!(b == unit_index())) set(b, unit_index(), GradedVector::basis_vector(space_, b));
    }
}

std::vector<std::string> MultTable::validate() const {
    std::vector<std::string> problems;
    for (const auto& [key, out] : entries_) {
        int want = (key.first.parity + key.second.parity) % 2;
        for (const auto& [b, c] : out.terms()) {
            (void)c;
            if (b.parity != want)
                problems.push_back("mult " + key.first.str() + "*" + key.second.str() +
                                   " violates parity additivity at " + b.str());
        }
    }
    for (const auto& b : basis_of(space_)) {
        GradedVector eb = GradedVector::basis_vector(space_, b);
        if (!(entry(unit_index(), b) == eb))
            problems.push_back("unit law fails on the left at " + b.str());
        if (!(entry(b, unit_index()) == eb))
            problems.push_back("unit law fails on the right at " + b.str());
    }
    return problems;
}

void ComultTable::set(BasisIndex i, TensorVector out) {
    if (!i.valid_in(space_)) throw ShapeError("comult table: index out of range");
    if (out.arity() != 2 || out.factors()[0] != space_ || out.factors()[1] != space_)
        throw ShapeError("comult table: value must live in A(x)A");
    entries_[i] = std::move(out);
}

const TensorVector& ComultTable::entry(BasisIndex i) const {
    auto it = entries_.find(i);
    if (it != entries_.end()) return it->second;
    if (zero_.arity() != 2 || zero_.factors()[0] != space_)
        zero_ = TensorVector({space_, space_});
    return zero_;
}

std::vector<std::string> ComultTable::validate() const {
    std::vector<std::string> problems;
    for (const auto& [i, out] : entries_) {
        for (const auto& [k, c] : out.terms()) {
            (void)c;
            if ((k.idx[0].parity + k.idx[1].parity) % 2 != i.parity)
                problems.push_back("comult of " + i.str() + " violates the grading at " +
                                   k.idx[0].str() + "(x)" + k.idx[1].str());
        }
    }
    TensorVector unit_expected({space_, space_});
    unit_expected.add_term(TensorVector::key2(unit_index(), unit_index()), GaussScalar(1));
    if (!(entry(unit_index()) == unit_expected))
        problems.push_back("comult of the unit is not e1^0 (x) e1^0");
    return problems;
}

void CounitVector::set(BasisIndex i, const GaussScalar& v) {
    if (!i.valid_in(space_)) throw ShapeError("counit: index out of range");
    if (i.parity != 0) throw ValidationError("counit: nonzero value on an odd basis vector");
    if (v.is_zero())
        values_.erase(i);
    else
        values_[i] = v;
}

GaussScalar CounitVector::value(BasisIndex i) const {
    if (i.parity != 0) return GaussScalar(0);
    auto it = values_.find(i);
    return it == values_.end() ? GaussScalar(0) : it->second;
}

GaussScalar CounitVector::value(const GradedVector& v) const {
    GaussScalar out(0);
    for (const auto& [b, c] : v.terms()) out += c * value(b);
    return out;
}

std::vector<std::string> CounitVector::validate() const {
    std::vector<std::string> problems;
    if (!value(unit_index()).is_one()) problems.push_back("counit of the unit is not 1");
    return problems;
}

GradedLinearMap CounitVector::as_map() const {
    GradedLinearMap m(space_, scalar_space(), 0);
    for (size_t i = 1; i <= space_.n0; ++i)
        m.add_entry(unit_index(), BasisIndex{0, i}, value(BasisIndex{0, i}));
    return m;
}

GradedVector multiply(const SuperBialgebraData& data, const GradedVector& v,
                      const GradedVector& w) {
    if (v.space() != data.space || w.space() != data.space)
        throw ShapeError("multiply: space mismatch");
    GradedVector out(data.space);
    for (const auto& [a, ca] : v.terms())
        for (const auto& [b, cb] : w.terms()) out += (ca * cb) * data.mult.entry(a, b);
    return out;
}

TensorVector comultiply(const SuperBialgebraData& data, const GradedVector& v) {
    if (!data.comult) throw MissingStructureError("record '" + data.id + "' has no comultiplication");
    if (v.space() != data.space) throw ShapeError("comultiply: space mismatch");
    TensorVector out({data.space, data.space});
    for (const auto& [b, c] : v.terms()) out += c * data.comult->entry(b);
    return out;
}

GaussScalar counit_of(const SuperBialgebraData& data, const GradedVector& v) {
    if (!data.counit) throw MissingStructureError("record '" + data.id + "' has no counit");
    return data.counit->value(v);
}

TensorVector koszul_product(const SuperBialgebraData& data, const TensorVector& s,
                            const TensorVector& t) {
    if (s.arity() != 2 || t.arity() != 2) throw ShapeError("koszul_product: two factors required");
    TensorVector out({data.space, data.space});
    for (const auto& [ks, cs] : s.terms())
        for (const auto& [kt, ct] : t.terms()) {
            GaussScalar c = cs * ct;
            if (ks.idx[1].parity == 1 && kt.idx[0].parity == 1) c = -c;
            const GradedVector& left = data.mult.entry(ks.idx[0], kt.idx[0]);
            const GradedVector& right = data.mult.entry(ks.idx[1], kt.idx[1]);
            for (const auto& [bl, cl] : left.terms())
                for (const auto& [br, cr] : right.terms())
                    out.add_term(TensorVector::key2(bl, br), c * cl * cr);
        }
    return out;
}

SuperBialgebraData change_basis(const SuperBialgebraData& data, const GradedLinearMap& t) {
    if (!(t.domain() == data.space) || !(t.codomain() == data.space))
        throw ShapeError("change_basis: T must be an endomorphism of the record's space");
    if (!t.invertible()) throw Error("change_basis: T is singular");
    GradedLinearMap tinv = t.inverse();

    SuperBialgebraData out;
    out.id = data.id;
    out.space = data.space;
    out.provenance = data.provenance;
    out.mult = MultTable(data.space);
    for (const auto& a : basis_of(data.space))
        for (const auto& b : basis_of(data.space)) {
            GradedVector prod = multiply(data, t.apply_basis(a), t.apply_basis(b));
            out.mult.set(a, b, tinv.apply(prod));
        }
    if (data.comult) {
        ComultTable ct(data.space);
        for (const auto& a : basis_of(data.space))
            ct.set(a, apply_tensor_maps(tinv, tinv, comultiply(data, t.apply_basis(a))));
        out.comult = std::move(ct);
    }
    if (data.counit) {
        CounitVector cv(data.space);
        for (size_t i = 1; i <= data.space.n0; ++i) {
            BasisIndex b{0, i};
            cv.set(b, data.counit->value(t.apply_basis(b)));
        }
        out.counit = std::move(cv);
    }
    if (data.antipode) out.antipode = tinv.compose(data.antipode->compose(t));
    return out;
}

namespace {

nlohmann::ordered_json index_json(const BasisIndex& b) {
    return nlohmann::ordered_json::array({b.parity, b.pos});
}

BasisIndex index_from_json(const nlohmann::json& j, std::vector<std::string>& problems,
                           const std::string& where) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() ||
        !j[1].is_number_unsigned()) {
        problems.push_back(where + ": malformed basis index");
        return unit_index();
    }
    return BasisIndex{j[0].get<int>(), j[1].get<size_t>()};
}

nlohmann::ordered_json mat_json(const Mat& m) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (size_t i = 0; i < m.rows(); ++i) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
        rows.push_back(row);
    }
    return rows;
}

}  // namespace

nlohmann::ordered_json serialize(const SuperBialgebraData& data) {
    if (data.comult.has_value() != data.counit.has_value())
        throw ValidationError("serialize: comult and counit must be jointly present or absent");
    nlohmann::ordered_json doc;
    doc["id"] = data.id;
    doc["n0"] = data.space.n0;
    doc["n1"] = data.space.n1;
    if (!data.labels.empty()) doc["labels"] = data.labels;
    if (!data.provenance.empty()) doc["provenance"] = data.provenance;

    nlohmann::ordered_json mult = nlohmann::ordered_json::array();
    for (const auto& a : basis_of(data.space))
        for (const auto& b : basis_of(data.space)) {
            const GradedVector& out = data.mult.entry(a, b);
            if (out.is_zero()) continue;
            nlohmann::ordered_json row;
            row["i"] = index_json(a);
            row["j"] = index_json(b);
            nlohmann::ordered_json outs = nlohmann::ordered_json::array();
            for (const auto& [k, c] : out.terms())
                outs.push_back({{"k", index_json(k)}, {"coeff", c.str()}});
            row["out"] = outs;
            mult.push_back(row);
        }
    doc["mult"] = mult;

    if (data.comult) {
        nlohmann::ordered_json comult = nlohmann::ordered_json::array();
        for (const auto& a : basis_of(data.space)) {
            const TensorVector& out = data.comult->entry(a);
            if (out.is_zero()) continue;
            nlohmann::ordered_json row;
            row["i"] = index_json(a);
            nlohmann::ordered_json outs = nlohmann::ordered_json::array();
            for (const auto& [k, c] : out.terms())
                outs.push_back({{"j", index_json(k.idx[0])},
                                {"k", index_json(k.idx[1])},
                                {"coeff", c.str()}});
            row["out"] = outs;
            comult.push_back(row);
        }
        doc["comult"] = comult;
    }
    if (data.counit) {
        nlohmann::ordered_json counit = nlohmann::ordered_json::array();
        for (size_t i = 1; i <= data.space.n0; ++i) {
            BasisIndex b{0, i};
            counit.push_back({{"i", index_json(b)}, {"value", data.counit->value(b).str()}});
        }
        doc["counit"] = counit;
    }
    if (data.antipode) {
        doc["antipode"] = {{"even", mat_json(data.antipode->block(0))},
                           {"odd", mat_json(data.antipode->block(1))}};
    }
    return doc;
}

SuperBialgebraData deserialize(const nlohmann::json& doc) {
    std::vector<std::string> problems;
    SuperBialgebraData data;

    if (!doc.contains("id") || !doc["id"].is_string())
        problems.push_back("missing or malformed 'id'");
    else
        data.id = doc["id"].get<std::string>();

    size_t n0 = doc.value("n0", size_t{0});
    size_t n1 = doc.value("n1", size_t{0});
    if (n0 < 1) problems.push_back("missing unit: n0 must be at least 1");
    data.space = Superspace{std::max<size_t>(n0, 1), n1};
    data.mult = MultTable(data.space);

    if (doc.contains("labels")) data.labels = doc["labels"].get<std::vector<std::string>>();
    if (!data.labels.empty() && data.labels.size() != data.space.dim())
        problems.push_back("labels list does not match the dimension");
    if (doc.contains("provenance")) data.provenance = doc["provenance"].get<std::string>();

    auto parse_scalar = [&problems](const nlohmann::json& j,
                                    const std::string& where) -> GaussScalar {
        if (!j.is_string()) {
            problems.push_back(where + ": scalar must be a string");
            return GaussScalar(0);
        }
        try {
            return GaussScalar::parse(j.get<std::string>());
        } catch (const ValidationError& e) {
            problems.push_back(where + ": " + e.what());
            return GaussScalar(0);
        }
    };

    if (doc.contains("mult")) {
        for (const auto& row : doc["mult"]) {
            BasisIndex i = index_from_json(row.value("i", nlohmann::json()), problems, "mult");
            BasisIndex j = index_from_json(row.value("j", nlohmann::json()), problems, "mult");
            if (!i.valid_in(data.space) || !j.valid_in(data.space)) {
                problems.push_back("mult: index out of range");
                continue;
            }
            GradedVector out(data.space);
            for (const auto& term : row.value("out", nlohmann::json::array())) {
                BasisIndex k = index_from_json(term.value("k", nlohmann::json()), problems, "mult");
                if (!k.valid_in(data.space)) {
                    problems.push_back("mult out: index out of range");
                    continue;
                }
                out.add_term(k, parse_scalar(term.value("coeff", nlohmann::json()), "mult coeff"));
            }
            data.mult.set(i, j, std::move(out));
        }
    } else {
        problems.push_back("missing 'mult'");
    }

    if (doc.contains("comult") != doc.contains("counit"))
        problems.push_back("comult and counit must be jointly present or jointly absent");

    if (doc.contains("comult")) {
        ComultTable ct(data.space);
        for (const auto& row : doc["comult"]) {
            BasisIndex i = index_from_json(row.value("i", nlohmann::json()), problems, "comult");
            if (!i.valid_in(data.space)) {
                problems.push_back("comult: index out of range");
                continue;
            }
            TensorVector out({data.space, data.space});
            for (const auto& term : row.value("out", nlohmann::json::array())) {
                BasisIndex j = index_from_json(term.value("j", nlohmann::json()), problems, "comult");
                BasisIndex k = index_from_json(term.value("k", nlohmann::json()), problems, "comult");
                if (!j.valid_in(data.space) || !k.valid_in(data.space)) {
                    problems.push_back("comult out: index out of range");
                    continue;
                }
                out.add_term(TensorVector::key2(j, k),
                             parse_scalar(term.value("coeff", nlohmann::json()), "comult coeff"));
            }
            ct.set(i, std::move(out));
        }
        data.comult = std::move(ct);
    }

    if (doc.contains("counit")) {
        CounitVector cv(data.space);
        for (const auto& row : doc["counit"]) {
            BasisIndex i = index_from_json(row.value("i", nlohmann::json()), problems, "counit");
            GaussScalar v = parse_scalar(row.value("value", nlohmann::json()), "counit value");
            if (!i.valid_in(data.space)) {
                problems.push_back("counit: index out of range");
                continue;
            }
            if (i.parity != 0) {
                if (!v.is_zero()) problems.push_back("counit: nonzero value on odd basis " + i.str());
                continue;
            }
            cv.set(i, v);
        }
        data.counit = std::move(cv);
    }

    if (doc.contains("antipode")) {
        const auto& ap = doc["antipode"];
        auto read_block = [&](const char* name, size_t n) {
            Mat m(n, n);
            if (!ap.contains(name)) {
                problems.push_back(std::string("antipode: missing block ") + name);
                return m;
            }
            const auto& rows = ap[name];
            if (rows.size() != n) {
                problems.push_back(std::string("antipode: block shape mismatch in ") + name);
                return m;
            }
            for (size_t i = 0; i < n; ++i) {
                if (rows[i].size() != n) {
                    problems.push_back(std::string("antipode: block shape mismatch in ") + name);
                    return m;
                }
                for (size_t j = 0; j < n; ++j)
                    m.at(i, j) = parse_scalar(rows[i][j], "antipode entry");
            }
            return m;
        };
        Mat even = read_block("even", data.space.n0);
        Mat odd = read_block("odd", data.space.n1);
        data.antipode = GradedLinearMap(data.space, data.space, even, odd, 0);
    }

    for (const auto& p : data.mult.validate()) problems.push_back(p);
    if (data.comult)
        for (const auto& p : data.comult->validate()) problems.push_back(p);
    if (data.counit)
        for (const auto& p : data.counit->validate()) problems.push_back(p);

    if (!problems.empty()) {
        std::ostringstream os;
        os << "invalid document";
        if (!data.id.empty()) os << " '" << data.id << "'";
        os << ":";
        for (const auto& p : problems) os << "\n  - " << p;
        throw ValidationError(os.str());
    }
    return data;
}

}  // namespace sba
