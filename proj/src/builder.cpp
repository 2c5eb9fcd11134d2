#include "sba/builder.hpp"

#include <algorithm>
#include <cctype>

namespace sba {

namespace {

struct Term {
    GaussScalar coeff;
    std::string atom;  // "label" or "label@label"
};

// Splits "a + b - c" at top level; '@' never collides with the sign scan
// because labels contain no '+'/'-'.
std::vector<Term> parse_terms(const std::string& expr) {
    std::vector<Term> terms;
    std::string s;
    for (char c : expr)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty() || s == "0") return terms;

    size_t pos = 0;
    while (pos < s.size()) {
        int sign = 1;
        while (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
            if (s[pos] == '-') sign = -sign;
            ++pos;
        }
        size_t end = pos;
        while (end < s.size() && s[end] != '+' && s[end] != '-') ++end;
        std::string body = s.substr(pos, end - pos);
        if (body.empty()) throw ValidationError("empty term in expression '" + expr + "'");
        GaussScalar coeff(sign);
        // The last '*' splits coefficient from atom; a trailing "*i" belongs
        // to the scalar and means the term has no atom, which is malformed.
        auto star = body.rfind('*');
        if (star != std::string::npos) {
            std::string tail = body.substr(star + 1);
            if (tail == "i")
                throw ValidationError("term '" + body + "' has no basis atom in '" + expr + "'");
            coeff = coeff * GaussScalar::parse(body.substr(0, star));
            body = std::move(tail);
        }
        terms.push_back({coeff, body});
        pos = end;
    }
    return terms;
}

}  // namespace

RecordBuilder::RecordBuilder(std::string id, size_t n0, size_t n1,
                             std::vector<std::string> labels) {
    data_.id = std::move(id);
    data_.space = Superspace{n0, n1};
    if (labels.size() != data_.space.dim())
        throw ShapeError("builder: label count must match the dimension");
    data_.labels = std::move(labels);
    data_.mult = MultTable(data_.space);
    comult_ = ComultTable(data_.space);
    counit_ = CounitVector(data_.space);
    antipode_ = GradedLinearMap(data_.space, data_.space, 0);
}

BasisIndex RecordBuilder::idx(const std::string& label) const {
    auto it = std::find(data_.labels.begin(), data_.labels.end(), label);
    if (it == data_.labels.end())
        throw UnknownIdError("builder: unknown basis label '" + label + "' in record " + data_.id);
    size_t flat = static_cast<size_t>(it - data_.labels.begin());
    if (flat < data_.space.n0) return BasisIndex{0, flat + 1};
    return BasisIndex{1, flat - data_.space.n0 + 1};
}

GradedVector RecordBuilder::vec(const std::string& expr) const {
    GradedVector v(data_.space);
    for (const auto& t : parse_terms(expr)) {
        if (t.atom.find('@') != std::string::npos)
            throw ValidationError("builder: tensor term in a vector expression: " + expr);
        v.add_term(idx(t.atom), t.coeff);
    }
    return v;
}

TensorVector RecordBuilder::ten(const std::string& expr) const {
    TensorVector t({data_.space, data_.space});
    for (const auto& term : parse_terms(expr)) {
        auto at = term.atom.find('@');
        if (at == std::string::npos)
            throw ValidationError("builder: vector term in a tensor expression: " + expr);
        t.add_term(TensorVector::key2(idx(term.atom.substr(0, at)), idx(term.atom.substr(at + 1))),
                   term.coeff);
    }
    return t;
}

RecordBuilder& RecordBuilder::mult(const std::string& a, const std::string& b,
                                   const std::string& expr) {
    data_.mult.set(idx(a), idx(b), vec(expr));
    return *this;
}

RecordBuilder& RecordBuilder::comult(const std::string& a, const std::string& expr) {
    comult_.set(idx(a), ten(expr));
    saw_comult_ = true;
    return *this;
}

RecordBuilder& RecordBuilder::counit(const std::string& a, const std::string& value) {
    counit_.set(idx(a), GaussScalar::parse(value));
    saw_counit_ = true;
    return *this;
}

RecordBuilder& RecordBuilder::antipode(const std::string& a, const std::string& expr) {
    GradedVector img = vec(expr);
    for (const auto& [dst, c] : img.terms()) antipode_.add_entry(dst, idx(a), c);
    saw_antipode_ = true;
    return *this;
}

RecordBuilder& RecordBuilder::provenance(std::string text) {
    data_.provenance = std::move(text);
    return *this;
}

SuperBialgebraData RecordBuilder::build(bool with_coalgebra) const {
    SuperBialgebraData out = data_;
    out.mult.fill_unit_rows();
    if (with_coalgebra) {
        ComultTable ct = comult_;
        TensorVector unit_delta({out.space, out.space});
        unit_delta.add_term(TensorVector::key2(unit_index(), unit_index()), GaussScalar(1));
        ct.set(unit_index(), std::move(unit_delta));
        CounitVector cv = counit_;
        cv.set(unit_index(), GaussScalar(1));
        out.comult = std::move(ct);
        out.counit = std::move(cv);
    } else if (saw_comult_ || saw_counit_) {
        throw ValidationError("builder: comult/counit given for an algebra-only record");
    }
    if (saw_antipode_) {
        GradedLinearMap s = antipode_;
        s.add_entry(unit_index(), unit_index(), GaussScalar(1));
        out.antipode = std::move(s);
    }
    auto problems = out.mult.validate();
    if (out.comult)
        for (const auto& p : out.comult->validate()) problems.push_back(p);
    if (!problems.empty()) {
        std::string msg = "builder: invalid record '" + out.id + "':";
        for (const auto& p : problems) msg += "\n  - " + p;
        throw ValidationError(msg);
    }
    return out;
}

}  // namespace sba
