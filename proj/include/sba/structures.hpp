#ifndef SBA_STRUCTURES_HPP
#define SBA_STRUCTURES_HPP

#include "sba/graded.hpp"

#include <optional>
#include <string>
#include <vector>

// vendored single-header nlohmann/json
#include "json.hpp"

namespace sba {

/// Multiplication structure constants: entry(i, j) is the product of basis
/// vectors e_i * e_j. The unit is pinned to e_1^0.
class MultTable {
public:
    MultTable() = default;
    explicit MultTable(Superspace space) : space_(space) {}

    const Superspace& space() const { return space_; }

    void set(BasisIndex i, BasisIndex j, GradedVector out);
    const GradedVector& entry(BasisIndex i, BasisIndex j) const;

    /// Fills the unit row/column e_1^0 * b = b = b * e_1^0.
    void fill_unit_rows();

    /// Parity additivity and the unit law; returns human-readable problems.
    std::vector<std::string> validate() const;

    friend bool operator==(const MultTable& a, const MultTable& b) {
        return a.space_ == b.space_ && a.entries_ == b.entries_;
    }

private:
    Superspace space_;
    std::map<std::pair<BasisIndex, BasisIndex>, GradedVector> entries_;
    mutable GradedVector zero_;
};

/// Comultiplication structure constants D: entry(i) is Delta(e_i) in A (x) A.
class ComultTable {
public:
    ComultTable() = default;
    explicit ComultTable(Superspace space) : space_(space) {}

    const Superspace& space() const { return space_; }

    void set(BasisIndex i, TensorVector out);
    const TensorVector& entry(BasisIndex i) const;

    std::vector<std::string> validate() const;

    friend bool operator==(const ComultTable& a, const ComultTable& b) {
        return a.space_ == b.space_ && a.entries_ == b.entries_;
    }

private:
    Superspace space_;
    std::map<BasisIndex, TensorVector> entries_;
    mutable TensorVector zero_;
};

/// Counit values xi on the even basis; odd basis vectors map to 0 and the
/// unit maps to 1.
class CounitVector {
public:
    CounitVector() = default;
    explicit CounitVector(Superspace space) : space_(space) {}

    const Superspace& space() const { return space_; }

    void set(BasisIndex i, const GaussScalar& v);
    GaussScalar value(BasisIndex i) const;
    GaussScalar value(const GradedVector& v) const;

    std::vector<std::string> validate() const;

    /// As an even linear map A -> K.
    GradedLinearMap as_map() const;

    friend bool operator==(const CounitVector& a, const CounitVector& b) {
        return a.space_ == b.space_ && a.values_ == b.values_;
    }

private:
    Superspace space_;
    std::map<BasisIndex, GaussScalar> values_;
};

/// A named bundle: superalgebra with optional supercoalgebra structure and
/// optional antipode. Comult/counit may be attached independently while a
/// record is being assembled; serialized catalog documents require them
/// jointly present or jointly absent.
struct SuperBialgebraData {
    std::string id;
    Superspace space;
    MultTable mult;
    std::optional<ComultTable> comult;
    std::optional<CounitVector> counit;
    std::optional<GradedLinearMap> antipode;
    std::vector<std::string> labels;  // human basis names, flat order; may be empty
    std::string provenance;

    bool is_bialgebra() const { return comult.has_value() && counit.has_value(); }
    GradedVector unit_vector() const {
        return GradedVector::basis_vector(space, unit_index());
    }
    const std::vector<std::string>* label_ptr() const {
        return labels.empty() ? nullptr : &labels;
    }
};

/// Bilinear extension of the multiplication table.
GradedVector multiply(const SuperBialgebraData& data, const GradedVector& v,
                      const GradedVector& w);

/// Linear extension of the comultiplication table; missing-structure error
/// when the record has no comultiplication.
TensorVector comultiply(const SuperBialgebraData& data, const GradedVector& v);

GaussScalar counit_of(const SuperBialgebraData& data, const GradedVector& v);

/// Product in A (x) A with the Koszul rule
/// (a (x) b)(c (x) d) = (-1)^{|b||c|} ac (x) bd.
TensorVector koszul_product(const SuperBialgebraData& data, const TensorVector& s,
                            const TensorVector& t);

/// Transports every structure through the invertible even map T (columns of T
/// are the new basis vectors in old coordinates): mult'(a,b) =
/// T^-1(mult(Ta, Tb)), comult' = (T^-1 (x) T^-1) comult T, eps' = eps T,
/// S' = T^-1 S T.
SuperBialgebraData change_basis(const SuperBialgebraData& data, const GradedLinearMap& t);

/// Serialization to the catalog document format. Scalars use the canonical
/// text form, basis indices are [parity, position] pairs.
nlohmann::ordered_json serialize(const SuperBialgebraData& data);

/// Parses and validates a document; throws ValidationError listing every
/// offending entry.
SuperBialgebraData deserialize(const nlohmann::json& doc);

}  // namespace sba

#endif
