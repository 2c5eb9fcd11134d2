#ifndef SBA_BUILDER_HPP
#define SBA_BUILDER_HPP

#include "sba/structures.hpp"

namespace sba {

/// Assembles a record from textual structure constants. Expressions are
/// linear combinations of basis labels, with "@" as the tensor separator:
///   "1@y + y@1 - 2*x@y",  "y - z",  "1/2*x@x^2",  "0".
/// Coefficients use the canonical scalar syntax ("-1/2", "i", "3/4-1/4*i").
class RecordBuilder {
public:
    RecordBuilder(std::string id, size_t n0, size_t n1, std::vector<std::string> labels);

    BasisIndex idx(const std::string& label) const;
    GradedVector vec(const std::string& expr) const;
    TensorVector ten(const std::string& expr) const;

    /// Product of two basis labels. Unit rows are implied.
    RecordBuilder& mult(const std::string& a, const std::string& b, const std::string& expr);
    /// Comultiplication of a basis label; Delta(1) = 1@1 is implied.
    RecordBuilder& comult(const std::string& a, const std::string& expr);
    /// Counit value on an even basis label; eps(1) = 1 is implied.
    RecordBuilder& counit(const std::string& a, const std::string& value);
    /// Antipode image of a basis label; S(1) = 1 is implied.
    RecordBuilder& antipode(const std::string& a, const std::string& expr);
    RecordBuilder& provenance(std::string text);

    /// Finishes the record. `with_coalgebra` controls whether the implied
    /// Delta(1)/eps(1) make this a bialgebra record even if no comult/counit
    /// lines were given (set false for algebra-only records).
    SuperBialgebraData build(bool with_coalgebra) const;

private:
    SuperBialgebraData data_;
    bool saw_comult_ = false;
    bool saw_counit_ = false;
    ComultTable comult_;
    CounitVector counit_;
    GradedLinearMap antipode_;
    bool saw_antipode_ = false;
};

}  // namespace sba

#endif
