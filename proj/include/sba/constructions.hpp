#ifndef SBA_CONSTRUCTIONS_HPP
#define SBA_CONSTRUCTIONS_HPP

#include "sba/structures.hpp"

namespace sba {

enum class VariantKind { Op, Cop, OpCop };

std::string variant_name(VariantKind k);

/// Opposite (mu tau), coopposite (tau Delta) or both. A stored antipode is
/// carried along as S^-1 for Op/Cop (dropped when singular) and unchanged
/// for OpCop.
SuperBialgebraData variant(const SuperBialgebraData& data, VariantKind k);

/// Finite-dimensional linear dual under the pairing
/// (f (x) g)(a (x) b) = (-1)^{|g||a|} f(a) g(b), with the basis rotated so the
/// dual unit (the counit functional) sits at e_1^0.
SuperBialgebraData dual(const SuperBialgebraData& data);

/// Super tensor product: (a (x) b)(a' (x) b') = (-1)^{|b||a'|} aa' (x) bb',
/// comultiplication twisted by the middle superflip.
SuperBialgebraData tensor_product(const SuperBialgebraData& a, const SuperBialgebraData& b);

// Named structures used by the dimension <= 4 landscape.
SuperBialgebraData group_algebra_z2();
SuperBialgebraData lambda_k();
SuperBialgebraData lambda_k2();
SuperBialgebraData hopf_h1();
SuperBialgebraData hopf_h2();
SuperBialgebraData hopf_h3();
SuperBialgebraData hopf_h4();
/// root must be a primitive 4th root of unity (i or -i).
SuperBialgebraData hopf_h5(const GaussScalar& root);
SuperBialgebraData m2_graded();
/// Embeds a purely even bialgebra record as a trivial super record.
SuperBialgebraData trivial_from(const SuperBialgebraData& bialgebra);

/// Dispatch by name: "GroupAlgebraZ2", "LambdaK", "LambdaK2", "H1".."H4",
/// "H5(i)" / "H5(-i)", "M2Graded".
SuperBialgebraData named_family(const std::string& name);

}  // namespace sba

#endif
