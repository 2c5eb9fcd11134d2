#ifndef SBA_AXIOMS_HPP
#define SBA_AXIOMS_HPP

#include "sba/structures.hpp"

#include <array>
#include <variant>

namespace sba {

enum class AxiomId {
    Associativity,
    Unit,
    Coassociativity,
    Counit,
    CompatDeltaMu,
    CompatDeltaEta,
    CompatEpsMu,
    CompatEpsEta,
    GrouplikeUnit,
    Commutative,
    Cocommutative,
};

/// The nine structural axioms; Commutative/Cocommutative are informational
/// predicates, not superbialgebra requirements.
constexpr std::array<AxiomId, 9> kStructuralAxioms = {
    AxiomId::Associativity, AxiomId::Unit,          AxiomId::Coassociativity,
    AxiomId::Counit,        AxiomId::CompatDeltaMu, AxiomId::CompatDeltaEta,
    AxiomId::CompatEpsMu,   AxiomId::CompatEpsEta,  AxiomId::GrouplikeUnit,
};

std::string axiom_name(AxiomId a);
AxiomId axiom_from_name(const std::string& name);

struct AxiomViolation {
    std::vector<BasisIndex> where;  // the basis tuple the check ran on
    std::string tag;                // which side/sub-identity, when relevant
    std::variant<GradedVector, TensorVector> residual;  // exactly LHS - RHS

    std::string residual_str(const std::vector<std::string>* labels = nullptr) const;
};

struct AxiomReport {
    AxiomId axiom;
    bool holds = true;
    std::vector<AxiomViolation> violations;
};

/// Decides one axiom on every relevant basis tuple with exact scalar
/// equality. Throws MissingStructureError (naming the axiom) when the record
/// lacks a structure the axiom mentions.
AxiomReport check_axiom(const SuperBialgebraData& data, AxiomId a);

/// Reports for all nine structural axioms; requires a full bialgebra record.
std::vector<AxiomReport> check_all(const SuperBialgebraData& data);

bool all_hold(const std::vector<AxiomReport>& reports);

bool is_commutative(const SuperBialgebraData& data);
bool is_cocommutative(const SuperBialgebraData& data);

}  // namespace sba

#endif
