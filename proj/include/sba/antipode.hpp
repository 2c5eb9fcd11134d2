#ifndef SBA_ANTIPODE_HPP
#define SBA_ANTIPODE_HPP

#include "sba/axioms.hpp"
#include "sba/structures.hpp"

#include <map>
#include <optional>

namespace sba {

/// A linear equation over the antipode unknowns that reduced to 0 = c with
/// c != 0; `origin` names the basis element and convolution side it came from.
struct InconsistencyCertificate {
    std::string origin;
    GaussScalar residual;
};

struct AntipodeResult {
    enum class Status { Found, NotFound, NonUnique } status;
    std::optional<GradedLinearMap> antipode;               // Found
    std::optional<InconsistencyCertificate> certificate;   // NotFound
    size_t solution_space_dim = 0;                         // NonUnique
    bool precondition_ok = true;  // false when the record fails check_all

    bool found() const { return status == Status::Found; }
};

/// Decides antipode existence for a bialgebra record by exact Gaussian
/// elimination of both convolution identities on every basis element, with
/// the block-diagonal ansatz S(e_i^s) in span{e_k^s}.
AntipodeResult solve_antipode(const SuperBialgebraData& data);

/// Checks the convolution identities for a given candidate S.
bool satisfies_antipode_identity(const SuperBialgebraData& data, const GradedLinearMap& s);

struct PropertyReport {
    int number;          // 1..7
    std::string name;
    bool applicable;     // property 5 only applies to (co)commutative records
    bool holds;
    std::string detail;
};

struct AntipodePropertiesReport {
    bool valid = true;   // false when S fails the convolution identity upfront
    std::vector<PropertyReport> properties;
    bool all_applicable_hold() const;
};

/// The seven antipode properties: 1) S mu = mu tau (S (x) S); 2) S eta = eta;
/// 3) eps S = eps; 4) tau (S (x) S) Delta = Delta S; 5) S^2 = id when the
/// record is commutative or cocommutative; 6) when S is bijective, the
/// coopposite with S^-1 passes check_all and the convolution identity;
/// 7) both blocks of S are invertible.
AntipodePropertiesReport verify_properties(const SuperBialgebraData& data,
                                           const GradedLinearMap& s);

struct CensusRow {
    std::string id;
    std::string family;  // e.g. "3|2", "3d:2|1"
    size_t dim = 0;
    AntipodeResult::Status status;
};

struct CensusTable {
    std::vector<CensusRow> rows;
    std::map<std::string, std::pair<size_t, size_t>> per_family;  // family -> (records, found)
    size_t found_total = 0;
};

/// One row per record (id -> antipode status) plus per-family aggregates.
CensusTable hopf_census(const std::vector<SuperBialgebraData>& records);

}  // namespace sba

#endif
