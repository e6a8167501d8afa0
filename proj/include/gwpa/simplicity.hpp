#pragma once

#include <optional>
#include <vector>

#include "gwpa/centre.hpp"

namespace gwpa {

/// Data of the univariate family: base K[H_1..H_n] with zero bracket,
/// a_i in K[H_i] and d_i = b_i d/dH_i with b_i in K[H_i].
struct UnivariateFamily {
    std::vector<Polynomial> a;
    std::vector<Polynomial> b;
};

/// Structural and conservative: anything that is not literally of the family
/// shape returns nullopt.
std::optional<UnivariateFamily> detect_univariate_family(const GWPAData& A);

struct SimplicityReport {
    // No proper d-invariant Poisson ideals in D.
    CriterionVerdict condition1;
    // D a_i + D d_i(a_i) = D for all i.
    CriterionVerdict condition2;
    // The absolute centre is a field, with its three parts.
    CriterionVerdict condition3;
    FieldCriterionReport field;
    bool univariate_family = false;
    VerdictStatus overall = VerdictStatus::Undecided;
    int degree_bound = 0;
};

SimplicityReport simplicity_check(const GWPAData& A, int d, int window = 4);

}  // namespace gwpa
