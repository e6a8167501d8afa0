#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "gwpa/gwpa.hpp"

namespace gwpa {

/// GWPA realization of D[X, Y; d, alpha]: the base is enlarged to
/// D[H_1..H_n] with H_i central, a_i = H_i and d'_i(H_j) = delta_ij alpha_j.
/// The alpha_i must be Poisson-central in D, and d_i(alpha_j) must vanish for
/// i != j (otherwise the extended derivations do not commute). The generator
/// relations of the result are re-checked before returning.
GWPAData from_ore_data(const BasePoissonAlgebra& D, const std::vector<BaseDerivation>& derivations,
                       const std::vector<Polynomial>& alphas);

struct TensorProduct {
    GWPAData algebra;
    // One map per factor: old name -> new name, for base variables and
    // generators alike.
    std::vector<std::map<std::string, std::string>> renaming;
};

/// Base variables that collide with an earlier factor get the suffix
/// "_<factor number>"; generators are renumbered X1..Xn, Y1..Yn.
TensorProduct tensor_product(const std::vector<GWPAData>& factors);

/// Renames base variables (names absent from the map are kept).
GWPAData rename_base(const GWPAData& A, const std::map<std::string, std::string>& names);

/// The algebra D[X, Y; a, sign(I) d}: d_i is negated for i in I (0-based).
GWPAData sI_algebra(const GWPAData& A, const std::set<std::size_t>& I);
/// Image of u under X_i <-> Y_i for i in I, i.e. alpha_i -> -alpha_i.
GWPAElement sI_element(const GWPAData& A, const std::set<std::size_t>& I, const GWPAElement& u);
std::pair<GWPAData, GWPAElement> apply_sI(const GWPAData& A, const std::set<std::size_t>& I, const GWPAElement& u);

/// t_lambda: the component of degree alpha is scaled by prod_i lambda_i^alpha_i.
GWPAElement torus_apply(const GWPAData& A, const std::vector<Rational>& lambda, const GWPAElement& u);

// Gallery.
GWPAData gallery_p2n(std::size_t n);
GWPAData gallery_gr_usl2();
GWPAData gallery_gr_heisenberg(std::size_t n);
/// Base K[H_1..H_n] with zero bracket, a_i in K[H_i], d_i = b_i d/dH_i with
/// b_i in K[H_i]. Polynomials are parsed over H1..Hn.
GWPAData gallery_univariate_family(const std::vector<std::string>& a, const std::vector<std::string>& b);

}  // namespace gwpa
