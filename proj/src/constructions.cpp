#include "gwpa/constructions.hpp"

#include <algorithm>

namespace gwpa {

namespace {

std::string fresh_name(std::string name, const std::vector<std::string>& taken) {
    while (std::find(taken.begin(), taken.end(), name) != taken.end()) name += "_";
    return name;
}

void require_valid(const GWPAData& A, const std::string& what) {
    auto report = validate_gwpa(A);
    if (report.ok) return;
    std::string msg = what + " violates the GWPA conditions:";
    for (const auto& v : report.violations) msg += " [" + std::string(to_string(v.kind)) + "] " + v.detail + ";";
    throw Error(ErrorKind::Validation, msg);
}

}  // namespace

GWPAData from_ore_data(const BasePoissonAlgebra& D, const std::vector<BaseDerivation>& derivations,
                       const std::vector<Polynomial>& alphas) {
    const std::size_t n = derivations.size();
    if (n == 0) throw Error(ErrorKind::InvalidArgument, "need at least one derivation");
    if (alphas.size() != n) throw Error(ErrorKind::InvalidArgument, "need one alpha per derivation");
    const auto& dring = D.ring();
    for (std::size_t i = 0; i < n; ++i) {
        require_same_ring(derivations[i].ring(), dring);
        require_same_ring(alphas[i].ring(), dring);
        for (std::size_t k = 0; k < dring->size(); ++k) {
            Polynomial b = base_bracket(D, alphas[i], Polynomial::variable(dring, k));
            if (!b.is_zero()) {
                throw Error(ErrorKind::NotPoissonCentral, "alpha_" + std::to_string(i + 1) + " = " +
                                                              alphas[i].to_string() + " is not Poisson-central: {" +
                                                              alphas[i].to_string() + ", " + dring->name(k) +
                                                              "} = " + b.to_string());
            }
        }
    }
    const std::size_t nb = dring->size();
    std::vector<std::string> names = dring->names();
    for (std::size_t i = 0; i < n; ++i) names.push_back(fresh_name("H" + std::to_string(i + 1), names));
    RingPtr ring = make_ring(names);

    BracketMatrix m = zero_bracket_matrix(ring);
    for (std::size_t j = 0; j < nb; ++j) {
        for (std::size_t k = 0; k < nb; ++k) m[j][k] = embed(D.generator_bracket(j, k), ring);
    }
    std::vector<BaseDerivation> extended;
    std::vector<Polynomial> a;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Polynomial> images;
        for (std::size_t k = 0; k < nb; ++k) images.push_back(embed(derivations[i].image(k), ring));
        for (std::size_t j = 0; j < n; ++j) images.push_back(i == j ? embed(alphas[j], ring) : Polynomial(ring));
        extended.emplace_back(ring, std::move(images));
        a.push_back(Polynomial::variable(ring, nb + i));
    }
    GWPAData A(BasePoissonAlgebra(ring, std::move(m)), std::move(a), std::move(extended));
    require_valid(A, "the Ore data");

    // The defining relations of D[X, Y; d, alpha] must come out exactly.
    for (std::size_t i = 0; i < n; ++i) {
        GWPAElement yx = gwpa_bracket(A, gwpa_y(A, i), gwpa_x(A, i));
        if (!(yx == gwpa_from_base(A, embed(alphas[i], ring)))) {
            throw Error(ErrorKind::Validation, "{Y_i, X_i} != alpha_i in the Ore realization");
        }
        for (std::size_t k = 0; k < nb; ++k) {
            GWPAElement h = gwpa_from_base(A, Polynomial::variable(ring, k));
            Polynomial dh = embed(derivations[i].image(k), ring);
            if (!(gwpa_bracket(A, gwpa_x(A, i), h) == gwpa_monomial(A, -dh, unit_grade(n, i, +1))) ||
                !(gwpa_bracket(A, gwpa_y(A, i), h) == gwpa_monomial(A, dh, unit_grade(n, i, -1)))) {
                throw Error(ErrorKind::Validation, "generator relation with D fails in the Ore realization");
            }
        }
    }
    return A;
}

TensorProduct tensor_product(const std::vector<GWPAData>& factors) {
    if (factors.empty()) throw Error(ErrorKind::InvalidArgument, "tensor product of no algebras");
    std::size_t total_rank = 0;
    for (const auto& f : factors) total_rank += f.rank();
    const auto xs = default_x_names(total_rank);
    const auto ys = default_y_names(total_rank);

    std::vector<std::string> names;
    std::vector<std::map<std::string, std::string>> renaming(factors.size());
    for (std::size_t f = 0; f < factors.size(); ++f) {
        for (const auto& v : factors[f].ring()->names()) {
            std::string nv = v;
            const bool clash = std::find(names.begin(), names.end(), v) != names.end() ||
                               std::find(xs.begin(), xs.end(), v) != xs.end() ||
                               std::find(ys.begin(), ys.end(), v) != ys.end();
            if (clash) nv = fresh_name(v + "_" + std::to_string(f + 1), names);
            renaming[f][v] = nv;
            names.push_back(nv);
        }
    }
    RingPtr ring = make_ring(names);
    BracketMatrix m = zero_bracket_matrix(ring);
    std::vector<Polynomial> a;
    std::vector<BaseDerivation> ds;
    std::size_t offset = 0;
    std::size_t gen = 0;
    for (std::size_t f = 0; f < factors.size(); ++f) {
        const auto& F = factors[f];
        const std::size_t nb = F.ring()->size();
        // Re-express the factor's polynomials in the big ring.
        std::vector<Polynomial> images;
        for (std::size_t k = 0; k < nb; ++k) images.push_back(Polynomial::variable(ring, offset + k));
        auto move = [&](const Polynomial& p) { return substitute(p, images, ring); };
        for (std::size_t j = 0; j < nb; ++j) {
            for (std::size_t k = 0; k < nb; ++k) m[offset + j][offset + k] = move(F.base().generator_bracket(j, k));
        }
        for (std::size_t i = 0; i < F.rank(); ++i) {
            a.push_back(move(F.a(i)));
            std::vector<Polynomial> img(ring->size(), Polynomial(ring));
            for (std::size_t k = 0; k < nb; ++k) img[offset + k] = move(F.partial(i).image(k));
            ds.emplace_back(ring, std::move(img));
            renaming[f][F.x_names()[i]] = xs[gen];
            renaming[f][F.y_names()[i]] = ys[gen];
            ++gen;
        }
        offset += nb;
    }
    return {GWPAData(BasePoissonAlgebra(ring, std::move(m)), std::move(a), std::move(ds), xs, ys),
            std::move(renaming)};
}

GWPAData rename_base(const GWPAData& A, const std::map<std::string, std::string>& names) {
    std::vector<std::string> renamed;
    for (const auto& v : A.ring()->names()) {
        auto it = names.find(v);
        renamed.push_back(it == names.end() ? v : it->second);
    }
    RingPtr ring = make_ring(renamed);
    std::vector<Polynomial> images;
    for (std::size_t k = 0; k < ring->size(); ++k) images.push_back(Polynomial::variable(ring, k));
    auto move = [&](const Polynomial& p) { return substitute(p, images, ring); };
    BracketMatrix m = zero_bracket_matrix(ring);
    for (std::size_t j = 0; j < ring->size(); ++j) {
        for (std::size_t k = 0; k < ring->size(); ++k) m[j][k] = move(A.base().generator_bracket(j, k));
    }
    std::vector<Polynomial> a;
    std::vector<BaseDerivation> ds;
    for (std::size_t i = 0; i < A.rank(); ++i) {
        a.push_back(move(A.a(i)));
        std::vector<Polynomial> img;
        for (const auto& p : A.partial(i).images()) img.push_back(move(p));
        ds.emplace_back(ring, std::move(img));
    }
    return GWPAData(BasePoissonAlgebra(ring, std::move(m)), std::move(a), std::move(ds), A.x_names(), A.y_names());
}

GWPAData sI_algebra(const GWPAData& A, const std::set<std::size_t>& I) {
    std::vector<BaseDerivation> ds = A.partials();
    for (std::size_t i : I) {
        if (i >= A.rank()) throw Error(ErrorKind::InvalidArgument, "index " + std::to_string(i + 1) + " exceeds the rank");
        ds[i] = -ds[i];
    }
    return GWPAData(A.base(), A.a(), std::move(ds), A.x_names(), A.y_names());
}

GWPAElement sI_element(const GWPAData& A, const std::set<std::size_t>& I, const GWPAElement& u) {
    require_element_of(A, u);
    GWPAElement out = gwpa_zero(A);
    for (const auto& [alpha, lambda] : u.terms()) {
        GradeVector beta = alpha;
        for (std::size_t i : I) beta.at(i) = -beta.at(i);
        out.add_term(beta, lambda);
    }
    return out;
}

std::pair<GWPAData, GWPAElement> apply_sI(const GWPAData& A, const std::set<std::size_t>& I, const GWPAElement& u) {
    GWPAData B = sI_algebra(A, I);
    return {B, sI_element(A, I, u)};
}

GWPAElement torus_apply(const GWPAData& A, const std::vector<Rational>& lambda, const GWPAElement& u) {
    require_element_of(A, u);
    if (lambda.size() != A.rank()) throw Error(ErrorKind::InvalidArgument, "torus element has the wrong length");
    for (const auto& l : lambda) {
        if (sgn(l) == 0) throw Error(ErrorKind::InvalidArgument, "torus element has a zero entry");
    }
    GWPAElement out = gwpa_zero(A);
    for (const auto& [alpha, coeff] : u.terms()) {
        Rational scale = 1;
        for (std::size_t i = 0; i < alpha.size(); ++i) {
            for (int k = 0; k < std::abs(alpha[i]); ++k) {
                if (alpha[i] > 0) {
                    scale *= lambda[i];
                } else {
                    scale /= lambda[i];
                }
            }
        }
        out.add_term(alpha, coeff * scale);
    }
    return out;
}

namespace {

std::vector<std::string> h_names(std::size_t n) {
    std::vector<std::string> v;
    for (std::size_t i = 1; i <= n; ++i) v.push_back("H" + std::to_string(i));
    return v;
}

}  // namespace

GWPAData gallery_p2n(std::size_t n) {
    if (n == 0) throw Error(ErrorKind::InvalidArgument, "p2n needs n >= 1");
    RingPtr ring = make_ring(h_names(n));
    std::vector<Polynomial> a;
    std::vector<BaseDerivation> ds;
    for (std::size_t i = 0; i < n; ++i) {
        a.push_back(Polynomial::variable(ring, i));
        ds.push_back(BaseDerivation::scaled_partial(ring, i));
    }
    return GWPAData(BasePoissonAlgebra::trivial(ring), std::move(a), std::move(ds));
}

GWPAData gallery_gr_usl2() {
    RingPtr ring = make_ring({"C", "H"});
    Polynomial a = parse_polynomial("C - H^2", ring);
    return GWPAData(BasePoissonAlgebra::trivial(ring), {a}, {BaseDerivation::scaled_partial(ring, 1)});
}

GWPAData gallery_gr_heisenberg(std::size_t n) {
    if (n == 0) throw Error(ErrorKind::InvalidArgument, "gr_heisenberg needs n >= 1");
    auto names = h_names(n);
    names.push_back("Z");
    RingPtr ring = make_ring(names);
    const Polynomial z = Polynomial::variable(ring, n);
    std::vector<Polynomial> a;
    std::vector<BaseDerivation> ds;
    for (std::size_t i = 0; i < n; ++i) {
        a.push_back(Polynomial::variable(ring, i));
        ds.push_back(BaseDerivation::scaled_partial(ring, i, z));
    }
    return GWPAData(BasePoissonAlgebra::trivial(ring), std::move(a), std::move(ds));
}

GWPAData gallery_univariate_family(const std::vector<std::string>& a, const std::vector<std::string>& b) {
    const std::size_t n = a.size();
    if (n == 0 || b.size() != n) {
        throw Error(ErrorKind::InvalidArgument, "univariate_family needs equally many a_i and b_i (at least one)");
    }
    RingPtr ring = make_ring(h_names(n));
    std::vector<Polynomial> as;
    std::vector<BaseDerivation> ds;
    auto only_in = [&](const Polynomial& p, std::size_t i, const char* what) {
        for (std::size_t v : p.support()) {
            if (v != i) {
                throw Error(ErrorKind::NotUnivariate, std::string(what) + "_" + std::to_string(i + 1) + " = " +
                                                          p.to_string() + " is not in K[" + ring->name(i) + "]");
            }
        }
    };
    for (std::size_t i = 0; i < n; ++i) {
        Polynomial ai = parse_polynomial(a[i], ring);
        Polynomial bi = parse_polynomial(b[i], ring);
        only_in(ai, i, "a");
        only_in(bi, i, "b");
        as.push_back(std::move(ai));
        ds.push_back(BaseDerivation::scaled_partial(ring, i, bi));
    }
    return GWPAData(BasePoissonAlgebra::trivial(ring), std::move(as), std::move(ds));
}

}  // namespace gwpa
