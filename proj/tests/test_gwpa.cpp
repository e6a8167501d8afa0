#include <gtest/gtest.h>

#include "gwpa/constructions.hpp"
#include "gwpa/gwpa.hpp"
#include "support.hpp"

using namespace gwpa;
using gwpa::gen::Rng;

namespace {

GWPAElement E(const GWPAData& A, const char* text) { return parse_element(A, text); }

std::vector<std::pair<std::string, GWPAData>> gallery() {
    return {{"p2n(1)", gallery_p2n(1)},
            {"p2n(2)", gallery_p2n(2)},
            {"gr_usl2", gallery_gr_usl2()},
            {"gr_heisenberg(1)", gallery_gr_heisenberg(1)}};
}

}  // namespace

TEST(Validate, GalleryIsValid) {
    for (const auto& [name, A] : gallery()) EXPECT_TRUE(validate_gwpa(A).ok) << name;
    EXPECT_TRUE(validate_gwpa(gallery_univariate_family({"H1^2"}, {"1"})).ok);
}

TEST(Validate, ReportsCrossDerivation) {
    auto r = make_ring({"H1", "H2"});
    GWPAData A(BasePoissonAlgebra::trivial(r), {Polynomial::variable(r, 0), Polynomial::variable(r, 1)},
               {BaseDerivation(r, {Polynomial::constant(r, 1), Polynomial::constant(r, 1)}),
                BaseDerivation::scaled_partial(r, 1)});
    auto rep = validate_gwpa(A);
    ASSERT_FALSE(rep.ok);
    ASSERT_EQ(rep.violations.size(), 1u);
    EXPECT_EQ(rep.violations[0].kind, Violation::Kind::CrossDerivation);
    EXPECT_EQ(rep.violations[0].i, 1u);
    EXPECT_EQ(rep.violations[0].j, std::optional<std::size_t>(2));
}

TEST(Validate, ReportsNonCommutingAndNonPoisson) {
    auto r = make_ring({"H1", "H2"});
    BracketMatrix m = zero_bracket_matrix(r);
    m[0][1] = Polynomial::constant(r, 1);
    m[1][0] = Polynomial::constant(r, -1);
    GWPAData A(BasePoissonAlgebra(r, m), {Polynomial::constant(r, 1), Polynomial::constant(r, 1)},
               {BaseDerivation::scaled_partial(r, 0, Polynomial::variable(r, 0)), BaseDerivation::scaled_partial(r, 0)});
    auto rep = validate_gwpa(A);
    ASSERT_FALSE(rep.ok);
    bool saw_poisson = false, saw_commute = false;
    for (const auto& v : rep.violations) {
        saw_poisson |= v.kind == Violation::Kind::NotPoissonDerivation && v.i == 1;
        saw_commute |= v.kind == Violation::Kind::NonCommuting;
    }
    EXPECT_TRUE(saw_poisson);
    EXPECT_TRUE(saw_commute);
}

TEST(Construction, RejectsDegenerateData) {
    auto r = make_ring({"H"});
    EXPECT_THROW(GWPAData(BasePoissonAlgebra::trivial(r), {}, {}), Error);
    EXPECT_THROW(GWPAData(BasePoissonAlgebra::trivial(r), {Polynomial::variable(r, 0)}, {}), Error);
    EXPECT_THROW(GWPAData(BasePoissonAlgebra::trivial(r), {Polynomial::variable(r, 0)},
                          {BaseDerivation::scaled_partial(r, 0)}, {"H"}, {"Y1"}),
                 Error);
}

TEST(Mul, Examples) {
    auto P2 = gallery_p2n(1);
    EXPECT_EQ(render(P2, gwpa_mul(P2, E(P2, "X1"), E(P2, "Y1"))), "H1");
    EXPECT_EQ(render(P2, gwpa_mul(P2, E(P2, "X1^2"), E(P2, "Y1"))), "H1*X1");
    auto U = gallery_gr_usl2();
    EXPECT_EQ(render(U, gwpa_mul(U, E(U, "X1"), E(U, "Y1"))), "-H^2 + C");
    EXPECT_THROW(gwpa_mul(P2, E(P2, "X1"), gwpa_x(U, 0)), Error);
}

TEST(Bracket, Examples) {
    auto P2 = gallery_p2n(1);
    EXPECT_EQ(render(P2, gwpa_bracket(P2, E(P2, "Y1"), E(P2, "X1"))), "1");
    EXPECT_EQ(render(P2, gwpa_bracket(P2, E(P2, "H1"), E(P2, "X1"))), "X1");
    auto U = gallery_gr_usl2();
    EXPECT_EQ(render(U, gwpa_bracket(U, E(U, "Y1"), E(U, "X1"))), "-2*H");
    EXPECT_EQ(render(U, gwpa_bracket(U, E(U, "X1"), E(U, "Y1"))), "2*H");
    // sl2 relations: {H, X} = X, {H, Y} = -Y, and C = XY + H^2 is central.
    EXPECT_EQ(gwpa_bracket(U, E(U, "H"), E(U, "X1")), E(U, "X1"));
    EXPECT_EQ(gwpa_bracket(U, E(U, "H"), E(U, "Y1")), E(U, "-Y1"));
    for (const char* g : {"X1", "Y1", "H", "C"}) {
        EXPECT_TRUE(gwpa_bracket(U, E(U, "X1*Y1 + H^2"), E(U, g)).is_zero()) << g;
    }
}

TEST(Render, Ordering) {
    auto P4 = gallery_p2n(2);
    EXPECT_EQ(render(P4, E(P4, "2*H1*X1^2 - Y2 + H1 + X2*Y1^3")), "2*H1*X1^2 + H1 - Y2 + X2*Y1^3");
    EXPECT_EQ(render(P4, gwpa_zero(P4)), "0");
    // Rendering round-trips through the parser.
    Rng rng(5);
    for (int t = 0; t < 100; ++t) {
        auto u = gen::random_element(P4, rng, 5);
        ASSERT_EQ(parse_element(P4, render(P4, u)), u);
    }
}

TEST(Oracle, Examples) {
    auto P2 = gallery_p2n(1);
    auto one = Polynomial::constant(P2.ring(), 1);
    auto h = Polynomial::variable(P2.ring(), 0);
    EXPECT_EQ(bracket_oracle_graded(P2, h, one, {1}), E(P2, "X1"));
    EXPECT_EQ(bracket_oracle_graded(P2, GeneratorRef{GeneratorRef::Kind::Y, 0}, one, {1}), E(P2, "1"));
    EXPECT_EQ(bracket_oracle_graded(P2, GeneratorRef{GeneratorRef::Kind::X, 0}, h, {0}), E(P2, "-X1"));
    EXPECT_THROW(bracket_oracle_graded(P2, GeneratorRef{GeneratorRef::Kind::X, 3}, h, {0}), Error);
}

TEST(ElementWeight, Basics) {
    auto P4 = gallery_p2n(2);
    EXPECT_EQ(element_weight(E(P4, "H1^2*X1*Y2 + H2")), Degree(4));
    EXPECT_EQ(element_weight(gwpa_zero(P4)), Degree::minus_infinity());
}

TEST(OreData, Examples) {
    auto K = BasePoissonAlgebra::trivial(make_ring({}));
    auto A = from_ore_data(K, {BaseDerivation::zero(K.ring())}, {Polynomial::constant(K.ring(), 1)});
    EXPECT_EQ(A, gallery_p2n(1));

    auto A0 = from_ore_data(K, {BaseDerivation::zero(K.ring())}, {Polynomial(K.ring())});
    EXPECT_TRUE(gwpa_bracket(A0, gwpa_y(A0, 0), gwpa_x(A0, 0)).is_zero());

    auto Dz = BasePoissonAlgebra::trivial(make_ring({"Z"}));
    auto Az = from_ore_data(Dz, {BaseDerivation::zero(Dz.ring())}, {Polynomial::variable(Dz.ring(), 0)});
    EXPECT_EQ(render(Az, gwpa_bracket(Az, gwpa_y(Az, 0), gwpa_x(Az, 0))), "Z");
    EXPECT_EQ(Az.partial(0).image(1), Polynomial::variable(Az.ring(), 0));
}

TEST(OreData, RejectsNonCentralAlpha) {
    auto r = make_ring({"P", "Q"});
    BracketMatrix m = zero_bracket_matrix(r);
    m[0][1] = Polynomial::constant(r, 1);
    m[1][0] = Polynomial::constant(r, -1);
    BasePoissonAlgebra D(r, m);
    try {
        (void)from_ore_data(D, {BaseDerivation::zero(r)}, {Polynomial::variable(r, 0)});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotPoissonCentral);
    }
}

TEST(OreData, CrossDerivationOfAlphaIsRejected) {
    // d_1(alpha_2) != 0 makes the extended derivations fail to commute.
    auto Dz = BasePoissonAlgebra::trivial(make_ring({"Z"}));
    const auto& r = Dz.ring();
    EXPECT_THROW((void)from_ore_data(Dz, {BaseDerivation::scaled_partial(r, 0), BaseDerivation::zero(r)},
                                     {Polynomial::constant(r, 1), Polynomial::variable(r, 0)}),
                 Error);
}

TEST(OreData, ZIsCentral) {
    // Z_i = X_i Y_i - H_i is central in the polynomial algebra D[X, Y; d, alpha]
    // and maps to zero in the GWPA realization.
    auto Dz = BasePoissonAlgebra::trivial(make_ring({"Z"}));
    const auto& r = Dz.ring();
    std::vector<BaseDerivation> ds{BaseDerivation::scaled_partial(r, 0, Polynomial::variable(r, 0))};
    std::vector<Polynomial> alphas{Polynomial::variable(r, 0)};
    auto A = from_ore_data(Dz, ds, alphas);
    EXPECT_TRUE(gwpa_mul(A, gwpa_x(A, 0), gwpa_y(A, 0)) == gwpa_from_base(A, A.a(0)));
    EXPECT_TRUE(validate_gwpa(A).ok);
}

TEST(Tensor, P2TimesP2IsP4) {
    auto T = tensor_product({gallery_p2n(1), gallery_p2n(1)});
    EXPECT_EQ(T.renaming[1].at("H1"), "H1_2");
    EXPECT_EQ(T.renaming[1].at("X1"), "X2");
    EXPECT_EQ(rename_base(T.algebra, {{"H1_2", "H2"}}), gallery_p2n(2));
    EXPECT_EQ(tensor_product({gallery_p2n(2)}).algebra, gallery_p2n(2));
    auto UP = tensor_product({gallery_gr_usl2(), gallery_p2n(1)}).algebra;
    EXPECT_EQ(UP.rank(), 2u);
    EXPECT_EQ(UP.ring()->names(), (std::vector<std::string>{"C", "H", "H1"}));
    EXPECT_TRUE(validate_gwpa(UP).ok);
}

TEST(SI, Examples) {
    auto P2 = gallery_p2n(1);
    auto [B, img] = apply_sI(P2, {0}, E(P2, "X1"));
    EXPECT_EQ(render(B, img), "Y1");
    EXPECT_EQ(render(B, gwpa_bracket(B, gwpa_y(B, 0), gwpa_x(B, 0))), "-1");
    EXPECT_EQ(B.partial(0), -P2.partial(0));
    auto [same, u] = apply_sI(P2, {}, E(P2, "H1*X1"));
    EXPECT_EQ(same, P2);
    EXPECT_EQ(u, E(P2, "H1*X1"));
    auto [back, v] = apply_sI(B, {0}, img);
    EXPECT_EQ(back, P2);
    EXPECT_EQ(v, E(P2, "X1"));
}

TEST(Torus, Examples) {
    auto P2 = gallery_p2n(1);
    EXPECT_EQ(torus_apply(P2, {2}, E(P2, "X1")), E(P2, "2*X1"));
    EXPECT_EQ(torus_apply(P2, {2}, E(P2, "Y1")), E(P2, "1/2*Y1"));
    EXPECT_EQ(torus_apply(P2, {2}, E(P2, "H1")), E(P2, "H1"));
    EXPECT_EQ(torus_apply(P2, {-3}, E(P2, "X1*Y1")), E(P2, "X1*Y1"));
    EXPECT_EQ(torus_apply(P2, {1}, E(P2, "X1^3 + Y1")), E(P2, "X1^3 + Y1"));
    EXPECT_THROW(torus_apply(P2, {0}, E(P2, "X1")), Error);
}

TEST(Gallery, Shapes) {
    auto P4 = gallery_p2n(2);
    EXPECT_EQ(P4.rank(), 2u);
    EXPECT_EQ(P4.ring()->names(), (std::vector<std::string>{"H1", "H2"}));
    auto Hs = gallery_gr_heisenberg(1);
    EXPECT_EQ(Hs.ring()->names(), (std::vector<std::string>{"H1", "Z"}));
    EXPECT_EQ(Hs.a(0).to_string(), "H1");
    EXPECT_EQ(Hs.partial(0).image(0).to_string(), "Z");
    auto F = gallery_univariate_family({"H1^2"}, {"1"});
    EXPECT_EQ(F.a(0).to_string(), "H1^2");
    EXPECT_THROW(gallery_univariate_family({"H1*H2", "H2"}, {"1", "1"}), Error);
    EXPECT_THROW(gallery_univariate_family({"H1", "H2"}, {"H2", "1"}), Error);
    EXPECT_THROW(gallery_univariate_family({"H1"}, {}), Error);
    EXPECT_THROW(gallery_p2n(0), Error);
}

// ---------------------------------------------------------------------------
// Properties over the gallery.

TEST(BracketProperties, GradingAndStrategies) {
    for (const auto& [name, A] : gallery()) {
        Rng rng(31);
        for (int t = 0; t < 500; ++t) {
            auto u = gen::random_homogeneous(A, rng, 4);
            auto v = gen::random_homogeneous(A, rng, 4);
            if (u.is_zero() || v.is_zero()) continue;
            const GradeVector deg = u.terms().begin()->first + v.terms().begin()->first;
            auto p = gwpa_mul(A, u, v);
            auto b = gwpa_bracket(A, u, v);
            for (const auto& [alpha, c] : p.terms()) ASSERT_EQ(alpha, deg) << name;
            for (const auto& [alpha, c] : b.terms()) ASSERT_EQ(alpha, deg) << name;
            ASSERT_EQ(b, gwpa_bracket(A, u, v, BracketStrategy::Atomic)) << name;
        }
    }
}

TEST(BracketProperties, AxiomsOnGallery) {
    for (const auto& [name, A] : gallery()) {
        Rng rng(32);
        for (int t = 0; t < 80; ++t) {
            auto u = gen::random_element(A, rng, 4, 2);
            auto v = gen::random_element(A, rng, 4, 2);
            auto w = gen::random_element(A, rng, 4, 2);
            ASSERT_EQ(gwpa_bracket(A, u, v), -gwpa_bracket(A, v, u)) << name;
            ASSERT_EQ(gwpa_bracket(A, u, gwpa_mul(A, v, w)),
                      gwpa_mul(A, gwpa_bracket(A, u, v), w) + gwpa_mul(A, v, gwpa_bracket(A, u, w)))
                << name;
            auto jac = gwpa_bracket(A, u, gwpa_bracket(A, v, w)) + gwpa_bracket(A, v, gwpa_bracket(A, w, u)) +
                       gwpa_bracket(A, w, gwpa_bracket(A, u, v));
            ASSERT_TRUE(jac.is_zero()) << name;
            ASSERT_EQ(gwpa_mul(A, gwpa_mul(A, u, v), w), gwpa_mul(A, u, gwpa_mul(A, v, w))) << name;
            ASSERT_EQ(gwpa_mul(A, u, v), gwpa_mul(A, v, u)) << name;
            ASSERT_EQ(gwpa_bracket_of_product(A, {u, v}, w), gwpa_bracket(A, gwpa_mul(A, u, v), w)) << name;
        }
    }
}

TEST(BracketProperties, OracleAgreement) {
    for (const auto& [name, A] : gallery()) {
        Rng rng(33);
        int sign_cases[3] = {0, 0, 0};
        for (int t = 0; t < 600; ++t) {
            auto lambda = gen::random_polynomial(A.ring(), rng, 3);
            auto alpha = gen::random_grade(A.rank(), rng, 3);
            auto target = gwpa_monomial(A, lambda, alpha);
            std::variant<Polynomial, GeneratorRef> first = gen::random_polynomial(A.ring(), rng, 2);
            GWPAElement lhs = gwpa_zero(A);
            switch (t % 3) {
                case 0: lhs = gwpa_from_base(A, std::get<Polynomial>(first)); break;
                case 1: {
                    std::size_t i = rng() % A.rank();
                    first = GeneratorRef{GeneratorRef::Kind::X, i};
                    lhs = gwpa_x(A, i);
                    ++sign_cases[alpha[i] < 0 ? 2 : 1];
                    break;
                }
                default: {
                    std::size_t i = rng() % A.rank();
                    first = GeneratorRef{GeneratorRef::Kind::Y, i};
                    lhs = gwpa_y(A, i);
                    ++sign_cases[alpha[i] > 0 ? 2 : 1];
                    break;
                }
            }
            ASSERT_EQ(gwpa_bracket(A, lhs, target), bracket_oracle_graded(A, first, lambda, alpha)) << name;
        }
        EXPECT_GT(sign_cases[1], 0);
        EXPECT_GT(sign_cases[2], 0);
    }
}

TEST(MorphismProperties, SIAndTorus) {
    for (const auto& [name, A] : gallery()) {
        Rng rng(34);
        for (int t = 0; t < 60; ++t) {
            std::set<std::size_t> I;
            for (std::size_t i = 0; i < A.rank(); ++i) {
                if (rng() % 2) I.insert(i);
            }
            std::vector<Rational> lambda;
            for (std::size_t i = 0; i < A.rank(); ++i) lambda.push_back(gen::random_nonzero_rational(rng));
            auto u = gen::random_element(A, rng, 4, 2);
            auto v = gen::random_element(A, rng, 4, 2);
            auto B = sI_algebra(A, I);
            auto s = [&](const GWPAElement& x) { return sI_element(A, I, x); };
            ASSERT_EQ(s(gwpa_bracket(A, u, v)), gwpa_bracket(B, s(u), s(v))) << name;
            ASSERT_EQ(s(gwpa_mul(A, u, v)), gwpa_mul(B, s(u), s(v))) << name;
            ASSERT_EQ(sI_element(B, I, s(u)), u);
            auto tl = [&](const GWPAElement& x) { return torus_apply(A, lambda, x); };
            ASSERT_EQ(tl(gwpa_bracket(A, u, v)), gwpa_bracket(A, tl(u), tl(v))) << name;
            ASSERT_EQ(tl(gwpa_mul(A, u, v)), gwpa_mul(A, tl(u), tl(v))) << name;
        }
    }
}
