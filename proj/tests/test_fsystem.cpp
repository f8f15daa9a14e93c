#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sbo/fsystem.hpp"
#include "sbo/odesolver.hpp"

#include <random>

using namespace sbo;

namespace {

std::mt19937_64 rng(424242);

GaussRational random_coeff() {
    return GaussRational(Rational(static_cast<long long>(rng() % 15) - 7,
                                  static_cast<long long>(rng() % 3) + 1),
                         Rational(static_cast<long long>(rng() % 15) - 7, 1));
}

UniPoly random_even(long long b) {
    UniPoly p(b >= 0 ? parity_of_degree(b) : Parity::Even);
    for (long long d = b; d >= 0; d -= 2)
        if (rng() % 4 != 0)
            p.set_coeff(static_cast<int>(d), random_coeff());
    return p;
}

std::map<long long, UniPoly> random_gmap(int big_n, long long m, long long a) {
    std::map<long long, UniPoly> g;
    for (long long k : k_set(big_n, m)) {
        UniPoly p = random_even(a - k);
        if (!p.is_zero())
            g[k] = p;
    }
    return g;
}

TriPoly random_homogeneous(int deg) {
    TriPoly p;
    for (int e1 = 0; e1 <= deg; ++e1)
        for (int e2 = 0; e1 + e2 <= deg; ++e2)
            if (rng() % 3 == 0)
                p.add_coeff({e1, e2, deg - e1 - e2}, random_coeff());
    return p;
}

} // namespace

TEST_CASE("k_set enumeration") {
    CHECK(k_set(1, 1) == std::set<long long>{0, 1, 2});
    CHECK(k_set(0, 0) == std::set<long long>{0});
    CHECK(k_set(2, 2) == std::set<long long>{0, 1, 2, 3, 4});
    CHECK(k_set(2, -3) == std::set<long long>{1, 2, 3, 4, 5});
    CHECK(k_set(1, 1).size() == 3);
    CHECK_THROWS_AS(k_set(2, 1), std::domain_error);
}

TEST_CASE("generator pairing table") {
    GenDescriptor d = generator_h(1, 1, 2, Sign::Plus);
    CHECK(d.source_index == 2);
    CHECK(d.monomial == zeta_linear_power(2, 1));

    GenDescriptor e = generator_h(0, 0, 0, Sign::Plus);
    CHECK(e.source_index == 0);
    CHECK(e.monomial == TriPoly::constant(GaussRational(1)));

    // minus side at m = -1: k = 2 pairs with u_0, k = 0 with u_2
    GenDescriptor f = generator_h(1, -1, 2, Sign::Minus);
    CHECK(f.source_index == 0);
    CHECK(f.monomial == zeta_linear_power(2, -1));
    CHECK(generator_h(1, -1, 0, Sign::Minus).source_index == 2);

    CHECK_THROWS_AS(generator_h(1, 1, 5, Sign::Plus), std::domain_error);
    CHECK_THROWS_AS(generator_h(1, 1, 1, Sign::Minus), std::domain_error);
}

TEST_CASE("assemble_psi basics and homogeneity") {
    {
        std::map<long long, UniPoly> g{{0, UniPoly::constant(GaussRational(1))}};
        SymbolMap psi = assemble_psi(Rational(1), 0, 0, 0, Sign::Plus, g);
        CHECK(psi[0] == TriPoly::constant(GaussRational(1)));
    }
    {
        GaussRational c(Rational(3, 7));
        std::map<long long, UniPoly> g{{0, UniPoly::constant(c)}};
        SymbolMap psi = assemble_psi(Rational(1), 0, 1, 1, Sign::Plus, g);
        CHECK(psi[0] == TriPoly::constant(c));
        CHECK(psi[1].is_zero());
        CHECK(psi[2].is_zero());
    }
    for (int big_n = 0; big_n <= 3; ++big_n)
        for (long long a = 0; a <= 6; ++a) {
            auto g = random_gmap(big_n, big_n, a);
            SymbolMap psi = assemble_psi(Rational(1, 2), a, big_n, big_n, Sign::Plus, g);
            for (const auto& comp : psi.components)
                CHECK(comp.homogeneous_of_degree(static_cast<int>(a)));
        }
    // key outside K rejected
    std::map<long long, UniPoly> bad{{5, UniPoly::constant(GaussRational(1))}};
    CHECK_THROWS_AS(assemble_psi(Rational(1), 5, 1, 1, Sign::Plus, bad),
                    std::domain_error);
}

TEST_CASE("dsigma matrices as displayed") {
    Mat zero = dsigma_matrix(2, SO3Generator::X11);
    for (const auto& row : zero)
        for (const auto& v : row)
            CHECK(v.is_zero());

    Mat diag = dsigma_matrix(1, SO3Generator::X21);
    GaussRational two_i(Rational(0), Rational(2));
    CHECK(diag[0][0] == -two_i);
    CHECK(diag[1][1].is_zero());
    CHECK(diag[2][2] == two_i);

    Mat tri = dsigma_matrix(1, SO3Generator::X31);
    CHECK(tri[0][1] == GaussRational(2));
    CHECK(tri[1][0] == GaussRational(1));
    CHECK(tri[1][2] == GaussRational(1));
    CHECK(tri[2][1] == GaussRational(-2));
    CHECK(tri[0][0].is_zero());
    CHECK(tri[2][2].is_zero());

    // general shape at N = 2: superdiagonal 2N-s, diagonal 2i(s-N),
    // first subdiagonal entry 1 then -s
    Mat tri2 = dsigma_matrix(2, SO3Generator::X31);
    for (int s = 0; s < 4; ++s)
        CHECK(tri2[static_cast<std::size_t>(s)][static_cast<std::size_t>(s + 1)] ==
              GaussRational(4 - s));
    CHECK(tri2[1][0] == GaussRational(1));
    for (int s = 2; s <= 4; ++s)
        CHECK(tri2[static_cast<std::size_t>(s)][static_cast<std::size_t>(s - 1)] ==
              GaussRational(-s));
    Mat diag2 = dsigma_matrix(2, SO3Generator::X21);
    for (int s = 0; s <= 4; ++s)
        CHECK(diag2[static_cast<std::size_t>(s)][static_cast<std::size_t>(s)] ==
              GaussRational(Rational(0), Rational(2 * (s - 2), 1)));
}

TEST_CASE("m_scalar pinned values") {
    Rational lambda(5, 3);
    SymbolMap zero(1);
    CHECK(m_scalar(lambda, zero).is_zero());

    SymbolMap psi(0);
    psi[0] = TriPoly::variable(0); // zeta_1
    SymbolMap out = m_scalar(lambda, psi);
    // E_zeta(d_1 zeta_1) = E_zeta(1) = 0, so the value is 2 lambda
    CHECK(out[0] == TriPoly::constant(GaussRational(Rational(2) * lambda)));

    SymbolMap psi2(0);
    psi2[0] = TriPoly::monomial({0, 2, 0}, GaussRational(1)); // zeta_2^2
    CHECK(m_scalar(lambda, psi2)[0] == GaussRational(-2) * TriPoly::variable(0));
}

TEST_CASE("scalar operator is T-saturated to S_l^{lambda-1}") {
    // Q2 * D(T_l g) = zeta_1 * T_l(S_l^{lambda-1} g) pins the operator,
    // including the order of the Euler factor.
    for (const auto& lambda : {Rational(1, 2), Rational(-1), Rational(2, 3)})
        for (long long ell = 0; ell <= 8; ++ell)
            for (int trial = 0; trial < 3; ++trial) {
                UniPoly g = random_even(ell);
                SymbolMap psi(0);
                psi[0] = t_map(ell, g);
                TriPoly lhs = q2_poly() * m_scalar(lambda, psi)[0];
                TriPoly rhs = TriPoly::variable(0) *
                              t_map(ell, s_operator({lambda - Rational(1), ell}, g));
                CHECK(lhs == rhs);
            }
}

TEST_CASE("m_vect pinned values") {
    SymbolMap psi0(0);
    psi0[0] = random_homogeneous(3);
    CHECK(m_vect(psi0).is_zero());

    SymbolMap psi(1);
    psi[0] = TriPoly::variable(1); // zeta_2
    SymbolMap out = m_vect(psi);
    CHECK(out[0] == TriPoly::constant(GaussRational(Rational(0), Rational(-2))));
    CHECK(out[1].is_zero());
    CHECK(out[2].is_zero());

    SymbolMap psi2(1);
    psi2[1] = TriPoly::variable(2); // zeta_3
    SymbolMap out2 = m_vect(psi2);
    CHECK(out2[0] == TriPoly::constant(GaussRational(2)));
    CHECK(out2[1].is_zero());
    CHECK(out2[2] == TriPoly::constant(GaussRational(-2)));
}

TEST_CASE("closed formula equals scalar + vector decomposition") {
    for (int big_n = 0; big_n <= 2; ++big_n)
        for (long long m : {static_cast<long long>(big_n), static_cast<long long>(big_n) + 1})
            for (long long a = 0; a <= 5; ++a)
                for (int trial = 0; trial < 6; ++trial) {
                    Rational lambda(static_cast<long long>(rng() % 9) - 4,
                                    static_cast<long long>(rng() % 3) + 1);
                    auto g = random_gmap(big_n, m, a);
                    SymbolMap psi = assemble_psi(lambda, a, big_n, m, Sign::Plus, g);
                    SymbolMap direct(big_n);
                    SymbolMap ms = m_scalar(lambda, psi);
                    SymbolMap mv = m_vect(psi);
                    for (int s = 0; s < direct.size(); ++s)
                        direct[s] = ms[s] + mv[s];
                    CHECK(m_closed_form(lambda, a, big_n, m, g) == direct);
                }
    CHECK_THROWS_AS(m_closed_form(Rational(1), 2, 2, 1, {}), std::domain_error);
}

TEST_CASE("closed formula annihilates the closed-form solution") {
    for (int big_n = 0; big_n <= 2; ++big_n)
        for (long long a = 0; a <= 5; ++a)
            for (const auto& lambda : {Rational(1, 2), Rational(-3, 2)}) {
                GVector g = closed_solution(lambda, a, big_n);
                CHECK(m_closed_form(lambda, a, big_n, big_n, g.entries).is_zero());
            }
}

TEST_CASE("closed formula on a lone constant g_m at a = m") {
    // every T_{a-k-2} block has negative index there, so only the trailing
    // T_{a-k} block can contribute
    int big_n = 2;
    long long m = 3, a = 3;
    GaussRational c(Rational(4, 9));
    std::map<long long, UniPoly> g{{m, UniPoly::constant(c)}};
    SymbolMap out = m_closed_form(Rational(5, 7), a, big_n, m, g);
    GaussRational mid(Rational(2 * m, 1) * (Rational(5, 7) + Rational(a - 1, 1)));
    TriPoly expect = zeta_linear_power(static_cast<int>(m - 1), 1) *
                     TriPoly::constant(mid * c);
    for (int s = 0; s < out.size(); ++s) {
        if (s == big_n)
            CHECK(out[s] == expect);
        else
            CHECK(out[s].is_zero());
    }
}

TEST_CASE("invariant polynomial decomposition") {
    // z1^2 p1 + z2^2 p2 + z1 z2 p3 + p4 = 0  iff  p1 = p2, p3 = 0, Q2 p1 + p4 = 0
    for (int trial = 0; trial < 12; ++trial) {
        long long ell = 2 + 2 * static_cast<long long>(rng() % 3);
        TriPoly p1 = t_map(ell, random_even(ell));
        TriPoly z1sq = TriPoly::monomial({2, 0, 0}, GaussRational(1));
        TriPoly z2sq = TriPoly::monomial({0, 2, 0}, GaussRational(1));
        TriPoly z1z2 = TriPoly::monomial({1, 1, 0}, GaussRational(1));
        // impose (ii): combination vanishes
        TriPoly combo = z1sq * p1 + z2sq * p1 - q2_poly() * p1;
        CHECK(combo.is_zero());
        // violate (ii): p3 nonzero invariant
        TriPoly p3 = t_map(ell, random_even(ell));
        if (!p3.is_zero())
            CHECK_FALSE((z1sq * p1 + z2sq * p1 + z1z2 * p3 - q2_poly() * p1).is_zero());
        // violate p1 = p2
        TriPoly p2 = p1 + t_map(ell, UniPoly::monomial(static_cast<int>(ell),
                                                       GaussRational(1)));
        CHECK_FALSE((z1sq * p1 + z2sq * p2 - q2_poly() * p1).is_zero());
    }
}

TEST_CASE("residual of the closed-form solution vanishes") {
    for (int big_n = 0; big_n <= 2; ++big_n)
        for (long long a = 0; a <= 5; ++a)
            for (const auto& lambda : {Rational(1), Rational(1, 2), Rational(-3, 2)}) {
                GVector g = closed_solution(lambda, a, big_n);
                SymbolMap psi = assemble_psi(lambda, a, big_n, big_n, Sign::Plus,
                                             g.entries);
                Rational nu = lambda + Rational(a, 1);
                CHECK(fsystem_residual(lambda, nu, big_n, big_n, psi).is_zero());
                // bumping one coefficient stays a solution exactly when the
                // bumped tuple is still proportional to the kernel vector
                if (!g.entries.empty()) {
                    auto entries = g.entries;
                    auto& [k0, p0] = *entries.begin();
                    int d0 = p0.degree();
                    p0.set_coeff(d0, p0.coeff(d0) + GaussRational(1));
                    GVector bumped_g;
                    bumped_g.big_n = big_n;
                    bumped_g.m = big_n;
                    bumped_g.a = a;
                    for (const auto& [k, p] : entries)
                        bumped_g.set_entry(k, p);
                    Vec flat_g, flat_b;
                    for (long long k = 0; k <= 2 * big_n; ++k)
                        for (long long d = a - k; d >= 0; --d) {
                            flat_g.push_back(g.entry(k).coeff(static_cast<int>(d)));
                            flat_b.push_back(bumped_g.entry(k).coeff(static_cast<int>(d)));
                        }
                    SymbolMap bumped = assemble_psi(lambda, a, big_n, big_n,
                                                    Sign::Plus, entries);
                    bool still_solution =
                        fsystem_residual(lambda, nu, big_n, big_n, bumped).is_zero();
                    CHECK(still_solution == proportional(flat_b, flat_g));
                }
            }
    // degree gate
    SymbolMap psi(0);
    psi[0] = TriPoly::constant(GaussRational(1));
    CHECK_THROWS_AS(fsystem_residual(Rational(0), Rational(1), 0, 0, psi),
                    std::domain_error);
    CHECK_THROWS_AS(fsystem_residual(Rational(0), Rational(-1), 0, 0, psi),
                    std::domain_error);
}

TEST_CASE("so2 weight check") {
    for (int big_n = 0; big_n <= 2; ++big_n)
        for (long long m : {static_cast<long long>(big_n), static_cast<long long>(big_n) + 2})
            for (long long a = 0; a <= 4; ++a) {
                auto g = random_gmap(big_n, m, a);
                SymbolMap psi = assemble_psi(Rational(1), a, big_n, m, Sign::Plus, g);
                CHECK(so2_weight_check(big_n, m, psi));
            }
    // zero map passes
    CHECK(so2_weight_check(2, 2, SymbolMap(2)));
    // a zeta_3-only monomial has rotation weight 0; slot s = 1 at N = m = 1
    // requires weight m - (N - s) = 1
    SymbolMap bad(1);
    bad[1] = TriPoly::monomial({0, 0, 2}, GaussRational(1));
    CHECK_FALSE(so2_weight_check(1, 1, bad));
    // the same monomial in slot 0 carries the required weight 0
    SymbolMap ok(1);
    ok[0] = TriPoly::monomial({0, 0, 2}, GaussRational(1));
    CHECK(so2_weight_check(1, 1, ok));
    // every harmonic power placed against the wrong slot fails
    for (int big_n = 1; big_n <= 2; ++big_n)
        for (long long m = big_n; m <= big_n + 1; ++m)
            for (long long k : k_set(big_n, m)) {
                int right = static_cast<int>(big_n + k - m);
                for (int s = 0; s <= 2 * big_n; ++s) {
                    SymbolMap probe(big_n);
                    probe[s] = zeta_linear_power(static_cast<int>(k), 1);
                    CHECK(so2_weight_check(big_n, m, probe) == (s == right));
                }
            }
}

TEST_CASE("phi involution") {
    for (int trial = 0; trial < 10; ++trial) {
        int big_n = static_cast<int>(rng() % 3);
        SymbolMap psi(big_n);
        for (int s = 0; s < psi.size(); ++s)
            psi[s] = random_homogeneous(3);
        CHECK(phi_involution(phi_involution(psi)) == psi);
        // intertwines with the residual operator componentwise
        SymbolMap lhs = phi_involution(fsystem_residual(Rational(2, 3),
                                                        Rational(2, 3) + Rational(3),
                                                        big_n, big_n, psi));
        SymbolMap rhs = fsystem_residual(Rational(2, 3), Rational(2, 3) + Rational(3),
                                         big_n, -big_n, phi_involution(psi));
        CHECK(lhs == rhs);
    }
    // N = 0: plain zeta_2 sign flip
    SymbolMap p(0);
    p[0] = random_homogeneous(4);
    CHECK(phi_involution(p)[0] == p[0].negate_var2());
    // Phi(psi^+((g_k))) = psi^-(((-1)^{k-p+N} g_k))
    for (long long a = 0; a <= 4; ++a) {
        int big_n = 1;
        long long p_val = 2; // m = -2 on the minus side
        auto g = random_gmap(big_n, p_val, a);
        SymbolMap plus = assemble_psi(Rational(1), a, big_n, p_val, Sign::Plus, g);
        std::map<long long, UniPoly> flipped;
        for (const auto& [k, gk] : g) {
            UniPoly q = gk;
            if ((k - p_val + big_n) % 2 != 0)
                q = GaussRational(-1) * q;
            flipped[k] = q;
        }
        SymbolMap minus = assemble_psi(Rational(1), a, big_n, -p_val, Sign::Minus,
                                       flipped);
        CHECK(phi_involution(plus) == minus);
        CHECK(so2_weight_check(big_n, -p_val, minus));
    }
}
