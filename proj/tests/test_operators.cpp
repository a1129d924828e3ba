#include <catch2/catch_amalgamated.hpp>

#include "drum/hearing.hpp"
#include "drum/operators.hpp"
#include "drum/random.hpp"
#include "drum/refine.hpp"

using namespace drum;
using exact::Int;
using exact::Rat;

namespace {

Complex refined_path() { return barycentric_refine(fixtures::path_complex()); }

IntegerMatrix from_rows(const std::vector<std::vector<int>>& rows) {
    IntegerMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
    return m;
}

const IntegerMatrix kPathL = from_rows({{1, 0, 0, 0, 0, 1, 0, 0, 0},
                                        {0, 1, 0, 0, 0, 0, 1, 1, 0},
                                        {0, 0, 1, 0, 0, 0, 0, 0, 1},
                                        {0, 0, 0, 1, 0, 1, 1, 0, 0},
                                        {0, 0, 0, 0, 1, 0, 0, 1, 1},
                                        {1, 0, 0, 1, 0, 1, 1, 0, 0},
                                        {0, 1, 0, 1, 0, 1, 1, 1, 0},
                                        {0, 1, 0, 0, 1, 0, 1, 1, 1},
                                        {0, 0, 1, 0, 1, 0, 0, 1, 1}});

const IntegerMatrix kPathD = from_rows({{0, 0, 0, 0, 0, -1, 0, 0, 0},
                                        {0, 0, 0, 0, 0, 0, -1, -1, 0},
                                        {0, 0, 0, 0, 0, 0, 0, 0, -1},
                                        {0, 0, 0, 0, 0, 1, 1, 0, 0},
                                        {0, 0, 0, 0, 0, 0, 0, 1, 1},
                                        {-1, 0, 0, 1, 0, 0, 0, 0, 0},
                                        {0, -1, 0, 1, 0, 0, 0, 0, 0},
                                        {0, -1, 0, 0, 1, 0, 0, 0, 0},
                                        {0, 0, -1, 0, 1, 0, 0, 0, 0}});

const IntegerMatrix kPathH = from_rows({{1, 0, 0, -1, 0, 0, 0, 0, 0},
                                        {0, 2, 0, -1, -1, 0, 0, 0, 0},
                                        {0, 0, 1, 0, -1, 0, 0, 0, 0},
                                        {-1, -1, 0, 2, 0, 0, 0, 0, 0},
                                        {0, -1, -1, 0, 2, 0, 0, 0, 0},
                                        {0, 0, 0, 0, 0, 2, 1, 0, 0},
                                        {0, 0, 0, 0, 0, 1, 2, 1, 0},
                                        {0, 0, 0, 0, 0, 0, 1, 2, 1},
                                        {0, 0, 0, 0, 0, 0, 0, 1, 2}});

const IntegerMatrix kPathG = from_rows({{0, 0, 0, -1, 0, 1, 0, 0, 0},
                                        {0, -1, 0, -1, -1, 0, 1, 1, 0},
                                        {0, 0, 0, 0, -1, 0, 0, 0, 1},
                                        {-1, -1, 0, -1, 0, 1, 1, 0, 0},
                                        {0, -1, -1, 0, -1, 0, 0, 1, 1},
                                        {1, 0, 0, 1, 0, -1, 0, 0, 0},
                                        {0, 1, 0, 1, 0, 0, -1, 0, 0},
                                        {0, 1, 0, 0, 1, 0, 0, -1, 0},
                                        {0, 0, 1, 0, 1, 0, 0, 0, -1}});

const IntegerMatrix kPathLmG = from_rows({{1, 0, 0, 1, 0, 0, 0, 0, 0},
                                          {0, 2, 0, 1, 1, 0, 0, 0, 0},
                                          {0, 0, 1, 0, 1, 0, 0, 0, 0},
                                          {1, 1, 0, 2, 0, 0, 0, 0, 0},
                                          {0, 1, 1, 0, 2, 0, 0, 0, 0},
                                          {0, 0, 0, 0, 0, 2, 1, 0, 0},
                                          {0, 0, 0, 0, 0, 1, 2, 1, 0},
                                          {0, 0, 0, 0, 0, 0, 1, 2, 1},
                                          {0, 0, 0, 0, 0, 0, 0, 1, 2}});

std::vector<Complex> mixed_test_complexes() {
    std::vector<Complex> out = {fixtures::path_complex(),
                                Complex::generate({{1, 2, 3}}),
                                refined_path(),
                                barycentric_refine(fixtures::cycle_complex(3))};
    for (uint64_t seed = 1; seed <= 6; ++seed) out.push_back(random_complex(6, 10, seed));
    return out;
}

}  // namespace

TEST_CASE("connection matrix") {
    REQUIRE(connection_matrix(refined_path()) == kPathL);
    REQUIRE(connection_matrix(Complex::generate({{1}})) == IntegerMatrix::identity(1));
    REQUIRE(connection_matrix(Complex::generate({{1}, {2}})) ==
            IntegerMatrix::identity(2));
    SECTION("symmetric 0/1 with unit diagonal") {
        Complex K = random_complex(6, 10, 4);
        IntegerMatrix L = connection_matrix(K);
        REQUIRE(L.is_symmetric());
        for (int i = 0; i < L.rows(); ++i) {
            REQUIRE(L(i, i) == 1);
            for (int j = 0; j < L.cols(); ++j)
                REQUIRE((L(i, j) == 0 || L(i, j) == 1));
        }
    }
}

TEST_CASE("green star matrix") {
    REQUIRE(green_star_matrix(refined_path()) == kPathG);
    REQUIRE(green_star_matrix(Complex::generate({{1}})) == IntegerMatrix::identity(1));
    SECTION("diagonal entries are star characteristics") {
        for (const auto& K : mixed_test_complexes()) {
            IntegerMatrix g = green_star_matrix(K);
            for (int i = 0; i < K.size(); ++i)
                REQUIRE(g(i, i) == Int(star(K, K.simplex(i)).euler_characteristic()));
        }
    }
    SECTION("g(x,x) == 1 - chi(S(x))") {
        for (const auto& K : mixed_test_complexes()) {
            IntegerMatrix g = green_star_matrix(K);
            for (int i = 0; i < K.size(); ++i)
                REQUIRE(g(i, i) ==
                        Int(1 - sphere_euler_characteristic(K, K.simplex(i))));
        }
    }
    SECTION("equals the exact inverse of L on every complex") {
        for (const auto& K : mixed_test_complexes()) {
            auto rep = green_star_check(K);
            INFO(K.size() << " simplices");
            REQUIRE(rep.passed);
        }
    }
}

TEST_CASE("exterior derivative") {
    SECTION("path fixture Dirac matrix, both blocks") {
        IntegerMatrix d = exterior_derivative(refined_path());
        REQUIRE(d + d.transpose() == kPathD);
    }
    SECTION("a single point has zero derivative") {
        REQUIRE(exterior_derivative(Complex::generate({{1}})) == IntegerMatrix(1, 1));
    }
    SECTION("one edge: exactly two nonzeros, -1 and +1") {
        Complex K = Complex::generate({{1, 2}});
        IntegerMatrix d = exterior_derivative(K);
        // canonical order {1},{2},{1,2}; the face {2} drops vertex 1 at
        // position 0 (+1), the face {1} drops vertex 2 at position 1 (-1)
        REQUIRE(d(2, 0) == -1);
        REQUIRE(d(2, 1) == 1);
        int nonzeros = 0;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                if (d(i, j) != 0) ++nonzeros;
        REQUIRE(nonzeros == 2);
    }
    SECTION("d composed with d vanishes") {
        for (const auto& K : mixed_test_complexes()) {
            IntegerMatrix d = exterior_derivative(K);
            REQUIRE(d * d == IntegerMatrix(K.size(), K.size()));
        }
    }
}

TEST_CASE("dirac and hodge") {
    SECTION("path fixture H with its two blocks") {
        auto dh = dirac_and_hodge(refined_path());
        REQUIRE(dh.hodge == kPathH);
        REQUIRE(dh.blocks.size() == 2);
        REQUIRE(dh.blocks[0] == kPathH.block(0, 0, 5, 5));
        REQUIRE(dh.blocks[1] == kPathH.block(5, 5, 4, 4));
    }
    SECTION("a point has H = [0]") {
        auto dh = dirac_and_hodge(Complex::generate({{1}}));
        REQUIRE(dh.hodge == IntegerMatrix(1, 1));
    }
    SECTION("H0 of a cycle is the Kirchhoff matrix formed directly") {
        Complex c4 = fixtures::cycle_complex(4);
        auto dh = dirac_and_hodge(c4);
        // degree matrix minus adjacency, built from scratch
        IntegerMatrix expect(4, 4);
        for (int i = 0; i < 4; ++i) expect(i, i) = 2;
        auto edge = [&](int a, int b) {
            expect(a, b) = -1;
            expect(b, a) = -1;
        };
        edge(0, 1); edge(1, 2); edge(2, 3); edge(0, 3);
        REQUIRE(dh.blocks[0] == expect);
    }
    SECTION("H equals the square of the Dirac matrix and respects grading") {
        for (const auto& K : mixed_test_complexes()) {
            auto dh = dirac_and_hodge(K);
            REQUIRE(dh.hodge == dh.dirac * dh.dirac);
            REQUIRE(dh.dirac.is_symmetric());
            for (int i = 0; i < K.size(); ++i) {
                REQUIRE(dh.dirac(i, i) == 0);
                for (int j = 0; j < K.size(); ++j)
                    if (K.simplex(i).dim() != K.simplex(j).dim())
                        REQUIRE(dh.hodge(i, j) == 0);
            }
        }
    }
}

TEST_CASE("hydrogen operator") {
    REQUIRE(hydrogen_matrix(refined_path()) == kPathLmG);
    REQUIRE(hydrogen_matrix(Complex::generate({{1}})) == IntegerMatrix(1, 1));
    SECTION("refined C4 has all row sums 4") {
        Complex K = barycentric_refine(fixtures::cycle_complex(4));
        IntegerMatrix lmg = hydrogen_matrix(K);
        for (int i = 0; i < lmg.rows(); ++i) {
            Int row = 0;
            for (int j = 0; j < lmg.cols(); ++j) row += lmg(i, j);
            REQUIRE(row == 4);
        }
    }
    SECTION("(L-g)^2 + 2 == L^2 + g^2 in any dimension") {
        for (const auto& K : mixed_test_complexes()) {
            IntegerMatrix L = connection_matrix(K);
            IntegerMatrix g = green_star_matrix(K);
            IntegerMatrix lmg = L - g;
            IntegerMatrix two = IntegerMatrix::identity(K.size());
            two = Int(2) * two;
            REQUIRE(lmg * lmg + two == L * L + g * g);
        }
    }
}

TEST_CASE("hydrogen conjugator") {
    SECTION("path fixture: the exact sign pattern and the exact identity") {
        Complex K = refined_path();
        IntegerMatrix R = hydrogen_conjugator(K);
        std::vector<int> expect_diag = {-1, -1, -1, 1, 1, 1, 1, 1, 1};
        for (int i = 0; i < 9; ++i) REQUIRE(R(i, i) == expect_diag[i]);
        REQUIRE(R * R == IntegerMatrix::identity(9));
        REQUIRE(R * kPathLmG * R == kPathH);
    }
    SECTION("refined C6 runs the full pipeline") {
        Complex K = barycentric_refine(fixtures::cycle_complex(6));
        IntegerMatrix R = hydrogen_conjugator(K);
        REQUIRE(R * hydrogen_matrix(K) * R == dirac_and_hodge(K).hodge);
    }
    SECTION("requires refinement metadata") {
        REQUIRE_THROWS_MATCHES(hydrogen_conjugator(fixtures::path_complex()), error,
                               Catch::Matchers::Predicate<error>([](const error& e) {
                                   return e.code() == errc::needs_refinement_context;
                               }));
        // refinement of a 2-dimensional complex is not enough
        Complex tri_ref = barycentric_refine(Complex::generate({{1, 2, 3}}));
        REQUIRE_THROWS_AS(hydrogen_conjugator(tri_ref), error);
    }
}

TEST_CASE("wu operators") {
    SECTION("one point") {
        auto ops = wu_matrix(Complex::generate({{1}}));
        REQUIRE(ops.M == IntegerMatrix::identity(1));
        REQUIRE(ops.Y.has_value());
        REQUIRE(*ops.Y == IntegerMatrix(1, 1));
    }
    SECTION("M and h are the omega conjugations of L and g") {
        for (const auto& K : mixed_test_complexes()) {
            auto ops = wu_matrix(K);
            IntegerMatrix omega(K.size(), K.size());
            for (int i = 0; i < K.size(); ++i) omega(i, i) = K.simplex(i).omega();
            REQUIRE(ops.M == omega * connection_matrix(K) * omega);
            REQUIRE(ops.h == omega * green_star_matrix(K) * omega);
            REQUIRE(ops.M.entry_sum() == Int(wu_characteristic(K)));
        }
    }
    SECTION("energy bookkeeping on the refined path fixture") {
        Complex K = refined_path();
        auto ops = wu_matrix(K);
        Int chi = euler_characteristic(K);
        Int wu = wu_characteristic(K);
        REQUIRE(chi == 1);
        REQUIRE(wu == -1);
        REQUIRE(ops.Y.has_value());
        // sum(Y) carries chi - wu; sum(M - g) carries wu - chi
        REQUIRE(ops.Y->entry_sum() == chi - wu);
        REQUIRE((ops.M - green_star_matrix(K)).entry_sum() == wu - chi);
    }
    SECTION("Y exists for 1-dim complexes even without refinement") {
        auto ops = wu_matrix(fixtures::cycle_complex(3));
        REQUIRE(ops.Y.has_value());
    }
    SECTION("Y is undefined when L-g mixes dimensions") {
        Complex tri = Complex::generate({{1, 2, 3}});
        REQUIRE_FALSE(wu_matrix(tri).Y.has_value());
        REQUIRE_THROWS_MATCHES(y_operator(tri), error,
                               Catch::Matchers::Predicate<error>([](const error& e) {
                                   return e.code() == errc::y_not_defined;
                               }));
    }
}

TEST_CASE("verification checks on operators") {
    SECTION("gauss-bonnet holds on fixtures and random complexes") {
        REQUIRE(gauss_bonnet_check(Complex::generate({{1}})).passed);
        REQUIRE(gauss_bonnet_check(Complex::generate({{1, 2, 3}})).passed);
        for (uint64_t seed = 1; seed <= 3; ++seed)
            REQUIRE(gauss_bonnet_check(random_complex(7, 15, seed)).passed);
    }
    SECTION("unimodularity holds everywhere") {
        for (const auto& K : mixed_test_complexes())
            REQUIRE(unimodularity_check(K).passed);
    }
    SECTION("energy identities hold everywhere") {
        for (const auto& K : mixed_test_complexes())
            REQUIRE(energy_check(K).passed);
    }
    SECTION("the four-case lemma holds on 1-dim refinements") {
        for (uint64_t seed = 1; seed <= 5; ++seed) {
            Complex base = random_graph_complex(5, 4 + static_cast<int>(seed % 3), seed);
            REQUIRE(green_lemma_check(barycentric_refine(base)).passed);
        }
        // and reports a precondition failure otherwise
        REQUIRE_FALSE(green_lemma_check(fixtures::path_complex()).passed);
    }
}

TEST_CASE("operator bundle") {
    SECTION("refinement of a 1-dim complex carries R") {
        auto b = OperatorBundle::build(refined_path());
        REQUIRE(b.R.has_value());
        REQUIRE(b.L == kPathL);
        REQUIRE(b.g == kPathG);
        REQUIRE(b.D == kPathD);
        REQUIRE(b.H == kPathH);
        REQUIRE(b.blocks.size() == 2);
        REQUIRE(b.L * b.g == IntegerMatrix::identity(9));
    }
    SECTION("other complexes do not") {
        REQUIRE_FALSE(OperatorBundle::build(fixtures::path_complex()).R.has_value());
        Complex tri_ref = barycentric_refine(Complex::generate({{1, 2, 3}}));
        REQUIRE_FALSE(OperatorBundle::build(tri_ref).R.has_value());
    }
}
