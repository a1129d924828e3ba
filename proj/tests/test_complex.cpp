#include <catch2/catch_amalgamated.hpp>

#include "drum/complex.hpp"
#include "drum/random.hpp"
#include "drum/refine.hpp"

using namespace drum;

namespace {

std::vector<std::vector<int>> simplex_lists(const Complex& K) {
    std::vector<std::vector<int>> out;
    for (const auto& x : K.simplices()) out.push_back(x.vertices());
    return out;
}

}  // namespace

TEST_CASE("generate builds the downward closure in canonical order") {
    SECTION("triangle boundary") {
        Complex K = Complex::generate({{1, 2}, {2, 3}, {3, 1}});
        REQUIRE(simplex_lists(K) == std::vector<std::vector<int>>{
                                        {1}, {2}, {3}, {1, 2}, {1, 3}, {2, 3}});
    }
    SECTION("one point") {
        Complex K = Complex::generate({{1}});
        REQUIRE(simplex_lists(K) == std::vector<std::vector<int>>{{1}});
    }
    SECTION("full triangle has all 7 nonempty subsets") {
        Complex K = Complex::generate({{1, 2, 3}});
        REQUIRE(K.size() == 7);
        REQUIRE(K.f_vector() == std::vector<int>{3, 3, 1});
    }
    SECTION("idempotent") {
        Complex K = Complex::generate({{1, 2}, {2, 3}, {3, 1}, {5}});
        std::vector<std::vector<int>> again = simplex_lists(K);
        REQUIRE(Complex::generate(again) == K);
    }
    SECTION("input order does not matter") {
        Complex a = Complex::generate({{3, 1}, {2, 3}, {1, 2}});
        Complex b = Complex::generate({{1, 2}, {2, 3}, {1, 3}});
        REQUIRE(a == b);
    }
    SECTION("errors") {
        REQUIRE_THROWS_MATCHES(Complex::generate({}), error,
                               Catch::Matchers::Predicate<error>([](const error& e) {
                                   return e.code() == errc::empty_input;
                               }));
        REQUIRE_THROWS_MATCHES(Complex::generate({{0, 2}}), error,
                               Catch::Matchers::Predicate<error>([](const error& e) {
                                   return e.code() == errc::bad_vertex;
                               }));
        REQUIRE_THROWS_AS(Complex::generate({{1}, {}}), error);
    }
}

TEST_CASE("euler characteristic") {
    Complex path = Complex::generate({{1, 2}, {2, 3}});
    REQUIRE(euler_characteristic(path) == 1);

    Complex triangle = Complex::generate({{1, 2, 3}});
    REQUIRE(euler_characteristic(triangle) == 1);

    SimplexSet not_closed({Simplex{1}, Simplex{1, 2}});
    REQUIRE(euler_characteristic(not_closed) == 0);
}

TEST_CASE("star and core") {
    Complex path = Complex::generate({{1, 2}, {2, 3}});
    Complex triangle = Complex::generate({{1, 2, 3}});

    SECTION("star of a vertex in the path") {
        SimplexSet s = star(path, Simplex{2});
        REQUIRE(s == SimplexSet({Simplex{2}, Simplex{1, 2}, Simplex{2, 3}}));
    }
    SECTION("star of a maximal simplex is itself") {
        REQUIRE(star(path, Simplex{1, 2}) == SimplexSet({Simplex{1, 2}}));
    }
    SECTION("star of an edge in the full triangle") {
        REQUIRE(star(triangle, Simplex{1, 2}) ==
                SimplexSet({Simplex{1, 2}, Simplex{1, 2, 3}}));
    }
    SECTION("core is the complete complex below, chi 1") {
        SimplexSet c = core(triangle, Simplex{1, 2});
        REQUIRE(c == SimplexSet({Simplex{1}, Simplex{2}, Simplex{1, 2}}));
        REQUIRE(c.euler_characteristic() == 1);
        REQUIRE(core(triangle, Simplex{1}) == SimplexSet({Simplex{1}}));
        SimplexSet full = core(triangle, Simplex{1, 2, 3});
        REQUIRE(full.size() == 7);
        REQUIRE(full.euler_characteristic() == 1);
    }
    SECTION("membership is required") {
        REQUIRE_THROWS_MATCHES(star(path, Simplex{7}), error,
                               Catch::Matchers::Predicate<error>([](const error& e) {
                                   return e.code() == errc::not_a_simplex;
                               }));
        REQUIRE_THROWS_AS(core(path, Simplex{1, 3}), error);
    }
    SECTION("chi(core) == 1 always") {
        for (uint64_t seed = 1; seed <= 10; ++seed) {
            Complex K = random_complex(6, 10, seed);
            for (const auto& x : K.simplices())
                REQUIRE(core(K, x).euler_characteristic() == 1);
        }
    }
}

TEST_CASE("barycentric refinement") {
    SECTION("path complex becomes the fixed 9-simplex complex") {
        Complex ref = barycentric_refine(Complex::generate({{1, 2}, {2, 3}}));
        REQUIRE(simplex_lists(ref) ==
                std::vector<std::vector<int>>{{1}, {2}, {3}, {4}, {5},
                                              {1, 4}, {2, 4}, {2, 5}, {3, 5}});
        REQUIRE(ref.is_refinement());
        REQUIRE(ref.origin_dims() == std::vector<int>{0, 0, 0, 1, 1});
    }
    SECTION("a point refines to itself") {
        Complex ref = barycentric_refine(Complex::generate({{1}}));
        REQUIRE(simplex_lists(ref) == std::vector<std::vector<int>>{{1}});
    }
    SECTION("full triangle refines to the Whitney complex, f = (7,12,6)") {
        Complex ref = barycentric_refine(Complex::generate({{1, 2, 3}}));
        REQUIRE(ref.f_vector() == std::vector<int>{7, 12, 6});
    }
    SECTION("chi is invariant under refinement of a complex") {
        for (uint64_t seed = 1; seed <= 8; ++seed) {
            Complex K = random_complex(5, 8, seed);
            REQUIRE(euler_characteristic(barycentric_refine(K)) ==
                    euler_characteristic(K));
        }
    }
    SECTION("chi invariance fails for a non-closed simplex set") {
        // {{1},{1,2}} has chi 0, its inclusion graph is a single edge with chi 1
        SimplexSet a({Simplex{1}, Simplex{1, 2}});
        REQUIRE(a.euler_characteristic() == 0);
        Complex edge = Complex::generate({{1, 2}});
        REQUIRE(euler_characteristic(edge) == 1);
    }
    SECTION("non-refinement complexes carry no metadata") {
        Complex K = Complex::generate({{1, 2}});
        REQUIRE_FALSE(K.is_refinement());
        REQUIRE_THROWS_MATCHES(K.origin_dims(), error,
                               Catch::Matchers::Predicate<error>([](const error& e) {
                                   return e.code() == errc::needs_refinement_context;
                               }));
    }
}

TEST_CASE("components and cycles") {
    SECTION("the Lemma 3 tree") {
        Complex K = Complex::generate({{1, 2}, {1, 3}, {2, 6}, {2, 7}, {6, 8}, {7, 4},
                                       {4, 5}});
        auto cc = components_and_cycles(K);
        REQUIRE(cc.b0 == 1);
        REQUIRE(cc.b1 == 0);
    }
    SECTION("the Lemma 3 cycle plus edge") {
        Complex K = Complex::generate({{1, 2}, {1, 5}, {1, 7}, {2, 8}, {5, 6}, {8, 6},
                                       {3, 4}});
        auto cc = components_and_cycles(K);
        REQUIRE(cc.b0 == 2);
        REQUIRE(cc.b1 == 1);
    }
    SECTION("single vertex") {
        auto cc = components_and_cycles(Complex::generate({{1}}));
        REQUIRE(cc.b0 == 1);
        REQUIRE(cc.b1 == 0);
    }
    SECTION("two-dimensional input is rejected") {
        REQUIRE_THROWS_MATCHES(components_and_cycles(Complex::generate({{1, 2, 3}})),
                               error,
                               Catch::Matchers::Predicate<error>([](const error& e) {
                                   return e.code() == errc::not_one_dimensional;
                               }));
    }
}

TEST_CASE("wu characteristic") {
    REQUIRE(wu_characteristic(Complex::generate({{1}})) == 1);
    // C3: 6 self pairs, 12 vertex-edge pairs, 6 edge-edge pairs
    REQUIRE(wu_characteristic(Complex::generate({{1, 2}, {2, 3}, {1, 3}})) == 0);
    // path complex, pinned by the direct double loop:
    // 5 self pairs, 8 incident vertex-edge pairs, 2 edge-edge pairs
    REQUIRE(wu_characteristic(Complex::generate({{1, 2}, {2, 3}})) == -1);
    REQUIRE(wu_characteristic(Complex::generate({{1, 2, 3}})) == 1);
}

TEST_CASE("zagreb index") {
    REQUIRE(zagreb_index(Complex::generate({{1, 2}, {2, 3}, {1, 3}})) == 12);
    REQUIRE(zagreb_index(Complex::generate({{1, 2}, {2, 3}})) == 6);
    REQUIRE(zagreb_index(Complex::generate({{1, 2}, {1, 3}, {1, 4}, {1, 5}})) == 20);
    REQUIRE_THROWS_AS(zagreb_index(Complex::generate({{1, 2, 3}})), error);
}

TEST_CASE("random complexes") {
    SECTION("smallest case is forced") {
        REQUIRE(random_complex(1, 1, 123) == Complex::generate({{1}}));
    }
    SECTION("results are downward closed") {
        for (uint64_t seed = 1; seed <= 10; ++seed) {
            Complex K = random_complex(7, 15, seed);
            for (const auto& x : K.simplices()) {
                // removing any single vertex stays inside; closure follows
                if (x.dim() == 0) continue;
                for (int v : x.vertices()) {
                    std::vector<int> face;
                    for (int u : x.vertices())
                        if (u != v) face.push_back(u);
                    REQUIRE(K.contains(Simplex(face)));
                }
            }
        }
    }
    SECTION("deterministic for a fixed seed") {
        REQUIRE(random_complex(7, 15, 9) == random_complex(7, 15, 9));
        // regression fixture pinned from the documented splitmix64 draw rule
        Complex K = random_complex(4, 6, 42);
        REQUIRE(simplex_lists(K) ==
                std::vector<std::vector<int>>{{1}, {2}, {3}, {4}, {1, 2}, {1, 3},
                                              {2, 3}, {3, 4}, {1, 2, 3}});
    }
    SECTION("parameter validation") {
        REQUIRE_THROWS_MATCHES(random_complex(0, 1, 1), error,
                               Catch::Matchers::Predicate<error>([](const error& e) {
                                   return e.code() == errc::bad_parameter;
                               }));
        REQUIRE_THROWS_AS(random_complex(3, 0, 1), error);
    }
    SECTION("random graph complex has the requested counts") {
        Complex K = random_graph_complex(6, 7, 3);
        REQUIRE(K.f_vector() == std::vector<int>{6, 7});
        REQUIRE_THROWS_AS(random_graph_complex(3, 9, 1), error);
    }
    SECTION("random tree complex is a tree") {
        for (uint64_t seed = 1; seed <= 5; ++seed) {
            auto cc = components_and_cycles(random_tree_complex(8, seed));
            REQUIRE(cc.b0 == 1);
            REQUIRE(cc.b1 == 0);
        }
    }
}

TEST_CASE("homoclinic identity: chi(star cap core) == omega") {
    std::vector<Complex> complexes = {Complex::generate({{1, 2}, {2, 3}}),
                                      Complex::generate({{1, 2, 3}})};
    for (uint64_t seed = 1; seed <= 8; ++seed)
        complexes.push_back(random_complex(6, 10, seed));
    for (const auto& K : complexes) {
        for (const auto& x : K.simplices()) {
            SimplexSet both = star(K, x).intersect(core(K, x));
            REQUIRE(both == SimplexSet({x}));
            REQUIRE(both.euler_characteristic() == x.omega());
        }
    }
}

TEST_CASE("star formula: 1 - chi(S(x)) == chi(St(x))") {
    std::vector<Complex> complexes = {
        Complex::generate({{1, 2}, {2, 3}}),
        Complex::generate({{1, 2, 3}}),
        barycentric_refine(Complex::generate({{1, 2}, {2, 3}}))};
    for (uint64_t seed = 1; seed <= 6; ++seed)
        complexes.push_back(random_complex(5, 9, seed));
    for (const auto& K : complexes) {
        for (const auto& x : K.simplices()) {
            long long sphere_chi = sphere_euler_characteristic(K, x);
            REQUIRE(1 - sphere_chi == star(K, x).euler_characteristic());
        }
    }
}

TEST_CASE("simplex basics") {
    Simplex s({3, 1, 2});
    REQUIRE(s.vertices() == std::vector<int>{1, 2, 3});
    REQUIRE(s.dim() == 2);
    REQUIRE(s.omega() == 1);
    REQUIRE(Simplex{1, 2}.omega() == -1);
    REQUIRE(Simplex{1, 2}.intersects(Simplex{2, 3}));
    REQUIRE_FALSE(Simplex{1, 2}.intersects(Simplex{3, 4}));
    REQUIRE(Simplex{1, 2, 3}.contains(Simplex{1, 3}));
    REQUIRE(Simplex{1}.comparable(Simplex{1, 2}));
    REQUIRE_FALSE(Simplex{1, 2}.comparable(Simplex{2, 3}));
    // canonical order: dimension first, then lexicographic
    REQUIRE(Simplex{9} < Simplex{1, 2});
    REQUIRE(Simplex{1, 3} < Simplex{2, 3});
    REQUIRE_THROWS_AS(Simplex{0}, error);
    REQUIRE_THROWS_AS(Simplex(std::vector<int>{}), error);
}
