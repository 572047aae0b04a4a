#include <gtest/gtest.h>

#include <random>

#include "support/brute.hpp"
#include "support/fixtures.hpp"

using namespace ufi;
using namespace fixtures;

namespace {

const std::vector<std::string> xyz{"x", "y", "z"};

MonomialIdeal random_ideal(std::mt19937& rng, std::size_t nvars, int count, int max_exp) {
    std::vector<std::string> vars;
    for (std::size_t i = 0; i < nvars; ++i) {
        vars.push_back("v" + std::to_string(i + 1));
    }
    std::vector<Monomial> gens;
    for (int g = 0; g < count; ++g) {
        Monomial m(nvars);
        for (std::size_t i = 0; i < nvars; ++i) {
            m[i] = static_cast<int>(rng() % static_cast<unsigned>(max_exp + 1));
        }
        gens.push_back(m);
    }
    return MonomialIdeal(vars, gens);
}

std::vector<std::vector<int>> exponent_vectors(const std::vector<IrreducibleComponent>& comps) {
    std::vector<std::vector<int>> out;
    for (const auto& c : comps) {
        out.push_back(c.b);
    }
    return out;
}

} // namespace

TEST(Decomposition, ProductOfVariables) {
    auto comps = irreducible_decomposition_generic(parse_ideal({"x*y"}, xyz));
    ASSERT_EQ(comps.size(), 2u);
    std::set<std::string> names;
    for (const auto& c : comps) {
        names.insert(c.str(xyz));
    }
    EXPECT_EQ(names, (std::set<std::string>{"(x)", "(y)"}));
    EXPECT_EQ(associated_primes_generic(parse_ideal({"x*y"}, xyz)), (PrimeSet{{0}, {1}}));
}

TEST(Decomposition, IrreducibleIdealIsItsOwnDecomposition) {
    auto I = parse_ideal({"x^2", "z^3"}, xyz);
    auto comps = irreducible_decomposition_generic(I);
    ASSERT_EQ(comps.size(), 1u);
    EXPECT_EQ(comps[0].b, (std::vector<int>{2, 0, 3}));
}

TEST(Decomposition, MixedPowers) {
    auto I = parse_ideal({"x^2", "x*y", "y^3"}, xyz);
    auto comps = irreducible_decomposition_generic(I);
    EXPECT_EQ(intersect_components(comps, xyz), I);
    EXPECT_EQ(comps.size(), 2u);
    EXPECT_EQ(associated_primes_generic(I), (PrimeSet{{0, 1}}));
}

TEST(Decomposition, ZeroIdealRejected) {
    EXPECT_THROW(irreducible_decomposition_generic(MonomialIdeal::zero(xyz)), Error);
}

TEST(Decomposition, RunningExamplePrimes) {
    auto d = running();
    auto I = uniform_face_ideal(d, running_c(d));
    PrimeSet expected{{0, 3}, {1, 4}, {2, 5}, {0, 1}, {0, 2}, {1, 2}, {0, 1, 2}};
    EXPECT_EQ(associated_primes_generic(I), expected);
    auto comps = irreducible_decomposition_generic(I);
    EXPECT_EQ(intersect_components(comps, I.variables()), I);
}

TEST(Decomposition, SquareOfFourClassColouringGainsTwoPrimes) {
    auto d = running();
    auto I = uniform_face_ideal(d, running_d_primes(d));
    PrimeSet base{{0, 4}, {1, 5}, {2, 6}, {3, 7}, {0, 1}, {0, 3}, {1, 3}, {2, 3}, {0, 1, 2}};
    EXPECT_EQ(associated_primes_generic(I), base);
    PrimeSet sq = base;
    sq.insert({0, 1, 3});
    sq.insert({0, 1, 2, 3});
    EXPECT_EQ(associated_primes_generic(power(I, 2)), sq);
}

TEST(Decomposition, MinimalPrimes) {
    PrimeSet p{{0}, {0, 1}, {1, 2}, {2}};
    EXPECT_EQ(minimal_primes(p), (PrimeSet{{0}, {2}}));
}

TEST(Decomposition, PrimeNames) {
    EXPECT_EQ(prime_name({0, 2}, xyz), "(x, z)");
}

TEST(DecompositionProperty, IntersectionRecoversIdeal) {
    std::mt19937 rng(61);
    for (int trial = 0; trial < 150; ++trial) {
        auto I = random_ideal(rng, 3 + trial % 2, 1 + static_cast<int>(rng() % 5), 3);
        if (I.is_unit()) {
            continue;
        }
        auto comps = irreducible_decomposition_generic(I);
        ASSERT_EQ(intersect_components(comps, I.variables()), I) << I.str();
        ASSERT_TRUE(brute::equals_intersection(I, exponent_vectors(comps))) << I.str();
        for (std::size_t a = 0; a < comps.size(); ++a) {
            for (std::size_t b = 0; b < comps.size(); ++b) {
                if (a != b) {
                    ASSERT_FALSE(comps[a].inside(comps[b])) << I.str();
                }
            }
        }
    }
}

TEST(DecompositionProperty, PrimesMatchColonIdealSearch) {
    std::mt19937 rng(62);
    for (int trial = 0; trial < 120; ++trial) {
        auto I = random_ideal(rng, 3, 1 + static_cast<int>(rng() % 5), 3);
        if (I.is_unit()) {
            continue;
        }
        ASSERT_EQ(associated_primes_generic(I), brute::associated_primes(I)) << I.str();
    }
}

TEST(DecompositionProperty, PrimesOfUniformFaceIdealsMatchColonSearch) {
    std::mt19937 rng(63);
    for (int trial = 0; trial < 40; ++trial) {
        auto c = random_complex(rng, 2 + static_cast<int>(rng() % 3), 3);
        auto I = uniform_face_ideal(c, random_proper_colouring(rng, c));
        ASSERT_EQ(associated_primes_generic(I), brute::associated_primes(I)) << I.str();
    }
}
