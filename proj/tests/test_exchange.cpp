#include <gtest/gtest.h>

#include <random>

#include "support/fixtures.hpp"

using namespace ufi;
using namespace fixtures;

namespace {

const std::vector<std::string> xy{"x", "y"};

// every Q-Borel move applied to every generator, checked by membership
bool moves_stay_inside(const MonomialIdeal& I, const BorelPoset& q) {
    for (const auto& m : I.generators()) {
        for (auto [i, j] : q.relations()) {
            if (m[static_cast<std::size_t>(j)] == 0) {
                continue;
            }
            Monomial moved = m;
            ++moved[static_cast<std::size_t>(i)];
            --moved[static_cast<std::size_t>(j)];
            if (!I.contains(moved)) {
                return false;
            }
        }
    }
    return true;
}

SimplicialComplex discrete(int n) {
    std::string verts;
    std::vector<std::string> facets;
    for (int i = 0; i < n; ++i) {
        verts += static_cast<char>('a' + i);
        facets.emplace_back(1, static_cast<char>('a' + i));
    }
    return complex_of(verts, facets);
}

} // namespace

TEST(Exchange, Stability) {
    for (int n = 1; n <= 4; ++n) {
        auto I = power(parse_ideal({"x", "y"}, xy), n);
        EXPECT_TRUE(is_strongly_stable(I));
        EXPECT_TRUE(is_stable(I));
    }
    EXPECT_FALSE(is_stable(parse_ideal({"y^2"}, xy)));
    auto d = running();
    EXPECT_FALSE(is_stable(uniform_face_ideal(d, running_c(d))));
    EXPECT_FALSE(is_strongly_stable(uniform_face_ideal(d, running_c(d))));
}

TEST(Exchange, OneColouringGivesPowerOfMaximalIdeal) {
    auto c = discrete(4);
    Colouring one{{{0, 1, 2, 3}}};
    auto I = uniform_face_ideal(c, one);
    EXPECT_EQ(I, power(parse_ideal({"x1", "y1"}, {"x1", "y1"}), 4));
    EXPECT_TRUE(is_stable(I));
    EXPECT_TRUE(is_strongly_stable(I));
}

TEST(Exchange, QBorel) {
    auto d = running();
    EXPECT_TRUE(is_q_borel(uniform_face_ideal(d, running_c(d)), q_k_poset(3)));
    EXPECT_FALSE(is_q_borel(uniform_face_ideal(d, running_d_generators(d)), q_k_poset(4)));
    EXPECT_TRUE(is_q_borel(parse_ideal({"x*y^3", "y^2"}, xy), BorelPoset(2)));
    EXPECT_THROW(is_q_borel(uniform_face_ideal(d, running_c(d)), q_k_poset(2)), Error);
}

TEST(Exchange, BorelPosets) {
    EXPECT_EQ(q_k_poset(1).relations().size(), 1u);
    auto q3 = q_k_poset(3);
    EXPECT_EQ(q3.relations(), (std::vector<std::pair<int, int>>{{0, 3}, {1, 4}, {2, 5}}));
    auto chain = BorelPoset::chain(3);
    EXPECT_TRUE(chain.less(0, 2));
    EXPECT_EQ(chain.up_sets().size(), 4u);
    EXPECT_THROW(BorelPoset(2, {{0, 1}, {1, 0}}), Error);
}

TEST(Exchange, PrincipalBorel) {
    auto I = power(parse_ideal({"x", "y"}, xy), 3);
    auto gens = q_borel_generators(I, BorelPoset::chain(2));
    ASSERT_EQ(gens.size(), 1u);
    EXPECT_EQ(to_string(gens[0], xy), "y^3");
    EXPECT_TRUE(is_principal_q_borel(I, BorelPoset::chain(2)));
    auto d = running();
    EXPECT_FALSE(is_principal_q_borel(uniform_face_ideal(d, running_c(d)), q_k_poset(3)));
}

TEST(Exchange, Polymatroidal) {
    auto d = running();
    auto I = uniform_face_ideal(d, running_c(d));
    EXPECT_TRUE(is_weakly_polymatroidal(I));
    EXPECT_FALSE(is_polymatroidal(I));
    EXPECT_TRUE(is_polymatroidal(power(parse_ideal({"x", "y"}, xy), 2)));
    auto edge = complex_of("ab", {"ab"});
    EXPECT_TRUE(is_matroidal(uniform_face_ideal(edge, singleton_colouring(edge))));
    EXPECT_FALSE(is_matroidal(uniform_face_ideal(d, singleton_colouring(d))));
    EXPECT_THROW(is_polymatroidal(parse_ideal({"x", "y^2"}, xy)), Error);
}

TEST(Exchange, CompleteMultipartiteIsPrincipal) {
    // clique complex of K_{2,1,2} with its optimal colouring
    SimpleGraph g = SimpleGraph::edgeless({"a", "b", "c", "d", "e"});
    std::vector<std::vector<int>> parts{{0, 1}, {2}, {3, 4}};
    for (std::size_t p = 0; p < parts.size(); ++p) {
        for (std::size_t q = p + 1; q < parts.size(); ++q) {
            for (int u : parts[p]) {
                for (int v : parts[q]) {
                    g.add_edge(u, v);
                }
            }
        }
    }
    auto c = clique_complex(g);
    auto I = uniform_face_ideal(c, Colouring{parts});
    EXPECT_TRUE(is_principal_q_borel(I, q_k_poset(3)));
    EXPECT_TRUE(is_polymatroidal(I));
}

TEST(ExchangeProperty, QBorelAndWeakExchangeIffNestingOrder) {
    std::mt19937 rng(41);
    for (int trial = 0; trial < 300; ++trial) {
        auto c = random_complex(rng, 1 + static_cast<int>(rng() % 7));
        Colouring col = trial % 2 == 0 ? random_proper_colouring(rng, c) : random_nested_colouring(rng, c);
        auto I = uniform_face_ideal(c, col);
        bool ordered = check_nested(c, col).in_nesting_order;
        auto q = q_k_poset(col.size());
        ASSERT_EQ(is_q_borel(I, q), ordered);
        ASSERT_EQ(moves_stay_inside(I, q), is_q_borel(I, q));
        ASSERT_EQ(is_weakly_polymatroidal(I), ordered);
        ASSERT_EQ(is_polymatroidal(I), is_principal_q_borel(I, q));
        if (is_strongly_stable(I)) {
            ASSERT_TRUE(is_stable(I));
        }
        if (is_polymatroidal(I)) {
            ASSERT_TRUE(is_weakly_polymatroidal(I));
        }
    }
}

TEST(ExchangeProperty, StableIffOneColouring) {
    std::mt19937 rng(42);
    for (int trial = 0; trial < 200; ++trial) {
        auto c = random_complex(rng, 1 + static_cast<int>(rng() % 6));
        Colouring col = random_proper_colouring(rng, c);
        auto I = uniform_face_ideal(c, col);
        ASSERT_EQ(is_stable(I), col.size() == 1);
        ASSERT_EQ(is_strongly_stable(I), col.size() == 1);
    }
}

TEST(ExchangeProperty, MatroidalIffSimplex) {
    std::mt19937 rng(43);
    for (int trial = 0; trial < 200; ++trial) {
        auto c = random_complex(rng, 1 + static_cast<int>(rng() % 6));
        auto I = uniform_face_ideal(c, singleton_colouring(c));
        bool simplex = c.facets().size() == 1;
        ASSERT_EQ(is_matroidal(I), simplex);
    }
}
