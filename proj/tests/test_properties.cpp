#include <gtest/gtest.h>

#include <random>

#include "support/brute.hpp"
#include "support/fixtures.hpp"

using namespace ufi;
using namespace fixtures;

namespace {

constexpr int trials = 120;

} // namespace

// Betti closed form, cube counts and boolean intervals are three views of one number.
TEST(CrossModule, BettiNumbersCountCubesAndIntervals) {
    std::mt19937 rng(201);
    for (int trial = 0; trial < trials; ++trial) {
        auto c = random_complex(rng, 1 + static_cast<int>(rng() % 7));
        auto col = random_nested_colouring(rng, c);
        auto t = betti_closed_form(c, col);
        auto cubes = cubical_complex(c, col).f_vector();
        auto p = index_vector_poset(c, col);
        for (int i = 0; i < static_cast<int>(cubes.size()); ++i) {
            ASSERT_EQ(t.at(i, c.ground_size() + i), cubes[static_cast<std::size_t>(i)]);
            ASSERT_EQ(boolean_interval_count(p, i).count, cubes[static_cast<std::size_t>(i)]);
        }
        ASSERT_EQ(t.at(0, c.ground_size()), static_cast<long long>(uniform_face_ideal(c, col).size()));
        ASSERT_EQ(t.at(1, c.ground_size() + 1), static_cast<long long>(covering_relations(p).size()));
    }
}

TEST(CrossModule, EulerCharacteristicOfClosedForm) {
    std::mt19937 rng(202);
    for (int trial = 0; trial < trials; ++trial) {
        auto c = random_complex(rng, 1 + static_cast<int>(rng() % 6));
        auto col = random_nested_colouring(rng, c);
        auto I = uniform_face_ideal(c, col);
        if (I.size() > 20) {
            continue;
        }
        ASSERT_EQ(euler_polynomial_of_quotient(betti_closed_form(c, col)), hilbert_numerator(I)) << I.str();
    }
}

TEST(CrossModule, MultiplicityFromFaceCounts) {
    std::mt19937 rng(203);
    for (int trial = 0; trial < trials; ++trial) {
        auto c = random_complex(rng, 1 + static_cast<int>(rng() % 7));
        auto col = random_nested_colouring(rng, c);
        auto h = hilbert_summary(c, col);
        auto f = brute::f_vector(c);
        long long edges = f.size() > 2 ? f[2] : 0;
        long long n = c.ground_size();
        ASSERT_EQ(h.multiplicity, n * (n + 1) / 2 - edges);
        ASSERT_EQ(h.depth, 2 * (col.size() - 1) - c.dimension());
        ASSERT_LE(h.depth, h.krull_dim);
    }
}

TEST(CrossModule, BoijSoederbergCoefficientsAndFaces) {
    std::mt19937 rng(204);
    for (int trial = 0; trial < trials; ++trial) {
        auto c = random_complex(rng, 1 + static_cast<int>(rng() % 7));
        auto col = random_nested_colouring(rng, c);
        auto bs = bsd_ideal(c, col);
        auto f = brute::f_vector(c);
        ASSERT_EQ(bs.terms.size(), f.size());
        for (const auto& t : bs.terms) {
            int j = static_cast<int>(t.diagram.degrees.size()) - 1;
            ASSERT_EQ(t.coefficient, Rational(factorial(j) * f[static_cast<std::size_t>(j)]));
        }
    }
}

TEST(CrossModule, SingletonColouringsAreStanleyReisner) {
    std::mt19937 rng(205);
    for (int trial = 0; trial < trials; ++trial) {
        auto c = random_complex(rng, 1 + static_cast<int>(rng() % 6));
        auto col = singleton_colouring(c);
        auto I = uniform_face_ideal(c, col);
        for (const auto& g : I.generators()) {
            ASSERT_EQ(g.degree(), c.ground_size());
            for (int e : g.exp) {
                ASSERT_LE(e, 1);
            }
        }
        // one nonface component per minimal nonface
        if (is_nested(c, col) && check_nested(c, col).in_nesting_order) {
            auto dec = ufi_irreducible_decomposition(c, col);
            ASSERT_EQ(dec.nonface_components.size(), minimal_nonfaces(c).size());
        }
    }
}

TEST(CrossModule, ProductsKeepClosedForms) {
    std::mt19937 rng(206);
    int checked = 0;
    for (int trial = 0; trial < 60; ++trial) {
        auto a = random_complex(rng, 1 + static_cast<int>(rng() % 3), 3);
        auto b = random_complex(rng, 1 + static_cast<int>(rng() % 3), 3);
        auto ca = random_nested_colouring(rng, a);
        auto cb = random_nested_colouring(rng, b);
        if (ca.size() != cb.size()) {
            continue;
        }
        auto p = product_as_ufi(a, ca, b, cb);
        ASSERT_TRUE(check_nested(p.complex, p.colouring).in_nesting_order);
        auto I = multiply(uniform_face_ideal(a, ca), uniform_face_ideal(b, cb));
        ASSERT_EQ(uniform_face_ideal(p.complex, p.colouring, Limits::relaxed()), I);
        if (I.size() <= 20) {
            ASSERT_EQ(betti_closed_form(p.complex, p.colouring, Limits::relaxed()), betti_oracle(I).graded()) << I.str();
        }
        ASSERT_EQ(ufi_associated_primes(p.complex, p.colouring, Limits::relaxed()), associated_primes_generic(I));
        ++checked;
    }
    EXPECT_GT(checked, 10);
}

TEST(CrossModule, QuotientTablesAreConsistent) {
    std::mt19937 rng(207);
    for (int trial = 0; trial < trials; ++trial) {
        auto c = random_complex(rng, 1 + static_cast<int>(rng() % 7));
        auto col = random_nested_colouring(rng, c);
        auto t = betti_closed_form(c, col);
        auto q = t.quotient_of_ideal();
        ASSERT_EQ(q.at(0, 0), 1);
        ASSERT_EQ(q.length(), t.length() + 1);
        ASSERT_EQ(q.length(), hilbert_summary(c, col).pdim);
        ASSERT_EQ(t.regularity(), c.ground_size());
    }
}
