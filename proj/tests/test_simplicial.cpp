#include <gtest/gtest.h>

#include <random>

#include "support/brute.hpp"
#include "support/fixtures.hpp"

using namespace ufi;
using namespace fixtures;

namespace {

std::vector<std::string> names(const SimplicialComplex& c, const std::vector<VertexSet>& sets) {
    std::vector<std::string> out;
    for (VertexSet s : sets) {
        out.push_back(c.face_name(s));
    }
    return out;
}

} // namespace

TEST(Simplicial, RunningComplexHasSeventeenFaces) {
    auto d = running();
    EXPECT_EQ(d.faces().size(), 17u);
    EXPECT_EQ(f_vector(d), (std::vector<long long>{1, 6, 8, 2}));
    EXPECT_EQ(d.dimension(), 2);
}

TEST(Simplicial, EmptyFaceComplex) {
    auto e = SimplicialComplex::from_facets({}, {{}});
    EXPECT_FALSE(e.is_void());
    EXPECT_EQ(f_vector(e), (std::vector<long long>{1}));
    EXPECT_EQ(e.dimension(), -1);
    auto v = SimplicialComplex::from_facets({}, {});
    EXPECT_TRUE(v.is_void());
    EXPECT_FALSE(e == v);
}

TEST(Simplicial, GammaFVectorMatchesEnumeration) {
    auto g = gamma();
    EXPECT_EQ(f_vector(g), brute::f_vector(g));
    EXPECT_EQ(f_vector(g), (std::vector<long long>{1, 5, 7, 2}));
}

TEST(Simplicial, RejectsBadInput) {
    EXPECT_THROW(SimplicialComplex::from_facets({"a", "b"}, {{"a", "c"}}), Error);
    EXPECT_THROW(SimplicialComplex::from_facets({"a", "a"}, {{"a"}}), Error);
    EXPECT_THROW(SimplicialComplex::from_facets({"a", "b"}, {{"a"}}), Error);
    EXPECT_NO_THROW(SimplicialComplex::from_facets({"a", "b"}, {{"a"}}, true));
}

TEST(Simplicial, FacetsAreMaximal) {
    auto c = complex_of("abc", {"ab", "a", "abc", "c"});
    EXPECT_EQ(c.facets().size(), 1u);
}

TEST(Simplicial, Links) {
    auto d = running();
    auto lf = link_of_vertex(d, idx(d, "f"));
    EXPECT_EQ(names(d, lf.facets()), (std::vector<std::string>{"d"}));
    auto la = link_of_vertex(d, idx(d, "a"));
    EXPECT_EQ(names(d, la.facets()), (std::vector<std::string>{"bc"}));
    EXPECT_EQ(link(d, 0), d);
    EXPECT_EQ(f_vector(la), (std::vector<long long>{1, 2, 1}));
    EXPECT_EQ(f_vector(link_of_vertex(d, idx(d, "b"))), (std::vector<long long>{1, 3, 2}));
    EXPECT_EQ(f_vector(link_of_vertex(d, idx(d, "c"))), (std::vector<long long>{1, 4, 2}));
    EXPECT_EQ(f_vector(link_of_vertex(d, idx(d, "d"))), (std::vector<long long>{1, 4, 1}));
    EXPECT_EQ(f_vector(link_of_vertex(d, idx(d, "e"))), (std::vector<long long>{1, 2}));
    EXPECT_EQ(f_vector(lf), (std::vector<long long>{1, 1}));
    EXPECT_THROW(link(d, bit(idx(d, "a")) | bit(idx(d, "d"))), Error);
}

TEST(Simplicial, MinimalNonfaces) {
    auto d = running();
    auto nf = names(d, minimal_nonfaces(d));
    std::sort(nf.begin(), nf.end());
    EXPECT_EQ(nf, (std::vector<std::string>{"ad", "ae", "af", "be", "bf", "cde", "cf", "ef"}));
    EXPECT_TRUE(minimal_nonfaces(complex_of("abc", {"abc"})).empty());
    auto two = complex_of("abcd", {"ab", "cd"});
    auto got = names(two, minimal_nonfaces(two));
    std::sort(got.begin(), got.end());
    EXPECT_EQ(got, (std::vector<std::string>{"ac", "ad", "bc", "bd"}));
}

TEST(Simplicial, AlexanderDual) {
    EXPECT_TRUE(alexander_dual(complex_of("abc", {"abc"})).is_void());
    auto a = SimplicialComplex::from_facets({"a", "b"}, {{"a"}}, true);
    auto dual = alexander_dual(a);
    EXPECT_EQ(names(dual, dual.facets()), (std::vector<std::string>{"a"}));
    auto d = running();
    EXPECT_EQ(alexander_dual(alexander_dual(d)), d);
}

TEST(Simplicial, Graphs) {
    EXPECT_FALSE(is_flag(running()));
    EXPECT_FALSE(is_flag(gamma()));
    EXPECT_TRUE(is_flag(complex_of("abcd", {"abc", "cd"})));
    SimpleGraph empty = SimpleGraph::edgeless({"a", "b", "c"});
    auto cl = clique_complex(empty);
    EXPECT_EQ(f_vector(cl), (std::vector<long long>{1, 3}));
    SimpleGraph k3 = empty;
    k3.add_edge(0, 1);
    k3.add_edge(0, 2);
    k3.add_edge(1, 2);
    EXPECT_EQ(f_vector(independence_complex(k3)), (std::vector<long long>{1, 3}));
    EXPECT_EQ(underlying_graph(clique_complex(k3)).edges(), k3.edges());
}

TEST(Simplicial, BvtConstruction) {
    auto e = SimplicialComplex::from_facets({}, {{}});
    auto b0 = bvt_complex(e, Colouring{});
    EXPECT_EQ(f_vector(b0), (std::vector<long long>{1}));
    auto v = complex_of("v", {"v"});
    auto bv = bvt_complex(v, Colouring{{{0}}});
    EXPECT_EQ(bv.facets().size(), 2u);
    EXPECT_EQ(bv.face_name(bv.facets()[0]), "v");
    EXPECT_EQ(bv.face_name(bv.facets()[1]), "1'");
}

TEST(SimplicialProperty, FacesMatchEnumeration) {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 1 + static_cast<int>(rng() % 8);
        auto c = random_complex(rng, n);
        auto brute_faces = brute::faces(c);
        std::set<VertexSet> lib(c.faces().begin(), c.faces().end());
        ASSERT_EQ(lib, brute_faces);
        ASSERT_EQ(f_vector(c), brute::f_vector(c));
    }
}

TEST(SimplicialProperty, DeletionLinkRecursion) {
    std::mt19937 rng(12);
    for (int trial = 0; trial < 150; ++trial) {
        int n = 2 + static_cast<int>(rng() % 6);
        auto c = random_complex(rng, n);
        int v = static_cast<int>(rng() % static_cast<unsigned>(n));
        auto f = f_vector(c);
        auto del = f_vector(delete_vertex(c, v));
        auto lk = f_vector(link_of_vertex(c, v));
        for (std::size_t j = 1; j < f.size(); ++j) {
            long long a = j < del.size() ? del[j] : 0;
            long long b = j - 1 < lk.size() ? lk[j - 1] : 0;
            ASSERT_EQ(f[j], a + b);
        }
    }
}

TEST(SimplicialProperty, DualIsInvolution) {
    std::mt19937 rng(13);
    for (int trial = 0; trial < 100; ++trial) {
        auto c = random_complex(rng, 2 + static_cast<int>(rng() % 5));
        if (c.facets().size() == 1 && c.facets()[0] == c.ground_mask()) {
            continue;
        }
        ASSERT_EQ(alexander_dual(alexander_dual(c)), c);
    }
}

TEST(SimplicialProperty, FlagIffNonfacesAreEdges) {
    std::mt19937 rng(14);
    for (int trial = 0; trial < 200; ++trial) {
        auto c = random_complex(rng, 1 + static_cast<int>(rng() % 6));
        auto nf = minimal_nonfaces(c);
        bool edges = std::all_of(nf.begin(), nf.end(), [](VertexSet s) { return cardinality(s) == 2; });
        ASSERT_EQ(is_flag(c), edges);
        SimpleGraph g = underlying_graph(c);
        ASSERT_EQ(underlying_graph(clique_complex(g)).edges(), g.edges());
    }
}
