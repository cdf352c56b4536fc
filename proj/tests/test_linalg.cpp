#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "nlie/linalg.hpp"
#include "nlie/multiindex.hpp"
#include "nlie/rational.hpp"

using namespace nlie;

namespace {

Matrix<Rat> rand_matrix(std::mt19937& rng, int r, int c) {
    std::uniform_int_distribution<long> d(-4, 4);
    Matrix<Rat> m(r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m.at(i, j) = Rat(d(rng));
    return m;
}

}  // namespace

TEST_CASE("matrix basics") {
    Matrix<Rat> a(2, 2);
    a.at(0, 0) = Rat(1);
    a.at(0, 1) = Rat(2);
    a.at(1, 0) = Rat(3);
    a.at(1, 1) = Rat(4);
    Matrix<Rat> i2 = Matrix<Rat>::identity(2);
    CHECK(a * i2 == a);
    CHECK(det_cofactor(a) == Rat(-2));
    CHECK(a.transpose().at(0, 1) == Rat(3));
    CHECK(a.apply({Rat(1), Rat(1)}) == Vec<Rat>{Rat(3), Rat(7)});

    auto ainv = inverse(a);
    REQUIRE(ainv.has_value());
    CHECK(*ainv * a == i2);

    Matrix<Rat> sing(2, 2);
    sing.at(0, 0) = Rat(1);
    sing.at(0, 1) = Rat(2);
    sing.at(1, 0) = Rat(2);
    sing.at(1, 1) = Rat(4);
    CHECK_FALSE(inverse(sing).has_value());
    CHECK(rank_dense(sing) == 1);
}

TEST_CASE("determinant matches rref-based rank and permutation signs") {
    std::mt19937 rng(4242);
    for (int trial = 0; trial < 40; ++trial) {
        Matrix<Rat> m = rand_matrix(rng, 4, 4);
        Rat d = det_cofactor(m);
        CHECK((d.is_zero()) == (rank_dense(m) < 4));
        // det of transpose agrees
        CHECK(det_cofactor(m.transpose()) == d);
    }
}

TEST_CASE("solve and kernel") {
    Matrix<Rat> a(2, 3);
    a.at(0, 0) = Rat(1);
    a.at(0, 1) = Rat(1);
    a.at(0, 2) = Rat(1);
    a.at(1, 0) = Rat(0);
    a.at(1, 1) = Rat(1);
    a.at(1, 2) = Rat(2);
    auto x = solve_dense(a, {Rat(6), Rat(8)});
    REQUIRE(x.has_value());
    CHECK(a.apply(*x) == Vec<Rat>{Rat(6), Rat(8)});

    auto ker = kernel_basis(a);
    REQUIRE(ker.size() == 1);
    CHECK(is_zero_vec(a.apply(ker[0])));

    // inconsistent system
    Matrix<Rat> b(2, 1);
    b.at(0, 0) = Rat(1);
    b.at(1, 0) = Rat(1);
    CHECK_FALSE(solve_dense(b, {Rat(0), Rat(1)}).has_value());

    std::mt19937 rng(17);
    for (int trial = 0; trial < 30; ++trial) {
        Matrix<Rat> m = rand_matrix(rng, 4, 6);
        auto kb = kernel_basis(m);
        CHECK(static_cast<int>(kb.size()) == 6 - rank_dense(m));
        for (const auto& v : kb) CHECK(is_zero_vec(m.apply(v)));
    }
}

TEST_CASE("echelon basis gives canonical residues") {
    EchelonBasis<Rat> eb(4);
    CHECK(eb.insert({Rat(1), Rat(2), Rat(0), Rat(0)}));
    CHECK(eb.insert({Rat(0), Rat(0), Rat(1), Rat(1)}));
    CHECK_FALSE(eb.insert({Rat(2), Rat(4), Rat(3), Rat(3)}));  // dependent
    CHECK(eb.rank() == 2);
    CHECK(eb.contains({Rat(-1), Rat(-2), Rat(5), Rat(5)}));
    CHECK_FALSE(eb.contains({Rat(0), Rat(1), Rat(0), Rat(0)}));

    // canonical: residue is independent of the representative of the coset
    Vec<Rat> v = {Rat(3), Rat(7), Rat(2), Rat(0)};
    Vec<Rat> w = {Rat(4), Rat(9), Rat(3), Rat(1)};  // v + row1 + row2
    CHECK(eb.reduce(v) == eb.reduce(w));

    std::mt19937 rng(5);
    std::uniform_int_distribution<long> d(-3, 3);
    for (int trial = 0; trial < 20; ++trial) {
        EchelonBasis<Rat> basis(5);
        std::vector<Vec<Rat>> inserted;
        for (int k = 0; k < 3; ++k) {
            Vec<Rat> u(5);
            for (auto& t : u) t = Rat(d(rng));
            basis.insert(u);
            inserted.push_back(u);
        }
        for (const auto& u : inserted) CHECK(basis.contains(u));
        // residue of a residue is itself
        Vec<Rat> u(5);
        for (auto& t : u) t = Rat(d(rng));
        Vec<Rat> r = basis.reduce(u);
        CHECK(basis.reduce(r) == r);
    }
}

TEST_CASE("sparse map rank, kernel and image agree with dense computations") {
    std::mt19937 rng(2024);
    std::uniform_int_distribution<long> d(-3, 3);
    std::uniform_int_distribution<int> dim(1, 7);
    for (int trial = 0; trial < 40; ++trial) {
        int out = dim(rng), in = dim(rng);
        SparseLinearMap<Rat> sm(out, in);
        Matrix<Rat> dm(out, in);
        for (int i = 0; i < out; ++i)
            for (int j = 0; j < in; ++j) {
                long v = d(rng);
                if (v == 0) continue;
                sm.add(i, j, Rat(v));
                dm.at(i, j) = Rat(v);
            }
        int r = rank_dense(dm);
        CHECK(sm.rank() == r);
        CHECK(sm.image().rank() == r);

        auto ker = sm.kernel();
        CHECK(static_cast<int>(ker.size()) == in - r);
        for (const auto& v : ker) {
            CHECK(is_zero_vec(sm.apply(v)));
            CHECK(is_zero_vec(dm.apply(v)));
        }
        // kernel vectors are independent
        EchelonBasis<Rat> eb(in, false);
        for (const auto& v : ker) CHECK(eb.insert(v));
    }
}

TEST_CASE("solve through a sparse map") {
    SparseLinearMap<Rat> sm(3, 2);
    sm.add(0, 0, Rat(1));
    sm.add(1, 1, Rat(2));
    sm.add(2, 0, Rat(1));
    sm.add(2, 1, Rat(2));
    auto x = sm.solve({Rat(5), Rat(6), Rat(11)});
    REQUIRE(x.has_value());
    CHECK(sm.apply(*x) == Vec<Rat>{Rat(5), Rat(6), Rat(11)});
    CHECK_FALSE(sm.solve({Rat(5), Rat(6), Rat(12)}).has_value());
}

TEST_CASE("quotient basis") {
    // span{e1,e2} modulo span{e1}: one class generated by e2
    EchelonBasis<Rat> b(3);
    b.insert({Rat(1), Rat(0), Rat(0)});
    std::vector<Vec<Rat>> zs = {{Rat(1), Rat(0), Rat(0)},
                                {Rat(1), Rat(1), Rat(0)},
                                {Rat(2), Rat(1), Rat(0)}};
    auto q = quotient_basis(zs, b);
    REQUIRE(q.size() == 1);
    CHECK(q[0] == Vec<Rat>{Rat(0), Rat(1), Rat(0)});
}

TEST_CASE("multi-index utilities") {
    std::vector<int> idx = {3, 1, 2};
    CHECK(canonical_sign(idx) == 1);  // even permutation of (1,2,3)
    CHECK(idx == std::vector<int>{1, 2, 3});

    idx = {2, 1, 3};
    CHECK(canonical_sign(idx) == -1);

    idx = {2, 2, 3};
    CHECK(canonical_sign(idx) == 0);

    auto tuples = increasing_tuples(4, 2);
    CHECK(tuples.size() == 6);
    CHECK(tuples.front() == std::vector<int>{0, 1});
    CHECK(tuples.back() == std::vector<int>{2, 3});

    SubsetIndexer si(5, 3);
    CHECK(si.size() == 10);
    for (int r = 0; r < si.size(); ++r) CHECK(si.rank(si.tuple(r)) == r);
    CHECK_THROWS(si.rank({2, 1, 0}));
}
