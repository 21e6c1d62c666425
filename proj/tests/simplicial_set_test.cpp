#include <doctest.h>

#include "symtc/errors.hpp"
#include "symtc/simplicial_set.hpp"
#include "test_helpers.hpp"

using namespace symtc;
using symtc::testing::sset_of;

TEST_CASE("simplicial sets of complexes") {
    SimplicialSet s1 = to_simplicial_set(make_sphere(1));
    CHECK(s1.dimension() == 1);
    CHECK(s1.count(0) == 3);
    CHECK(s1.count(1) == 3);

    SimplicialSet pt = to_simplicial_set(make_point());
    CHECK(pt.dimension() == 0);
    CHECK(pt.count(0) == 1);

    SimplicialSet rp = to_simplicial_set(make_rp2());
    CHECK(rp.count(0) == 6);
    CHECK(rp.count(1) == 15);
    CHECK(rp.count(2) == 10);

    // faces of a complex resolve without degeneracies
    for (int n = 1; n <= rp.dimension(); ++n)
        for (int id = 0; id < rp.count(n); ++id)
            for (int i = 0; i <= n; ++i)
                CHECK(!rp.face_of(n, id, i).degenerate());
}

TEST_CASE("euler characteristic") {
    CHECK(euler_characteristic(to_simplicial_set(make_sphere(2))) == 2);
    CHECK(euler_characteristic(to_simplicial_set(make_torus())) == 0);
    CHECK(euler_characteristic(to_simplicial_set(make_rp2())) == 1);
    CHECK(euler_characteristic(to_simplicial_set(make_point())) == 1);
}

TEST_CASE("to_simplicial_set preserves the euler characteristic") {
    std::mt19937 rng(555);
    for (int trial = 0; trial < 20; ++trial) {
        Complex c = symtc::testing::random_complex(rng);
        auto grades = closure(c);
        int chi = 0;
        for (size_t n = 0; n < grades.size(); ++n)
            chi += (n % 2 == 0) ? static_cast<int>(grades[n].size())
                                : -static_cast<int>(grades[n].size());
        CHECK(euler_characteristic(to_simplicial_set(c)) == chi);
    }
}

TEST_CASE("simplicial identities hold on every constructed set") {
    for (const char* name : {"sphere:2", "sphere:3", "torus", "rp2"}) {
        SimplicialSet s = to_simplicial_set(generate(name));
        CHECK_NOTHROW(s.validate());
    }
}

TEST_CASE("degeneracy word normal forms") {
    // s_0 s_0 = s_1 s_0
    CHECK(word_insert(0b001, 0) == 0b011);
    // s_1 (s_2 s_0) = s_3 s_1 s_0
    CHECK(word_insert(0b101, 1) == 0b1011);
    // prepending above everything just sets the bit
    CHECK(word_insert(0b011, 4) == 0b10011);
}

TEST_CASE("face operators through degeneracies") {
    SimplicialSet I = to_simplicial_set(make_interval());
    // vertices: id 0 = {0}, id 1 = {1}; edge id 0 = {0,1}
    SimplexKey s1e{1, 0, 0b10};  // s_1 e, like [0,1,1]
    CHECK(I.face(s1e, 0) == SimplexKey{0, 1, 0b1});  // [1,1] = s_0 v1
    CHECK(I.face(s1e, 1) == SimplexKey{1, 0, 0});    // e
    CHECK(I.face(s1e, 2) == SimplexKey{1, 0, 0});    // e

    SimplexKey s0e{1, 0, 0b01};  // s_0 e, like [0,0,1]
    CHECK(I.face(s0e, 0) == SimplexKey{1, 0, 0});
    CHECK(I.face(s0e, 1) == SimplexKey{1, 0, 0});
    CHECK(I.face(s0e, 2) == SimplexKey{0, 0, 0b1});  // [0,0] = s_0 v0

    // double degeneracy: s_1 s_0 v, like [v,v,v]; every face is [v,v]
    SimplexKey vvv{0, 0, 0b11};
    for (int i = 0; i <= 2; ++i) CHECK(I.face(vvv, i) == SimplexKey{0, 0, 0b1});
}

TEST_CASE("enumeration of encoded simplices") {
    SimplicialSet I = to_simplicial_set(make_interval());
    CHECK(I.simplices_of_total_dim(0).size() == 2);
    CHECK(I.simplices_of_total_dim(1).size() == 3);  // e, s_0 v0, s_0 v1
    CHECK(I.simplices_of_total_dim(2).size() == 4);  // s_0 e, s_1 e, s_1 s_0 v0, s_1 s_0 v1

    SimplicialSet s1 = to_simplicial_set(make_sphere(1));
    CHECK(s1.simplices_of_total_dim(1).size() == 6);
    CHECK(s1.simplices_of_total_dim(2).size() == 9);
}

TEST_CASE("components") {
    CHECK(component_count(to_simplicial_set(make_sphere(0))) == 2);
    CHECK(component_count(to_simplicial_set(make_sphere(1))) == 1);
    CHECK(component_count(to_simplicial_set(make_torus())) == 1);
}

TEST_CASE("maps validate and compose") {
    auto s2 = sset_of(make_sphere(2));
    SSetMap id = identity_map(s2);
    CHECK_NOTHROW(validate(id));
    SSetMap idid = compose(id, id);
    CHECK(idid.image == id.image);

    // breaking one entry breaks validation
    SSetMap broken = id;
    broken.image[1][0] = SimplexKey{1, 1, 0};
    CHECK_THROWS_AS(validate(broken), InternalError);
}

TEST_CASE("constructor rejects malformed face tables") {
    // an edge whose faces disagree in dimension bookkeeping
    std::vector<int> counts = {1, 1};
    std::vector<std::vector<std::vector<SimplexKey>>> faces(2);
    faces[0] = {{}};
    faces[1] = {{SimplexKey{0, 0, 0}}};  // only one face
    CHECK_THROWS_AS(SimplicialSet(counts, faces), InternalError);
}
