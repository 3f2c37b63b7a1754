#include "test_main.hpp"

#include <set>

#include "mlc/bits.hpp"
#include "mlc/error.hpp"
#include "mlc/trees.hpp"

using namespace mlc;

static std::vector<std::string> dyck_words(int n) {
    std::vector<std::string> out;
    std::string s(2 * n, '0');
    for (int i = 0; i < n; ++i) s[i] = '1';
    do {
        if (is_dyck(s)) out.push_back(s);
    } while (std::prev_permutation(s.begin(), s.end()));
    return out;
}

TEST_CASE("rho") {
    CHECK(rho("1100") == "1010");
    CHECK(rho("110100") == "101010");
    CHECK(rho("101010") == "110100");
    CHECK_THROWS_AS(rho(""), Error);
    for (const auto& t : dyck_words(5)) {
        CHECK(rho_inv(rho(t)) == t);
        CHECK(rho(rho_inv(t)) == t);
        CHECK(rho_pow(t, 10) == t);
        CHECK(rho_pow(t, -3) == rho_inv(rho_inv(rho_inv(t))));
    }
}

TEST_CASE("lambda_of") {
    for (int n = 4; n <= 8; ++n) CHECK(lambda_of(star(n)) == 2);
    CHECK(lambda_of("111000") == 3);
    CHECK(lambda_of("1100") == 2);
    CHECK(lambda_of("10") == 1);
    for (int n = 1; n <= 8; ++n) {
        for (const auto& t : dyck_words(n)) {
            int brute = 1;
            for (auto r = rho(t); r != t; r = rho(r)) ++brute;
            CHECK(lambda_of(t) == brute);
            CHECK((2 * n) % lambda_of(t) == 0);
        }
    }
}

TEST_CASE("canon_plane and class counts") {
    CHECK(canon_plane("110100") == canon_plane("101010"));
    for (const auto& t : dyck_words(6)) CHECK(canon_plane(t) == canon_plane(rho(t)));
    const std::vector<std::size_t> expected{1, 1, 2, 3, 6, 14, 34, 95, 280, 854};
    for (int n = 1; n <= 10; ++n) {
        std::set<std::string> classes;
        for (const auto& t : dyck_words(n)) classes.insert(canon_plane(t).canon);
        CHECK(classes.size() == expected[n - 1]);
    }
}

TEST_CASE("potential and centroids") {
    auto s = potential_and_centroids(PlaneTree{star(6), 2});
    CHECK(s.potential == 6);
    CHECK(s.centroids.size() == 1);
    auto p = potential_and_centroids(canon_plane("111000"));
    CHECK(p.potential == 4);
    CHECK(p.centroids.size() == 2);
}

TEST_CASE("dumbbell has two centroids of degree (n+1)/2") {
    const std::string d5 = "1" "1010" "0" "1010";
    TreeIndex idx(d5);
    auto info = potential_and_centroids(idx);
    REQUIRE(info.centroids.size() == 2);
    for (int c : info.centroids) CHECK(idx.degree(c) == 3);
}

TEST_CASE("subtrees_at") {
    TreeIndex s(star(4));
    CHECK(subtrees_at(s, 1) == std::vector<std::string>{"10", "10", "10", "10"});
    TreeIndex path("11110000");
    auto info = potential_and_centroids(path);
    REQUIRE(info.centroids.size() == 1);
    CHECK(subtrees_at(path, info.centroids[0]) == std::vector<std::string>{"1100", "1100"});
    for (const auto& t : dyck_words(6)) {
        TreeIndex idx(t);
        for (int c = 0; c < idx.vertices(); ++c) {
            std::string cat;
            for (const auto& st : subtrees_at(idx, c)) cat += st;
            CHECK(canon_plane(cat) == canon_plane(t));
        }
    }
}

TEST_CASE("rooted reproduces rotations") {
    for (const auto& t : dyck_words(6)) {
        TreeIndex idx(t);
        CHECK(idx.rooted(0, 1) == t);
        std::set<std::string> rooted;
        for (int a = 0; a < idx.vertices(); ++a)
            for (int k = 0; k < idx.degree(a); ++k) rooted.insert(idx.rooted(a, idx.neighbor(a, k)));
        std::set<std::string> rots;
        for (int i = 0; i < 12; ++i) rots.insert(rho_pow(t, i));
        CHECK(rooted == rots);
        // the leftmost child of the root becomes the root under rho
        CHECK(idx.rooted(1, idx.neighbor(1, 1 % idx.degree(1))) == rho(t));
    }
}

TEST_CASE("potential differences along edges") {
    for (int n = 1; n <= 8; ++n) {
        for (const auto& t : dyck_words(n)) {
            TreeIndex idx(t);
            const auto phi = vertex_potentials(idx);
            for (int b = 1; b < idx.vertices(); ++b) {
                const int a = idx.parent(b);
                const auto e_ba = idx.branch(b, a).size() / 2 - 1;
                const auto e_ab = idx.branch(a, b).size() / 2 - 1;
                CHECK(phi[b] - phi[a] == static_cast<long long>(e_ba) - static_cast<long long>(e_ab));
            }
        }
    }
}

TEST_CASE("classify_leaf") {
    TreeIndex s(star(4));
    for (int a : {0, 2, 3, 4}) {
        auto lc = classify_leaf(s, a, 1);
        CHECK_FALSE(lc.thin);
        CHECK(lc.pullable_from);
        CHECK(lc.pushable_from);
    }
    TreeIndex path("11110000");
    auto lc = classify_leaf(path, 4, 0);
    CHECK(lc.thin);
    CHECK(lc.pullable_to);
    CHECK(lc.pushable_to);
    CHECK_THROWS_AS(classify_leaf(path, 2, 0), Error);
    // 110u0v with the leaf as first child of a': pullable towards the root only
    TreeIndex x("11010010");
    auto lx = classify_leaf(x, 2, 0);
    CHECK(lx.pullable_to);
    CHECK_FALSE(lx.pushable_to);
}

TEST_CASE("pull and push") {
    CHECK(pull("110010") == "101010");
    CHECK(pull("11001100") == "10101100");
    CHECK_THROWS_AS(pull("101010"), Error);
    CHECK_THROWS_AS(pull(star(5)), Error);
    CHECK_THROWS_AS(push(star_prime(5)), Error);
    for (const auto& t : dyck_words(5)) {
        if (is_pullable(t)) CHECK(push(pull(t)) == t);
        if (is_pushable(t)) CHECK(pull(push(t)) == t);
    }
}
