#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <unistd.h>

#include "rgw/cache.hpp"
#include "rgw/characters.hpp"

using namespace rgw;

TEST_CASE("small tables", "[characters]") {
    auto t1 = character_table(1);
    REQUIRE(t1.classes.size() == 1);
    CHECK(t1.values[0][0] == 1);

    auto t2 = character_table(2);
    REQUIRE(t2.classes.size() == 2);
    // rows (2), (1,1); columns (2), (1,1)
    CHECK(t2.chi(Partition({1, 1}), Partition({2})) == -1);
    CHECK(t2.chi(Partition({1, 1}), Partition({1, 1})) == 1);
    CHECK(t2.chi(Partition({2}), Partition({2})) == 1);

    CHECK(character(Partition({2, 1}), Partition({3})) == -1);
    CHECK_THROWS_AS(character(Partition({2}), Partition({3})), argument_error);
}

TEST_CASE("trivial and sign rows", "[characters]") {
    for (int d = 1; d <= 8; ++d) {
        auto t = character_table(d);
        std::vector<int> row(d, 1);
        int triv = t.index_of(Partition({d}));
        std::vector<int> ones(d, 1);
        int sgn = t.index_of(Partition(ones));
        for (size_t a = 0; a < t.classes.size(); ++a) {
            CHECK(t.values[triv][a] == 1);
            CHECK(t.values[sgn][a] == sign(t.classes[a]));
        }
    }
}

TEST_CASE("dims column and conjugate-row relation", "[characters]") {
    for (int d = 1; d <= 10; ++d) {
        auto t = character_table(d);
        for (size_t r = 0; r < t.classes.size(); ++r) {
            CHECK(t.dims[r] == dim_rep(t.classes[r]));
            int rc = t.index_of(conjugate(t.classes[r]));
            for (size_t a = 0; a < t.classes.size(); ++a)
                CHECK(t.values[rc][a] == sign(t.classes[a]) * t.values[r][a]);
        }
    }
}

TEST_CASE("orthogonality relations", "[characters]") {
    for (int d : {3, 5, 8, 12}) {
        auto t = character_table(d);
        const size_t n = t.classes.size();
        for (size_t r = 0; r < n; ++r)
            for (size_t m = r; m < n; ++m) {
                Rational row = 0;
                for (size_t a = 0; a < n; ++a)
                    row += rat(t.values[r][a] * t.values[m][a], zeta(t.classes[a]));
                CHECK(row == (r == m ? 1 : 0));
            }
        for (size_t a = 0; a < n; ++a)
            for (size_t b = a; b < n; ++b) {
                Int col = 0;
                for (size_t r = 0; r < n; ++r) col += t.values[r][a] * t.values[r][b];
                CHECK(col == (a == b ? zeta(t.classes[a]) : 0));
            }
    }
}

TEST_CASE("disk cache round trip", "[characters]") {
    auto dir = std::filesystem::temp_directory_path() /
               ("rgw-test-cache-" + std::to_string(::getpid()));
    std::filesystem::remove_all(dir);
    auto cold = cached_character_table(6, dir);
    REQUIRE(std::filesystem::exists(cache_file_for(6, dir)));
    std::ifstream f1(cache_file_for(6, dir));
    std::string bytes1((std::istreambuf_iterator<char>(f1)), {});
    auto warm = cached_character_table(6, dir);
    std::ifstream f2(cache_file_for(6, dir));
    std::string bytes2((std::istreambuf_iterator<char>(f2)), {});
    CHECK(bytes1 == bytes2);
    CHECK(cold.values == warm.values);
    CHECK(cold.classes == warm.classes);
    auto fresh = character_table(6);
    CHECK(warm.values == fresh.values);

    // a corrupt cache entry is recomputed, not trusted
    {
        std::ofstream out(cache_file_for(6, dir));
        out << "{ not json";
    }
    auto healed = cached_character_table(6, dir);
    CHECK(healed.values == fresh.values);
    std::filesystem::remove_all(dir);
}
