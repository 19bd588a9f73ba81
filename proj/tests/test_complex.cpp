#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "tda/errors.hpp"
#include "tda/complex.hpp"

using namespace tda;

namespace {

// unit square corners: sides 1, diagonals sqrt(2)
PointCloud unit_square() {
    return PointCloud::from_rows({{0.0, 0.0}, {1.0, 0.0}, {0.0, 1.0}, {1.0, 1.0}});
}

std::size_t binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    std::size_t r = 1;
    for (std::size_t i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

} // namespace

TEST_CASE("three equidistant points expand to a full triangle") {
    DistanceMatrix dm(3);
    dm.set(0, 1, 1.0);
    dm.set(0, 2, 1.0);
    dm.set(1, 2, 1.0);
    const auto fc = build_rips(dm, 2, 2.0);
    REQUIRE(fc.size() == 7);
    const auto counts = complex_at(fc, 1.0);
    CHECK(counts == std::vector<std::size_t>{3, 3, 1});
    for (const auto& s : fc.simplices())
        CHECK(s.value == (s.dim() == 0 ? 0.0 : 1.0));
}

TEST_CASE("a single point gives one vertex at value zero") {
    const auto fc = build_rips(DistanceMatrix(1), 2, 1.0);
    REQUIRE(fc.size() == 1);
    CHECK(fc.simplices()[0].vertices == std::vector<int>{0});
    CHECK(fc.simplices()[0].value == 0.0);
}

TEST_CASE("empty input gives an empty complex, bad parameters are rejected") {
    CHECK(build_rips(DistanceMatrix(0), 2, 1.0).size() == 0);
    CHECK_THROWS_AS(build_rips(DistanceMatrix(2), -1, 1.0), ConfigError);
    CHECK_THROWS_AS(build_rips(DistanceMatrix(2), 2, 0.0), ConfigError);
}

TEST_CASE("unit square filtration values") {
    const auto dm = pairwise_distances(unit_square(), Metric::euclidean);
    const auto fc = build_rips(dm, 2, 2.0);
    const double diag = std::sqrt(2.0);

    std::size_t edges_at_1 = 0, edges_at_diag = 0, triangles = 0;
    for (const auto& s : fc.simplices()) {
        if (s.dim() == 1 && s.value == doctest::Approx(1.0)) ++edges_at_1;
        if (s.dim() == 1 && s.value == doctest::Approx(diag)) ++edges_at_diag;
        if (s.dim() == 2) {
            ++triangles;
            CHECK(s.value == doctest::Approx(diag));
        }
    }
    CHECK(edges_at_1 == 4);
    CHECK(edges_at_diag == 2);
    CHECK(triangles == 4);

    CHECK(complex_at(fc, 1.0) == std::vector<std::size_t>{4, 4, 0});
    CHECK(complex_at(fc, 1.5) == std::vector<std::size_t>{4, 6, 4});
    CHECK(complex_at(fc, 0.0) == std::vector<std::size_t>{4, 0, 0});
}

TEST_CASE("counts_at is monotone and faces precede cofaces") {
    std::mt19937_64 rng(101);
    for (int rep = 0; rep < 12; ++rep) {
        const int n = oracle::uniform_int(rng, 1, 12);
        const auto cloud = oracle::random_cloud(rng, n, 3);
        const auto dm = pairwise_distances(cloud, Metric::euclidean);
        const auto fc = build_rips(dm, 3, oracle::uniform(rng, 0.3, 2.0));

        // ordering invariant
        const auto& ss = fc.simplices();
        for (std::size_t i = 1; i < ss.size(); ++i) CHECK_FALSE(simplex_before(ss[i], ss[i - 1]));

        // face closure with face value <= coface value (checked by the
        // validating constructor)
        CHECK_NOTHROW(FiltrationComplex::from_simplices(ss, fc.max_dim(), fc.max_eps()));

        // monotone counts
        auto prev = complex_at(fc, 0.0);
        for (double eps : {0.2, 0.5, 0.9, 1.4, 2.0}) {
            const auto cur = complex_at(fc, eps);
            for (std::size_t d = 0; d < cur.size(); ++d) CHECK(cur[d] >= prev[d]);
            prev = cur;
        }
    }
}

TEST_CASE("full skeleton below the diameter has binomial counts") {
    std::mt19937_64 rng(102);
    const int n = 7;
    const auto dm = pairwise_distances(oracle::random_cloud(rng, n, 4), Metric::euclidean);
    const int max_dim = 3;
    const auto fc = build_rips(dm, max_dim, dm.max_value() + 1.0);
    const auto counts = complex_at(fc, dm.max_value());
    for (int k = 0; k <= max_dim; ++k)
        CHECK(counts[static_cast<std::size_t>(k)] ==
              binomial(n, static_cast<std::size_t>(k) + 1));
}

TEST_CASE("clique expansion matches subset enumeration") {
    std::mt19937_64 rng(103);
    for (int rep = 0; rep < 15; ++rep) {
        const int n = oracle::uniform_int(rng, 1, 10);
        const auto dm = pairwise_distances(oracle::random_cloud(rng, n, 2), Metric::euclidean);
        const int max_dim = oracle::uniform_int(rng, 0, 3);
        const double max_eps = oracle::uniform(rng, 0.2, 1.5);
        const auto fc = build_rips(dm, max_dim, max_eps);
        const auto brute = oracle::brute_rips(dm, max_dim, max_eps);
        REQUIRE(fc.size() == brute.size());
        for (std::size_t i = 0; i < brute.size(); ++i) {
            CHECK(fc.simplices()[i].vertices == brute[i].vertices);
            CHECK(fc.simplices()[i].value == brute[i].value);
        }
    }
}

TEST_CASE("dump emits one simplex per line in filtration order") {
    DistanceMatrix dm(2);
    dm.set(0, 1, 0.5);
    const auto fc = build_rips(dm, 1, 1.0);
    CHECK(fc.dump() == "0 0 0\n0 0 1\n1 0.5 0 1\n");
}

TEST_CASE("from_simplices rejects broken closures") {
    // edge without one endpoint
    std::vector<Simplex> missing{{{0}, 0.0}, {{0, 1}, 1.0}};
    CHECK_THROWS_AS(FiltrationComplex::from_simplices(missing, 1, 2.0), ConfigError);

    // face after its coface
    std::vector<Simplex> late{{{0}, 0.0}, {{1}, 0.0}, {{0, 1}, 0.5}, {{2}, 0.0},
                              {{0, 2}, 2.0}, {{1, 2}, 1.0}, {{0, 1, 2}, 1.5}};
    CHECK_THROWS_AS(FiltrationComplex::from_simplices(late, 2, 2.0), ConfigError);
}
