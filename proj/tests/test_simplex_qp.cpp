#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "acs/isoparametric.hpp"
#include "acs/simplex_qp.hpp"
#include "test_support.hpp"

using namespace acs;

TEST_CASE("strictly concave symmetric objective maximized at the barycenter") {
    // Q(t) = -sum t_i^2 on the 3-simplex: max -1/4 at (1/4, 1/4, 1/4, 1/4).
    std::vector<double> quad(16, 0.0);
    for (int i = 0; i < 4; ++i) quad[i * 4 + i] = -1.0;
    const SimplexQuadraticProgram prog(4, 0.0, std::vector<double>(4, 0.0), quad);

    const SimplexSolution sol = maximize_over_simplex(prog);
    CHECK(sol.value == doctest::Approx(-0.25).epsilon(1e-12));
    for (double t : sol.point) CHECK(t == doctest::Approx(0.25).epsilon(1e-12));

    // The grid contains the optimum at step 1/4.
    const GridOracleResult grid = grid_oracle(prog, 0.25);
    CHECK(grid.value == doctest::Approx(-0.25).epsilon(1e-15));
}

TEST_CASE("linear objective is maximized at a vertex, exactly") {
    std::vector<double> linear{0.0, 3.0, 0.0, 0.0};
    const SimplexQuadraticProgram prog(4, 0.0, linear, std::vector<double>(16, 0.0));
    const SimplexSolution sol = maximize_over_simplex(prog);
    CHECK(sol.value == doctest::Approx(3.0).epsilon(1e-15));
    CHECK(sol.point[1] == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(sol.face == std::vector<int>{1});

    const GridOracleResult grid = grid_oracle(prog, 0.2);
    CHECK(grid.value == doctest::Approx(3.0).epsilon(1e-15));
}

TEST_CASE("non-concave input is rejected with a diagnostic") {
    std::vector<double> quad(16, 0.0);
    quad[0] = 1.0;  // positive eigenvalue
    const SimplexQuadraticProgram prog(4, 0.0, std::vector<double>(4, 0.0), quad);
    CHECK_THROWS_AS(maximize_over_simplex(prog), DomainError);
}

TEST_CASE("quadratic part is symmetrized at construction") {
    std::vector<double> quad(16, 0.0);
    quad[0 * 4 + 1] = -2.0;  // asymmetric input
    const SimplexQuadraticProgram prog(4, 0.0, std::vector<double>(4, 0.0), quad);
    CHECK(prog.quadratic(0, 1) == doctest::Approx(-1.0));
    CHECK(prog.quadratic(1, 0) == doctest::Approx(-1.0));
}

TEST_CASE("face enumeration brackets the grid oracle on random concave programs") {
    Rng rng(101);
    for (int trial = 0; trial < 100; ++trial) {
        const SimplexQuadraticProgram prog = test::random_concave_program(rng);
        const SimplexSolution sol = maximize_over_simplex(prog);
        const GridOracleResult grid = grid_oracle(prog, 0.05);
        CHECK(sol.value >= grid.value - 1e-9);
        CHECK(sol.value <= grid.value + grid.resolution_bound + 1e-9);
    }
}

TEST_CASE("solution point is feasible and KKT-stationary on its active face") {
    Rng rng(202);
    for (int trial = 0; trial < 100; ++trial) {
        const SimplexQuadraticProgram prog = test::random_concave_program(rng);
        const SimplexSolution sol = maximize_over_simplex(prog);

        double sum = 0.0;
        for (double t : sol.point) {
            CHECK(t >= 0.0);
            sum += t;
        }
        CHECK(std::fabs(sum - 1.0) < 1e-12);

        // On the active face the gradient is constant; off-face multipliers
        // must not exceed it (the maximizer admits no ascent direction).
        const std::vector<double> grad = prog.gradient(sol.point);
        double lambda = 0.0;
        int active = 0;
        for (int i = 0; i < prog.dim(); ++i)
            if (sol.point[i] > 1e-10) {
                lambda += grad[i];
                ++active;
            }
        lambda /= active;
        for (int i = 0; i < prog.dim(); ++i) {
            if (sol.point[i] > 1e-10)
                CHECK(std::fabs(grad[i] - lambda) < 1e-8);
            else
                CHECK(grad[i] <= lambda + 1e-8);
        }
        CHECK(sol.value >= prog.evaluate(std::vector<double>{1, 0, 0, 0}) - 1e-12);
    }
}

TEST_CASE("equal-valued faces break ties toward the smaller, earlier face") {
    // Two equally optimal vertices: the lexicographically first wins.
    std::vector<double> linear{0.0, 2.0, 2.0, 0.0};
    const SimplexQuadraticProgram prog(4, 0.0, linear, std::vector<double>(16, 0.0));
    const SimplexSolution sol = maximize_over_simplex(prog);
    CHECK(sol.value == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(sol.face == std::vector<int>{1});
}

TEST_CASE("degenerate quadratic with flat directions still solves") {
    // Objective constant along the whole simplex: every face is stationary and
    // singular; the rank-deficient fallback must accept a feasible candidate.
    const SimplexQuadraticProgram flat(4, 2.5, std::vector<double>(4, 0.0),
                                       std::vector<double>(16, 0.0));
    const SimplexSolution sol = maximize_over_simplex(flat);
    CHECK(sol.value == doctest::Approx(2.5).epsilon(1e-15));
    CHECK(sol.stationarity_residual < 1e-9);
    // Tie-breaking: smallest face, lexicographic, so the first vertex wins.
    CHECK(sol.face == std::vector<int>{0});
}

TEST_CASE("ACS' vertex program for (5,5) matches the grid oracle") {
    const Multiplicities m(5, 5);
    const CurvatureNormalSystem sys = curvature_normals(m);
    const SimplexQuadraticProgram prog = acs_vertex_program(sys, m, 0);
    const SimplexSolution sol = maximize_over_simplex(prog);
    const GridOracleResult grid = grid_oracle(prog, 0.005);
    CHECK(sol.value >= grid.value - 1e-9);
    CHECK(sol.value <= grid.value + grid.resolution_bound);
}

namespace {

// Euclidean projection of c onto the simplex by the sort-and-threshold rule;
// independent closed-form optimum for Q(t) = -|t - c|^2.
std::vector<double> project_to_simplex(std::vector<double> c) {
    std::vector<double> sorted = c;
    std::sort(sorted.begin(), sorted.end(), std::greater<double>());
    double cumulative = 0.0, tau = 0.0;
    int rho = 0;
    for (std::size_t j = 0; j < sorted.size(); ++j) {
        cumulative += sorted[j];
        const double candidate = (cumulative - 1.0) / static_cast<double>(j + 1);
        if (sorted[j] - candidate > 0.0) {
            rho = static_cast<int>(j + 1);
            tau = candidate;
        }
    }
    (void)rho;
    for (double& v : c) v = std::max(v - tau, 0.0);
    return c;
}

}  // namespace

TEST_CASE("solver agrees with the closed-form simplex projection") {
    // Q(t) = -|t - c|^2 has quadratic part -I, linear 2c, constant -|c|^2;
    // its maximizer is the Euclidean projection of c.
    Rng rng(303);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<double> c(4), linear(4), quad(16, 0.0);
        double norm_sq = 0.0;
        for (int i = 0; i < 4; ++i) {
            c[i] = 2.0 * rng.gaussian();  // frequently outside the simplex
            linear[i] = 2.0 * c[i];
            quad[i * 4 + i] = -1.0;
            norm_sq += c[i] * c[i];
        }
        const SimplexQuadraticProgram prog(4, -norm_sq, linear, quad);
        const SimplexSolution sol = maximize_over_simplex(prog);

        const std::vector<double> proj = project_to_simplex(c);
        double dist_sq = 0.0;
        for (int i = 0; i < 4; ++i) {
            dist_sq += (proj[i] - c[i]) * (proj[i] - c[i]);
            CHECK(std::fabs(sol.point[i] - proj[i]) < 1e-8);
        }
        CHECK(std::fabs(sol.value + dist_sq) < 1e-10);
    }
}

TEST_CASE("grid_oracle validates the step parameter") {
    const SimplexQuadraticProgram prog(4, 0.0, std::vector<double>(4, 0.0),
                                       std::vector<double>(16, 0.0));
    CHECK_THROWS_AS(grid_oracle(prog, 0.0), InvalidArgument);
    CHECK_THROWS_AS(grid_oracle(prog, 0.3), InvalidArgument);
}
