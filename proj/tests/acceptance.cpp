// Acceptance suite: each criterion runs at its stated tolerance and prints a
// single "criterion N: PASS/FAIL" line. The CLI determinism criterion spawns
// the real acs-cert binary (path injected at build time).

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "acs/fkm.hpp"
#include "acs/index_bounds.hpp"
#include "acs/isoparametric.hpp"
#include "acs/lie_embeddings.hpp"
#include "acs/rng.hpp"
#include "acs/runner.hpp"
#include "acs/simplex_qp.hpp"
#include "test_support.hpp"

using namespace acs;

namespace {

class Criterion {
public:
    Criterion(int number, std::string label) : number_(number), label_(std::move(label)) {
        timer_ = std::chrono::steady_clock::now();
    }

    void require(bool ok, const std::string& what) {
        if (!ok) failures_.push_back(what);
    }

    double elapsed_seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - timer_).count();
    }

    void finish() {
        std::printf("criterion %2d: %s — %s (%.2fs)\n", number_,
                    failures_.empty() ? "PASS" : "FAIL", label_.c_str(), elapsed_seconds());
        std::fflush(stdout);
        std::string detail;
        for (const auto& f : failures_) detail += "\n  " + f;
        REQUIRE_MESSAGE(failures_.empty(), detail);
    }

private:
    int number_;
    std::string label_;
    std::vector<std::string> failures_;
    std::chrono::steady_clock::time_point timer_;
};

struct CliResult {
    std::string output;
    int exit_code = -1;
};

CliResult run_cli(const std::string& args, const std::string& env_prefix = {}) {
    const std::string cmd =
        env_prefix + std::string(ACS_CLI_PATH) + " " + args + " 2>/dev/null";
    CliResult result;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return result;
    char buf[4096];
    std::size_t got;
    while ((got = std::fread(buf, 1, sizeof(buf), pipe)) > 0) result.output.append(buf, got);
    const int status = pclose(pipe);
    if (WIFEXITED(status)) result.exit_code = WEXITSTATUS(status);
    return result;
}

}  // namespace

TEST_CASE("criterion 1: simplex QP vs grid oracle at step 0.005") {
    Criterion c(1, "face enumeration brackets the 0.005 grid on 112 programs");
    Rng rng(1001);
    std::vector<SimplexQuadraticProgram> programs;
    for (int i = 0; i < 100; ++i) programs.push_back(test::random_concave_program(rng));
    for (const auto& [m1, m2] : std::vector<std::pair<int, int>>{{5, 5}, {6, 9}, {4, 11}}) {
        const Multiplicities m(m1, m2);
        const CurvatureNormalSystem sys = curvature_normals(m);
        for (int k = 0; k < 4; ++k) programs.push_back(acs_vertex_program(sys, m, k));
    }
    for (std::size_t i = 0; i < programs.size(); ++i) {
        const SimplexSolution sol = maximize_over_simplex(programs[i]);
        const GridOracleResult grid = grid_oracle(programs[i], 0.005);
        c.require(sol.value >= grid.value - 1e-9,
                  "program " + std::to_string(i) + ": face max undershoots the grid");
        c.require(sol.value <= grid.value + grid.resolution_bound + 1e-9,
                  "program " + std::to_string(i) + ": face max exceeds grid + bound");
    }
    c.require(c.elapsed_seconds() < 10.0, "runtime exceeded 10 s");
    c.finish();
}

TEST_CASE("criterion 2: negativity sweep m1 in [5,12], m2 in [m1,60]") {
    Criterion c(2, "max_acs < 0 and dominated by the multiplicity bound");
    for (int m1 = 5; m1 <= 12; ++m1)
        for (int m2 = m1; m2 <= 60; ++m2) {
            const Multiplicities m(m1, m2);
            const double value = max_acs(m).value;
            c.require(value < 0.0, "max_acs(" + std::to_string(m1) + "," + std::to_string(m2) +
                                       ") not negative");
            c.require(value <= simple_upper_bound(m) + 1e-9,
                      "bound violated at (" + std::to_string(m1) + "," + std::to_string(m2) + ")");
        }
    c.require(c.elapsed_seconds() < 30.0, "runtime exceeded 30 s");
    c.finish();
}

TEST_CASE("criterion 3: sff evaluation equals the simplex reduction minus cross term") {
    Criterion c(3, "ACS(X,N) = ACS'(s,t) - 2|II(X,N)|^2 on 100 random frames per family");
    Rng rng(1003);
    for (const auto& [m1, m2] : std::vector<std::pair<int, int>>{{5, 5}, {6, 9}}) {
        const Multiplicities m(m1, m2);
        const CurvatureNormalSystem sys = curvature_normals(m);
        const SffTensor sff = build_sff(sys, m);
        const Vec2 h{-m.n() * sys.p[0], -m.n() * sys.p[1]};
        for (int trial = 0; trial < 100; ++trial) {
            const auto [x, y] = test::random_orthonormal_pair(m.n(), rng);
            const Simplex4 s = test::distribution_weights(x, m);
            const Simplex4 t = test::distribution_weights(y, m);
            const Vec2 cross = sff.apply(x, y);
            const double expected = acs_prime(sys, m, s, t) - 2.0 * dot2(cross, cross);
            c.require(std::fabs(acs_from_sff(sff, h, x, y) - expected) < 1e-9,
                      "identity violated for (" + std::to_string(m1) + "," + std::to_string(m2) +
                          ") trial " + std::to_string(trial));
        }
    }
    c.finish();
}

TEST_CASE("criterion 4: curvature diagnostics") {
    Criterion c(4, "curvature normals, Ricci positivity, extreme sectional divergence");
    for (int m1 = 1; m1 <= 8; ++m1)
        for (int m2 = m1; m2 <= 24; ++m2) {
            const Multiplicities m(m1, m2);
            const CurvatureNormalSystem sys = curvature_normals(m);
            const std::array<int, 4> mult{m.m1, m.m2, m.m1, m.m2};
            Vec2 h{0.0, 0.0};
            for (int i = 0; i < 4; ++i) {
                c.require(std::fabs(dot2(sys.xi[i], sys.p) + 1.0) < 1e-12,
                          "<xi_i, p> != -1 at (" + std::to_string(m1) + "," + std::to_string(m2) +
                              ")");
                h[0] += mult[i] * sys.xi[i][0];
                h[1] += mult[i] * sys.xi[i][1];
            }
            c.require(std::hypot(h[0] + m.n() * sys.p[0], h[1] + m.n() * sys.p[1]) < 1e-10,
                      "mean curvature != -n p at (" + std::to_string(m1) + "," +
                          std::to_string(m2) + ")");
            if (max_acs(m).value < 0.0) {
                for (double lam : ricci_eigenvalues(sys, m))
                    c.require(lam > 0.0, "nonpositive Ricci eigenvalue at (" +
                                             std::to_string(m1) + "," + std::to_string(m2) + ")");
            }
        }
    double prev = 0.0;
    for (int m2 : {100, 10000, 1000000}) {
        const double sec = extreme_sectional(curvature_normals(Multiplicities(4, m2)));
        c.require(sec < 0.0, "extreme sectional not negative at m2 = " + std::to_string(m2));
        c.require(sec < prev, "magnitude not increasing at m2 = " + std::to_string(m2));
        prev = sec;
    }
    c.finish();
}

TEST_CASE("criterion 5: focal bounds and Stiefel thresholds") {
    Criterion c(5, "focal negativity iff 4 m2 > 3 m1 + 10; thresholds k >= 6/4/3");
    for (int m1 = 1; m1 <= 20; ++m1)
        for (int m2 = 1; m2 <= 60; ++m2) {
            const bool exact = 4LL * m2 > 3LL * m1 + 10;
            c.require((focal_acs_upper(m1, m2) < 0.0) == exact,
                      "sign mismatch at (" + std::to_string(m1) + "," + std::to_string(m2) + ")");
            c.require(focal_acs_negative(m1, m2) == exact,
                      "predicate mismatch at (" + std::to_string(m1) + "," + std::to_string(m2) +
                          ")");
        }
    for (int k = 3; k <= 12; ++k) {
        ExampleFamily real{FamilyKind::HomogeneousReal, k, 0, LeafKind::FocalMPlus};
        ExampleFamily cplx{FamilyKind::HomogeneousComplex, k, 0, LeafKind::FocalMPlus};
        ExampleFamily quat{FamilyKind::HomogeneousQuaternionic, k, 0, LeafKind::FocalMPlus};
        c.require(check_conditions(real).certified == (k >= 6),
                  "real Stiefel threshold failed at k = " + std::to_string(k));
        c.require(check_conditions(cplx).certified == (k >= 4),
                  "complex Stiefel threshold failed at k = " + std::to_string(k));
        c.require(check_conditions(quat).certified == (k >= 3),
                  "quaternionic Stiefel threshold failed at k = " + std::to_string(k));
    }
    c.finish();
}

TEST_CASE("criterion 6: FKM catalog exactness") {
    Criterion c(6, "delta table, exceptional pairs, exact Clifford relations");
    const long long expected_delta[] = {1, 2, 4, 4, 8, 8, 8, 8, 16, 32, 64, 64, 128, 128, 128, 128};
    for (int m = 1; m <= 16; ++m)
        c.require(delta(m) == expected_delta[m - 1], "delta(" + std::to_string(m) + ") wrong");
    for (int m = 1; m <= 8; ++m)
        c.require(delta(m + 8) == 16 * delta(m), "recursion fails at m = " + std::to_string(m));

    const std::set<std::pair<int, int>> exceptional{{2, 2}, {4, 2}, {5, 1},
                                                    {6, 1}, {8, 2}, {9, 1}};
    for (int m = 1; m <= 10; ++m)
        for (int k = 1; k <= 4; ++k) {
            if (static_cast<long long>(k) * delta(m) - m - 1 < 1) continue;
            const bool flagged = fkm_multiplicities(m, k).exceptional;
            c.require(flagged == (exceptional.count({m, k}) > 0),
                      "exceptional flag wrong at (" + std::to_string(m) + "," + std::to_string(k) +
                          ")");
        }

    for (int m = 1; m <= 9; ++m)
        for (int k = 1; k <= 2; ++k)
            c.require(verify_clifford(clifford_system(m, k)),
                      "relations fail at (" + std::to_string(m) + "," + std::to_string(k) + ")");
    c.require(c.elapsed_seconds() < 10.0, "runtime exceeded 10 s");
    c.finish();
}

TEST_CASE("criterion 7: trace-normalized minimum closed forms") {
    Criterion c(7, "a_n closed form, 32-restart estimates, odd-n bracket");
    for (int n : {2, 4, 6, 8, 10}) {
        const MinimizerWitness w = explicit_even_minimizer(n);
        c.require(std::fabs(w.value - a_n_closed(n)) < 1e-12,
                  "explicit minimizer off at n = " + std::to_string(n));
        const double est = estimate_a_n(n, 32, 0);
        c.require(std::fabs(est - a_n_closed(n)) < 1e-6,
                  "estimate off at n = " + std::to_string(n));
    }
    for (int n : {3, 5, 7, 9, 11}) {
        const double est = estimate_a_n(n, 32, 0);
        c.require(est >= a_n_closed(n + 1) - 1e-9 && est <= a_n_closed(n - 1) + 1e-9,
                  "odd-n estimate outside the bracket at n = " + std::to_string(n));
    }
    c.require(c.elapsed_seconds() < 60.0, "runtime exceeded 60 s");
    c.finish();
}

TEST_CASE("criterion 8: b_n trichotomy and the SU(20) witness") {
    Criterion c(8, "b_n sign by parity of 18, witness value 1/3200");
    for (int n = 2; n <= 40; n += 2) {
        const double b = b_n_closed(n);
        if (n < 18) c.require(b > 0.0, "b_n not positive at n = " + std::to_string(n));
        if (n == 18) c.require(b == 0.0, "b_18 nonzero");
        if (n > 18) c.require(b < 0.0, "b_n not negative at n = " + std::to_string(n));
    }
    const MinimizerWitness w = positive_witness(20);
    c.require(std::fabs(w.value - 1.0 / 3200.0) < 1e-9, "witness value not 1/3200");
    const KillingMetric metric = KillingMetric::su(20);
    c.require(std::fabs(killing_inner(w.x, w.x, metric) - 1.0) < 1e-12, "witness |X| != 1");
    c.require(std::fabs(killing_inner(w.n_mat, w.n_mat, metric) - 1.0) < 1e-12,
              "witness |N| != 1");
    c.require(std::fabs(killing_inner(w.x, w.n_mat, metric)) < 1e-12, "witness <X,N> != 0");
    c.finish();
}

TEST_CASE("criterion 9: sampled bounds for Sp(n) and the Grassmannians") {
    Criterion c(9, "10^4 constrained samples stay below the closed-form bounds");
    for (int n : {2, 3, 5}) {
        const EmbeddingFamily family = EmbeddingFamily::sp(n);
        const double bound = -1.0 / (4.0 * n + 4.0);
        double worst = -1e300;
        for (long long i = 0; i < 10000; ++i) {
            const auto [x, nm] = sample_sp_pair(n, stream_seed(0, i));
            worst = std::max(worst, acs_value(family, x, nm));
        }
        c.require(worst <= bound + 1e-9, "Sp(" + std::to_string(n) + ") sample above bound");
    }
    for (const auto& [d, n] : std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 4}}) {
        const EmbeddingFamily family = EmbeddingFamily::grassmann_h(d, n);
        const double bound = -3.0 / (2.0 * (n + 1.0));
        double worst = -1e300;
        for (long long i = 0; i < 10000; ++i) {
            const auto [x, nm] = grassmann_sample_pair(d, n, stream_seed(0, i));
            worst = std::max(worst, acs_value(family, x, nm));
        }
        c.require(worst <= bound + 1e-9, "Grassmannian(" + std::to_string(d) + "," +
                                             std::to_string(n) + ") sample above bound");
    }
    c.require(c.elapsed_seconds() < 60.0, "runtime exceeded 60 s");
    c.finish();
}

TEST_CASE("criterion 10: constant terms and the sff oracle route") {
    Criterion c(10, "constant-term identities at 1e-12, oracle equality at 1e-9");
    for (int n = 2; n <= 24; ++n) {
        const EmbeddingFamily su = EmbeddingFamily::su(n);
        c.require(std::fabs(su.constant_term_general() + 1.0 / (static_cast<double>(n) * n)) <
                      1e-12,
                  "su constant term off at n = " + std::to_string(n));
        const EmbeddingFamily sp = EmbeddingFamily::sp(n);
        c.require(std::fabs(sp.constant_term_general() + 1.0 / (2.0 * (n + 1))) < 1e-12,
                  "sp constant term off at n = " + std::to_string(n));
        for (int d = 1; d < n; ++d) {
            const EmbeddingFamily gr = EmbeddingFamily::grassmann_h(d, n);
            c.require(std::fabs(gr.constant_term_general() + 2.0 / (n + 1.0)) < 1e-12,
                      "grassmannian constant term off at (d,n) = (" + std::to_string(d) + "," +
                          std::to_string(n) + ")");
        }
    }
    const EmbeddingFamily su6 = EmbeddingFamily::su(6);
    const EmbeddingFamily sp3 = EmbeddingFamily::sp(3);
    const EmbeddingFamily gr25 = EmbeddingFamily::grassmann_h(2, 5);
    for (long long i = 0; i < 100; ++i) {
        const auto [xs, ns] = sample_su_pair(6, stream_seed(10, i));
        c.require(std::fabs(acs_via_sff(su6, xs, ns) - acs_value(su6, xs, ns)) < 1e-9,
                  "su oracle mismatch at sample " + std::to_string(i));
        const auto [xp, np] = sample_sp_pair(3, stream_seed(20, i));
        c.require(std::fabs(acs_via_sff(sp3, xp, np) - acs_value(sp3, xp, np)) < 1e-9,
                  "sp oracle mismatch at sample " + std::to_string(i));
        const auto [xg, ng] = grassmann_sample_pair(2, 5, stream_seed(30, i));
        c.require(std::fabs(acs_via_sff(gr25, xg, ng) - acs_value(gr25, xg, ng)) < 1e-9,
                  "grassmannian oracle mismatch at sample " + std::to_string(i));
    }
    c.finish();
}

TEST_CASE("criterion 11: exact index-constant identity up to d = 200") {
    Criterion c(11, "robust constant = plain constant of the Veronese dimension");
    for (long long d = 1; d <= 200; ++d)
        c.require(robust_index_constant(d) == acs_index_constant(veronese_dim(d)),
                  "identity fails at d = " + std::to_string(d));
    c.require(robust_index_constant(4).to_string() == "1/91", "spot value d = 4");
    c.require(robust_index_constant(2).to_string() == "1/10", "spot value d = 2");
    c.finish();
}

TEST_CASE("criterion 12: CLI byte-determinism and exit-code taxonomy") {
    Criterion c(12, "byte-identical JSON across runs; exit codes match verdicts");
    struct Expectation {
        std::string args;
        int exit_code;
    };
    const std::vector<Expectation> runs{
        {"--json isoparametric --m1 6 --m2 9", 0},
        {"--json isoparametric --m1 2 --m2 2", 2},
        {"--json isoparametric --m1 1 --m2 1", 3},
        {"--json isoparametric --m1 6 --m2 9 --focal", 0},
        {"--json isoparametric --m1 5 --m2 5 --oracle --grid-step 0.02", 0},
        {"--json group --kind su --n 17 --samples 200", 0},
        {"--json group --kind su --n 18 --samples 100", 0},
        {"--json group --kind su --n 20", 2},
        {"--json group --kind su --n 19", 2},
        {"--json group --kind sp --n 2 --samples 200", 0},
        {"--json grassmannian --d 1 --n 2 --samples 200", 0},
        {"--json grassmannian --d 1 --n 3 --samples 50 --strict-trace", 0},
        {"--json catalog", 0},
        {"--json catalog --family homogeneous-real --k 6 --focal", 0},
        {"--json catalog --family fkm --m 4 --k 3 --focal", 0},
        {"--json clifford --m 4 --k 3", 0},
        {"--json clifford --m 9 --k 1", 0},
        {"--json constants --dim 4", 3},
    };
    for (const auto& run : runs) {
        const CliResult first = run_cli(run.args);
        const CliResult second = run_cli(run.args);
        c.require(first.exit_code == run.exit_code,
                  "'" + run.args + "': exit " + std::to_string(first.exit_code) + " != " +
                      std::to_string(run.exit_code));
        c.require(!first.output.empty(), "'" + run.args + "': empty output");
        c.require(first.output == second.output, "'" + run.args + "': output not byte-stable");

        // Verdict name in the JSON must map to the observed exit code.
        if (first.output.find("\"verdict\"") != std::string::npos) {
            const auto parsed = nlohmann::json::parse(first.output, nullptr, false);
            if (!parsed.is_discarded() && parsed.contains("verdict")) {
                const std::string verdict = parsed["verdict"];
                int expected = -1;
                if (verdict == "certified-negative" || verdict == "certified-nonpositive")
                    expected = 0;
                else if (verdict == "positive-witness-found")
                    expected = 2;
                else
                    expected = 3;
                c.require(first.exit_code == expected,
                          "'" + run.args + "': exit code does not match verdict " + verdict);
            }
        }
    }
    // Help is a successful run; usage errors exit 1.
    c.require(run_cli("--help").exit_code == 0, "--help should exit 0");
    c.require(run_cli("isoparametric --m1 6").exit_code == 1, "missing flag should exit 1");
    c.require(run_cli("nonsense").exit_code == 1, "unknown subcommand should exit 1");
    c.require(run_cli("isoparametric --m1 0 --m2 3").exit_code == 1,
              "invalid range should exit 1");

    // The worker cap must not change results: per-sample seeding makes the
    // sweep reduction order-independent.
    const std::string sweep_args = "--json group --kind sp --n 2 --samples 300";
    const CliResult one = run_cli(sweep_args, "ACS_CERT_THREADS=1 ");
    const CliResult four = run_cli(sweep_args, "ACS_CERT_THREADS=4 ");
    c.require(one.exit_code == 0 && one.output == four.output,
              "sweep output depends on ACS_CERT_THREADS");
    c.finish();
}
