// Acceptance gate: one line per criterion, exit 0 only when all pass.
// argv[1] is the path to the command line tool, used by the determinism
// criterion; everything else runs in-process against the library.

#include <orbitft/formulas.hpp>
#include <orbitft/serialize.hpp>
#include <orbitft/verify.hpp>

#include <chrono>
#include <cstdio>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

using namespace orbitft;

namespace {

int failures_total = 0;

void report(int id, const std::string& name, bool pass, const std::string& detail) {
    std::ostringstream os;
    os << "criterion " << (id < 10 ? "0" : "") << id << " " << name << ": "
       << (pass ? "PASS" : "FAIL");
    if (!detail.empty()) os << " -- " << detail;
    std::cout << os.str() << "\n";
    if (!pass) ++failures_total;
}

std::string suite_detail(const SuiteResult& res, long long wall_ms) {
    std::ostringstream os;
    os << res.cells << " cells in " << wall_ms << " ms";
    if (!res.failures.empty()) {
        os << "; " << res.failures.size() << " failing, first: " << res.failures.front();
        if (res.failures.size() > 1) os << " (and " << res.failures.size() - 1 << " more)";
    }
    for (const std::string& note : res.notes) os << "; note: " << note;
    return os.str();
}

void criterion_suite(int id, const std::string& name, const std::string& suite, int n_max,
                     long long budget_ms = 0) {
    auto start = std::chrono::steady_clock::now();
    SuiteResult res = run_suite(suite, n_max, 1);
    auto wall = std::chrono::duration_cast<std::chrono::milliseconds>(
                    std::chrono::steady_clock::now() - start)
                    .count();
    bool pass = res.ok() && (budget_ms == 0 || wall < budget_ms);
    std::string detail = suite_detail(res, wall);
    if (budget_ms > 0 && wall >= budget_ms) detail += "; over the time budget";
    report(id, name, pass, detail);
}

Polynomial rp(int n, int p, int q) { return poly_root(n, Root{p, q}); }

void criterion_catalog() {
    std::vector<std::string> bad;
    auto expect = [&](int n, int l, std::vector<int> q, const Polynomial& num,
                      const std::vector<Rational>& coeffs) {
        ComponentFormula f =
            nilpotent_ft_direct(make_levi_class(q), canonical_component(make_cartan(n, l)));
        std::vector<Rational> got;
        for (const FactoredTerm& t : f.factored) got.push_back(t.coeff);
        if (f.numerator == num && got == coeffs) return;
        std::ostringstream os;
        os << "class (";
        for (size_t i = 0; i < q.size(); ++i) os << (i ? "," : "") << q[i];
        os << ") on h_" << l << " of gl(" << n << ") differs from the catalog";
        bad.push_back(os.str());
    };
    expect(2, 1, {1, 1}, poly_constant(2, GaussianRational(2)), {Rational(2)});
    expect(3, 1, {1, 1, 1}, poly_constant(3, GaussianRational(6)), {Rational(6)});
    expect(3, 0, {2, 1}, rp(3, 0, 1), {Rational(1)});
    expect(4, 0, {2, 2}, scalar_mul(GaussianRational(2), rp(4, 0, 1) * rp(4, 2, 3)), {Rational(2)});
    expect(4, 1, {2, 2}, rp(4, 0, 1) * rp(4, 2, 3), {Rational(1)});
    expect(4, 2, {2, 2},
           scalar_mul(GaussianRational(2), rp(4, 0, 1) * rp(4, 2, 3) + rp(4, 0, 2) * rp(4, 1, 3) +
                                               rp(4, 0, 3) * rp(4, 1, 2)),
           {Rational(2), Rational(2), Rational(2)});
    std::string detail = bad.empty() ? "6 catalog rows match the combinatorial engine"
                                     : bad.front();
    report(2, "closed-form catalog, ranks 2 to 4", bad.empty(), detail);
}

void criterion_scaling() {
    // moving the eigenvalues toward the base point at rate 2^-j must halve the
    // deviation of the scaling factor from 1; exact rationals, no tolerance
    std::vector<std::string> bad;
    int checked = 0;
    for (int n = 2; n <= 4; ++n) {
        std::uint64_t cls_idx = 0;
        for (const LeviClass& cls : levi_classes(n)) {
            ++cls_idx;
            if (cls.q.size() < 2) continue; // the full group scales trivially
            std::vector<Rational> xi(n);
            {
                int slot = 0;
                for (size_t b = 0; b < cls.q.size(); ++b)
                    for (int t = 0; t < cls.q[b]; ++t)
                        xi[slot++] = Rational(static_cast<long>(cls.q.size() - b));
            }
            for (int trial = 0; trial < 3; ++trial) {
                std::mt19937_64 rng(1000ULL * n + 31ULL * cls_idx + trial);
                std::vector<Rational> eta(n);
                std::vector<Rational> devs;
                for (int reroll = 0; reroll < 64 && devs.empty(); ++reroll) {
                    for (int s = 0; s < n; ++s)
                        eta[s] = Rational(static_cast<long>(rng() % 19) - 9);
                    // halving is the generic linear regime: directions with a
                    // vanishing first derivative decay quadratically instead
                    Rational first_order(0);
                    for (int p = 0; p < n; ++p)
                        for (int q = p + 1; q < n; ++q)
                            if (xi[p] != xi[q])
                                first_order += (eta[p] - eta[q]) / (xi[p] - xi[q]);
                    if (first_order == 0) continue;
                    std::vector<Rational> trial_devs;
                    bool usable = true;
                    for (int j = 10; j <= 13; ++j) {
                        Rational t(1, 1L << j);
                        std::vector<Rational> lam(n);
                        for (int s = 0; s < n; ++s) lam[s] = xi[s] + t * eta[s];
                        Rational dev = c_lambda(lam, xi, cls) - 1;
                        if (dev == 0) {
                            usable = false;
                            break;
                        }
                        trial_devs.push_back(dev);
                    }
                    if (usable) devs = std::move(trial_devs);
                }
                if (devs.empty()) {
                    bad.push_back("no usable direction found for a class of gl(" +
                                  std::to_string(n) + ")");
                    continue;
                }
                for (size_t j = 0; j + 1 < devs.size(); ++j) {
                    Rational ratio = devs[j + 1] / devs[j];
                    ++checked;
                    if (ratio < Rational(2, 5) || ratio > Rational(3, 5)) {
                        std::ostringstream os;
                        os << "halving ratio " << rational_to_string(ratio)
                           << " outside [2/5, 3/5] for gl(" << n << ")";
                        bad.push_back(os.str());
                    }
                }
            }
        }
    }
    std::ostringstream ok;
    ok << checked << " exact ratios inside [2/5, 3/5]";
    report(10, "chamber scaling limit halves deviations", bad.empty(),
           bad.empty() ? ok.str() : bad.front());
}

struct CliResult {
    int code = -1;
    std::string out;
};

CliResult run_cli(const std::string& cli, const std::string& args) {
    CliResult r;
    std::string cmd = cli + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return r;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, got);
    int st = pclose(p);
    r.code = (st >= 0 && WIFEXITED(st)) ? WEXITSTATUS(st) : -1;
    return r;
}

void criterion_determinism(const std::string& cli) {
    std::vector<std::string> bad;

    CliResult a = run_cli(cli, "ft --n 4 --levi 2,2 --cartan 1 --engine direct --format json --no-cache");
    CliResult b = run_cli(cli, "ft --n 4 --levi 2,2 --cartan 1 --engine direct --format json --no-cache");
    if (a.code != 0 || b.code != 0) bad.push_back("transform command failed");
    else if (a.out != b.out) bad.push_back("two identical transform runs differ");

    CliResult j1 = run_cli(cli, "verify --suites matching,counting,regular_elliptic --n-max 3 --jobs 1");
    CliResult j4 = run_cli(cli, "verify --suites matching,counting,regular_elliptic --n-max 3 --jobs 4");
    if (j1.code != 0 || j4.code != 0) bad.push_back("verify command failed");
    else if (j1.out != j4.out) bad.push_back("single-thread and four-thread verify reports differ");

    int round_trips = 0;
    for (int n = 1; n <= 4 && bad.empty(); ++n) {
        for (int l = 0; l <= n / 2; ++l) {
            Component comp = canonical_component(make_cartan(n, l));
            for (const LeviClass& cls : levi_classes(n)) {
                for (int e = 0; e < 2; ++e) {
                    ComponentFormula f =
                        e ? nilpotent_ft_oracle(cls, comp) : nilpotent_ft_direct(cls, comp);
                    FormulaRecord rec = to_record(f);
                    std::string text = render_record(rec);
                    FormulaRecord back = parse_record(text);
                    if (!(back == rec) || render_record(back) != text || !record_consistent(back)) {
                        bad.push_back("record round trip is lossy at gl(" + std::to_string(n) + ")");
                        break;
                    }
                    ++round_trips;
                }
            }
        }
    }
    std::ostringstream ok;
    ok << "byte-identical reruns, jobs-independent reports, " << round_trips
       << " lossless record round trips";
    report(11, "deterministic output and lossless round trips", bad.empty(),
           bad.empty() ? ok.str() : bad.front());
}

}

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: acceptance <path-to-cli>\n";
        return 2;
    }
    std::string cli = argv[1];

    criterion_suite(1, "dual engine agreement, rank <= 5", "oracle", 5, 300000);
    criterion_catalog();
    criterion_suite(3, "integrality and positivity, rank <= 6", "integrality", 6);
    criterion_suite(4, "support threshold, rank <= 6", "support", 6);
    criterion_suite(5, "homogeneity and orbit dimension, rank <= 6", "homogeneity", 6);
    criterion_suite(6, "cayley matching relations, rank <= 4", "matching", 4);
    criterion_suite(7, "stabilizer counting identity, rank <= 5", "counting", 5);
    criterion_suite(8, "derivative commutation, rank <= 5", "commutator", 5);
    criterion_suite(9, "signed chamber counts at split rank 2, 4, 6", "regular_elliptic", 6);
    criterion_scaling();
    criterion_determinism(cli);

    if (failures_total == 0) {
        std::cout << "all 11 criteria pass\n";
        return 0;
    }
    std::cout << failures_total << " of 11 criteria fail\n";
    return 1;
}
