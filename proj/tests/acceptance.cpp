// Acceptance gate: one line per criterion, PASS or FAIL, exit 0 only if all
// pass. Everything is exact integer arithmetic; a criterion fails on the
// first coefficient that differs. Criterion 11 runs the installed CLI
// binary (path from the QPCHAR_BIN environment variable, with fallbacks to
// the usual build locations) twice per command and compares bytes; if no
// binary can be found it falls back to the in-process command runner.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "oracles.hpp"
#include "qpchar/characters.hpp"
#include "qpchar/cli.hpp"
#include "qpchar/partitions.hpp"
#include "qpchar/qpbasis.hpp"
#include "qpchar/rootsys.hpp"
#include "qpchar/series.hpp"

using namespace qpchar;

namespace {

// Shared cache of quasi-particle enumerations; criteria 1-3 and 10 walk
// the same configurations.
struct Workspace {
    std::map<std::string, std::vector<QuasiParticleMonomial>> monomials;

    static std::string key(const SubspaceSpec& spec) {
        return family_name(spec.family) + ":" + std::to_string(spec.rank) + ":" +
               (spec.level.is_verma() ? "verma" : std::to_string(spec.level.k()));
    }

    const std::vector<QuasiParticleMonomial>& get(const SubspaceSpec& spec, int qmax) {
        auto it = monomials.find(key(spec));
        if (it == monomials.end()) {
            it = monomials.emplace(key(spec), enumerate_admissible(spec, qmax)).first;
        }
        return it->second;
    }
};

TruncatedSeries series_from_monomials(const std::vector<QuasiParticleMonomial>& monomials,
                                      int rank, int qmax) {
    TruncatedSeries out(rank, qmax);
    for (const auto& mono : monomials) {
        const GradedWeight w = graded_weight(mono);
        out.add_term({static_cast<int>(w.total_degree), w.color_type}, 1);
    }
    return out;
}

bool report_equal(const TruncatedSeries& a, const TruncatedSeries& b, const std::string& what,
                  std::ostream& log) {
    const ComparisonReport r = verify_equal(a, b);
    if (!r.equal) {
        const auto& [e, ca, cb] = *r.first_mismatch;
        log << "  " << what << ": mismatch at q^" << e.dq << " y=(";
        for (size_t i = 0; i < e.dy.size(); ++i) {
            log << (i ? "," : "") << e.dy[i];
        }
        log << "): " << ca.str() << " vs " << cb.str() << "\n";
    }
    return r.equal;
}

// Coefficient-wise a <= b over the union of their supports.
bool series_le(const TruncatedSeries& a, const TruncatedSeries& b, const std::string& what,
               std::ostream& log) {
    for (const auto& [e, c] : a.terms()) {
        if (c > b.coefficient(e)) {
            log << "  " << what << ": coefficient at q^" << e.dq << " decreased\n";
            return false;
        }
    }
    return true;
}

bool direct_equals_fermionic(Workspace& ws, const std::vector<SubspaceSpec>& specs, int qmax,
                             std::ostream& log) {
    bool ok = true;
    for (const auto& spec : specs) {
        const TruncatedSeries direct =
            series_from_monomials(ws.get(spec, qmax), spec.rank, qmax);
        const TruncatedSeries fermi =
            fermionic_character({spec.family, spec.rank, spec.level}, qmax);
        ok = report_equal(direct, fermi, Workspace::key(spec), log) && ok;
    }
    return ok;
}

// ---- criterion bodies -----------------------------------------------------

bool criterion_basis_b(Workspace& ws, std::ostream& log) {
    const std::vector<SubspaceSpec> specs = {
        {AlgebraFamily::B, 2, Level::finite(1)}, {AlgebraFamily::B, 2, Level::finite(2)},
        {AlgebraFamily::B, 2, Level::finite(3)}, {AlgebraFamily::B, 3, Level::finite(1)},
        {AlgebraFamily::B, 3, Level::finite(2)}, {AlgebraFamily::B, 4, Level::finite(1)},
    };
    return direct_equals_fermionic(ws, specs, 8, log);
}

bool criterion_basis_c(Workspace& ws, std::ostream& log) {
    const std::vector<SubspaceSpec> specs = {
        {AlgebraFamily::C, 3, Level::finite(1)},
        {AlgebraFamily::C, 3, Level::finite(2)},
        {AlgebraFamily::C, 4, Level::finite(1)},
    };
    return direct_equals_fermionic(ws, specs, 8, log);
}

bool criterion_verma(Workspace& ws, std::ostream& log) {
    const std::vector<SubspaceSpec> specs = {
        {AlgebraFamily::B, 2, Level::verma()},
        {AlgebraFamily::B, 3, Level::verma()},
        {AlgebraFamily::C, 3, Level::verma()},
    };
    return direct_equals_fermionic(ws, specs, 8, log);
}

bool criterion_headline(std::ostream& log) {
    bool ok = true;
    for (const RootSystem rs :
         {RootSystem{AlgebraFamily::B, 2}, RootSystem{AlgebraFamily::B, 3},
          RootSystem{AlgebraFamily::C, 3}}) {
        const TruncatedSeries fermi =
            fermionic_character({rs.family, rs.rank, Level::verma()}, 10);
        const TruncatedSeries boson = bosonic_character_verma(rs, 10);
        ok = report_equal(fermi, boson,
                          family_name(rs.family) + std::to_string(rs.rank) + " q<=10", log) &&
             ok;
    }
    return ok;
}

bool criterion_bosonic_pbw(std::ostream& log) {
    bool ok = true;
    for (const RootSystem rs :
         {RootSystem{AlgebraFamily::B, 2}, RootSystem{AlgebraFamily::B, 3},
          RootSystem{AlgebraFamily::B, 4}, RootSystem{AlgebraFamily::C, 3},
          RootSystem{AlgebraFamily::C, 4}}) {
        const std::string tag = family_name(rs.family) + std::to_string(rs.rank);
        const TruncatedSeries boson = bosonic_character_verma(rs, 8);
        const TruncatedSeries pbw = pbw_monomial_count_verma(rs, 8);
        ok = report_equal(boson, pbw, tag, log) && ok;

        const TruncatedSeries at_y1 = specialize_y(boson);
        const Coeff q1 = at_y1.coefficient({1, std::vector<int>(size_t(rs.rank), 0)});
        if (q1 != Coeff(rs.rank) * rs.rank) {
            log << "  " << tag << ": q^1 coefficient at y->1 is " << q1.str() << ", expected "
                << rs.rank * rs.rank << "\n";
            ok = false;
        }
    }
    const TruncatedSeries b2 = specialize_y(bosonic_character_verma({AlgebraFamily::B, 2}, 2));
    if (b2.coefficient({2, {0, 0}}) != 14) {
        log << "  B2: q^2 coefficient at y->1 is not 14\n";
        ok = false;
    }
    return ok;
}

bool criterion_minsum_identities(std::ostream& log) {
    // Singles: the same-color min-sum equals the squared-row sum of the
    // conjugate, for every partition of size <= 12.
    std::vector<std::vector<int>> singles;
    for (int n = 0; n <= 12; ++n) {
        for (auto& p : oracles::all_partitions(n)) {
            singles.push_back(std::move(p));
        }
    }
    for (const auto& lam : singles) {
        if (minsum_same_color(lam) != quadratic_same_color(conjugate(lam))) {
            log << "  same-color identity fails for a partition of "
                << std::to_string(std::accumulate(lam.begin(), lam.end(), 0)) << "\n";
            return false;
        }
    }

    // Pairs with total size <= 8: aligned and both folded orientations.
    std::vector<std::vector<int>> small;
    for (int n = 0; n <= 8; ++n) {
        for (auto& p : oracles::all_partitions(n)) {
            small.push_back(std::move(p));
        }
    }
    auto size_of = [](const std::vector<int>& p) {
        int s = 0;
        for (int v : p) s += v;
        return s;
    };
    for (const auto& lam : small) {
        for (const auto& mu : small) {
            if (size_of(lam) + size_of(mu) > 8) {
                continue;
            }
            const auto cl = conjugate(lam);
            const auto cm = conjugate(mu);
            const bool ok =
                minsum_cross_color(lam, mu, CrossDoubling::none) ==
                    quadratic_cross_color(cl, cm, CrossPairing::aligned) &&
                minsum_cross_color(lam, mu, CrossDoubling::double_a) ==
                    quadratic_cross_color(cl, cm, CrossPairing::folded) &&
                minsum_cross_color(lam, mu, CrossDoubling::double_b) ==
                    quadratic_cross_color(cm, cl, CrossPairing::folded);
            if (!ok) {
                log << "  cross-color identity fails for sizes " << size_of(lam) << ","
                    << size_of(mu) << "\n";
                return false;
            }
        }
    }
    return true;
}

bool criterion_partition_kernel(std::ostream& log) {
    long long checked = 0;
    for (int n = 0; n <= 30; ++n) {
        for (const auto& p : oracles::all_partitions(n)) {
            if (conjugate(conjugate(p)) != p || conjugate(p) != oracles::conjugate_by_grid(p)) {
                log << "  conjugation fails on a partition of " << n << "\n";
                return false;
            }
            ++checked;
        }
    }
    if (checked < 10000) {
        log << "  only " << checked << " partitions checked\n";
        return false;
    }

    for (int r = 0; r <= 8; ++r) {
        const TruncatedSeries gf = pochhammer_inverse(r, 1, 20);
        for (int j = 0; j <= 20; ++j) {
            if (count_partitions_max_parts(j, r) != gf.coefficient({j, {0}})) {
                log << "  p_" << r << "(" << j << ") disagrees with its generating function\n";
                return false;
            }
        }
    }
    return true;
}

bool criterion_rogers_ramanujan(std::ostream& log) {
    const TruncatedSeries s =
        specialize_y(fermionic_character({AlgebraFamily::A, 1, Level::finite(1)}, 9));
    const std::vector<long long> expected = {1, 1, 1, 1, 2, 2, 3, 3, 4, 5};
    for (int n = 0; n <= 9; ++n) {
        const Coeff c = s.coefficient({n, {0}});
        if (c != expected[size_t(n)]) {
            log << "  q^" << n << ": got " << c.str() << ", expected " << expected[size_t(n)]
                << "\n";
            return false;
        }
        if (c != oracles::count_difference_two_partitions(n)) {
            log << "  q^" << n << " disagrees with the difference-2 enumerator\n";
            return false;
        }
    }
    return true;
}

bool criterion_level_monotonicity(std::ostream& log) {
    bool ok = true;
    for (const RootSystem rs : {RootSystem{AlgebraFamily::B, 2}, RootSystem{AlgebraFamily::C, 3}}) {
        const std::string tag = family_name(rs.family) + std::to_string(rs.rank);
        std::vector<TruncatedSeries> ladder;
        for (int k = 1; k <= 3; ++k) {
            ladder.push_back(fermionic_character({rs.family, rs.rank, Level::finite(k)}, 8));
        }
        ladder.push_back(fermionic_character({rs.family, rs.rank, Level::verma()}, 8));
        for (size_t i = 0; i + 1 < ladder.size(); ++i) {
            ok = series_le(ladder[i], ladder[i + 1], tag + " step " + std::to_string(i), log) &&
                 ok;
        }
    }
    return ok;
}

bool criterion_minimal_degree(Workspace& ws, std::ostream& log) {
    const std::vector<SubspaceSpec> specs = {
        {AlgebraFamily::B, 2, Level::finite(1)}, {AlgebraFamily::B, 2, Level::finite(2)},
        {AlgebraFamily::B, 2, Level::finite(3)}, {AlgebraFamily::B, 3, Level::finite(1)},
        {AlgebraFamily::B, 3, Level::finite(2)}, {AlgebraFamily::B, 4, Level::finite(1)},
        {AlgebraFamily::C, 3, Level::finite(1)}, {AlgebraFamily::C, 3, Level::finite(2)},
        {AlgebraFamily::C, 4, Level::finite(1)}, {AlgebraFamily::B, 2, Level::verma()},
        {AlgebraFamily::B, 3, Level::verma()},   {AlgebraFamily::C, 3, Level::verma()},
    };
    bool ok = true;
    for (const auto& spec : specs) {
        const FermionicShape shape{spec.family, spec.rank, spec.level};

        std::map<DualChargeType, long long> minima;
        for (const auto& mono : ws.get(spec, 8)) {
            const DualChargeType key = full_dual_charge_type(mono);
            const long long deg = graded_weight(mono).total_degree;
            auto [it, fresh] = minima.emplace(key, deg);
            if (!fresh && deg < it->second) {
                it->second = deg;
            }
        }

        const auto types = enumerate_dual_charge_types(shape, 8);
        std::map<DualChargeType, long long> exponents;
        for (const auto& [r, q] : types) {
            if (q != quadratic_exponent(r, shape)) {
                log << "  " << Workspace::key(spec) << ": enumerated exponent disagrees with "
                    << "quadratic_exponent\n";
                ok = false;
            }
            exponents.emplace(r, q);
        }
        if (exponents.size() != types.size()) {
            log << "  " << Workspace::key(spec) << ": duplicate dual-charge-types\n";
            ok = false;
        }
        if (minima != exponents) {
            log << "  " << Workspace::key(spec)
                << ": minimal degrees and quadratic exponents disagree (" << minima.size()
                << " vs " << exponents.size() << " types)\n";
            ok = false;
        }
    }
    return ok;
}

// ---- criterion 11: CLI determinism ----------------------------------------

struct CmdResult {
    int code = -1;
    std::string output;
};

CmdResult run_cmd(const std::string& cmd) {
    const std::string full = cmd + " 2>/dev/null";
    FILE* pipe = popen(full.c_str(), "r");
    CmdResult r;
    if (!pipe) {
        return r;
    }
    char buf[4096];
    size_t n = 0;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) {
        r.output.append(buf, n);
    }
    const int status = pclose(pipe);
    if (status >= 0 && WIFEXITED(status)) {
        r.code = WEXITSTATUS(status);
    }
    return r;
}

std::string find_cli_binary() {
    if (const char* env = std::getenv("QPCHAR_BIN")) {
        if (*env && std::filesystem::exists(env)) {
            return env;
        }
    }
    for (const char* candidate : {"../tools/qpchar", "build/tools/qpchar", "./tools/qpchar"}) {
        if (std::filesystem::exists(candidate)) {
            return candidate;
        }
    }
    return "";
}

const std::vector<std::string> kCliArgLists = {
    "char --family B --rank 2 --level verma --method bosonic --qmax 3 --format json",
    "char --family A --rank 1 --level 1 --method fermionic --qmax 6 --specialize-y",
    "char --family B --rank 2 --level 1 --method direct --qmax 6 --format csv",
    "char --family C --rank 3 --level verma --method pbw --qmax 5 --format json",
    "verify --family B --rank 2 --level verma --method-a fermionic --method-b bosonic "
    "--qmax 6 --format json",
    "verify --family C --rank 3 --level 1 --method-a direct --method-b fermionic "
    "--qmax 5 --format text",
    "enum --family B --rank 2 --level 1 --qmax 1 --format json",
    "enum --family C --rank 3 --level verma --qmax 2 --format csv",
    "roots --family B --rank 4 --format json",
    "roots --family A --rank 3 --format text",
};

// In-process equivalents, used only when no binary is on disk.
std::vector<RunConfig> in_process_configs() {
    std::vector<RunConfig> configs;
    auto mk = [&](Command cmd, AlgebraFamily fam, int rank, Level level, int qmax) {
        RunConfig c;
        c.command = cmd;
        c.family = fam;
        c.rank = rank;
        c.level = level;
        c.qmax = qmax;
        return c;
    };
    RunConfig a = mk(Command::character, AlgebraFamily::B, 2, Level::verma(), 3);
    a.method = Method::bosonic;
    a.format = OutputFormat::json;
    configs.push_back(a);
    RunConfig b = mk(Command::character, AlgebraFamily::A, 1, Level::finite(1), 6);
    b.method = Method::fermionic;
    b.specialize = true;
    configs.push_back(b);
    RunConfig c = mk(Command::verify, AlgebraFamily::B, 2, Level::verma(), 6);
    c.method_a = Method::fermionic;
    c.method_b = Method::bosonic;
    c.format = OutputFormat::json;
    configs.push_back(c);
    RunConfig d = mk(Command::enumerate_basis, AlgebraFamily::B, 2, Level::finite(1), 1);
    d.format = OutputFormat::json;
    configs.push_back(d);
    RunConfig e = mk(Command::roots, AlgebraFamily::B, 4, Level::verma(), 0);
    e.format = OutputFormat::json;
    configs.push_back(e);
    return configs;
}

bool criterion_cli_determinism(std::ostream& log) {
    const std::string bin = find_cli_binary();
    if (bin.empty()) {
        log << "  note: CLI binary not found, using the in-process runner\n";
        bool ok = true;
        for (const auto& cfg : in_process_configs()) {
            std::ostringstream o1, o2, sink;
            const int c1 = run_command(cfg, o1, sink);
            const int c2 = run_command(cfg, o2, sink);
            if (c1 != c2 || o1.str() != o2.str() || c1 != 0) {
                log << "  in-process command differs between runs\n";
                ok = false;
            }
        }
        return ok;
    }

    bool ok = true;
    for (const auto& args : kCliArgLists) {
        const std::string cmd = "\"" + bin + "\" " + args;
        const CmdResult first = run_cmd(cmd);
        const CmdResult second = run_cmd(cmd);
        if (first.code != 0) {
            log << "  exit " << first.code << ": " << args << "\n";
            ok = false;
            continue;
        }
        if (first.code != second.code || first.output != second.output) {
            log << "  output differs between runs: " << args << "\n";
            ok = false;
        }
        if (first.output.empty()) {
            log << "  empty output: " << args << "\n";
            ok = false;
        }
    }
    return ok;
}

}  // namespace

int main() {
    Workspace ws;
    const std::vector<std::pair<std::string, std::function<bool(std::ostream&)>>> criteria = {
        {"direct enumeration equals fermionic sum, B family, standard levels, q<=8",
         [&](std::ostream& log) { return criterion_basis_b(ws, log); }},
        {"direct enumeration equals fermionic sum, C family, standard levels, q<=8",
         [&](std::ostream& log) { return criterion_basis_c(ws, log); }},
        {"direct enumeration equals fermionic sum at unbounded level, q<=8",
         [&](std::ostream& log) { return criterion_verma(ws, log); }},
        {"fermionic sum equals bosonic product at unbounded level, q<=10",
         criterion_headline},
        {"bosonic product equals PBW multiset count, with root-count coefficients",
         criterion_bosonic_pbw},
        {"min-sum identities match conjugate quadratic forms, exhaustively",
         criterion_minsum_identities},
        {"partition conjugation involution and bounded-part counts",
         criterion_partition_kernel},
        {"Rogers-Ramanujan specialization matches the difference-2 enumerator",
         criterion_rogers_ramanujan},
        {"character coefficients grow monotonically with the level",
         criterion_level_monotonicity},
        {"minimal admissible degree equals the quadratic exponent, both directions",
         [&](std::ostream& log) { return criterion_minimal_degree(ws, log); }},
        {"CLI output is byte-identical across repeated runs",
         criterion_cli_determinism},
    };

    bool all_ok = true;
    for (size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        bool ok = false;
        std::ostringstream log;
        try {
            ok = criteria[i].second(log);
        } catch (const std::exception& e) {
            log << "  exception: " << e.what() << "\n";
        }
        const auto secs = std::chrono::duration_cast<std::chrono::milliseconds>(
                              std::chrono::steady_clock::now() - start)
                              .count() /
                          1000.0;
        std::cout << (ok ? "PASS" : "FAIL") << "  " << (i + 1) << "  " << criteria[i].first
                  << "  [" << secs << "s]\n";
        if (!log.str().empty()) {
            std::cerr << log.str();
        }
        all_ok = all_ok && ok;
    }
    std::cout << (all_ok ? "all criteria passed" : "some criteria FAILED") << "\n";
    return all_ok ? 0 : 1;
}
