// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.
#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "braidual/catalog.hpp"
#include "braidual/duality.hpp"
#include "braidual/io.hpp"
#include "braidual/twist.hpp"
#include "oracles.hpp"

using namespace braidual;
using oracle::apply_at;
using oracle::basis;
using Clock = std::chrono::steady_clock;

namespace {

// Collects failures for one criterion.
struct Tally {
    std::vector<std::string> failures;
    void expect(bool ok, const std::string& what) {
        if (!ok) failures.push_back(what);
    }
};

double seconds_since(Clock::time_point t) {
    return std::chrono::duration<double>(Clock::now() - t).count();
}

std::vector<std::string> small_names() {
    std::vector<std::string> out;
    for (const auto& name : catalog_names())
        if (catalog_hopf(name).data().space().dim() <= 4) out.push_back(name);
    out.push_back("bline:q=1:deg=3");
    out.push_back("bline:q=2:deg=3");
    out.push_back("qplane:q=1:deg=1");
    out.push_back("qplane:q=2:deg=1");
    return out;
}

ModuleData module_of(const std::string& name) { return std::get<ModuleData>(catalog_module(name)); }
ComoduleData comodule_of(const std::string& name) { return std::get<ComoduleData>(catalog_module(name)); }

void axiom_suite(Tally& t) {
    auto start = Clock::now();
    for (const auto& name : catalog_names()) {
        auto h = catalog_hopf(name).data();
        auto r = check_hopf(h);
        t.expect(r.passed(), name);
        for (const char* eq : {"YBE", "AWm", "1W", "VAm", "V1", "PHW", "PVH", "Pmm", "PDD", "Dcm", "Sbraid"})
            t.expect(r.has(eq, Verdict::Pass), name + " " + eq + " not evaluated");
        t.expect(r.count(Verdict::Fail) == 0, name + " fail entries");
    }
    double s = seconds_since(start);
    t.expect(s < 10, "took " + std::to_string(s) + " s");
}

void twist_family(Tally& t) {
    auto start = Clock::now();
    for (const auto& name : catalog_names()) {
        auto h = catalog_hopf(name).data();
        for (int n = -2; n <= 2; ++n) {
            auto r = check_twist_hopf(h, n);
            t.expect(r.passed(), name + " n=" + std::to_string(n));
        }
    }
    double s = seconds_since(start);
    t.expect(s < 10, "took " + std::to_string(s) + " s");
}

void dual_bialgebras(Tally& t) {
    for (const auto& name : catalog_names()) {
        auto h = catalog_hopf(name).data().bialgebra;
        auto d = dual_bialgebra(h);
        t.expect(check_bialgebra(d.bialgebra).passed(), name + " check_bialgebra");
        auto r = verify_dual_pairing(d.pairing, d.bialgebra, h);
        t.expect(r.passed(), name + " pairing");
        for (const char* eq : {"mD", "Dm", "1a"}) t.expect(r.has(eq, Verdict::Pass), name + " " + eq);
    }
    auto sl = make_superline().data();
    auto u = dual_hopf(sl);
    t.expect(u.bialgebra.mult.same_table(sl.bialgebra.mult), "superline dual mult");
    t.expect(u.bialgebra.comult.same_table(sl.bialgebra.comult), "superline dual comult");
    t.expect(u.bialgebra.unit.same_table(sl.bialgebra.unit), "superline dual unit");
    t.expect(u.bialgebra.counit.same_table(sl.bialgebra.counit), "superline dual counit");
    t.expect(u.bialgebra.braiding.psi.same_table(sl.bialgebra.braiding.psi), "superline dual braiding");
    t.expect(u.antipode.same_table(sl.antipode), "superline dual antipode");
}

// Dual basis of K[Z_n]: e^i e^j = d_ij e^i, D(e^k) = sum_{i+j=k} e^i (x) e^j,
// rho_R(g^k) = sum_j g^{j+k} (x) e^j, Psi_UU the flip.
void group_closed_forms(Tally& t, int n) {
    auto h = make_group_bialgebra(n).data().bialgebra;
    auto u = dual_bialgebra(h).bialgebra;
    auto c = module_to_comodule(module_of("zn:" + std::to_string(n) + "/regular-module"));
    std::size_t N = n;
    LinMap m(u.mult.domain(), u.mult.codomain()), d(u.comult.domain(), u.comult.codomain());
    LinMap rho(c.coaction.domain(), c.coaction.codomain());
    for (std::size_t i = 0; i < N; ++i) {
        m.set(i, i * N + i, 1);
        for (std::size_t j = 0; j < N; ++j) {
            d.set(i * N + j, (i + j) % N, 1);
            rho.set(((j + i) % N) * N + j, i, 1);
        }
    }
    auto tag = "zn:" + std::to_string(n);
    t.expect(u.mult == m, tag + " dual product closed form");
    t.expect(u.comult == d, tag + " dual coproduct closed form");
    t.expect(u.braiding.psi == flip(u.space(), u.space()), tag + " dual braiding closed form");
    t.expect(c.coaction == rho, tag + " coaction closed form");
}

void oracle_equivalence(Tally& t) {
    for (int n = 1; n <= 4; ++n) group_closed_forms(t, n);
    for (const auto& name : small_names()) {
        auto h = catalog_hopf(name).data().bialgebra;
        auto u = dual_bialgebra(h).bialgebra;
        t.expect(oracle::agree_on_known(u.braiding.psi, oracle::dual_braiding(h.braiding)) ==
                     long(u.braiding.psi.dom_dim()),
                 name + " Psi_UU");
        t.expect(oracle::agree_on_known(u.mult, oracle::dual_product(h)) ==
                     long(u.mult.dom_dim() - u.mult.unknown_count()),
                 name + " dual product");
        t.expect(oracle::agree_on_known(u.comult, oracle::dual_coproduct(h)) ==
                     long(u.comult.dom_dim() - u.comult.unknown_count()),
                 name + " dual coproduct");
        for (const char* kind : {"regular-module", "trivial-module", "natural-module"}) {
            auto m = module_of(name + "/" + kind);
            if (m.side != Side::Left) continue;
            auto c = module_to_comodule(m);
            t.expect(oracle::agree_on_known(c.coaction, oracle::right_coaction(m)) ==
                         long(c.coaction.dom_dim() - c.coaction.unknown_count()),
                     name + "/" + kind + " rho_R");
        }
    }
}

void reflexivity(Tally& t) {
    for (const auto& name : catalog_names()) {
        auto h = catalog_hopf(name).data();
        auto r = double_dual_iso(h);
        t.expect(r.passed(), name);
        for (const char* eq : {"hom.m", "dud", "hom.eps", "hom.1", "hom.Psi", "hom.S"})
            t.expect(r.has(eq, Verdict::Pass), name + " " + eq);
    }
}

void duals_of_twists(Tally& t) {
    auto sl = make_superline().data().bialgebra;
    auto bl = catalog_hopf("bline:q=2:deg=4").data().bialgebra;
    t.expect(bl.braiding.psi != bl.braiding.psi_inv, "bline q=2 braiding is an involution");
    for (int n = -2; n <= 2; ++n) {
        t.expect(dual_of_twist(sl, n).passed(), "superline n=" + std::to_string(n));
        t.expect(dual_of_twist(bl, n).passed(), "bline q=2 n=" + std::to_string(n));
    }
}

void conversions(Tally& t) {
    for (const auto& name : catalog_module_names()) {
        auto mc = catalog_module(name);
        if (auto* m = std::get_if<ModuleData>(&mc)) {
            auto c = module_to_comodule(*m);
            t.expect(check_comodule(c).passed(), name + " module_to_comodule");
            if (m->carrier_algebra && m->coalgebra && c.carrier_algebra && c.algebra)
                t.expect(check_comodule_algebra(c).passed(), name + " comodule algebra");
        } else {
            auto& c = std::get<ComoduleData>(mc);
            auto out = comodule_to_module(c);
            t.expect(check_module(out).passed(), name + " comodule_to_module");
            if (c.carrier_algebra && c.algebra && out.carrier_algebra && out.coalgebra)
                t.expect(check_module_algebra(out).passed(), name + " module algebra");
        }
    }
    for (const auto& name : catalog_names()) {
        auto h = catalog_hopf(name).data().bialgebra;
        t.expect(check_natural_action(h).passed(), name + " natural action");
    }
    // f(g > a) = (fg)(a) and the (-2)-twisted dual coproduct, on every basis triple.
    for (const auto& name : small_names()) {
        auto h = catalog_hopf(name).data().bialgebra;
        auto l = natural_action(h).first;
        auto prod = oracle::dual_product(h);
        std::size_t n = h.space().dim();
        for (std::size_t f = 0; f < n; ++f)
            for (std::size_t g = 0; g < n; ++g)
                for (std::size_t a = 0; a < n; ++a) {
                    if (l.action.unknown(g * n + a)) continue;
                    auto lhs = oracle::lookup(apply_at(l.action, 0, basis({g, a})), {f});
                    auto rhs = oracle::lookup(apply_at(prod, 0, basis({f, g})), {a});
                    t.expect(lhs == rhs, name + " natural action triple");
                }
        auto c = module_to_comodule(module_of(name + "/regular-module"));
        auto inv = oracle::dual_braiding(h.braiding.inverse());
        auto delta = oracle::dual_coproduct(h);
        for (std::size_t f = 0; f < n; ++f) {
            auto expected = apply_at(inv, 0, apply_at(inv, 0, apply_at(delta, 0, basis({f}))));
            t.expect(apply_at(c.coalgebra.comult, 0, basis({f})) == expected, name + " twisted dual coproduct");
        }
    }
}

void round_trips(Tally& t) {
    for (int n = 1; n <= 4; ++n) {
        auto base = "zn:" + std::to_string(n);
        auto c = comodule_of(base + "/regular-comodule");
        auto rc = duality_round_trip(c);
        t.expect(rc.report.passed() && rc.result.coaction == c.coaction, base + " comodule round trip");
        auto m = module_of(base + "/regular-module");
        auto rm = duality_round_trip(m);
        t.expect(rm.report.passed() && rm.result.action == m.action, base + " module round trip");
    }
    auto sl = comodule_of("superline/regular-comodule");
    auto rs = duality_round_trip(sl);
    t.expect(rs.report.passed(), "superline round trip checks");
    t.expect(rs.result.coaction == rs.closed_form_coaction, "superline closed form");
    t.expect(rs.result.coaction == sl.coaction, "superline round trip reproduces the coaction");

    auto bl = comodule_of("bline:q=2:deg=4/regular-comodule");
    auto rb = duality_round_trip(bl);
    t.expect(rb.report.has("coactUH", Verdict::Pass) && rb.report.passed(), "bline q=2 coactUH");
    t.expect(rb.result.coaction == rb.closed_form_coaction, "bline q=2 closed form");
    auto nm = module_of("bline:q=2:deg=4/natural-module");
    auto rn = duality_round_trip(nm);
    t.expect(rn.report.has("actUH", Verdict::Pass) && rn.report.passed(), "bline q=2 actUH");
    t.expect(rn.result.action == rn.closed_form_action, "bline q=2 action closed form");
}

void dualized_actions(Tally& t) {
    for (const auto& name : catalog_module_names()) {
        auto mc = catalog_module(name);
        if (auto* m = std::get_if<ModuleData>(&mc)) {
            auto d = dualize_action(*m);
            t.expect(check_comodule(d).passed(), name + " dualize_action");
            if (m->carrier.dim() <= 4 && m->algebra.space().dim() <= 4)
                t.expect(check_adjoint(module_to_comodule(*m), d).passed(), name + " adjoint");
        } else {
            auto& c = std::get<ComoduleData>(mc);
            auto d = dualize_coaction(c);
            t.expect(check_module(d).passed(), name + " dualize_coaction");
            auto base = c.coalgebra.braiding;
            t.expect(d.algebra.braiding.psi == oracle::dual_braiding(base.inverse()), name + " Psi_UU^-1");
            if (c.carrier.dim() <= 4 && c.coalgebra.space().dim() <= 4)
                t.expect(check_adjoint(comodule_to_module(c), d).passed(), name + " adjoint");
            if (c.side == Side::Right) t.expect(check_bullet_braidings(c).passed(), name + " bullet braidings");
        }
    }
}

struct Run {
    int code;
    std::string out;
};

Run run_cli(const std::string& args) {
    auto out = std::filesystem::temp_directory_path() / ("braidual_accept_" + std::to_string(::getpid()));
    int status = std::system((std::string(BRAIDUAL_CLI) + " " + args + " >" + out.string() + " 2>&1").c_str());
    std::ifstream in(out);
    std::stringstream s;
    s << in.rdbuf();
    std::filesystem::remove(out);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, s.str()};
}

void cli_contract(Tally& t) {
    auto dir = std::filesystem::temp_directory_path() / ("braidual_accept_dir_" + std::to_string(::getpid()));
    std::filesystem::create_directories(dir);
    std::vector<std::string> names = catalog_names();
    for (const auto& m : catalog_module_names()) names.push_back(m);
    for (const auto& name : names) {
        auto a = (dir / "a.sf").string(), b = (dir / "b.sf").string();
        int code = run_cli("check " + name + " --axioms YBE --out " + a).code;
        t.expect(code == 0, name + " emit");
        t.expect(run_cli("check " + a + " --axioms YBE --out " + b).code == 0, name + " reparse");
        auto fa = read_structure_file(a), fb = read_structure_file(b);
        t.expect(same_structure(fa, fb) && write_structure(fa) == write_structure(fb), name + " identity");
    }
    auto bad = (dir / "bad.sf").string();
    std::ofstream(bad) << "braidual-structure 1\nkind hopf\nnonsense here\n";
    auto r = run_cli("check " + bad);
    t.expect(r.code == 2 && r.out.find(bad + ":3:1:") != std::string::npos, "parse error exit 2 with position");
    t.expect(run_cli("check zn:2 --axioms YBE,Dcm").code == 0, "filtered check exit 0");
    t.expect(run_cli("twist bline:q=2:deg=4 --k 1 --n 0").code == 1, "failing twist exit 1");
    auto start = Clock::now();
    t.expect(run_cli("check superline").code == 0, "check superline exit 0");
    double s = seconds_since(start);
    t.expect(s < 1, "check superline took " + std::to_string(s) + " s");
    std::filesystem::remove_all(dir);
}

}  // namespace

int main() {
    std::vector<std::pair<std::string, std::function<void(Tally&)>>> criteria{
        {"axiom suite on every catalog instance", axiom_suite},
        {"twist family H^(n,-n) and H^(n-1,-n), n in [-2,2]", twist_family},
        {"dual bialgebras and the self-dual superline", dual_bialgebras},
        {"dual structures equal their linear-system oracles", oracle_equivalence},
        {"double dual isomorphism", reflexivity},
        {"duals of twists on superline and bline q=2", duals_of_twists},
        {"module and comodule conversions", conversions},
        {"round trips", round_trips},
        {"dualized actions and coactions", dualized_actions},
        {"command line contract", cli_contract},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Tally t;
        auto start = Clock::now();
        try {
            criteria[i].second(t);
        } catch (const std::exception& e) {
            t.failures.push_back(std::string("exception: ") + e.what());
        }
        bool ok = t.failures.empty();
        failed += !ok;
        std::printf("criterion %2zu: %s  %s (%.2f s)\n", i + 1, ok ? "PASS" : "FAIL", criteria[i].first.c_str(),
                    seconds_since(start));
        for (std::size_t k = 0; k < t.failures.size() && k < 5; ++k)
            std::printf("              %s\n", t.failures[k].c_str());
        if (t.failures.size() > 5) std::printf("              ... %zu more\n", t.failures.size() - 5);
    }
    std::printf("%d of %zu criteria failed\n", failed, criteria.size());
    return failed ? 1 : 0;
}
