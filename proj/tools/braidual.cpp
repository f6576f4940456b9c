// braidual command-line front end; talks to the library through the C API only.
#include <cstdio>
#include <iostream>
#include <memory>
#include <string>

#include <CLI11.hpp>

#include "braidual/braidual.h"

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kInput = 2;

struct StructureDeleter {
    void operator()(bd_structure* s) const { bd_structure_free(s); }
};
struct ReportDeleter {
    void operator()(bd_report* r) const { bd_report_free(r); }
};
using Structure = std::unique_ptr<bd_structure, StructureDeleter>;
using Report = std::unique_ptr<bd_report, ReportDeleter>;

struct Common {
    std::string input;
    std::string format = "text";
    std::string out;
    std::string axioms;
    int cutoff = -1;
};

// Parse, usage and resource problems are input errors; everything else means
// the requested structure does not exist or does not verify.
int exit_for(bd_status s) {
    switch (s) {
    case BD_OK: return kPass;
    case BD_ERR_PARSE:
    case BD_ERR_INVALID:
    case BD_ERR_SHAPE:
    case BD_ERR_IO:
    case BD_ERR_LIMIT: return kInput;
    default: return kFail;
    }
}

int complain(bd_status s, const std::string& where) {
    if (s == BD_ERR_PARSE && bd_last_error_line() > 0)
        std::cerr << where << ":" << bd_last_error_line() << ":" << bd_last_error_column() << ": "
                  << bd_last_error() << "\n";
    else
        std::cerr << "error (" << bd_status_name(s) << "): " << bd_last_error() << "\n";
    return exit_for(s);
}

int load(const Common& c, Structure& s) {
    bd_structure* raw = nullptr;
    bd_status st = bd_load(c.input.c_str(), &raw);
    if (st != BD_OK) return complain(st, c.input);
    s.reset(raw);
    return kPass;
}

std::string take(char* text) {
    std::string s = text ? text : "";
    bd_string_free(text);
    return s;
}

// Prints the report, writes `out` if asked, returns the exit code.
int finish(const Common& c, const std::string& command, bd_report* raw, const bd_structure* out,
           const std::string& extra_meta = "") {
    Report rep(raw);
    if (!c.axioms.empty()) {
        bd_report* filtered = nullptr;
        bd_status st = bd_report_filter(rep.get(), c.axioms.c_str(), &filtered);
        if (st != BD_OK) return complain(st, c.input);
        rep.reset(filtered);
    }
    if (!c.out.empty()) {
        if (!out) {
            std::cerr << "error: " << command << " produces no structure to write\n";
            return kInput;
        }
        bd_status st = bd_save(out, c.out.c_str());
        if (st != BD_OK) return complain(st, c.out);
    }
    std::string meta = "command=" + command + ",input=" + c.input + extra_meta;
    char* text = nullptr;
    bd_status st = bd_report_render(rep.get(), c.format == "json", meta.c_str(), &text);
    if (st != BD_OK) return complain(st, c.input);
    std::cout << take(text);
    return bd_report_passed(rep.get()) ? kPass : kFail;
}

void add_common(CLI::App* app, Common& c, bool with_cutoff) {
    app->add_option("input", c.input, "catalog name or structure file")->required();
    app->add_option("--format", c.format, "report format")->check(CLI::IsMember({"text", "json"}));
    app->add_option("--out", c.out, "write the resulting structure here");
    app->add_option("--axioms", c.axioms, "comma-separated equation ids to keep");
    if (with_cutoff) app->add_option("--cutoff", c.cutoff, "restrict a graded Hopf algebra to degrees <= d");
}

int cmd_catalog(const std::string& format) {
    if (format == "json") {
        std::cout << "[";
        for (size_t i = 0; i < bd_catalog_count(); ++i)
            std::cout << (i ? ",\n " : "\n ") << '"' << bd_catalog_name(i) << '"';
        std::cout << "\n]\n";
        return kPass;
    }
    for (size_t i = 0; i < bd_catalog_count(); ++i) std::cout << bd_catalog_name(i) << "\n";
    return kPass;
}

int cmd_check(const Common& c) {
    Structure s;
    if (int rc = load(c, s)) return rc;
    bd_report* rep = nullptr;
    bd_status st = bd_check(s.get(), c.cutoff, &rep);
    if (st != BD_OK) return complain(st, c.input);
    return finish(c, "check", rep, s.get());
}

int cmd_dualize(const Common& c, const std::string& what) {
    Structure s;
    if (int rc = load(c, s)) return rc;
    bd_dualize_what w = what == "bialgebra" ? BD_DUAL_BIALGEBRA
                        : what == "hopf"    ? BD_DUAL_HOPF
                        : what == "pair-verify" ? BD_DUAL_PAIR_VERIFY
                                                : BD_DUAL_DOUBLE;
    bd_structure* out = nullptr;
    bd_report* rep = nullptr;
    bd_status st = bd_dualize(s.get(), w, &out, &rep);
    if (st != BD_OK) return complain(st, c.input);
    Structure o(out);
    return finish(c, "dualize", rep, o.get());
}

int cmd_twist(const Common& c, int k, int n, const std::string& braiding) {
    Structure s;
    if (int rc = load(c, s)) return rc;
    bd_structure* out = nullptr;
    bd_report* rep = nullptr;
    bd_status st = bd_twist(s.get(), k, n, braiding == "psi-inv", &out, &rep);
    if (st != BD_OK) return complain(st, c.input);
    Structure o(out);
    return finish(c, "twist", rep, o.get());
}

int cmd_convert(const Common& c, const std::string& direction, bool round_trip) {
    Structure s;
    if (int rc = load(c, s)) return rc;
    bd_structure* out = nullptr;
    bd_report* rep = nullptr;
    if (round_trip) {
        bd_status st = bd_round_trip(s.get(), &out, &rep);
        if (st != BD_OK) return complain(st, c.input);
        Structure o(out);
        int same = 0;
        bd_same(s.get(), o.get(), &same);
        if (c.format == "text") std::cout << "identical to input: " << (same ? "yes" : "no") << "\n";
        return finish(c, "convert", rep, o.get(), std::string(",identical=") + (same ? "yes" : "no"));
    }
    if (direction.empty()) {
        std::cerr << "error: convert needs --direction or --round-trip\n";
        return kInput;
    }
    bd_direction d = direction == "comodule-to-module"   ? BD_COMODULE_TO_MODULE
                     : direction == "module-to-comodule" ? BD_MODULE_TO_COMODULE
                     : direction == "dualize"            ? BD_DUALIZE
                     : direction == "flip-side"          ? BD_FLIP_SIDE
                     : direction == "antipode-flip"      ? BD_ANTIPODE_FLIP
                                                         : BD_NATURAL_ACTION;
    bd_status st = bd_convert(s.get(), d, &out, &rep);
    if (st != BD_OK) return complain(st, c.input);
    Structure o(out);
    return finish(c, "convert", rep, o.get());
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"braidual: exact braided (co)algebras, duals, twists and (co)module conversions"};
    app.require_subcommand(1);

    std::string catalog_format = "text";
    auto* catalog = app.add_subcommand("catalog", "built-in instances");
    auto* list = catalog->add_subcommand("list", "print catalog names");
    list->add_option("--format", catalog_format)->check(CLI::IsMember({"text", "json"}));
    catalog->require_subcommand(1);

    Common check_opts;
    auto* check = app.add_subcommand("check", "run the axiom checkers");
    add_common(check, check_opts, true);

    Common dual_opts;
    std::string what = "bialgebra";
    auto* dualize = app.add_subcommand("dualize", "dual bialgebra, Hopf algebra, pairing, double dual");
    add_common(dualize, dual_opts, false);
    dualize->add_option("--what", what)->check(
        CLI::IsMember({"bialgebra", "hopf", "pair-verify", "double-dual"}));

    Common twist_opts;
    int k = 0, n = 0;
    std::string braiding = "psi";
    auto* twist = app.add_subcommand("twist", "product m∘Ψ^k and coproduct Ψ^n∘Δ");
    add_common(twist, twist_opts, false);
    twist->add_option("--k", k)->required();
    twist->add_option("--n", n)->required();
    twist->add_option("--braiding", braiding)->check(CLI::IsMember({"psi", "psi-inv"}));

    Common conv_opts;
    std::string direction;
    bool round_trip = false;
    auto* convert = app.add_subcommand("convert", "module/comodule conversions");
    add_common(convert, conv_opts, false);
    convert->add_option("--direction", direction)
        ->check(CLI::IsMember({"comodule-to-module", "module-to-comodule", "dualize", "flip-side",
                               "antipode-flip", "natural-action"}));
    convert->add_flag("--round-trip", round_trip, "dual twice and compare with the input");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kInput;
    }

    if (*list) return cmd_catalog(catalog_format);
    if (*check) return cmd_check(check_opts);
    if (*dualize) return cmd_dualize(dual_opts, what);
    if (*twist) return cmd_twist(twist_opts, k, n, braiding);
    if (*convert) return cmd_convert(conv_opts, direction, round_trip);
    return kInput;
}
