#include "braidual/report.hpp"

#include <algorithm>

#include "braidual/error.hpp"

namespace braidual {

const char* verdict_name(Verdict v) {
    switch (v) {
    case Verdict::Pass: return "Pass";
    case Verdict::Fail: return "Fail";
    case Verdict::Skipped: return "Skipped";
    }
    return "?";
}

void CheckReport::append(const CheckReport& other, const std::string& context_prefix) {
    for (auto e : other.entries_) {
        if (!context_prefix.empty())
            e.context = e.context.empty() ? context_prefix : context_prefix + " / " + e.context;
        entries_.push_back(std::move(e));
    }
}

bool CheckReport::passed() const { return first_failure() == nullptr; }

std::size_t CheckReport::count(Verdict v) const {
    return static_cast<std::size_t>(std::count_if(
        entries_.begin(), entries_.end(), [v](const CheckEntry& e) { return e.verdict == v; }));
}

const CheckEntry* CheckReport::first_failure() const {
    for (const auto& e : entries_)
        if (e.verdict == Verdict::Fail) return &e;
    return nullptr;
}

bool CheckReport::has(const std::string& equation, Verdict v) const {
    return std::any_of(entries_.begin(), entries_.end(), [&](const CheckEntry& e) {
        return e.equation == equation && e.verdict == v;
    });
}

CheckReport CheckReport::filtered(const std::set<std::string>& equations) const {
    CheckReport out;
    for (const auto& e : entries_)
        if (equations.count(e.equation)) out.add(e);
    return out;
}

const std::vector<std::string>& equation_registry() {
    static const std::vector<std::string> ids = {
        // braided structures
        "YBE", "VW", "WV", "AWm", "1W", "VAm", "V1", "Pmm", "PHW", "PHW.eps", "PVH",
        "PVH.eps", "PDD", "assoc", "unit", "coassoc", "counit", "Dcm", "eps.m", "eps.1",
        "Delta.1", "conv", "Sbraid", "Sinv", "ulm", "ulD", "braidAB", "hom.m", "hom.1",
        "hom.D", "hom.eps", "hom.Psi", "hom.S",
        // modules and comodules
        "anu", "anu.1", "bnu", "amu", "amu.1", "bmu", "nulinv", "nurinv", "Droh", "Droh.eps",
        "brL", "invPVH", "rohD", "rohD.eps", "brR", "invPHV", "num", "nu1", "mun", "mu1",
        "rhoRm", "rR1", "rhoLm", "rL1",
        // duality
        "UU", "PsiHH", "PsiHHcirc", "PHU", "phh", "cphh", "ust", "us", "brcop", "cuD", "mD",
        "Dm", "1a", "nondeg", "pairS", "dud", "VUb", "WHb", "bUW", "glaa", "graa", "nuL", "nuR",
        "rR", "muR", "vRWU", "rLW", "adj", "PHVcc", "coactUH", "PWHcc", "actUH",
        // twist family and flips
        "mkDn", "twist.eq", "nuRc", "flip.eq",
        // catalog
        "qbinom", "graded.dual",
    };
    return ids;
}

bool is_registered(const std::string& equation) {
    const auto& ids = equation_registry();
    return std::find(ids.begin(), ids.end(), equation) != ids.end();
}

namespace {

void require_registered(const std::string& equation) {
    if (!is_registered(equation))
        throw Error(ErrorKind::InvalidParameter, "unregistered equation id '" + equation + "'");
}

}  // namespace

void compare(CheckReport& report, const std::string& equation, const std::string& context,
             const LinMap& lhs, const LinMap& rhs) {
    require_registered(equation);
    if (lhs.domain() != rhs.domain() || lhs.codomain() != rhs.codomain())
        throw Error(ErrorKind::ShapeMismatch,
                    equation + ": sides have shapes " + shape_name(lhs.domain()) + "->" +
                        shape_name(lhs.codomain()) + " and " + shape_name(rhs.domain()) + "->" +
                        shape_name(rhs.codomain()));
    CheckEntry entry{equation, context};
    std::uint64_t skipped = 0;
    for (std::uint64_t c = 0; c < lhs.dom_dim(); ++c) {
        if (lhs.unknown(c) || rhs.unknown(c)) {
            ++skipped;
            continue;
        }
        ++entry.evaluated;
        if (entry.witness) continue;
        const auto& a = lhs.column(c);
        const auto& b = rhs.column(c);
        if (a == b) continue;
        // Find the first row where the two columns differ.
        std::size_t i = 0, j = 0;
        std::uint64_t row = 0;
        Scalar x = 0, y = 0;
        while (true) {
            std::uint64_t ra = i < a.size() ? a[i].first : UINT64_MAX;
            std::uint64_t rb = j < b.size() ? b[j].first : UINT64_MAX;
            row = std::min(ra, rb);
            x = ra == row ? a[i].second : Scalar(0);
            y = rb == row ? b[j].second : Scalar(0);
            if (x != y) break;
            if (ra == row) ++i;
            if (rb == row) ++j;
        }
        entry.witness = Witness{c, row, index_label(lhs.domain(), c),
                                index_label(lhs.codomain(), row), x, y};
        entry.verdict = Verdict::Fail;
    }
    if (entry.evaluated == 0 && skipped > 0) entry.verdict = Verdict::Skipped;
    entry.skipped = skipped;
    report.add(entry);
    if (skipped > 0 && entry.evaluated > 0) {
        CheckEntry sk{equation, context, Verdict::Skipped};
        sk.skipped = skipped;
        sk.note = "inputs touching blocks beyond the cutoff";
        report.add(sk);
    }
}

void record(CheckReport& report, const std::string& equation, const std::string& context,
            bool ok, const std::string& note) {
    require_registered(equation);
    CheckEntry e{equation, context, ok ? Verdict::Pass : Verdict::Fail};
    e.evaluated = 1;
    e.note = note;
    report.add(e);
}

}  // namespace braidual
