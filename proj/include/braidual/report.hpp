#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "braidual/linmap.hpp"

namespace braidual {

enum class Verdict { Pass, Fail, Skipped };
const char* verdict_name(Verdict v);

struct Witness {
    std::uint64_t domain_index = 0;
    std::uint64_t codomain_index = 0;
    std::string domain_label;
    std::string codomain_label;
    Scalar lhs;
    Scalar rhs;
};

struct CheckEntry {
    std::string equation;
    std::string context;
    Verdict verdict = Verdict::Pass;
    std::optional<Witness> witness;
    std::uint64_t evaluated = 0;
    std::uint64_t skipped = 0;
    std::string note;
};

class CheckReport {
  public:
    void add(CheckEntry e) { entries_.push_back(std::move(e)); }
    void append(const CheckReport& other, const std::string& context_prefix = "");
    const std::vector<CheckEntry>& entries() const { return entries_; }
    bool passed() const;
    bool empty() const { return entries_.empty(); }
    std::size_t count(Verdict v) const;
    // First Fail entry, if any.
    const CheckEntry* first_failure() const;
    bool has(const std::string& equation, Verdict v) const;
    CheckReport filtered(const std::set<std::string>& equations) const;

  private:
    std::vector<CheckEntry> entries_;
};

const std::vector<std::string>& equation_registry();
bool is_registered(const std::string& equation);

// Compares two maps column by column, skipping Unknown columns. Adds one entry
// for the evaluated columns and, if any were skipped, a Skipped entry.
void compare(CheckReport& report, const std::string& equation, const std::string& context,
             const LinMap& lhs, const LinMap& rhs);
// Records a single boolean fact.
void record(CheckReport& report, const std::string& equation, const std::string& context,
            bool ok, const std::string& note = "");

}  // namespace braidual
