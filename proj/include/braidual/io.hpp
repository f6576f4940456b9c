#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <variant>

#include "braidual/modules.hpp"

namespace braidual {

enum class StructureKind { Braiding, Algebra, Coalgebra, Bialgebra, Hopf, Module, Comodule };
const char* structure_kind_name(StructureKind k);

using StructureValue = std::variant<Braiding, AlgebraData, CoalgebraData, BialgebraData, HopfData,
                                    ModuleData, ComoduleData>;

struct StructureFile {
    StructureValue value;
    std::map<std::string, std::string> params;

    StructureKind kind() const { return static_cast<StructureKind>(value.index()); }
};

// Text format, one directive per line, '#' starts a comment:
//
//   braidual-structure 1
//   kind hopf
//   param q 2
//   space s0 H plain -1          id, name, plain|dual, cutoff (-1 = none)
//   labels s0 1 x
//   degrees s0 0 1
//   map mult s0 s0 -> s0         K stands for the empty tensor product
//   0 3 1                        out_index in_index p/q
//   unknown 2                    column outside the truncation
//   end
//
// Throws ParseError with the offending line and column.
StructureFile parse_structure(const std::string& text);
std::string write_structure(const StructureFile& f);
StructureFile read_structure_file(const std::string& path);
void write_structure_file(const std::string& path, const StructureFile& f);

// Map-by-map equality, including Unknown columns and cross-braidings. Params
// and the provenance tag are not compared.
bool same_structure(const StructureFile& a, const StructureFile& b);

std::string report_text(const CheckReport& r);
std::string report_json(const CheckReport& r, const std::map<std::string, std::string>& meta = {});

}  // namespace braidual
