#pragma once

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "paucity/census.hpp"
#include "paucity/system.hpp"

namespace paucity {

using AnySystem = std::variant<SymmetricSystem, NonlinearSystem>;

// System files are JSON documents:
//   {"kind": "linear", "k": 3, "rows": [[0,1,0],[0,0,1]]}
//   {"kind": "nonlinear", "k": 3, "degrees": [2,3], "leading": [1,1],
//    "upsilons": [[{"coeff": 1, "exponents": [2]}], []]}
// Every number is a decimal integer; exponent vectors are indexed by the
// sorted free degrees.
AnySystem parse_system(const std::string& text);
AnySystem load_system(const std::string& path);
std::string serialize_system(const SymmetricSystem& sys);
std::string serialize_system(const NonlinearSystem& sys);

// One census row per X. CSV column order is fixed: X,N,T,Tstar,Tdagger.
struct CensusRow {
    std::int64_t X;
    Int128 n, t, tstar, tdagger;

    friend bool operator==(const CensusRow&, const CensusRow&) = default;
};

CensusRow to_row(const CensusReport& report);

std::string to_csv(const std::vector<CensusRow>& rows);
std::vector<CensusRow> parse_csv(const std::string& text);
std::vector<CensusRow> load_csv(const std::string& path);

std::string to_jsonl(const std::vector<CensusRow>& rows);
std::string to_table(const std::vector<CensusRow>& rows);

} // namespace paucity
