/*
   Copyright 2026 the gagc authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef GAGC_TABLES_HPP
#define GAGC_TABLES_HPP

#include <fstream>

#include "census.hpp"

namespace gagc {

/// One published code family C(k; B_1..B_4) with its reported k range.
struct FamilyRow {
    std::string curve;               // "X1" or "X2"
    std::array<std::uint64_t, 4> B;  // B_1..B_4
    unsigned k_min, k_max;           // published selection range
};

/// The nine best-constructible families (five from the Kummer curve, four
/// from the Hermitian curve) with their published k ranges.
inline std::vector<FamilyRow> best_constructible_families() {
    return {
        {"X1", {83, 0, 0, 0}, 8, 52},  {"X1", {83, 2, 0, 0}, 9, 54},  {"X1", {83, 2, 1, 0}, 10, 57},
        {"X1", {83, 3, 0, 0}, 9, 57},  {"X1", {83, 5, 0, 0}, 11, 59}, {"X2", {65, 0, 0, 1}, 11, 50},
        {"X2", {65, 0, 0, 2}, 11, 48}, {"X2", {65, 0, 1, 1}, 10, 51}, {"X2", {65, 0, 2, 0}, 9, 51},
    };
}

/// The family of new codes (length 70; the description C(k;[65,0,1,0]) and
/// the rational count A_1 = 65 put it on the Hermitian curve).
inline FamilyRow new_code_family() { return {"X2", {65, 0, 1, 0}, 10, 50}; }

struct TableInputs {
    PlaceCensus x1;
    unsigned g1 = 0;
    PlaceCensus x2;
    unsigned g2 = 0;
};

namespace detail {

inline std::string family_csv_row(const FamilyRow& f, const TableInputs& in) {
    const PlaceCensus& census = f.curve == "X1" ? in.x1 : in.x2;
    const unsigned g = f.curve == "X1" ? in.g1 : in.g2;
    unsigned n = 0;
    long sum_d = 0;
    for (unsigned j = 1; j <= 4; ++j) {
        if (f.B[j - 1] > census.a(j)) throw std::runtime_error("family requests more places than the census provides");
        n += static_cast<unsigned>(f.B[j - 1] * (2 * j - 1));
        sum_d += static_cast<long>(f.B[j - 1]) * j;
    }
    const long dconst = sum_d - g + 1;  // d >= dconst - k
    std::ostringstream os;
    os << f.curve << "," << f.B[0] << "," << f.B[1] << "," << f.B[2] << "," << f.B[3] << "," << n << "," << dconst << "-k," << f.k_min
       << "," << f.k_max;
    return os.str();
}

}  // namespace detail

/// families.csv: the nine best-constructible families.
inline std::string render_families_csv(const TableInputs& in) {
    std::ostringstream os;
    os << "curve,B1,B2,B3,B4,n,d_formula,k_min,k_max\n";
    for (const auto& f : best_constructible_families()) os << detail::family_csv_row(f, in) << "\n";
    return os.str();
}

/// new_codes.csv: the new-code family line plus its 41 (N, K, D) rows.
inline std::string render_new_codes_csv(const TableInputs& in) {
    const FamilyRow f = new_code_family();
    const PlaceCensus& census = f.curve == "X1" ? in.x1 : in.x2;
    const unsigned g = f.curve == "X1" ? in.g1 : in.g2;
    unsigned n = 0;
    long sum_d = 0;
    for (unsigned j = 1; j <= 4; ++j) {
        if (f.B[j - 1] > census.a(j)) throw std::runtime_error("family requests more places than the census provides");
        n += static_cast<unsigned>(f.B[j - 1] * (2 * j - 1));
        sum_d += static_cast<long>(f.B[j - 1]) * j;
    }
    const long dconst = sum_d - g + 1;
    std::ostringstream os;
    os << "curve,B1,B2,B3,B4,n,d_formula,k_min,k_max\n";
    os << detail::family_csv_row(f, in) << "\n";
    os << "N,K,D\n";
    for (unsigned k = f.k_min; k <= f.k_max; ++k) os << n << "," << k << "," << (dconst - static_cast<long>(k)) << "\n";
    return os.str();
}

struct TableReport {
    bool match = false;
    std::string families_csv;
    std::string new_codes_csv;
    std::string diff;  // human-readable mismatch description
    unsigned family_count = 0;
    unsigned new_code_rows = 0;
};

namespace detail {

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open golden file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

inline std::string first_diff(const std::string& got, const std::string& want) {
    std::istringstream a(got), b(want);
    std::string la, lb;
    unsigned line = 0;
    for (;;) {
        ++line;
        bool ha = static_cast<bool>(std::getline(a, la));
        bool hb = static_cast<bool>(std::getline(b, lb));
        if (!ha && !hb) return "";
        if (la != lb || ha != hb)
            return "line " + std::to_string(line) + ": got '" + (ha ? la : "<eof>") + "', expected '" + (hb ? lb : "<eof>") + "'";
    }
}

}  // namespace detail

/// Emits the family tables and the new-code rows, and compares them
/// byte-exactly against the golden files in `golden_dir`.
inline TableReport reproduce_tables(const TableInputs& in, const std::string& golden_dir) {
    TableReport rep;
    rep.families_csv = render_families_csv(in);
    rep.new_codes_csv = render_new_codes_csv(in);
    rep.family_count = static_cast<unsigned>(best_constructible_families().size());
    rep.new_code_rows = new_code_family().k_max - new_code_family().k_min + 1;

    const std::string want_fam = detail::read_file(golden_dir + "/families.csv");
    const std::string want_new = detail::read_file(golden_dir + "/new_codes.csv");
    std::string d1 = detail::first_diff(rep.families_csv, want_fam);
    std::string d2 = detail::first_diff(rep.new_codes_csv, want_new);
    rep.match = rep.families_csv == want_fam && rep.new_codes_csv == want_new;
    if (!d1.empty()) rep.diff += "families.csv: " + d1 + "\n";
    if (!d2.empty()) rep.diff += "new_codes.csv: " + d2 + "\n";
    return rep;
}

}  // namespace gagc

#endif
