#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "sdw/binary_code.hpp"
#include "sdw/rational.hpp"

namespace sdw {

// a parsed code plus optional regression metadata carried by the file
struct CodeRecord {
    BinaryCode code;
    std::vector<std::pair<int, Int>> expected_weights;  // empty when absent
};

// The [2^(2m), 2m+2] code spanned by the all-ones vector, the 2m coordinate
// functionals on F_2^(2m), and the support of the inner-product bent function
// x1 x2 + x3 x4 + ... Its weight distribution is
//   1, 2^(2m) at 2^(2m-1) -+ 2^(m-1), 2^(2m+1)-2 at 2^(2m-1), 1 at 2^(2m).
BinaryCode dillion_schatz(int m);  // 1 <= m <= 3

// the [24,12,8] self-dual code, via the length-23 quadratic-residue code
// extended by a parity coordinate
BinaryCode golay24();

// the [8,4,4] self-dual code
BinaryCode extended_hamming8();

// monomial evaluations of degree <= r on F_2^m; 0 <= r <= m <= 5
BinaryCode reed_muller(int r, int m);

// code spanned by the indicator vectors of disjoint coordinate sets
BinaryCode partition_code(int n, const std::vector<std::vector<int>>& parts, std::string name = "");

// Text format: optional "name: <label>" and "expect-weights: w:count ..."
// header lines, a "n k" line, then k rows of exactly n characters from {0,1}.
// Lines starting with # are comments.
CodeRecord parse_code(std::string_view text);
std::string emit(const CodeRecord& rec);

CodeRecord load_code_file(const std::string& path);

// loads every *.code file under dir (the <dim>_<id>.code convention), sorted
// by filename; an absent or empty directory simply yields nothing
std::vector<CodeRecord> load_database(const std::string& dir);

// registry used by the command line: golay24, extended_hamming8,
// reed_muller:r,m, dillion_schatz:m, partition:n/parts
BinaryCode builtin_code(const std::string& name);
std::vector<std::string> builtin_names();

}  // namespace sdw
