#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "sdw/bits.hpp"
#include "sdw/caps.hpp"

namespace sdw {

// A binary linear [n,k] code held by a generator matrix. canonicalize() puts
// the rows into reduced row echelon form with dependent rows removed; every
// constructor in this library hands out that form, and the operations below
// expect it (pivot columns strictly increasing).
struct BinaryCode {
    int n = 0;
    std::vector<BitVec> gens;
    std::string name;

    int dim() const { return static_cast<int>(gens.size()); }
};

// reduced row echelon basis of the row span; validates row lengths
BinaryCode canonicalize(BinaryCode code);

// convenience: build + canonicalize
BinaryCode make_code(int n, std::vector<BitVec> rows, std::string name = "");

// the [n, n-k] code of all vectors orthogonal to every generator
BinaryCode dual(const BinaryCode& code);

bool contains(const BinaryCode& code, const BitVec& v);

// Visits all 2^k codewords exactly once, in lexicographic order of the
// message vector (generator 0 is the most significant message bit). Each
// step XORs only the generators whose message bit changed, so the walk is
// amortized O(n/64) per codeword.
void for_each_codeword(const BinaryCode& code, const std::function<void(const BitVec&)>& fn,
                       const Caps& caps = {});

std::vector<BitVec> codewords(const BinaryCode& code, const Caps& caps = {});

// Codewords of weight w, sorted by support. Runs full enumeration or a
// weight-w sieve against the dual basis (syndrome walk over all C(n,w)
// supports), whichever is cheaper within the caps.
std::vector<BitVec> weight_class(const BinaryCode& code, int w, const Caps& caps = {});

// GF(2) rank of an arbitrary set of vectors
int span_rank(std::span<const BitVec> vectors, int n);

}  // namespace sdw
