#pragma once

#include "secant/bounds.hpp"
#include "secant/rational.hpp"

#include <vector>

namespace secant::codes {

// A block code over {0..q-1}^length, stored as an explicit sorted word list.
// min_distance follows the convention length+1 when fewer than two words.
struct CodeSpec {
    int q = 2;
    int length = 0;
    std::vector<std::vector<int>> words;
    int min_distance = 0;

    static CodeSpec from_words(int q, int length, std::vector<std::vector<int>> words);
    bool contains(const std::vector<int>& w) const;
};

int hamming_distance(const std::vector<int>& a, const std::vector<int>& b);

// Kernel of h (r x d over Z_q, q prime) as an explicit code.
CodeSpec code_from_parity_check(const std::vector<std::vector<int>>& h, int q);

// Number of words within Hamming distance 1 of the code (rook cover).
long long rook_bound(const CodeSpec& code);

// For a binary constant-weight code: number of words of the same weight within
// Hamming distance 2 of the code.
long long grassmann_code_bound(const CodeSpec& code);

// Number of multi-indices |a| = d within 1-distance 2 of the corner set
// {d e_i : i in corners}; corners are 1-based indices into {1..m}.
long long veronese_corner_bound(const std::vector<int>& corners, int m, int d);

// Voronoi sites from codewords: identity embedding into {0,1}^d for q = 2
// (reduced Segre coordinates), row-indicator embedding into Q^{d*q} otherwise.
bounds::Witness code_to_segre_witness(const CodeSpec& code,
                                      const std::vector<QVec>& extra_sites);

// Lexicographic greedy constant-weight code: scan weight-d words of length m in
// lex order, keep each word at distance >= min_dist from all kept words.
CodeSpec greedy_constant_weight_code(int m, int d, int min_dist);

}  // namespace secant::codes
