#pragma once

// Brute-force reference implementations. Each one recomputes a library
// answer by enumeration or by a slower route, so the two can be compared.

#include "odograph/ideals.hpp"
#include "odograph/kgraph.hpp"
#include "odograph/oper.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <utility>
#include <vector>

namespace odograph::oracle {

/// Every normal-form letter sequence reachable from the word by single
/// theta swaps in either direction, sorted.
std::vector<std::vector<Letter>> reachable_normal_forms(const Word& word);

/// True when every three-color word x^l_u x^j_t x^i_s (i<j<l) reaches a
/// single normal form.
bool cubic_confluent(const KGraphSpec& spec);

/// Words of degree d(mu) v d(nu) having both mu and nu as prefixes.
std::vector<Word> common_extensions(const Word& mu, const Word& nu);

/// Membership in mu_n^{-1} nu_n ... mu_1^{-1} nu_1 F by direct recursion.
bool chain_member(const std::vector<std::pair<Word, Word>>& chain, const Word& w);

/// Some p != q in [0, bound]^k with npow(p) = npow(q), found by hashing.
std::optional<std::pair<Degree, Degree>> exponent_collision(const std::vector<unsigned long>& sizes,
                                                            unsigned long bound);

/// First code at the join degree that has none of the words as a prefix.
std::optional<BigInt> uncovered(const SpecPtr& spec, const std::vector<Word>& words);

Word random_word(std::mt19937_64& rng, const SpecPtr& spec, std::size_t length);

/// Chain of the given length; each word has length at most max_word_length.
std::vector<std::pair<Word, Word>> random_chain(std::mt19937_64& rng, const SpecPtr& spec, std::size_t length,
                                                std::size_t max_word_length);

/// Small sums of generator words with integer and square-root weights,
/// over f, g(i,s) for QFZ or u, s(n) for QN.
OpTerm random_term(std::mt19937_64& rng, const KGraphSpec& spec, ModelKind kind);

/// First m in [lo, hi] where the canonical form and pointwise evaluation
/// disagree.
std::optional<BigInt> semantics_mismatch(const OpTerm& term, const Model& model, long lo, long hi);

}  // namespace odograph::oracle
