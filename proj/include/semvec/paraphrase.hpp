#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "semvec/embedding_store.hpp"
#include "semvec/similarity_index.hpp"

namespace semvec {

using Pronunciation = std::vector<std::string>;  // ARPAbet phonemes, vowels carry a stress digit

/// Pronouncing-dictionary entries keyed by lowercased word.
struct PronunciationLexicon {
  std::map<std::string, std::vector<Pronunciation>> entries;

  const std::vector<Pronunciation>* find(std::string_view word) const;
};

/// "WORD  PH1 PH2 ..." lines; ";;;" comments; "WORD(2)" variants join WORD.
PronunciationLexicon parse_pronunciations(std::string_view bytes);

/// Perfect rhyme: some pair of pronunciations shares the phoneme suffix that
/// starts at the last primary-stressed vowel. A word never rhymes with itself.
/// Throws UnknownTokenError for words missing from the lexicon.
bool rhymes(const PronunciationLexicon& lex, std::string_view first, std::string_view second);

struct PhraseCandidate {
  std::string first;
  std::string second;
  Vector vector;  // unit mean of the two unit rows
  double score = 0.0;
};

/// Every (adjective, noun) pair with both words starting with `letter`,
/// ranked by cosine of the averaged pair vector to the target.
std::vector<PhraseCandidate> generate_alliterative(const Index& index, std::string_view target,
                                                   const std::vector<std::string>& adjectives,
                                                   const std::vector<std::string>& nouns,
                                                   char letter, std::size_t k);

/// Every unordered rhyming pair from `words` (restricted to lexicon and space
/// vocabulary), ranked the same way. Pairs are stored in lexicographic order.
std::vector<PhraseCandidate> generate_rhyming(const Index& index, std::string_view target,
                                              const std::vector<std::string>& words,
                                              const PronunciationLexicon& lex, std::size_t k);

/// One token per line; '#' starts a comment.
std::vector<std::string> parse_word_list(std::string_view bytes);

}  // namespace semvec
