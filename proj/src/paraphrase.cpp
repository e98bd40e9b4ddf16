#include "semvec/paraphrase.hpp"

#include <algorithm>
#include <optional>
#include <set>

namespace semvec {

namespace {

const std::set<std::string_view>& vowels() {
  static const std::set<std::string_view> v = {"AA", "AE", "AH", "AO", "AW", "AY", "EH", "ER",
                                               "EY", "IH", "IY", "OW", "OY", "UH", "UW"};
  return v;
}

const std::set<std::string_view>& consonants() {
  static const std::set<std::string_view> c = {"B",  "CH", "D", "DH", "F", "G",  "HH", "JH",
                                               "K",  "L",  "M", "N",  "NG", "P", "R",  "S",
                                               "SH", "T",  "TH", "V", "W",  "Y", "Z",  "ZH"};
  return c;
}

bool is_vowel(std::string_view phoneme) {
  if (!phoneme.empty() && phoneme.back() >= '0' && phoneme.back() <= '2') phoneme.remove_suffix(1);
  return vowels().contains(phoneme);
}

bool valid_phoneme(std::string_view phoneme) {
  return consonants().contains(phoneme) || is_vowel(phoneme);
}

// Index of the last primary-stressed vowel; falls back to the last secondary
// stress, then the last vowel, for entries with no primary stress.
std::optional<std::size_t> rhyme_start(const Pronunciation& p) {
  for (char stress : {'1', '2'}) {
    for (std::size_t i = p.size(); i-- > 0;)
      if (is_vowel(p[i]) && p[i].back() == stress) return i;
  }
  for (std::size_t i = p.size(); i-- > 0;)
    if (is_vowel(p[i])) return i;
  return std::nullopt;
}

bool suffix_match(const Pronunciation& a, const Pronunciation& b) {
  const auto sa = rhyme_start(a);
  const auto sb = rhyme_start(b);
  if (!sa || !sb) return false;
  return std::equal(a.begin() + static_cast<std::ptrdiff_t>(*sa), a.end(),
                    b.begin() + static_cast<std::ptrdiff_t>(*sb), b.end());
}

std::vector<std::string> unique_in_order(const std::vector<std::string>& words) {
  std::vector<std::string> out;
  std::set<std::string> seen;
  for (const auto& w : words)
    if (seen.insert(w).second) out.push_back(w);
  return out;
}

std::vector<PhraseCandidate> rank(const Index& index, std::string_view target,
                                  const std::vector<std::pair<std::string, std::string>>& pairs,
                                  std::size_t k) {
  if (k < 1) throw DataError("k must be at least 1");
  const Vector goal = index.unit_vector(target);
  std::vector<PhraseCandidate> scored;
  scored.reserve(pairs.size());
  for (const auto& [first, second] : pairs) {
    const Vector mean = 0.5 * (index.unit_vector(first) + index.unit_vector(second));
    const double n = mean.norm();
    if (n == 0.0) continue;
    PhraseCandidate c{first, second, mean / n, 0.0};
    c.score = std::clamp(c.vector.dot(goal), -1.0, 1.0);
    scored.push_back(std::move(c));
  }
  const auto better = [](const PhraseCandidate& a, const PhraseCandidate& b) {
    if (a.score != b.score) return a.score > b.score;
    if (a.first != b.first) return a.first < b.first;
    return a.second < b.second;
  };
  const std::size_t take = std::min(k, scored.size());
  std::partial_sort(scored.begin(), scored.begin() + static_cast<std::ptrdiff_t>(take), scored.end(),
                    better);
  scored.resize(take);
  return scored;
}

}  // namespace

const std::vector<Pronunciation>* PronunciationLexicon::find(std::string_view word) const {
  const auto it = entries.find(ascii_lower(word));
  return it == entries.end() ? nullptr : &it->second;
}

PronunciationLexicon parse_pronunciations(std::string_view bytes) {
  PronunciationLexicon lex;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < bytes.size()) {
    ++line_no;
    std::size_t end = bytes.find('\n', pos);
    if (end == std::string_view::npos) end = bytes.size();
    std::string_view line = bytes.substr(pos, end - pos);
    pos = end + 1;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.starts_with(";;;")) continue;

    std::vector<std::string_view> fields;
    for (std::size_t p = 0; p < line.size();) {
      while (p < line.size() && (line[p] == ' ' || line[p] == '\t')) ++p;
      std::size_t q = p;
      while (q < line.size() && line[q] != ' ' && line[q] != '\t') ++q;
      if (q > p) fields.push_back(line.substr(p, q - p));
      p = q;
    }
    if (fields.empty()) continue;
    if (fields.size() < 2) {
      throw DataError("pronunciation line " + std::to_string(line_no) + ": no phonemes", line_no);
    }
    std::string_view word = fields[0];
    if (word.size() > 3 && word.back() == ')') {
      const auto open = word.rfind('(');
      if (open != std::string_view::npos && open > 0) word = word.substr(0, open);
    }
    Pronunciation pron;
    for (std::size_t i = 1; i < fields.size(); ++i) {
      if (!valid_phoneme(fields[i])) {
        throw DataError("pronunciation line " + std::to_string(line_no) + ": unknown phoneme '" +
                            std::string(fields[i]) + "'",
                        line_no);
      }
      pron.emplace_back(fields[i]);
    }
    lex.entries[ascii_lower(word)].push_back(std::move(pron));
  }
  return lex;
}

bool rhymes(const PronunciationLexicon& lex, std::string_view first, std::string_view second) {
  const auto* a = lex.find(first);
  if (!a) throw UnknownTokenError(std::string(first));
  const auto* b = lex.find(second);
  if (!b) throw UnknownTokenError(std::string(second));
  if (ascii_lower(first) == ascii_lower(second)) return false;
  for (const auto& pa : *a)
    for (const auto& pb : *b)
      if (suffix_match(pa, pb)) return true;
  return false;
}

std::vector<PhraseCandidate> generate_alliterative(const Index& index, std::string_view target,
                                                   const std::vector<std::string>& adjectives,
                                                   const std::vector<std::string>& nouns,
                                                   char letter, std::size_t k) {
  index.require(target);
  const char want = ascii_lower(std::string(1, letter)).front();
  const auto keep = [&](const std::vector<std::string>& words) {
    std::vector<std::string> out;
    for (const auto& w : unique_in_order(words))
      if (!w.empty() && ascii_lower(w.substr(0, 1)).front() == want && index.find(w)) out.push_back(w);
    return out;
  };
  const auto adj = keep(adjectives);
  const auto noun = keep(nouns);
  if (adj.empty() || noun.empty()) {
    throw DataError(std::string("no alliterative candidates for letter '") + letter + "'");
  }
  std::vector<std::pair<std::string, std::string>> pairs;
  pairs.reserve(adj.size() * noun.size());
  for (const auto& a : adj)
    for (const auto& n : noun) pairs.emplace_back(a, n);
  return rank(index, target, pairs, k);
}

std::vector<PhraseCandidate> generate_rhyming(const Index& index, std::string_view target,
                                              const std::vector<std::string>& words,
                                              const PronunciationLexicon& lex, std::size_t k) {
  index.require(target);
  std::vector<std::string> pool;
  for (const auto& w : unique_in_order(words))
    if (lex.find(w) && index.find(w)) pool.push_back(w);
  std::vector<std::pair<std::string, std::string>> pairs;
  for (std::size_t i = 0; i < pool.size(); ++i) {
    for (std::size_t j = i + 1; j < pool.size(); ++j) {
      if (!rhymes(lex, pool[i], pool[j])) continue;
      if (pool[i] < pool[j]) {
        pairs.emplace_back(pool[i], pool[j]);
      } else {
        pairs.emplace_back(pool[j], pool[i]);
      }
    }
  }
  if (pairs.empty()) throw DataError("no rhyming pairs among the candidate words");
  return rank(index, target, pairs, k);
}

std::vector<std::string> parse_word_list(std::string_view bytes) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos < bytes.size()) {
    std::size_t end = bytes.find('\n', pos);
    if (end == std::string_view::npos) end = bytes.size();
    std::string_view line = bytes.substr(pos, end - pos);
    pos = end + 1;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    while (!line.empty() && (line.back() == ' ' || line.back() == '\r' || line.back() == '\t'))
      line.remove_suffix(1);
    while (!line.empty() && (line.front() == ' ' || line.front() == '\t')) line.remove_prefix(1);
    if (!line.empty()) out.emplace_back(line);
  }
  return out;
}

}  // namespace semvec
