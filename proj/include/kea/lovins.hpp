#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <unordered_map>

#include "kea/stopwords.hpp"  // fold_ascii

// Lovins suffix-stripping stemmer. Ending list, context conditions and
// recoding rules are transcribed from J. B. Lovins, "Development of a
// stemming algorithm", Mechanical Translation and Computational
// Linguistics 11 (1968), appendices A-C.

namespace kea::lovins {

namespace detail {

struct Ending {
  std::string_view text;
  std::string_view cond;  // condition code "A".."Z", "AA", "BB", "CC"
};

inline constexpr std::array<Ending, 294> kEndings = {{
    // length 11
    {"alistically", "B"}, {"arizability", "A"}, {"izationally", "B"},
    // length 10
    {"antialness", "A"}, {"arisations", "A"}, {"arizations", "A"},
    {"entialness", "A"},
    // length 9
    {"allically", "C"}, {"antaneous", "A"}, {"antiality", "A"},
    {"arisation", "A"}, {"arization", "A"}, {"ationally", "B"},
    {"ativeness", "A"}, {"eableness", "E"}, {"entations", "A"},
    {"entiality", "A"}, {"entialize", "A"}, {"entiation", "A"},
    {"ionalness", "A"}, {"istically", "A"}, {"itousness", "A"},
    {"izability", "A"}, {"izational", "A"},
    // length 8
    {"ableness", "A"}, {"arizable", "A"}, {"entation", "A"},
    {"entially", "A"}, {"eousness", "A"}, {"ibleness", "A"},
    {"icalness", "A"}, {"ionalism", "A"}, {"ionality", "A"},
    {"ionalize", "A"}, {"iousness", "A"}, {"izations", "A"},
    {"lessness", "A"},
    // length 7
    {"ability", "A"}, {"aically", "A"}, {"alistic", "B"}, {"alities", "A"},
    {"ariness", "E"}, {"aristic", "A"}, {"arizing", "A"}, {"ateness", "A"},
    {"atingly", "A"}, {"ational", "B"}, {"atively", "A"}, {"ativism", "A"},
    {"elihood", "E"}, {"encible", "A"}, {"entally", "A"}, {"entials", "A"},
    {"entiate", "A"}, {"entness", "A"}, {"fulness", "A"}, {"ibility", "A"},
    {"icalism", "A"}, {"icalist", "A"}, {"icality", "A"}, {"icalize", "A"},
    {"ication", "G"}, {"icianry", "A"}, {"ination", "A"}, {"ingness", "A"},
    {"ionally", "A"}, {"isation", "A"}, {"ishness", "A"}, {"istical", "A"},
    {"iteness", "A"}, {"iveness", "A"}, {"ivistic", "A"}, {"ivities", "A"},
    {"ization", "F"}, {"izement", "A"}, {"oidally", "A"}, {"ousness", "A"},
    // length 6
    {"aceous", "A"}, {"acious", "B"}, {"action", "G"}, {"alness", "A"},
    {"ancial", "A"}, {"ancies", "A"}, {"ancing", "B"}, {"ariser", "A"},
    {"arized", "A"}, {"arizer", "A"}, {"atable", "A"}, {"ations", "B"},
    {"atives", "A"}, {"eature", "Z"}, {"efully", "A"}, {"encies", "A"},
    {"encing", "A"}, {"ential", "A"}, {"enting", "C"}, {"entist", "A"},
    {"eously", "A"}, {"ialist", "A"}, {"iality", "A"}, {"ialize", "A"},
    {"ically", "A"}, {"icance", "A"}, {"icians", "A"}, {"icists", "A"},
    {"ifully", "A"}, {"ionals", "A"}, {"ionate", "D"}, {"ioning", "A"},
    {"ionist", "A"}, {"iously", "A"}, {"istics", "A"}, {"izable", "E"},
    {"lessly", "A"}, {"nesses", "A"}, {"oidism", "A"},
    // length 5
    {"acies", "A"}, {"acity", "A"}, {"aging", "B"}, {"aical", "A"},
    {"alist", "A"}, {"alism", "B"}, {"ality", "A"}, {"alize", "A"},
    {"allic", "BB"}, {"anced", "B"}, {"ances", "B"}, {"antic", "C"},
    {"arial", "A"}, {"aries", "A"}, {"arily", "A"}, {"arity", "B"},
    {"arize", "A"}, {"aroid", "A"}, {"ately", "A"}, {"ating", "I"},
    {"ation", "B"}, {"ative", "A"}, {"ators", "A"}, {"atory", "A"},
    {"ature", "E"}, {"early", "Y"}, {"ehood", "A"}, {"eless", "A"},
    {"elity", "A"}, {"ement", "A"}, {"enced", "A"}, {"ences", "A"},
    {"eness", "E"}, {"ening", "E"}, {"ental", "A"}, {"ented", "C"},
    {"ently", "A"}, {"fully", "A"}, {"ially", "A"}, {"icant", "A"},
    {"ician", "A"}, {"icide", "A"}, {"icism", "A"}, {"icist", "A"},
    {"icity", "A"}, {"idine", "I"}, {"iedly", "A"}, {"ihood", "A"},
    {"inate", "A"}, {"iness", "A"}, {"ingly", "B"}, {"inism", "J"},
    {"inity", "CC"}, {"ional", "A"}, {"ioned", "A"}, {"ished", "A"},
    {"istic", "A"}, {"ities", "A"}, {"itous", "A"}, {"ively", "A"},
    {"ivity", "A"}, {"izers", "F"}, {"izing", "F"}, {"oidal", "A"},
    {"oides", "A"}, {"otide", "A"}, {"ously", "A"},
    // length 4
    {"able", "A"}, {"ably", "A"}, {"ages", "B"}, {"ally", "B"},
    {"ance", "B"}, {"ancy", "B"}, {"ants", "B"}, {"aric", "A"},
    {"arly", "K"}, {"ated", "I"}, {"ates", "A"}, {"atic", "B"},
    {"ator", "A"}, {"ealy", "Y"}, {"edly", "E"}, {"eful", "A"},
    {"eity", "A"}, {"ence", "A"}, {"ency", "A"}, {"ened", "E"},
    {"enly", "E"}, {"eous", "A"}, {"hood", "A"}, {"ials", "A"},
    {"ians", "A"}, {"ible", "A"}, {"ibly", "A"}, {"ical", "A"},
    {"ides", "L"}, {"iers", "A"}, {"iful", "A"}, {"ines", "M"},
    {"ings", "N"}, {"ions", "B"}, {"ious", "A"}, {"isms", "B"},
    {"ists", "A"}, {"itic", "H"}, {"ized", "F"}, {"izer", "F"},
    {"less", "A"}, {"lily", "A"}, {"ness", "A"}, {"ogen", "A"},
    {"ward", "A"}, {"wise", "A"}, {"ying", "B"}, {"yish", "A"},
    // length 3
    {"acy", "A"}, {"age", "B"}, {"aic", "A"}, {"als", "BB"},
    {"ant", "B"}, {"ars", "O"}, {"ary", "F"}, {"ata", "A"},
    {"ate", "A"}, {"eal", "Y"}, {"ear", "Y"}, {"ely", "E"},
    {"ene", "E"}, {"ent", "C"}, {"ery", "E"}, {"ese", "A"},
    {"ful", "A"}, {"ial", "A"}, {"ian", "A"}, {"ics", "A"},
    {"ide", "L"}, {"ied", "A"}, {"ier", "A"}, {"ies", "P"},
    {"ily", "A"}, {"ine", "M"}, {"ing", "N"}, {"ion", "Q"},
    {"ish", "C"}, {"ism", "B"}, {"ist", "A"}, {"ite", "AA"},
    {"ity", "A"}, {"ium", "A"}, {"ive", "A"}, {"ize", "F"},
    {"oid", "A"}, {"one", "R"}, {"ous", "A"},
    // length 2
    {"ae", "A"}, {"al", "BB"}, {"ar", "X"}, {"as", "B"},
    {"ed", "E"}, {"en", "F"}, {"es", "E"}, {"ia", "A"},
    {"ic", "A"}, {"is", "A"}, {"ly", "B"}, {"on", "S"},
    {"or", "T"}, {"um", "U"}, {"us", "V"}, {"yl", "R"},
    {"'s", "A"}, {"s'", "A"},
    // length 1
    {"a", "A"}, {"e", "A"}, {"i", "A"}, {"o", "A"},
    {"s", "W"}, {"y", "B"},
}};

inline bool ends_with(std::string_view s, std::string_view tail) {
  return s.size() >= tail.size() && s.compare(s.size() - tail.size(), tail.size(), tail) == 0;
}

// Appendix B context conditions. `stem` is what remains after removing the
// ending; every condition additionally requires a stem of at least two
// characters.
inline bool condition_holds(std::string_view cond, std::string_view stem) {
  const std::size_t n = stem.size();
  if (n < 2) return false;
  const char last = stem.back();
  switch (cond[0]) {
    case 'A':
      if (cond == "AA")
        return last == 'd' || last == 'f' || last == 'l' || last == 't' ||
               ends_with(stem, "ph") || ends_with(stem, "th") ||
               ends_with(stem, "er") || ends_with(stem, "or") || ends_with(stem, "es");
      return true;
    case 'B':
      if (cond == "BB") return n >= 3 && !ends_with(stem, "met") && !ends_with(stem, "ryst");
      return n >= 3;
    case 'C':
      if (cond == "CC") return last == 'l';
      return n >= 4;
    case 'D': return n >= 5;
    case 'E': return last != 'e';
    case 'F': return n >= 3 && last != 'e';
    case 'G': return n >= 3 && last == 'f';
    case 'H': return last == 't' || ends_with(stem, "ll");
    case 'I': return last != 'o' && last != 'e';
    case 'J': return last != 'a' && last != 'e';
    case 'K': return n >= 3 && (last == 'l' || last == 'i' || (last == 'e' && stem[n - 3] == 'u'));
    case 'L':
      if (last == 'u' || last == 'x') return false;
      if (last == 's') return stem[n - 2] == 'o';
      return true;
    case 'M': return last != 'a' && last != 'c' && last != 'e' && last != 'm';
    case 'N': return last == 's' ? n >= 4 : n >= 3;
    case 'O': return last == 'l' || last == 'i';
    case 'P': return last != 'c';
    case 'Q': return n >= 3 && last != 'l' && last != 'n';
    case 'R': return last == 'n' || last == 'r';
    case 'S': return ends_with(stem, "dr") || (last == 't' && !ends_with(stem, "tt"));
    case 'T': return last == 's' || (last == 't' && !ends_with(stem, "ot"));
    case 'U': return last == 'l' || last == 'm' || last == 'n' || last == 'r';
    case 'V': return last == 'c';
    case 'W': return last != 's' && last != 'u';
    case 'X': return last == 'l' || last == 'i' || (n >= 3 && last == 'e' && stem[n - 3] == 'u');
    case 'Y': return ends_with(stem, "in");
    case 'Z': return last != 'f';
    default: return false;
  }
}

inline const std::unordered_map<std::string_view, std::string_view>& ending_table() {
  static const auto* table = [] {
    auto* m = new std::unordered_map<std::string_view, std::string_view>();
    m->reserve(kEndings.size());
    for (const Ending& e : kEndings) m->emplace(e.text, e.cond);
    return m;
  }();
  return *table;
}

struct Recode {
  std::string_view tail;
  std::string_view replacement;
  std::string_view not_after;  // blocked when the preceding char is one of these
};

// Appendix C transformations (rule 1, undoubling, is handled separately).
inline constexpr std::array<Recode, 33> kRecodes = {{
    {"iev", "ief", ""},   {"uct", "uc", ""},    {"umpt", "um", ""},
    {"rpt", "rb", ""},    {"urs", "ur", ""},    {"istr", "ister", ""},
    {"metr", "meter", ""}, {"olv", "olut", ""}, {"ul", "l", "aio"},
    {"bex", "bic", ""},   {"dex", "dic", ""},   {"pex", "pic", ""},
    {"tex", "tic", ""},   {"ax", "ac", ""},     {"ex", "ec", ""},
    {"ix", "ic", ""},     {"lux", "luc", ""},   {"uad", "uas", ""},
    {"vad", "vas", ""},   {"cid", "cis", ""},   {"lid", "lis", ""},
    {"erid", "eris", ""}, {"pand", "pans", ""}, {"end", "ens", "s"},
    {"ond", "ons", ""},   {"lud", "lus", ""},   {"rud", "rus", ""},
    {"her", "hes", "pt"}, {"mit", "mis", ""},   {"ent", "ens", "m"},
    {"ert", "ers", ""},   {"et", "es", "n"},    {"yt", "ys", ""},
}};

inline void undouble(std::string& s) {
  constexpr std::string_view doubles = "bdglmnprst";
  if (s.size() >= 2 && s[s.size() - 1] == s[s.size() - 2] &&
      doubles.find(s.back()) != std::string_view::npos) {
    s.pop_back();
  }
}

inline void respell(std::string& s) {
  const Recode* best = nullptr;
  for (const Recode& r : kRecodes) {
    if (!ends_with(s, r.tail)) continue;
    if (best == nullptr || r.tail.size() > best->tail.size()) best = &r;
  }
  if (best == nullptr) return;
  if (!best->not_after.empty() && s.size() > best->tail.size()) {
    char before = s[s.size() - best->tail.size() - 1];
    if (best->not_after.find(before) != std::string_view::npos) return;
  }
  s.resize(s.size() - best->tail.size());
  s.append(best->replacement);
}

}  // namespace detail

// One pass of the Lovins algorithm on a case-folded word: remove the longest
// ending whose context condition is satisfied (leaving a stem of at least two
// characters), then undouble and recode the tail.
inline std::string stem(std::string_view word) {
  std::string out(word);
  if (out.size() >= 3) {
    const auto& table = detail::ending_table();
    std::size_t max_len = std::min<std::size_t>(11, out.size() - 2);
    for (std::size_t len = max_len; len >= 1; --len) {
      std::string_view suffix(out.data() + out.size() - len, len);
      auto it = table.find(suffix);
      if (it == table.end()) continue;
      std::string_view stem_part(out.data(), out.size() - len);
      if (detail::condition_holds(it->second, stem_part)) {
        out.resize(out.size() - len);
        break;
      }
    }
  }
  detail::undouble(out);
  detail::respell(out);
  return out;
}

// Case-folds and applies the Lovins pass until a fixed point; the fixed point
// exists because every pass either shortens the word or leaves it alone, and
// the few lengthening recodings all produce stems no pass changes again.
inline std::string iterated_stem(std::string_view word) {
  std::string cur = fold_ascii(word);
  for (int i = 0; i < 64; ++i) {
    std::string next = stem(cur);
    if (next == cur) break;
    cur = std::move(next);
  }
  return cur;
}

}  // namespace kea::lovins
