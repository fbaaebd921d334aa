#ifndef CWW_ZADEH_HPP
#define CWW_ZADEH_HPP

#include <string>

#include "cww/words.hpp"

namespace cww {

// Text form "0.9\a + 0.1\b": weight, backslash, symbol, terms joined by
// '+'. Whitespace around terms is ignored; symbols omitted from the text
// get weight zero.

ProbWord parse_prob_word(const std::string& text, const AlphabetPtr& alphabet);
FuzzyWord parse_fuzzy_word(const std::string& text, const AlphabetPtr& alphabet);

// Shortest round-trip formatting of the support, in alphabet order.
std::string format_zadeh(const ProbWord& word);
std::string format_zadeh(const FuzzyWord& word);

}  // namespace cww

#endif
