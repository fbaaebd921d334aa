#ifndef CWW_ALPHABET_HPP
#define CWW_ALPHABET_HPP

#include <cctype>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "cww/errors.hpp"

namespace cww {

// A finite, ordered set of distinct symbol names. The declared order fixes
// the coordinate indexing used everywhere a word is treated as a vector.
class Alphabet {
public:
    explicit Alphabet(std::vector<std::string> symbols) : symbols_(std::move(symbols)) {
        if (symbols_.empty()) throw Error("alphabet must be nonempty");
        for (std::size_t i = 0; i < symbols_.size(); ++i) {
            const std::string& s = symbols_[i];
            if (!valid_symbol(s)) throw Error("invalid symbol name: '" + s + "'");
            if (!index_.emplace(s, i).second) throw Error("duplicate symbol: " + s);
        }
    }

    std::size_t size() const { return symbols_.size(); }
    const std::vector<std::string>& symbols() const { return symbols_; }
    const std::string& symbol(std::size_t i) const { return symbols_.at(i); }

    bool contains(const std::string& symbol) const { return index_.count(symbol) != 0; }

    std::size_t index_of(const std::string& symbol) const {
        auto it = index_.find(symbol);
        if (it == index_.end()) throw UnknownSymbolError(symbol);
        return it->second;
    }

    bool operator==(const Alphabet& other) const { return symbols_ == other.symbols_; }
    bool operator!=(const Alphabet& other) const { return !(*this == other); }

    // Symbol names must survive the Zadeh text grammar: nonempty, no
    // whitespace, and neither of the separator characters '\' and '+'.
    static bool valid_symbol(const std::string& s) {
        if (s.empty()) return false;
        for (char c : s) {
            if (c == '\\' || c == '+' || std::isspace(static_cast<unsigned char>(c))) return false;
        }
        return true;
    }

private:
    std::vector<std::string> symbols_;
    std::unordered_map<std::string, std::size_t> index_;
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

inline AlphabetPtr make_alphabet(std::vector<std::string> symbols) {
    return std::make_shared<const Alphabet>(std::move(symbols));
}

inline bool same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b) {
    return a == b || (a && b && *a == *b);
}

}  // namespace cww

#endif
