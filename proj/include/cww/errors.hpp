#ifndef CWW_ERRORS_HPP
#define CWW_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace cww {

// Base class for all domain errors thrown by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A symbol name that is not part of the alphabet in use.
class UnknownSymbolError : public Error {
public:
    explicit UnknownSymbolError(const std::string& symbol)
        : Error("unknown symbol: " + symbol), symbol_(symbol) {}
    const std::string& symbol() const { return symbol_; }

private:
    std::string symbol_;
};

// An input-label name that the automaton or grammar does not define.
class UnknownLabelError : public Error {
public:
    explicit UnknownLabelError(const std::string& label)
        : Error("unknown label: " + label), label_(label) {}
    const std::string& label() const { return label_; }

private:
    std::string label_;
};

// Two values that must share an alphabet do not.
class AlphabetMismatchError : public Error {
public:
    explicit AlphabetMismatchError(const std::string& what) : Error(what) {}
};

// A vector that was required to be a probability distribution is not one.
class NotADistributionError : public Error {
public:
    explicit NotADistributionError(const std::string& what) : Error(what) {}
};

// Zadeh-notation or model-file syntax error.
class ParseError : public Error {
public:
    explicit ParseError(const std::string& what) : Error(what) {}
};

// A model whose structural invariants do not hold.
class ValidationError : public Error {
public:
    ValidationError(const std::string& what, std::vector<std::string> violations)
        : Error(what), violations_(std::move(violations)) {}
    const std::vector<std::string>& violations() const { return violations_; }

private:
    std::vector<std::string> violations_;
};

// The basis handed to a decomposition is singular.
class LinearlyDependentBasisError : public Error {
public:
    explicit LinearlyDependentBasisError(const std::string& what) : Error(what) {}
};

// No stored label puts mass on some symbol, so the conditional weights
// (and with them retraction/extension) are undefined there.
class UncoveredSymbolError : public Error {
public:
    explicit UncoveredSymbolError(std::vector<std::string> symbols)
        : Error(make_message(symbols)), symbols_(std::move(symbols)) {}
    const std::vector<std::string>& symbols() const { return symbols_; }

private:
    static std::string make_message(const std::vector<std::string>& symbols) {
        std::string msg = "uncovered symbol(s):";
        for (const auto& s : symbols) msg += " " + s;
        return msg;
    }
    std::vector<std::string> symbols_;
};

// An exhaustive enumeration would exceed the caller's budget.
class BudgetExceededError : public Error {
public:
    BudgetExceededError(long long required, long long budget)
        : Error("enumeration budget exceeded: needs " + std::to_string(required) +
                " evaluations, budget is " + std::to_string(budget)) {}
};

}  // namespace cww

#endif
