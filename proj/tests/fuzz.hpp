#pragma once

#include <map>
#include <random>
#include <string>

#include "orthoproof/syntax.hpp"

namespace orthoproof::testing {

// Builds random trees directly, independent of the parser.
class Fuzzer {
public:
    explicit Fuzzer(unsigned seed) : rng_(seed) {}

    Formula formula(int depth) {
        int pick = depth <= 0 ? static_cast<int>(rng_() % 2) : static_cast<int>(rng_() % 11);
        switch (pick) {
            case 0: return Formula::letter(std::string(1, "pqrs"[rng_() % 4]));
            case 1: {
                std::vector<Term> args;
                for (std::size_t i = rng_() % 3 + 1; i > 0; --i) args.push_back(term(2));
                return Formula::atom(rng_() % 2 ? "R" : "S", args);
            }
            case 2: return Formula::neg(formula(depth - 1));
            case 3: return Formula::conj(formula(depth - 1), formula(depth - 1));
            case 4: return Formula::imp(formula(depth - 1), formula(depth - 1));
            case 5: return Formula::disj(formula(depth - 1), formula(depth - 1));
            case 6: return Formula::compat(formula(depth - 1), formula(depth - 1));
            case 7: return Formula::forall(var(), formula(depth - 1));
            case 8: return Formula::exists(var(), formula(depth - 1));
            case 9: return Formula::conj(Formula::neg(formula(depth - 1)), formula(depth - 2));
            default: return Formula::imp(formula(depth - 2), Formula::imp(formula(depth - 1), formula(depth - 2)));
        }
    }

    Term term(int depth) {
        int pick = depth <= 0 ? static_cast<int>(rng_() % 2) : static_cast<int>(rng_() % 3);
        if (pick == 0) return Term::var(var());
        if (pick == 1) return Term::constant(rng_() % 2 ? "c" : "d");
        std::vector<Term> args;
        for (std::size_t i = rng_() % 2 + 1; i > 0; --i) args.push_back(term(depth - 1));
        return Term::app("f", args);
    }

    Variable var() { return Variable{std::string(1, "xyz"[rng_() % 3])}; }

private:
    std::mt19937 rng_;
};

// Oracle: count variable occurrences inside each atom.
inline void count_vars(const Term& t, std::map<std::string, int>& counts) {
    if (t.kind() == Term::Kind::Var) ++counts[t.name()];
    for (const auto& a : t.args()) count_vars(a, counts);
}

inline bool oracle_nonduplicating(const Formula& f) {
    switch (f.kind()) {
        case Connective::Letter: return true;
        case Connective::Atom: {
            std::map<std::string, int> counts;
            for (const auto& a : f.args()) count_vars(a, counts);
            for (const auto& [v, n] : counts)
                if (n > 1) return false;
            return true;
        }
        case Connective::Neg:
        case Connective::Forall:
        case Connective::Exists: return oracle_nonduplicating(f.lhs());
        default: return oracle_nonduplicating(f.lhs()) && oracle_nonduplicating(f.rhs());
    }
}

}  // namespace orthoproof::testing
