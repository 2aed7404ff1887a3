#pragma once

#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "orthoproof/lattice.hpp"
#include "orthoproof/syntax.hpp"

namespace orthoproof {

class SemanticsError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

using Assignment = std::map<std::string, Element>;
// Replacement for the Sasaki arrow clause; used to perturb the semantics.
using ArrowClause = std::function<Element(Element, Element)>;

// Left-associated Sasaki fold a1 & ... & an, top when empty.
Element sasaki_fold(const FiniteOML& L, const std::vector<Element>& values);

Element eval_formula(const FiniteOML& L, const Formula& f, const Assignment& v, const ArrowClause* arrow = nullptr);
bool sequent_true(const FiniteOML& L, const Sequent& s, const Assignment& v, const ArrowClause* arrow = nullptr);

// Letter-indexed evaluator for sweeps: the sequent is expanded once and
// values are read from an array ordered like letters().
class SequentEvaluator {
public:
    explicit SequentEvaluator(const Sequent& s);

    // Distinct letters in alphabetical order.
    const std::vector<std::string>& letters() const { return letters_; }
    Element formula(std::size_t i, const FiniteOML& L, const Element* vals, const ArrowClause* arrow = nullptr) const;
    Element fold(const FiniteOML& L, const Element* vals, const ArrowClause* arrow = nullptr) const;
    Element succedent(const FiniteOML& L, const Element* vals, const ArrowClause* arrow = nullptr) const;
    bool holds(const FiniteOML& L, const Element* vals, const ArrowClause* arrow = nullptr) const;

private:
    struct Op {
        enum Kind { Letter, Neg, And, Imp } kind;
        std::size_t arg;
    };
    using Program = std::vector<Op>;
    static void compile(const Formula& f, const std::vector<std::string>& letters, Program& out);
    static Element run(const Program& p, const FiniteOML& L, const Element* vals, const ArrowClause* arrow);

    std::vector<std::string> letters_;
    std::vector<Program> antecedent_;
    Program succedent_;
};

struct Countermodel {
    std::string lattice;
    std::vector<std::pair<std::string, Element>> assignment;
    std::vector<std::string> element_names;  // names of the assigned elements, same order
    Element fold = kNoElement;
    Element succedent = kNoElement;
    std::string fold_name, succedent_name;
};

struct Verdict {
    bool valid = true;
    std::optional<Countermodel> countermodel;
    explicit operator bool() const { return valid; }
};

// Exhaustive over all assignments, first failure in lexicographic order of
// (letter, element index) with the first letter most significant.
Verdict validate_sequent(const Sequent& s, const FiniteOML& L, const ArrowClause* arrow = nullptr);

// Complete for sequents with at most two letters: checks 2 and MO2.
Verdict decide_two_var(const Sequent& s);

// First countermodel across the lattices in order; valid means none found.
Verdict countermodel_search(const Sequent& s, const std::vector<FiniteOML>& lattices);

// Truth-table validity of (phi1 /\ ... /\ phin) -> psi.
bool classical_valid(const Sequent& s);

// Finite Q-valued structure for predicate formulas.
struct QStructure {
    FiniteOML lattice;
    std::map<std::string, std::size_t> domains;  // sort -> size
    std::map<std::string, std::map<std::vector<std::size_t>, Element>> relations;
    std::map<std::string, std::map<std::vector<std::size_t>, std::size_t>> functions;
    std::map<std::string, std::size_t> constants;
    std::map<std::string, Element> letters;

    std::size_t domain_size(const std::string& sort) const;
};

using Environment = std::map<std::string, std::size_t>;

std::size_t eval_term(const Term& t, const QStructure& M, const Environment& env);
Element eval_predicate(const Formula& f, const QStructure& M, const Environment& env,
                       const ArrowClause* arrow = nullptr);
bool sequent_true(const QStructure& M, const Sequent& s, const Environment& env);

}  // namespace orthoproof
