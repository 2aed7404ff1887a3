#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace orthoproof {

inline constexpr const char* kDefaultSort = "U";

struct Variable {
    std::string name;
    std::string sort = kDefaultSort;

    friend bool operator==(const Variable&, const Variable&) = default;
    friend auto operator<=>(const Variable&, const Variable&) = default;
};

class Term {
public:
    enum class Kind { Var, Const, App };

    Term() = default;
    static Term var(std::string name, std::string sort = kDefaultSort);
    static Term var(const Variable& v) { return var(v.name, v.sort); }
    static Term constant(std::string name, std::string sort = kDefaultSort);
    static Term app(std::string function, std::vector<Term> args, std::string sort = kDefaultSort);

    Kind kind() const;
    const std::string& name() const;
    const std::string& sort() const;
    const std::vector<Term>& args() const;
    Variable as_variable() const { return {name(), sort()}; }
    explicit operator bool() const { return node_ != nullptr; }

    struct Node;

private:
    std::shared_ptr<const Node> node_;
};

bool operator==(const Term& a, const Term& b);

enum class Connective { Letter, Atom, Neg, And, Imp, Or, Compat, Forall, Exists };

// Immutable formula tree. Or, Compat and Exists are abbreviations that
// expand() rewrites into Neg/And/Imp/Forall.
class Formula {
public:
    Formula() = default;
    static Formula letter(std::string name);
    static Formula atom(std::string relation, std::vector<Term> args);
    static Formula neg(Formula f);
    static Formula conj(Formula a, Formula b);
    static Formula imp(Formula a, Formula b);
    static Formula disj(Formula a, Formula b);
    static Formula compat(Formula a, Formula b);
    static Formula forall(Variable x, Formula body);
    static Formula exists(Variable x, Formula body);

    Connective kind() const;
    const std::string& name() const;          // Letter, Atom
    const std::vector<Term>& args() const;    // Atom
    const Formula& lhs() const;               // binary; operand of Neg; body of quantifiers
    const Formula& rhs() const;               // binary
    const Formula& operand() const { return lhs(); }
    const Formula& body() const { return lhs(); }
    const Variable& bound() const;            // Forall, Exists
    bool has_derived() const;                 // contains Or, Compat or Exists
    bool is_propositional() const;            // only letters and connectives
    bool same_node(const Formula& other) const { return node_ == other.node_; }
    explicit operator bool() const { return node_ != nullptr; }

    struct Node;

private:
    friend struct FormulaFactory;
    explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

bool alpha_equal(const Formula& a, const Formula& b);
inline bool operator==(const Formula& a, const Formula& b) { return alpha_equal(a, b); }

struct Sequent {
    std::vector<Formula> antecedent;
    Formula succedent;
};

bool operator==(const Sequent& a, const Sequent& b);

struct Signature {
    std::set<std::string> sorts;
    std::map<std::string, std::vector<std::string>> relations;
    std::map<std::string, std::pair<std::vector<std::string>, std::string>> functions;
    std::map<std::string, std::string> constants;
    // Undeclared relation and function symbols are accepted (single sort)
    // when open is set; proof scripts use this.
    bool open = false;

    static Signature propositional() { return {}; }
    static Signature open_single_sorted() {
        Signature s;
        s.open = true;
        return s;
    }
    std::string default_sort() const { return sorts.empty() ? kDefaultSort : *sorts.begin(); }
};

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " at offset " + std::to_string(position)), position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

class SortError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

Formula parse_formula(const std::string& text, const Signature& sig = {});
Sequent parse_sequent(const std::string& text, const Signature& sig = {});
Term parse_term(const std::string& text, const Signature& sig = {});

std::string render(const Formula& f);
std::string render(const Term& t);
std::string render(const Sequent& s);

Formula expand(const Formula& f);
Sequent expand(const Sequent& s);

Formula substitute(const Formula& f, const Variable& x, const Term& t);

std::set<std::string> free_variables(const Term& t);
std::set<std::string> free_variables(const Formula& f);
std::set<std::string> free_variables(const std::vector<Formula>& fs);

bool is_nonduplicating(const Formula& f);

// Distinct letter names in order of first occurrence.
std::vector<std::string> letters(const Formula& f);
std::vector<std::string> letters(const Sequent& s);

// Number of nodes in the tree, counting every connective, letter and atom.
std::size_t formula_size(const Formula& f);

}  // namespace orthoproof
