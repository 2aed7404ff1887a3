#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "orthoproof/syntax.hpp"

namespace orthoproof {

enum class Mode { NOM, NOM_E, NOM_Q, NOM_q };

enum class RuleId {
    assume,
    cut,
    paste,
    cexch,
    and_i,
    and_e1,
    and_e2,
    imp_i,
    imp_e,
    lem,
    explode,
    exch,
    all_i,
    all_e,
    qexch
};

inline constexpr RuleId kPrimitiveRules[] = {RuleId::assume, RuleId::cut,    RuleId::paste,  RuleId::cexch,
                                             RuleId::and_i,  RuleId::and_e1, RuleId::and_e2, RuleId::imp_i,
                                             RuleId::imp_e,  RuleId::lem,    RuleId::explode};

std::string to_string(Mode m);
std::string to_string(RuleId r);
std::optional<Mode> mode_from_string(const std::string& s);
std::optional<RuleId> rule_from_string(const std::string& s);
std::size_t premise_count(RuleId r);
bool rule_allowed(RuleId r, Mode m);

// Rule-specific data recorded in a derivation node: the instantiating term
// of all_e and (optionally) the generalized variable of all_i.
struct Instantiation {
    std::optional<Term> term;
    std::optional<Variable> var;
};

class Derivation {
public:
    static Derivation rule(RuleId r, std::vector<Derivation> premises, Sequent conclusion, Instantiation inst = {});
    // A leaf standing for a declared hypothesis of an open derivation.
    static Derivation hypothesis(Sequent s);
    // Same node with an alpha/abbreviation-equivalent conclusion.
    Derivation with_conclusion(Sequent s) const;

    bool is_hypothesis() const;
    RuleId rule() const;
    const Sequent& conclusion() const;
    const std::vector<Derivation>& premises() const;
    const Instantiation& instantiation() const;
    bool same_node(const Derivation& o) const { return node_ == o.node_; }
    const void* id() const { return node_.get(); }

    // Node count of the tree (shared subtrees counted once per occurrence).
    std::size_t size() const;
    std::size_t depth() const;

private:
    struct Node;
    std::shared_ptr<const Node> node_;
};

struct Violation {
    std::string message;
    std::vector<std::string> where;  // positions that failed to match
};

struct InferenceCheck {
    bool ok = true;
    Violation violation;
    explicit operator bool() const { return ok; }
};

InferenceCheck check_inference(RuleId rule, const std::vector<Sequent>& premises, const Sequent& conclusion,
                               Mode mode, const Instantiation& inst = {});

struct DerivationCheck {
    bool ok = true;
    std::vector<std::size_t> path;  // child indices from the root to the failing node
    Violation violation;
    explicit operator bool() const { return ok; }
};

// Hypothesis leaves are accepted iff their sequent is among `hypotheses`.
DerivationCheck check_derivation(const Derivation& d, Mode mode, const std::vector<Sequent>& hypotheses = {});

// Prefix delta onto every sequent of the tree.
Derivation weaken(const Derivation& d, const std::vector<Formula>& delta);

// Distinct sequents of the hypothesis leaves, in depth-first order.
std::vector<Sequent> hypothesis_leaves(const Derivation& d);

std::string render(const Derivation& d);

}  // namespace orthoproof
