#pragma once

#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "orthoproof/kernel.hpp"

namespace orthoproof {

class TacticError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Values for the metavariables of a catalog schema. In schema text every
// letter is a metavariable; a letter G or D standing alone in the antecedent
// is the context list gamma or delta.
struct Inst {
    std::vector<Formula> gamma;
    std::vector<Formula> delta;
    std::map<std::string, Formula> f;
    std::optional<Variable> x;
    std::optional<Term> t;
    bool has_gamma = false;
    bool has_delta = false;

    const Formula& at(const std::string& meta) const;
    Inst& set(const std::string& meta, Formula value);
    Inst& with_gamma(std::vector<Formula> g);
    Inst& with_delta(std::vector<Formula> d);
};

// Relation between metavariables that is not expressed by the schema shape.
enum class Constraint {
    None,
    Substitution,  // phi_t is phi[x/t]
    Chain          // chi is D1 -> ... -> Dn -> psi
};

struct CatalogEntry {
    std::string id;
    std::string locus;
    std::vector<std::string> premises;  // schema text
    std::string conclusion;
    std::vector<Mode> modes;
    Constraint constraint = Constraint::None;
    bool predicate = false;  // schema mentions x and t
    // The builder weakens its premise derivations. The result is closed only
    // when the premises are; over hypothesis leaves it contains weakened
    // copies of the hypotheses.
    bool admissible = false;
    std::function<Derivation(const Inst&, const std::vector<Derivation>&)> build;

    bool uses_gamma() const;
    bool uses_delta() const;
    std::vector<std::string> metas() const;  // formula metavariables in first-occurrence order
    bool allows(Mode m) const;
};

const std::vector<CatalogEntry>& catalog();
const CatalogEntry* lookup(const std::string& id);

Sequent parse_schema(const std::string& text);
Sequent instantiate(const std::string& schema, const Inst& inst);

// Fills derived metavariables (phi_t, chi) and infers t where possible.
Inst complete(const CatalogEntry& e, Inst inst);

// Structural match of the entry against concrete sequents; pinned values in
// `pins` must agree. A missing conclusion matches premises only.
std::optional<Inst> match_entry(const CatalogEntry& e, const std::vector<Sequent>& premises,
                                const std::optional<Sequent>& conclusion, const Inst& pins = {});

// Builds the entry's derivation. Premise derivations must conclude the
// instantiated premise shapes. With a mode, the mode's side conditions are
// enforced as well.
Derivation derive(const std::string& id, const Inst& inst, const std::vector<Derivation>& premises,
                  std::optional<Mode> mode = std::nullopt);

// Same, with hypothesis leaves standing in for the premises.
Derivation derive_open(const std::string& id, const Inst& inst, std::optional<Mode> mode = std::nullopt);

// Fresh-letter instance: metavariables become p, q, r, ..., gamma becomes
// g1..gn and delta d1..dm. Predicate entries use phi = R(x) and the given
// term for t.
Inst sample_instance(const CatalogEntry& e, std::size_t gamma_len, std::size_t delta_len = 0,
                     const std::string& term = "c");

// Schema of a primitive rule in the same notation as catalog entries, used
// for forward application in the REPL.
struct RuleSchema {
    std::vector<std::string> premises;
    std::string conclusion;
};
std::optional<RuleSchema> primitive_schema(RuleId r);

}  // namespace orthoproof
