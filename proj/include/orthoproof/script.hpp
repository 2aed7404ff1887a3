#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "orthoproof/kernel.hpp"
#include "orthoproof/tactics.hpp"

namespace orthoproof {

class ScriptError : public std::runtime_error {
public:
    ScriptError(const std::string& what, std::size_t line)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

struct ScriptRef {
    bool hyp = false;
    std::string label;  // line label or hypothesis name
};

struct ScriptLine {
    enum class Kind { Primitive, Derived, Hypothesis };

    std::string label;
    Sequent sequent;
    Kind kind = Kind::Primitive;
    RuleId rule = RuleId::assume;
    std::string catalog_id;
    std::string hyp;                                          // Kind::Hypothesis
    std::vector<std::pair<std::string, std::string>> args;  // key=value, in source order
    std::vector<ScriptRef> refs;
    std::size_t source_line = 0;
};

struct ProofScript {
    std::string name;
    Mode mode = Mode::NOM;
    std::vector<std::string> constants;
    std::vector<std::pair<std::string, Sequent>> hyps;
    Sequent goal;
    std::vector<ScriptLine> lines;
    std::size_t source_line = 0;

    Signature signature() const;
};

// Parses the part after "by": RULE [ARGS] [from REFS].
ScriptLine parse_justification(const std::string& text, std::size_t line = 0);

// Parses every theorem block of a script file.
std::vector<ProofScript> parse_scripts(const std::string& text);

struct LineReport {
    std::string label;
    bool ok = true;
    std::string message;
};

struct ScriptReport {
    std::string name;
    Mode mode = Mode::NOM;
    bool accepted = false;
    std::vector<LineReport> lines;
    std::string error;  // goal mismatch and other whole-script failures
    std::optional<Derivation> derivation;
};

// Checks every line: primitive lines through check_inference, catalog lines by
// expanding them and re-checking the primitive tree. The composite derivation
// of the last line is re-checked as a whole.
ScriptReport check_script(const ProofScript& s);

// Line-by-line application helpers shared with the REPL.
Instantiation line_instantiation(const ScriptLine& line, const Signature& sig);
Inst line_pins(const ScriptLine& line, const Signature& sig);

// Conclusion obtained by applying the line's rule or catalog entry to the
// premises; arguments pin metavariables the premises leave open. The result
// is unchecked.
Sequent forward(const ScriptLine& line, const std::vector<Sequent>& premises, const Signature& sig);

std::string format_script(const ProofScript& s);

}  // namespace orthoproof
