#include "orthoproof/syntax.hpp"

namespace orthoproof {

namespace {

// Binding strength of each production; a child printed below the strength
// its slot requires gets parentheses.
enum Level { kImp = 1, kCompat = 2, kOr = 3, kAnd = 4, kUnary = 5, kAtom = 6 };

int level_of(const Formula& f) {
    switch (f.kind()) {
        case Connective::Imp:
            return kImp;
        case Connective::Compat:
            return kCompat;
        case Connective::Or:
            return kOr;
        case Connective::And:
            return kAnd;
        case Connective::Neg:
            return kUnary;
        default:
            return kAtom;
    }
}

bool is_quantifier(const Formula& f) {
    return f.kind() == Connective::Forall || f.kind() == Connective::Exists;
}

void emit(const Formula& f, int required, bool tail, std::string& out);

// A quantifier body extends as far right as possible, so a quantifier can
// only appear unparenthesized when nothing follows it.
void child(const Formula& f, int required, bool tail, std::string& out) {
    bool parens = level_of(f) < required || (is_quantifier(f) && !tail);
    if (parens) out += '(';
    emit(f, parens ? kImp : required, parens || tail, out);
    if (parens) out += ')';
}

void emit(const Formula& f, int, bool tail, std::string& out) {
    switch (f.kind()) {
        case Connective::Letter:
            out += f.name();
            return;
        case Connective::Atom:
            out += f.name();
            out += '(';
            for (std::size_t i = 0; i < f.args().size(); ++i) {
                if (i) out += ", ";
                out += render(f.args()[i]);
            }
            out += ')';
            return;
        case Connective::Neg:
            out += '~';
            child(f.lhs(), kUnary, tail, out);
            return;
        case Connective::And:
            child(f.lhs(), kAnd, false, out);
            out += " /\\ ";
            child(f.rhs(), kUnary, tail, out);
            return;
        case Connective::Or:
            child(f.lhs(), kOr, false, out);
            out += " \\/ ";
            child(f.rhs(), kAnd, tail, out);
            return;
        case Connective::Compat:
            child(f.lhs(), kOr, false, out);
            out += " >< ";
            child(f.rhs(), kOr, tail, out);
            return;
        case Connective::Imp:
            child(f.lhs(), kCompat, false, out);
            out += " -> ";
            child(f.rhs(), kImp, tail, out);
            return;
        case Connective::Forall:
        case Connective::Exists:
            out += f.kind() == Connective::Forall ? "forall " : "exists ";
            out += f.bound().name;
            out += ". ";
            child(f.body(), kImp, tail, out);
            return;
    }
}

}  // namespace

std::string render(const Term& t) {
    if (t.kind() != Term::Kind::App) return t.name();
    std::string out = t.name() + "(";
    for (std::size_t i = 0; i < t.args().size(); ++i) {
        if (i) out += ", ";
        out += render(t.args()[i]);
    }
    return out + ")";
}

std::string render(const Formula& f) {
    std::string out;
    emit(f, kImp, true, out);
    return out;
}

std::string render(const Sequent& s) {
    std::string out;
    for (std::size_t i = 0; i < s.antecedent.size(); ++i) {
        if (i) out += ", ";
        out += render(s.antecedent[i]);
    }
    if (!s.antecedent.empty()) out += ' ';
    out += "|- ";
    out += render(s.succedent);
    return out;
}

}  // namespace orthoproof
