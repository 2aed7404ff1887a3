#include "orthoproof/syntax.hpp"

#include <algorithm>
#include <functional>

namespace orthoproof {

struct Term::Node {
    Kind kind;
    std::string name;
    std::string sort;
    std::vector<Term> args;
};

Term Term::var(std::string name, std::string sort) {
    Term t;
    t.node_ = std::make_shared<const Node>(Node{Kind::Var, std::move(name), std::move(sort), {}});
    return t;
}

Term Term::constant(std::string name, std::string sort) {
    Term t;
    t.node_ = std::make_shared<const Node>(Node{Kind::Const, std::move(name), std::move(sort), {}});
    return t;
}

Term Term::app(std::string function, std::vector<Term> args, std::string sort) {
    Term t;
    t.node_ = std::make_shared<const Node>(
        Node{Kind::App, std::move(function), std::move(sort), std::move(args)});
    return t;
}

Term::Kind Term::kind() const { return node_->kind; }
const std::string& Term::name() const { return node_->name; }
const std::string& Term::sort() const { return node_->sort; }
const std::vector<Term>& Term::args() const { return node_->args; }

bool operator==(const Term& a, const Term& b) {
    if (a.kind() != b.kind() || a.name() != b.name() || a.sort() != b.sort()) return false;
    if (a.args().size() != b.args().size()) return false;
    for (std::size_t i = 0; i < a.args().size(); ++i)
        if (!(a.args()[i] == b.args()[i])) return false;
    return true;
}

struct Formula::Node {
    Connective kind;
    std::string name;
    std::vector<Term> args;
    Formula a;
    Formula b;
    Variable var;
    bool derived = false;
    bool propositional = true;
};

struct FormulaFactory {
    static Formula make(Formula::Node n) {
        return Formula(std::make_shared<const Formula::Node>(std::move(n)));
    }
};

namespace {

Formula make(Formula::Node n) { return FormulaFactory::make(std::move(n)); }

}  // namespace

Formula Formula::letter(std::string name) {
    Node n{Connective::Letter, std::move(name), {}, {}, {}, {}, false, true};
    return make(std::move(n));
}

Formula Formula::atom(std::string relation, std::vector<Term> args) {
    if (args.empty()) return letter(std::move(relation));
    Node n{Connective::Atom, std::move(relation), std::move(args), {}, {}, {}, false, false};
    return make(std::move(n));
}

Formula Formula::neg(Formula f) {
    Node n{Connective::Neg, {}, {}, f, {}, {}, f.has_derived(), f.is_propositional()};
    return make(std::move(n));
}

namespace {

Formula binary(Connective c, Formula a, Formula b) {
    bool derived = c == Connective::Or || c == Connective::Compat || a.has_derived() || b.has_derived();
    bool prop = a.is_propositional() && b.is_propositional();
    Formula::Node n{c, {}, {}, std::move(a), std::move(b), {}, derived, prop};
    return make(std::move(n));
}

}  // namespace

Formula Formula::conj(Formula a, Formula b) { return binary(Connective::And, std::move(a), std::move(b)); }
Formula Formula::imp(Formula a, Formula b) { return binary(Connective::Imp, std::move(a), std::move(b)); }
Formula Formula::disj(Formula a, Formula b) { return binary(Connective::Or, std::move(a), std::move(b)); }
Formula Formula::compat(Formula a, Formula b) { return binary(Connective::Compat, std::move(a), std::move(b)); }

Formula Formula::forall(Variable x, Formula body) {
    bool d = body.has_derived();
    Node n{Connective::Forall, {}, {}, std::move(body), {}, std::move(x), d, false};
    return make(std::move(n));
}

Formula Formula::exists(Variable x, Formula body) {
    Node n{Connective::Exists, {}, {}, std::move(body), {}, std::move(x), true, false};
    return make(std::move(n));
}

Connective Formula::kind() const { return node_->kind; }
const std::string& Formula::name() const { return node_->name; }
const std::vector<Term>& Formula::args() const { return node_->args; }
const Formula& Formula::lhs() const { return node_->a; }
const Formula& Formula::rhs() const { return node_->b; }
const Variable& Formula::bound() const { return node_->var; }
bool Formula::has_derived() const { return node_->derived; }
bool Formula::is_propositional() const { return node_->propositional; }

namespace {

using Binders = std::vector<std::pair<std::string, std::string>>;

std::ptrdiff_t lookup(const Binders& env, const std::string& name, bool left) {
    for (std::ptrdiff_t i = static_cast<std::ptrdiff_t>(env.size()) - 1; i >= 0; --i) {
        const auto& p = env[static_cast<std::size_t>(i)];
        if ((left ? p.first : p.second) == name) return i;
    }
    return -1;
}

bool term_alpha(const Term& a, const Term& b, const Binders& env) {
    if (a.kind() != b.kind() || a.sort() != b.sort()) return false;
    switch (a.kind()) {
        case Term::Kind::Var: {
            auto i = lookup(env, a.name(), true);
            auto j = lookup(env, b.name(), false);
            if (i != j) return false;
            return i >= 0 || a.name() == b.name();
        }
        case Term::Kind::Const:
            return a.name() == b.name();
        case Term::Kind::App:
            if (a.name() != b.name() || a.args().size() != b.args().size()) return false;
            for (std::size_t k = 0; k < a.args().size(); ++k)
                if (!term_alpha(a.args()[k], b.args()[k], env)) return false;
            return true;
    }
    return false;
}

bool formula_alpha(const Formula& a, const Formula& b, Binders& env, bool identity) {
    if (identity && a.same_node(b)) return true;
    if (a.kind() != b.kind()) return false;
    switch (a.kind()) {
        case Connective::Letter:
            return a.name() == b.name();
        case Connective::Atom:
            if (a.name() != b.name() || a.args().size() != b.args().size()) return false;
            for (std::size_t k = 0; k < a.args().size(); ++k)
                if (!term_alpha(a.args()[k], b.args()[k], env)) return false;
            return true;
        case Connective::Neg:
            return formula_alpha(a.lhs(), b.lhs(), env, identity);
        case Connective::And:
        case Connective::Imp:
        case Connective::Or:
        case Connective::Compat:
            return formula_alpha(a.lhs(), b.lhs(), env, identity) &&
                   formula_alpha(a.rhs(), b.rhs(), env, identity);
        case Connective::Forall:
        case Connective::Exists: {
            if (a.bound().sort != b.bound().sort) return false;
            env.emplace_back(a.bound().name, b.bound().name);
            bool ok = formula_alpha(a.body(), b.body(), env,
                                    identity && a.bound().name == b.bound().name);
            env.pop_back();
            return ok;
        }
    }
    return false;
}

}  // namespace

bool alpha_equal(const Formula& a, const Formula& b) {
    if (!a || !b) return !a && !b;
    Binders env;
    return formula_alpha(a, b, env, true);
}

bool operator==(const Sequent& a, const Sequent& b) {
    if (a.antecedent.size() != b.antecedent.size()) return false;
    for (std::size_t i = 0; i < a.antecedent.size(); ++i)
        if (!alpha_equal(a.antecedent[i], b.antecedent[i])) return false;
    return alpha_equal(a.succedent, b.succedent);
}

Formula expand(const Formula& f) {
    if (!f.has_derived()) return f;
    switch (f.kind()) {
        case Connective::Neg:
            return Formula::neg(expand(f.lhs()));
        case Connective::And:
            return Formula::conj(expand(f.lhs()), expand(f.rhs()));
        case Connective::Imp:
            return Formula::imp(expand(f.lhs()), expand(f.rhs()));
        case Connective::Or:
            return Formula::neg(
                Formula::conj(Formula::neg(expand(f.lhs())), Formula::neg(expand(f.rhs()))));
        case Connective::Compat: {
            Formula a = expand(f.lhs());
            Formula b = expand(f.rhs());
            return Formula::conj(Formula::imp(a, Formula::imp(b, a)), Formula::imp(b, Formula::imp(a, b)));
        }
        case Connective::Forall:
            return Formula::forall(f.bound(), expand(f.body()));
        case Connective::Exists:
            return Formula::neg(Formula::forall(f.bound(), Formula::neg(expand(f.body()))));
        default:
            return f;
    }
}

Sequent expand(const Sequent& s) {
    Sequent out;
    out.antecedent.reserve(s.antecedent.size());
    for (const auto& a : s.antecedent) out.antecedent.push_back(expand(a));
    out.succedent = expand(s.succedent);
    return out;
}

std::set<std::string> free_variables(const Term& t) {
    std::set<std::string> out;
    std::function<void(const Term&)> walk = [&](const Term& u) {
        if (u.kind() == Term::Kind::Var) out.insert(u.name());
        for (const auto& a : u.args()) walk(a);
    };
    walk(t);
    return out;
}

namespace {

void collect_free(const Formula& f, std::vector<std::string>& bound, std::set<std::string>& out) {
    switch (f.kind()) {
        case Connective::Letter:
            return;
        case Connective::Atom:
            for (const auto& t : f.args())
                for (const auto& v : free_variables(t))
                    if (std::find(bound.begin(), bound.end(), v) == bound.end()) out.insert(v);
            return;
        case Connective::Neg:
            collect_free(f.lhs(), bound, out);
            return;
        case Connective::Forall:
        case Connective::Exists:
            bound.push_back(f.bound().name);
            collect_free(f.body(), bound, out);
            bound.pop_back();
            return;
        default:
            collect_free(f.lhs(), bound, out);
            collect_free(f.rhs(), bound, out);
    }
}

Term substitute_term(const Term& t, const std::string& x, const Term& by) {
    switch (t.kind()) {
        case Term::Kind::Var:
            return t.name() == x ? by : t;
        case Term::Kind::Const:
            return t;
        case Term::Kind::App: {
            std::vector<Term> args;
            args.reserve(t.args().size());
            for (const auto& a : t.args()) args.push_back(substitute_term(a, x, by));
            return Term::app(t.name(), std::move(args), t.sort());
        }
    }
    return t;
}

Formula subst(const Formula& f, const Variable& x, const Term& t, const std::set<std::string>& fv_t) {
    switch (f.kind()) {
        case Connective::Letter:
            return f;
        case Connective::Atom: {
            std::vector<Term> args;
            args.reserve(f.args().size());
            for (const auto& a : f.args()) args.push_back(substitute_term(a, x.name, t));
            return Formula::atom(f.name(), std::move(args));
        }
        case Connective::Neg:
            return Formula::neg(subst(f.lhs(), x, t, fv_t));
        case Connective::And:
            return Formula::conj(subst(f.lhs(), x, t, fv_t), subst(f.rhs(), x, t, fv_t));
        case Connective::Imp:
            return Formula::imp(subst(f.lhs(), x, t, fv_t), subst(f.rhs(), x, t, fv_t));
        case Connective::Or:
            return Formula::disj(subst(f.lhs(), x, t, fv_t), subst(f.rhs(), x, t, fv_t));
        case Connective::Compat:
            return Formula::compat(subst(f.lhs(), x, t, fv_t), subst(f.rhs(), x, t, fv_t));
        case Connective::Forall:
        case Connective::Exists: {
            const Variable& y = f.bound();
            if (y.name == x.name) return f;
            auto fv_body = free_variables(f.body());
            if (!fv_body.count(x.name)) return f;
            Variable binder = y;
            Formula body = f.body();
            if (fv_t.count(y.name)) {
                std::string fresh = y.name + "'";
                while (fv_body.count(fresh) || fv_t.count(fresh) || fresh == x.name) fresh += "'";
                binder.name = fresh;
                body = subst(body, y, Term::var(fresh, y.sort), {fresh});
            }
            Formula inner = subst(body, x, t, fv_t);
            return f.kind() == Connective::Forall ? Formula::forall(binder, inner)
                                                  : Formula::exists(binder, inner);
        }
    }
    return f;
}

}  // namespace

std::set<std::string> free_variables(const Formula& f) {
    std::set<std::string> out;
    if (f.is_propositional()) return out;
    std::vector<std::string> bound;
    collect_free(f, bound, out);
    return out;
}

std::set<std::string> free_variables(const std::vector<Formula>& fs) {
    std::set<std::string> out;
    for (const auto& f : fs) {
        auto v = free_variables(f);
        out.insert(v.begin(), v.end());
    }
    return out;
}

Formula substitute(const Formula& f, const Variable& x, const Term& t) {
    if (t.sort() != x.sort)
        throw SortError("cannot substitute term of sort " + t.sort() + " for variable " + x.name +
                        " of sort " + x.sort);
    if (f.is_propositional()) return f;
    return subst(f, x, t, free_variables(t));
}

namespace {

void term_vars(const Term& t, std::vector<std::string>& out) {
    if (t.kind() == Term::Kind::Var) out.push_back(t.name());
    for (const auto& a : t.args()) term_vars(a, out);
}

}  // namespace

bool is_nonduplicating(const Formula& f) {
    switch (f.kind()) {
        case Connective::Letter:
            return true;
        case Connective::Atom: {
            std::vector<std::string> vars;
            for (const auto& t : f.args()) term_vars(t, vars);
            std::sort(vars.begin(), vars.end());
            return std::adjacent_find(vars.begin(), vars.end()) == vars.end();
        }
        case Connective::Neg:
        case Connective::Forall:
        case Connective::Exists:
            return is_nonduplicating(f.lhs());
        default:
            return is_nonduplicating(f.lhs()) && is_nonduplicating(f.rhs());
    }
}

namespace {

void collect_letters(const Formula& f, std::vector<std::string>& out) {
    switch (f.kind()) {
        case Connective::Letter:
            if (std::find(out.begin(), out.end(), f.name()) == out.end()) out.push_back(f.name());
            return;
        case Connective::Atom:
            return;
        case Connective::Neg:
        case Connective::Forall:
        case Connective::Exists:
            collect_letters(f.lhs(), out);
            return;
        default:
            collect_letters(f.lhs(), out);
            collect_letters(f.rhs(), out);
    }
}

}  // namespace

std::vector<std::string> letters(const Formula& f) {
    std::vector<std::string> out;
    collect_letters(f, out);
    return out;
}

std::vector<std::string> letters(const Sequent& s) {
    std::vector<std::string> out;
    for (const auto& a : s.antecedent) collect_letters(a, out);
    collect_letters(s.succedent, out);
    return out;
}

std::size_t formula_size(const Formula& f) {
    switch (f.kind()) {
        case Connective::Letter:
        case Connective::Atom:
            return 1;
        case Connective::Neg:
        case Connective::Forall:
        case Connective::Exists:
            return 1 + formula_size(f.lhs());
        default:
            return 1 + formula_size(f.lhs()) + formula_size(f.rhs());
    }
}

}  // namespace orthoproof
