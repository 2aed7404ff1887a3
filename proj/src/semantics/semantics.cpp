#include "orthoproof/semantics.hpp"

#include <algorithm>
#include <set>

namespace orthoproof {

Element sasaki_fold(const FiniteOML& L, const std::vector<Element>& values) {
    Element acc = L.top();
    for (Element v : values) acc = L.sasaki_and(acc, v);
    return acc;
}

namespace {

Element arrow_of(const FiniteOML& L, Element a, Element b, const ArrowClause* arrow) {
    return arrow ? (*arrow)(a, b) : L.sasaki_arrow(a, b);
}

Element eval_expanded(const FiniteOML& L, const Formula& f, const Assignment& v, const ArrowClause* arrow) {
    switch (f.kind()) {
        case Connective::Letter: {
            auto it = v.find(f.name());
            if (it == v.end()) throw SemanticsError("no value for letter " + f.name());
            if (it->second >= L.size()) throw SemanticsError("value of " + f.name() + " is not an element of " + L.name());
            return it->second;
        }
        case Connective::Neg:
            return L.neg(eval_expanded(L, f.lhs(), v, arrow));
        case Connective::And:
            return L.meet(eval_expanded(L, f.lhs(), v, arrow), eval_expanded(L, f.rhs(), v, arrow));
        case Connective::Imp:
            return arrow_of(L, eval_expanded(L, f.lhs(), v, arrow), eval_expanded(L, f.rhs(), v, arrow), arrow);
        default:
            throw SemanticsError("not a propositional formula: " + render(f));
    }
}

std::vector<std::string> sorted_letters(const Sequent& s) {
    auto ls = letters(s);
    std::set<std::string> uniq(ls.begin(), ls.end());
    return {uniq.begin(), uniq.end()};
}

}  // namespace

Element eval_formula(const FiniteOML& L, const Formula& f, const Assignment& v, const ArrowClause* arrow) {
    return eval_expanded(L, expand(f), v, arrow);
}

bool sequent_true(const FiniteOML& L, const Sequent& s, const Assignment& v, const ArrowClause* arrow) {
    Element acc = L.top();
    for (const auto& a : s.antecedent) acc = L.sasaki_and(acc, eval_formula(L, a, v, arrow));
    return L.leq(acc, eval_formula(L, s.succedent, v, arrow));
}

SequentEvaluator::SequentEvaluator(const Sequent& s) : letters_(sorted_letters(s)) {
    for (const auto& a : s.antecedent) {
        antecedent_.emplace_back();
        compile(expand(a), letters_, antecedent_.back());
    }
    compile(expand(s.succedent), letters_, succedent_);
}

void SequentEvaluator::compile(const Formula& f, const std::vector<std::string>& letters, Program& out) {
    switch (f.kind()) {
        case Connective::Letter: {
            auto it = std::lower_bound(letters.begin(), letters.end(), f.name());
            out.push_back({Op::Letter, static_cast<std::size_t>(it - letters.begin())});
            return;
        }
        case Connective::Neg:
            compile(f.lhs(), letters, out);
            out.push_back({Op::Neg, 0});
            return;
        case Connective::And:
        case Connective::Imp:
            compile(f.lhs(), letters, out);
            compile(f.rhs(), letters, out);
            out.push_back({f.kind() == Connective::And ? Op::And : Op::Imp, 0});
            return;
        default:
            throw SemanticsError("not a propositional formula: " + render(f));
    }
}

Element SequentEvaluator::run(const Program& p, const FiniteOML& L, const Element* vals, const ArrowClause* arrow) {
    thread_local std::vector<Element> stack;
    stack.clear();
    for (const auto& op : p) {
        switch (op.kind) {
            case Op::Letter:
                stack.push_back(vals[op.arg]);
                break;
            case Op::Neg:
                stack.back() = L.neg(stack.back());
                break;
            case Op::And:
            case Op::Imp: {
                Element b = stack.back();
                stack.pop_back();
                Element a = stack.back();
                stack.back() = op.kind == Op::And ? L.meet(a, b) : arrow_of(L, a, b, arrow);
                break;
            }
        }
    }
    return stack.back();
}

Element SequentEvaluator::formula(std::size_t i, const FiniteOML& L, const Element* vals,
                                  const ArrowClause* arrow) const {
    return run(i < antecedent_.size() ? antecedent_[i] : succedent_, L, vals, arrow);
}

Element SequentEvaluator::fold(const FiniteOML& L, const Element* vals, const ArrowClause* arrow) const {
    Element acc = L.top();
    for (const auto& p : antecedent_) acc = L.sasaki_and(acc, run(p, L, vals, arrow));
    return acc;
}

Element SequentEvaluator::succedent(const FiniteOML& L, const Element* vals, const ArrowClause* arrow) const {
    return run(succedent_, L, vals, arrow);
}

bool SequentEvaluator::holds(const FiniteOML& L, const Element* vals, const ArrowClause* arrow) const {
    return L.leq(fold(L, vals, arrow), succedent(L, vals, arrow));
}

Verdict validate_sequent(const Sequent& s, const FiniteOML& L, const ArrowClause* arrow) {
    SequentEvaluator ev(s);
    const std::size_t k = ev.letters().size();
    std::vector<Element> vals(k, 0);
    while (true) {
        if (!ev.holds(L, vals.data(), arrow)) {
            Countermodel cm;
            cm.lattice = L.name();
            for (std::size_t i = 0; i < k; ++i) {
                cm.assignment.emplace_back(ev.letters()[i], vals[i]);
                cm.element_names.push_back(L.element_name(vals[i]));
            }
            cm.fold = ev.fold(L, vals.data(), arrow);
            cm.succedent = ev.succedent(L, vals.data(), arrow);
            cm.fold_name = L.element_name(cm.fold);
            cm.succedent_name = L.element_name(cm.succedent);
            return {false, cm};
        }
        std::size_t i = k;
        while (i > 0 && ++vals[i - 1] == L.size()) vals[--i] = 0;
        if (i == 0) break;
    }
    return {};
}

Verdict decide_two_var(const Sequent& s) {
    if (sorted_letters(s).size() > 2) throw SemanticsError("decide_two_var needs at most two letters");
    static const FiniteOML two = boolean(1);
    static const FiniteOML mo2 = mo(2);
    Verdict v = validate_sequent(s, two);
    if (!v) return v;
    return validate_sequent(s, mo2);
}

Verdict countermodel_search(const Sequent& s, const std::vector<FiniteOML>& lattices) {
    for (const auto& L : lattices) {
        Verdict v = validate_sequent(s, L);
        if (!v) return v;
    }
    return {};
}

namespace {

bool truth(const Formula& f, const std::vector<std::string>& letters, unsigned row) {
    switch (f.kind()) {
        case Connective::Letter: {
            auto i = std::lower_bound(letters.begin(), letters.end(), f.name()) - letters.begin();
            return row >> i & 1u;
        }
        case Connective::Neg:
            return !truth(f.lhs(), letters, row);
        case Connective::And:
            return truth(f.lhs(), letters, row) && truth(f.rhs(), letters, row);
        case Connective::Imp:
            return !truth(f.lhs(), letters, row) || truth(f.rhs(), letters, row);
        default:
            throw SemanticsError("not a propositional formula: " + render(f));
    }
}

}  // namespace

bool classical_valid(const Sequent& s) {
    auto ls = sorted_letters(s);
    if (ls.size() > 24) throw SemanticsError("too many letters for a truth table");
    Sequent e = expand(s);
    for (unsigned row = 0; row < (1u << ls.size()); ++row) {
        bool ante = true;
        for (const auto& a : e.antecedent) ante = ante && truth(a, ls, row);
        if (ante && !truth(e.succedent, ls, row)) return false;
    }
    return true;
}

std::size_t QStructure::domain_size(const std::string& sort) const {
    auto it = domains.find(sort);
    if (it == domains.end()) throw SemanticsError("no domain for sort " + sort);
    return it->second;
}

std::size_t eval_term(const Term& t, const QStructure& M, const Environment& env) {
    switch (t.kind()) {
        case Term::Kind::Var: {
            auto it = env.find(t.name());
            if (it == env.end()) throw SemanticsError("unbound variable " + t.name());
            return it->second;
        }
        case Term::Kind::Const: {
            auto it = M.constants.find(t.name());
            if (it == M.constants.end()) throw SemanticsError("no value for constant " + t.name());
            return it->second;
        }
        case Term::Kind::App: {
            auto fn = M.functions.find(t.name());
            if (fn == M.functions.end()) throw SemanticsError("no value for function " + t.name());
            std::vector<std::size_t> args;
            for (const auto& a : t.args()) args.push_back(eval_term(a, M, env));
            auto it = fn->second.find(args);
            if (it == fn->second.end()) throw SemanticsError("function " + t.name() + " undefined at argument tuple");
            return it->second;
        }
    }
    return 0;
}

namespace {

Element eval_q(const Formula& f, const QStructure& M, Environment& env, const ArrowClause* arrow) {
    const FiniteOML& L = M.lattice;
    switch (f.kind()) {
        case Connective::Letter: {
            auto it = M.letters.find(f.name());
            if (it == M.letters.end()) throw SemanticsError("no value for letter " + f.name());
            return it->second;
        }
        case Connective::Atom: {
            auto rel = M.relations.find(f.name());
            if (rel == M.relations.end()) throw SemanticsError("no value for relation " + f.name());
            std::vector<std::size_t> args;
            for (const auto& a : f.args()) args.push_back(eval_term(a, M, env));
            auto it = rel->second.find(args);
            if (it == rel->second.end()) throw SemanticsError("relation " + f.name() + " undefined at argument tuple");
            return it->second;
        }
        case Connective::Neg:
            return L.neg(eval_q(f.lhs(), M, env, arrow));
        case Connective::And:
            return L.meet(eval_q(f.lhs(), M, env, arrow), eval_q(f.rhs(), M, env, arrow));
        case Connective::Imp:
            return arrow_of(L, eval_q(f.lhs(), M, env, arrow), eval_q(f.rhs(), M, env, arrow), arrow);
        case Connective::Forall: {
            const Variable& x = f.bound();
            auto saved = env.find(x.name);
            std::optional<std::size_t> old;
            if (saved != env.end()) old = saved->second;
            Element acc = L.top();
            for (std::size_t u = 0; u < M.domain_size(x.sort); ++u) {
                env[x.name] = u;
                acc = L.meet(acc, eval_q(f.body(), M, env, arrow));
            }
            if (old)
                env[x.name] = *old;
            else
                env.erase(x.name);
            return acc;
        }
        default:
            throw SemanticsError("unexpanded formula " + render(f));
    }
}

}  // namespace

Element eval_predicate(const Formula& f, const QStructure& M, const Environment& env, const ArrowClause* arrow) {
    Environment e = env;
    return eval_q(expand(f), M, e, arrow);
}

bool sequent_true(const QStructure& M, const Sequent& s, const Environment& env) {
    const FiniteOML& L = M.lattice;
    Element acc = L.top();
    for (const auto& a : s.antecedent) acc = L.sasaki_and(acc, eval_predicate(a, M, env));
    return L.leq(acc, eval_predicate(s.succedent, M, env));
}

}  // namespace orthoproof
