#include "tactics/dsl.hpp"

#include "orthoproof/tactics.hpp"

namespace orthoproof::dsl {

namespace {

[[noreturn]] void shape(const char* what, const Formula& f) {
    throw TacticError(std::string("builder expected ") + what + ", got " + render(f));
}

}  // namespace

Formula unfold(const Formula& f) {
    switch (f.kind()) {
        case Connective::Or:
            return neg(conj(neg(f.lhs()), neg(f.rhs())));
        case Connective::Compat:
            return conj(imp(f.lhs(), imp(f.rhs(), f.lhs())), imp(f.rhs(), imp(f.lhs(), f.rhs())));
        case Connective::Exists:
            return neg(Formula::forall(f.bound(), neg(f.body())));
        default:
            return f;
    }
}

std::pair<Formula, Formula> conj_parts(const Formula& f) {
    Formula u = unfold(f);
    if (u.kind() != Connective::And) shape("a conjunction", f);
    return {u.lhs(), u.rhs()};
}

std::pair<Formula, Formula> imp_parts(const Formula& f) {
    Formula u = unfold(f);
    if (u.kind() != Connective::Imp) shape("an implication", f);
    return {u.lhs(), u.rhs()};
}

std::pair<Formula, Formula> compat_parts(const Formula& f) {
    if (f.kind() == Connective::Compat) return {f.lhs(), f.rhs()};
    auto [l, r] = conj_parts(f);
    auto [a, rest] = imp_parts(l);
    auto [b, _] = imp_parts(rest);
    return {a, b};
}

std::pair<Formula, Formula> or_parts(const Formula& f) {
    if (f.kind() == Connective::Or) return {f.lhs(), f.rhs()};
    auto [l, r] = conj_parts(neg_operand(f));
    return {neg_operand(l), neg_operand(r)};
}

Formula neg_operand(const Formula& f) {
    Formula u = unfold(f);
    if (u.kind() != Connective::Neg) shape("a negation", f);
    return u.operand();
}

const Formula& last(const D& d, std::size_t from_end) {
    const Ctx& g = ctx(d);
    if (g.size() <= from_end) throw TacticError("builder expected a longer antecedent in " + render(d.conclusion()));
    return g[g.size() - 1 - from_end];
}

Ctx drop_last(const Ctx& g, std::size_t n) {
    if (g.size() < n) throw TacticError("builder expected a longer antecedent");
    return Ctx(g.begin(), g.end() - static_cast<std::ptrdiff_t>(n));
}

D assume(const Ctx& g) {
    if (g.empty()) throw TacticError("assume needs a nonempty antecedent");
    return D::rule(RuleId::assume, {}, {g, g.back()});
}

D cut(const D& a, const D& b) { return D::rule(RuleId::cut, {a, b}, {ctx(a), succ(b)}); }

D paste(const D& a, const D& b) { return D::rule(RuleId::paste, {a, b}, {ctx(a) + succ(a), succ(b)}); }

D cexch(const D& a, const D& b, const D& c) { return D::rule(RuleId::cexch, {a, b, c}, {ctx(c), succ(b)}); }

D and_i(const D& a, const D& b) { return D::rule(RuleId::and_i, {a, b}, {ctx(a), conj(succ(a), succ(b))}); }

D and_e1(const D& d) { return D::rule(RuleId::and_e1, {d}, {ctx(d), conj_parts(succ(d)).first}); }

D and_e2(const D& d) { return D::rule(RuleId::and_e2, {d}, {ctx(d), conj_parts(succ(d)).second}); }

D imp_i(const D& d) { return D::rule(RuleId::imp_i, {d}, {drop_last(ctx(d)), imp(last(d), succ(d))}); }

D imp_e(const D& d) {
    auto [a, b] = imp_parts(succ(d));
    return D::rule(RuleId::imp_e, {d}, {ctx(d) + a, b});
}

D lem(const D& a, const D& b) { return D::rule(RuleId::lem, {a, b}, {drop_last(ctx(a)), succ(a)}); }

D explode(const D& d, const Formula& psi) {
    return D::rule(RuleId::explode, {d}, {ctx(d) + neg_operand(succ(d)), psi});
}

D exch(const D& d, std::size_t i) {
    Ctx g = ctx(d);
    if (i + 1 >= g.size()) throw TacticError("exch position out of range");
    std::swap(g[i], g[i + 1]);
    return D::rule(RuleId::exch, {d}, {g, succ(d)});
}

D all_i(const D& d, const Variable& x) {
    return D::rule(RuleId::all_i, {d}, {ctx(d), Formula::forall(x, succ(d))}, {std::nullopt, x});
}

D all_e(const D& d, const Term& t) {
    Formula u = unfold(succ(d));
    if (u.kind() != Connective::Forall) shape("a universal formula", succ(d));
    return D::rule(RuleId::all_e, {d}, {ctx(d), substitute(u.body(), u.bound(), t)}, {t, std::nullopt});
}

}  // namespace orthoproof::dsl
