#include "orthoproof/kernel.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>
#include <unordered_set>

namespace orthoproof {

namespace {

struct RuleInfo {
    RuleId id;
    const char* name;
    std::size_t premises;
};

constexpr RuleInfo kRules[] = {
    {RuleId::assume, "assume", 0}, {RuleId::cut, "cut", 2},         {RuleId::paste, "paste", 2},
    {RuleId::cexch, "cexch", 3},   {RuleId::and_i, "and_i", 2},     {RuleId::and_e1, "and_e1", 1},
    {RuleId::and_e2, "and_e2", 1}, {RuleId::imp_i, "imp_i", 1},     {RuleId::imp_e, "imp_e", 1},
    {RuleId::lem, "lem", 2},       {RuleId::explode, "explode", 1}, {RuleId::exch, "exch", 1},
    {RuleId::all_i, "all_i", 1},   {RuleId::all_e, "all_e", 1},     {RuleId::qexch, "qexch", 1},
};

const RuleInfo& info(RuleId r) { return kRules[static_cast<std::size_t>(r)]; }

}  // namespace

std::string to_string(Mode m) {
    switch (m) {
        case Mode::NOM:
            return "NOM";
        case Mode::NOM_E:
            return "NOM_E";
        case Mode::NOM_Q:
            return "NOM_Q";
        case Mode::NOM_q:
            return "NOM_q";
    }
    return "?";
}

std::string to_string(RuleId r) { return info(r).name; }

std::optional<Mode> mode_from_string(const std::string& s) {
    for (Mode m : {Mode::NOM, Mode::NOM_E, Mode::NOM_Q, Mode::NOM_q})
        if (to_string(m) == s) return m;
    return std::nullopt;
}

std::optional<RuleId> rule_from_string(const std::string& s) {
    for (const auto& r : kRules)
        if (s == r.name) return r.id;
    return std::nullopt;
}

std::size_t premise_count(RuleId r) { return info(r).premises; }

bool rule_allowed(RuleId r, Mode m) {
    switch (r) {
        case RuleId::exch:
            return m == Mode::NOM_E;
        case RuleId::all_i:
        case RuleId::all_e:
            return m == Mode::NOM_Q || m == Mode::NOM_q;
        case RuleId::qexch:
            return m == Mode::NOM_q;
        default:
            return true;
    }
}

struct Derivation::Node {
    bool hypothesis = false;
    RuleId rule = RuleId::assume;
    Sequent conclusion;
    std::vector<Derivation> premises;
    Instantiation inst;
};

Derivation Derivation::rule(RuleId r, std::vector<Derivation> premises, Sequent conclusion, Instantiation inst) {
    Derivation d;
    d.node_ = std::make_shared<const Node>(Node{false, r, std::move(conclusion), std::move(premises), std::move(inst)});
    return d;
}

Derivation Derivation::hypothesis(Sequent s) {
    Derivation d;
    d.node_ = std::make_shared<const Node>(Node{true, RuleId::assume, std::move(s), {}, {}});
    return d;
}

Derivation Derivation::with_conclusion(Sequent s) const {
    Derivation d;
    Node n = *node_;
    n.conclusion = std::move(s);
    d.node_ = std::make_shared<const Node>(std::move(n));
    return d;
}

bool Derivation::is_hypothesis() const { return node_->hypothesis; }
RuleId Derivation::rule() const { return node_->rule; }
const Sequent& Derivation::conclusion() const { return node_->conclusion; }
const std::vector<Derivation>& Derivation::premises() const { return node_->premises; }
const Instantiation& Derivation::instantiation() const { return node_->inst; }

std::size_t Derivation::size() const {
    std::unordered_map<const void*, std::size_t> memo;
    std::function<std::size_t(const Derivation&)> count = [&](const Derivation& d) -> std::size_t {
        auto it = memo.find(d.id());
        if (it != memo.end()) return it->second;
        std::size_t n = 1;
        for (const auto& p : d.premises()) n += count(p);
        memo[d.id()] = n;
        return n;
    };
    return count(*this);
}

std::size_t Derivation::depth() const {
    std::size_t best = 0;
    for (const auto& p : premises()) best = std::max(best, p.depth());
    return best + 1;
}

namespace {

std::string slot(int premise, std::ptrdiff_t index) {
    std::string who = premise < 0 ? "conclusion" : "premise " + std::to_string(premise + 1);
    if (index < 0) return who + " succedent";
    return who + " antecedent[" + std::to_string(index + 1) + "]";
}

class Match {
public:
    Match(const std::vector<Sequent>& p, const Sequent& c) : p_(p), c_(c) {}

    const Sequent& prem(int i) const { return p_[static_cast<std::size_t>(i)]; }
    const Sequent& concl() const { return c_; }

    bool failed() const { return failed_; }
    Violation& violation() { return v_; }

    void fail(const std::string& msg, std::vector<std::string> where = {}) {
        if (!failed_) v_.message = msg;
        failed_ = true;
        for (auto& w : where) v_.where.push_back(std::move(w));
    }

    // Premise i (or the conclusion when i < 0) must have antecedent length n.
    bool length(int i, std::size_t n) {
        const Sequent& s = i < 0 ? c_ : prem(i);
        if (s.antecedent.size() == n) return true;
        fail("antecedent length mismatch: " + slot(i, -1).substr(0, slot(i, -1).size() - 10) + " has " +
                 std::to_string(s.antecedent.size()) + " formulas, schema needs " + std::to_string(n),
             {slot(i, -1).substr(0, slot(i, -1).size() - 10)});
        return false;
    }

    void same(const Formula& a, const Formula& b, const std::string& where) {
        if (!alpha_equal(a, b)) fail("schema mismatch", {where});
    }

    const Formula& ant(int i, std::size_t k) const { return (i < 0 ? c_ : prem(i)).antecedent[k]; }
    const Formula& suc(int i) const { return (i < 0 ? c_ : prem(i)).succedent; }

    // First n antecedent formulas of premise i agree with the conclusion's.
    void prefix(int i, std::size_t n, int other = -1) {
        for (std::size_t k = 0; k < n; ++k)
            if (!alpha_equal(ant(i, k), ant(other, k)))
                fail("schema mismatch in context Γ", {slot(i, static_cast<std::ptrdiff_t>(k))});
    }

    bool kind(const Formula& f, Connective c, const std::string& where, const char* what) {
        if (f.kind() == c) return true;
        fail(std::string("expected ") + what, {where});
        return false;
    }

private:
    const std::vector<Sequent>& p_;
    const Sequent& c_;
    Violation v_;
    bool failed_ = false;
};

bool shares_free_variable(const std::set<std::string>& a, const std::set<std::string>& b) {
    for (const auto& v : a)
        if (b.count(v)) return true;
    return false;
}

void check_rule(RuleId rule, Match& m, const Instantiation& inst, Mode mode) {
    const Sequent& c = m.concl();
    const std::size_t cn = c.antecedent.size();
    switch (rule) {
        case RuleId::assume:
            if (cn == 0) return m.fail("assume needs a nonempty antecedent", {slot(-1, 0)});
            m.same(c.antecedent.back(), c.succedent, slot(-1, -1));
            return;
        case RuleId::cut: {
            if (!m.length(0, cn) || !m.length(1, cn + 1)) return;
            m.prefix(0, cn);
            m.prefix(1, cn);
            m.same(m.ant(1, cn), m.suc(0), slot(1, static_cast<std::ptrdiff_t>(cn)));
            m.same(m.suc(1), c.succedent, slot(1, -1));
            return;
        }
        case RuleId::paste: {
            if (cn == 0) return m.fail("paste conclusion needs a nonempty antecedent", {slot(-1, 0)});
            std::size_t n = cn - 1;
            if (!m.length(0, n) || !m.length(1, n)) return;
            m.prefix(0, n);
            m.prefix(1, n);
            m.same(c.antecedent[n], m.suc(0), slot(-1, static_cast<std::ptrdiff_t>(n)));
            m.same(m.suc(1), c.succedent, slot(1, -1));
            return;
        }
        case RuleId::cexch: {
            if (cn < 2) return m.fail("cexch conclusion needs at least two antecedent formulas", {slot(-1, 0)});
            std::size_t n = cn - 2;
            const Formula& psi = c.antecedent[n];
            const Formula& phi = c.antecedent[n + 1];
            if (!m.length(0, cn) || !m.length(1, cn) || !m.length(2, cn)) return;
            for (int i : {0, 1}) {
                m.prefix(i, n);
                m.same(m.ant(i, n), phi, slot(i, static_cast<std::ptrdiff_t>(n)));
                m.same(m.ant(i, n + 1), psi, slot(i, static_cast<std::ptrdiff_t>(n + 1)));
            }
            m.prefix(2, cn);
            m.same(m.suc(0), phi, slot(0, -1));
            m.same(m.suc(1), c.succedent, slot(1, -1));
            m.same(m.suc(2), psi, slot(2, -1));
            return;
        }
        case RuleId::and_i: {
            if (!m.kind(c.succedent, Connective::And, slot(-1, -1), "a conjunction")) return;
            if (!m.length(0, cn) || !m.length(1, cn)) return;
            m.prefix(0, cn);
            m.prefix(1, cn);
            m.same(m.suc(0), c.succedent.lhs(), slot(0, -1));
            m.same(m.suc(1), c.succedent.rhs(), slot(1, -1));
            return;
        }
        case RuleId::and_e1:
        case RuleId::and_e2: {
            if (!m.kind(m.suc(0), Connective::And, slot(0, -1), "a conjunction")) return;
            if (!m.length(0, cn)) return;
            m.prefix(0, cn);
            m.same(c.succedent, rule == RuleId::and_e1 ? m.suc(0).lhs() : m.suc(0).rhs(), slot(-1, -1));
            return;
        }
        case RuleId::imp_i: {
            if (!m.kind(c.succedent, Connective::Imp, slot(-1, -1), "an implication")) return;
            if (!m.length(0, cn + 1)) return;
            m.prefix(0, cn);
            m.same(m.ant(0, cn), c.succedent.lhs(), slot(0, static_cast<std::ptrdiff_t>(cn)));
            m.same(m.suc(0), c.succedent.rhs(), slot(0, -1));
            return;
        }
        case RuleId::imp_e: {
            if (!m.kind(m.suc(0), Connective::Imp, slot(0, -1), "an implication")) return;
            if (cn == 0 || !m.length(0, cn - 1)) {
                if (cn == 0) m.fail("imp_e conclusion needs a nonempty antecedent", {slot(-1, 0)});
                return;
            }
            m.prefix(0, cn - 1);
            m.same(c.antecedent[cn - 1], m.suc(0).lhs(), slot(-1, static_cast<std::ptrdiff_t>(cn - 1)));
            m.same(c.succedent, m.suc(0).rhs(), slot(-1, -1));
            return;
        }
        case RuleId::lem: {
            if (!m.length(0, cn + 1) || !m.length(1, cn + 1)) return;
            m.prefix(0, cn);
            m.prefix(1, cn);
            const Formula& neg = m.ant(1, cn);
            if (m.kind(neg, Connective::Neg, slot(1, static_cast<std::ptrdiff_t>(cn)), "a negation"))
                m.same(neg.operand(), m.ant(0, cn), slot(1, static_cast<std::ptrdiff_t>(cn)));
            m.same(m.suc(0), c.succedent, slot(0, -1));
            m.same(m.suc(1), c.succedent, slot(1, -1));
            return;
        }
        case RuleId::explode: {
            if (!m.kind(m.suc(0), Connective::Neg, slot(0, -1), "a negation")) return;
            if (cn == 0) return m.fail("explode conclusion needs a nonempty antecedent", {slot(-1, 0)});
            if (!m.length(0, cn - 1)) return;
            m.prefix(0, cn - 1);
            m.same(c.antecedent[cn - 1], m.suc(0).operand(), slot(-1, static_cast<std::ptrdiff_t>(cn - 1)));
            return;
        }
        case RuleId::exch: {
            if (!m.length(0, cn)) return;
            m.same(m.suc(0), c.succedent, slot(0, -1));
            std::size_t i = 0;
            while (i < cn && alpha_equal(m.ant(0, i), c.antecedent[i])) ++i;
            if (i == cn) return;  // swapping two equal formulas
            if (i + 1 >= cn) return m.fail("exch must swap two adjacent formulas", {slot(-1, static_cast<std::ptrdiff_t>(i))});
            m.same(m.ant(0, i), c.antecedent[i + 1], slot(0, static_cast<std::ptrdiff_t>(i)));
            m.same(m.ant(0, i + 1), c.antecedent[i], slot(0, static_cast<std::ptrdiff_t>(i + 1)));
            for (std::size_t k = i + 2; k < cn; ++k)
                m.same(m.ant(0, k), c.antecedent[k], slot(0, static_cast<std::ptrdiff_t>(k)));
            return;
        }
        case RuleId::qexch: {
            if (cn < 2) return m.fail("qexch conclusion needs at least two antecedent formulas", {slot(-1, 0)});
            if (!m.length(0, cn)) return;
            std::size_t n = cn - 2;
            m.prefix(0, n);
            m.same(m.ant(0, n), c.antecedent[n + 1], slot(0, static_cast<std::ptrdiff_t>(n)));
            m.same(m.ant(0, n + 1), c.antecedent[n], slot(0, static_cast<std::ptrdiff_t>(n + 1)));
            m.same(m.suc(0), c.succedent, slot(0, -1));
            if (!m.failed() && shares_free_variable(free_variables(c.antecedent[n]), free_variables(c.antecedent[n + 1])))
                m.fail("qexch side condition: the exchanged formulas share a free variable",
                       {slot(-1, static_cast<std::ptrdiff_t>(n)), slot(-1, static_cast<std::ptrdiff_t>(n + 1))});
            return;
        }
        case RuleId::all_i: {
            if (!m.kind(c.succedent, Connective::Forall, slot(-1, -1), "a universal formula")) return;
            if (!m.length(0, cn)) return;
            m.prefix(0, cn);
            Variable x = c.succedent.bound();
            Formula body = c.succedent.body();
            if (inst.var && inst.var->name != x.name) {
                if (free_variables(c.succedent).count(inst.var->name))
                    return m.fail("all_i variable " + inst.var->name + " is free in the conclusion", {slot(-1, -1)});
                Variable y{inst.var->name, x.sort};
                body = substitute(body, x, Term::var(y));
                x = y;
            }
            m.same(m.suc(0), body, slot(0, -1));
            auto fv = free_variables(c.antecedent);
            if (fv.count(x.name)) {
                std::vector<std::string> where;
                for (std::size_t k = 0; k < cn; ++k)
                    if (free_variables(c.antecedent[k]).count(x.name))
                        where.push_back(slot(-1, static_cast<std::ptrdiff_t>(k)));
                m.fail("all_i side condition: " + x.name + " is free in Γ", where);
            }
            return;
        }
        case RuleId::all_e: {
            if (!inst.term) return m.fail("all_e needs its instantiating term recorded (t=TERM)");
            if (!m.kind(m.suc(0), Connective::Forall, slot(0, -1), "a universal formula")) return;
            if (!m.length(0, cn)) return;
            m.prefix(0, cn);
            const Variable& x = m.suc(0).bound();
            const Formula& body = m.suc(0).body();
            Formula inst_body;
            try {
                inst_body = substitute(body, x, *inst.term);
            } catch (const SortError& e) {
                return m.fail(std::string("all_e: ") + e.what(), {slot(0, -1)});
            }
            m.same(c.succedent, inst_body, slot(-1, -1));
            if (mode == Mode::NOM_q && shares_free_variable(free_variables(body), free_variables(*inst.term)))
                m.fail("all_e side condition: the term and the matrix share a free variable", {slot(0, -1)});
            return;
        }
    }
}

}  // namespace

InferenceCheck check_inference(RuleId rule, const std::vector<Sequent>& premises, const Sequent& conclusion, Mode mode,
                               const Instantiation& inst) {
    InferenceCheck out;
    auto reject = [&](std::string msg, std::vector<std::string> where = {}) {
        out.ok = false;
        out.violation = {std::move(msg), std::move(where)};
        return out;
    };
    if (!rule_allowed(rule, mode))
        return reject("rule " + to_string(rule) + " is not available in mode " + to_string(mode) +
                      (rule == RuleId::exch ? " (unrestricted exchange is admissible only in NOM_E)" : ""));
    if (premises.size() != premise_count(rule))
        return reject("rule " + to_string(rule) + " takes " + std::to_string(premise_count(rule)) + " premises, got " +
                      std::to_string(premises.size()));

    std::vector<Sequent> ps;
    ps.reserve(premises.size());
    for (const auto& p : premises) ps.push_back(expand(p));
    Sequent c = expand(conclusion);

    auto formula_check = [&](const Sequent& s, int who) -> std::optional<std::string> {
        for (std::size_t k = 0; k <= s.antecedent.size(); ++k) {
            const Formula& f = k < s.antecedent.size() ? s.antecedent[k] : s.succedent;
            std::ptrdiff_t idx = k < s.antecedent.size() ? static_cast<std::ptrdiff_t>(k) : -1;
            if ((mode == Mode::NOM || mode == Mode::NOM_E) && !f.is_propositional()) {
                out.ok = false;
                out.violation = {"predicate formula in propositional mode " + to_string(mode), {slot(who, idx)}};
                return out.violation.message;
            }
            if (mode == Mode::NOM_q && !is_nonduplicating(f)) {
                out.ok = false;
                out.violation = {"NOM_q requires nonduplicating formulas", {slot(who, idx)}};
                return out.violation.message;
            }
        }
        return std::nullopt;
    };
    for (std::size_t i = 0; i < ps.size(); ++i)
        if (formula_check(ps[i], static_cast<int>(i))) return out;
    if (formula_check(c, -1)) return out;

    Match m(ps, c);
    check_rule(rule, m, inst, mode);
    if (m.failed()) {
        out.ok = false;
        out.violation = std::move(m.violation());
        out.violation.message = to_string(rule) + ": " + out.violation.message;
    }
    return out;
}

DerivationCheck check_derivation(const Derivation& d, Mode mode, const std::vector<Sequent>& hypotheses) {
    std::vector<Sequent> hyps;
    for (const auto& h : hypotheses) hyps.push_back(expand(h));
    std::unordered_set<const void*> verified;
    DerivationCheck out;
    std::vector<std::size_t> path;

    std::function<bool(const Derivation&)> visit = [&](const Derivation& n) -> bool {
        if (verified.count(n.id())) return true;
        if (n.is_hypothesis()) {
            Sequent s = expand(n.conclusion());
            bool found = std::any_of(hyps.begin(), hyps.end(), [&](const Sequent& h) { return h == s; });
            if (!found) {
                out.ok = false;
                out.path = path;
                out.violation = {"undeclared hypothesis " + render(n.conclusion()), {}};
                return false;
            }
        } else {
            std::vector<Sequent> prem;
            for (const auto& p : n.premises()) prem.push_back(p.conclusion());
            InferenceCheck ic = check_inference(n.rule(), prem, n.conclusion(), mode, n.instantiation());
            if (!ic.ok) {
                out.ok = false;
                out.path = path;
                out.violation = ic.violation;
                return false;
            }
            for (std::size_t i = 0; i < n.premises().size(); ++i) {
                path.push_back(i);
                if (!visit(n.premises()[i])) return false;
                path.pop_back();
            }
        }
        verified.insert(n.id());
        return true;
    };
    visit(d);
    return out;
}

Derivation weaken(const Derivation& d, const std::vector<Formula>& delta) {
    if (delta.empty()) return d;
    std::unordered_map<const void*, Derivation> memo;
    std::function<Derivation(const Derivation&)> go = [&](const Derivation& n) -> Derivation {
        auto it = memo.find(n.id());
        if (it != memo.end()) return it->second;
        Sequent s = n.conclusion();
        s.antecedent.insert(s.antecedent.begin(), delta.begin(), delta.end());
        Derivation out;
        if (n.is_hypothesis()) {
            out = Derivation::hypothesis(std::move(s));
        } else {
            std::vector<Derivation> prem;
            for (const auto& p : n.premises()) prem.push_back(go(p));
            out = Derivation::rule(n.rule(), std::move(prem), std::move(s), n.instantiation());
        }
        memo.emplace(n.id(), out);
        return out;
    };
    return go(d);
}

std::vector<Sequent> hypothesis_leaves(const Derivation& d) {
    std::vector<Sequent> out;
    std::unordered_set<const void*> seen;
    std::function<void(const Derivation&)> go = [&](const Derivation& n) {
        if (!seen.insert(n.id()).second) return;
        if (n.is_hypothesis()) {
            if (std::find(out.begin(), out.end(), n.conclusion()) == out.end()) out.push_back(n.conclusion());
            return;
        }
        for (const auto& p : n.premises()) go(p);
    };
    go(d);
    return out;
}

std::string render(const Derivation& d) {
    std::string out;
    std::function<void(const Derivation&, int)> go = [&](const Derivation& n, int indent) {
        out += std::string(static_cast<std::size_t>(indent) * 2, ' ');
        out += render(n.conclusion());
        out += "   [";
        out += n.is_hypothesis() ? "hyp" : to_string(n.rule());
        if (n.instantiation().term) out += " t=" + render(*n.instantiation().term);
        if (n.instantiation().var) out += " x=" + n.instantiation().var->name;
        out += "]\n";
        for (const auto& p : n.premises()) go(p, indent + 1);
    };
    go(d, 0);
    return out;
}

}  // namespace orthoproof
