#include <algorithm>

#include "orthoproof/tactics.hpp"
#include "tactics/dsl.hpp"

namespace orthoproof {

namespace {

bool is_list_meta(const Formula& f) {
    return f.kind() == Connective::Letter && (f.name() == "G" || f.name() == "D");
}

bool same(const Formula& a, const Formula& b) { return alpha_equal(expand(a), expand(b)); }

bool same(const std::vector<Formula>& a, const std::vector<Formula>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!same(a[i], b[i])) return false;
    return true;
}

void collect_metas(const Formula& f, std::vector<std::string>& out) {
    switch (f.kind()) {
        case Connective::Letter:
            if (std::find(out.begin(), out.end(), f.name()) == out.end()) out.push_back(f.name());
            return;
        case Connective::Atom:
            return;
        case Connective::Neg:
        case Connective::Forall:
        case Connective::Exists:
            collect_metas(f.lhs(), out);
            return;
        default:
            collect_metas(f.lhs(), out);
            collect_metas(f.rhs(), out);
    }
}

Formula instantiate_formula(const Formula& f, const Inst& inst) {
    switch (f.kind()) {
        case Connective::Letter:
            return inst.at(f.name());
        case Connective::Atom:
            return f;
        case Connective::Neg:
            return Formula::neg(instantiate_formula(f.lhs(), inst));
        case Connective::And:
            return Formula::conj(instantiate_formula(f.lhs(), inst), instantiate_formula(f.rhs(), inst));
        case Connective::Imp:
            return Formula::imp(instantiate_formula(f.lhs(), inst), instantiate_formula(f.rhs(), inst));
        case Connective::Or:
            return Formula::disj(instantiate_formula(f.lhs(), inst), instantiate_formula(f.rhs(), inst));
        case Connective::Compat:
            return Formula::compat(instantiate_formula(f.lhs(), inst), instantiate_formula(f.rhs(), inst));
        case Connective::Forall:
            return Formula::forall(inst.x.value_or(f.bound()), instantiate_formula(f.body(), inst));
        case Connective::Exists:
            return Formula::exists(inst.x.value_or(f.bound()), instantiate_formula(f.body(), inst));
    }
    return f;
}

// Finds t with substitute(pattern, x, t) == target by walking both trees.
bool infer_term(const Term& p, const Term& q, const Variable& x, std::optional<Term>& t) {
    if (p.kind() == Term::Kind::Var && p.name() == x.name) {
        if (t) return *t == q;
        t = q;
        return true;
    }
    if (p.kind() != q.kind() || p.name() != q.name() || p.args().size() != q.args().size()) return false;
    for (std::size_t i = 0; i < p.args().size(); ++i)
        if (!infer_term(p.args()[i], q.args()[i], x, t)) return false;
    return true;
}

bool infer_term(const Formula& p, const Formula& q, const Variable& x, std::optional<Term>& t) {
    if (p.kind() != q.kind()) {
        if (p.has_derived() || q.has_derived()) return infer_term(dsl::unfold(p), dsl::unfold(q), x, t);
        return false;
    }
    switch (p.kind()) {
        case Connective::Letter:
            return p.name() == q.name();
        case Connective::Atom:
            if (p.name() != q.name() || p.args().size() != q.args().size()) return false;
            for (std::size_t i = 0; i < p.args().size(); ++i)
                if (!infer_term(p.args()[i], q.args()[i], x, t)) return false;
            return true;
        case Connective::Neg:
            return infer_term(p.lhs(), q.lhs(), x, t);
        case Connective::Forall:
        case Connective::Exists: {
            if (p.bound().name == x.name) return true;
            Formula qb = q.body();
            if (q.bound().name != p.bound().name) qb = substitute(qb, q.bound(), Term::var(p.bound()));
            return infer_term(p.body(), qb, x, t);
        }
        default:
            return infer_term(p.lhs(), q.lhs(), x, t) && infer_term(p.rhs(), q.rhs(), x, t);
    }
}

// Backtracking matcher. States are complete metavariable assignments; a
// formula pattern extends one state deterministically, list metavariables in
// the antecedent branch over split points.
class Matcher {
public:
    bool formula(const Formula& pat, const Formula& con, Inst& st) const {
        if (pat.kind() == Connective::Letter) {
            auto it = st.f.find(pat.name());
            if (it != st.f.end()) return same(it->second, con);
            st.f.emplace(pat.name(), con);
            return true;
        }
        if (pat.kind() != con.kind()) {
            if (pat.kind() == Connective::Or || pat.kind() == Connective::Compat || pat.kind() == Connective::Exists)
                return formula(dsl::unfold(pat), con, st);
            if (con.kind() == Connective::Or || con.kind() == Connective::Compat || con.kind() == Connective::Exists)
                return formula(pat, dsl::unfold(con), st);
            return false;
        }
        switch (pat.kind()) {
            case Connective::Atom:
                return alpha_equal(pat, con);
            case Connective::Neg:
                return formula(pat.lhs(), con.lhs(), st);
            case Connective::Forall:
            case Connective::Exists: {
                Formula body = con.body();
                if (!st.x) {
                    st.x = con.bound();
                } else if (st.x->name != con.bound().name) {
                    if (free_variables(con).count(st.x->name)) return false;
                    body = substitute(body, con.bound(), Term::var(*st.x));
                }
                return formula(pat.body(), body, st);
            }
            default:
                return formula(pat.lhs(), con.lhs(), st) && formula(pat.rhs(), con.rhs(), st);
        }
    }

    void antecedent(const std::vector<Formula>& pat, std::size_t i, const std::vector<Formula>& con, std::size_t j,
                    Inst st, std::vector<Inst>& out) const {
        if (i == pat.size()) {
            if (j == con.size()) out.push_back(std::move(st));
            return;
        }
        const Formula& p = pat[i];
        if (is_list_meta(p)) {
            bool g = p.name() == "G";
            bool& has = g ? st.has_gamma : st.has_delta;
            std::vector<Formula>& val = g ? st.gamma : st.delta;
            if (has) {
                std::size_t end = j + val.size();
                if (end > con.size()) return;
                std::vector<Formula> slice(con.begin() + static_cast<std::ptrdiff_t>(j),
                                           con.begin() + static_cast<std::ptrdiff_t>(end));
                if (!same(slice, val)) return;
                antecedent(pat, i + 1, con, end, std::move(st), out);
                return;
            }
            for (std::size_t k = j; k <= con.size(); ++k) {
                Inst next = st;
                (g ? next.has_gamma : next.has_delta) = true;
                (g ? next.gamma : next.delta)
                    .assign(con.begin() + static_cast<std::ptrdiff_t>(j), con.begin() + static_cast<std::ptrdiff_t>(k));
                antecedent(pat, i + 1, con, k, std::move(next), out);
            }
            return;
        }
        if (j >= con.size()) return;
        if (!formula(p, con[j], st)) return;
        antecedent(pat, i + 1, con, j + 1, std::move(st), out);
    }

    std::vector<Inst> sequent(const Sequent& pat, const Sequent& con, const Inst& st) const {
        std::vector<Inst> out;
        Inst s = st;
        if (!formula(pat.succedent, con.succedent, s)) return out;
        antecedent(pat.antecedent, 0, con.antecedent, 0, std::move(s), out);
        return out;
    }
};

}  // namespace

const Formula& Inst::at(const std::string& meta) const {
    auto it = f.find(meta);
    if (it == f.end()) throw TacticError("no value for metavariable " + meta);
    return it->second;
}

Inst& Inst::set(const std::string& meta, Formula value) {
    f[meta] = std::move(value);
    return *this;
}

Inst& Inst::with_gamma(std::vector<Formula> g) {
    gamma = std::move(g);
    has_gamma = true;
    return *this;
}

Inst& Inst::with_delta(std::vector<Formula> d) {
    delta = std::move(d);
    has_delta = true;
    return *this;
}

namespace {

bool schema_has_list(const CatalogEntry& e, const char* name) {
    auto test = [&](const std::string& s) {
        Sequent q = parse_schema(s);
        return std::any_of(q.antecedent.begin(), q.antecedent.end(),
                           [&](const Formula& f) { return is_list_meta(f) && f.name() == name; });
    };
    return test(e.conclusion) || std::any_of(e.premises.begin(), e.premises.end(), test);
}

}  // namespace

bool CatalogEntry::uses_gamma() const { return schema_has_list(*this, "G"); }
bool CatalogEntry::uses_delta() const { return schema_has_list(*this, "D"); }

std::vector<std::string> CatalogEntry::metas() const {
    std::vector<std::string> out;
    auto add = [&](const std::string& s) {
        Sequent q = parse_schema(s);
        for (const auto& f : q.antecedent)
            if (!is_list_meta(f)) collect_metas(f, out);
        collect_metas(q.succedent, out);
    };
    for (const auto& p : premises) add(p);
    add(conclusion);
    return out;
}

bool CatalogEntry::allows(Mode m) const { return std::find(modes.begin(), modes.end(), m) != modes.end(); }

Sequent parse_schema(const std::string& text) { return parse_sequent(text, Signature::open_single_sorted()); }

Sequent instantiate(const std::string& schema, const Inst& inst) {
    Sequent pat = parse_schema(schema);
    Sequent out;
    for (const auto& f : pat.antecedent) {
        if (is_list_meta(f)) {
            const auto& list = f.name() == "G" ? inst.gamma : inst.delta;
            out.antecedent.insert(out.antecedent.end(), list.begin(), list.end());
        } else {
            out.antecedent.push_back(instantiate_formula(f, inst));
        }
    }
    out.succedent = instantiate_formula(pat.succedent, inst);
    return out;
}

Inst complete(const CatalogEntry& e, Inst inst) {
    if (e.constraint == Constraint::Substitution) {
        if (!inst.x) inst.x = Variable{"x", kDefaultSort};
        auto phi = inst.f.find("phi");
        auto phi_t = inst.f.find("phi_t");
        if (!inst.t && phi != inst.f.end() && phi_t != inst.f.end()) {
            std::optional<Term> t;
            if (infer_term(phi->second, phi_t->second, *inst.x, t)) inst.t = t;
        }
        if (!inst.t) inst.t = Term::var(*inst.x);
        if (phi != inst.f.end()) {
            Formula want = substitute(phi->second, *inst.x, *inst.t);
            if (phi_t == inst.f.end())
                inst.f.emplace("phi_t", want);
            else if (!same(phi_t->second, want))
                throw TacticError("phi_t is not phi[" + inst.x->name + "/" + render(*inst.t) + "]");
        }
    }
    if (e.constraint == Constraint::Chain) {
        auto psi = inst.f.find("psi");
        if (psi != inst.f.end()) {
            Formula chi = psi->second;
            for (auto it = inst.delta.rbegin(); it != inst.delta.rend(); ++it) chi = Formula::imp(*it, chi);
            auto have = inst.f.find("chi");
            if (have == inst.f.end())
                inst.f.emplace("chi", chi);
            else if (!same(have->second, chi))
                throw TacticError("chi must be D1 -> ... -> Dn -> psi");
        }
    }
    for (const auto& m : e.metas())
        if (!inst.f.count(m)) throw TacticError("entry " + e.id + ": no value for metavariable " + m);
    return inst;
}

std::optional<Inst> match_entry(const CatalogEntry& e, const std::vector<Sequent>& premises,
                                const std::optional<Sequent>& conclusion, const Inst& pins) {
    if (premises.size() != e.premises.size()) return std::nullopt;
    Matcher m;
    std::vector<Inst> states{pins};
    auto step = [&](const std::string& schema, const Sequent& con) {
        Sequent pat = parse_schema(schema);
        std::vector<Inst> next;
        for (const auto& st : states)
            for (auto& r : m.sequent(pat, con, st)) next.push_back(std::move(r));
        states = std::move(next);
    };
    if (conclusion) step(e.conclusion, *conclusion);
    for (std::size_t i = 0; i < premises.size() && !states.empty(); ++i) step(e.premises[i], premises[i]);
    for (auto& st : states) {
        if (!st.has_gamma && e.uses_gamma()) continue;
        try {
            Inst full = complete(e, st);
            bool ok = !conclusion || expand(instantiate(e.conclusion, full)) == expand(*conclusion);
            for (std::size_t i = 0; ok && i < premises.size(); ++i)
                ok = expand(instantiate(e.premises[i], full)) == expand(premises[i]);
            if (ok) return full;
        } catch (const TacticError&) {
            if (!conclusion) return st;
        }
    }
    return std::nullopt;
}

Inst sample_instance(const CatalogEntry& e, std::size_t gamma_len, std::size_t delta_len, const std::string& term) {
    static const char* kNames[] = {"p", "q", "r", "s", "u", "v", "w"};
    Inst inst;
    std::size_t next = 0;
    for (const auto& m : e.metas()) {
        if (m == "phi_t" && e.constraint == Constraint::Substitution) continue;
        if (m == "chi" && e.constraint == Constraint::Chain) continue;
        if (e.predicate && m == "phi") {
            inst.set(m, Formula::atom("R", {Term::var("x")}));
            continue;
        }
        inst.set(m, Formula::letter(kNames[next++ % 7]));
    }
    std::vector<Formula> g, d;
    for (std::size_t i = 0; i < gamma_len; ++i) g.push_back(Formula::letter("g" + std::to_string(i + 1)));
    for (std::size_t i = 0; i < delta_len; ++i) d.push_back(Formula::letter("d" + std::to_string(i + 1)));
    if (e.uses_gamma()) inst.with_gamma(g);
    if (e.uses_delta() || e.constraint == Constraint::Chain) inst.with_delta(d);
    if (e.predicate) {
        inst.x = Variable{"x", kDefaultSort};
        Signature sig = Signature::open_single_sorted();
        sig.constants["c"] = kDefaultSort;
        sig.constants["d"] = kDefaultSort;
        inst.t = parse_term(term, sig);
    }
    return complete(e, inst);
}

std::optional<RuleSchema> primitive_schema(RuleId r) {
    switch (r) {
        case RuleId::assume:
            return RuleSchema{{}, "G, phi |- phi"};
        case RuleId::cut:
            return RuleSchema{{"G |- phi", "G, phi |- psi"}, "G |- psi"};
        case RuleId::paste:
            return RuleSchema{{"G |- phi", "G |- psi"}, "G, phi |- psi"};
        case RuleId::cexch:
            return RuleSchema{{"G, phi, psi |- phi", "G, phi, psi |- chi", "G, psi, phi |- psi"}, "G, psi, phi |- chi"};
        case RuleId::and_i:
            return RuleSchema{{"G |- phi", "G |- psi"}, "G |- phi /\\ psi"};
        case RuleId::and_e1:
            return RuleSchema{{"G |- phi /\\ psi"}, "G |- phi"};
        case RuleId::and_e2:
            return RuleSchema{{"G |- phi /\\ psi"}, "G |- psi"};
        case RuleId::imp_i:
            return RuleSchema{{"G, phi |- psi"}, "G |- phi -> psi"};
        case RuleId::imp_e:
            return RuleSchema{{"G |- phi -> psi"}, "G, phi |- psi"};
        case RuleId::lem:
            return RuleSchema{{"G, phi |- psi", "G, ~phi |- psi"}, "G |- psi"};
        case RuleId::explode:
            return RuleSchema{{"G |- ~phi"}, "G, phi |- psi"};
        case RuleId::exch:
            return RuleSchema{{"G, phi, psi, D |- chi"}, "G, psi, phi, D |- chi"};
        case RuleId::all_i:
            return RuleSchema{{"G |- phi"}, "G |- forall x. phi"};
        case RuleId::all_e:
            return RuleSchema{{"G |- forall x. phi"}, "G |- phi_t"};
        case RuleId::qexch:
            return RuleSchema{{"G, phi, psi |- chi"}, "G, psi, phi |- chi"};
    }
    return std::nullopt;
}

}  // namespace orthoproof
