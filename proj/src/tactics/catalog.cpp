#include <algorithm>

#include "orthoproof/tactics.hpp"
#include "tactics/lib.hpp"

namespace orthoproof {

namespace {

using lib::D;
using Ps = std::vector<Derivation>;
using Builder = std::function<Derivation(const Inst&, const Ps&)>;

const std::vector<Mode> kAll = {Mode::NOM, Mode::NOM_E, Mode::NOM_Q, Mode::NOM_q};
const std::vector<Mode> kClassical = {Mode::NOM_E};
const std::vector<Mode> kQuant = {Mode::NOM_Q, Mode::NOM_q};

struct Table {
    std::vector<CatalogEntry> entries;

    void add(std::string id, std::string locus, std::vector<std::string> premises, std::string conclusion,
             Builder build, std::vector<Mode> modes = kAll, Constraint c = Constraint::None, bool predicate = false) {
        CatalogEntry e;
        e.id = std::move(id);
        e.locus = std::move(locus);
        e.premises = std::move(premises);
        e.conclusion = std::move(conclusion);
        e.modes = std::move(modes);
        e.constraint = c;
        e.predicate = predicate;
        e.build = std::move(build);
        entries.push_back(std::move(e));
    }
};

Formula phi(const Inst& i) { return i.at("phi"); }
Formula psi(const Inst& i) { return i.at("psi"); }
Formula chi(const Inst& i) { return i.at("chi"); }
std::size_t n(const Inst& i) { return i.delta.size(); }

void propositional_basics(Table& t) {
    using namespace lib;
    t.add("P2.1", "modus ponens", {"G |- phi", "G |- phi -> psi"}, "G |- psi",
          [](const Inst&, const Ps& p) { return modus_ponens(p[0], p[1]); });
    t.add("P2.2", "explosion from a contradiction", {"G |- phi", "G |- ~phi"}, "G |- psi",
          [](const Inst& i, const Ps& p) { return contradiction(p[0], p[1], psi(i)); });
    t.add("L2.3.1", "negation then assertion proves anything", {}, "G, ~phi, phi |- psi",
          [](const Inst& i, const Ps&) { return lnc1(i.gamma, phi(i), psi(i)); });
    t.add("L2.3.2", "double negation elimination sequent", {}, "G, ~~phi |- phi",
          [](const Inst& i, const Ps&) { return dne_seq(i.gamma, phi(i)); });
    t.add("L2.3.3", "assertion then negation proves anything", {}, "G, phi, ~phi |- psi",
          [](const Inst& i, const Ps&) { return lnc2(i.gamma, phi(i), psi(i)); });
    t.add("L2.3.4", "double negation introduction sequent", {}, "G, phi |- ~~phi",
          [](const Inst& i, const Ps&) { return dni_seq(i.gamma, phi(i)); });
    t.add("P2.4.1", "double negation introduction", {"G |- phi"}, "G |- ~~phi",
          [](const Inst&, const Ps& p) { return dni(p[0]); });
    t.add("P2.4.2", "double negation elimination", {"G |- ~~phi"}, "G |- phi",
          [](const Inst&, const Ps& p) { return dne(p[0]); });
    t.add("P2.4.3", "reductio concluding a negation", {"G, phi |- psi", "G, phi |- ~psi"}, "G |- ~phi",
          [](const Inst&, const Ps& p) { return raa_neg(p[0], p[1]); });
    t.add("P2.4.4", "reductio from a negated hypothesis", {"G, ~phi |- psi", "G, ~phi |- ~psi"}, "G |- phi",
          [](const Inst&, const Ps& p) { return raa_pos(p[0], p[1]); });
    t.add("P2.4.5", "consequentia mirabilis, negative form", {"G, phi |- ~phi"}, "G |- ~phi",
          [](const Inst&, const Ps& p) { return cm_neg(p[0]); });
    t.add("P2.4.6", "consequentia mirabilis, positive form", {"G, ~phi |- phi"}, "G |- phi",
          [](const Inst&, const Ps& p) { return cm_pos(p[0]); });
    t.add("L2.5.1", "expansion of the last hypothesis", {"G, phi |- psi"}, "G, phi, phi |- psi",
          [](const Inst&, const Ps& p) { return expand_last(p[0]); });
    t.add("L2.5.2", "contraction of the last hypothesis", {"G, phi, phi |- psi"}, "G, phi |- psi",
          [](const Inst&, const Ps& p) { return contract_last(p[0]); });
    t.add("L2.5.3", "double negation introduced in the last hypothesis", {"G, phi |- psi"}, "G, ~~phi |- psi",
          [](const Inst&, const Ps& p) { return dn_intro_last(p[0]); });
    t.add("L2.5.4", "double negation removed from the last hypothesis", {"G, ~~phi |- psi"}, "G, phi |- psi",
          [](const Inst&, const Ps& p) { return dn_elim_last(p[0]); });
}

void generalized(Table& t) {
    using namespace lib;
    t.add("T2.6.contract", "contraction inside a context", {"G, phi, phi, D |- psi"}, "G, phi, D |- psi",
          [](const Inst& i, const Ps& p) { return g_contract(p[0], n(i)); });
    t.add("T2.6.expand", "expansion inside a context", {"G, phi, D |- psi"}, "G, phi, phi, D |- psi",
          [](const Inst& i, const Ps& p) { return g_expand(p[0], n(i)); });
    t.add("T2.6.cut", "cut inside a context", {"G |- phi", "G, phi, D |- psi"}, "G, D |- psi",
          [](const Inst& i, const Ps& p) { return g_cut(p[0], p[1], n(i)); });
    t.add("T2.6.paste", "paste inside a context", {"G |- phi", "G, D |- psi"}, "G, phi, D |- psi",
          [](const Inst& i, const Ps& p) { return g_paste(p[0], p[1], n(i)); });
    t.add("T2.6.cexch", "compatible exchange inside a context",
          {"G, phi, psi |- phi", "G, phi, psi, D |- chi", "G, psi, phi |- psi"}, "G, psi, phi, D |- chi",
          [](const Inst& i, const Ps& p) { return g_cexch(p[0], p[1], p[2], n(i)); });
    t.add("T2.6.lnc1", "negation then assertion inside a context", {}, "G, ~phi, phi, D |- psi",
          [](const Inst& i, const Ps&) { return g_lnc1(i.gamma, phi(i), i.delta, psi(i)); });
    t.add("T2.6.lnc2", "assertion then negation inside a context", {}, "G, phi, ~phi, D |- psi",
          [](const Inst& i, const Ps&) { return g_lnc2(i.gamma, phi(i), i.delta, psi(i)); });
    t.add("T2.6.dne", "double negation removed inside a context", {"G, ~~phi, D |- psi"}, "G, phi, D |- psi",
          [](const Inst& i, const Ps& p) { return g_dne(p[0], n(i)); });
    t.add("T2.6.dni", "double negation introduced inside a context", {"G, phi, D |- psi"}, "G, ~~phi, D |- psi",
          [](const Inst& i, const Ps& p) { return g_dni(p[0], n(i)); });
    t.add("T2.6.lem", "excluded middle inside a context", {"G, phi, D |- psi", "G, ~phi, D |- psi"}, "G, D |- psi",
          [](const Inst& i, const Ps& p) { return g_lem(p[0], p[1], n(i)); });
}

void conjunctions(Table& t) {
    using namespace lib;
    t.add("L2.7.1a", "conjunction survives the negated left conjunct", {}, "G, phi /\\ psi, ~phi |- phi /\\ psi",
          [](const Inst& i, const Ps&) { return conj_survives_neg(i.gamma, phi(i), psi(i), 0); });
    t.add("L2.7.1b", "conjunction survives the negated right conjunct", {}, "G, phi /\\ psi, ~psi |- phi /\\ psi",
          [](const Inst& i, const Ps&) { return conj_survives_neg(i.gamma, phi(i), psi(i), 1); });
    t.add("L2.7.2a", "negated left conjunct survives the conjunction", {}, "G, ~phi, phi /\\ psi |- ~phi",
          [](const Inst& i, const Ps&) { return neg_survives_conj(i.gamma, phi(i), psi(i), 0); });
    t.add("L2.7.2b", "negated right conjunct survives the conjunction", {}, "G, ~psi, phi /\\ psi |- ~psi",
          [](const Inst& i, const Ps&) { return neg_survives_conj(i.gamma, phi(i), psi(i), 1); });
    t.add("L2.7.3a", "negated conjunction survives the left conjunct", {}, "G, ~(phi /\\ psi), phi |- ~(phi /\\ psi)",
          [](const Inst& i, const Ps&) { return nconj_survives_part(i.gamma, phi(i), psi(i), 0); });
    t.add("L2.7.3b", "negated conjunction survives the right conjunct", {}, "G, ~(phi /\\ psi), psi |- ~(phi /\\ psi)",
          [](const Inst& i, const Ps&) { return nconj_survives_part(i.gamma, phi(i), psi(i), 1); });
    t.add("L2.7.4a", "left conjunct survives the negated conjunction", {}, "G, phi, ~(phi /\\ psi) |- phi",
          [](const Inst& i, const Ps&) { return part_survives_nconj(i.gamma, phi(i), psi(i), 0); });
    t.add("L2.7.4b", "right conjunct survives the negated conjunction", {}, "G, psi, ~(phi /\\ psi) |- psi",
          [](const Inst& i, const Ps&) { return part_survives_nconj(i.gamma, phi(i), psi(i), 1); });

    t.add("P2.8.1", "move a negated conjunction before its left conjunct", {"G, phi, ~(phi /\\ psi), D |- chi"},
          "G, ~(phi /\\ psi), phi, D |- chi",
          [](const Inst& i, const Ps& p) { return nconj_swap_in(p[0], phi(i), psi(i), 0, n(i)); });
    t.add("P2.8.2", "move a negated conjunction after its left conjunct", {"G, ~(phi /\\ psi), phi, D |- chi"},
          "G, phi, ~(phi /\\ psi), D |- chi",
          [](const Inst& i, const Ps& p) { return nconj_swap_out(p[0], phi(i), psi(i), 0, n(i)); });
    t.add("P2.8.3", "move a negated conjunction before its right conjunct", {"G, psi, ~(phi /\\ psi), D |- chi"},
          "G, ~(phi /\\ psi), psi, D |- chi",
          [](const Inst& i, const Ps& p) { return nconj_swap_in(p[0], phi(i), psi(i), 1, n(i)); });
    t.add("P2.8.4", "move a negated conjunction after its right conjunct", {"G, ~(phi /\\ psi), psi, D |- chi"},
          "G, psi, ~(phi /\\ psi), D |- chi",
          [](const Inst& i, const Ps& p) { return nconj_swap_out(p[0], phi(i), psi(i), 1, n(i)); });

    t.add("P2.9.1", "negated left conjunct refutes the conjunction", {"G |- ~phi"}, "G |- ~(phi /\\ psi)",
          [](const Inst& i, const Ps& p) { return neg_conj_left(p[0], psi(i)); });
    t.add("P2.9.2", "asserted formula refutes its negation in a conjunction", {"G |- phi"}, "G |- ~(~phi /\\ psi)",
          [](const Inst& i, const Ps& p) { return negneg_conj_left(p[0], psi(i)); });
    t.add("P2.9.3", "negated right conjunct refutes the conjunction", {"G |- ~psi"}, "G |- ~(phi /\\ psi)",
          [](const Inst& i, const Ps& p) { return neg_conj_right(p[0], phi(i)); });
    t.add("P2.9.4", "asserted formula refutes its negation as right conjunct", {"G |- psi"}, "G |- ~(phi /\\ ~psi)",
          [](const Inst& i, const Ps& p) { return negneg_conj_right(p[0], phi(i)); });

    t.add("T2.10.fwd", "implication gives the Sasaki form", {"G |- phi -> psi"}, "G |- ~(phi /\\ ~(phi /\\ psi))",
          [](const Inst&, const Ps& p) { return imp_to_sasaki(p[0]); });
    t.add("T2.10.bwd", "Sasaki form gives the implication", {"G |- ~(phi /\\ ~(phi /\\ psi))"}, "G |- phi -> psi",
          [](const Inst&, const Ps& p) { return sasaki_to_imp(p[0]); });
}

void single_and_axioms(Table& t) {
    using namespace lib;
    t.add("L3.6.1", "composition of single-hypothesis sequents", {"phi |- psi", "psi |- chi"}, "phi |- chi",
          [](const Inst&, const Ps& p) { return compose_single(p[0], p[1]); });
    t.add("L3.6.2", "contraposition of a single-hypothesis sequent", {"phi |- psi"}, "~psi |- ~phi",
          [](const Inst&, const Ps& p) { return contrapose_single(p[0]); });

    t.add("T3.2.AX1", "axiom K with exchange", {}, "|- phi -> psi -> phi",
          [](const Inst& i, const Ps&) { return axiom_k(phi(i), psi(i)); }, kClassical);
    t.add("T3.2.AX2", "axiom S with exchange", {}, "|- (phi -> psi) -> (phi -> psi -> chi) -> phi -> chi",
          [](const Inst& i, const Ps&) { return axiom_s(phi(i), psi(i), chi(i)); }, kClassical);
    t.add("T3.2.AX3", "conjunction axiom with exchange", {}, "|- phi -> psi -> phi /\\ psi",
          [](const Inst& i, const Ps&) { return axiom_pair(phi(i), psi(i)); }, kClassical);
    t.add("T3.2.AX4", "left projection axiom", {}, "|- phi /\\ psi -> phi",
          [](const Inst& i, const Ps&) { return axiom_proj(phi(i), psi(i), 0); });
    t.add("T3.2.AX5", "right projection axiom", {}, "|- phi /\\ psi -> psi",
          [](const Inst& i, const Ps&) { return axiom_proj(phi(i), psi(i), 1); });
    t.add("T3.2.AX6", "negation axiom with exchange", {}, "|- (phi -> psi) -> (phi -> ~psi) -> ~phi",
          [](const Inst& i, const Ps&) { return axiom_neg(phi(i), psi(i)); }, kClassical);
    t.add("T3.2.AX7", "double negation axiom", {}, "|- ~~phi -> phi",
          [](const Inst& i, const Ps&) { return axiom_dne(phi(i)); });

    t.add("T3.5.cexch", "compatible exchange from the other rules",
          {"G, phi, psi |- phi", "G, phi, psi |- chi", "G, psi, phi |- psi"}, "G, psi, phi |- chi",
          [](const Inst&, const Ps& p) { return cexch_via_commute(p[0], p[1], p[2]); });
    t.add("T3.8.BOT", "contradictory conjunction proves anything", {}, "phi /\\ ~phi |- psi",
          [](const Inst& i, const Ps&) { return absurd_conj(phi(i), psi(i)); });
    t.add("T3.8.OM1", "orthomodularity, upward form", {"phi |- psi"}, "psi |- ~(~phi /\\ ~(~phi /\\ psi))",
          [](const Inst&, const Ps& p) { return orthomodular_up(p[0]); });
    t.add("T3.8.OM2", "orthomodularity, downward form", {"phi |- psi"}, "~phi -> psi |- psi",
          [](const Inst&, const Ps& p) { return orthomodular_down(p[0]); });
    t.add("C3.9.LEM-lift", "excluded middle lifted through a chain of implications", {"psi |- chi", "~psi |- chi"},
          "D |- psi", [](const Inst& i, const Ps& p) { return lem_lift(p[0], p[1], n(i)); }, kAll,
          Constraint::Chain);
}

void compatibility(Table& t) {
    using namespace lib;
    t.add("P4.2", "negation shifted to the last hypothesis", {"G, phi, psi |- ~phi"}, "G, phi |- ~psi",
          [](const Inst&, const Ps& p) { return neg_shift(p[0]); });
    t.add("L4.3", "refutation by cases on a negated conjunction",
          {"G |- ~(phi /\\ psi)", "G, chi, ~phi |- ~chi", "G, chi, ~psi |- ~chi"}, "G |- ~chi",
          [](const Inst&, const Ps& p) { return neg_by_cases(p[0], p[1], p[2]); });
    t.add("T4.4", "conclusion kept under a negated hypothesis", {"G |- psi", "G, phi |- psi"}, "G, ~phi |- psi",
          [](const Inst&, const Ps& p) { return neg_antecedent(p[0], p[1]); });
    t.add("C4.5.a", "commuting pair survives negating the second", {"G, phi, psi |- phi"}, "G, phi, ~psi |- phi",
          [](const Inst&, const Ps& p) { return keep_under_neg(p[0]); });
    t.add("C4.5.b", "commuting pair survives negating the first", {"G, phi, psi |- phi", "G, psi, phi |- psi"},
          "G, ~phi, psi |- ~phi", [](const Inst&, const Ps& p) { return neg_commutes(p[0], p[1]); });

    t.add("C4.6.intro1", "disjunction introduction, left", {"G |- phi"}, "G |- phi \\/ psi",
          [](const Inst& i, const Ps& p) { return or_intro1(p[0], psi(i)); });
    t.add("C4.6.intro2", "disjunction introduction, right", {"G |- psi"}, "G |- phi \\/ psi",
          [](const Inst& i, const Ps& p) { return or_intro2(p[0], phi(i)); });
    t.add("C4.6.elim", "disjunction elimination",
          {"G |- phi \\/ psi", "G, phi |- chi", "G, psi |- chi", "G, chi, phi |- chi", "G, chi, psi |- chi"},
          "G |- chi", [](const Inst&, const Ps& p) { return or_elim(p[0], p[1], p[2], p[3], p[4]); });

    t.add("P4.7.intro", "compatibility introduction", {"G, phi, psi |- phi", "G, psi, phi |- psi"}, "G |- phi >< psi",
          [](const Inst&, const Ps& p) { return compat_intro(p[0], p[1]); });
    t.add("P4.7.exch1", "exchange of compatible formulas", {"G |- phi >< psi", "G, phi, psi, D |- chi"},
          "G, psi, phi, D |- chi", [](const Inst& i, const Ps& p) { return compat_exch(p[0], p[1], n(i)); });
    t.add("P4.7.exch2", "exchange of compatible formulas, reversed", {"G |- phi >< psi", "G, psi, phi, D |- chi"},
          "G, phi, psi, D |- chi", [](const Inst& i, const Ps& p) { return compat_exch_back(p[0], p[1], n(i)); });

    t.add("P4.8.1", "compatibility gives the left commuting sequent", {"G |- phi >< psi"}, "G, phi, psi |- phi",
          [](const Inst&, const Ps& p) { return compat_proj1(p[0]); });
    t.add("P4.8.2", "compatibility gives the right commuting sequent", {"G |- phi >< psi"}, "G, psi, phi |- psi",
          [](const Inst&, const Ps& p) { return compat_proj2(p[0]); });
    t.add("P4.8.3", "compatibility is symmetric", {"G |- phi >< psi"}, "G |- psi >< phi",
          [](const Inst&, const Ps& p) { return compat_sym(p[0]); });
    t.add("P4.8.4", "compatibility with a negated right side", {"G |- phi >< psi"}, "G |- phi >< ~psi",
          [](const Inst&, const Ps& p) { return compat_neg_right(p[0]); });
    t.add("P4.8.5", "compatibility without a negated right side", {"G |- phi >< ~psi"}, "G |- phi >< psi",
          [](const Inst&, const Ps& p) { return compat_unneg_right(p[0]); });
    t.add("P4.8.6", "compatibility with a negated left side", {"G |- phi >< psi"}, "G |- ~phi >< psi",
          [](const Inst&, const Ps& p) { return compat_neg_left(p[0]); });
    t.add("P4.8.7", "compatibility without a negated left side", {"G |- ~phi >< psi"}, "G |- phi >< psi",
          [](const Inst&, const Ps& p) { return compat_unneg_left(p[0]); });
    t.add("P4.8.8", "a formula is compatible with its implications", {}, "G |- phi >< (phi -> psi)",
          [](const Inst& i, const Ps&) { return compat_imp(i.gamma, phi(i), psi(i)); });
    t.add("P4.8.9", "a formula is compatible with a conjunction it opens", {}, "G |- phi >< phi /\\ psi",
          [](const Inst& i, const Ps&) { return compat_conj(i.gamma, phi(i), psi(i), 0); });
    t.add("P4.8.10", "a formula is compatible with a conjunction it closes", {}, "G |- psi >< phi /\\ psi",
          [](const Inst& i, const Ps&) { return compat_conj(i.gamma, phi(i), psi(i), 1); });

    t.add("P4.9", "contraposition for compatible formulas", {"G |- phi >< psi", "G, phi |- psi"}, "G, ~psi |- ~phi",
          [](const Inst&, const Ps& p) { return compat_contrapose(p[0], p[1]); });

    t.add("L4.10.1", "compatible pair gives both conjuncts", {"G |- phi >< psi"}, "G, phi, psi |- phi /\\ psi",
          [](const Inst&, const Ps& p) { return compat_conj_case(p[0], 0); });
    t.add("L4.10.2", "compatible pair with the right negated", {"G |- phi >< psi"}, "G, phi, ~psi |- phi /\\ ~psi",
          [](const Inst&, const Ps& p) { return compat_conj_case(p[0], 1); });
    t.add("L4.10.3", "compatible pair with the left negated", {"G |- phi >< psi"}, "G, ~phi, psi |- ~phi /\\ psi",
          [](const Inst&, const Ps& p) { return compat_conj_case(p[0], 2); });
    t.add("L4.10.4", "compatible pair with both negated", {"G |- phi >< psi"}, "G, ~phi, ~psi |- ~phi /\\ ~psi",
          [](const Inst&, const Ps& p) { return compat_conj_case(p[0], 3); });

    t.add("P4.11.half", "compatibility splits a formula by cases", {"G |- phi >< psi"},
          "G, phi |- phi /\\ psi \\/ phi /\\ ~psi", [](const Inst&, const Ps& p) { return commutator_half(p[0]); });
    t.add("P4.11.full", "compatibility gives the full commutator", {"G |- phi >< psi"},
          "G |- (phi /\\ psi \\/ phi /\\ ~psi) \\/ (~phi /\\ psi \\/ ~phi /\\ ~psi)",
          [](const Inst&, const Ps& p) { return commutator_full(p[0]); });

    const char* cases[] = {"phi /\\ psi", "phi /\\ ~psi", "~phi /\\ psi", "~phi /\\ ~psi"};
    const char* case_names[] = {"both", "left only", "right only", "neither"};
    for (int k = 0; k < 4; ++k) {
        std::string num = std::to_string(k + 1);
        t.add("L4.12." + num, std::string("conjunction of a pair gives compatibility, ") + case_names[k],
              {std::string("G |- ") + cases[k]}, "G |- phi >< psi",
              [k](const Inst&, const Ps& p) { return conj_to_compat(p[0], k); });
    }
    for (int k = 0; k < 4; ++k) {
        std::string num = std::to_string(k + 1);
        t.add("L4.12.s" + num, std::string("hypothesised conjunction gives compatibility, ") + case_names[k], {},
              std::string("G, ") + cases[k] + " |- phi >< psi",
              [k](const Inst& i, const Ps&) { return conj_to_compat_seq(i.gamma, phi(i), psi(i), k); });
    }

    t.add("L4.13.rule", "half commutator gives compatibility", {"G |- phi /\\ psi \\/ phi /\\ ~psi"},
          "G |- phi >< psi", [](const Inst&, const Ps& p) { return half_disj_to_compat(p[0]); });
    t.add("L4.13.s1", "hypothesised half commutator gives compatibility", {},
          "G, phi /\\ psi \\/ phi /\\ ~psi |- phi >< psi",
          [](const Inst& i, const Ps&) { return half_disj_seq(i.gamma, phi(i), psi(i), 0); });
    t.add("L4.13.s2", "hypothesised negative half commutator gives compatibility", {},
          "G, ~phi /\\ psi \\/ ~phi /\\ ~psi |- phi >< psi",
          [](const Inst& i, const Ps&) { return half_disj_seq(i.gamma, phi(i), psi(i), 1); });
    t.add("P4.14", "full commutator gives compatibility",
          {"G |- (phi /\\ psi \\/ phi /\\ ~psi) \\/ (~phi /\\ psi \\/ ~phi /\\ ~psi)"}, "G |- phi >< psi",
          [](const Inst&, const Ps& p) { return commutator_back(p[0]); });
}

void quantifiers(Table& t) {
    using namespace lib;
    t.add("L5.6", "a universal formula is compatible with its instances", {}, "G |- (forall x. phi) >< phi_t",
          [](const Inst& i, const Ps&) { return forall_instance_compat(i.gamma, *i.x, phi(i), *i.t); }, kQuant,
          Constraint::Substitution, true);
    t.add("P5.7.EI", "existential introduction", {"G |- phi_t"}, "G |- exists x. phi",
          [](const Inst& i, const Ps& p) { return exists_intro(p[0], *i.x, phi(i), *i.t); }, kQuant,
          Constraint::Substitution, true);
    t.add("P5.7.EE", "existential elimination", {"G |- exists x. phi", "G, phi |- psi", "G, psi, phi |- psi"},
          "G |- psi", [](const Inst& i, const Ps& p) { return exists_elim(p[0], p[1], p[2], *i.x); }, kQuant,
          Constraint::None, true);
}

std::vector<CatalogEntry> build_catalog() {
    Table t;
    propositional_basics(t);
    generalized(t);
    conjunctions(t);
    single_and_axioms(t);
    compatibility(t);
    quantifiers(t);
    for (auto& e : t.entries)
        if (e.id == "L3.6.1" || e.id == "L3.6.2" || e.id == "T3.8.OM1" || e.id == "T3.8.OM2") e.admissible = true;
    return std::move(t.entries);
}

bool same_sequent(const Sequent& a, const Sequent& b) { return expand(a) == expand(b); }

bool shares(const std::set<std::string>& a, const std::set<std::string>& b) {
    return std::any_of(a.begin(), a.end(), [&](const std::string& v) { return b.count(v) > 0; });
}

void side_conditions(const CatalogEntry& e, const Inst& inst, std::optional<Mode> mode) {
    if (e.id == "P5.7.EE") {
        auto fv = free_variables(inst.gamma);
        fv.merge(free_variables(inst.at("psi")));
        if (inst.x && fv.count(inst.x->name))
            throw TacticError("P5.7.EE side condition: " + inst.x->name + " is free in the context or conclusion");
    }
    if (!mode) return;
    if (!e.allows(*mode)) throw TacticError("entry " + e.id + " is not valid in mode " + to_string(*mode));
    if (*mode != Mode::NOM_q) return;
    if (e.constraint == Constraint::Substitution && inst.t) {
        auto fv = free_variables(inst.at("phi"));
        if (inst.x) fv.insert(inst.x->name);
        if (shares(fv, free_variables(*inst.t)))
            throw TacticError("NOM_q side condition: " + render(*inst.t) + " shares a free variable with phi");
    }
    for (const auto& [name, f] : inst.f)
        if (!is_nonduplicating(f)) throw TacticError("NOM_q requires nonduplicating formulas: " + name);
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> entries = build_catalog();
    return entries;
}

const CatalogEntry* lookup(const std::string& id) {
    for (const auto& e : catalog())
        if (e.id == id) return &e;
    return nullptr;
}

Derivation derive(const std::string& id, const Inst& inst, const std::vector<Derivation>& premises,
                  std::optional<Mode> mode) {
    const CatalogEntry* e = lookup(id);
    if (!e) throw TacticError("unknown catalog id " + id);
    Inst full = complete(*e, inst);
    side_conditions(*e, full, mode);
    if (premises.size() != e->premises.size())
        throw TacticError(id + " takes " + std::to_string(e->premises.size()) + " premises, got " +
                          std::to_string(premises.size()));
    for (std::size_t i = 0; i < premises.size(); ++i) {
        Sequent want = instantiate(e->premises[i], full);
        if (!same_sequent(want, premises[i].conclusion()))
            throw TacticError(id + ": premise " + std::to_string(i + 1) + " shape mismatch: expected " + render(want) +
                              ", got " + render(premises[i].conclusion()));
    }
    Sequent goal = instantiate(e->conclusion, full);
    Derivation d = e->build(full, premises);
    if (!same_sequent(d.conclusion(), goal))
        throw TacticError(id + ": builder produced " + render(d.conclusion()) + " instead of " + render(goal));
    return d.with_conclusion(goal);
}

Derivation derive_open(const std::string& id, const Inst& inst, std::optional<Mode> mode) {
    const CatalogEntry* e = lookup(id);
    if (!e) throw TacticError("unknown catalog id " + id);
    Inst full = complete(*e, inst);
    std::vector<Derivation> hyps;
    for (const auto& p : e->premises) hyps.push_back(Derivation::hypothesis(instantiate(p, full)));
    return derive(id, full, hyps, mode);
}

}  // namespace orthoproof
