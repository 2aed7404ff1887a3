#pragma once

// Derived rules as derivation combinators. Arguments named d* are premise
// derivations; g is the shared context; n is the length of the trailing
// context delta for the generalized rules.

#include "tactics/dsl.hpp"

namespace orthoproof::lib {

using dsl::Ctx;
using dsl::D;

// propositional basics
D modus_ponens(const D& d_phi, const D& d_imp);
D contradiction(const D& d_pos, const D& d_neg, const Formula& psi);
D lnc1(const Ctx& g, const Formula& phi, const Formula& psi);  // g, ~phi, phi |- psi
D dne_seq(const Ctx& g, const Formula& phi);                   // g, ~~phi |- phi
D lnc2(const Ctx& g, const Formula& phi, const Formula& psi);  // g, phi, ~phi |- psi
D dni_seq(const Ctx& g, const Formula& phi);                   // g, phi |- ~~phi
D dni(const D& d);
D dne(const D& d);
D raa_neg(const D& d1, const D& d2);
D raa_pos(const D& d1, const D& d2);
D cm_neg(const D& d);
D cm_pos(const D& d);
D expand_last(const D& d);
D contract_last(const D& d);
D dn_intro_last(const D& d);
D dn_elim_last(const D& d);

// generalized rules with a trailing context of length n
D g_contract(const D& d, std::size_t n);
D g_expand(const D& d, std::size_t n);
D g_cut(const D& d1, const D& d2, std::size_t n);
D g_paste(const D& d1, const D& d2, std::size_t n);
D g_cexch(const D& d1, const D& d2, const D& d3, std::size_t n);
D g_lnc1(const Ctx& g, const Formula& phi, const Ctx& delta, const Formula& psi);
D g_lnc2(const Ctx& g, const Formula& phi, const Ctx& delta, const Formula& psi);
D g_dne(const D& d, std::size_t n);
D g_dni(const D& d, std::size_t n);
D g_lem(const D& d1, const D& d2, std::size_t n);

// conjunction and its negation; side 0 works on phi, side 1 on psi
D and_paste(const Ctx& g, const Formula& c, int side);                               // g, c, part |- c
D conj_survives_neg(const Ctx& g, const Formula& phi, const Formula& psi, int side);  // g, c, ~part |- c
D neg_survives_conj(const Ctx& g, const Formula& phi, const Formula& psi, int side);  // g, ~part, c |- ~part
D nconj_survives_part(const Ctx& g, const Formula& phi, const Formula& psi, int side);  // g, ~c, part |- ~c
D part_survives_nconj(const Ctx& g, const Formula& phi, const Formula& psi, int side);  // g, part, ~c |- part
D nconj_swap_in(const D& d, const Formula& phi, const Formula& psi, int side, std::size_t n);
D nconj_swap_out(const D& d, const Formula& phi, const Formula& psi, int side, std::size_t n);
D neg_conj_left(const D& d, const Formula& psi);      // g |- ~phi  =>  g |- ~(phi /\ psi)
D negneg_conj_left(const D& d, const Formula& psi);   // g |- phi   =>  g |- ~(~phi /\ psi)
D neg_conj_right(const D& d, const Formula& phi);     // g |- ~psi  =>  g |- ~(phi /\ psi)
D negneg_conj_right(const D& d, const Formula& phi);  // g |- psi   =>  g |- ~(phi /\ ~psi)
D imp_to_sasaki(const D& d);
D sasaki_to_imp(const D& d);

// single-formula sequents
D compose_single(const D& d1, const D& d2);
D contrapose_single(const D& d);

D axiom_k(const Formula& phi, const Formula& psi);
D axiom_s(const Formula& phi, const Formula& psi, const Formula& chi);
D axiom_pair(const Formula& phi, const Formula& psi);
D axiom_proj(const Formula& phi, const Formula& psi, int side);
D axiom_neg(const Formula& phi, const Formula& psi);
D axiom_dne(const Formula& phi);
D cexch_via_commute(const D& d1, const D& d2, const D& d3);
D absurd_conj(const Formula& phi, const Formula& psi);
D orthomodular_up(const D& d);
D orthomodular_down(const D& d);
D lem_lift(const D& d1, const D& d2, std::size_t n);

// disjunction and compatibility
D neg_shift(const D& d);
D neg_by_cases(const D& d1, const D& d2, const D& d3);
D neg_antecedent(const D& d1, const D& d2);
D keep_under_neg(const D& d);
D neg_commutes(const D& d1, const D& d2);
D or_intro1(const D& d, const Formula& psi);
D or_intro2(const D& d, const Formula& phi);
D or_elim(const D& d0, const D& d1, const D& d2, const D& d3, const D& d4);
D compat_intro(const D& d1, const D& d2);
D compat_exch(const D& d0, const D& d, std::size_t n);
D compat_exch_back(const D& d0, const D& d, std::size_t n);
D compat_proj1(const D& d);
D compat_proj2(const D& d);
D compat_sym(const D& d);
D compat_neg_right(const D& d);
D compat_unneg_right(const D& d);
D compat_neg_left(const D& d);
D compat_unneg_left(const D& d);
D compat_imp(const Ctx& g, const Formula& phi, const Formula& psi);
D compat_conj(const Ctx& g, const Formula& phi, const Formula& psi, int side);
D compat_contrapose(const D& d0, const D& d1);
D compat_conj_case(const D& d, int which);  // which: 0 phi psi, 1 phi ~psi, 2 ~phi psi, 3 ~phi ~psi
D commutator_half(const D& d);
D commutator_full(const D& d);
D conj_to_compat(const D& d, int which);
D conj_to_compat_seq(const Ctx& g, const Formula& phi, const Formula& psi, int which);
D half_disj_to_compat(const D& d);
D half_disj_seq(const Ctx& g, const Formula& phi, const Formula& psi, int which);
D commutator_back(const D& d);

// quantifiers
D forall_instance_compat(const Ctx& g, const Variable& x, const Formula& phi, const Term& t);
D exists_intro(const D& d, const Variable& x, const Formula& phi, const Term& t);
D exists_elim(const D& d0, const D& d1, const D& d2, const Variable& x);

}  // namespace orthoproof::lib
