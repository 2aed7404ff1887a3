#include "tactics/lib.hpp"

namespace orthoproof::lib {

using namespace dsl;

D modus_ponens(const D& d_phi, const D& d_imp) { return cut(d_phi, imp_e(d_imp)); }

D contradiction(const D& d_pos, const D& d_neg, const Formula& psi) {
    const Ctx& g = ctx(d_pos);
    return cut(d_neg, cut(paste(d_neg, d_pos), explode(assume(g + succ(d_neg)), psi)));
}

D lnc1(const Ctx& g, const Formula& phi, const Formula& psi) { return explode(assume(g + neg(phi)), psi); }

D dne_seq(const Ctx& g, const Formula& phi) {
    Formula nn = neg(neg(phi));
    return lem(assume(g + nn + phi), lnc1(g, neg(phi), phi));
}

D lnc2(const Ctx& g, const Formula& phi, const Formula& psi) {
    D left = imp_i(lnc1(g, phi, imp(neg(phi), psi)));
    D right = imp_i(paste(dne_seq(g, phi), imp_i(lnc1(g, neg(phi), psi))));
    return imp_e(imp_e(lem(left, right)));
}

D dni_seq(const Ctx& g, const Formula& phi) {
    Formula nn = neg(neg(phi));
    return lem(lnc2(g, phi, nn), assume(g + phi + nn));
}

D dni(const D& d) { return cut(d, dni_seq(ctx(d), succ(d))); }

D dne(const D& d) { return cut(d, dne_seq(ctx(d), neg_operand(neg_operand(succ(d))))); }

D raa_neg(const D& d1, const D& d2) {
    Ctx g = drop_last(ctx(d1));
    Formula nphi = neg(last(d1));
    return lem(contradiction(d1, d2, nphi), assume(g + nphi));
}

D raa_pos(const D& d1, const D& d2) { return dne(raa_neg(d1, d2)); }

D cm_neg(const D& d) { return raa_neg(assume(ctx(d)), d); }

D cm_pos(const D& d) { return raa_pos(d, assume(ctx(d))); }

D expand_last(const D& d) { return paste(assume(ctx(d)), d); }

D contract_last(const D& d) { return cut(assume(drop_last(ctx(d))), d); }

D dn_intro_last(const D& d) {
    Ctx g = drop_last(ctx(d));
    const Formula& phi = last(d);
    Formula nn = neg(neg(phi));
    return cut(dne_seq(g, phi), cexch(dne_seq(g + phi, phi), paste(dni_seq(g, phi), d), dni_seq(g + nn, phi)));
}

D dn_elim_last(const D& d) {
    Ctx g = drop_last(ctx(d));
    Formula phi = neg_operand(neg_operand(last(d)));
    Formula nn = last(d);
    return cut(dni_seq(g, phi), cexch(dni_seq(g + nn, phi), paste(dne_seq(g, phi), d), dne_seq(g + phi, phi)));
}

// Generalized rules: move the trailing context into the succedent, apply the
// rule, then peel it back off.

D g_contract(const D& d, std::size_t n) { return n == 0 ? contract_last(d) : imp_e(g_contract(imp_i(d), n - 1)); }

D g_expand(const D& d, std::size_t n) { return n == 0 ? expand_last(d) : imp_e(g_expand(imp_i(d), n - 1)); }

D g_cut(const D& d1, const D& d2, std::size_t n) { return n == 0 ? cut(d1, d2) : imp_e(g_cut(d1, imp_i(d2), n - 1)); }

D g_paste(const D& d1, const D& d2, std::size_t n) {
    return n == 0 ? paste(d1, d2) : imp_e(g_paste(d1, imp_i(d2), n - 1));
}

D g_cexch(const D& d1, const D& d2, const D& d3, std::size_t n) {
    return n == 0 ? cexch(d1, d2, d3) : imp_e(g_cexch(d1, imp_i(d2), d3, n - 1));
}

D g_lnc1(const Ctx& g, const Formula& phi, const Ctx& delta, const Formula& psi) {
    if (delta.empty()) return lnc1(g, phi, psi);
    return imp_e(g_lnc1(g, phi, drop_last(delta), imp(delta.back(), psi)));
}

D g_lnc2(const Ctx& g, const Formula& phi, const Ctx& delta, const Formula& psi) {
    if (delta.empty()) return lnc2(g, phi, psi);
    return imp_e(g_lnc2(g, phi, drop_last(delta), imp(delta.back(), psi)));
}

D g_dne(const D& d, std::size_t n) { return n == 0 ? dn_elim_last(d) : imp_e(g_dne(imp_i(d), n - 1)); }

D g_dni(const D& d, std::size_t n) { return n == 0 ? dn_intro_last(d) : imp_e(g_dni(imp_i(d), n - 1)); }

D g_lem(const D& d1, const D& d2, std::size_t n) {
    return n == 0 ? lem(d1, d2) : imp_e(g_lem(imp_i(d1), imp_i(d2), n - 1));
}

// Conjunctions and their negations next to one of the parts.

D and_paste(const Ctx& g, const Formula& c, int side) {
    D a = assume(g + c);
    return paste(side == 0 ? and_e1(a) : and_e2(a), a);
}

D conj_survives_neg(const Ctx& g, const Formula& phi, const Formula& psi, int side) {
    Formula c = conj(phi, psi);
    D a = assume(g + c);
    return g_cut(side == 0 ? and_e1(a) : and_e2(a), lnc2(g + c, side == 0 ? phi : psi, c), 1);
}

D neg_survives_conj(const Ctx& g, const Formula& phi, const Formula& psi, int side) {
    Formula c = conj(phi, psi);
    const Formula& part = side == 0 ? phi : psi;
    Formula np = neg(part);
    D a = assume(g + np + c);
    D body = cexch(g_lnc1(g, part, {c}, part), g_lnc1(g, part, {c}, np), and_paste(g + np, c, side));
    return cut(side == 0 ? and_e1(a) : and_e2(a), body);
}

D nconj_survives_part(const Ctx& g, const Formula& phi, const Formula& psi, int side) {
    Formula c = conj(phi, psi);
    Formula nc = neg(c);
    const Formula& part = side == 0 ? phi : psi;
    D a = assume(g + nc + part + c);
    return cm_neg(cexch(and_paste(g + nc, c, side), g_lnc1(g, c, {part}, nc), side == 0 ? and_e1(a) : and_e2(a)));
}

D part_survives_nconj(const Ctx& g, const Formula& phi, const Formula& psi, int side) {
    Formula c = conj(phi, psi);
    Formula nc = neg(c);
    const Formula& part = side == 0 ? phi : psi;
    D a = assume(g + part + c);
    D x = g_cexch(side == 0 ? and_e1(a) : and_e2(a), lnc2(g + part, c, part), and_paste(g, c, side), 1);
    D y = paste(nconj_survives_part(g, phi, psi, side), assume(g + nc + part));
    return g_lem(x, y, 2);
}

D nconj_swap_in(const D& d, const Formula& phi, const Formula& psi, int side, std::size_t n) {
    Ctx g = drop_last(ctx(d), n + 2);
    return g_cexch(part_survives_nconj(g, phi, psi, side), d, nconj_survives_part(g, phi, psi, side), n);
}

D nconj_swap_out(const D& d, const Formula& phi, const Formula& psi, int side, std::size_t n) {
    Ctx g = drop_last(ctx(d), n + 2);
    return g_cexch(nconj_survives_part(g, phi, psi, side), d, part_survives_nconj(g, phi, psi, side), n);
}

D neg_conj_left(const D& d, const Formula& psi) {
    const Ctx& g = ctx(d);
    Formula phi = neg_operand(succ(d));
    return raa_neg(and_e1(assume(g + conj(phi, psi))), g_cut(d, neg_survives_conj(g, phi, psi, 0), 1));
}

D negneg_conj_left(const D& d, const Formula& psi) { return neg_conj_left(dni(d), psi); }

D neg_conj_right(const D& d, const Formula& phi) {
    const Ctx& g = ctx(d);
    Formula psi = neg_operand(succ(d));
    return raa_neg(and_e2(assume(g + conj(phi, psi))), g_cut(d, neg_survives_conj(g, phi, psi, 1), 1));
}

D negneg_conj_right(const D& d, const Formula& phi) { return neg_conj_right(dni(d), phi); }

D imp_to_sasaki(const D& d) {
    const Ctx& g = ctx(d);
    auto [phi, psi] = imp_parts(succ(d));
    D left = negneg_conj_right(and_i(assume(g + phi), imp_e(d)), phi);
    D right = neg_conj_left(assume(g + neg(phi)), neg(conj(phi, psi)));
    return lem(left, right);
}

D sasaki_to_imp(const D& d) {
    const Ctx& g = ctx(d);
    const Formula& s = succ(d);
    auto [phi, n] = conj_parts(neg_operand(s));
    Formula psi = conj_parts(neg_operand(n)).second;
    D e = nconj_swap_in(nconj_swap_in(assume(g + phi + n + s), phi, n, 1, 0), phi, n, 0, 1);
    D a = g_cut(d, e, 2);
    D b = and_i(nconj_swap_out(assume(g + n + phi), phi, psi, 0, 0), assume(g + phi + n));
    return imp_i(and_e2(raa_pos(b, a)));
}

// Sequents with a single antecedent formula.

D compose_single(const D& d1, const D& d2) { return cut(d1, weaken(d2, ctx(d1))); }

D contrapose_single(const D& d) {
    const Formula& phi = ctx(d).at(0);
    const Formula& psi = succ(d);
    Formula npsi = neg(psi);
    D a = weaken(d, {npsi});
    D z = cm_neg(cexch(g_lnc1({}, psi, {phi}, psi), g_lnc1({}, psi, {phi}, npsi), paste(a, assume({npsi, phi}))));
    return raa_neg(a, z);
}

D axiom_k(const Formula& phi, const Formula& psi) { return imp_i(imp_i(exch(assume({psi, phi}), 0))); }

D axiom_s(const Formula& phi, const Formula& psi, const Formula& chi) {
    Formula a = imp(phi, psi);
    Formula b = imp(phi, imp(psi, chi));
    D left = exch(imp_e(assume({b, a})), 0);
    D right = imp_e(imp_e(assume({a, b})));
    return imp_i(imp_i(imp_i(cut(left, right))));
}

D axiom_pair(const Formula& phi, const Formula& psi) {
    return imp_i(imp_i(and_i(exch(assume({psi, phi}), 0), assume({phi, psi}))));
}

D axiom_proj(const Formula& phi, const Formula& psi, int side) {
    D a = assume({conj(phi, psi)});
    return imp_i(side == 0 ? and_e1(a) : and_e2(a));
}

D axiom_neg(const Formula& phi, const Formula& psi) {
    Formula a = imp(phi, psi);
    Formula b = imp(phi, neg(psi));
    return imp_i(imp_i(raa_neg(exch(imp_e(assume({b, a})), 0), imp_e(assume({a, b})))));
}

D axiom_dne(const Formula& phi) { return imp_i(dne_seq({}, phi)); }

D cexch_via_commute(const D& d1, const D& d2, const D& d3) {
    const Formula& chi = succ(d2);
    D left = imp_i(imp_i(paste(d1, d2)));
    D right = imp_i(imp_i(explode(neg_commutes(d1, d3), chi)));
    return imp_e(imp_e(lem(left, right)));
}

D absurd_conj(const Formula& phi, const Formula& psi) {
    D a = assume({conj(phi, neg(phi))});
    return contradiction(and_e1(a), and_e2(a), psi);
}

D orthomodular_up(const D& d) {
    const Formula& phi = ctx(d).at(0);
    const Formula& psi = succ(d);
    Formula nphi = neg(phi);
    D l = g_paste(d, lnc2({}, phi, psi), 1);
    D z = cexch(g_lnc1({}, phi, {psi}, phi), g_lnc1({}, phi, {psi}, nphi), weaken(d, {nphi, psi}));
    D r = paste(cm_neg(z), assume({nphi, psi}));
    return imp_to_sasaki(imp_i(g_lem(l, r, 2)));
}

D orthomodular_down(const D& d) {
    const Formula& phi = ctx(d).at(0);
    Formula a = imp(neg(phi), succ(d));
    return lem(weaken(d, {a}), imp_e(assume({a})));
}

D lem_lift(const D& d1, const D& d2, std::size_t n) {
    D out = lem(d1, d2);
    for (std::size_t i = 0; i < n; ++i) out = imp_e(out);
    return out;
}

}  // namespace orthoproof::lib
