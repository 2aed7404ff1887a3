#include "tactics/lib.hpp"

namespace orthoproof::lib {

using namespace dsl;

D neg_shift(const D& d) {
    Ctx g = drop_last(ctx(d), 2);
    const Formula& phi = last(d, 1);
    const Formula& psi = last(d);
    Formula nphi = neg(phi);
    D r = paste(d, assume(g + phi + psi));
    D z = cexch(g_lnc2(g, phi, {psi}, nphi), g_lnc2(g, phi, {psi}, phi), r);
    return raa_neg(cm_pos(z), d);
}

D neg_by_cases(const D& d1, const D& d2, const D& d3) {
    D both = and_i(dne(neg_shift(d2)), dne(neg_shift(d3)));
    return cut(d1, neg_shift(dni(g_paste(d1, both, 1))));
}

D neg_antecedent(const D& d1, const D& d2) {
    const Ctx& g = ctx(d1);
    const Formula& phi = last(d2);
    const Formula& psi = succ(d1);
    Formula nphi = neg(phi);
    Formula c = conj(phi, psi);
    Formula nc = neg(c);

    D moved = nconj_swap_out(lnc2(g + phi + nc, psi, nphi), phi, psi, 1, 1);
    D d3 = nconj_swap_in(g_cut(d2, moved, 2), phi, psi, 0, 1);
    D first = neg_by_cases(assume(g + nc), lnc2(g + nc, phi, nphi), d3);
    D second = g_cut(d1, nconj_swap_out(assume(g + nc + psi), phi, psi, 1, 0), 1);

    D left = negneg_conj_left(and_e1(assume(g + c)), neg(conj(nphi, psi)));
    D right = negneg_conj_right(and_i(first, second), nphi);
    return imp_e(sasaki_to_imp(lem(left, right)));
}

D keep_under_neg(const D& d) { return neg_antecedent(assume(drop_last(ctx(d))), d); }

D neg_commutes(const D& d1, const D& d2) {
    Ctx g = drop_last(ctx(d1), 2);
    const Formula& phi = last(d1, 1);
    const Formula& psi = last(d1);
    D inner = imp_i(imp_i(paste(d1, assume(g + phi + psi))));
    D r = imp_e(imp_e(neg_antecedent(imp_i(imp_i(d2)), inner)));
    return cm_neg(cexch(g_lnc1(g, phi, {psi}, phi), g_lnc1(g, phi, {psi}, neg(phi)), r));
}

D or_intro1(const D& d, const Formula& psi) { return negneg_conj_left(d, neg(psi)); }

D or_intro2(const D& d, const Formula& phi) { return negneg_conj_right(d, neg(phi)); }

D or_elim(const D& d0, const D& d1, const D& d2, const D& d3, const D& d4) {
    auto side = [](const D& a, const D& b) { return dni(dn_intro_last(imp_e(neg_antecedent(imp_i(a), imp_i(b))))); };
    return dne(neg_by_cases(d0, side(d1, d3), side(d2, d4)));
}

D compat_intro(const D& d1, const D& d2) { return and_i(imp_i(imp_i(d1)), imp_i(imp_i(d2))); }

D compat_exch(const D& d0, const D& d, std::size_t n) {
    return g_cexch(imp_e(imp_e(and_e1(d0))), d, imp_e(imp_e(and_e2(d0))), n);
}

D compat_exch_back(const D& d0, const D& d, std::size_t n) {
    return g_cexch(imp_e(imp_e(and_e2(d0))), d, imp_e(imp_e(and_e1(d0))), n);
}

D compat_proj1(const D& d) {
    auto [phi, psi] = compat_parts(succ(d));
    return compat_exch_back(d, assume(ctx(d) + psi + phi), 0);
}

D compat_proj2(const D& d) {
    auto [phi, psi] = compat_parts(succ(d));
    return compat_exch(d, assume(ctx(d) + phi + psi), 0);
}

D compat_sym(const D& d) { return compat_intro(compat_proj2(d), compat_proj1(d)); }

D compat_neg_right(const D& d) {
    D p1 = compat_proj1(d);
    D p2 = compat_proj2(d);
    return compat_intro(keep_under_neg(p1), neg_commutes(p2, p1));
}

D compat_unneg_right(const D& d) {
    D x = compat_neg_right(d);
    return compat_intro(dn_elim_last(compat_proj1(x)), g_dne(dne(compat_proj2(x)), 1));
}

D compat_neg_left(const D& d) { return compat_sym(compat_neg_right(compat_sym(d))); }

D compat_unneg_left(const D& d) { return compat_sym(compat_unneg_right(compat_sym(d))); }

D compat_imp(const Ctx& g, const Formula& phi, const Formula& psi) {
    Formula i = imp(phi, psi);
    D a = imp_i(lnc1(g + i, phi, psi));
    D b = paste(imp_i(lnc1(g, phi, psi)), assume(g + neg(phi)));
    return compat_sym(compat_unneg_right(compat_intro(a, b)));
}

D compat_conj(const Ctx& g, const Formula& phi, const Formula& psi, int side) {
    Formula c = conj(phi, psi);
    D a = assume(g + (side == 0 ? phi : psi) + c);
    return compat_intro(side == 0 ? and_e1(a) : and_e2(a), and_paste(g, c, side));
}

D compat_contrapose(const D& d0, const D& d1) {
    const Formula& phi = last(d1);
    const Formula& psi = succ(d1);
    Ctx g = drop_last(ctx(d1));
    D a = g_cut(d1, lnc2(g + phi, psi, neg(phi)), 1);
    D b = compat_proj1(compat_neg_left(compat_neg_right(d0)));
    return g_lem(a, b, 1);
}

D compat_conj_case(const D& d, int which) {
    D e = d;
    if (which & 1) e = compat_neg_right(e);
    if (which & 2) e = compat_neg_left(e);
    auto [a, b] = compat_parts(succ(e));
    return and_i(compat_proj1(e), assume(ctx(e) + a + b));
}

D commutator_half(const D& d) {
    auto [phi, psi] = compat_parts(succ(d));
    Formula pos = conj(phi, psi);
    Formula negc = conj(phi, neg(psi));
    return lem(or_intro1(compat_conj_case(d, 0), negc), or_intro2(compat_conj_case(d, 1), pos));
}

D commutator_full(const D& d) {
    auto [phi, psi] = compat_parts(succ(d));
    Formula nphi = neg(phi);
    Formula h1 = disj(conj(phi, psi), conj(phi, neg(psi)));
    Formula h2 = disj(conj(nphi, psi), conj(nphi, neg(psi)));
    return lem(or_intro1(commutator_half(d), h2), or_intro2(commutator_half(compat_neg_left(d)), h1));
}

D conj_to_compat(const D& d, int which) {
    const Ctx& g = ctx(d);
    const Formula& c = succ(d);
    auto [a, b] = conj_parts(c);
    D ac = assume(g + c);
    D h1 = paste(g_cut(d, paste(and_e1(ac), and_e2(ac)), 1), assume(g + a));
    D h2 = paste(g_cut(d, paste(and_e2(ac), and_e1(ac)), 1), assume(g + b));
    D e = compat_intro(h1, h2);
    if (which & 2) e = compat_unneg_left(e);
    if (which & 1) e = compat_unneg_right(e);
    return e;
}

namespace {

Formula case_conj(const Formula& phi, const Formula& psi, int which) {
    return conj(which & 2 ? neg(phi) : phi, which & 1 ? neg(psi) : psi);
}


}  // namespace

D conj_to_compat_seq(const Ctx& g, const Formula& phi, const Formula& psi, int which) {
    return conj_to_compat(assume(g + case_conj(phi, psi, which)), which);
}

D half_disj_to_compat(const D& d) {
    const Ctx& g = ctx(d);
    auto [phi, psi] = conj_parts(or_parts(succ(d)).first);
    Formula k = compat(phi, psi);
    return or_elim(d, conj_to_compat_seq(g, phi, psi, 0), conj_to_compat_seq(g, phi, psi, 1),
                   conj_to_compat_seq(g + k, phi, psi, 0), conj_to_compat_seq(g + k, phi, psi, 1));
}

D half_disj_seq(const Ctx& g, const Formula& phi, const Formula& psi, int which) {
    if (which == 0) return half_disj_to_compat(assume(g + disj(case_conj(phi, psi, 0), case_conj(phi, psi, 1))));
    Formula z = disj(case_conj(phi, psi, 2), case_conj(phi, psi, 3));
    return compat_unneg_left(half_disj_to_compat(assume(g + z)));
}

D commutator_back(const D& d) {
    const Ctx& g = ctx(d);
    auto [phi, psi] = conj_parts(or_parts(or_parts(succ(d)).first).first);
    Formula k = compat(phi, psi);
    return or_elim(d, half_disj_seq(g, phi, psi, 0), half_disj_seq(g, phi, psi, 1), half_disj_seq(g + k, phi, psi, 0),
                   half_disj_seq(g + k, phi, psi, 1));
}

D forall_instance_compat(const Ctx& g, const Variable& x, const Formula& phi, const Term& t) {
    Formula a = Formula::forall(x, phi);
    Formula b = substitute(phi, x, t);
    return compat_intro(paste(all_e(assume(g + a), t), assume(g + a)), all_e(assume(g + b + a), t));
}

D exists_intro(const D& d, const Variable& x, const Formula& phi, const Term& t) {
    const Ctx& g = ctx(d);
    Formula a = Formula::forall(x, neg(phi));
    D e = compat_proj2(compat_unneg_right(forall_instance_compat(g, x, neg(phi), t)));
    return raa_neg(g_cut(d, e, 1), all_e(assume(g + a), t));
}

D exists_elim(const D& d0, const D& d1, const D& d2, const Variable& x) {
    const Formula& phi = last(d1);
    Ctx g = drop_last(ctx(d1));
    D k = compat_intro(paste(d1, assume(g + phi)), d2);
    D gen = all_i(compat_contrapose(k, d1), x);
    return cut(d0, dne(neg_shift(dni(g_paste(d0, gen, 1)))));
}

}  // namespace orthoproof::lib
