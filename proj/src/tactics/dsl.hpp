#pragma once

// Forward-construction helpers: each function applies one primitive rule and
// computes the conclusion from its premises. Nothing is checked here; the
// kernel re-checks every tree the catalog hands out.

#include <utility>
#include <vector>

#include "orthoproof/kernel.hpp"

namespace orthoproof::dsl {

using Ctx = std::vector<Formula>;
using D = Derivation;

inline Ctx operator+(Ctx g, const Formula& f) {
    g.push_back(f);
    return g;
}

inline Ctx operator+(Ctx g, const Ctx& h) {
    g.insert(g.end(), h.begin(), h.end());
    return g;
}

inline Formula neg(const Formula& a) { return Formula::neg(a); }
inline Formula conj(const Formula& a, const Formula& b) { return Formula::conj(a, b); }
inline Formula imp(const Formula& a, const Formula& b) { return Formula::imp(a, b); }
inline Formula disj(const Formula& a, const Formula& b) { return Formula::disj(a, b); }
inline Formula compat(const Formula& a, const Formula& b) { return Formula::compat(a, b); }

// Rewrites an Or, Compat or Exists at the root into its primitive form.
Formula unfold(const Formula& f);

std::pair<Formula, Formula> conj_parts(const Formula& f);
std::pair<Formula, Formula> imp_parts(const Formula& f);
std::pair<Formula, Formula> compat_parts(const Formula& f);
std::pair<Formula, Formula> or_parts(const Formula& f);
Formula neg_operand(const Formula& f);

inline const Ctx& ctx(const D& d) { return d.conclusion().antecedent; }
inline const Formula& succ(const D& d) { return d.conclusion().succedent; }
const Formula& last(const D& d, std::size_t from_end = 0);
Ctx drop_last(const Ctx& g, std::size_t n = 1);

D assume(const Ctx& g);
D cut(const D& a, const D& b);
D paste(const D& a, const D& b);
D cexch(const D& a, const D& b, const D& c);
D and_i(const D& a, const D& b);
D and_e1(const D& d);
D and_e2(const D& d);
D imp_i(const D& d);
D imp_e(const D& d);
D lem(const D& a, const D& b);
D explode(const D& d, const Formula& psi);
D exch(const D& d, std::size_t i);
D all_i(const D& d, const Variable& x);
D all_e(const D& d, const Term& t);

}  // namespace orthoproof::dsl
