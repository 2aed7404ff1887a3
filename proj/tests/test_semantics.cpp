#include <gtest/gtest.h>

#include <random>

#include "orthoproof/semantics.hpp"

using namespace orthoproof;

namespace {

constexpr Element kBot = 0, kA = 1, kA_ = 2, kB = 3, kB_ = 4, kTop = 5;

Sequent S(const std::string& t) { return parse_sequent(t); }
Formula F(const std::string& t) { return parse_formula(t); }

// Truth-table oracle written against plain bools.
bool eval_bool(const Formula& f, const std::map<std::string, bool>& v) {
    switch (f.kind()) {
        case Connective::Letter: return v.at(f.name());
        case Connective::Neg: return !eval_bool(f.lhs(), v);
        case Connective::And: return eval_bool(f.lhs(), v) && eval_bool(f.rhs(), v);
        case Connective::Or: return eval_bool(f.lhs(), v) || eval_bool(f.rhs(), v);
        case Connective::Imp: return !eval_bool(f.lhs(), v) || eval_bool(f.rhs(), v);
        case Connective::Compat: return true;
        default: throw std::logic_error("not propositional");
    }
}

bool oracle_classical(const Sequent& s) {
    auto names = letters(s);
    for (std::size_t bits = 0; bits < (std::size_t{1} << names.size()); ++bits) {
        std::map<std::string, bool> v;
        for (std::size_t i = 0; i < names.size(); ++i) v[names[i]] = (bits >> i) & 1;
        bool ant = true;
        for (const auto& a : s.antecedent) ant = ant && eval_bool(a, v);
        if (ant && !eval_bool(s.succedent, v)) return false;
    }
    return true;
}

Formula random_formula(std::mt19937& rng, int depth, const std::vector<std::string>& names) {
    if (depth == 0 || rng() % 4 == 0) return Formula::letter(names[rng() % names.size()]);
    switch (rng() % 5) {
        case 0: return Formula::neg(random_formula(rng, depth - 1, names));
        case 1: return Formula::conj(random_formula(rng, depth - 1, names), random_formula(rng, depth - 1, names));
        case 2: return Formula::imp(random_formula(rng, depth - 1, names), random_formula(rng, depth - 1, names));
        case 3: return Formula::disj(random_formula(rng, depth - 1, names), random_formula(rng, depth - 1, names));
        default: return Formula::compat(random_formula(rng, depth - 1, names), random_formula(rng, depth - 1, names));
    }
}

Sequent random_sequent(std::mt19937& rng, const std::vector<std::string>& names) {
    Sequent s;
    for (std::size_t i = rng() % 3; i > 0; --i) s.antecedent.push_back(random_formula(rng, 2, names));
    s.succedent = random_formula(rng, 3, names);
    return s;
}

QStructure two_point(const FiniteOML& L, Element r0, Element r1) {
    QStructure M;
    M.lattice = L;
    M.domains[kDefaultSort] = 2;
    M.relations["R"] = {{{0}, r0}, {{1}, r1}};
    M.constants["c"] = 0;
    M.constants["d"] = 1;
    return M;
}

}  // namespace

TEST(Eval, Examples) {
    const FiniteOML two = boolean(1), m = mo(2);
    EXPECT_EQ(eval_formula(two, F("p -> q"), {{"p", 1}, {"q", 0}}), 0u);
    EXPECT_EQ(eval_formula(m, F("p -> q"), {{"p", kA}, {"q", kB}}), kA_);
    for (Element a = 0; a < m.size(); ++a) EXPECT_EQ(eval_formula(m, F("~~p"), {{"p", a}}), a);
    EXPECT_EQ(eval_formula(m, F("p \\/ q"), {{"p", kA}, {"q", kB}}), kTop);
    EXPECT_THROW(eval_formula(m, F("p /\\ q"), {{"p", kA}}), SemanticsError);
}

TEST(Eval, EmptyFoldIsTop) {
    const FiniteOML m = mo(2);
    EXPECT_EQ(sasaki_fold(m, {}), kTop);
    for (Element a = 0; a < m.size(); ++a) EXPECT_EQ(sequent_true(m, S("|- p"), {{"p", a}}), a == kTop);
}

TEST(Eval, ExchangeWitness) {
    const FiniteOML m = mo(2);
    Assignment v{{"p", kA}, {"q", kB}};
    EXPECT_TRUE(sequent_true(m, S("p, q |- q"), v));
    EXPECT_FALSE(sequent_true(m, S("q, p |- q"), v));
    EXPECT_EQ(sasaki_fold(m, {kB, kA}), kA);
    EXPECT_EQ(sasaki_fold(m, {kA, kB}), kB);
}

TEST(Eval, CompiledEvaluatorMatchesTreeEvaluator) {
    std::mt19937 rng(99);
    const FiniteOML L = product(boolean(1), mo(2));
    for (int i = 0; i < 200; ++i) {
        Sequent s = random_sequent(rng, {"p", "q", "r"});
        SequentEvaluator ev(s);
        std::vector<Element> vals(ev.letters().size());
        for (auto& x : vals) x = rng() % L.size();
        Assignment v;
        for (std::size_t k = 0; k < vals.size(); ++k) v[ev.letters()[k]] = vals[k];
        EXPECT_EQ(ev.holds(L, vals.data()), sequent_true(L, s, v)) << render(s);
        EXPECT_EQ(ev.succedent(L, vals.data()), eval_formula(L, s.succedent, v)) << render(s);
    }
}

TEST(Validate, Examples) {
    const FiniteOML m = mo(2);
    EXPECT_TRUE(validate_sequent(S("q |- p \\/ (~p /\\ (p \\/ q))"), m).valid);
    auto d = validate_sequent(S("p /\\ (q \\/ r) |- (p /\\ q) \\/ (p /\\ r)"), m);
    EXPECT_FALSE(d.valid);
    ASSERT_TRUE(d.countermodel.has_value());
    EXPECT_EQ(d.countermodel->lattice, "MO2");
    EXPECT_TRUE(validate_sequent(S("p |- q"), boolean(0)).valid);
    EXPECT_TRUE(validate_sequent(S("q, p |- q"), boolean(0)).valid);
}

TEST(Validate, FirstCountermodelIsLexicographic) {
    auto v = validate_sequent(S("q, p |- q"), mo(2));
    ASSERT_FALSE(v.valid);
    const auto& cm = *v.countermodel;
    ASSERT_EQ(cm.assignment.size(), 2u);
    EXPECT_EQ(cm.assignment[0], (std::pair<std::string, Element>{"p", kA}));
    EXPECT_EQ(cm.assignment[1], (std::pair<std::string, Element>{"q", kB}));
    EXPECT_EQ(cm.fold, kA);
    EXPECT_EQ(cm.succedent, kB);
    EXPECT_EQ(cm.fold_name, "a");
    EXPECT_EQ(cm.succedent_name, "b");
}

TEST(Decide, TwoVariableExamples) {
    EXPECT_TRUE(decide_two_var(S("q |- p \\/ (~p /\\ (p \\/ q))")).valid);
    auto ex = decide_two_var(S("q, p |- q"));
    ASSERT_FALSE(ex.valid);
    EXPECT_EQ(ex.countermodel->lattice, "MO2");
    auto pq = decide_two_var(S("p |- q"));
    ASSERT_FALSE(pq.valid);
    EXPECT_EQ(pq.countermodel->lattice, "2");
    EXPECT_THROW(decide_two_var(S("p, q |- r")), SemanticsError);
}

TEST(Decide, CountermodelSearchExamples) {
    auto a = countermodel_search(S("q, p |- q"), battery());
    ASSERT_FALSE(a.valid);
    EXPECT_EQ(a.countermodel->lattice, "MO2");
    auto b = countermodel_search(S("p, q |- p /\\ q"), battery());
    ASSERT_FALSE(b.valid);
    EXPECT_EQ(b.countermodel->lattice, "MO2");
    EXPECT_EQ(b.countermodel->fold, kB);
    EXPECT_EQ(b.countermodel->succedent, kBot);
    EXPECT_TRUE(countermodel_search(S("|- p \\/ ~p"), battery()).valid);
}

TEST(Decide, AgreesWithFreeLatticeOnRandomSequents) {
    std::mt19937 rng(5);
    const FiniteOML f = free_oml2();
    for (int i = 0; i < 60; ++i) {
        Sequent s = random_sequent(rng, {"p", "q"});
        EXPECT_EQ(decide_two_var(s).valid, validate_sequent(s, f).valid) << render(s);
    }
}

TEST(Classical, Examples) {
    EXPECT_TRUE(classical_valid(S("q, p |- q")));
    EXPECT_TRUE(classical_valid(S("(p -> q) -> p |- p")));
    EXPECT_FALSE(classical_valid(S("p |- q")));
    EXPECT_TRUE(classical_valid(S("|- p \\/ ~p")));
}

TEST(Classical, AgreesWithOracle) {
    std::mt19937 rng(17);
    for (int i = 0; i < 500; ++i) {
        Sequent s = random_sequent(rng, {"p", "q", "r"});
        // The oracle treats >< as true, which is classical compatibility.
        EXPECT_EQ(classical_valid(s), oracle_classical(s)) << render(s);
        if (validate_sequent(s, mo(2)).valid) {
            EXPECT_TRUE(classical_valid(s)) << render(s);
        }
        EXPECT_EQ(classical_valid(s), validate_sequent(s, boolean(1)).valid) << render(s);
    }
}

TEST(Predicate, Examples) {
    const FiniteOML m = mo(2);
    QStructure M = two_point(m, kA, kA_);
    Signature sig = Signature::open_single_sorted();
    EXPECT_EQ(eval_predicate(parse_formula("forall x. R(x)", sig), M, {}), kBot);
    EXPECT_EQ(eval_predicate(parse_formula("exists x. R(x)", sig), M, {}), kTop);
    QStructure one;
    one.lattice = m;
    one.domains[kDefaultSort] = 1;
    one.relations["R"] = {{{0}, kB}};
    EXPECT_EQ(eval_predicate(parse_formula("forall x. R(x)", sig), one, {}), kB);
    EXPECT_EQ(eval_predicate(parse_formula("R(x)", sig), M, {{"x", 1}}), kA_);
}

TEST(Predicate, UniversalBelowEveryInstance) {
    Signature sig = Signature::open_single_sorted();
    sig.constants["c"] = kDefaultSort;
    sig.constants["d"] = kDefaultSort;
    Formula all = parse_formula("forall x. R(x)", sig);
    Formula all_imp = parse_formula("forall x. (R(x) -> R(x) /\\ R(x))", sig);
    for (const FiniteOML& L : {boolean(1), mo(2)})
        for (Element r0 = 0; r0 < L.size(); ++r0)
            for (Element r1 = 0; r1 < L.size(); ++r1) {
                QStructure M = two_point(L, r0, r1);
                for (const Formula& f : {all, all_imp})
                    for (const char* c : {"c", "d"}) {
                        Formula inst = substitute(f.body(), f.bound(), Term::constant(c));
                        EXPECT_TRUE(L.leq(eval_predicate(f, M, {}), eval_predicate(inst, M, {})));
                    }
            }
}

TEST(Predicate, SequentTruthUsesTheFold) {
    Signature sig = Signature::open_single_sorted();
    sig.constants["c"] = kDefaultSort;
    const FiniteOML m = mo(2);
    QStructure M = two_point(m, kA, kB);
    EXPECT_TRUE(sequent_true(M, parse_sequent("forall x. R(x) |- R(c)", sig), {}));
    EXPECT_FALSE(sequent_true(M, parse_sequent("R(c) |- forall x. R(x)", sig), {}));
}
