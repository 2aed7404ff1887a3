#include <gtest/gtest.h>

#include <sstream>

#include "cli.hpp"

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result run(std::vector<std::string> args, const std::string& input = "") {
    std::istringstream in(input);
    std::ostringstream out, err;
    int code = orthoproof::cli::run(args, in, out, err);
    return {code, out.str(), err.str()};
}

std::string src(const std::string& rel) { return std::string(ORTHOPROOF_SOURCE_DIR) + "/" + rel; }

bool has(const std::string& text, const std::string& needle) { return text.find(needle) != std::string::npos; }

}  // namespace

TEST(Cli, Decide2OrthomodularLaw) {
    auto r = run({"decide2", "q |- p \\/ (~p /\\ (p \\/ q))"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "VALID (complete for 2 letters)\n");
}

TEST(Cli, Decide2RejectsThreeLetters) { EXPECT_EQ(run({"decide2", "p, q |- r"}).code, 2); }

TEST(Cli, CountermodelForExchange) {
    auto r = run({"countermodel", "q, p |- q"});
    EXPECT_EQ(r.code, 1);
    EXPECT_EQ(r.out, "COUNTERMODEL in MO2: p=1 (a) q=3 (b); fold=1 (a), succedent=3 (b)\n");
    auto t = run({"--format", "tsv", "countermodel", "q, p |- q"});
    EXPECT_EQ(t.out, "COUNTERMODEL\tMO2\tp=1\tq=3\tfold=1\tsuccedent=3\n");
}

TEST(Cli, CountermodelNoneFound) {
    auto two = run({"countermodel", "|- p \\/ ~p"});
    EXPECT_EQ(two.code, 0);
    EXPECT_TRUE(has(two.out, "complete for 2 letters"));
    auto three = run({"countermodel", "p, q |- r -> r"});
    EXPECT_EQ(three.code, 0);
    EXPECT_TRUE(has(three.out, "not a validity certificate"));
}

TEST(Cli, CheckFiles) {
    auto a = run({"check", src("proofs/thm32_axioms.nom")});
    EXPECT_EQ(a.code, 0);
    EXPECT_TRUE(has(a.out, "7/7 theorems accepted"));
    auto e = run({"check", src("proofs/exchange_nom.nom")});
    EXPECT_EQ(e.code, 1);
    EXPECT_TRUE(has(e.out, "REJECTED"));
    EXPECT_TRUE(has(e.out, "line 2:"));
    auto both = run({"check", src("proofs/rules.nom"), src("proofs/quantifiers.nom")});
    EXPECT_EQ(both.code, 0);
    EXPECT_TRUE(has(both.out, "7/7 theorems accepted"));
}

TEST(Cli, CheckTsv) {
    auto r = run({"--format", "tsv", "check", src("proofs/exchange_nom.nom")});
    EXPECT_EQ(r.code, 1);
    EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "file\ttheorem\tmode\tline\tstatus\tmessage");
    EXPECT_TRUE(has(r.out, "\tax_k_without_exchange\tNOM\t2\trejected\t"));
}

TEST(Cli, CheckMissingFile) {
    auto r = run({"check", "/nonexistent.nom"});
    EXPECT_EQ(r.code, 2);
    EXPECT_FALSE(r.err.empty());
}

TEST(Cli, ValidateAndClassical) {
    EXPECT_EQ(run({"validate", "q |- p \\/ (~p /\\ (p \\/ q))", "--lattice", "MO2"}).out, "VALID in MO2\n");
    EXPECT_EQ(run({"validate", "p /\\ (q \\/ r) |- (p /\\ q) \\/ (p /\\ r)", "--lattice", "MO2"}).code, 1);
    EXPECT_EQ(run({"validate", "p |- p", "--lattice", "MO7"}).code, 2);
    EXPECT_EQ(run({"validate", "p |- p", "--lattice-file", src("lattices/mo3.oml")}).code, 0);
    auto o6 = run({"validate", "p |- p", "--lattice-file", src("lattices/o6.oml")});
    EXPECT_EQ(o6.code, 2);
    EXPECT_TRUE(has(o6.err, "orthomodular law"));
    EXPECT_EQ(run({"classical", "(p -> q) -> p |- p"}).out, "CLASSICALLY VALID\n");
    EXPECT_EQ(run({"classical", "p |- q"}).code, 1);
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
    EXPECT_EQ(run({"decide2", "p |-"}).code, 2);
}

TEST(Cli, HilbertVerifyIsDeterministic) {
    auto a = run({"hilbert-verify", "--trials", "40", "--seed", "3"});
    auto b = run({"hilbert-verify", "--trials", "40", "--seed", "3"});
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    EXPECT_TRUE(has(a.out, "sasaki-closure"));
    EXPECT_TRUE(has(a.out, "seed 3"));
}

TEST(Cli, Catalog) {
    auto r = run({"catalog"});
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(has(r.out, "P4.14"));
    EXPECT_TRUE(has(r.out, "101 entries"));
}

TEST(Repl, ImplicationIntroduction) {
    auto r = run({"repl", "--mode", "NOM"}, "goal |- p -> p\napply assume phi=p\napply imp_i from 1\nquit\n");
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(has(r.out, "2: |- p -> p"));
    EXPECT_TRUE(has(r.out, "goal reached"));
}

TEST(Repl, ExchangeRejectedInNom) {
    auto r = run({"repl", "--mode", "NOM"}, "have q, p |- p by assume\napply exch from 1\nquit\n");
    EXPECT_TRUE(has(r.out, "rejected:"));
    EXPECT_TRUE(has(r.out, "not available in mode NOM"));
}

TEST(Repl, DerivedRuleAndExport) {
    auto r = run({"repl", "--mode", "NOM"},
                 "hyp g |- p\nhyp g |- p -> q\nderived P2.1 from 1 2\nexport\nquit\n");
    EXPECT_TRUE(has(r.out, "3: g |- q"));
    EXPECT_TRUE(has(r.out, "theorem session mode=NOM"));
    EXPECT_TRUE(has(r.out, "re-check: ACCEPTED"));
}

TEST(Repl, ExportVerdictMatchesCheckScript) {
    auto r = run({"repl", "--mode", "NOM_E"},
                 "goal |- p -> q -> p\nhave q, p |- p by assume\napply exch from 1\napply imp_i from 2\n"
                 "apply imp_i from 3\nexport\nquit\n");
    EXPECT_TRUE(has(r.out, "goal reached"));
    EXPECT_TRUE(has(r.out, "re-check: ACCEPTED"));
}
