#include "orthoproof/lattice.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace orthoproof {

namespace {

// Greatest common lower bound (or least upper bound when up is set), found as
// the bound with the most elements beneath (above) it and then checked.
Element bound(const std::vector<bool>& leq, std::size_t n, const std::vector<std::size_t>& below,
              const std::vector<std::size_t>& above, Element a, Element b, bool up) {
    auto le = [&](Element x, Element y) { return up ? leq[y * n + x] : leq[x * n + y]; };
    Element best = kNoElement;
    for (Element c = 0; c < n; ++c) {
        if (!le(c, a) || !le(c, b)) continue;
        if (best == kNoElement || (up ? above[c] > above[best] : below[c] > below[best])) best = c;
    }
    if (best == kNoElement) return best;
    for (Element c = 0; c < n; ++c)
        if (le(c, a) && le(c, b) && !le(c, best)) return kNoElement;
    return best;
}

std::string elem(const FiniteOML& L, Element a) { return L.element_name(a) + "#" + std::to_string(a); }

}  // namespace

FiniteOML FiniteOML::from_order(std::string name, std::vector<std::string> element_names,
                                std::vector<std::vector<bool>> leq, std::vector<Element> neg) {
    FiniteOML L;
    L.name_ = std::move(name);
    L.n_ = element_names.size();
    L.names_ = std::move(element_names);
    const std::size_t n = L.n_;
    L.leq_.assign(n * n, false);
    for (std::size_t i = 0; i < n && i < leq.size(); ++i)
        for (std::size_t j = 0; j < n && j < leq[i].size(); ++j) L.leq_[i * n + j] = leq[i][j];
    L.neg_ = std::move(neg);
    L.neg_.resize(n, kNoElement);

    std::vector<std::size_t> below(n, 0), above(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (L.leq_[i * n + j]) {
                ++below[j];
                ++above[i];
            }
    for (Element c = 0; c < n; ++c) {
        if (below[c] == 1 && above[c] == n && L.bottom_ == kNoElement) L.bottom_ = c;
        if (above[c] == 1 && below[c] == n && L.top_ == kNoElement) L.top_ = c;
    }
    if (n == 1) L.bottom_ = L.top_ = 0;

    L.meet_.assign(n * n, kNoElement);
    L.join_.assign(n * n, kNoElement);
    for (Element a = 0; a < n; ++a)
        for (Element b = a; b < n; ++b) {
            L.meet_[a * n + b] = L.meet_[b * n + a] = bound(L.leq_, n, below, above, a, b, false);
            L.join_[a * n + b] = L.join_[b * n + a] = bound(L.leq_, n, below, above, a, b, true);
        }

    L.sasaki_and_.assign(n * n, kNoElement);
    L.sasaki_arrow_.assign(n * n, kNoElement);
    auto ok = [&](Element x) { return x < n; };
    for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b) {
            Element na = L.neg_[a], nb = L.neg_[b];
            if (!ok(na) || !ok(nb)) continue;
            Element j = L.join(a, nb);
            if (ok(j)) L.sasaki_and_[a * n + b] = L.meet(j, b);
            Element m = L.meet(a, b);
            if (ok(m)) L.sasaki_arrow_[a * n + b] = L.join(na, m);
        }
    return L;
}

std::optional<Element> FiniteOML::find(const std::string& element_name) const {
    for (Element i = 0; i < n_; ++i)
        if (names_[i] == element_name) return i;
    return std::nullopt;
}

FiniteOML& FiniteOML::with_generators(std::vector<Element> g) {
    generators_ = std::move(g);
    return *this;
}

FiniteOML& FiniteOML::renamed(std::string name) {
    name_ = std::move(name);
    return *this;
}

std::optional<OmlFailure> verify_oml(const FiniteOML& L) {
    const std::size_t n = L.size();
    auto fail = [&](std::string axiom, std::vector<Element> es, std::string msg) {
        return OmlFailure{std::move(axiom), std::move(es), std::move(msg)};
    };
    if (n == 0) return fail("nonempty", {}, "lattice has no elements");
    for (Element a = 0; a < n; ++a)
        if (L.neg_[a] >= n) return fail("negation", {a}, "no negation for " + elem(L, a));

    for (Element a = 0; a < n; ++a)
        if (!L.leq(a, a)) return fail("reflexivity", {a}, elem(L, a) + " is not <= itself");
    for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b) {
            if (a != b && L.leq(a, b) && L.leq(b, a))
                return fail("antisymmetry", {a, b}, elem(L, a) + " and " + elem(L, b) + " are mutually <=");
            if (!L.leq(a, b)) continue;
            for (Element c = 0; c < n; ++c)
                if (L.leq(b, c) && !L.leq(a, c))
                    return fail("transitivity", {a, b, c}, elem(L, a) + " <= " + elem(L, b) + " <= " + elem(L, c));
        }
    if (L.bottom() == kNoElement) return fail("bottom", {}, "no least element");
    if (L.top() == kNoElement) return fail("top", {}, "no greatest element");
    for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b) {
            if (L.meet(a, b) == kNoElement)
                return fail("meet", {a, b}, "no greatest lower bound of " + elem(L, a) + " and " + elem(L, b));
            if (L.join(a, b) == kNoElement)
                return fail("join", {a, b}, "no least upper bound of " + elem(L, a) + " and " + elem(L, b));
        }
    for (Element a = 0; a < n; ++a) {
        Element na = L.neg(a);
        if (L.neg(na) != a) return fail("involution", {a}, "~~" + elem(L, a) + " != " + elem(L, a));
        if (L.meet(a, na) != L.bottom())
            return fail("complement", {a}, elem(L, a) + " ^ ~" + elem(L, a) + " is not bottom");
        if (L.join(a, na) != L.top()) return fail("complement", {a}, elem(L, a) + " v ~" + elem(L, a) + " is not top");
        for (Element b = 0; b < n; ++b)
            if (L.leq(a, b) && !L.leq(L.neg(b), na))
                return fail("antitone", {a, b}, elem(L, a) + " <= " + elem(L, b) + " but ~b is not <= ~a");
    }
    for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b)
            if (L.leq(a, b) && L.join(a, L.meet(L.neg(a), b)) != b)
                return fail("orthomodular law", {a, b},
                            elem(L, a) + " <= " + elem(L, b) + " but a v (~a ^ b) = " +
                                elem(L, L.join(a, L.meet(L.neg(a), b))));
    return std::nullopt;
}

FiniteOML boolean(std::size_t k) {
    const std::size_t n = std::size_t{1} << k;
    std::vector<std::string> names(n);
    std::vector<std::vector<bool>> leq(n, std::vector<bool>(n));
    std::vector<Element> neg(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (k <= 1) {
            names[i] = std::to_string(i);
        } else {
            for (std::size_t bit = k; bit-- > 0;) names[i] += (i >> bit & 1) ? '1' : '0';
        }
        neg[i] = (n - 1) ^ i;
        for (std::size_t j = 0; j < n; ++j) leq[i][j] = (i & j) == i;
    }
    return FiniteOML::from_order(k == 1 ? "2" : "2^" + std::to_string(k), std::move(names), std::move(leq),
                                 std::move(neg));
}

FiniteOML mo(std::size_t m) {
    const std::size_t n = 2 * m + 2;
    std::vector<std::string> names(n);
    std::vector<std::vector<bool>> leq(n, std::vector<bool>(n));
    std::vector<Element> neg(n);
    names[0] = "0";
    names[n - 1] = "1";
    neg[0] = n - 1;
    neg[n - 1] = 0;
    for (std::size_t i = 0; i < m; ++i) {
        std::string base = m <= 26 ? std::string(1, static_cast<char>('a' + i)) : "a" + std::to_string(i);
        names[1 + 2 * i] = base;
        names[2 + 2 * i] = base + "'";
        neg[1 + 2 * i] = 2 + 2 * i;
        neg[2 + 2 * i] = 1 + 2 * i;
    }
    for (std::size_t i = 0; i < n; ++i) {
        leq[i][i] = true;
        leq[0][i] = true;
        leq[i][n - 1] = true;
    }
    return FiniteOML::from_order("MO" + std::to_string(m), std::move(names), std::move(leq), std::move(neg));
}

FiniteOML product(const FiniteOML& a, const FiniteOML& b) {
    const std::size_t na = a.size(), nb = b.size(), n = na * nb;
    std::vector<std::string> names(n);
    std::vector<std::vector<bool>> leq(n, std::vector<bool>(n));
    std::vector<Element> neg(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t ia = i / nb, ib = i % nb;
        names[i] = "(" + a.element_name(ia) + "," + b.element_name(ib) + ")";
        neg[i] = a.neg(ia) * nb + b.neg(ib);
        for (std::size_t j = 0; j < n; ++j) leq[i][j] = a.leq(ia, j / nb) && b.leq(ib, j % nb);
    }
    return FiniteOML::from_order(a.name() + "x" + b.name(), std::move(names), std::move(leq), std::move(neg));
}

FiniteOML free_oml2() {
    // First pair in lexicographic index order whose generated subalgebra is
    // the whole lattice (found by exhaustive search; see the lattice tests).
    FiniteOML L = product(boolean(4), mo(2));
    L.renamed("F2").with_generators({19, 33});
    return L;
}

std::vector<Element> generated_subalgebra(const FiniteOML& L, const std::vector<Element>& seeds) {
    std::vector<bool> in(L.size(), false);
    std::vector<Element> members;
    auto add = [&](Element e) {
        if (in[e]) return false;
        in[e] = true;
        members.push_back(e);
        return true;
    };
    add(L.bottom());
    add(L.top());
    for (Element s : seeds) add(s);
    for (bool grew = true; grew;) {
        grew = false;
        std::vector<Element> snapshot = members;
        for (Element a : snapshot) {
            grew |= add(L.neg(a));
            for (Element b : snapshot) {
                grew |= add(L.meet(a, b));
                grew |= add(L.join(a, b));
            }
        }
    }
    std::vector<Element> out;
    for (Element e = 0; e < L.size(); ++e)
        if (in[e]) out.push_back(e);
    return out;
}

std::optional<FiniteOML> builtin_lattice(const std::string& name) {
    if (name == "2") return boolean(1);
    if (name == "2^2") return boolean(2);
    if (name == "MO2") return mo(2);
    if (name == "2xMO2") return product(boolean(1), mo(2));
    if (name == "F2") return free_oml2();
    return std::nullopt;
}

const std::vector<FiniteOML>& battery() {
    static const std::vector<FiniteOML> b = {boolean(1), boolean(2), mo(2), product(boolean(1), mo(2)), free_oml2()};
    return b;
}

FiniteOML parse_lattice(const std::string& text, const std::string& name) {
    std::istringstream in(text);
    std::string raw;
    std::size_t line = 0, n = 0;
    bool header = false;
    std::vector<std::vector<bool>> leq;
    std::vector<Element> neg;
    auto error = [&](const std::string& msg) { return LatticeFileError("line " + std::to_string(line) + ": " + msg); };
    auto index = [&](const std::string& tok) -> Element {
        std::size_t pos = 0;
        unsigned long v = 0;
        try {
            v = std::stoul(tok, &pos);
        } catch (const std::exception&) {
            pos = 0;
        }
        if (pos != tok.size() || tok.empty() || tok[0] == '-') throw error("bad element index '" + tok + "'");
        if (v >= n) throw error("element " + tok + " out of range");
        return v;
    };
    while (std::getline(in, raw)) {
        ++line;
        auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        std::istringstream ws(raw);
        std::vector<std::string> w;
        for (std::string t; ws >> t;) w.push_back(t);
        if (w.empty()) continue;
        if (!header) {
            if (w.size() != 2 || w[0] != "oml") throw error("expected 'oml N' header");
            std::size_t pos = 0;
            try {
                n = std::stoul(w[1], &pos);
            } catch (const std::exception&) {
                pos = 0;
            }
            if (pos != w[1].size() || n == 0) throw error("bad element count '" + w[1] + "'");
            leq.assign(n, std::vector<bool>(n, false));
            for (std::size_t i = 0; i < n; ++i) leq[i][i] = true;
            neg.assign(n, kNoElement);
            header = true;
            continue;
        }
        if (w.size() != 3 || (w[0] != "leq" && w[0] != "neg")) throw error("expected 'leq I J' or 'neg I J'");
        Element i = index(w[1]), j = index(w[2]);
        if (w[0] == "leq") {
            leq[i][j] = true;
        } else {
            if (neg[i] != kNoElement && neg[i] != j) throw error("conflicting negation for " + w[1]);
            neg[i] = j;
        }
    }
    if (!header) throw LatticeFileError("missing 'oml N' header");
    for (std::size_t i = 0; i < n; ++i)
        if (neg[i] == kNoElement) {
            for (std::size_t j = 0; j < n; ++j)
                if (neg[j] == i) neg[i] = j;
            if (neg[i] == kNoElement) throw LatticeFileError("no negation given for element " + std::to_string(i));
        }
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            if (leq[i][k])
                for (std::size_t j = 0; j < n; ++j)
                    if (leq[k][j]) leq[i][j] = true;
    std::vector<std::string> names(n);
    for (std::size_t i = 0; i < n; ++i) names[i] = std::to_string(i);
    FiniteOML L = FiniteOML::from_order(name, std::move(names), std::move(leq), std::move(neg));
    if (auto f = verify_oml(L)) throw LatticeFileError("not an orthomodular lattice: " + f->axiom + ": " + f->message);
    return L;
}

FiniteOML load_lattice(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw LatticeFileError("cannot open " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    std::string name = path;
    auto slash = name.find_last_of('/');
    if (slash != std::string::npos) name = name.substr(slash + 1);
    return parse_lattice(ss.str(), name);
}

}  // namespace orthoproof
