#include "orthoproof/script.hpp"

#include <map>
#include <regex>
#include <sstream>

namespace orthoproof {

namespace {

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::string strip_comment(const std::string& s) {
    auto h = s.find('#');
    return h == std::string::npos ? s : s.substr(0, h);
}

std::vector<std::string> words(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    for (std::string w; in >> w;) out.push_back(w);
    return out;
}

bool starts_with(const std::string& s, const std::string& p) { return s.rfind(p, 0) == 0; }

// Splits "k1=v1 k2=some value" at each identifier followed by '='.
std::vector<std::pair<std::string, std::string>> split_args(const std::string& text, std::size_t line) {
    static const std::regex key(R"((^|\s)([A-Za-z_][A-Za-z0-9_']*)=)");
    std::vector<std::pair<std::string, std::string>> out;
    std::vector<std::pair<std::size_t, std::size_t>> marks;  // value start, key start
    std::vector<std::string> keys;
    for (auto it = std::sregex_iterator(text.begin(), text.end(), key); it != std::sregex_iterator(); ++it) {
        const auto& m = *it;
        keys.push_back(m[2].str());
        marks.emplace_back(m.position(0) + m.length(0), m.position(2));
    }
    std::string lead = trim(text.substr(0, marks.empty() ? text.size() : marks[0].second));
    if (!lead.empty()) throw ScriptError("unexpected '" + lead + "' (arguments are key=value)", line);
    for (std::size_t i = 0; i < marks.size(); ++i) {
        std::size_t end = i + 1 < marks.size() ? marks[i + 1].second : text.size();
        out.emplace_back(keys[i], trim(text.substr(marks[i].first, end - marks[i].first)));
    }
    return out;
}

Sequent parse_at(const std::string& text, const Signature& sig, std::size_t line) {
    try {
        return parse_sequent(text, sig);
    } catch (const std::exception& e) {
        throw ScriptError(std::string("bad sequent: ") + e.what(), line);
    }
}

ScriptLine parse_line(const std::string& label, const std::string& body, const Signature& sig, std::size_t line) {
    static const std::regex by(R"(\s+by\s+)");
    std::smatch m;
    if (!std::regex_search(body, m, by)) throw ScriptError("missing 'by' justification", line);
    ScriptLine out = parse_justification(m.suffix().str(), line);
    out.label = label;
    out.sequent = parse_at(trim(m.prefix().str()), sig, line);
    return out;
}

CatalogEntry primitive_entry(RuleId r) {
    auto schema = primitive_schema(r);
    CatalogEntry e;
    e.id = to_string(r);
    e.premises = schema->premises;
    e.conclusion = schema->conclusion;
    if (r == RuleId::all_e) e.constraint = Constraint::Substitution;
    return e;
}

bool has_pins(const ScriptLine& line) {
    for (const auto& kv : line.args)
        if (kv.first != "t" && kv.first != "x") return true;
    return false;
}

bool same_sequent(const Sequent& a, const Sequent& b) { return expand(a) == expand(b); }

std::string join_refs(const std::vector<ScriptRef>& refs) {
    std::string out;
    for (const auto& r : refs) {
        if (!out.empty()) out += ' ';
        out += r.hyp ? "hyp " + r.label : r.label;
    }
    return out;
}

}  // namespace

Signature ProofScript::signature() const {
    Signature sig = Signature::open_single_sorted();
    for (const auto& c : constants) sig.constants[c] = kDefaultSort;
    return sig;
}

ScriptLine parse_justification(const std::string& text, std::size_t line) {
    ScriptLine out;
    out.source_line = line;
    std::string just = " " + trim(text) + " ";
    std::string refs;
    static const std::regex from(R"(\sfrom\s)");
    std::smatch fm;
    if (std::regex_search(just, fm, from)) {
        refs = fm.suffix().str();
        just = fm.prefix().str();
    }
    just = trim(just);
    auto head_end = just.find_first_of(" \t");
    std::string head = just.substr(0, head_end);
    std::string rest = head_end == std::string::npos ? "" : trim(just.substr(head_end));

    if (head == "derived" || head == "hyp") {
        auto id_end = rest.find_first_of(" \t");
        std::string id = rest.substr(0, id_end);
        if (id.empty()) throw ScriptError("'" + head + "' needs a name", line);
        rest = id_end == std::string::npos ? "" : trim(rest.substr(id_end));
        if (head == "derived") {
            if (!lookup(id)) throw ScriptError("unknown catalog entry '" + id + "'", line);
            out.kind = ScriptLine::Kind::Derived;
            out.catalog_id = id;
        } else {
            out.kind = ScriptLine::Kind::Hypothesis;
            out.hyp = id;
        }
    } else {
        auto r = rule_from_string(head);
        if (!r) throw ScriptError("unknown rule '" + head + "'", line);
        out.kind = ScriptLine::Kind::Primitive;
        out.rule = *r;
    }
    out.args = split_args(rest, line);

    auto ws = words(refs);
    for (std::size_t i = 0; i < ws.size(); ++i) {
        if (ws[i] == "|") continue;
        if (ws[i] == "hyp") {
            if (i + 1 >= ws.size()) throw ScriptError("'hyp' needs a name", line);
            out.refs.push_back({true, ws[++i]});
        } else {
            out.refs.push_back({false, ws[i]});
        }
    }
    return out;
}

std::vector<ProofScript> parse_scripts(const std::string& text) {
    std::vector<ProofScript> out;
    std::optional<ProofScript> cur;
    bool have_goal = false;
    std::istringstream in(text);
    std::string raw;
    std::size_t n = 0;
    while (std::getline(in, raw)) {
        ++n;
        std::string s = trim(strip_comment(raw));
        if (s.empty()) continue;
        if (!cur) {
            auto w = words(s);
            if (w.size() != 3 || w[0] != "theorem" || !starts_with(w[2], "mode="))
                throw ScriptError("expected 'theorem NAME mode=MODE'", n);
            auto mode = mode_from_string(w[2].substr(5));
            if (!mode) throw ScriptError("unknown mode '" + w[2].substr(5) + "'", n);
            cur = ProofScript{};
            cur->name = w[1];
            cur->mode = *mode;
            cur->source_line = n;
            have_goal = false;
            continue;
        }
        if (s == "qed") {
            if (!have_goal) throw ScriptError("theorem " + cur->name + " has no goal", n);
            if (cur->lines.empty()) throw ScriptError("theorem " + cur->name + " has no lines", n);
            out.push_back(std::move(*cur));
            cur.reset();
            continue;
        }
        if (starts_with(s, "const ") || s == "const") {
            if (have_goal || !cur->hyps.empty()) throw ScriptError("'const' must precede hypotheses and goal", n);
            auto w = words(s);
            cur->constants.insert(cur->constants.end(), w.begin() + 1, w.end());
            continue;
        }
        auto colon = s.find(':');
        if (colon == std::string::npos) throw ScriptError("expected 'LABEL: SEQUENT by RULE'", n);
        std::string head = trim(s.substr(0, colon));
        std::string body = trim(s.substr(colon + 1));
        Signature sig = cur->signature();
        if (starts_with(head, "hyp ")) {
            if (have_goal) throw ScriptError("hypotheses must precede the goal", n);
            std::string name = trim(head.substr(4));
            for (const auto& h : cur->hyps)
                if (h.first == name) throw ScriptError("duplicate hypothesis " + name, n);
            cur->hyps.emplace_back(name, parse_at(body, sig, n));
        } else if (head == "goal") {
            if (have_goal) throw ScriptError("duplicate goal", n);
            cur->goal = parse_at(body, sig, n);
            have_goal = true;
        } else {
            if (!have_goal) throw ScriptError("goal must precede the proof lines", n);
            if (head.empty() || head.find_first_of(" \t") != std::string::npos)
                throw ScriptError("bad line label '" + head + "'", n);
            for (const auto& l : cur->lines)
                if (l.label == head) throw ScriptError("duplicate line label " + head, n);
            cur->lines.push_back(parse_line(head, body, sig, n));
        }
    }
    if (cur) throw ScriptError("theorem " + cur->name + " is missing 'qed'", n);
    return out;
}

Instantiation line_instantiation(const ScriptLine& line, const Signature& sig) {
    Instantiation inst;
    for (const auto& [k, v] : line.args) {
        if (k == "t") inst.term = parse_term(v, sig);
        if (k == "x") inst.var = Variable{v, sig.default_sort()};
    }
    return inst;
}

Inst line_pins(const ScriptLine& line, const Signature& sig) {
    Inst pins;
    for (const auto& [k, v] : line.args) {
        if (k == "t") {
            pins.t = parse_term(v, sig);
        } else if (k == "x") {
            pins.x = Variable{v, sig.default_sort()};
        } else if (k == "G" || k == "D") {
            std::vector<Formula> list;
            if (!v.empty()) list = parse_sequent(v + " |- _", sig).antecedent;
            if (k == "G")
                pins.with_gamma(std::move(list));
            else
                pins.with_delta(std::move(list));
        } else {
            pins.set(k, parse_formula(v, sig));
        }
    }
    return pins;
}

ScriptReport check_script(const ProofScript& s) {
    ScriptReport rep;
    rep.name = s.name;
    rep.mode = s.mode;
    Signature sig = s.signature();

    std::vector<Sequent> hyps;
    std::map<std::string, Sequent> hyp_by_name;
    for (const auto& [name, seq] : s.hyps) {
        hyps.push_back(seq);
        hyp_by_name.emplace(name, seq);
    }

    std::map<std::string, std::optional<Derivation>> done;  // nullopt marks a failed line
    bool all_ok = true;
    std::optional<Derivation> last;

    for (const auto& line : s.lines) {
        LineReport lr{line.label, true, "ok"};
        auto fail = [&](const std::string& msg) {
            lr.ok = false;
            lr.message = msg;
        };
        std::vector<Derivation> prem;
        for (const auto& r : line.refs) {
            if (!lr.ok) break;
            if (r.hyp) {
                auto h = hyp_by_name.find(r.label);
                if (h == hyp_by_name.end())
                    fail("undeclared hypothesis " + r.label);
                else
                    prem.push_back(Derivation::hypothesis(h->second));
                continue;
            }
            auto d = done.find(r.label);
            if (d == done.end())
                fail("reference to line " + r.label + " which does not precede this line");
            else if (!d->second)
                fail("depends on failed line " + r.label);
            else
                prem.push_back(*d->second);
        }
        std::optional<Derivation> result;
        if (lr.ok) {
            try {
                std::vector<Sequent> prem_seq;
                for (const auto& p : prem) prem_seq.push_back(p.conclusion());
                switch (line.kind) {
                    case ScriptLine::Kind::Hypothesis: {
                        auto h = hyp_by_name.find(line.hyp);
                        if (h == hyp_by_name.end())
                            fail("undeclared hypothesis " + line.hyp);
                        else if (!line.refs.empty())
                            fail("a hypothesis line takes no premises");
                        else if (!(h->second == line.sequent))
                            fail("sequent differs from hypothesis " + line.hyp + ": " + render(h->second));
                        else
                            result = Derivation::hypothesis(h->second);
                        break;
                    }
                    case ScriptLine::Kind::Primitive: {
                        Instantiation inst = line_instantiation(line, sig);
                        auto c = check_inference(line.rule, prem_seq, line.sequent, s.mode, inst);
                        if (c && has_pins(line) &&
                            !match_entry(primitive_entry(line.rule), prem_seq, line.sequent, line_pins(line, sig)))
                            fail("arguments do not agree with the line");
                        else if (!c)
                            fail(to_string(line.rule) + ": " + c.violation.message);
                        else
                            result = Derivation::rule(line.rule, prem, line.sequent, inst);
                        break;
                    }
                    case ScriptLine::Kind::Derived: {
                        const CatalogEntry* e = lookup(line.catalog_id);
                        if (!e->allows(s.mode)) {
                            fail(e->id + " is not available in mode " + to_string(s.mode));
                            break;
                        }
                        auto inst = match_entry(*e, prem_seq, line.sequent, line_pins(line, sig));
                        if (!inst) {
                            fail("line is not an instance of " + e->id + " (" + join_refs(line.refs) + ")");
                            break;
                        }
                        Derivation d = derive(e->id, *inst, prem, s.mode);
                        auto c = check_derivation(d, s.mode, hyps);
                        if (!c) {
                            std::string msg = e->id + " expansion rejected: " + c.violation.message;
                            if (e->admissible) msg += " (admissible rule needs premises without open hypotheses)";
                            fail(msg);
                        } else {
                            result = d.with_conclusion(line.sequent);
                        }
                        break;
                    }
                }
            } catch (const ScriptError& e) {
                fail(e.what());
            } catch (const std::exception& e) {
                fail(e.what());
            }
        }
        if (!lr.ok) all_ok = false;
        done[line.label] = result;
        last = result;
        rep.lines.push_back(std::move(lr));
    }

    if (all_ok && last) {
        auto c = check_derivation(*last, s.mode, hyps);
        if (!c) {
            all_ok = false;
            rep.error = "final derivation rejected: " + c.violation.message;
        } else if (!same_sequent(last->conclusion(), s.goal)) {
            all_ok = false;
            rep.error = "last line " + render(last->conclusion()) + " does not match goal " + render(s.goal);
        } else {
            rep.derivation = last->with_conclusion(s.goal);
        }
    }
    rep.accepted = all_ok;
    return rep;
}

Sequent forward(const ScriptLine& line, const std::vector<Sequent>& premises, const Signature& sig) {
    CatalogEntry tmp;
    const CatalogEntry* e = nullptr;
    if (line.kind == ScriptLine::Kind::Derived) {
        e = lookup(line.catalog_id);
        if (!e) throw TacticError("unknown catalog entry " + line.catalog_id);
    } else if (line.kind == ScriptLine::Kind::Primitive) {
        tmp = primitive_entry(line.rule);
        e = &tmp;
    } else {
        throw TacticError("hypothesis lines have no forward form");
    }
    if (premises.size() != e->premises.size())
        throw TacticError(e->id + " takes " + std::to_string(e->premises.size()) + " premise(s), got " +
                          std::to_string(premises.size()));
    Inst pins = line_pins(line, sig);
    if (premises.empty() && !pins.has_gamma) pins.with_gamma({});
    if (premises.empty() && !pins.has_delta) pins.with_delta({});
    if (line.kind == ScriptLine::Kind::Primitive && line.rule == RuleId::all_i && !pins.x)
        pins.x = Variable{"x", sig.default_sort()};
    auto inst = match_entry(*e, premises, std::nullopt, pins);
    if (!inst) throw TacticError("premises do not match " + e->id);
    return instantiate(e->conclusion, complete(*e, *inst));
}

std::string format_script(const ProofScript& s) {
    std::ostringstream out;
    out << "theorem " << s.name << " mode=" << to_string(s.mode) << "\n";
    if (!s.constants.empty()) {
        out << "  const";
        for (const auto& c : s.constants) out << ' ' << c;
        out << "\n";
    }
    for (const auto& [name, seq] : s.hyps) out << "  hyp " << name << ": " << render(seq) << "\n";
    out << "  goal: " << render(s.goal) << "\n";
    for (const auto& l : s.lines) {
        out << "  " << l.label << ": " << render(l.sequent) << " by ";
        switch (l.kind) {
            case ScriptLine::Kind::Primitive: out << to_string(l.rule); break;
            case ScriptLine::Kind::Derived: out << "derived " << l.catalog_id; break;
            case ScriptLine::Kind::Hypothesis: out << "hyp " << l.hyp; break;
        }
        for (const auto& [k, v] : l.args) out << ' ' << k << '=' << v;
        if (!l.refs.empty()) out << " from " << join_refs(l.refs);
        out << "\n";
    }
    out << "qed\n";
    return out.str();
}

}  // namespace orthoproof
