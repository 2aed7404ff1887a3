#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>

#include "orthoproof/hilbert.hpp"
#include "orthoproof/kernel.hpp"
#include "orthoproof/lattice.hpp"
#include "orthoproof/script.hpp"
#include "orthoproof/semantics.hpp"
#include "orthoproof/syntax.hpp"
#include "orthoproof/tactics.hpp"

namespace orthoproof::cli {

namespace {

constexpr int kOk = 0;
constexpr int kRejected = 1;
constexpr int kUsage = 2;

struct Output {
    std::ostream& out;
    bool tsv = false;
};

std::string read_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

std::size_t letter_count(const Sequent& s) {
    auto ls = letters(s);
    return std::set<std::string>(ls.begin(), ls.end()).size();
}

void print_countermodel(const Output& o, const Countermodel& c) {
    if (o.tsv) {
        o.out << "COUNTERMODEL\t" << c.lattice;
        for (const auto& [l, e] : c.assignment) o.out << '\t' << l << '=' << e;
        o.out << "\tfold=" << c.fold << "\tsuccedent=" << c.succedent << "\n";
        return;
    }
    o.out << "COUNTERMODEL in " << c.lattice << ":";
    for (std::size_t i = 0; i < c.assignment.size(); ++i)
        o.out << ' ' << c.assignment[i].first << '=' << c.assignment[i].second << " (" << c.element_names[i] << ")";
    o.out << "; fold=" << c.fold << " (" << c.fold_name << "), succedent=" << c.succedent << " (" << c.succedent_name
          << ")\n";
}

int cmd_check(const Output& o, const std::vector<std::string>& files, std::ostream& err) {
    std::size_t total = 0, accepted = 0;
    if (o.tsv) o.out << "file\ttheorem\tmode\tline\tstatus\tmessage\n";
    for (const auto& path : files) {
        std::vector<ProofScript> scripts;
        try {
            scripts = parse_scripts(read_file(path));
        } catch (const std::exception& e) {
            err << path << ": " << e.what() << "\n";
            return kUsage;
        }
        if (!o.tsv) o.out << path << "\n";
        for (const auto& s : scripts) {
            ScriptReport r = check_script(s);
            ++total;
            if (r.accepted) ++accepted;
            std::string status = r.accepted ? "ACCEPTED" : "REJECTED";
            if (o.tsv) {
                for (const auto& l : r.lines)
                    o.out << path << '\t' << s.name << '\t' << to_string(s.mode) << '\t' << l.label << '\t'
                          << (l.ok ? "ok" : "rejected") << '\t' << l.message << "\n";
                o.out << path << '\t' << s.name << '\t' << to_string(s.mode) << "\t-\t" << status << '\t' << r.error
                      << "\n";
                continue;
            }
            o.out << "  theorem " << s.name << " mode=" << to_string(s.mode) << ": " << status << "\n";
            for (const auto& l : r.lines)
                if (!l.ok) o.out << "    line " << l.label << ": " << l.message << "\n";
            if (!r.error.empty()) o.out << "    " << r.error << "\n";
        }
    }
    if (!o.tsv) o.out << accepted << "/" << total << " theorems accepted\n";
    return accepted == total ? kOk : kRejected;
}

int report_verdict(const Output& o, const Verdict& v, const std::string& valid_text) {
    if (v) {
        o.out << valid_text << "\n";
        return kOk;
    }
    print_countermodel(o, *v.countermodel);
    return kRejected;
}

int cmd_hilbert(const Output& o, std::optional<long> dim, std::size_t trials, std::uint64_t seed, std::ostream& err) {
    if (dim && (*dim < 1 || *dim > 64)) {
        err << "--dim must be between 1 and 64\n";
        return kUsage;
    }
    auto rows = hilbert::property_sweep(dim ? std::optional<Eigen::Index>(*dim) : std::nullopt, trials, seed);
    bool ok = true;
    std::ostringstream w, t;
    w << std::scientific << std::setprecision(2);
    if (o.tsv) o.out << "check\tinstances\tfailures\tworst\ttolerance\tstatus\n";
    for (const auto& r : rows) {
        ok = ok && r.failures == 0;
        w.str("");
        w << r.worst;
        t.str("");
        t << std::scientific << std::setprecision(0) << r.tolerance;
        const char* status = r.failures == 0 ? "PASS" : "FAIL";
        if (o.tsv)
            o.out << r.name << '\t' << r.instances << '\t' << r.failures << '\t' << w.str() << '\t' << t.str() << '\t'
                  << status << "\n";
        else
            o.out << std::left << std::setw(26) << r.name << std::right << std::setw(6) << r.instances
                  << " instances  " << std::setw(4) << r.failures << " failures  worst " << w.str() << "  tol "
                  << t.str() << "  " << status << "\n";
    }
    if (!o.tsv)
        o.out << "seed " << seed << ", rank threshold " << hilbert::kRankTolerance << ", "
              << (dim ? "dim " + std::to_string(*dim) : std::string("dims 2-6 / 2-4")) << "\n";
    return ok ? kOk : kRejected;
}

int cmd_catalog(const Output& o) {
    if (o.tsv) o.out << "id\tmodes\tlocus\tpremises\tconclusion\n";
    for (const auto& e : catalog()) {
        std::string modes;
        for (Mode m : e.modes) modes += (modes.empty() ? "" : ",") + to_string(m);
        std::string prem;
        for (const auto& p : e.premises) prem += (prem.empty() ? "" : "; ") + p;
        if (o.tsv)
            o.out << e.id << '\t' << modes << '\t' << e.locus << '\t' << prem << '\t' << e.conclusion << "\n";
        else
            o.out << std::left << std::setw(14) << e.id << e.locus << "\n    " << (prem.empty() ? "" : prem + "  =>  ")
                  << e.conclusion << "   [" << modes << "]\n";
    }
    if (!o.tsv) o.out << catalog().size() << " entries\n";
    return kOk;
}

// Interactive forward proof session. State is a proof script that grows one
// checked line at a time.
class Repl {
public:
    Repl(Mode mode, std::ostream& out) : out_(out) {
        script_.name = "session";
        script_.mode = mode;
    }

    int loop(std::istream& in) {
        out_ << "orthoproof repl, mode " << to_string(script_.mode) << " (type 'help')\n";
        std::string line;
        while (prompt(), std::getline(in, line)) {
            std::string cmd = trim(line);
            if (cmd.empty() || cmd[0] == '#') continue;
            if (cmd == "quit" || cmd == "exit") break;
            try {
                dispatch(cmd);
            } catch (const std::exception& e) {
                out_ << "error: " << e.what() << "\n";
            }
        }
        return kOk;
    }

private:
    static std::string trim(const std::string& s) {
        auto b = s.find_first_not_of(" \t\r");
        if (b == std::string::npos) return "";
        return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
    }

    void prompt() { out_ << "> " << std::flush; }

    void dispatch(const std::string& cmd) {
        auto sp = cmd.find(' ');
        std::string head = cmd.substr(0, sp);
        std::string rest = sp == std::string::npos ? "" : trim(cmd.substr(sp + 1));
        if (head == "help") {
            out_ << "  const c d            declare constants\n"
                    "  hyp SEQUENT          add a hypothesis (and a line restating it)\n"
                    "  goal SEQUENT         set the goal\n"
                    "  apply RULE [k=v] [from REFS]\n"
                    "  derived ID [k=v] [from REFS]\n"
                    "  have SEQUENT by JUSTIFICATION\n"
                    "  show | undo | export [FILE] | quit\n";
        } else if (head == "const") {
            std::istringstream ws(rest);
            for (std::string c; ws >> c;) script_.constants.push_back(c);
        } else if (head == "hyp") {
            std::string name = "H" + std::to_string(script_.hyps.size() + 1);
            script_.hyps.emplace_back(name, parse_sequent(rest, script_.signature()));
            ScriptLine l;
            l.kind = ScriptLine::Kind::Hypothesis;
            l.hyp = name;
            l.sequent = script_.hyps.back().second;
            if (!add(std::move(l))) script_.hyps.pop_back();
        } else if (head == "goal") {
            goal_ = parse_sequent(rest, script_.signature());
            out_ << "goal: " << render(*goal_) << "\n";
            reached();
        } else if (head == "apply" || head == "derived") {
            ScriptLine l = parse_justification(head == "derived" ? cmd : rest);
            l.sequent = forward(l, premises(l), script_.signature());
            add(std::move(l));
        } else if (head == "have") {
            auto by = rest.find(" by ");
            if (by == std::string::npos) throw std::runtime_error("expected 'have SEQUENT by JUSTIFICATION'");
            ScriptLine l = parse_justification(rest.substr(by + 4));
            l.sequent = parse_sequent(rest.substr(0, by), script_.signature());
            add(std::move(l));
        } else if (head == "show") {
            show();
        } else if (head == "undo") {
            if (script_.lines.empty()) throw std::runtime_error("nothing to undo");
            const auto& l = script_.lines.back();
            if (l.kind == ScriptLine::Kind::Hypothesis && !script_.hyps.empty() && script_.hyps.back().first == l.hyp)
                script_.hyps.pop_back();
            script_.lines.pop_back();
            out_ << "removed last line\n";
        } else if (head == "export") {
            do_export(rest);
        } else {
            throw std::runtime_error("unknown command '" + head + "' (try 'help')");
        }
    }

    std::vector<Sequent> premises(const ScriptLine& l) const {
        std::vector<Sequent> out;
        for (const auto& r : l.refs) {
            bool found = false;
            if (r.hyp) {
                for (const auto& [name, s] : script_.hyps)
                    if (name == r.label) {
                        out.push_back(s);
                        found = true;
                    }
            } else {
                for (const auto& x : script_.lines)
                    if (x.label == r.label) {
                        out.push_back(x.sequent);
                        found = true;
                    }
            }
            if (!found) throw std::runtime_error("no line " + std::string(r.hyp ? "hyp " : "") + r.label);
        }
        return out;
    }

    ProofScript snapshot() const {
        ProofScript s = script_;
        s.goal = goal_ ? *goal_ : (s.lines.empty() ? Sequent{} : s.lines.back().sequent);
        return s;
    }

    bool add(ScriptLine l) {
        l.label = std::to_string(script_.lines.size() + 1);
        script_.lines.push_back(l);
        ProofScript s = snapshot();
        if (!goal_) s.goal = l.sequent;
        ScriptReport r = check_script(s);
        const LineReport& last = r.lines.back();
        if (!last.ok) {
            script_.lines.pop_back();
            out_ << "rejected: " << last.message << "\n";
            return false;
        }
        out_ << l.label << ": " << render(l.sequent) << "\n";
        reached();
        return true;
    }

    void reached() {
        if (goal_ && !script_.lines.empty() && expand(script_.lines.back().sequent) == expand(*goal_))
            out_ << "goal reached\n";
    }

    void show() {
        for (const auto& [name, s] : script_.hyps) out_ << "  hyp " << name << ": " << render(s) << "\n";
        if (goal_) out_ << "  goal: " << render(*goal_) << "\n";
        for (const auto& l : script_.lines) out_ << "  " << l.label << ": " << render(l.sequent) << "\n";
    }

    void do_export(const std::string& path) {
        if (script_.lines.empty()) throw std::runtime_error("nothing to export");
        ProofScript s = snapshot();
        std::string text = format_script(s);
        ScriptReport r = check_script(parse_scripts(text).at(0));
        if (path.empty()) {
            out_ << text;
        } else {
            std::ofstream f(path);
            if (!f) throw std::runtime_error("cannot write " + path);
            f << text;
            out_ << "wrote " << path << "\n";
        }
        out_ << "re-check: " << (r.accepted ? "ACCEPTED" : "REJECTED") << (r.error.empty() ? "" : " (" + r.error + ")")
             << "\n";
    }

    std::ostream& out_;
    ProofScript script_;
    std::optional<Sequent> goal_;
};

std::uint64_t default_seed() {
    if (const char* s = std::getenv("ORTHOPROOF_SEED")) {
        try {
            return std::stoull(s);
        } catch (const std::exception&) {
        }
    }
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Orthomodular natural deduction: proof checking, lattice semantics and Hilbert-space checks",
                 "orthoproof"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format = "plain";
    app.add_option("--format", format, "Report format")->check(CLI::IsMember({"plain", "tsv"}));

    std::vector<std::string> files;
    auto* check = app.add_subcommand("check", "Check proof script files");
    check->add_option("files", files, "Script files")->required();

    std::string sequent, lattice_name, lattice_file;
    auto* validate = app.add_subcommand("validate", "Validate a sequent in one finite orthomodular lattice");
    validate->add_option("sequent", sequent)->required();
    auto* lat_opt = validate->add_option("--lattice", lattice_name, "2, 2^2, MO2, 2xMO2 or F2")
                        ->check(CLI::IsMember({"2", "2^2", "MO2", "2xMO2", "F2"}));
    validate->add_option("--lattice-file", lattice_file, "Lattice description file")->excludes(lat_opt);

    auto* decide2 = app.add_subcommand("decide2", "Decide a sequent in at most two letters");
    decide2->add_option("sequent", sequent)->required();
    auto* counter = app.add_subcommand("countermodel", "Search the lattice battery for a countermodel");
    counter->add_option("sequent", sequent)->required();
    auto* classical = app.add_subcommand("classical", "Truth-table validity");
    classical->add_option("sequent", sequent)->required();

    std::optional<long> dim;
    std::size_t trials = 200;
    std::uint64_t seed = default_seed();
    auto* hv = app.add_subcommand("hilbert-verify", "Random subspace property checks");
    hv->add_option("--dim", dim, "Fixed ambient dimension");
    hv->add_option("--trials", trials, "Instances per check")->capture_default_str();
    hv->add_option("--seed", seed, "Random seed (default ORTHOPROOF_SEED or 0)");

    auto* catalog_sub = app.add_subcommand("catalog", "List catalog entries");

    std::string mode_name = "NOM";
    auto* repl = app.add_subcommand("repl", "Interactive forward proof session");
    repl->add_option("--mode", mode_name)->check(CLI::IsMember({"NOM", "NOM_E", "NOM_Q", "NOM_q"}));

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    Output o{out, format == "tsv"};
    try {
        if (*check) return cmd_check(o, files, err);
        if (*catalog_sub) return cmd_catalog(o);
        if (*hv) return cmd_hilbert(o, dim, trials, seed, err);
        if (*repl) return Repl(*mode_from_string(mode_name), out).loop(in);

        Sequent s = parse_sequent(sequent);
        if (*validate) {
            if (lattice_name.empty() && lattice_file.empty()) {
                err << "validate needs --lattice or --lattice-file\n";
                return kUsage;
            }
            FiniteOML L = lattice_file.empty() ? *builtin_lattice(lattice_name) : load_lattice(lattice_file);
            return report_verdict(o, validate_sequent(s, L), "VALID in " + L.name());
        }
        if (*decide2) {
            if (letter_count(s) > 2) {
                err << "decide2 handles at most two letters\n";
                return kUsage;
            }
            return report_verdict(o, decide_two_var(s), "VALID (complete for 2 letters)");
        }
        if (*counter) {
            std::string none = letter_count(s) <= 2
                                   ? "no countermodel found in battery (VALID: complete for 2 letters)"
                                   : "no countermodel found in battery (2, 2^2, MO2, 2xMO2, F2; not a validity "
                                     "certificate for 3 or more letters)";
            return report_verdict(o, countermodel_search(s, battery()), none);
        }
        if (*classical) {
            bool v = classical_valid(s);
            out << (v ? "CLASSICALLY VALID" : "NOT CLASSICALLY VALID") << "\n";
            return v ? kOk : kRejected;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}

}  // namespace orthoproof::cli
