#include "gsb/cli.hpp"

#include "gsb/speciality.hpp"
#include "gsb/text.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace gsb {

namespace {

// Output document: scalar fields then named lists, printed either as text
// or as flat `key = value` lines.
struct Doc {
    std::vector<std::pair<std::string, std::string>> meta;
    std::vector<std::pair<std::string, std::vector<std::string>>> lists;

    void set(const std::string& k, const std::string& v) { meta.emplace_back(k, v); }
    void set(const std::string& k, std::size_t v) { meta.emplace_back(k, std::to_string(v)); }
    void flag(const std::string& k, bool v) { meta.emplace_back(k, v ? "true" : "false"); }
    std::vector<std::string>& list(const std::string& name)
    {
        lists.emplace_back(name, std::vector<std::string>{});
        return lists.back().second;
    }

    void print(std::ostream& out, bool machine) const
    {
        if (machine) {
            for (const auto& [k, v] : meta) out << k << " = " << v << "\n";
            for (const auto& [name, items] : lists) {
                out << name << ".count = " << items.size() << "\n";
                for (std::size_t i = 0; i < items.size(); ++i) out << name << "." << i << " = " << items[i] << "\n";
            }
            return;
        }
        for (const auto& [k, v] : meta) out << "# " << k << ": " << v << "\n";
        for (const auto& [name, items] : lists) {
            if (lists.size() > 1) out << "## " << name << "\n";
            for (const auto& item : items) out << item << "\n";
        }
    }
};

struct Common {
    std::string file;
    std::string format = "text";
    unsigned threads = 1;
    int max_x = -1, max_y = -1;
    std::string elem, witness;
};

std::string read_input(const std::string& file, std::istream& in)
{
    std::stringstream ss;
    if (file == "-") {
        ss << in.rdbuf();
    } else {
        std::ifstream f(file);
        if (!f) throw std::runtime_error("cannot open " + file);
        ss << f.rdbuf();
    }
    return ss.str();
}

std::string caps_text(const Caps& c)
{
    return "x<=" + std::to_string(c.max_x_deg) + " y<=" + std::to_string(c.max_y_deg);
}

void header(Doc& d, const std::string& command, const LiePresentation& p)
{
    d.set("command", command);
    d.set("field", p.field.name());
}

void caps_meta(Doc& d, const Caps& c)
{
    d.set("caps", caps_text(c));
}

Caps required_caps(const Common& o)
{
    return Caps{static_cast<unsigned>(o.max_x), static_cast<unsigned>(o.max_y)};
}

// Caps for nf and wp when none are given: the element's own degrees, raised
// to the Y-degree of the relations.
Caps default_caps(const Common& o, const LiePresentation& p, const LieElement& e)
{
    Caps c{std::max(1u, x_degree(e)), y_degree(e)};
    for (const auto& s : p.s) c.max_y_deg = std::max(c.max_y_deg, y_degree(s));
    for (const auto& r : p.r)
        for (const auto& [m, k] : r.terms()) c.max_y_deg = std::max(c.max_y_deg, m.degree());
    if (o.max_x >= 0) c.max_x_deg = static_cast<unsigned>(o.max_x);
    if (o.max_y >= 0) c.max_y_deg = static_cast<unsigned>(o.max_y);
    return c;
}

std::string render_word(const MixedMonomial& w, const LiePresentation& p)
{
    return render(AssocElement(p.field, w), p);
}

Doc cmd_complete(const LiePresentation& p, const Common& o)
{
    const Caps caps = required_caps(o);
    const auto res = shirshov_complete(lie_ideal_generators(p, r_degree_cap(p, caps)), p.x_names.size(), caps,
                                       CompletionOptions{o.threads});
    Doc d;
    header(d, "complete", p);
    caps_meta(d, caps);
    d.set("rounds", res.rounds);
    d.set("compositions", res.compositions);
    d.set("discarded", res.discarded);
    d.set("size", res.basis.size());
    auto& items = d.list("basis");
    for (const auto& e : res.basis) items.push_back(render(e, p));
    return d;
}

Doc cmd_check(const LiePresentation& p, const Common& o)
{
    const Caps caps = required_caps(o);
    const auto res = is_gsb(lie_ideal_generators(p, r_degree_cap(p, caps)), p.x_names.size(), caps, o.threads);
    Doc d;
    header(d, "check", p);
    caps_meta(d, caps);
    d.flag("gsb", res.ok);
    d.set("checked", res.checked);
    d.set("failures", res.failures.size());
    auto& items = d.list("failure");
    for (const auto& f : res.failures)
        items.push_back(to_string(f.kind) + " f=" + std::to_string(f.f + 1) + " g=" + std::to_string(f.g + 1) +
                        " w=" + render_word(f.w, p) + " remainder=" + render(f.value, p));
    return d;
}

Doc cmd_irr(const LiePresentation& p, const Common& o)
{
    const Caps caps = required_caps(o);
    const auto res = shirshov_complete(lie_ideal_generators(p, r_degree_cap(p, caps)), p.x_names.size(), caps,
                                       CompletionOptions{o.threads});
    const auto irr = irr_basis(res.basis, p.x_names.size(), p.y_names.size(), caps);
    Doc d;
    header(d, "irr", p);
    caps_meta(d, caps);
    d.set("discarded", res.discarded);
    d.set("size", irr.size());
    auto& items = d.list("irr");
    for (const auto& m : irr) items.push_back(render_monomial(m, p));
    return d;
}

Doc cmd_nf(const LiePresentation& p, const Common& o)
{
    if (o.elem.empty()) throw CLI::RequiredError("--elem");
    const LieElement e = parse_lie_element(o.elem, p);
    const Caps caps = default_caps(o, p, e);
    const auto res = shirshov_complete(lie_ideal_generators(p, r_degree_cap(p, caps)), p.x_names.size(), caps,
                                       CompletionOptions{o.threads});
    Doc d;
    header(d, "nf", p);
    caps_meta(d, caps);
    d.set("discarded", res.discarded);
    d.list("nf").push_back(render(nf(e, res.basis, caps), p));
    return d;
}

Doc cmd_envelope(const LiePresentation& p, const Common&)
{
    const AssocPresentation a = envelope(p);
    Doc d;
    header(d, "envelope", p);
    auto join = [](const std::vector<std::string>& v) {
        std::string s;
        for (const auto& n : v) s += (s.empty() ? "" : " ") + n;
        return s;
    };
    d.set("ygens", join(a.y_names));
    d.set("xgens", join(a.x_names));
    auto& r = d.list("rrels");
    for (const auto& e : a.r) r.push_back(render(e, p));
    auto& s = d.list("srels");
    for (const auto& e : a.s) s.push_back(render(e, p));
    return d;
}

Doc report_doc(const SpecialityReport& rep, const LiePresentation& p)
{
    Doc d;
    header(d, "special", p);
    caps_meta(d, rep.caps);
    d.set("verdict", to_string(rep.verdict));
    d.flag("exact", rep.exact);
    d.set("lie_basis", rep.lie_basis_size);
    d.set("assoc_basis", rep.assoc_basis_size);
    d.set("lie_discarded", rep.lie_discarded);
    d.set("assoc_discarded", rep.assoc_discarded);
    if (rep.witness) {
        d.set("witness", render(*rep.witness, p));
        d.set("nf_lie", render(*rep.nf_lie, p));
        d.set("nf_assoc", render(*rep.nf_assoc, p));
        d.set("lie_steps", rep.lie_trace->steps.size());
        d.set("assoc_steps", rep.assoc_trace->steps.size());
    } else {
        d.set("irr_checked", rep.irr_checked);
    }
    auto& reasons = d.list("reason");
    for (const auto& r : rep.reasons) reasons.push_back(r);
    return d;
}

Doc cmd_special(const LiePresentation& p, const Common& o)
{
    const Caps caps = required_caps(o);
    const SpecialityOptions opts{o.threads};
    if (o.witness.empty()) return report_doc(check_speciality_criterion(p, caps, opts), p);
    return report_doc(nonspeciality_witness(p, parse_lie_element(o.witness, p), caps, opts), p);
}

Doc cmd_wp(const LiePresentation& p, const Common& o)
{
    if (o.elem.empty()) throw CLI::RequiredError("--elem");
    if (!p.r.empty() || !p.y_names.empty())
        throw std::invalid_argument("wp needs a presentation without Y generators");
    const LieElement e = parse_lie_element(o.elem, p);
    Doc d;
    header(d, "wp", p);
    caps_meta(d, Caps{x_degree(e), 0});
    d.flag("zero", word_problem_homogeneous(e, p.s, p.x_names.size()));
    return d;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err)
{
    CLI::App app("Groebner-Shirshov bases for Lie algebras over commutative algebras", "gsb");
    app.require_subcommand(1);
    Common o;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("file", o.file, "presentation file, or - for stdin")->required();
        sub->add_option("--format", o.format, "text or machine")->check(CLI::IsMember({"text", "machine"}));
        sub->add_option("--threads", o.threads, "worker threads")->check(CLI::Range(1u, 256u));
    };
    auto add_caps = [&](CLI::App* sub, bool required) {
        auto* x = sub->add_option("--max-x-deg", o.max_x, "X-degree cap")->check(CLI::NonNegativeNumber);
        auto* y = sub->add_option("--max-y-deg", o.max_y, "Y-degree cap")->check(CLI::NonNegativeNumber);
        if (required) {
            x->required();
            y->required();
        }
    };

    auto* complete = app.add_subcommand("complete", "capped Shirshov completion");
    auto* check = app.add_subcommand("check", "test whether S u RX is a GSB up to the caps");
    auto* irr = app.add_subcommand("irr", "the Irr basis up to the caps");
    auto* nf_cmd = app.add_subcommand("nf", "normal form of an element");
    auto* env = app.add_subcommand("envelope", "the universal enveloping presentation");
    auto* special = app.add_subcommand("special", "speciality criterion or non-speciality witness");
    auto* embed = app.add_subcommand("embed2", "embedding into a two-generated algebra");
    auto* wp = app.add_subcommand("wp", "word problem for X-homogeneous relations");
    for (auto* s : {complete, check, irr, nf_cmd, env, special, embed, wp}) add_common(s);
    for (auto* s : {complete, check, irr, special}) add_caps(s, true);
    add_caps(nf_cmd, false);
    nf_cmd->add_option("--elem", o.elem, "element")->required();
    wp->add_option("--elem", o.elem, "element")->required();
    special->add_option("--witness", o.witness, "candidate non-speciality witness");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        const LiePresentation p = parse_presentation(read_input(o.file, in));
        Doc d;
        if (complete->parsed()) d = cmd_complete(p, o);
        else if (check->parsed()) d = cmd_check(p, o);
        else if (irr->parsed()) d = cmd_irr(p, o);
        else if (nf_cmd->parsed()) d = cmd_nf(p, o);
        else if (env->parsed()) d = cmd_envelope(p, o);
        else if (special->parsed()) d = cmd_special(p, o);
        else if (wp->parsed()) d = cmd_wp(p, o);
        else if (embed->parsed()) {
            const LiePresentation e = embed_two_generated(p);
            if (o.format == "text") {
                out << render_presentation(e);
                return exit_ok;
            }
            header(d, "embed2", e);
            auto& lines = d.list("line");
            std::istringstream ss(render_presentation(e));
            for (std::string l; std::getline(ss, l);) lines.push_back(l);
        }
        d.print(out, o.format == "machine");
        return exit_ok;
    } catch (const BudgetExceeded& e) {
        err << "gsb: budget exceeded: " << e.what() << "\n";
        return exit_budget;
    } catch (const CapsExceeded& e) {
        err << "gsb: caps exceeded: " << e.what() << "\n";
        return exit_budget;
    } catch (const ParseError& e) {
        err << "gsb: " << (o.file == "-" ? "<stdin>" : o.file) << ":" << e.what() << "\n";
        return exit_usage;
    } catch (const CLI::Error& e) {
        err << "gsb: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        err << "gsb: " << e.what() << "\n";
        return exit_usage;
    }
}

}  // namespace gsb
