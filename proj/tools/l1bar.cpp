// l1bar: command-line front end for the bar-complex workbench.
//
// Exit codes: 0 success, 1 mathematical failure (axiom violated, not a
// boundary, certificate rejected), 2 input error.

#include <chrono>
#include <filesystem>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "l1bar/complex.hpp"
#include "l1bar/io.hpp"
#include "l1bar/mitosis.hpp"
#include "l1bar/pipeline.hpp"
#include "l1bar/products.hpp"

using namespace l1bar;
namespace fs = std::filesystem;

namespace {

constexpr const char* kVersion = "0.1.0";

/// Thrown for mathematical failures; the report is still emitted.
struct MathFailure
{
    std::string message;
};

struct Options
{
    bool json_out = false;
    std::string out;
    std::size_t cap = 0;
};

class Report
{
    public:
        Report(std::string command, const Options& opts) : command_(std::move(command)), opts_(opts) {}

        void line(const std::string& s) { lines_.push_back(s); }
        json& record() { return record_; }

        void emit(double ms) const
        {
            std::ostringstream os;
            if (opts_.json_out)
            {
                json j = record_;
                j["command"] = command_;
                j["version"] = kVersion;
                j["elapsed_ms"] = ms;
                os << j.dump(2) << '\n';
            }
            else
                for (const auto& l : lines_)
                    os << l << '\n';
            std::cout << os.str();
        }

    private:
        std::string command_;
        const Options& opts_;
        std::vector<std::string> lines_;
        json record_ = json::object();
};

std::size_t cap_of(const Options& o)
{
    return o.cap ? o.cap : size_cap_from_env();
}

void save(const Options& o, const json& cert, Report& r)
{
    if (o.out.empty())
        return;
    write_json(o.out, cert);
    r.line("certificate written to " + o.out);
    r.record()["certificate_path"] = o.out;
}

std::string tuple_text(const Tuple& t, const Group& g)
{
    return format_tuple(g, t);
}

void print_chain(Report& r, const Chain& c)
{
    if (c.is_zero())
        r.line("0");
    for (const auto& [t, v] : c.terms())
        r.line(to_string(v) + " " + tuple_text(t, *c.group()));
}

Chain read_chain(const std::string& path, const GroupPtr& g, std::optional<int> degree = std::nullopt)
{
    json j = read_json(path);
    try
    {
        if (j.is_object())
        {
            if (j.contains("degree"))
                degree = static_cast<int>(j["degree"].get<long long>());
            if (!j.contains("terms"))
                throw ParseError("$: missing field 'terms'");
            return parse_chain(j["terms"], g, degree);
        }
        return parse_chain(j, g, degree);
    }
    catch (const ParseError& e)
    {
        throw ParseError(path + ":" + e.what());
    }
}

Cochain read_cochain(const std::string& path, const GroupPtr& g)
{
    try
    {
        return parse_cochain(read_json(path), g);
    }
    catch (const ParseError& e)
    {
        throw ParseError(path + ":" + e.what());
    }
}

// --- subcommands -----------------------------------------------------------

void cmd_group_check(const std::string& path, Report& r)
{
    GroupPtr g;
    try
    {
        g = read_group(path);
    }
    catch (const GroupError& e)
    {
        r.record()["ok"] = false;
        r.record()["error"] = e.what();
        throw MathFailure{e.what()};
    }
    auto v = check_group_axioms(*g);
    r.record()["kind"] = g->kind();
    r.record()["finite"] = g->is_finite();
    r.line("kind: " + g->kind());
    if (g->is_finite())
    {
        r.record()["order"] = g->order();
        r.line("order: " + std::to_string(g->order()));
        r.record()["abelian"] = is_abelian(*g);
        r.line(std::string("abelian: ") + (is_abelian(*g) ? "yes" : "no"));
    }
    else
        r.line("order: infinite");
    r.record()["ok"] = !v;
    if (v)
    {
        r.record()["violation"] = {{"axiom", v->axiom}, {"witness", v->witness}};
        throw MathFailure{v->axiom + " fails at " + v->witness};
    }
    r.line("axioms: ok");
}

void cmd_boundary(const std::string& gpath, int k, const std::string& chain, const Options& o, Report& r)
{
    GroupPtr g = read_group(gpath);
    if (!chain.empty())
    {
        Chain c = read_chain(chain, g);
        Chain d = boundary(c);
        r.record()["boundary"] = chain_to_json(d);
        print_chain(r, d);
        return;
    }
    if (k < 1)
        throw ParseError("--degree must be at least 1 for the boundary matrix");
    auto m = boundary_matrix(g, k, cap_of(o));
    std::ostringstream os;
    m.write_triplets(os);
    std::string text = os.str();
    if (!text.empty() && text.back() == '\n')
        text.pop_back();
    r.record()["rows"] = m.target.size();
    r.record()["cols"] = m.source.size();
    r.record()["triplets"] = text;
    r.line("# d_" + std::to_string(k) + ": " + std::to_string(m.source.size()) + " columns -> "
           + std::to_string(m.target.size()) + " rows");
    if (!text.empty())
        r.line(text);
}

void cmd_homology(const std::string& gpath, int k, const Options& o, Report& r)
{
    GroupPtr g = read_group(gpath);
    std::size_t b = betti(g, k, cap_of(o));
    r.record()["degree"] = k;
    r.record()["rank"] = b;
    r.line("H_" + std::to_string(k) + " rank: " + std::to_string(b));
}

void cmd_fill(const std::string& gpath, const std::string& chain, const Options& o, Report& r)
{
    GroupPtr g = read_group(gpath);
    Chain z = read_chain(chain, g);
    FillCertificate cert = [&] {
        try
        {
            return fill_min(z);
        }
        catch (const NotABoundaryError& e)
        {
            throw MathFailure{e.what()};
        }
        catch (const SupportExhaustedError& e)
        {
            throw MathFailure{e.what()};
        }
    }();
    json c = fill_certificate(cert);
    r.record()["result"] = c;
    r.line("norm |z| = " + to_string(l1_norm(z)));
    r.line("norm |c| = " + to_string(l1_norm(cert.c)));
    r.line("ratio = " + to_string(cert.ratio));
    r.line("primitive:");
    print_chain(r, cert.c);
    save(o, c, r);
}

void cmd_kappa(const std::string& gpath, int q, std::size_t samples, std::uint64_t seed, const Options& o,
               Report& r)
{
    GroupPtr g = read_group(gpath);
    UbcOptions opts;
    opts.samples = samples;
    opts.seed = seed;
    opts.cap = cap_of(o);
    UbcConstant k = ubc_kappa_exact(g, q, opts);
    json c = kappa_certificate(k);
    r.record()["kappa"] = to_string(k.kappa);
    r.record()["upper"] = to_string(k.upper);
    r.record()["exact"] = k.exact;
    r.record()["method"] = k.method;
    if (k.exact)
        r.line("kappa = " + to_string(k.kappa) + " (exact, " + k.method + ")");
    else
        r.line("kappa in [" + to_string(k.kappa) + ", " + to_string(k.upper) + "] (" + k.method + ")");
    save(o, c, r);
}

void cmd_cross(const std::string& lg, const std::string& rg, const std::string& a, const std::string& b, Report& r)
{
    GroupPtr g = read_group(lg), h = read_group(rg);
    Chain x = cross_chain(read_chain(a, g), read_chain(b, h));
    r.record()["cross"] = chain_to_json(x);
    print_chain(r, x);
}

void cmd_cup(const std::string& gpath, const std::string& f, const std::string& gc, const std::string& chain,
             Report& r)
{
    GroupPtr g = read_group(gpath);
    Cochain u = cup(read_cochain(f, g), read_cochain(gc, g));
    if (!chain.empty())
    {
        Rational v = kronecker(u, read_chain(chain, g));
        r.record()["value"] = to_string(v);
        r.line("<f cup g, c> = " + to_string(v));
        return;
    }
    if (!g->is_finite())
        throw ParseError("cup over an infinite group needs --chain to evaluate on");
    json j = cochain_to_json(u);
    r.record()["cup"] = j;
    r.line("degree " + std::to_string(u.degree()));
    for (const auto& rec : j["values"])
    {
        std::string t;
        for (const auto& x : rec["tuple"])
            t += (t.empty() ? "" : ", ") + x.get<std::string>();
        r.line(rec["value"].get<std::string>() + " (" + t + ")");
    }
}

void cmd_pair(const std::string& lg, const std::string& rg, const std::string& f, const std::string& gc,
              const std::string& c, const std::string& d, Report& r)
{
    GroupPtr g = read_group(lg), h = read_group(rg);
    PairingReport p = pair_compat_check(read_cochain(f, g), read_cochain(gc, h), read_chain(c, g), read_chain(d, h));
    r.record()["lhs"] = to_string(p.lhs);
    r.record()["rhs"] = to_string(p.rhs);
    r.record()["holds"] = p.holds;
    r.line("<f x g, c x d> = " + to_string(p.lhs));
    r.line("(-1)^(pq) <f,c><g,d> = " + to_string(p.rhs));
    r.line(std::string("compatible: ") + (p.holds ? "yes" : "no"));
    if (!p.holds)
        throw MathFailure{"cross-product pairing mismatch"};
}

void describe_report(const MitosisReport& m, Report& r)
{
    auto row = [&](const char* name, const AxiomStatus& a) {
        std::string s = std::string(name) + ": ";
        s += !a.checked ? "unchecked" : a.holds ? "ok" : "FAILS";
        s += " (" + std::to_string(a.domain) + " checked)";
        if (!a.witness.empty())
            s += " witness " + a.witness;
        r.line(s);
    };
    row("injective", m.injective);
    row("axiom 1 (generation)", m.generation);
    row("axiom 2 (g^d = g g^s)", m.doubling);
    row("axiom 3 ([g', g^s] = 1)", m.commuting);
    r.line(std::string("exhaustive: ") + (m.exhaustive ? "yes" : "no"));
}

void cmd_mitosis_verify(const std::string& path, Report& r)
{
    MitosisData m = [&] {
        try
        {
            return build_mitosis(read_json(path), fs::path(path).parent_path());
        }
        catch (const ParseError& e)
        {
            throw ParseError(path + ":" + e.what());
        }
    }();
    MitosisReport rep = verify_mitosis(m);
    r.record()["report"] = rep.to_json();
    r.line("ambient order: " + (m.ambient->is_finite() ? std::to_string(m.ambient->order()) : "infinite"));
    describe_report(rep, r);
    if (!rep.ok())
        throw MathFailure{"mitosis axioms violated"};
}

void cmd_mitosis_build(const std::string& gpath, const Options& o, Report& r)
{
    GroupPtr g = read_group(gpath);
    MitosisData m = [&] {
        try
        {
            return mitosis_of_finite_abelian(g);
        }
        catch (const MitosisError& e)
        {
            throw MathFailure{e.what()};
        }
    }();
    MitosisReport rep = verify_mitosis(m);
    json j = mitosis_to_json(m);
    r.record()["mitosis"] = j;
    r.record()["report"] = rep.to_json();
    r.line("ambient order: " + std::to_string(m.ambient->order()));
    r.line("s = " + m.ambient->format(m.s));
    r.line("d = " + m.ambient->format(m.d));
    describe_report(rep, r);
    if (!o.out.empty())
    {
        write_json(o.out, j);
        r.line("mitosis written to " + o.out);
    }
    if (!rep.ok())
        throw MathFailure{"mitosis axioms violated"};
}

void cmd_pipeline(const std::string& path, const std::string& chain, std::size_t samples, std::uint64_t seed,
                  const Options& o, Report& r)
{
    PipelineConfig cfg = [&] {
        try
        {
            return build_pipeline_config(read_json(path), fs::path(path).parent_path());
        }
        catch (const ParseError& e)
        {
            throw ParseError(path + ":" + e.what());
        }
    }();
    if (o.cap)
        cfg.cap = o.cap;
    Pipeline p(cfg);
    const GroupPtr h = cfg.phi.source();
    std::vector<Chain> inputs;
    if (!chain.empty())
        inputs.push_back(read_chain(chain, h, cfg.degree));
    else
    {
        std::mt19937_64 rng(seed);
        while (inputs.size() < samples)
            if (Chain z = boundary(random_chain(h, cfg.degree + 1, rng)); !z.is_zero())
                inputs.push_back(z);
    }
    std::vector<PipelineResult> runs;
    for (const auto& z : inputs)
        runs.push_back(p.run(z));
    json cert = pipeline_certificate(cfg, runs);
    const json& batch = cert["batch"];
    Rational bound = parse_rational(batch["bound"].get<std::string>());
    Rational worst = 0;
    bool ok = true;
    for (const auto& x : runs)
    {
        worst = std::max(worst, x.ratio);
        ok = ok && x.ratio <= bound;
    }
    r.record()["runs"] = runs.size();
    r.record()["max_ratio"] = to_string(worst);
    r.record()["batch"] = batch;
    r.record()["within_bound"] = ok;
    r.line("runs: " + std::to_string(runs.size()) + " (d c' = (i o f)_* z verified exactly on each)");
    r.line("kappa (sections): " + batch["kappa"].get<std::string>());
    r.line("xi (batch max): " + batch["xi"].get<std::string>());
    r.line("max ratio |c'|/|z|: " + to_string(worst));
    r.line("bound constant_c: " + batch["bound"].get<std::string>());
    save(o, cert, r);
    if (!ok)
        throw MathFailure{"observed ratio exceeds constant_c"};
}

void cmd_tower(int q_max, const std::string& xi, const Options& o, Report& r)
{
    Rational x = xi.empty() ? Rational(0) : parse_rational(xi);
    ConstantTower t = tower(q_max, [x](int) { return x; });
    json c = tower_certificate(t);
    r.record()["records"] = c["records"];
    r.line("q  n_q  kappa_q");
    for (const auto& rec : t.records)
        r.line(std::to_string(rec.q) + "  " + std::to_string(rec.n) + "  " + to_string(rec.kappa));
    save(o, c, r);
}

void cmd_verify(const std::string& path, Report& r)
{
    json cert = read_json(path);
    Verdict v = [&] {
        try
        {
            return verify_certificate(cert);
        }
        catch (const ParseError& e)
        {
            throw ParseError(path + ":" + e.what());
        }
    }();
    r.record()["ok"] = v.ok;
    if (!v.ok)
    {
        r.record()["reason"] = v.reason;
        r.line("REJECTED: " + v.reason);
        throw MathFailure{v.reason};
    }
    r.line("certificate verified (" + cert["certificate"].get<std::string>() + ")");
}

}   // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact l1 computations on the bar complex of discrete groups"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);
    Options o;
    app.add_flag("--json", o.json_out, "Machine-readable report");
    app.add_option("--out", o.out, "Write the certificate / artifact to this file");
    app.add_option("--cap", o.cap, "Cap on basis tuples (default from L1BAR_SIZE_CAP or 100000)");

    std::string group, chain, left_group, right_group, left, right, f, g, c, d, config, xi, cert;
    int degree = 1, q_max = 3;
    std::size_t samples = 100;
    std::uint64_t seed = 1;

    auto* grp = app.add_subcommand("group", "Group utilities");
    grp->require_subcommand(1);
    auto* grp_check = grp->add_subcommand("check", "Build a group file and check the group axioms");
    grp_check->add_option("--group", group, "Group file")->required();

    auto* bnd = app.add_subcommand("boundary", "Boundary of a chain, or the boundary matrix as triplets");
    bnd->add_option("--group", group, "Group file")->required();
    bnd->add_option("--degree", degree, "Degree k of d_k");
    bnd->add_option("--chain", chain, "Chain file");

    auto* hom = app.add_subcommand("homology", "Rational Betti number of a finite group");
    hom->add_option("--group", group, "Group file")->required();
    hom->add_option("--degree", degree, "Degree")->required();

    auto* fil = app.add_subcommand("fill", "l1-minimal filling of a boundary");
    fil->add_option("--group", group, "Group file")->required();
    fil->add_option("--chain", chain, "Chain file")->required();

    auto* kap = app.add_subcommand("kappa", "UBC constant of a finite group");
    kap->add_option("--group", group, "Group file")->required();
    kap->add_option("--degree", degree, "Degree q")->required();
    kap->add_option("--samples", samples, "Samples for the fallback lower bound");
    kap->add_option("--seed", seed, "Random seed");

    auto* crs = app.add_subcommand("cross", "Shuffle cross product of two chains");
    crs->add_option("--left-group", left_group)->required();
    crs->add_option("--right-group", right_group)->required();
    crs->add_option("--left", left, "Chain over the left group")->required();
    crs->add_option("--right", right, "Chain over the right group")->required();

    auto* cp = app.add_subcommand("cup", "Cup product of two cochains");
    cp->add_option("--group", group, "Group file")->required();
    cp->add_option("--f", f, "Cochain file")->required();
    cp->add_option("--g", g, "Cochain file")->required();
    cp->add_option("--chain", chain, "Evaluate on this chain instead of tabulating");

    auto* pr = app.add_subcommand("pair", "Check <f x g, c x d> = (-1)^(pq) <f,c><g,d>");
    pr->add_option("--left-group", left_group)->required();
    pr->add_option("--right-group", right_group)->required();
    pr->add_option("--f", f)->required();
    pr->add_option("--g", g)->required();
    pr->add_option("--c", c)->required();
    pr->add_option("--d", d)->required();

    auto* mit = app.add_subcommand("mitosis", "Mitosis data");
    mit->require_subcommand(1);
    auto* mit_verify = mit->add_subcommand("verify", "Check the mitosis axioms");
    mit_verify->add_option("--mitosis", config, "Mitosis file")->required();
    auto* mit_build = mit->add_subcommand("build-abelian", "Build (G x G) x| <phi, psi> for finite abelian G");
    mit_build->add_option("--group", group, "Group file")->required();

    auto* pip = app.add_subcommand("pipeline", "Explicit primitives through a mitosis");
    pip->add_option("--config", config, "Pipeline configuration file")->required();
    pip->add_option("--chain", chain, "Single input boundary (default: sampled)");
    pip->add_option("--samples", samples, "Number of sampled boundaries");
    pip->add_option("--seed", seed, "Random seed");

    auto* tow = app.add_subcommand("tower", "Constant tower kappa_q, n_q");
    tow->add_option("--q-max", q_max, "Largest degree")->required();
    tow->add_option("--xi", xi, "Xi ratio used at every degree (p/q)");

    auto* ver = app.add_subcommand("verify", "Re-verify a certificate");
    ver->add_option("certificate", cert, "Certificate file")->required();

    for (auto* sub : {grp_check, bnd, hom, fil, kap, crs, cp, pr, mit_verify, mit_build, pip, tow, ver})
    {
        sub->add_flag("--json", o.json_out, "Machine-readable report");
        sub->add_option("--out", o.out, "Write the certificate / artifact to this file");
        sub->add_option("--cap", o.cap, "Cap on basis tuples");
    }

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp& e)
    {
        return app.exit(e);
    }
    catch (const CLI::CallForAllHelp& e)
    {
        return app.exit(e);
    }
    catch (const CLI::CallForVersion& e)
    {
        return app.exit(e);
    }
    catch (const CLI::ParseError& e)
    {
        app.exit(e);
        return 2;
    }

    std::string name;
    for (auto* s = app.get_subcommands().front(); s; s = s->get_subcommands().empty() ? nullptr
                                                                                       : s->get_subcommands().front())
        name += (name.empty() ? "" : " ") + s->get_name();
    Report r(name, o);
    const auto start = std::chrono::steady_clock::now();
    auto elapsed = [&] {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    };
    try
    {
        if (grp_check->parsed())
            cmd_group_check(group, r);
        else if (bnd->parsed())
            cmd_boundary(group, degree, chain, o, r);
        else if (hom->parsed())
            cmd_homology(group, degree, o, r);
        else if (fil->parsed())
            cmd_fill(group, chain, o, r);
        else if (kap->parsed())
            cmd_kappa(group, degree, samples, seed, o, r);
        else if (crs->parsed())
            cmd_cross(left_group, right_group, left, right, r);
        else if (cp->parsed())
            cmd_cup(group, f, g, chain, r);
        else if (pr->parsed())
            cmd_pair(left_group, right_group, f, g, c, d, r);
        else if (mit_verify->parsed())
            cmd_mitosis_verify(config, r);
        else if (mit_build->parsed())
            cmd_mitosis_build(group, o, r);
        else if (pip->parsed())
            cmd_pipeline(config, chain, samples, seed, o, r);
        else if (tow->parsed())
            cmd_tower(q_max, xi, o, r);
        else if (ver->parsed())
            cmd_verify(cert, r);
    }
    catch (const MathFailure& e)
    {
        r.emit(elapsed());
        std::cerr << "error: " << e.message << '\n';
        return 1;
    }
    catch (const ParseError& e)
    {
        std::cerr << "input error: " << e.what() << '\n';
        return 2;
    }
    catch (const TooLargeError& e)
    {
        std::cerr << "input error: " << e.what() << '\n';
        return 2;
    }
    catch (const GroupError& e)
    {
        std::cerr << "input error: " << e.what() << '\n';
        return 2;
    }
    catch (const std::invalid_argument& e)
    {
        std::cerr << "input error: " << e.what() << '\n';
        return 2;
    }
    catch (const std::exception& e)
    {
        // fills, pipeline and mitosis errors signal a failed mathematical check
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    r.emit(elapsed());
    return 0;
}
