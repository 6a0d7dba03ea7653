// covstack: exact invariants of stacks of cyclic covers of projective spaces.
//
// Exit codes: 0 success, 1 domain error (module error text verbatim),
// 2 usage error.

#include "CLI11.hpp"
#include "json.hpp"

#include "covstack/chargroup.hpp"
#include "covstack/chow.hpp"
#include "covstack/cover.hpp"
#include "covstack/form_io.hpp"
#include "covstack/picard.hpp"

#include <iostream>
#include <random>
#include <sstream>

using namespace covstack;
using json = nlohmann::ordered_json;

namespace {

json json_int(const Int &v) {
    if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(v);
    return v.str(); // decimal string for anything wider
}

json json_rows(const std::vector<std::array<Int, 2>> &rows) {
    json a = json::array();
    for (const auto &r : rows) a.push_back({json_int(r[0]), json_int(r[1])});
    return a;
}

json json_point(const std::vector<Scalar> &pt) {
    json a = json::array();
    for (const Scalar &c : pt) a.push_back(c.str());
    return a;
}

json json_poly(const Poly &p) {
    json a = json::array();
    std::istringstream lines(poly_to_text(p));
    std::string line;
    while (std::getline(lines, line))
        if (!line.empty()) a.push_back(line);
    return a;
}

Field parse_field_name(const std::string &text) {
    auto caret = text.find('^');
    try {
        if (caret == std::string::npos) return Field::gf(std::stoull(text));
        return Field::gf(std::stoull(text.substr(0, caret)),
                         static_cast<unsigned>(std::stoul(text.substr(caret + 1))));
    } catch (const std::invalid_argument &) {
        throw std::domain_error("cannot parse field: " + text);
    } catch (const std::out_of_range &) {
        throw std::domain_error("cannot parse field: " + text);
    }
}

// Load a form file, moving it into --field when given.
Form load_form(const std::string &path, const std::string &field_name) {
    Form f = load_form_file(path);
    if (field_name.empty()) return f;
    Field target = parse_field_name(field_name);
    if (f.field() == target) return f;
    if (!f.field().is_rational())
        throw std::domain_error("form file already carries a different field: " + path);
    return f.change_field(target);
}

json picard_json(const PicardResult &res) {
    json params = json::object();
    if (res.kind == "uniform") {
        params["n"] = json_int(res.params[0]);
        params["r"] = json_int(res.params[1]);
        params["d"] = json_int(res.params[2]);
    } else if (res.kind == "hyperelliptic") {
        params["g"] = json_int(res.params[0]);
    } else {
        params["d1"] = json_int(res.params[0]);
        params["d2"] = json_int(res.params[1]);
    }
    json inv = json::array();
    for (const Int &f : res.presentation.invariant_factors) inv.push_back(json_int(f));
    json deg = json::array();
    for (const Int &d : res.provenance.deg_delta) deg.push_back(json_int(d));
    json notes = json::array();
    for (const std::string &n : res.provenance.notes) notes.push_back(n);
    return json{{"kind", res.kind},
                {"params", params},
                {"invariant_factors", inv},
                {"free_rank", static_cast<std::int64_t>(res.presentation.free_rank)},
                {"order", res.order ? json_int(*res.order) : json("infinite")},
                {"provenance",
                 {{"deg_delta", deg},
                  {"rows_e", json_rows(res.provenance.rows_e)},
                  {"rows_v", json_rows(res.provenance.rows_v)},
                  {"paper_rows_v", json_rows(res.provenance.paper_rows_v)},
                  {"paper_closed_form_match", res.provenance.paper_closed_form_match},
                  {"notes", notes}}}};
}

void print_picard(const PicardResult &res, bool as_json) {
    if (as_json) {
        std::cout << picard_json(res).dump(2) << "\n";
        return;
    }
    std::cout << "Picard group: " << res.presentation.structure();
    if (res.order)
        std::cout << "  (order " << *res.order << ")";
    else
        std::cout << "  (infinite)";
    std::cout << "\n";
    if (!res.provenance.rows_v.empty()) {
        std::cout << "relations (v-basis):";
        for (const auto &r : res.provenance.rows_v) std::cout << " (" << r[0] << "," << r[1] << ")";
        std::cout << "\npaper closed-form rows match (up to row sign): "
                  << (res.provenance.paper_closed_form_match ? "yes" : "no") << "\n";
    }
    for (const std::string &n : res.provenance.notes) std::cout << "note: " << n << "\n";
}

json verdict_json(const SmoothnessVerdict &v) {
    json j{{"smooth", v.smooth},
           {"strength", v.strength == VerdictStrength::Exact ? "exact" : "bounded-search"},
           {"detail", v.detail}};
    if (v.strength == VerdictStrength::BoundedSearch) j["extension_bound"] = v.extension_bound;
    j["witness"] = v.witness ? json_point(*v.witness) : json(nullptr);
    return j;
}

void print_verdict(const SmoothnessVerdict &v, bool as_json) {
    if (as_json) {
        std::cout << verdict_json(v).dump(2) << "\n";
        return;
    }
    std::cout << (v.smooth ? "smooth" : "not smooth") << " ("
              << (v.strength == VerdictStrength::Exact ? "exact" : "bounded search") << "): "
              << v.detail << "\n";
    if (v.witness) {
        std::cout << "witness point: (";
        for (std::size_t i = 0; i < v.witness->size(); ++i)
            std::cout << (i ? " : " : "") << (*v.witness)[i].str();
        std::cout << ")\n";
    }
}

json algebra_json(const CoverAlgebra &alg) {
    json basis = json::array();
    for (const auto &b : alg.basis_labels) basis.push_back(b);
    json grades = json::array();
    for (unsigned g : alg.grades) grades.push_back(g);
    json table = json::object();
    for (unsigned i = 0; i < alg.rank; ++i)
        for (unsigned j = 0; j < alg.rank; ++j) {
            json entry = json::object();
            for (unsigned k = 0; k < alg.rank; ++k)
                if (!alg.table[i][j][k].is_zero())
                    entry[alg.basis_labels[k]] = json_poly(alg.table[i][j][k]);
            table[alg.basis_labels[i] + "*" + alg.basis_labels[j]] = entry;
        }
    return json{{"rank", alg.rank},
                {"grading_modulus", alg.grading_modulus},
                {"field", alg.field.name()},
                {"basis", basis},
                {"grades", grades},
                {"table", table}};
}

void print_algebra(const CoverAlgebra &alg, const AssociativityAudit *audit, bool as_json) {
    json j = algebra_json(alg);
    if (audit) {
        j["associative"] = audit->associative;
        json viols = json::array();
        for (const auto &v : audit->violations) {
            json assoc = json::array();
            for (const Poly &p : v.associator) assoc.push_back(json_poly(p));
            viols.push_back({{"triple", {v.i, v.j, v.k}}, {"associator", assoc}});
        }
        j["violations"] = viols;
    }
    if (as_json) {
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::cout << "rank " << alg.rank << " algebra, basis:";
    for (const auto &b : alg.basis_labels) std::cout << " " << b;
    std::cout << "\n";
    for (unsigned i = 0; i < alg.rank; ++i)
        for (unsigned j2 = 0; j2 < alg.rank; ++j2) {
            std::cout << "  " << alg.basis_labels[i] << "*" << alg.basis_labels[j2] << " =";
            bool printed = false;
            for (unsigned k = 0; k < alg.rank; ++k) {
                if (alg.table[i][j2][k].is_zero()) continue;
                std::cout << (printed ? " + " : " ") << "(" << alg.table[i][j2][k].str() << ")*"
                          << alg.basis_labels[k];
                printed = true;
            }
            if (!printed) std::cout << " 0";
            std::cout << "\n";
        }
    if (audit) {
        std::cout << "associative: " << (audit->associative ? "yes" : "no") << "\n";
        for (const auto &v : audit->violations)
            std::cout << "  nonzero associator at (" << alg.basis_labels[v.i] << ","
                      << alg.basis_labels[v.j] << "," << alg.basis_labels[v.k] << ")\n";
    }
}

struct Options {
    bool json = false;
    std::string field;
    std::uint64_t budget = kDefaultSearchBudget;
    std::uint64_t seed = 1;
};

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"exact invariants of stacks of cyclic covers of projective spaces"};
    app.require_subcommand(1);
    Options opt;

    // ---- picard ----
    auto *picard = app.add_subcommand("picard", "Picard groups of the smooth-cover stacks");
    picard->require_subcommand(1);
    unsigned pn = 1, pr = 2, pd = 1, pg = 1;
    auto *pu = picard->add_subcommand("uniform", "uniform cyclic covers of P^n");
    pu->add_option("--n", pn, "ambient dimension")->required();
    pu->add_option("--r", pr, "cover degree")->required();
    pu->add_option("--d", pd, "branch degree")->required();
    pu->add_flag("--json", opt.json, "machine-readable output");
    auto *pt = picard->add_subcommand("triple", "cyclic triple covers of P^1");
    std::int64_t td1_raw = 1, td2_raw = 1;
    pt->add_option("--d1", td1_raw, "first branch degree")->required();
    pt->add_option("--d2", td2_raw, "second branch degree")->required();
    pt->add_flag("--json", opt.json, "machine-readable output");
    auto *ph = picard->add_subcommand("hyperelliptic", "hyperelliptic curves of genus g");
    ph->add_option("--g", pg, "genus")->required();
    ph->add_flag("--json", opt.json, "machine-readable output");

    // ---- disc-degree / z-bidegree ----
    unsigned dn = 1, dm = 1;
    auto *dd = app.add_subcommand("disc-degree", "degree of the discriminant of degree-m forms on P^n");
    dd->add_option("--n", dn, "ambient dimension")->required();
    dd->add_option("--m", dm, "form degree")->required();
    dd->add_flag("--json", opt.json, "machine-readable output");
    std::int64_t zd1 = 1, zd2 = 1;
    auto *zb = app.add_subcommand("z-bidegree", "bidegree of the common-zero locus Z");
    zb->add_option("--d1", zd1, "first branch degree")->required();
    zb->add_option("--d2", zd2, "second branch degree")->required();
    zb->add_flag("--json", opt.json, "machine-readable output");

    // ---- char ----
    auto *ch = app.add_subcommand("char", "character lattices of the acting groups");
    ch->require_subcommand(1);
    std::int64_t cld1 = 1, cld2 = 1;
    auto *cl = ch->add_subcommand("lattice", "basis of the Gamma(d1,d2) character lattice");
    cl->add_option("--d1", cld1, "first branch degree")->required();
    cl->add_option("--d2", cld2, "second branch degree")->required();
    cl->add_flag("--json", opt.json, "machine-readable output");
    unsigned cin = 1;
    std::int64_t cid = 1;
    auto *ci = ch->add_subcommand("index", "index of the GL_{n+1}/mu_d character group");
    ci->add_option("--n", cin, "ambient dimension")->required();
    ci->add_option("--d", cid, "branch degree")->required();
    ci->add_flag("--json", opt.json, "machine-readable output");
    unsigned isn = 1, iss = 25;
    std::int64_t isd = 1;
    auto *is = ch->add_subcommand("isom", "verify the closed-form isomorphisms for GL_{n+1}/mu_d");
    is->add_option("--n", isn, "ambient dimension")->required();
    is->add_option("--d", isd, "branch degree")->required();
    is->add_option("--samples", iss, "random samples");
    is->add_option("--field", opt.field, "p or p^k (default: rationals)");
    is->add_option("--seed", opt.seed, "PRNG seed");
    is->add_flag("--json", opt.json, "machine-readable output");

    // ---- smooth ----
    auto *sm = app.add_subcommand("smooth", "smoothness verdicts");
    sm->require_subcommand(1);
    std::string form_path, f1_path, f2_path, h_path;
    unsigned sr = 2;
    auto *su = sm->add_subcommand("uniform", "smoothness of a uniform cover");
    su->add_option("--form", form_path, "branch form file")->required();
    su->add_option("--r", sr, "cover degree")->required();
    su->add_option("--field", opt.field, "p or p^k (default: rationals)");
    unsigned s_ext_bound = 1;
    su->add_option("--ext-bound", s_ext_bound, "extension bound for the n >= 2 search");
    su->add_option("--budget", opt.budget, "enumeration budget (candidate visits)");
    su->add_flag("--json", opt.json, "machine-readable output");
    auto *st = sm->add_subcommand("triple", "smoothness of a cyclic triple cover");
    st->add_option("--f1", f1_path, "first branch form file")->required();
    st->add_option("--f2", f2_path, "second branch form file")->required();
    st->add_option("--field", opt.field, "p or p^k (default: rationals)");
    st->add_flag("--json", opt.json, "machine-readable output");

    // ---- cover algebra ----
    auto *cov = app.add_subcommand("cover", "cover algebra construction");
    cov->require_subcommand(1);
    auto *ca = cov->add_subcommand("algebra", "multiplication table of the cover algebra");
    ca->require_subcommand(1);
    auto *cau = ca->add_subcommand("uniform", "rank-r algebra of a uniform cover");
    cau->add_option("--form", form_path, "branch form file")->required();
    cau->add_option("--r", sr, "cover degree")->required();
    cau->add_option("--field", opt.field, "p or p^k (default: rationals)");
    cau->add_flag("--json", opt.json, "machine-readable output");
    auto *cat = ca->add_subcommand("triple", "rank-3 algebra of a triple cover");
    cat->add_option("--f1", f1_path, "first branch form file")->required();
    cat->add_option("--f2", f2_path, "second branch form file")->required();
    cat->add_option("--h-poly", h_path, "override the product t1*t2 (polynomial file)");
    cat->add_option("--field", opt.field, "p or p^k (default: rationals)");
    cat->add_flag("--json", opt.json, "machine-readable output");

    // ---- gen witness ----
    auto *gen = app.add_subcommand("gen", "generators for test data");
    gen->require_subcommand(1);
    unsigned wn = 2, wm = 4, wretries = 32;
    std::string wa;
    auto *gw = gen->add_subcommand("witness", "singular-witness form with verified unique singularity");
    gw->add_option("--n", wn, "ambient dimension")->required();
    gw->add_option("--m", wm, "form degree")->required();
    gw->add_option("--field", opt.field, "p or p^k")->required();
    gw->add_option("--a", wa, "comma-separated coefficients (random when absent)");
    gw->add_option("--seed", opt.seed, "PRNG seed");
    gw->add_option("--retries", wretries, "attempts before giving up");
    unsigned w_ext_bound = 2;
    gw->add_option("--ext-bound", w_ext_bound, "extension bound for verification");
    gw->add_option("--budget", opt.budget, "enumeration budget (candidate visits)");
    gw->add_flag("--json", opt.json, "machine-readable output");

    // ---- dim ----
    auto *dim = app.add_subcommand("dim", "stack dimensions");
    dim->require_subcommand(1);
    auto *du = dim->add_subcommand("uniform", "dimension of the uniform-cover stack");
    du->add_option("--n", pn, "ambient dimension")->required();
    du->add_option("--r", pr, "cover degree")->required();
    du->add_option("--d", pd, "branch degree")->required();
    du->add_flag("--json", opt.json, "machine-readable output");
    auto *dt = dim->add_subcommand("triple", "dimension of the triple-cover stack");
    dt->add_option("--d1", td1_raw, "first branch degree")->required();
    dt->add_option("--d2", td2_raw, "second branch degree")->required();
    dt->add_flag("--json", opt.json, "machine-readable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    const Int td1 = td1_raw, td2 = td2_raw;

    try {
        if (pu->parsed()) {
            print_picard(picard_uniform(pn, pr, pd), opt.json);
        } else if (pt->parsed()) {
            print_picard(triple_picard(td1, td2), opt.json);
        } else if (ph->parsed()) {
            print_picard(hyperelliptic_picard(pg), opt.json);
        } else if (dd->parsed()) {
            Int deg = discriminant_degree(dn, dm);
            if (opt.json)
                std::cout << json{{"n", dn}, {"m", dm}, {"degree", json_int(deg)}}.dump(2) << "\n";
            else
                std::cout << deg << "\n";
        } else if (zb->parsed()) {
            auto [b1, b2] = z_bidegree(Int(zd1), Int(zd2));
            if (opt.json)
                std::cout << json{{"d1", zd1}, {"d2", zd2}, {"bidegree", {json_int(b1), json_int(b2)}}}
                                 .dump(2)
                          << "\n";
            else
                std::cout << "(" << b1 << ", " << b2 << ")\n";
        } else if (cl->parsed()) {
            GammaLattice lat = gamma_lattice(Int(cld1), Int(cld2));
            if (opt.json) {
                std::cout << json{{"d1", cld1},
                                  {"d2", cld2},
                                  {"parity_case", lat.even_case ? "both-even" : "odd-d1"},
                                  {"v1", {json_int(lat.v1.coords[0]), json_int(lat.v1.coords[1])}},
                                  {"v2", {json_int(lat.v2.coords[0]), json_int(lat.v2.coords[1])}},
                                  {"index", json_int(gamma_lattice_index(Int(cld1), Int(cld2)))}}
                                 .dump(2)
                          << "\n";
            } else {
                std::cout << "v1 = " << lat.v1.str() << "\nv2 = " << lat.v2.str() << "\nindex "
                          << gamma_lattice_index(Int(cld1), Int(cld2)) << " in Z^2 ("
                          << (lat.even_case ? "both even" : "d1 odd") << ")\n";
            }
        } else if (ci->parsed()) {
            Int idx = uniform_char_index(cin, Int(cid));
            if (opt.json)
                std::cout << json{{"n", cin}, {"d", cid}, {"index", json_int(idx)}}.dump(2) << "\n";
            else
                std::cout << idx << "\n";
        } else if (is->parsed()) {
            Field f = opt.field.empty() ? Field::rationals() : parse_field_name(opt.field);
            IsomReport rep = isom_check(isn, Int(isd), iss, f, opt.seed);
            if (opt.json) {
                std::cout << json{{"n", isn},
                                  {"d", isd},
                                  {"case", rep.residue_case},
                                  {"passed", rep.passed},
                                  {"checks",
                                   {{"multiplicative", rep.multiplicative_checks},
                                    {"scalar", rep.scalar_checks},
                                    {"injectivity", rep.injectivity_checks}}},
                                  {"failure", rep.failure}}
                                 .dump(2)
                          << "\n";
            } else {
                std::cout << (rep.passed ? "pass" : "FAIL") << " (case d = " << rep.residue_case
                          << " mod n+1; " << rep.multiplicative_checks << " multiplicative, "
                          << rep.scalar_checks << " scalar, " << rep.injectivity_checks
                          << " injectivity checks)\n";
                if (!rep.passed) std::cout << rep.failure << "\n";
            }
        } else if (su->parsed()) {
            Form f = load_form(form_path, opt.field);
            if (f.num_vars() < 2) throw std::domain_error("branch form needs at least 2 variables");
            unsigned n = f.num_vars() - 1;
            if (sr == 0 || f.degree() % sr != 0)
                throw std::domain_error("form degree is not a multiple of r");
            UniformCoverSpec spec(n, sr, f.degree() / sr, f);
            auto v = is_smooth_uniform(spec, s_ext_bound, opt.budget);
            if (opt.json) {
                json j = verdict_json(v);
                j["kind"] = "uniform";
                j["params"] = {{"n", n}, {"r", sr}, {"d", f.degree() / sr}};
                std::cout << j.dump(2) << "\n";
            } else {
                print_verdict(v, false);
            }
        } else if (st->parsed()) {
            TripleCoverSpec spec(load_form(f1_path, opt.field), load_form(f2_path, opt.field));
            auto v = is_smooth_triple(spec);
            if (opt.json) {
                json j = verdict_json(v);
                j["kind"] = "triple";
                j["params"] = {{"d1", json_int(spec.d1)}, {"d2", json_int(spec.d2)}};
                std::cout << j.dump(2) << "\n";
            } else {
                print_verdict(v, false);
            }
        } else if (cau->parsed()) {
            Form f = load_form(form_path, opt.field);
            if (f.num_vars() < 2) throw std::domain_error("branch form needs at least 2 variables");
            if (sr == 0 || f.degree() % sr != 0)
                throw std::domain_error("form degree is not a multiple of r");
            UniformCoverSpec spec(f.num_vars() - 1, sr, f.degree() / sr, f);
            print_algebra(build_uniform_algebra(spec), nullptr, opt.json);
        } else if (cat->parsed()) {
            Form f1 = load_form(f1_path, opt.field);
            Form f2 = load_form(f2_path, opt.field);
            std::optional<Poly> h;
            if (!h_path.empty()) {
                Poly hp = load_poly_file(h_path);
                if (!opt.field.empty() && hp.field().is_rational())
                    hp = hp.change_field(parse_field_name(opt.field));
                h = hp;
            }
            auto res = build_triple_algebra(f1, f2, h);
            print_algebra(res.algebra, &res.audit, opt.json);
        } else if (gw->parsed()) {
            Field f = parse_field_name(opt.field);
            WitnessPair pair{Form(), {}};
            WitnessVerification ver;
            std::vector<Scalar> coeffs;
            unsigned attempts = 1;
            if (!wa.empty()) {
                std::stringstream ss(wa);
                std::string item;
                while (std::getline(ss, item, ',')) coeffs.push_back(Scalar(f, Int(item)));
                pair = generate_singular_witness(wn, wm, f, coeffs);
                ver = verify_singular_witness(pair, w_ext_bound, opt.budget);
            } else {
                std::mt19937_64 rng(opt.seed);
                auto gen_res = generate_singular_witness_random(wn, wm, f, rng, wretries,
                                                                w_ext_bound, opt.budget);
                pair = std::move(gen_res.witness);
                ver = std::move(gen_res.verification);
                coeffs = std::move(gen_res.coeffs);
                attempts = gen_res.attempts;
            }
            if (opt.json) {
                json a = json::array();
                for (const Scalar &c : coeffs) a.push_back(c.str());
                std::cout << json{{"n", wn},
                                  {"m", wm},
                                  {"field", f.name()},
                                  {"a", a},
                                  {"attempts", attempts},
                                  {"form", json_poly(pair.form.poly())},
                                  {"point", json_point(pair.point)},
                                  {"verification",
                                   {{"partials_vanish", ver.partials_vanish},
                                    {"linear_rank_full", ver.linear_rank_full},
                                    {"unique_singular", ver.unique_singular}}}}
                                 .dump(2)
                          << "\n";
            } else {
                std::cout << "F =\n" << form_to_text(pair.form);
                std::cout << "singular point: (";
                for (std::size_t i = 0; i < pair.point.size(); ++i)
                    std::cout << (i ? " : " : "") << pair.point[i].str();
                std::cout << ")\nverified: partials vanish " << (ver.partials_vanish ? "yes" : "NO")
                          << ", linear rank full " << (ver.linear_rank_full ? "yes" : "NO")
                          << ", unique singular point " << (ver.unique_singular ? "yes" : "NO")
                          << " (attempts: " << attempts << ")\n";
            }
            if (!ver.ok()) return 1;
        } else if (du->parsed()) {
            Int v = stack_dimension_uniform(pn, pr, pd);
            if (opt.json)
                std::cout << json{{"kind", "uniform"},
                                  {"params", {{"n", pn}, {"r", pr}, {"d", pd}}},
                                  {"dimension", json_int(v)}}
                                 .dump(2)
                          << "\n";
            else
                std::cout << v << "\n";
        } else if (dt->parsed()) {
            Int v = stack_dimension_triple(td1, td2);
            if (opt.json)
                std::cout << json{{"kind", "triple"},
                                  {"params", {{"d1", td1_raw}, {"d2", td2_raw}}},
                                  {"dimension", json_int(v)}}
                                 .dump(2)
                          << "\n";
            else
                std::cout << v << "\n";
        }
    } catch (const std::domain_error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception &e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
