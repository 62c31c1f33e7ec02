// schub: command line front end for the schubert library.
//
// Single-pair commands inspect one (v, w): diagram and matrix displays,
// reduced generating sets with provenance, Groebner certification, the
// recursion-step obligations, K-polynomials, the Stanley-Reisner complex,
// homogeneity verdicts, and biliaison chains. `sweep` walks S_n x S_n and
// re-checks the advertised properties pair by pair over a worker pool.
//
// Output is JSON unless --pretty asks for text. Reports are deterministic:
// identical flags and seed give byte-identical output. Timing data only
// appears under --timing, which is why it is not part of that guarantee.

#include "schubert/generic_matrix.hpp"
#include "schubert/groebner.hpp"
#include "schubert/ideals.hpp"
#include "schubert/kpoly.hpp"
#include "schubert/linkage.hpp"
#include "schubert/permutation.hpp"
#include "schubert/polynomial.hpp"
#include "schubert/simplicial.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <atomic>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

using json = nlohmann::ordered_json;
using namespace schubert;

namespace {

constexpr int kSchema = 1;

json envelope(const char* command) {
    json j;
    j["schema"] = kSchema;
    j["tool"] = "schub";
    j["version"] = SCHUB_VERSION;
    j["command"] = command;
    return j;
}

// ---------------------------------------------------------------------------
// Output plumbing
// ---------------------------------------------------------------------------

struct Common {
    std::string out;
    bool pretty = false;
};

void add_common(CLI::App* cmd, Common& c) {
    cmd->add_option("--out", c.out, "write the report to FILE instead of stdout");
    cmd->add_flag("--pretty", c.pretty, "render as text instead of JSON");
}

void emit(const Common& c, const json& j, const std::string& text) {
    std::string payload = c.pretty ? text : j.dump(2) + "\n";
    if (c.out.empty()) {
        std::cout << payload;
    } else {
        std::ofstream f(c.out, std::ios::binary);
        if (!f) throw std::runtime_error("cannot open --out file '" + c.out + "'");
        f << payload;
    }
}

std::string join(const std::vector<int>& xs) {
    std::ostringstream os;
    for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? "," : "") << xs[i];
    return os.str();
}

json cell_json(const Cell& c) { return json::array({c.row, c.col}); }

json generators_json(const GeneratorSet& gs, char letter) {
    json a = json::array();
    for (const Generator& g : gs.gens) {
        json e;
        e["poly"] = g.poly.str(letter);
        e["box"] = cell_json(g.from.box);
        e["rows"] = g.from.rows;
        e["cols"] = g.from.cols;
        a.push_back(std::move(e));
    }
    return a;
}

json check_json(const CheckResult& c) {
    json e;
    e["name"] = c.name;
    e["applicable"] = c.applicable;
    e["pass"] = c.pass;
    if (!c.detail.empty()) e["detail"] = c.detail;
    return e;
}

std::string checks_text(const std::vector<CheckResult>& checks) {
    std::ostringstream os;
    for (const CheckResult& c : checks) {
        os << "  [" << (!c.applicable ? " n/a" : c.pass ? "pass" : "FAIL") << "] " << c.name;
        if (!c.detail.empty()) os << ": " << c.detail;
        os << "\n";
    }
    return os.str();
}

std::string ideal_text(const GeneratorSet& gs, char letter) {
    if (gs.unit) return "unit ideal";
    if (gs.zero()) return "zero ideal";
    std::ostringstream os;
    os << "<";
    for (std::size_t i = 0; i < gs.gens.size(); ++i)
        os << (i ? ", " : "") << gs.gens[i].poly.str(letter);
    os << ">";
    return os.str();
}

// ---------------------------------------------------------------------------
// Family dispatch
// ---------------------------------------------------------------------------

GeneratorSet build_named_ideal(const std::string& family, const Permutation& v,
                               const Permutation& w, Convention klconv,
                               bool essential) {
    if (family == "patch") return patch_ideal(v, w, essential);
    if (family == "kl") return kl_ideal(v, w, klconv, essential);
    if (family == "schubert") return schubert_ideal(PartialPermutation(w), essential);
    if (family == "T") return t_ideal(v, w, TTarget::SameW, essential);
    if (family == "N") return t_ideal(v, w, TTarget::SwappedW, essential);
    throw std::invalid_argument("unknown family '" + family + "'");
}

char family_letter(const std::string& family, Convention klconv) {
    if (family == "kl") return convention_letter(klconv);
    if (family == "schubert") return 'x';
    return 'z';    // patch, T, N all live in the patch matrix
}

// ---------------------------------------------------------------------------
// diagram
// ---------------------------------------------------------------------------

// Dots-and-hooks picture: o for the 1s, - and | for the hook arms going
// east and south, + where two arms cross, # for the diagram boxes.
std::string rothe_ascii(const PartialPermutation& w) {
    std::ostringstream os;
    for (int p = 1; p <= w.rows(); ++p) {
        for (int q = 1; q <= w.cols(); ++q) {
            char c = '#';
            if (w.has_one(p, q)) {
                c = 'o';
            } else {
                auto jr = w.one_in_row(p);
                auto jc = w.one_in_col(q);
                bool east = jr && *jr < q;
                bool south = jc && *jc < p;
                c = east && south ? '+' : east ? '-' : south ? '|' : '#';
            }
            os << c << (q < w.cols() ? " " : "");
        }
        os << '\n';
    }
    return os.str();
}

struct DiagramOpts {
    Common common;
    std::string v, w;
    std::string convention = "patch";
};

int cmd_diagram(const DiagramOpts& o) {
    if (o.v.empty() && o.w.empty())
        throw std::invalid_argument("diagram needs --w (Rothe diagram) or --v (matrix)");
    json j = envelope("diagram");
    std::ostringstream text;

    if (!o.w.empty()) {
        Permutation w = Permutation::parse(o.w);
        Diagram d = rothe_diagram(w);
        RankTable rk = rank_table(w);
        std::string pic = rothe_ascii(PartialPermutation(w));
        json dj;
        dj["w"] = w.str();
        dj["length"] = w.length();
        json boxes = json::array();
        for (const Cell& c : d.boxes()) boxes.push_back(cell_json(c));
        dj["boxes"] = boxes;
        json ess = json::array();
        for (const Cell& c : essential_set(d)) {
            json e;
            e["box"] = cell_json(c);
            e["rank"] = rk.at(c.row, c.col);
            ess.push_back(std::move(e));
        }
        dj["essential"] = ess;
        dj["ascii"] = pic;
        j["diagram"] = std::move(dj);

        text << "D(" << w.str() << "): " << d.size() << " boxes, length " << w.length()
             << "\n" << pic << "essential set:";
        for (const Cell& c : essential_set(d))
            text << " (" << c.row << "," << c.col << ")r" << rk.at(c.row, c.col);
        text << "\n";
    }

    if (!o.v.empty()) {
        Permutation v = Permutation::parse(o.v);
        Convention conv = parse_convention(o.convention);
        GenericMatrix m = build_matrix(v, conv);
        char letter = convention_letter(conv);
        TermOrder ord = term_order_for(v, conv);
        GradingMap g = grading_for(v, conv);

        json mj;
        mj["v"] = v.str();
        mj["convention"] = convention_name(conv);
        mj["letter"] = std::string(1, letter);
        mj["render"] = render(m, letter);
        json west = json::array(), east = json::array();
        for (Var x : m.west_variables()) west.push_back(var_name(x, letter));
        for (Var x : m.east_variables()) east.push_back(var_name(x, letter));
        mj["west_variables"] = west;
        mj["east_variables"] = east;
        if (auto top = last_variable(v, conv)) mj["top_variable"] = var_name(*top, letter);
        j["matrix"] = std::move(mj);

        json names = json::array();
        for (Var x : ord.ranking()) names.push_back(var_name(x, letter));
        j["order"] = names;

        json gj;
        gj["dim"] = g.dim();
        gj["positive"] = g.is_positive();
        json degs;
        for (Var x : ord.ranking()) degs[var_name(x, letter)] = g.degree(x);
        gj["degrees"] = std::move(degs);
        j["grading"] = std::move(gj);

        text << "matrix of v=" << v.str() << " (" << convention_name(conv) << "):\n"
             << render(m, letter) << "order:";
        for (Var x : ord.ranking()) text << " " << var_name(x, letter);
        text << "\ngrading dim " << g.dim() << (g.is_positive() ? " (positive)" : "") << "\n";
    }

    emit(o.common, j, text.str());
    return 0;
}

// ---------------------------------------------------------------------------
// ideal
// ---------------------------------------------------------------------------

struct IdealOpts {
    Common common;
    std::string v, w;
    std::string family = "patch";
    std::string convention = "kl";
    bool full = false;
};

int cmd_ideal(const IdealOpts& o) {
    Permutation w = Permutation::parse(o.w);
    Permutation v;
    if (o.family != "schubert") {
        if (o.v.empty()) throw std::invalid_argument("family '" + o.family + "' needs --v");
        v = Permutation::parse(o.v);
    }
    Convention kc = o.family == "kl" ? parse_convention(o.convention) : Convention::KLBminusG;
    GeneratorSet gs = build_named_ideal(o.family, v, w, kc, !o.full);
    char letter = family_letter(o.family, kc);

    json j = envelope("ideal");
    if (o.family != "schubert") j["v"] = v.str();
    j["w"] = w.str();
    j["family"] = o.family;
    if (o.family == "kl") j["convention"] = convention_name(kc);
    j["essential_only"] = !o.full;
    j["letter"] = std::string(1, letter);
    j["unit"] = gs.unit;
    j["generators"] = generators_json(gs, letter);

    std::ostringstream text;
    text << o.family << " ideal";
    if (o.family != "schubert") text << ", v=" << v.str();
    text << ", w=" << w.str() << ": " << ideal_text(gs, letter) << "\n";
    for (const Generator& g : gs.gens)
        text << "  " << g.poly.str(letter) << "   [box (" << g.from.box.row << ","
             << g.from.box.col << ") rows {" << join(g.from.rows) << "} cols {"
             << join(g.from.cols) << "}]\n";

    emit(o.common, j, text.str());
    return 0;
}

// ---------------------------------------------------------------------------
// verify-gb
// ---------------------------------------------------------------------------

struct VerifyGbOpts {
    Common common;
    std::string v, w;
    std::string family = "both";
};

int cmd_verify_gb(const VerifyGbOpts& o) {
    Permutation v = Permutation::parse(o.v);
    Permutation w = Permutation::parse(o.w);
    json j = envelope("verify-gb");
    j["v"] = v.str();
    j["w"] = w.str();
    json fams = json::array();
    std::ostringstream text;
    bool all_ok = true;
    for (const std::string fam : {"patch", "kl"}) {
        if (o.family != "both" && o.family != fam) continue;
        bool patch = fam == "patch";
        Convention conv = patch ? Convention::PatchBminusG : Convention::KLBminusG;
        GeneratorSet gs = patch ? patch_ideal(v, w) : kl_ideal(v, w, conv);
        GroebnerCheck c = is_groebner(gs.polys(), term_order_for(v, conv));
        all_ok = all_ok && c.ok;
        json f;
        f["family"] = fam;
        f["generators"] = gs.gens.size();
        f["unit"] = gs.unit;
        f["certified"] = c.ok;
        f["spairs_reduced"] = c.pairs_reduced;
        f["spairs_coprime"] = c.pairs_coprime;
        if (!c.ok) {
            json fails = json::array();
            for (const SPairFailure& sp : c.failures) {
                json e;
                e["i"] = sp.i;
                e["j"] = sp.j;
                e["remainder"] = sp.remainder.str(convention_letter(conv));
                fails.push_back(std::move(e));
            }
            f["failures"] = std::move(fails);
        }
        fams.push_back(std::move(f));
        text << fam << ": " << (c.ok ? "certified" : "NOT a Groebner basis") << " ("
             << gs.gens.size() << " generators, " << c.pairs_reduced
             << " S-pairs reduced, " << c.pairs_coprime << " coprime)\n";
    }
    j["families"] = std::move(fams);
    j["ok"] = all_ok;
    emit(o.common, j, text.str());
    return all_ok ? 0 : 1;
}

// ---------------------------------------------------------------------------
// verify-recursion
// ---------------------------------------------------------------------------

struct RecursionOpts {
    Common common;
    std::string v, w;
    std::string family = "patch";
};

int cmd_verify_recursion(const RecursionOpts& o) {
    Permutation v = Permutation::parse(o.v);
    Permutation w = Permutation::parse(o.w);
    Family fam = parse_family(o.family);
    if (fam == Family::Schubert)
        throw std::invalid_argument("verify-recursion needs --family patch or kl");
    RecursionStep st = recursion_step(v, w, fam);
    StepReport rep = verify_step(st, {});

    json j = envelope("verify-recursion");
    j["v"] = v.str();
    j["w"] = w.str();
    j["family"] = family_name(fam);
    j["case"] = step_case_name(st.kind);
    j["b"] = st.b;
    if (!st.shift.empty()) j["shift"] = st.shift;
    json sizes;
    sizes["I"] = st.I.gens.size();
    sizes["J"] = st.J.gens.size();
    sizes["N"] = st.N.gens.size();
    j["generators"] = std::move(sizes);
    json checks = json::array();
    for (const CheckResult& c : rep.checks) checks.push_back(check_json(c));
    j["checks"] = std::move(checks);
    j["ok"] = rep.ok();

    std::ostringstream text;
    text << "step case " << step_case_name(st.kind) << " at b=" << st.b << " (|I|="
         << st.I.gens.size() << " |J|=" << st.J.gens.size() << " |N|="
         << st.N.gens.size() << ")\n"
         << checks_text(rep.checks) << (rep.ok() ? "OK" : "FAIL") << "\n";
    emit(o.common, j, text.str());
    return rep.ok() ? 0 : 1;
}

// ---------------------------------------------------------------------------
// kpoly
// ---------------------------------------------------------------------------

struct KpolyOpts {
    Common common;
    std::string v, w;
    std::string family = "patch";
    std::string convention = "kl";
    bool standard_grading = false;
};

int cmd_kpoly(const KpolyOpts& o) {
    Permutation v = Permutation::parse(o.v);
    Permutation w = Permutation::parse(o.w);
    bool patch = o.family == "patch";
    Convention conv = patch ? Convention::PatchBminusG : parse_convention(o.convention);
    GeneratorSet gs = patch ? patch_ideal(v, w) : kl_ideal(v, w, conv);
    TermOrder ord = term_order_for(v, conv);
    GradingMap g = o.standard_grading ? GradingMap::standard(ord.ranking())
                                      : grading_for(v, conv);
    LaurentKPolynomial k = kpoly_ideal(gs.polys(), ord, g, {});

    json j = envelope("kpoly");
    j["v"] = v.str();
    j["w"] = w.str();
    j["family"] = o.family;
    j["convention"] = convention_name(conv);
    j["grading"] = o.standard_grading ? "standard" : "torus";
    j["dim"] = g.dim();
    j["kpoly"] = k.str();
    json terms = json::array();
    for (const auto& [e, c] : k.terms()) {
        json t;
        t["e"] = e;
        t["c"] = c.str();
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);

    std::ostringstream text;
    text << "K-polynomial of the " << o.family << " ideal, v=" << v.str() << " w="
         << w.str() << " (" << (o.standard_grading ? "standard" : "torus")
         << " grading, dim " << g.dim() << "):\n  " << k.str() << "\n";
    emit(o.common, j, text.str());
    return 0;
}

// ---------------------------------------------------------------------------
// verify-kostant
// ---------------------------------------------------------------------------

struct KostantOpts {
    Common common;
    std::string v, w;
    std::string convention = "patch";
};

int cmd_verify_kostant(const KostantOpts& o) {
    Permutation v = Permutation::parse(o.v);
    Permutation w = Permutation::parse(o.w);
    Convention conv = parse_convention(o.convention);
    KostantReport r = verify_kostant(v, w, conv, {});

    json j = envelope("verify-kostant");
    j["v"] = v.str();
    j["w"] = w.str();
    j["convention"] = convention_name(conv);
    j["applicable"] = r.applicable;
    std::ostringstream text;
    if (!r.applicable) {
        j["reason"] = r.reason;
        text << "not applicable: " << r.reason << "\n";
        emit(o.common, j, text.str());
        return 0;
    }
    j["b"] = r.b;
    j["case"] = r.case_one ? 1 : 2;
    if (!r.shift.empty()) j["shift"] = r.shift;
    j["kI"] = r.kI.str();
    j["kJ"] = r.kJ.str();
    if (!r.case_one) j["kN"] = r.kN.str();
    j["lhs"] = r.lhs.str();
    j["rhs"] = r.rhs.str();
    j["equal"] = r.equal;

    text << "recursion at b=" << r.b << ", case " << (r.case_one ? "1" : "2") << "\n"
         << "  K(I) = " << r.kI.str() << "\n  K(J) = " << r.kJ.str() << "\n";
    if (!r.case_one) text << "  K(N) = " << r.kN.str() << "\n";
    text << (r.equal ? "identity holds" : "IDENTITY FAILS") << "\n";
    emit(o.common, j, text.str());
    return r.equal ? 0 : 1;
}

// ---------------------------------------------------------------------------
// complex
// ---------------------------------------------------------------------------

struct ComplexOpts {
    Common common;
    std::string v, w;
    std::string family = "patch";
};

int cmd_complex(const ComplexOpts& o) {
    Permutation v = Permutation::parse(o.v);
    Permutation w = Permutation::parse(o.w);
    bool patch = o.family == "patch";
    Convention conv = patch ? Convention::PatchBminusG : Convention::KLBminusG;

    json j = envelope("complex");
    j["v"] = v.str();
    j["w"] = w.str();
    j["family"] = o.family;
    bool cmp = bruhat_leq(w, v);
    j["bruhat_leq"] = cmp;
    std::ostringstream text;
    if (!cmp) {
        j["note"] = "w is not below v in Bruhat order; the ideal is the unit ideal";
        text << "w not <= v: unit ideal, no complex\n";
        emit(o.common, j, text.str());
        return 0;
    }

    GeneratorSet gs = patch ? patch_ideal(v, w) : kl_ideal(v, w, conv);
    TermOrder ord = term_order_for(v, conv);
    char letter = convention_letter(conv);
    GroebnerBasis gb = buchberger(gs.polys(), ord, {});
    MonomialIdeal in = initial_ideal(gb);

    json inj = json::array();
    for (const Monomial& m : in.gens()) inj.push_back(m.str(letter));
    j["initial_ideal"] = std::move(inj);
    bool sf = in.is_squarefree();
    j["squarefree"] = sf;
    Codim cd = codimension(in);
    j["codim"] = cd.finite ? json(cd.value) : json("infinite");
    j["length_w"] = w.length();
    bool codim_ok = cd.finite && cd.value == w.length();
    j["codim_matches_length"] = codim_ok;

    bool vd = false;
    if (sf) {
        SimplicialComplex sc = SimplicialComplex::from_squarefree(in, ord.ranking());
        vd = is_vertex_decomposable(sc, {});
        j["vertex_decomposable"] = vd;
        const std::vector<Var>& vars = ord.ranking();
        json facets = json::array();
        for (std::uint32_t f : sc.facets()) {
            json one = json::array();
            for (std::size_t i = 0; i < vars.size(); ++i)
                if (f >> i & 1u) one.push_back(var_name(vars[i], letter));
            facets.push_back(std::move(one));
        }
        j["facets"] = std::move(facets);
    }

    // The KL initial ideal extends to the patch one: same monomial
    // generators, read in the bigger ring.
    bool ext_ok = true;
    if (patch) {
        GroebnerBasis gbk = buchberger(kl_ideal(v, w).polys(),
                                       term_order_for(v, Convention::KLBminusG), {});
        ext_ok = initial_ideal(gbk) == in;
        j["kl_initial_matches"] = ext_ok;
    }

    bool ok = sf && vd && codim_ok && ext_ok;
    j["ok"] = ok;
    text << "initial ideal: " << (sf ? "squarefree" : "NOT squarefree") << ", codim "
         << (cd.finite ? std::to_string(cd.value) : std::string("infinite"))
         << " (length " << w.length() << ")\n";
    if (sf) text << "complex: " << (vd ? "vertex decomposable" : "NOT vertex decomposable") << "\n";
    if (patch) text << "in(KL ideal) extends to in(patch ideal): " << (ext_ok ? "yes" : "NO") << "\n";
    text << (ok ? "OK" : "FAIL") << "\n";
    emit(o.common, j, text.str());
    return ok ? 0 : 1;
}

// ---------------------------------------------------------------------------
// homogeneity
// ---------------------------------------------------------------------------

json triple_json(const PatternTriple& t) {
    json e;
    e["kind"] = t.kind == PatternKind::p321 ? "321"
              : t.kind == PatternKind::p231 ? "231" : "132";
    e["positions"] = json::array({t.i1, t.i2, t.i3});
    e["values"] = json::array({t.v1, t.v2, t.v3});
    return e;
}

struct HomogeneityOpts {
    Common common;
    std::string v, w;
};

int cmd_homogeneity(const HomogeneityOpts& o) {
    Permutation v = Permutation::parse(o.v);
    Permutation w = Permutation::parse(o.w);
    HomogeneityVerdict hv = classify_homogeneity(v, w);

    json j = envelope("homogeneity");
    j["v"] = v.str();
    j["w"] = w.str();
    j["applicable"] = hv.applicable;
    std::ostringstream text;
    if (!hv.applicable) {
        text << "w not <= v: nothing to classify\n";
        emit(o.common, j, text.str());
        return 0;
    }
    j["direct_patch"] = hv.direct_patch;
    j["direct_kl"] = hv.direct_kl;
    j["patch_sufficient"] = hv.patch_sufficient;
    j["kl_sufficient"] = hv.kl_sufficient;
    json ws = json::array();
    for (const PatternPairWitness& pw : hv.witnesses) {
        json e;
        e["v_pattern"] = triple_json(pw.in_v);
        e["w_pattern"] = triple_json(pw.in_w);
        e["inequality"] = pw.inequality;
        ws.push_back(std::move(e));
    }
    j["witnesses"] = std::move(ws);
    bool sound = !(hv.patch_sufficient && !hv.direct_patch) &&
                 !(hv.kl_sufficient && !hv.direct_kl);
    j["sufficient_implies_direct"] = sound;

    text << "patch ideal: " << (hv.direct_patch ? "" : "NOT ")
         << "homogeneous in the standard grading (pattern criterion "
         << (hv.patch_sufficient ? "holds" : "silent") << ")\n"
         << "kl ideal:    " << (hv.direct_kl ? "" : "NOT ")
         << "homogeneous in the standard grading (pattern criterion "
         << (hv.kl_sufficient ? "holds" : "silent") << ")\n"
         << hv.witnesses.size() << " violating pattern pair(s)\n";
    if (!sound) text << "UNSOUND: a sufficient criterion fired on an inhomogeneous ideal\n";
    emit(o.common, j, text.str());
    return sound ? 0 : 1;
}

// ---------------------------------------------------------------------------
// glicci
// ---------------------------------------------------------------------------

struct GlicciOpts {
    Common common;
    std::string v, w;
    std::string family = "patch";
};

int cmd_glicci(const GlicciOpts& o) {
    json j = envelope("glicci");
    Family fam = Family::Patch;
    Permutation v, w;
    if (o.family == "schubert") {
        // I_w as the KL ideal of the doubled pair; the chain then lives in
        // the NW n x n variables.
        Permutation base = Permutation::parse(o.w);
        auto [ev, ew] = embed_schubert(base);
        v = ev;
        w = ew;
        fam = Family::KL;
        j["schubert_w"] = base.str();
    } else {
        fam = parse_family(o.family);
        v = Permutation::parse(o.v);
        w = Permutation::parse(o.w);
    }
    j["v"] = v.str();
    j["w"] = w.str();
    j["family"] = family_name(fam);

    BiliaisonChain ch = glicci_chain(v, w, fam, {});
    char letter = fam == Family::Patch ? 'z' : 'x';
    json steps = json::array();
    for (const ChainStep& s : ch.steps) {
        json e;
        e["v"] = s.v.str();
        e["w"] = s.w.str();
        e["b"] = s.b;
        e["action"] = chain_action_name(s.action);
        if (s.action == ChainAction::Biliaison) e["height"] = s.height;
        json sizes;
        sizes["I"] = s.I.size();
        sizes["J"] = s.J.size();
        sizes["N"] = s.N.size();
        e["generators"] = std::move(sizes);
        json checks = json::array();
        for (const CheckResult& c : s.checks) checks.push_back(check_json(c));
        e["checks"] = std::move(checks);
        steps.push_back(std::move(e));
    }
    j["steps"] = std::move(steps);
    json term = json::array();
    for (const Polynomial& f : ch.terminal) term.push_back(f.str(letter));
    j["terminal"] = std::move(term);
    j["terminal_linear"] = ch.terminal_linear;
    j["complete"] = ch.complete;
    j["ok"] = ch.ok();

    std::ostringstream text;
    for (std::size_t i = 0; i < ch.steps.size(); ++i) {
        const ChainStep& s = ch.steps[i];
        int bad = 0;
        for (const CheckResult& c : s.checks)
            if (c.applicable && !c.pass) ++bad;
        text << "  " << i + 1 << ". " << chain_action_name(s.action) << " at b=" << s.b
             << " (" << s.v.str() << ", " << s.w.str() << ")"
             << (bad ? " CHECKS FAIL" : "") << "\n";
    }
    text << "terminal: <";
    for (std::size_t i = 0; i < ch.terminal.size(); ++i)
        text << (i ? ", " : "") << ch.terminal[i].str(letter);
    text << ">\n" << (ch.ok() ? "OK" : "FAIL") << "\n";
    emit(o.common, j, text.str());
    return ch.ok() ? 0 : 1;
}

// ---------------------------------------------------------------------------
// sweep
// ---------------------------------------------------------------------------

const std::vector<std::string> kAllChecks = {"gb",     "squarefree", "vdec",
                                             "codim",  "kostant",    "homogeneity"};

std::vector<std::string> canonical_checks(const std::vector<std::string>& req) {
    if (req.empty()) return kAllChecks;
    std::set<std::string> want(req.begin(), req.end());
    if (want.count("all")) return kAllChecks;
    for (const std::string& s : want)
        if (std::find(kAllChecks.begin(), kAllChecks.end(), s) == kAllChecks.end())
            throw std::invalid_argument("unknown check '" + s + "'");
    std::vector<std::string> out;
    for (const std::string& c : kAllChecks)
        if (want.count(c)) out.push_back(c);
    return out;
}

// splitmix64; the pair sample must not depend on the platform's
// distribution implementations.
struct Rng {
    std::uint64_t s;
    explicit Rng(std::uint64_t seed) : s(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (s += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    std::uint64_t below(std::uint64_t n) { return next() % n; }
};

unsigned default_workers() {
    if (const char* env = std::getenv("SCHUB_WORKERS")) {
        int k = std::atoi(env);
        if (k > 0) return static_cast<unsigned>(k);
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc ? hc : 1;
}

struct SweepRow {
    std::string family;
    const Permutation* v;
    const Permutation* w;
};

int sweep_row(const SweepRow& r, const std::vector<std::string>& checks, json& out) {
    const Permutation& v = *r.v;
    const Permutation& w = *r.w;
    bool patch = r.family == "patch";
    Convention conv = patch ? Convention::PatchBminusG : Convention::KLBminusG;
    int fails = 0;

    out["family"] = r.family;
    out["v"] = v.str();
    out["w"] = w.str();
    bool cmp = bruhat_leq(w, v);
    out["bruhat_leq"] = cmp;
    json res;

    std::optional<GeneratorSet> gs;
    std::optional<TermOrder> ord;
    std::optional<GroebnerBasis> gb;
    std::optional<MonomialIdeal> in;
    auto ensure_ideal = [&] {
        if (gs) return;
        gs = patch ? patch_ideal(v, w) : kl_ideal(v, w, conv);
        ord = term_order_for(v, conv);
    };
    auto ensure_initial = [&] {
        ensure_ideal();
        if (gb) return;
        gb = buchberger(gs->polys(), *ord, {});
        in = initial_ideal(*gb);
    };
    auto guard = [&](const std::string& name, auto&& body) {
        try {
            body();
        } catch (const std::exception& e) {
            res[name] = std::string("error: ") + e.what();
            ++fails;
        }
    };

    for (const std::string& c : checks) {
        if (c == "gb") {
            guard(c, [&] {
                ensure_ideal();
                GroebnerCheck chk = is_groebner(gs->polys(), *ord);
                if (chk.ok) {
                    res[c] = "pass";
                } else {
                    res[c] = "fail: " + std::to_string(chk.failures.size()) +
                             " S-pairs do not reduce to zero";
                    ++fails;
                }
            });
        } else if (c == "squarefree") {
            guard(c, [&] {
                if (!cmp) { res[c] = "skip: w not <= v"; return; }
                ensure_initial();
                if (in->is_squarefree()) {
                    res[c] = "pass";
                } else {
                    res[c] = "fail: initial ideal not squarefree";
                    ++fails;
                }
            });
        } else if (c == "vdec") {
            guard(c, [&] {
                if (!cmp) { res[c] = "skip: w not <= v"; return; }
                ensure_initial();
                if (!in->is_squarefree()) {
                    res[c] = "fail: initial ideal not squarefree";
                    ++fails;
                    return;
                }
                SimplicialComplex sc = SimplicialComplex::from_squarefree(*in, ord->ranking());
                if (is_vertex_decomposable(sc, {})) {
                    res[c] = "pass";
                } else {
                    res[c] = "fail: complex not vertex decomposable";
                    ++fails;
                }
            });
        } else if (c == "codim") {
            guard(c, [&] {
                if (!cmp) { res[c] = "skip: w not <= v"; return; }
                ensure_initial();
                Codim cd = codimension(*in);
                if (cd.finite && cd.value == w.length()) {
                    res[c] = "pass";
                } else {
                    res[c] = "fail: codim " +
                             (cd.finite ? std::to_string(cd.value) : std::string("infinite")) +
                             " != length " + std::to_string(w.length());
                    ++fails;
                }
            });
        } else if (c == "kostant") {
            guard(c, [&] {
                Convention kc = patch ? Convention::PatchBminusG : Convention::KLGmodBplus;
                KostantReport kr = verify_kostant(v, w, kc, {});
                if (!kr.applicable) {
                    res[c] = "skip: " + kr.reason;
                } else if (kr.equal) {
                    res[c] = "pass";
                } else {
                    res[c] = "fail: recursion identity";
                    ++fails;
                }
            });
        } else if (c == "homogeneity") {
            guard(c, [&] {
                HomogeneityVerdict hv = classify_homogeneity(v, w);
                if (!hv.applicable) { res[c] = "skip: w not <= v"; return; }
                bool direct = patch ? hv.direct_patch : hv.direct_kl;
                bool suff = patch ? hv.patch_sufficient : hv.kl_sufficient;
                std::string tag = std::string("direct=") + (direct ? "1" : "0") +
                                  " sufficient=" + (suff ? "1" : "0");
                if (suff && !direct) {
                    res[c] = "fail: pattern criterion unsound (" + tag + ")";
                    ++fails;
                } else {
                    res[c] = "pass: " + tag;
                }
            });
        }
    }
    out["results"] = std::move(res);
    if (fails) out["failures"] = fails;
    return fails;
}

struct SweepOpts {
    Common common;
    int n = 0;
    std::string family = "both";
    std::vector<std::string> checks;
    std::int64_t sample = -1;
    std::uint64_t seed = 0;
    std::int64_t pair_limit = -1;
    int workers = 0;
    bool timing = false;
};

int cmd_sweep(const SweepOpts& o) {
    if (o.n < 1 || o.n > 6) throw std::invalid_argument("--n must be between 1 and 6");
    std::vector<std::string> checks = canonical_checks(o.checks);
    bool wants_gb = std::find(checks.begin(), checks.end(), "gb") != checks.end();
    if (o.n >= 5 && wants_gb && o.sample < 0)
        throw std::invalid_argument(
            "sweeps over S_5 and S_6 need --sample N for the Groebner checks");

    std::vector<std::string> families;
    if (o.family == "both") families = {"patch", "kl"};
    else families = {o.family};

    std::vector<Permutation> perms = all_permutations(o.n);
    std::uint64_t count = perms.size();
    std::uint64_t total = count * count;

    std::vector<std::pair<int, int>> pairs;
    bool sampled = o.sample >= 0 && static_cast<std::uint64_t>(o.sample) < total;
    if (sampled) {
        Rng rng(o.seed);
        std::set<std::uint64_t> picked;
        while (picked.size() < static_cast<std::uint64_t>(o.sample))
            picked.insert(rng.below(total));
        for (std::uint64_t i : picked)
            pairs.emplace_back(static_cast<int>(i / count), static_cast<int>(i % count));
    } else {
        pairs.reserve(total);
        for (std::uint64_t a = 0; a < count; ++a)
            for (std::uint64_t b = 0; b < count; ++b)
                pairs.emplace_back(static_cast<int>(a), static_cast<int>(b));
    }
    if (o.pair_limit >= 0 && pairs.size() > static_cast<std::uint64_t>(o.pair_limit))
        pairs.resize(o.pair_limit);

    std::vector<SweepRow> rows;
    rows.reserve(pairs.size() * families.size());
    for (const std::string& f : families)
        for (const auto& [vi, wi] : pairs) rows.push_back({f, &perms[vi], &perms[wi]});

    unsigned workers = o.workers > 0 ? static_cast<unsigned>(o.workers) : default_workers();
    if (rows.size() < workers) workers = rows.empty() ? 1 : static_cast<unsigned>(rows.size());

    std::vector<json> results(rows.size());
    std::vector<int> rowfails(rows.size(), 0);
    std::atomic<std::size_t> cursor{0};
    auto run = [&] {
        for (;;) {
            std::size_t i = cursor.fetch_add(1);
            if (i >= rows.size()) break;
            rowfails[i] = sweep_row(rows[i], checks, results[i]);
        }
    };
    auto t0 = std::chrono::steady_clock::now();
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < workers; ++t) pool.emplace_back(run);
    run();
    for (std::thread& th : pool) th.join();
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    int failures = 0;
    for (int f : rowfails) failures += f;

    json j = envelope("sweep");
    j["n"] = o.n;
    j["families"] = families;
    j["checks"] = checks;
    if (o.sample >= 0) {
        j["sample"] = o.sample;
        j["seed"] = o.seed;
    }
    if (o.pair_limit >= 0) j["pair_limit"] = o.pair_limit;
    j["pairs_run"] = rows.size();
    j["failures"] = failures;
    if (o.timing) {
        json t;
        t["elapsed_seconds"] = secs;
        t["workers"] = workers;
        j["timing"] = std::move(t);
    }
    json parr = json::array();
    for (json& r : results) parr.push_back(std::move(r));
    j["pairs"] = std::move(parr);

    std::ostringstream text;
    text << "sweep over S_" << o.n << ": " << families.size() << " family(ies) x "
         << pairs.size() << " pairs" << (sampled ? " (sampled)" : "") << ", checks";
    for (const std::string& c : checks) text << " " << c;
    text << "\npairs_run=" << rows.size() << " failures=" << failures << "\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (!rowfails[i]) continue;
        const json& r = results[i];
        text << "FAIL " << r["family"].get<std::string>() << " ("
             << r["v"].get<std::string>() << ", " << r["w"].get<std::string>() << "):";
        for (const auto& [k, val] : r["results"].items())
            if (val.is_string() && val.get<std::string>().rfind("pass", 0) != 0 &&
                val.get<std::string>().rfind("skip", 0) != 0)
                text << " [" << k << "] " << val.get<std::string>();
        text << "\n";
    }
    if (o.timing) text << "elapsed " << secs << "s on " << workers << " worker(s)\n";
    emit(o.common, j, text.str());
    return failures == 0 ? 0 : 1;
}

}  // namespace

// ---------------------------------------------------------------------------

int main(int argc, char** argv) {
    CLI::App app{"Schubert patch ideals: Groebner bases, K-polynomials, linkage"};
    app.set_version_flag("--version", std::string("schub ") + SCHUB_VERSION);
    app.require_subcommand(1);
    int rc = 0;

    DiagramOpts dop;
    auto* diagram = app.add_subcommand(
        "diagram", "Rothe diagram of w; matrix, term order, and grading of v");
    diagram->add_option("--v", dop.v, "permutation, one-line (e.g. 34512 or 10,3,1,...)");
    diagram->add_option("--w", dop.w, "permutation carrying the rank conditions");
    diagram->add_option("--convention", dop.convention, "matrix convention")
        ->check(CLI::IsMember({"patch", "kl", "gmodb"}));
    add_common(diagram, dop.common);
    diagram->callback([&] { rc = cmd_diagram(dop); });

    IdealOpts iop;
    auto* ideal = app.add_subcommand("ideal", "reduced generating set with provenance");
    ideal->add_option("--v", iop.v, "ambient permutation (not used by --family schubert)");
    ideal->add_option("--w", iop.w, "permutation carrying the rank conditions")->required();
    ideal->add_option("--family", iop.family, "patch, kl, schubert, T, or N")
        ->check(CLI::IsMember({"patch", "kl", "schubert", "T", "N"}));
    ideal->add_option("--convention", iop.convention, "kl family: kl or gmodb")
        ->check(CLI::IsMember({"kl", "gmodb"}));
    ideal->add_flag("--full", iop.full, "use every box of the grid, not just the essential set");
    add_common(ideal, iop.common);
    ideal->callback([&] { rc = cmd_ideal(iop); });

    VerifyGbOpts gop;
    auto* vgb = app.add_subcommand("verify-gb",
                                   "certify the generators as a Groebner basis under the matrix order");
    vgb->add_option("--v", gop.v)->required();
    vgb->add_option("--w", gop.w)->required();
    vgb->add_option("--family", gop.family, "patch, kl, or both")
        ->check(CLI::IsMember({"patch", "kl", "both"}));
    add_common(vgb, gop.common);
    vgb->callback([&] { rc = cmd_verify_gb(gop); });

    RecursionOpts rop;
    auto* vrec = app.add_subcommand("verify-recursion",
                                    "check the proof obligations of one last-descent step");
    vrec->add_option("--v", rop.v)->required();
    vrec->add_option("--w", rop.w)->required();
    vrec->add_option("--family", rop.family, "patch or kl")
        ->check(CLI::IsMember({"patch", "kl"}));
    add_common(vrec, rop.common);
    vrec->callback([&] { rc = cmd_verify_recursion(rop); });

    KpolyOpts kop;
    auto* kpoly = app.add_subcommand("kpoly", "multigraded K-polynomial of the pair's ideal");
    kpoly->add_option("--v", kop.v)->required();
    kpoly->add_option("--w", kop.w)->required();
    kpoly->add_option("--family", kop.family, "patch or kl")
        ->check(CLI::IsMember({"patch", "kl"}));
    kpoly->add_option("--convention", kop.convention, "kl family: kl or gmodb")
        ->check(CLI::IsMember({"kl", "gmodb"}));
    kpoly->add_flag("--standard", kop.standard_grading,
                    "use the all-degrees-one grading instead of the torus one");
    add_common(kpoly, kop.common);
    kpoly->callback([&] { rc = cmd_kpoly(kop); });

    KostantOpts cop;
    auto* vkos = app.add_subcommand("verify-kostant",
                                    "check one K-polynomial recursion step as an exact identity");
    vkos->add_option("--v", cop.v)->required();
    vkos->add_option("--w", cop.w)->required();
    vkos->add_option("--convention", cop.convention, "patch or gmodb")
        ->check(CLI::IsMember({"patch", "gmodb"}));
    add_common(vkos, cop.common);
    vkos->callback([&] { rc = cmd_verify_kostant(cop); });

    ComplexOpts xop;
    auto* cplx = app.add_subcommand("complex",
                                    "Stanley-Reisner complex of the initial ideal");
    cplx->add_option("--v", xop.v)->required();
    cplx->add_option("--w", xop.w)->required();
    cplx->add_option("--family", xop.family, "patch or kl")
        ->check(CLI::IsMember({"patch", "kl"}));
    add_common(cplx, xop.common);
    cplx->callback([&] { rc = cmd_complex(xop); });

    HomogeneityOpts hop;
    auto* homog = app.add_subcommand("homogeneity",
                                     "standard-grading homogeneity: direct tests and pattern criteria");
    homog->add_option("--v", hop.v)->required();
    homog->add_option("--w", hop.w)->required();
    add_common(homog, hop.common);
    homog->callback([&] { rc = cmd_homogeneity(hop); });

    GlicciOpts lop;
    auto* glicci = app.add_subcommand("glicci", "biliaison chain down to an ideal of variables");
    glicci->add_option("--v", lop.v, "not used by --family schubert");
    glicci->add_option("--w", lop.w)->required();
    glicci->add_option("--family", lop.family, "patch, kl, or schubert (embeds I_w)")
        ->check(CLI::IsMember({"patch", "kl", "schubert"}));
    add_common(glicci, lop.common);
    glicci->callback([&] { rc = cmd_glicci(lop); });

    SweepOpts sop;
    auto* sweep = app.add_subcommand("sweep", "run the checks over all of S_n x S_n");
    sweep->add_option("--n", sop.n, "symmetric group size, 1..6")->required();
    sweep->add_option("--family", sop.family, "patch, kl, or both")
        ->check(CLI::IsMember({"patch", "kl", "both"}));
    sweep->add_option("--checks", sop.checks,
                      "comma list of gb,squarefree,vdec,codim,kostant,homogeneity (or all)")
        ->delimiter(',');
    sweep->add_option("--sample", sop.sample,
                      "check a seeded random sample of pairs instead of all of them")
        ->check(CLI::NonNegativeNumber);
    sweep->add_option("--seed", sop.seed, "sample seed (default 0)");
    sweep->add_option("--pair-limit", sop.pair_limit, "cap the number of pairs per family")
        ->check(CLI::NonNegativeNumber);
    sweep->add_option("--workers", sop.workers,
                      "worker threads (default: SCHUB_WORKERS or hardware)");
    sweep->add_flag("--timing", sop.timing, "include wall-clock data in the report");
    add_common(sweep, sop.common);
    sweep->callback([&] { rc = cmd_sweep(sop); });

    try {
        CLI11_PARSE(app, argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "schub: " << e.what() << "\n";
        return 2;
    }
    return rc;
}
