#include "mather/cli.hpp"

#include <cctype>
#include <cstdint>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "mather/cones.hpp"
#include "mather/conormal.hpp"
#include "mather/dual_variety.hpp"
#include "mather/duality.hpp"
#include "mather/errors.hpp"
#include "mather/plucker.hpp"

namespace mather::cli {
namespace {

using nlohmann::json;

constexpr int kMaxAmbient = 4096;

// Integers that fit in 64 bits are emitted as JSON numbers, larger ones as
// decimal strings; consumers must accept both.
json jint(const Int& v) {
    if (v.fits_slong_p()) return json(static_cast<std::int64_t>(v.get_si()));
    return json(v.get_str());
}

json jrat(const Rat& v) {
    return json{{"num", jint(v.get_num())}, {"den", jint(v.get_den())}};
}

json jvec(const std::vector<Int>& v) {
    json a = json::array();
    for (const Int& x : v) a.push_back(jint(x));
    return a;
}

json jratvec(const std::vector<Rat>& v) {
    json a = json::array();
    for (const Rat& x : v) a.push_back(jrat(x));
    return a;
}

json jclass(const ChowClass& c) {
    return json{{"ambient", c.ambient()}, {"coeffs", jvec(c.coeffs())}};
}

std::string fmt_ints(const std::vector<Int>& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += v[i].get_str();
    }
    return s + ")";
}

std::string fmt_rat(const Rat& v) {
    if (v.get_den() == 1) return v.get_num().get_str();
    return v.get_num().get_str() + "/" + v.get_den().get_str();
}

Int parse_big(const std::string& text) {
    try {
        return Int(text, 10);
    } catch (const std::invalid_argument&) {
        throw ValidationError("not a decimal integer: '" + text + "'");
    }
}

int small_int(const Int& v, const std::string& what) {
    if (!v.fits_sint_p())
        throw ValidationError(what + " out of range: " + v.get_str());
    return static_cast<int>(v.get_si());
}

struct Io {
    bool json_out = true;
    bool quiet = false;
    std::ostream* out = nullptr;
    std::ostream* err = nullptr;
};

void emit(const Io& io, const json& doc, const std::string& summary) {
    if (io.json_out) *io.out << doc.dump(2) << "\n";
    if (!io.quiet) {
        if (io.json_out) *io.err << summary << "\n";
        else *io.out << summary << "\n";
    }
}

void emit_error(const Io& io, const std::string& code, const std::string& message) {
    if (io.json_out)
        *io.out << json{{"error", {{"code", code}, {"message", message}}}}.dump(2) << "\n";
}

// Shared --class/--dim/--signed option block.
struct ClassArgs {
    std::string text;
    int dim = 0;
    bool signed_in = false;
    CLI::Option* dim_opt = nullptr;
};

void add_class_options(CLI::App* sub, ClassArgs& a, bool dim_required) {
    sub->add_option("--class", a.text,
                    "class, 'n:c0,...,cn' (dimension-ascending) or JSON "
                    "{\"ambient\":n,\"coeffs\":[...]}")
        ->required();
    a.dim_opt = sub->add_option("--dim", a.dim, "dimension of the variety");
    if (dim_required) a.dim_opt->required();
    sub->add_flag("--signed", a.signed_in,
                  "coefficients are the signed class (-1)^dim c_Ma");
}

struct ResolvedClass {
    ClassSpec spec;
    ChowClass unsigned_c;
    ChowClass signed_c;
    int dim = 0;
};

ResolvedClass resolve(const ClassArgs& a) {
    ClassSpec spec = parse_class(a.text);
    spec.is_signed = a.signed_in;
    spec.dim = a.dim;
    const ChowClass input = spec.to_class();
    const ChowClass flipped = signed_class(input, a.dim);
    return ResolvedClass{std::move(spec), a.signed_in ? flipped : input,
                         a.signed_in ? input : flipped, a.dim};
}

json jinput(const ClassSpec& spec) {
    json j{{"class", {{"ambient", spec.ambient}, {"coeffs", jvec(spec.coeffs)}}},
           {"signed", spec.is_signed}};
    if (spec.dim) j["dim"] = *spec.dim;
    return j;
}

json jdual_report(const DualReport& rep) {
    return json{{"defect", rep.defect},
                {"dual_codim", rep.dual_codim},
                {"dual_dim", rep.dual_dim},
                {"dual_degree", jint(rep.dual_degree)},
                {"dual_degree_signed", jint(rep.dual_degree_signed)},
                {"dual_class_signed", jclass(rep.dual_class_signed)},
                {"dual_class", jclass(signed_class(rep.dual_class_signed, rep.dual_dim))}};
}

void run_dual(const ClassArgs& a, const Io& io) {
    const ResolvedClass r = resolve(a);
    const DualReport rep = dual_defect_degree(r.unsigned_c, r.dim);
    json doc = jdual_report(rep);
    doc["command"] = "dual";
    doc["input"] = jinput(r.spec);
    emit(io, doc,
         "dual: dim " + std::to_string(rep.dual_dim) + ", degree " +
             rep.dual_degree.get_str() + ", defect " + std::to_string(rep.defect) +
             ", signed class " + format_hpoly(poly_of_class(rep.dual_class_signed)));
}

void run_ranks(const ClassArgs& a, const Io& io) {
    const ResolvedClass r = resolve(a);
    const RankVector ranks = ranks_of(r.signed_c);
    json doc{{"command", "ranks"}, {"input", jinput(r.spec)}, {"ranks", jvec(ranks.ranks())}};
    emit(io, doc, "ranks: " + fmt_ints(ranks.ranks()));
}

void run_conormal(const ClassArgs& a, const Io& io) {
    const ResolvedClass r = resolve(a);
    const ConormalCycle cyc = conormal_of(r.unsigned_c, r.dim);
    json doc{{"command", "conormal"},
             {"input", jinput(r.spec)},
             {"bidegrees", jvec(cyc.bidegrees())}};
    emit(io, doc, "conormal bidegrees: " + fmt_ints(cyc.bidegrees()));
}

void run_ed(const ClassArgs& a, const Io& io) {
    const ResolvedClass r = resolve(a);
    const Int e = ed_degree(r.unsigned_c, r.dim);
    json doc{{"command", "ed"}, {"input", jinput(r.spec)}, {"ed_degree", jint(e)}};
    emit(io, doc, "ED degree: " + e.get_str());
}

void run_dual_variety(const ClassArgs& a, const Io& io) {
    const ResolvedClass r = resolve(a);
    const DualReport rep = dual_defect_degree(r.unsigned_c, r.dim);
    const Int mt = mt_dual_degree(r.unsigned_c, r.dim, rep.dual_codim);
    json doc = jdual_report(rep);
    doc["command"] = "dual-variety";
    doc["input"] = jinput(r.spec);
    doc["mt_degree"] = jint(mt);
    doc["mt_agrees"] = (mt == rep.dual_degree_signed);
    emit(io, doc,
         "dual variety: defect " + std::to_string(rep.defect) + ", dim " +
             std::to_string(rep.dual_dim) + ", degree " + rep.dual_degree.get_str() +
             (mt == rep.dual_degree_signed ? " (cut-formula check agrees)"
                                           : " (cut-formula check DISAGREES)"));
}

struct ConeArgs {
    std::string text;
    int from = 0;
    int to = 0;
    int r = 0;
    bool general = false;
    CLI::Option* from_opt = nullptr;
    CLI::Option* to_opt = nullptr;
    CLI::Option* r_opt = nullptr;
};

void run_cone(const ConeArgs& a, const Io& io) {
    const ChowClass base = parse_class(a.text).to_class();
    json doc{{"command", "cone"}, {"base", jclass(base)}};
    ChowClass out = ChowClass::zero(base.ambient());
    int vertex_dim = 0;
    if (a.general) {
        if (a.to_opt->count() || a.from_opt->count())
            throw ValidationError("cone: --general excludes --from/--to");
        if (!a.r_opt->count()) throw ValidationError("cone: --general requires --r");
        const ConeSpec spec = ConeSpec::general(base.ambient(), a.r);
        out = cone_class_general(base, a.r);
        vertex_dim = spec.vertex_dim();
        doc["mode"] = "general";
        doc["r"] = a.r;
        doc["target_ambient"] = base.ambient();
    } else {
        if (a.r_opt->count()) throw ValidationError("cone: --r requires --general");
        if (!a.to_opt->count())
            throw ValidationError("cone: give --to n (complementary) or --general --r r");
        if (a.from_opt->count() && a.from != base.ambient())
            throw ValidationError("cone: --from disagrees with the class ambient");
        const ConeSpec spec = ConeSpec::complementary(base.ambient(), a.to);
        out = cone_class(base, a.to);
        vertex_dim = spec.vertex_dim();
        doc["mode"] = "complementary";
        doc["target_ambient"] = a.to;
    }
    const Int eu = vertex_euler_obstruction(base, std::max(base.top_dim(), 0));
    doc["vertex_dim"] = vertex_dim;
    doc["cone_class"] = jclass(out);
    doc["vertex_euler_obstruction"] = jint(eu);
    emit(io, doc,
         "cone class: " + format_class(out) + "; vertex P^" + std::to_string(vertex_dim) +
             ", Euler obstruction " + eu.get_str());
}

struct EulerArgs {
    std::string text;
    int dim = 0;
    CLI::Option* dim_opt = nullptr;
};

void run_euler_vertex(const EulerArgs& a, const Io& io) {
    const ClassSpec spec = parse_class(a.text);
    const ChowClass base = spec.to_class();
    int dim = std::max(base.top_dim(), 0);
    if (a.dim_opt->count()) {
        if (a.dim < base.top_dim())
            throw ValidationError("euler-vertex: class supported above --dim");
        dim = a.dim;
    }
    const Int eu = vertex_euler_obstruction(base, dim);
    json doc{{"command", "euler-vertex"},
             {"input", {{"class", {{"ambient", spec.ambient}, {"coeffs", jvec(spec.coeffs)}}}}},
             {"euler_obstruction", jint(eu)}};
    emit(io, doc, "Euler obstruction at the vertex: " + eu.get_str());
}

struct PullbackArgs {
    std::string text;
    int from = 0;
    int to = 0;
    CLI::Option* from_opt = nullptr;
};

void run_pullback(const PullbackArgs& a, const Io& io) {
    const ChowClass base = parse_class(a.text).to_class();
    if (a.from_opt->count() && a.from != base.ambient())
        throw ValidationError("pullback: --from disagrees with the class ambient");
    const ChowClass out = pullback_class(base, a.to);
    json doc{{"command", "pullback"},
             {"from", base.ambient()},
             {"to", a.to},
             {"base", jclass(base)},
             {"pullback_class", jclass(out)}};
    emit(io, doc, "pullback to P^" + std::to_string(a.to) + ": " + format_class(out));
}

struct HypersurfaceArgs {
    int n = 0;
    std::string d;
    int sing_dim = -1;
};

void run_hypersurface(const HypersurfaceArgs& a, const Io& io) {
    const Int d = parse_big(a.d);
    const PartialRankVector pr = hypersurface_ranks(a.n, d, a.sing_dim);
    json ranks = json::array();
    for (size_t i = 0; i < pr.ranks.size(); ++i)
        ranks.push_back(pr.known[i] ? jint(pr.ranks[i]) : json(nullptr));
    json doc{{"command", "hypersurface"},
             {"n", a.n},
             {"d", jint(d)},
             {"sing_dim", a.sing_dim},
             {"ranks", ranks}};
    std::string summary;
    if (a.sing_dim == -1) {
        const ChowClass cls = smooth_hypersurface_class(a.n, d);
        const DualReport rep = dual_defect_degree(cls, a.n - 1);
        doc["class"] = jclass(cls);
        doc["defect"] = rep.defect;
        doc["dual_degree"] = jint(rep.dual_degree);
        summary = "smooth hypersurface: class " + format_class(cls) + ", dual degree " +
                  rep.dual_degree.get_str();
    } else {
        std::string shown = "(";
        for (size_t i = 0; i < pr.ranks.size(); ++i) {
            if (i) shown += ", ";
            shown += pr.known[i] ? pr.ranks[i].get_str() : std::string("?");
        }
        summary = "ranks forced above the singular locus: " + shown + ")";
    }
    emit(io, doc, summary);
}

PlaneCurveSing parse_curve_sing(const std::string& text) {
    if (text == "node") return PlaneCurveSing::node();
    if (text == "cusp") return PlaneCurveSing::cusp();
    const auto colon = text.find(':');
    if (colon == std::string::npos)
        throw ValidationError("plucker curve: --sing expects m:mu, 'node' or 'cusp'");
    return PlaneCurveSing{parse_big(text.substr(0, colon)),
                          parse_big(text.substr(colon + 1))};
}

HypersurfaceSing parse_hyp_sing(const std::string& text) {
    if (text == "node") return HypersurfaceSing::node();
    const auto colon = text.find(':');
    if (colon == std::string::npos)
        throw ValidationError("plucker hypersurface: --sing expects mu:muSection or 'node'");
    return HypersurfaceSing{parse_big(text.substr(0, colon)),
                            parse_big(text.substr(colon + 1))};
}

struct PluckerCurveArgs {
    std::string d;
    std::vector<std::string> sings;
    std::string rho;
    CLI::Option* rho_opt = nullptr;
};

void run_plucker_curve(const PluckerCurveArgs& a, const Io& io) {
    const Int d = parse_big(a.d);
    Int budget;
    if (a.rho_opt->count()) {
        if (!a.sings.empty())
            throw ValidationError("plucker curve: give --sing or --rho, not both");
        budget = parse_big(a.rho);
        if (budget < 0) throw ValidationError("plucker curve: --rho must be >= 0");
    } else {
        std::vector<PlaneCurveSing> sings;
        sings.reserve(a.sings.size());
        for (const auto& s : a.sings) sings.push_back(parse_curve_sing(s));
        budget = rho_sum(sings);
    }
    const ChowClass cls = plane_curve_class_from_rho(d, budget);
    const PlaneCurveDual dual = plane_curve_dual(d, budget);
    const Int ed = curve_ed_degree(d, budget);
    json doc{{"command", "plucker-curve"},
             {"d", jint(d)},
             {"rho_sum", jint(budget)},
             {"class_signed", jclass(cls)},
             {"class", jclass(signed_class(cls, 1))},
             {"dual",
              {{"degree", jint(dual.degree)},
               {"class_signed", jclass(dual.class_signed)},
               {"class", jclass(signed_class(dual.class_signed, 1))},
               {"rho_sum", jint(dual.rho_sum)}}},
             {"ed_degree", jint(ed)}};
    emit(io, doc,
         "plane curve d=" + d.get_str() + ", rho " + budget.get_str() + ": dual degree " +
             dual.degree.get_str() + ", dual rho " + dual.rho_sum.get_str() +
             ", ED degree " + ed.get_str());
}

struct PluckerHypArgs {
    int n = 0;
    std::string d;
    std::vector<std::string> sings;
};

void run_plucker_hypersurface(const PluckerHypArgs& a, const Io& io) {
    const Int d = parse_big(a.d);
    std::vector<HypersurfaceSing> sings;
    sings.reserve(a.sings.size());
    for (const auto& s : a.sings) sings.push_back(parse_hyp_sing(s));
    const Int corr = correction_sum(sings);
    const ChowClass cls = piene_isolated_class(a.n, d, sings);
    const Int teissier = teissier_dual_degree(a.n, d, sings);
    const DualReport rep = dual_defect_degree(cls, a.n - 1);
    json doc{{"command", "plucker-hypersurface"},
             {"n", a.n},
             {"d", jint(d)},
             {"correction_sum", jint(corr)},
             {"class", jclass(cls)},
             {"teissier_dual_degree", jint(teissier)},
             {"defect", rep.defect},
             {"dual_dim", rep.dual_dim},
             {"dual_degree", jint(rep.dual_degree)},
             {"dual_degree_signed", jint(rep.dual_degree_signed)},
             {"dual_is_hypersurface", rep.defect == 0},
             {"teissier_agrees", rep.defect == 0 && teissier == rep.dual_degree_signed}};
    emit(io, doc,
         "hypersurface d=" + d.get_str() + " in P^" + std::to_string(a.n) + ": class " +
             format_class(cls) + "; dual degree " + rep.dual_degree.get_str() +
             (rep.defect == 0 ? " (Teissier " + teissier.get_str() + ")"
                              : " with defect " + std::to_string(rep.defect)));
}

void run_self_dual_check(const ClassArgs& a, const Io& io) {
    const ResolvedClass r = resolve(a);
    const bool sd = is_self_dual(r.signed_c);
    json doc{{"command", "self-dual-check"}, {"input", jinput(r.spec)}, {"self_dual", sd}};
    std::string summary = sd ? "self-dual: yes" : "self-dual: no";
    if (r.signed_c.ambient() % 2 == 0) {
        Int alt = 0;
        for (int j = 0; j <= r.unsigned_c.ambient(); ++j)
            alt += neg_one_pow(j) * r.unsigned_c[j];
        const bool nec = even_dim_self_dual_check(r.signed_c, r.dim);
        doc["alternating_sum"] = jint(alt);
        doc["even_ambient_obstruction_vanishes"] = nec;
        if (!nec) summary += " (even-ambient alternating sum " + alt.get_str() + " != 0)";
    }
    emit(io, doc, summary);
}

struct SolveArgs {
    int n = 0;
    std::vector<std::string> fixes;
    int dim = 0;
    CLI::Option* dim_opt = nullptr;
};

void run_self_dual_solve(const SolveArgs& a, const Io& io) {
    std::map<int, Int> fixed;
    for (const auto& f : a.fixes) {
        const auto eq = f.find('=');
        if (eq == std::string::npos)
            throw ValidationError("self-dual solve: --fix expects j=value");
        const int j = small_int(parse_big(f.substr(0, eq)), "fixed index");
        Int v = parse_big(f.substr(eq + 1));
        if (a.dim_opt->count()) v *= neg_one_pow(a.dim);
        if (!fixed.emplace(j, std::move(v)).second)
            throw ValidationError("self-dual solve: duplicate fixed index " + std::to_string(j));
    }
    const AffineFamily fam = self_dual_family(a.n, fixed);
    json jfixed = json::object();
    for (const auto& [j, v] : fixed) jfixed[std::to_string(j)] = jint(v);
    json family{{"dimension", fam.dimension()},
                {"free_coefficients", fam.free_coefficients},
                {"particular", jratvec(fam.particular)},
                {"integral", fam.integral}};
    json basis = json::array();
    for (const auto& dir : fam.basis) basis.push_back(jratvec(dir));
    family["basis"] = std::move(basis);
    if (fam.integral) {
        family["integer_particular"] = jvec(fam.integer_particular);
        json ibasis = json::array();
        for (const auto& dir : fam.integer_basis) ibasis.push_back(jvec(dir));
        family["integer_basis"] = std::move(ibasis);
    }
    json doc{{"command", "self-dual-solve"},
             {"n", a.n},
             {"fixed", std::move(jfixed)},
             {"family", std::move(family)}};
    std::string frees;
    for (size_t i = 0; i < fam.free_coefficients.size(); ++i) {
        if (i) frees += ", ";
        frees += "alpha_" + std::to_string(fam.free_coefficients[i]);
    }
    emit(io, doc,
         "self-dual family in P^" + std::to_string(a.n) + ": dimension " +
             std::to_string(fam.dimension()) +
             (fam.dimension() ? " (free " + frees + ")" : "") +
             (fam.integral ? ", has integer points" : ", no integer points"));
}

struct SurfaceArgs {
    std::string d;
    std::string e;
    bool isolated = false;
    CLI::Option* e_opt = nullptr;
};

void run_self_dual_surface(const SurfaceArgs& a, const Io& io) {
    const Int d = parse_big(a.d);
    if (a.isolated == static_cast<bool>(a.e_opt->count()))
        throw ValidationError("self-dual surface: give exactly one of --e or --isolated");
    const Int e = a.isolated ? -d * (d - 4) : parse_big(a.e);
    const ChowClass cls =
        a.isolated ? self_dual_surface_class_isolated(d) : self_dual_surface_class(d, e);
    const bool sd = is_self_dual(cls);
    const Int ed = ed_degree(cls, 2);
    json doc{{"command", "self-dual-surface"},
             {"d", jint(d)},
             {"e", jint(e)},
             {"isolated", a.isolated},
             {"class", jclass(cls)},
             {"self_dual", sd},
             {"ed_degree", jint(ed)}};
    emit(io, doc,
         "surface class " + format_class(cls) + ": " + (sd ? "self-dual" : "NOT self-dual") +
             ", ED degree " + ed.get_str());
}

void run_self_dual_budget(const std::string& d_text, const Io& io) {
    const Int d = parse_big(d_text);
    const RhoBudget b = self_dual_rho_budget(d);
    json doc{{"command", "self-dual-budget"},
             {"d", jint(d)},
             {"rho_sum", jint(b.rho_sum)},
             {"node_count", jrat(b.node_count)},
             {"node_count_integral", b.node_count_integral}};
    emit(io, doc,
         "budget rho = " + b.rho_sum.get_str() + ", as nodes " + fmt_rat(b.node_count) +
             (b.node_count_integral ? " (integral)" : " (NOT integral: parity obstruction)"));
}

struct HypconsArgs {
    int n = 0;
    std::string d;
    int sing_dim = -1;
};

void run_self_dual_hypcons(const HypconsArgs& a, const Io& io) {
    const Int d = parse_big(a.d);
    const HypconsVerdict v = hypcons_check(a.n, d, a.sing_dim);
    json doc{{"command", "self-dual-hypcons"},
             {"n", a.n},
             {"d", jint(d)},
             {"sing_dim", a.sing_dim},
             {"feasible", v.feasible},
             {"solver_feasible", v.solver_feasible},
             {"agree", v.agree}};
    emit(io, doc,
         std::string("self-dual hypersurface ") + (v.feasible ? "possible" : "impossible") +
             " (dimension bound); solver " + (v.solver_feasible ? "agrees" : "says infeasible"));
}

}  // namespace

ClassSpec parse_class(const std::string& text) {
    std::string s;
    s.reserve(text.size());
    for (unsigned char ch : text)
        if (!std::isspace(ch)) s.push_back(static_cast<char>(ch));
    if (s.empty()) throw ValidationError("parse_class: empty class text");

    int ambient = 0;
    std::vector<Int> coeffs;
    if (s.front() == '{') {
        const json doc = json::parse(s, nullptr, false);
        if (doc.is_discarded() || !doc.is_object())
            throw ValidationError("parse_class: malformed JSON class object");
        if (!doc.contains("ambient") || !doc.contains("coeffs") || !doc["coeffs"].is_array())
            throw ValidationError("parse_class: JSON class needs \"ambient\" and \"coeffs\"");
        if (!doc["ambient"].is_number_integer())
            throw ValidationError("parse_class: \"ambient\" must be an integer");
        const auto amb = doc["ambient"].get<std::int64_t>();
        if (amb < 0 || amb > kMaxAmbient)
            throw ValidationError("parse_class: ambient out of range");
        ambient = static_cast<int>(amb);
        for (const json& el : doc["coeffs"]) {
            if (el.is_number_integer())
                coeffs.emplace_back(static_cast<long>(el.get<std::int64_t>()));
            else if (el.is_string())
                coeffs.push_back(parse_big(el.get<std::string>()));
            else
                throw ValidationError(
                    "parse_class: coefficients must be integers or decimal strings");
        }
    } else {
        const auto colon = s.find(':');
        if (colon == std::string::npos)
            throw ValidationError("parse_class: expected 'n:c0,c1,...,cn'");
        const Int amb = parse_big(s.substr(0, colon));
        if (amb < 0 || amb > kMaxAmbient)
            throw ValidationError("parse_class: ambient out of range");
        ambient = static_cast<int>(amb.get_si());
        const std::string rest = s.substr(colon + 1);
        size_t pos = 0;
        while (true) {
            const auto comma = rest.find(',', pos);
            coeffs.push_back(parse_big(
                rest.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos)));
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
    }
    if (coeffs.size() != static_cast<size_t>(ambient) + 1)
        throw ValidationError("parse_class: expected " + std::to_string(ambient + 1) +
                              " coefficients, got " + std::to_string(coeffs.size()));
    ClassSpec spec;
    spec.ambient = ambient;
    spec.coeffs = std::move(coeffs);
    return spec;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Io io;
    io.out = &out;
    io.err = &err;

    CLI::App app{"exact projective-duality calculator for Chern-Mather classes"};
    app.name("matherdual");
    app.add_flag("--json,!--no-json", io.json_out, "emit the JSON document on stdout (default on)");
    app.add_flag("--quiet", io.quiet, "suppress the human summary");
    app.require_subcommand(1);

    auto* sub_dual = app.add_subcommand("dual", "projective dual class, defect and degree");
    sub_dual->fallthrough();
    ClassArgs dual_args;
    add_class_options(sub_dual, dual_args, true);
    sub_dual->callback([&] { run_dual(dual_args, io); });

    auto* sub_ranks = app.add_subcommand("ranks", "polar degrees of the signed class");
    sub_ranks->fallthrough();
    ClassArgs ranks_args;
    add_class_options(sub_ranks, ranks_args, true);
    sub_ranks->callback([&] { run_ranks(ranks_args, io); });

    auto* sub_conormal = app.add_subcommand("conormal", "conormal-cycle bidegrees");
    sub_conormal->fallthrough();
    ClassArgs conormal_args;
    add_class_options(sub_conormal, conormal_args, true);
    sub_conormal->callback([&] { run_conormal(conormal_args, io); });

    auto* sub_ed = app.add_subcommand("ed", "Euclidean distance degree");
    sub_ed->fallthrough();
    ClassArgs ed_args;
    add_class_options(sub_ed, ed_args, true);
    sub_ed->callback([&] { run_ed(ed_args, io); });

    auto* sub_dv = app.add_subcommand("dual-variety",
                                      "defect and degree with the cut-formula cross-check");
    sub_dv->fallthrough();
    ClassArgs dv_args;
    add_class_options(sub_dv, dv_args, true);
    sub_dv->callback([&] { run_dual_variety(dv_args, io); });

    auto* sub_cone = app.add_subcommand("cone", "class of a cone over the given base");
    sub_cone->fallthrough();
    ConeArgs cone_args;
    sub_cone->add_option("--class", cone_args.text, "base class")->required();
    cone_args.from_opt =
        sub_cone->add_option("--from", cone_args.from, "ambient of the base (checked)");
    cone_args.to_opt = sub_cone->add_option("--to", cone_args.to, "ambient of the cone");
    cone_args.r_opt = sub_cone->add_option("--r", cone_args.r, "codimension bound, vertex P^(r-2)");
    sub_cone->add_flag("--general", cone_args.general, "general vertex inside the same ambient");
    sub_cone->callback([&] { run_cone(cone_args, io); });

    auto* sub_euler = app.add_subcommand("euler-vertex",
                                         "local Euler obstruction at a cone vertex");
    sub_euler->fallthrough();
    EulerArgs euler_args;
    sub_euler->add_option("--class", euler_args.text, "base class")->required();
    euler_args.dim_opt = sub_euler->add_option("--dim", euler_args.dim, "dimension of the base");
    sub_euler->callback([&] { run_euler_vertex(euler_args, io); });

    auto* sub_pull = app.add_subcommand("pullback", "pullback along the projection from a vertex");
    sub_pull->fallthrough();
    PullbackArgs pull_args;
    sub_pull->add_option("--class", pull_args.text, "base class")->required();
    pull_args.from_opt =
        sub_pull->add_option("--from", pull_args.from, "ambient of the base (checked)");
    sub_pull->add_option("--to", pull_args.to, "target ambient")->required();
    sub_pull->callback([&] { run_pullback(pull_args, io); });

    auto* sub_hyp = app.add_subcommand("hypersurface", "hypersurface class and polar degrees");
    sub_hyp->fallthrough();
    HypersurfaceArgs hyp_args;
    sub_hyp->add_option("--n", hyp_args.n, "ambient dimension")->required();
    sub_hyp->add_option("--d", hyp_args.d, "degree")->required();
    sub_hyp->add_option("--sing-dim", hyp_args.sing_dim,
                        "dimension bound of the singular locus (-1 = smooth)");
    sub_hyp->callback([&] { run_hypersurface(hyp_args, io); });

    auto* sub_plucker = app.add_subcommand("plucker", "degree formulas for singular inputs");
    sub_plucker->fallthrough();
    sub_plucker->require_subcommand(1);

    auto* sub_pc = sub_plucker->add_subcommand("curve", "plane curve with prescribed singularities");
    sub_pc->fallthrough();
    PluckerCurveArgs pc_args;
    sub_pc->add_option("--d", pc_args.d, "degree")->required();
    sub_pc->add_option("--sing", pc_args.sings, "singularity m:mu, 'node' or 'cusp' (repeatable)");
    pc_args.rho_opt = sub_pc->add_option("--rho", pc_args.rho, "total budget instead of --sing");
    sub_pc->callback([&] { run_plucker_curve(pc_args, io); });

    auto* sub_ph = sub_plucker->add_subcommand("hypersurface",
                                               "hypersurface with isolated singularities");
    sub_ph->fallthrough();
    PluckerHypArgs ph_args;
    sub_ph->add_option("--n", ph_args.n, "ambient dimension")->required();
    sub_ph->add_option("--d", ph_args.d, "degree")->required();
    sub_ph->add_option("--sing", ph_args.sings, "singularity mu:muSection or 'node' (repeatable)");
    sub_ph->callback([&] { run_plucker_hypersurface(ph_args, io); });

    auto* sub_sd = app.add_subcommand("self-dual", "self-duality checks and solvers");
    sub_sd->fallthrough();
    sub_sd->require_subcommand(1);

    auto* sub_check = sub_sd->add_subcommand("check", "is the class a fixed point of the duality");
    sub_check->fallthrough();
    ClassArgs check_args;
    add_class_options(sub_check, check_args, true);
    sub_check->callback([&] { run_self_dual_check(check_args, io); });

    auto* sub_solve = sub_sd->add_subcommand("solve", "affine family of self-dual classes");
    sub_solve->fallthrough();
    SolveArgs solve_args;
    sub_solve->add_option("--n", solve_args.n, "ambient dimension")->required();
    sub_solve->add_option("--fix", solve_args.fixes, "pin a coefficient, j=value (repeatable)");
    solve_args.dim_opt = sub_solve->add_option(
        "--dim", solve_args.dim, "interpret fixed values as unsigned coefficients of this dimension");
    sub_solve->callback([&] { run_self_dual_solve(solve_args, io); });

    auto* sub_surface = sub_sd->add_subcommand("surface", "self-dual surface classes in P^3");
    sub_surface->fallthrough();
    SurfaceArgs surface_args;
    sub_surface->add_option("--d", surface_args.d, "degree")->required();
    surface_args.e_opt = sub_surface->add_option("--e", surface_args.e, "[P^1] coefficient");
    sub_surface->add_flag("--isolated", surface_args.isolated,
                          "isolated-singularity member, e = -d(d-4)");
    sub_surface->callback([&] { run_self_dual_surface(surface_args, io); });

    auto* sub_budget = sub_sd->add_subcommand("budget",
                                              "singularity budget of the isolated member");
    sub_budget->fallthrough();
    std::string budget_d;
    sub_budget->add_option("--d", budget_d, "degree")->required();
    sub_budget->callback([&] { run_self_dual_budget(budget_d, io); });

    auto* sub_hypcons = sub_sd->add_subcommand("hypcons",
                                               "feasibility of a self-dual hypersurface");
    sub_hypcons->fallthrough();
    HypconsArgs hypcons_args;
    sub_hypcons->add_option("--n", hypcons_args.n, "ambient dimension")->required();
    sub_hypcons->add_option("--d", hypcons_args.d, "degree")->required();
    sub_hypcons->add_option("--sing-dim", hypcons_args.sing_dim,
                            "dimension bound of the singular locus (-1 = smooth)");
    sub_hypcons->callback([&] { run_self_dual_hypcons(hypcons_args, io); });

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("matherdual");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
        return 0;
    } catch (const CLI::Success& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        emit_error(io, "ParseError", e.what());
        if (!io.quiet) err << "error [ParseError]: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        emit_error(io, e.code(), e.what());
        if (!io.quiet) err << "error [" << e.code() << "]: " << e.what() << "\n";
        return 3;
    } catch (const ValidationError& e) {
        emit_error(io, "ValidationError", e.what());
        if (!io.quiet) err << "error [ValidationError]: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        emit_error(io, "ValidationError", e.what());
        if (!io.quiet) err << "error [ValidationError]: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace mather::cli
