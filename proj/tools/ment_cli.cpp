// ment: command-line front end.

#include "ment/entropy.hpp"
#include "ment/realline.hpp"
#include "ment/symbolic.hpp"
#include "ment/veins.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace ment;
using nlohmann::ordered_json;

namespace {

constexpr std::size_t kDefaultDepthCap = 20;

struct InternalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

double round12(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return std::strtod(buf, nullptr);
}

std::string num12(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

std::pair<long, long> parse_vein(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) throw std::invalid_argument(s);
        std::size_t used = 0;
        long p = std::stol(s.substr(0, slash), &used);
        if (used != slash) throw std::invalid_argument(s);
        long q = std::stol(s.substr(slash + 1), &used);
        if (used != s.size() - slash - 1) throw std::invalid_argument(s);
        return {p, q};
    } catch (const std::logic_error&) {
        throw ParseError("malformed vein '" + s + "' (expected p/q)");
    }
}

ordered_json arc_json(const Arc& a) { return ordered_json::array({to_fraction(a.from), to_fraction(a.to)}); }

ordered_json result_json(const EntropyResult& r) {
    ordered_json j;
    j["growth"] = round12(r.growth);
    j["entropy_nats"] = round12(r.entropy_nats);
    j["dimension"] = round12(r.dimension);
    j["method"] = r.method;
    j["error_bound"] = round12(r.error_bound);
    if (r.boundary_hit) j["boundary_hit"] = true;
    if (!r.fallback.empty()) j["fallback"] = r.fallback;
    return j;
}

// Output sink: stdout or a file given by --out.
struct Output {
    std::string path;
    void write(const std::string& text) const {
        if (path.empty()) {
            std::cout << text;
            return;
        }
        std::ofstream f(path, std::ios::binary);
        if (!f) throw PreconditionError("cannot open output file '" + path + "'");
        f << text;
    }
};

std::string csv_cell(const std::string& c) {
    if (c.find_first_of(",\"\n") == std::string::npos) return c;
    std::string q = "\"";
    for (char ch : c) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    return q + "\"";
}

std::string csv_line(const std::vector<std::string>& cells) {
    std::string s;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) s += ',';
        s += csv_cell(cells[i]);
    }
    return s + "\n";
}

// A JSON object printed as CSV: header row of keys, one row of values.
std::string object_csv(const ordered_json& j) {
    std::vector<std::string> keys, vals;
    for (auto it = j.begin(); it != j.end(); ++it) {
        keys.push_back(it.key());
        vals.push_back(it.value().is_string() ? it.value().get<std::string>() : it.value().dump());
    }
    return csv_line(keys) + csv_line(vals);
}

struct Globals {
    std::string format;
    double tol = 1e-12;
    double scan_step = 1e-4;
};

EntropyOptions options(const Globals& g) {
    EntropyOptions o;
    o.tol = g.tol;
    o.scan_step = g.scan_step;
    return o;
}

std::string emit(const Globals& g, const ordered_json& j, const std::string& default_format = "json") {
    std::string f = g.format.empty() ? default_format : g.format;
    if (f == "csv") return object_csv(j);
    return j.dump(2) + "\n";
}

// Entropy at an angle on the p/q vein (the real line when q = 2).
EntropyResult entropy_at(const Angle& t, const std::string& vein, SetKind set, Method m, const EntropyOptions& o,
                         ordered_json& extra) {
    auto [p, q] = parse_vein(vein);
    if (set == SetKind::Spine) {
        if (q != 2) throw PreconditionError("the spine set is only available on the real vein 1/2");
        if (m != Method::Automaton) throw PreconditionError("the spine set is computed by the automaton only");
        EntropyResult r = dimension_of(spine_forbidden_arcs(t), o);
        return r;
    }
    if (set != SetKind::Htree) throw PreconditionError("entropy/dimension support the sets H and S");
    if (q == 2 && p == 1) return real_entropy(t, m, o);
    OrbitPortrait P = orbit_portrait(p, q);
    Leaf leaf = vein_leaf_from_angle(P, t);
    extra["leaf"] = ordered_json::array({to_fraction(leaf.a), to_fraction(leaf.b)});
    return vein_entropy(P, leaf, m, o);
}

ordered_json window_json(const Window& w) {
    ordered_json j;
    j["lo"] = to_fraction(w.lo);
    j["hi"] = to_fraction(w.hi);
    j["period"] = w.period;
    j["pseudocenter"] = to_fraction(w.pseudocenter);
    j["sigma0"] = w.sigma0;
    return j;
}

ordered_json portrait_json(const OrbitPortrait& P) {
    ordered_json j;
    j["p"] = P.p;
    j["q"] = P.q;
    ordered_json angles = ordered_json::array();
    for (const Angle& a : P.angles) angles.push_back(to_fraction(a));
    j["angles"] = angles;
    j["theta0"] = to_fraction(P.theta0);
    j["theta1"] = to_fraction(P.theta1);
    j["tau"] = to_fraction(P.tau);
    j["sigma0"] = P.sigma0;
    j["sigma1"] = P.sigma1;
    ordered_json f = ordered_json::array();
    for (const Arc& a : P.forbidden) f.push_back(arc_json(a));
    j["forbidden"] = f;
    return j;
}

void env_override(double& target, const char* name) {
    if (const char* v = std::getenv(name)) {
        char* end = nullptr;
        double x = std::strtod(v, &end);
        if (end == v || *end != '\0' || !(x > 0)) throw ParseError(std::string("bad value for ") + name);
        target = x;
    }
}

int fail(int code, const std::string& kind, const std::string& message) {
    ordered_json j;
    j["error"] = kind;
    j["message"] = message;
    std::cerr << j.dump() << "\n";
    return code;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Entropy and dimension of quadratic Hubbard trees via external angles"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    std::string tol_flag, scan_flag;
    app.add_option("--format", g.format, "output format: json or csv")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--tol", tol_flag, "root and eigenvalue tolerance (env MENT_TOL)");
    app.add_option("--scan-step", scan_flag, "kneading root scan step (env MENT_SCAN)");

    std::string angle, angle2, vein = "1/2", method = "automaton", set = "H", out, runs;
    std::string from = "0", to = "1/2";
    std::string sigma0 = "01", sigma1 = "10";
    long den = 1023;
    std::size_t depth = 3, depth_cap = kDefaultDepthCap, jobs = 1, samples = 64;

    auto* entropy = app.add_subcommand("entropy", "entropy of the Hubbard tree at an angle");
    entropy->add_option("angle", angle, "characteristic angle (p/q or 0.pre(per))")->required();
    entropy->add_option("--vein", vein, "principal vein p/q (1/2 is the real line)");
    entropy->add_option("--method", method, "automaton, kneading or laps");

    auto* dimension = app.add_subcommand("dimension", "Hausdorff dimension of H_c or S_c");
    dimension->add_option("angle", angle)->required();
    dimension->add_option("--set", set, "H or S");
    dimension->add_option("--vein", vein);
    dimension->add_option("--method", method);

    auto* windows = app.add_subcommand("windows", "real hyperbolic windows from the bisection");
    windows->add_option("--depth", depth)->required();
    windows->add_option("--max-depth", depth_cap, "depth cap");
    windows->add_option("--out", out, "output file");

    auto* sweep_cmd = app.add_subcommand("sweep", "entropy over the real grid k/den in [from, to], mapped to --vein by surgery");
    sweep_cmd->add_option("--from", from);
    sweep_cmd->add_option("--to", to);
    sweep_cmd->add_option("--den", den, "odd denominator of the grid");
    sweep_cmd->add_option("--vein", vein);
    sweep_cmd->add_option("--method", method);
    sweep_cmd->add_option("--jobs", jobs, "worker threads");
    sweep_cmd->add_option("--out", out, "output file");

    auto* pc = app.add_subcommand("pseudocenter", "dyadic of shortest expansion in (lo, hi)");
    pc->add_option("lo", angle)->required();
    pc->add_option("hi", angle2)->required();

    auto* rl = app.add_subcommand("runlength", "run-length kneading code of an angle");
    rl->add_option("angle", angle)->required();

    auto* ex = app.add_subcommand("extremal", "extremal test for a run-length string");
    ex->add_option("string", runs, "e.g. 2,1,1,1 or (3|2,1)*")->required();

    std::size_t count = 3;
    auto* dom = app.add_subcommand("dominant", "dominant test and dominant approximations");
    dom->add_option("string", runs)->required();
    dom->add_option("--count", count, "number of approximations");

    auto* tn = app.add_subcommand("tune", "tuning substitution 0 -> sigma0, 1 -> sigma1");
    tn->add_option("angle", angle)->required();
    tn->add_option("--sigma0", sigma0);
    tn->add_option("--sigma1", sigma1);

    auto* sg = app.add_subcommand("surgery", "combinatorial surgery Ψ_{p/q}");
    sg->add_option("angle", angle)->required();
    sg->add_option("--vein", vein)->required();

    auto* si = app.add_subcommand("surgery-inverse", "inverse surgery Φ_{p/q}");
    si->add_option("angle", angle)->required();
    si->add_option("--vein", vein)->required();

    std::string pq;
    auto* pt = app.add_subcommand("portrait", "orbit portrait of rotation number p/q");
    pt->add_option("pq", pq)->required();

    auto* pd = app.add_subcommand("param-dim", "covering estimate of the dimension of P_c");
    pd->add_option("angle", angle)->required();
    pd->add_option("--depth", depth);

    auto* cc = app.add_subcommand("conjecture-check", "entropy maximum on (lo, hi) versus its pseudocenter");
    cc->add_option("lo", angle)->required();
    cc->add_option("hi", angle2)->required();
    cc->add_option("--samples", samples);

    auto* am = app.add_subcommand("automaton", "dump the Markov automaton of H_c");
    am->add_option("angle", angle)->required();
    am->add_option("--vein", vein);
    am->add_option("--set", set);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        return fail(2, "parse", e.what());
    }

    try {
        env_override(g.tol, "MENT_TOL");
        env_override(g.scan_step, "MENT_SCAN");
        auto positive = [](const std::string& s, const char* name) {
            char* end = nullptr;
            double x = std::strtod(s.c_str(), &end);
            if (end == s.c_str() || *end != '\0' || !(x > 0)) throw ParseError(std::string("bad value for ") + name);
            return x;
        };
        if (!tol_flag.empty()) g.tol = positive(tol_flag, "--tol");
        if (!scan_flag.empty()) g.scan_step = positive(scan_flag, "--scan-step");
        EntropyOptions opt = options(g);

        if (entropy->parsed() || dimension->parsed()) {
            Angle t = parse_angle(angle);
            Method m = parse_method(method);
            SetKind k = parse_set_kind(set);
            ordered_json extra;
            EntropyResult r = entropy_at(t, vein, k, m, opt, extra);
            ordered_json j;
            j["angle"] = to_fraction(t);
            j["vein"] = vein;
            if (dimension->parsed()) j["set"] = to_string(k);
            for (auto it = extra.begin(); it != extra.end(); ++it) j[it.key()] = it.value();
            ordered_json rj = result_json(r);
            for (auto it = rj.begin(); it != rj.end(); ++it) j[it.key()] = it.value();
            std::cout << emit(g, j);
        } else if (windows->parsed()) {
            if (depth > depth_cap)
                throw PreconditionError("depth " + std::to_string(depth) + " exceeds the cap " +
                                        std::to_string(depth_cap));
            auto ws = enumerate_windows(depth);
            std::string text;
            if (g.format == "csv") {
                text = csv_line({"lo", "hi", "period", "pseudocenter", "sigma0"});
                for (const Window& w : ws)
                    text += csv_line({to_fraction(w.lo), to_fraction(w.hi), std::to_string(w.period),
                                      to_fraction(w.pseudocenter), w.sigma0});
            } else {
                ordered_json arr = ordered_json::array();
                for (const Window& w : ws) arr.push_back(window_json(w));
                ordered_json j;
                j["depth"] = depth;
                j["windows"] = arr;
                text = j.dump(2) + "\n";
            }
            Output{out}.write(text);
        } else if (sweep_cmd->parsed()) {
            if (den <= 0 || den % 2 == 0) throw PreconditionError("sweep: --den must be a positive odd integer");
            // "1" names the right end of the circle, not 0.
            Rational lo_v = parse_angle(from).value();
            Rational hi_v = to == "1" ? Rational(1) : parse_angle(to).value();
            if (!(lo_v < hi_v)) throw PreconditionError("sweep: need from < to");
            Method m = parse_method(method);
            auto [p, q] = parse_vein(vein);
            std::optional<OrbitPortrait> P;
            if (!(p == 1 && q == 2)) P = orbit_portrait(p, q);
            std::vector<Angle> thetas;
            for (long k = 0; k < den; ++k) {
                Rational x(k, den);
                if (lo_v <= x && x <= hi_v) thetas.push_back(Angle(x));
            }
            auto rows = sweep(thetas, m, P ? &*P : nullptr, opt, jobs);
            std::string text;
            std::size_t failed = 0;
            if (g.format == "json") {
                ordered_json arr = ordered_json::array();
                for (const SweepRow& r : rows) {
                    ordered_json j;
                    j["theta"] = to_fraction(r.theta);
                    if (r.error.empty()) {
                        ordered_json rj = result_json(r.result);
                        for (auto it = rj.begin(); it != rj.end(); ++it) j[it.key()] = it.value();
                    } else {
                        j["error"] = r.error;
                        ++failed;
                    }
                    arr.push_back(j);
                }
                text = arr.dump(2) + "\n";
            } else {
                text = csv_line({"theta_num", "theta_den", "growth", "entropy_nats", "dimension", "method", "error"});
                for (const SweepRow& r : rows) {
                    std::string n = r.theta.is_zero() ? "0" : r.theta.num().str();
                    std::string d = r.theta.is_zero() ? "1" : r.theta.den().str();
                    if (!r.error.empty()) {
                        ++failed;
                        text += csv_line({n, d, "", "", "", "", r.error});
                        continue;
                    }
                    text += csv_line({n, d, num12(r.result.growth), num12(r.result.entropy_nats),
                                      num12(r.result.dimension), r.result.method, ""});
                }
            }
            Output{out}.write(text);
            if (failed)
                std::cerr << ordered_json{{"warning", "rows failed"}, {"count", failed}}.dump() << "\n";
        } else if (pc->parsed()) {
            Angle lo = parse_angle(angle), hi = parse_angle(angle2);
            Angle c = pseudocenter(lo, hi);
            ordered_json j;
            j["lo"] = to_fraction(lo);
            j["hi"] = to_fraction(hi);
            j["pseudocenter"] = to_fraction(c);
            j["binary"] = to_binary(c);
            std::cout << emit(g, j);
        } else if (rl->parsed()) {
            Angle t = parse_angle(angle);
            ordered_json j;
            j["angle"] = to_fraction(t);
            j["binary"] = to_binary(t);
            j["runlength"] = to_string(runlength(t));
            std::cout << emit(g, j);
        } else if (ex->parsed()) {
            RunString s = parse_runstring(runs);
            ordered_json j;
            j["string"] = to_string(s);
            j["extremal"] = is_extremal(s);
            std::cout << emit(g, j);
        } else if (dom->parsed()) {
            RunString s = parse_runstring(runs);
            ordered_json j;
            j["string"] = to_string(s);
            j["extremal"] = is_extremal(s);
            if (s.finite()) j["dominant"] = is_dominant(s);
            if (s.finite() && s.size() % 2 == 0 && is_extremal(s)) {
                ordered_json arr = ordered_json::array();
                for (const RunString& a : dominant_approximations(s, count)) arr.push_back(to_string(a));
                j["approximations"] = arr;
            }
            std::cout << emit(g, j);
        } else if (tn->parsed()) {
            Angle t = parse_angle(angle);
            Angle r = tune(Tuning{sigma0, sigma1}, t);
            ordered_json j;
            j["angle"] = to_fraction(t);
            j["sigma0"] = sigma0;
            j["sigma1"] = sigma1;
            j["tuned"] = to_fraction(r);
            j["binary"] = to_binary(r);
            std::cout << emit(g, j);
        } else if (sg->parsed() || si->parsed()) {
            auto [p, q] = parse_vein(vein);
            OrbitPortrait P = orbit_portrait(p, q);
            Angle t = parse_angle(angle);
            Angle r = sg->parsed() ? surgery(P, t) : surgery_inverse(P, t);
            ordered_json j;
            j["angle"] = to_fraction(t);
            j["vein"] = vein;
            j[sg->parsed() ? "image" : "preimage"] = to_fraction(r);
            j["binary"] = to_binary(r);
            std::cout << emit(g, j);
        } else if (pt->parsed()) {
            auto [p, q] = parse_vein(pq);
            std::cout << portrait_json(orbit_portrait(p, q)).dump(2) << "\n";
        } else if (pd->parsed()) {
            Angle t = parse_angle(angle);
            ParamDimensionEstimate e = param_dimension_estimate(t, depth);
            ordered_json j;
            j["angle"] = to_fraction(t);
            j["depth"] = depth;
            j["estimate"] = round12(e.estimate);
            ordered_json counts = ordered_json::array();
            for (auto [n, c] : e.counts) counts.push_back(ordered_json::array({n, c}));
            if (g.format != "csv") j["counts"] = counts;
            std::cout << emit(g, j);
        } else if (cc->parsed()) {
            Angle lo = parse_angle(angle), hi = parse_angle(angle2);
            ordered_json j;
            j["lo"] = to_fraction(lo);
            j["hi"] = to_fraction(hi);
            if (!(lo < hi)) {
                j["samples"] = 0;
                j["max_at_pseudocenter"] = true;
                std::cout << emit(g, j);
                return 0;
            }
            Angle c = pseudocenter(lo, hi);
            double best = -1;
            Angle arg;
            for (std::size_t k = 1; k <= samples; ++k) {
                Angle x(lo.value() + (hi.value() - lo.value()) * Rational(static_cast<long>(k), static_cast<long>(samples + 1)));
                double h = real_entropy(x, Method::Automaton, opt).entropy_nats;
                if (h > best + 1e-12) {
                    best = h;
                    arg = x;
                }
            }
            double hc = real_entropy(c, Method::Automaton, opt).entropy_nats;
            j["samples"] = samples;
            j["pseudocenter"] = to_fraction(c);
            j["entropy_at_pseudocenter"] = round12(hc);
            j["argmax"] = to_fraction(arg);
            j["max_entropy"] = round12(best);
            j["max_at_pseudocenter"] = hc >= best - 1e-9;
            std::cout << emit(g, j);
        } else if (am->parsed()) {
            Angle t = parse_angle(angle);
            auto [p, q] = parse_vein(vein);
            SetKind k = parse_set_kind(set);
            std::vector<Arc> arcs;
            if (k == SetKind::Spine) arcs = spine_forbidden_arcs(t);
            else if (p == 1 && q == 2) arcs = real_forbidden_arcs(t);
            else {
                OrbitPortrait P = orbit_portrait(p, q);
                arcs = vein_forbidden_arcs(P, vein_leaf_from_angle(P, t));
            }
            MarkovAutomaton a = build_automaton(arcs);
            ordered_json j;
            ordered_json fa = ordered_json::array();
            for (const Arc& x : arcs) fa.push_back(arc_json(x));
            j["forbidden"] = fa;
            j["cells"] = a.cells.size();
            j["pruned"] = a.pruned;
            ordered_json states = ordered_json::array();
            for (std::size_t s : a.states) states.push_back(arc_json(a.cells[s]));
            j["states"] = states;
            ordered_json edges = ordered_json::array();
            for (std::size_t s = 0; s < a.succ.size(); ++s)
                for (std::size_t d : a.succ[s]) edges.push_back(ordered_json::array({s, d, 1}));
            j["edges"] = edges;
            j["spectral_radius"] = round12(spectral_radius(a.succ, opt.tol).radius);
            std::cout << j.dump(2) << "\n";
        }
        return 0;
    } catch (const ParseError& e) {
        return fail(2, "parse", e.what());
    } catch (const PreconditionError& e) {
        return fail(3, "precondition", e.what());
    } catch (const std::exception& e) {
        return fail(4, "internal", e.what());
    }
}
