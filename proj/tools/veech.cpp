#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "veech/bouwmoller/derivation.hpp"
#include "veech/bouwmoller/grid.hpp"
#include "veech/coding/central.hpp"
#include "veech/coding/derivation.hpp"
#include "veech/exact/json.hpp"
#include "veech/farey/farey.hpp"
#include "veech/render/svg.hpp"
#include "veech/surface/io.hpp"
#include "veech/teich/teich.hpp"
#include "veech/torus/dictionary.hpp"
#include "veech/torus/series.hpp"
#include "veech/torus/square.hpp"
#include "veech/verify/suites.hpp"

using namespace veech;
using nlohmann::json;

namespace {

// Exit codes: 0 all checks pass, 1 a check failed, 2 bad input.
constexpr int kFailed = 1;
constexpr int kBadInput = 2;

const std::map<std::string, std::function<Surface()>>& surfaces() {
    static const std::map<std::string, std::function<Surface()>> m = {
        {"hexagon", build_hexagon},
        {"square", build_square},
        {"square-diagonal", build_square_with_diagonal},
        {"diamond", build_diamond},
        {"parallelogram", build_parallelogram},
        {"augmented-hexagon", build_augmented_hexagon},
        {"dictionary-hexagon", build_dictionary_hexagon},
        {"bm-r1", bm::build_r1},
        {"bm-r2", bm::build_r2},
        {"bm-r1-perp", bm::build_r1_perp},
        {"bm-r2-perp", bm::build_r2_perp},
    };
    return m;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Surface load_surface(const std::string& name) {
    auto it = surfaces().find(name);
    if (it != surfaces().end()) return it->second();
    if (name.size() > 5 && name.substr(name.size() - 5) == ".json") return surface_from_json(json::parse(read_file(name)));
    std::string known;
    for (const auto& [k, _] : surfaces()) known += " " + k;
    throw ParseError("unknown surface '" + name + "' (known:" + known + ", or a .json file)");
}

Vec2 parse_vec(const std::string& s) {
    auto comma = s.find(',');
    if (comma == std::string::npos) throw ParseError("expected x,y but got '" + s + "'");
    return {Field::parse(s.substr(0, comma)), Field::parse(s.substr(comma + 1))};
}

/// A literal word, or the contents of a file when the argument names one.
Word load_word(const std::string& arg) {
    std::ifstream in(arg);
    std::string text = arg;
    if (in) {
        std::stringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    std::string clean;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) clean += c;
    return parse_word(clean);
}

json interval_json(const DirectionInterval& I) {
    return {{"lo", I.lo}, {"hi", I.hi}, {"length", I.length()}};
}

void emit(const json& j, const std::string& out) {
    if (out.empty() || out == "-") {
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::ofstream f(out);
    if (!f) throw ParseError("cannot write " + out);
    f << j.dump(2) << "\n";
}

void emit_text(const std::string& s, const std::string& out) {
    if (out.empty() || out == "-") {
        std::cout << s;
        return;
    }
    std::ofstream f(out);
    if (!f) throw ParseError("cannot write " + out);
    f << s;
}

struct TrajectoryArgs {
    std::string start, dir;
    int n = 60;

    void add(CLI::App* c, bool required) {
        auto* a = c->add_option("--start", start, "start point x,y (exact, e.g. 0,-1/4 or sqrt3/4,1/5)");
        auto* b = c->add_option("--dir", dir, "direction x,y (exact)");
        if (required) {
            a->required();
            b->required();
        }
        c->add_option("--n", n, "number of crossings")->capture_default_str();
    }
    bool given() const { return !start.empty() && !dir.empty(); }
    Trajectory get() const { return {parse_vec(start), Direction(parse_vec(dir))}; }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cutting sequences, derivation and renormalization on Veech surfaces"};
    app.require_subcommand(1);
    int code = 0;

    // trace
    auto* tr = app.add_subcommand("trace", "cutting sequence of a trajectory");
    std::string surface_name = "hexagon";
    TrajectoryArgs ta;
    bool tr_json = false;
    tr->add_option("--surface", surface_name, "builtin surface name or a surface .json file")->capture_default_str();
    ta.add(tr, true);
    tr->add_flag("--json", tr_json, "JSON output");
    tr->callback([&] {
        Surface s = load_surface(surface_name);
        Trajectory t = ta.get();
        auto r = trace_detailed(s, t, ta.n);
        if (!tr_json) {
            std::cout << display(r.word) << "\n";
            return;
        }
        json j = {{"surface", s.name}, {"start", t.start}, {"direction", t.direction}, {"word", display(r.word)}, {"sides", r.sides}};
        std::cout << j.dump(2) << "\n";
    });

    // surface
    auto* sf = app.add_subcommand("surface", "print a presentation as JSON");
    std::string sf_name = "hexagon";
    sf->add_option("name", sf_name, "surface")->capture_default_str();
    sf->callback([&] { std::cout << surface_to_json(load_surface(sf_name)).dump(2) << "\n"; });

    // derive
    auto* dv = app.add_subcommand("derive", "derivation operators on a word");
    std::string dv_word, dv_mode = "sandwich";
    int dv_rounds = 1;
    dv->add_option("--word", dv_word, "word or file")->required();
    dv->add_option("--mode", dv_mode, "sandwich | normalize | bm | series")
        ->check(CLI::IsMember({"sandwich", "normalize", "bm", "series"}))
        ->capture_default_str();
    dv->add_option("--rounds", dv_rounds, "repeat count")->capture_default_str();
    dv->callback([&] {
        Word w = load_word(dv_word);
        json steps = json::array();
        for (int k = 0; k < dv_rounds; ++k) {
            json st;
            if (dv_mode == "sandwich") {
                auto d = derive_sandwich(w);
                st = {{"derived", display(d.letters)}, {"positions", d.positions}};
                w = d.letters;
            } else if (dv_mode == "normalize") {
                auto nf = normal_form_word(w);
                auto d = derive_sandwich(nf.word);
                st = {{"diagram", nf.diagram}, {"normalized", display(nf.word)}, {"derived", display(d.letters)}};
                w = d.letters;
            } else if (dv_mode == "bm") {
                w = bm::bm_derive(w);
                st = {{"derived", display(w)}};
            } else {
                auto f = sturmian_block_form(w);
                w = series_derive(w);
                st = {{"block", std::string(1, f.block)}, {"separator", std::string(1, f.separator)}, {"n0", f.n0}, {"derived", display(w)}};
            }
            steps.push_back(st);
        }
        std::cout << json{{"word", display(load_word(dv_word))}, {"mode", dv_mode}, {"steps", steps}}.dump(2) << "\n";
    });

    // characterize
    auto* ch = app.add_subcommand("characterize", "is a hexagon word a cutting sequence up to depth k");
    std::string ch_word;
    int ch_depth = 3;
    ch->add_option("--word", ch_word, "word or file")->required();
    ch->add_option("--depth", ch_depth)->capture_default_str();
    ch->callback([&] {
        Verdict v = characterize(load_word(ch_word), ch_depth);
        json j = {{"status", to_string(v.status)}, {"prefix", v.prefix}};
        if (v.failing_step >= 0) j["failing_step"] = v.failing_step;
        if (!v.reason.empty()) j["reason"] = v.reason;
        std::cout << j.dump(2) << "\n";
        if (v.status == Verdict::Status::Fail) code = kFailed;
    });

    // recognize
    auto* rc = app.add_subcommand("recognize", "Farey expansion prefix of the direction of a hexagon word");
    std::string rc_word;
    int rc_depth = 6;
    rc->add_option("--word", rc_word, "word or file")->required();
    rc->add_option("--depth", rc_depth)->capture_default_str();
    rc->callback([&] {
        auto r = recognize_prefix(load_word(rc_word), rc_depth);
        json j = {{"depth", r.depth}, {"entries", r.prefix.entries}};
        if (!r.prefix.intervals.empty()) j["interval"] = interval_json(r.prefix.interval());
        if (!r.stop.empty()) {
            j["stop"] = r.stop;
            code = kFailed;
        }
        std::cout << j.dump(2) << "\n";
    });

    // farey
    auto* fe = app.add_subcommand("farey", "Farey expansion of an exact direction");
    std::string fe_dir;
    int fe_depth = 8;
    fe->add_option("--dir", fe_dir, "direction x,y")->required();
    fe->add_option("--depth", fe_depth)->capture_default_str();
    fe->callback([&] {
        auto e = farey_expansion(Direction(parse_vec(fe_dir)), fe_depth);
        std::cout << json{{"entries", e.entries}, {"interval", interval_json(e.interval())}}.dump(2) << "\n";
    });

    // verify
    auto* vf = app.add_subcommand("verify", "run a named check suite (or 'all')");
    std::string vf_suite, vf_out;
    verify::Options vo;
    vf->add_option("suite", vf_suite, "central | derivable | recognize | generation | square | dictionary | bm-constants | bm-main | teich | structural | all")
        ->required();
    vf->add_option("--samples", vo.samples, "sample count (suite default when omitted)");
    vf->add_option("--seed", vo.seed, "RNG seed")->capture_default_str();
    vf->add_option("--out", vf_out, "write the JSON report here");
    vf->callback([&] {
        json j;
        bool ok = true;
        if (vf_suite == "all") {
            j = json::array();
            for (const auto& name : verify::suite_order()) {
                auto r = verify::run_suite(name, vo);
                ok = ok && r.ok();
                j.push_back(r.to_json());
            }
        } else {
            auto r = verify::run_suite(vf_suite, vo);
            ok = r.ok();
            j = r.to_json();
        }
        emit(j, vf_out);
        if (!ok) code = kFailed;
    });

    // render
    auto* rd = app.add_subcommand("render", "SVG figures");
    std::string rd_kind, rd_out, rd_theta;
    int rd_depth = 2;
    TrajectoryArgs rt;
    std::string rd_surface = "hexagon";
    rd->add_option("kind", rd_kind, "surface | farey | tessellation | triangles")
        ->check(CLI::IsMember({"surface", "farey", "tessellation", "triangles"}))
        ->required();
    rd->add_option("--surface", rd_surface)->capture_default_str();
    rt.add(rd, false);
    rd->add_option("--depth", rd_depth, "word length for tessellations")->capture_default_str();
    rd->add_option("--theta", rd_theta, "direction x,y whose Teichmueller ray is drawn");
    rd->add_option("--out", rd_out, "output file (stdout when omitted)");
    rd->callback([&] {
        std::string svg;
        if (rd_kind == "surface") {
            Surface s = load_surface(rd_surface);
            if (rt.given()) {
                Trajectory t = rt.get();
                svg = render::surface_svg(s, &t, rt.n);
            } else {
                svg = render::surface_svg(s);
            }
        } else if (rd_kind == "farey") {
            svg = render::farey_svg();
        } else {
            std::optional<Direction> ray;
            if (!rd_theta.empty()) ray = Direction(parse_vec(rd_theta));
            svg = render::tessellation_svg(rd_depth, rd_kind == "triangles", ray ? &*ray : nullptr);
        }
        emit_text(svg, rd_out);
    });

    // square-verify
    auto* sq = app.add_subcommand("square-verify", "square torus sandwich pipeline on one trajectory, or the square suite");
    TrajectoryArgs sqa;
    verify::Options sqo;
    sqa.add(sq, false);
    sq->add_option("--samples", sqo.samples);
    sq->add_option("--seed", sqo.seed)->capture_default_str();
    sq->callback([&] {
        if (!sqa.given()) {
            auto r = verify::run_suite("square", sqo);
            std::cout << r.to_json().dump(2) << "\n";
            if (!r.ok()) code = kFailed;
            return;
        }
        auto p = square::square_sandwich_pipeline(sqa.get(), sqa.n);
        auto side = [](const square::SandwichCase& c) {
            return json{{"word", display(c.word)}, {"derived", display(c.derived)}, {"image", display(c.image)}, {"offset", c.offset}, {"ok", c.ok()}};
        };
        std::cout << json{{"gamma_prime", side(p.shear_prime)}, {"gamma", side(p.shear)}, {"hat", display(p.hat)}, {"hat_is_image", p.hat_is_image}}.dump(2)
                  << "\n";
        if (!p.shear_prime.ok()) code = kFailed;
    });

    // dict
    auto* dc = app.add_subcommand("dict", "hexagon to parallelogram dictionary");
    std::string dc_word;
    int dc_sector = -1;
    TrajectoryArgs dca;
    dc->add_option("--word", dc_word, "hexagon word or file");
    dc->add_option("--sector", dc_sector, "sector of the direction (read off the word when omitted)");
    dca.add(dc, false);
    dc->callback([&] {
        if (dca.given()) {
            Trajectory t = dca.get();
            int sec = sector_of(t.direction, SectorScheme::Hexagon).index();
            Word w = trace(hexagon::surface(), t, dca.n);
            Word d = hex_to_parallelogram(w, sec);
            static const CutAndPaste m = hexagon_to_parallelogram_map();
            Trajectory u{m.apply(hexagon::nu(sec) * t.start), hexagon::nu(sec) * t.direction};
            Word p = trace(build_parallelogram(), u, static_cast<int>(d.size()) + 6);
            int off = aligned_offset(d, p, 6);
            std::cout << json{{"hexagon", display(w)}, {"dictionary", display(d)}, {"parallelogram", display(p)}, {"offset", off}, {"ok", off >= 0}}.dump(2)
                      << "\n";
            if (off < 0) code = kFailed;
            return;
        }
        if (dc_word.empty()) throw ParseError("give --word or --start/--dir");
        Word w = load_word(dc_word);
        Word d = dc_sector >= 0 ? hex_to_parallelogram(w, dc_sector) : hex_to_parallelogram_any(w);
        std::cout << json{{"hexagon", display(w)}, {"dictionary", display(d)}}.dump(2) << "\n";
    });

    // noncommute
    auto* nc = app.add_subcommand("noncommute", "dictionary and derivation do not commute");
    int nc_periods = 6;
    nc->add_option("--periods", nc_periods)->capture_default_str();
    nc->callback([&] {
        auto r = noncommutation_witness(nc_periods);
        std::cout << json{{"word", display(r.word)},
                          {"derived", display(r.derived)},
                          {"dictionary", display(r.dictionary)},
                          {"derived_dictionary", display(r.derived_dictionary)},
                          {"dictionary_derived", display(r.dictionary_derived)},
                          {"witnessed", r.witnessed()}}
                         .dump(2)
                  << "\n";
        if (!r.witnessed()) code = kFailed;
    });

    // bm
    auto* bmc = app.add_subcommand("bm", "Bouw-Moller surface M(3,4)");
    bmc->require_subcommand(1);
    auto* bmv = bmc->add_subcommand("verify", "derivation check on sampled trajectories");
    verify::Options bmo;
    bmv->add_option("--samples", bmo.samples);
    bmv->add_option("--seed", bmo.seed)->capture_default_str();
    bmv->callback([&] {
        auto r = verify::run_suite("bm-main", bmo);
        std::cout << r.to_json().dump(2) << "\n";
        if (!r.ok()) code = kFailed;
    });
    auto* bmm = bmc->add_subcommand("moduli", "horizontal cylinders of R1 and the constants");
    bmm->callback([&] {
        auto r = verify::run_suite("bm-constants", {});
        auto mod = bm::cylinder_modulus_check();
        json cyl = json::array();
        for (const auto& c : mod.cylinders) cyl.push_back({{"width", describe(c.width)}, {"height", describe(c.height)}, {"inverse_modulus", describe(c.mu)}});
        std::cout << json{{"cylinders", cyl}, {"parabolic", mod.gamma}, {"checks", r.to_json()}}.dump(2) << "\n";
        if (!r.ok()) code = kFailed;
    });
    auto* bmg = bmc->add_subcommand("graph", "grid graph and the orthogonal gluings it predicts");
    bmg->callback([&] {
        auto g = bm::grid_graph();
        auto r = bm::validate_grid_graph(g);
        json arrows = json::array();
        for (const auto& a : r.arrows) arrows.push_back({{"from", std::string(1, a.from)}, {"to", std::string(1, a.to)}, {"glue", a.black ? "top-bottom" : "right-left"}});
        std::cout << json{{"arrows", arrows}, {"r1_perp_pieces", r.r1_pieces}, {"r2_perp_pieces", r.r2_pieces}, {"checks", r.checks}, {"diffs", r.diffs}, {"ok", r.ok()}}.dump(2)
                  << "\n";
        if (!r.ok()) code = kFailed;
    });

    // teich
    auto* te = app.add_subcommand("teich", "Teichmueller disk of the hexagon");
    te->require_subcommand(1);
    auto* tc = te->add_subcommand("code", "cutting sequence of the Teichmueller ray");
    std::string tc_theta;
    int tc_depth = 8;
    bool tc_check = false;
    tc->add_option("--theta", tc_theta, "direction x,y (exact)")->required();
    tc->add_option("--depth", tc_depth)->capture_default_str();
    tc->add_flag("--check", tc_check, "also run the exact crossing check (first 3 levels)");
    tc->callback([&] {
        Direction d(parse_vec(tc_theta));
        auto seq = teich::teich_cutting_sequence(d, tc_depth);
        auto e = teich::ray_endpoint(d);
        json j = {{"labels", seq.labels},
                  {"sides", seq.sides},
                  {"addresses", seq.addresses},
                  {"endpoint", e.point.to_string()},
                  {"disk", {e.disk.real(), e.disk.imag()}}};
        if (tc_check) {
            auto c = teich::geometric_crossing_check(d, std::min(tc_depth, 3));
            j["crossing_check"] = {{"ok", c.ok()}, {"diffs", c.diffs}};
            if (!c.ok()) code = kFailed;
        }
        std::cout << j.dump(2) << "\n";
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : kBadInput;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBadInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBadInput;
    }
    return code;
}
