#pragma once

#include <cmath>
#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "veech/bouwmoller/derivation.hpp"
#include "veech/bouwmoller/grid.hpp"
#include "veech/coding/central.hpp"
#include "veech/coding/derivation.hpp"
#include "veech/exact/json.hpp"
#include "veech/farey/farey.hpp"
#include "veech/teich/teich.hpp"
#include "veech/torus/dictionary.hpp"
#include "veech/torus/series.hpp"
#include "veech/torus/square.hpp"
#include "veech/verify/sampling.hpp"

namespace veech::verify {

struct Options {
    int samples = -1;  // per-suite default when negative
    std::uint64_t seed = 7;
};

/// Pass/fail tally for one property. A property holds when the pass fraction reaches `need`.
struct Property {
    std::string name;
    int pass = 0, fail = 0;
    double need = 1.0;
    std::vector<std::string> failures;
    nlohmann::json data = nlohmann::json::object();

    void record(bool ok, const std::string& why = {}) {
        if (ok) {
            ++pass;
            return;
        }
        ++fail;
        if (failures.size() < 5 && !why.empty()) failures.push_back(why);
    }
    bool ok() const {
        int total = pass + fail;
        return total > 0 && pass >= static_cast<int>(std::ceil(need * total - 1e-9));
    }
    nlohmann::json to_json() const {
        nlohmann::json j = {{"name", name}, {"pass", pass}, {"fail", fail}, {"ok", ok()}};
        if (need < 1.0) j["required_rate"] = need;
        if (!failures.empty()) j["failures"] = failures;
        if (!data.empty()) j["data"] = data;
        return j;
    }
};

struct Report {
    std::string suite;
    Options options;
    std::deque<Property> properties;  // stable references for add()

    Report() = default;
    Report(std::string name, Options o) : suite(std::move(name)), options(o) {}

    Property& add(std::string name, double need = 1.0) {
        Property& p = properties.emplace_back();
        p.name = std::move(name);
        p.need = need;
        return p;
    }
    bool ok() const {
        for (const auto& p : properties)
            if (!p.ok()) return false;
        return !properties.empty();
    }
    nlohmann::json to_json() const {
        int pass = 0, fail = 0;
        nlohmann::json props = nlohmann::json::array();
        for (const auto& p : properties) {
            pass += p.pass;
            fail += p.fail;
            props.push_back(p.to_json());
        }
        return {{"suite", suite}, {"seed", options.seed}, {"pass", pass}, {"fail", fail}, {"ok", ok()}, {"properties", props}};
    }
};

namespace detail {

inline std::string case_id(int i) { return "case " + std::to_string(i) + ": "; }

inline int samples_or(const Options& o, int d) { return o.samples > 0 ? o.samples : d; }

/// Hexagon trajectory with direction in Σᵢ.
inline Trajectory hex_sample(Sampler& s, int sector) {
    return s.trajectory(hexagon::surface(), s.direction_in(SectorScheme::Hexagon, sector, Field::sqrt2()));
}

/// Hexagon trajectory with a uniform direction in (0, π).
inline Trajectory hex_uniform(Sampler& s) {
    return s.trajectory(hexagon::surface(), s.direction(0.001, M_PI - 0.001, Field::sqrt2()));
}

inline const Surface& r1() {
    static const Surface s = bm::build_r1();
    return s;
}

/// Bouw-Möller trajectory starting in the octagon with direction in Σᵢ.
inline Trajectory bm_sample(Sampler& s, int sector) {
    return s.trajectory(r1(), s.direction_in(SectorScheme::BouwMoller, sector, Field::sqrt3()));
}

}  // namespace detail

// ---- 1 ----

inline Report suite_central(const Options& o) {
    Report r{"central", o};
    Sampler s(o.seed);
    auto& p = r.add("derive(trace(tau, 60)) is a window of trace(Psi_gamma tau, 60)");
    int n = detail::samples_or(o, 1000), max_off = 0;
    for (int i = 0; i < n; ++i) {
        auto c = hexagon::central_case(detail::hex_sample(s, 0), 60);
        p.record(c.ok(), detail::case_id(i) + c.derived + " not in " + c.image);
        max_off = std::max(max_off, c.offset);
    }
    p.data["max_offset"] = max_off;
    return r;
}

// ---- 2 ----

/// Rounds of normalize+derive on c(τ), normalized by the Farey itinerary of the direction.
struct DerivationRounds {
    std::vector<Word> words;  // words[k] after k rounds
    std::vector<int> sectors;
    int lost = -1;            // first round whose word its diagram does not admit
};

/// Doubles the window from 64 letters until the last round keeps at least min_core letters.
inline DerivationRounds derivation_rounds(const Trajectory& t, int rounds, int min_core = 8, int max_letters = 16000) {
    DerivationRounds d;
    d.sectors = farey_expansion(t.direction, rounds).entries;
    for (int n = 64; n <= max_letters; n *= 2) {
        d.words.assign(1, trace(hexagon::surface(), t, n));
        d.lost = -1;
        for (int k = 0; k <= rounds; ++k) {
            const Word& w = d.words.back();
            if (!hexagon::diagrams()[static_cast<std::size_t>(d.sectors[static_cast<std::size_t>(k)])].admits(w)) {
                d.lost = k;
                return d;
            }
            if (k == rounds || w.size() < 3) break;
            d.words.push_back(derive_sandwich(hexagon::pi(d.sectors[static_cast<std::size_t>(k)])(w)).letters);
        }
        if (static_cast<int>(d.words.size()) == rounds + 1 && static_cast<int>(d.words.back().size()) >= min_core) return d;
    }
    throw WindowTooShort("no window up to " + std::to_string(max_letters) + " letters survives " + std::to_string(rounds) + " rounds");
}

inline Report suite_derivable(const Options& o) {
    Report r{"derivable", o};
    Sampler s(o.seed);
    auto& p = r.add("5 rounds of normalize+derive keep admissibility");
    auto& g = r.add("generation rebuilds every decided round");
    int n = detail::samples_or(o, 200);
    std::map<int, int> lengths;
    for (int i = 0; i < n; ++i) {
        Trajectory t = detail::hex_uniform(s);
        DerivationRounds d;
        try {
            d = derivation_rounds(t, 5);
        } catch (const Error& e) {
            p.record(false, detail::case_id(i) + e.what());
            continue;
        }
        ++lengths[static_cast<int>(d.words.front().size())];
        p.record(d.lost < 0, detail::case_id(i) + "round " + std::to_string(d.lost) + " left its diagram");
        Verdict v = characterize(d.words.front(), 5);
        g.record(v.status != Verdict::Status::Fail, detail::case_id(i) + v.reason);
    }
    for (auto [len, count] : lengths) p.data["window_lengths"][std::to_string(len)] = count;
    return r;
}

// ---- 3 ----

inline Report suite_recognize(const Options& o) {
    Report r{"recognize", o};
    Sampler s(o.seed);
    auto& strict = r.add("recognize_direction(trace(tau, 400), 6) equals farey_expansion(theta, 6)");
    auto& prefix = r.add("decided rounds agree with farey_expansion");
    auto& shrink = r.add("depth-25 interval shorter than 1e-3 rad", 0.95);
    int n = detail::samples_or(o, 100);
    std::map<std::string, int> stops;
    for (int i = 0; i < n; ++i) {
        Trajectory t = detail::hex_uniform(s);
        auto fe = farey_expansion(t.direction, 6);
        Word w = trace(hexagon::surface(), t, 400);
        auto rec = recognize_prefix(w, 6);
        bool agree = true;
        for (std::size_t k = 0; k < rec.prefix.entries.size(); ++k) agree = agree && rec.prefix.entries[k] == fe.entries[k];
        prefix.record(agree, detail::case_id(i) + "entry mismatch");
        try {
            auto full = recognize_direction(w, 6);
            strict.record(full.entries == fe.entries, detail::case_id(i) + "entries differ");
        } catch (const Error& e) {
            strict.record(false, detail::case_id(i) + e.what());
            ++stops["stopped at round " + std::to_string(rec.depth + 1)];
        }
        double len = farey_expansion(t.direction, 25).interval().length();
        shrink.record(len < 1e-3, detail::case_id(i) + "length " + std::to_string(len));
    }
    for (auto [k, v] : stops) strict.data["undecided"][k] = v;
    return r;
}

// ---- 4 ----

inline Word random_path(Sampler& s, const TransitionDiagram& d, std::size_t length) {
    Word w{d.nodes[static_cast<std::size_t>(s.integer(0, static_cast<long>(d.nodes.size()) - 1))]};
    while (w.size() < length) {
        std::vector<char> next;
        for (const auto& a : d.arrows)
            if (a.from == w.back()) next.push_back(a.to);
        w += next[static_cast<std::size_t>(s.integer(0, static_cast<long>(next.size()) - 1))];
    }
    return w;
}

inline Report suite_generation(const Options& o) {
    Report r{"generation", o};
    Sampler s(o.seed);
    auto& inv = r.add("derive(generate(w)) = w");
    auto& sub = r.add("substitution rewrite = generation then re-encoding");
    int n = detail::samples_or(o, 100);
    for (int j = 1; j <= 5; ++j)
        for (int i = 0; i < n; ++i) {
            Word w = random_path(s, hexagon::diagrams()[static_cast<std::size_t>(j)], 30);
            Word g = generate(w, j, 0);
            Word d = derive_sandwich(g).letters;
            inv.record(d == w.substr(1, w.size() - 2), "D" + std::to_string(j) + " " + w);
            auto a = substitution_apply(j, letters_to_arrows(w, j));
            sub.record(a == letters_to_arrows(g, 0) && arrows_to_letters(a, 0) == g, "sigma" + std::to_string(j) + " " + w);
        }
    return r;
}

// ---- 5 ----

inline Report suite_square(const Options& o) {
    Report r{"square", o};
    Sampler s(o.seed);
    static const Surface sq = build_square();
    auto& prime = r.add("gamma' = [[-1,2],[0,1]] sandwich pipeline");
    auto& witness = r.add("gamma = [[-1,1],[0,1]] pipeline has a failure witness");
    auto& gauss = r.add("G_n = F1 o F0^(n-1), n = 1..6, 20 points each");
    auto& series = r.add("Series derivation = n0 single steps + swap");
    auto& series_geo = r.add("Series derivation is a window of trace(Psi(nu1 sigma^-n0) tau)");
    int n = detail::samples_or(o, 200), failures = 0, rejected = 0;
    nlohmann::json first;
    int resampled = 0;
    for (int i = 0; i < n; ++i) {
        Trajectory t;
        square::PipelineReport pr;
        for (;;) {
            t = s.trajectory(sq, s.direction_in(SectorScheme::Square, 0, Field::sqrt2()));
            try {
                pr = square::square_sandwich_pipeline(t, 60);
                break;
            } catch (const DomainError&) {
                ++resampled;  // a sheared start point fell on a side
            }
        }
        prime.record(pr.shear_prime.ok(), detail::case_id(i) + pr.shear_prime.derived + " not in " + pr.shear_prime.image);
        if (!pr.shear.ok()) {
            if (failures++ == 0)
                first = {{"start", t.start}, {"direction", t.direction}, {"derived", pr.shear.derived}, {"image", pr.shear.image}};
        }
    }
    prime.data["resampled_starts"] = resampled;
    witness.record(failures > 0, "no failing case among the samples");
    witness.data = {{"failing_cases", failures}, {"first", first}};

    for (int k = 1; k <= 6; ++k) {
        std::vector<Rational> pts;
        Rational lo(1, k + 1), width = Rational(1, k) - lo;
        for (int i = 0; i < 20; ++i) pts.push_back(lo + width * Rational(s.integer(1, 996), 997));
        auto g = gauss_acceleration_check(k, pts);
        gauss.record(g.ok() && g.points == 20, "n = " + std::to_string(k));
    }

    int windows = 0;
    while (windows < detail::samples_or(o, 100)) {
        Trajectory t = s.trajectory(sq, s.direction_in(SectorScheme::Square, 0, Field::sqrt2()));
        Word w = trace(sq, t, 60);
        SturmianBlockForm f;
        try {
            f = sturmian_block_form(w);
        } catch (const Error&) {
            ++rejected;
            continue;
        }
        ++windows;
        Word x = w;
        for (int k = 0; k < f.n0; ++k) x = single_step_derive(x, f.block, f.separator);
        x = swap_letters(x, f.block, f.separator);
        Word sd = series_derive(w);
        series.record(x == sd, w);
        Mat2 m = square::nu1();
        for (int k = 0; k < f.n0; ++k) m = m * Mat2{1, -1, 0, 1};
        Word g = trace(sq, square::psi(m, t), 60);
        series_geo.record(aligned_offset(sd, g, 20) >= 0, w);
    }
    series.data["rejected_windows"] = rejected;
    return r;
}

// ---- 6 ----

inline Report suite_dictionary(const Options& o) {
    Report r{"dictionary", o};
    Sampler s(o.seed);
    static const Surface par = build_parallelogram();
    static const CutAndPaste m = hexagon_to_parallelogram_map();
    auto& dict = r.add("hex_to_parallelogram(trace_hex) is a window of trace_parallelogram");
    auto& example = r.add("BC periodic word gives A'B'B' periodic and witnesses non-commutation");
    int n = detail::samples_or(o, 200), max_off = 0;
    for (int i = 0; i < n; ++i) {
        Trajectory t = detail::hex_uniform(s);
        int sec = sector_of(t.direction, SectorScheme::Hexagon).index();
        Word w = trace(hexagon::surface(), t, 60);
        Word dw = hex_to_parallelogram(w, sec);
        Trajectory u{m.apply(hexagon::nu(sec) * t.start), hexagon::nu(sec) * t.direction};
        Word pw = trace(par, u, static_cast<int>(dw.size()) + 6);
        int off = aligned_offset(dw, pw, 6);
        dict.record(off >= 0, detail::case_id(i) + display(dw) + " not in " + display(pw));
        max_off = std::max(max_off, off);
    }
    dict.data["max_offset"] = max_off;

    auto nc = noncommutation_witness();
    auto periodic_in = [](const Word& w, const Word& period) {
        for (std::size_t k = 0; k < period.size(); ++k) {
            Word rot = period.substr(k) + period.substr(0, k), p;
            while (p.size() < w.size()) p += rot;
            if (p.substr(0, w.size()) == w) return true;
        }
        return false;
    };
    bool words = periodic_in(nc.word, "BC") && nc.derived_is_shift() && periodic_in(nc.dictionary, parse_word("A'B'B'"));
    bool differs = !periodic_in(nc.derived_dictionary, parse_word("A'B'B'")) && !periodic_in(series_derive(nc.dictionary), parse_word("A'B'B'"));
    example.record(words && differs && nc.witnessed(), "dictionary " + display(nc.dictionary));
    example.data = {{"word", display(nc.word)},
                  {"derived", display(nc.derived)},
                  {"dictionary", display(nc.dictionary)},
                  {"derived_dictionary", display(nc.derived_dictionary)},
                  {"dictionary_derived", display(nc.dictionary_derived)},
                  {"series_derived_dictionary", display(series_derive(nc.dictionary))}};
    return r;
}

// ---- 7 ----

inline Report suite_bm_constants(const Options& o) {
    Report r{"bm-constants", o};
    Field r2 = Field::sqrt2(), r3 = Field::sqrt3();
    Field a1 = detail::r1().area();
    r.add("area(R1) = 2(2+sqrt2)").record(a1 == Field(2) * (Field(2) + r2), a1.to_string());
    Field a2 = bm::build_r2().area() * bm::r2_scale_sq();
    r.add("area(R2) = area(R1) with a^2 = 2 sqrt6/3").record(a2 == a1, a2.to_string());
    auto sg = bm::sigma();
    Mat2 shape{r2 / 2, (Field(1) + r2) / 2, 0, r3 / 2};
    r.add("sigma shape and scale").record(sg.shape == shape && sg.scale_sq == Field(2) * Field::sqrt6() / 3, sg.shape.to_string());
    r.add("det(sigma) = 1").record(sg.det() == Field(1), sg.det().to_string());
    auto mod = bm::cylinder_modulus_check();
    auto& cyl = r.add("three horizontal cylinders, each of inverse modulus 2+sqrt2");
    cyl.record(mod.ok(), std::to_string(mod.cylinders.size()) + " cylinders");
    for (const auto& c : mod.cylinders) cyl.data["moduli"].push_back(c.mu.to_string());
    return r;
}

// ---- 8 ----

inline Report suite_bm_main(const Options& o) {
    Report r{"bm-main", o};
    Sampler s(o.seed);
    auto& p = r.add("bm_derive(trace_R1(tau, 60)) is a window of trace_R2(Psi_sigma tau, 60)");
    int n = detail::samples_or(o, 500), max_off = 0;
    for (int i = 0; i < n; ++i) {
        auto c = bm::derivation_case(detail::bm_sample(s, 0), 60);
        p.record(c.ok(), detail::case_id(i) + display(c.derived) + " not in " + display(c.image));
        max_off = std::max(max_off, c.offset);
    }
    p.data["max_offset"] = max_off;
    return r;
}

// ---- 9 ----

inline Report suite_teich(const Options& o) {
    Report r{"teich", o};
    Sampler s(o.seed);
    auto& code = r.add("teich_cutting_sequence = Farey itinerary, depth 8");
    auto& norep = r.add("crossed side labels never repeat");
    auto& geo = r.add("exact crossing check, 3 levels");
    auto& disk = r.add("disk image of -tan(theta) is e^{i(pi - 2 theta)} within 1e-12");
    auto& flow = r.add("flow shadow g_t^theta i tends to -tan(theta)");
    auto& refl = r.add("alpha, beta, gamma are reflections in the sides of the fundamental triangle");
    auto& f3 = r.add("fact3 at depth 4");
    int n = detail::samples_or(o, 100);
    double worst = 0;
    for (int i = 0; i < n; ++i) {
        Direction d = s.direction(0.001, M_PI - 0.001, Field::sqrt2());
        auto seq = teich::teich_cutting_sequence(d, 8);
        code.record(seq.labels == farey_expansion(d, 8).entries, detail::case_id(i) + "labels differ");
        bool rep = false;
        for (std::size_t k = 1; k < seq.sides.size(); ++k) rep = rep || seq.sides[k] == seq.sides[k - 1];
        norep.record(!rep, detail::case_id(i) + "repeated side");
        if (i < (n + 1) / 2) {
            auto c = teich::geometric_crossing_check(d, 3);
            geo.record(c.ok(), detail::case_id(i) + (c.diffs.empty() ? "" : c.diffs.front()));
        }
        if (i < (n + 1) / 2) {
            auto e = teich::ray_endpoint(d);
            worst = std::max(worst, e.error());
            disk.record(e.error() < 1e-12, detail::case_id(i) + std::to_string(e.error()));
            double th = d.projective().angle(), p = e.point.value.to_double();
            auto z = teich::flow_shadow(th, 40.0);
            flow.record(std::abs(z.real() - p) < 1e-6 * (1 + std::abs(p)) && z.imag() < 1e-6, detail::case_id(i));
        }
        Trajectory t = s.trajectory(hexagon::surface(), d);
        try {
            auto f = teich::fact3_check(t, 4);
            f3.record(f.ok(), detail::case_id(i) + (f.diffs.empty() ? "" : f.diffs.front()));
        } catch (const Error& e) {
            f3.record(false, detail::case_id(i) + e.what());
        }
    }
    disk.data["max_error"] = worst;
    for (const auto& c : teich::reflection_checks()) refl.record(c.ok(), c.name);
    return r;
}

// ---- 10 ----

inline Report suite_structural(const Options& o) {
    Report r{"structural", o};
    Sampler s(o.seed);
    int n = detail::samples_or(o, 20);

    auto gr = bm::validate_grid_graph(bm::grid_graph());
    auto& grid = r.add("grid graph rebuilds both orthogonal gluings");
    grid.record(gr.ok(), gr.diffs.empty() ? "" : gr.diffs.front());
    grid.data = {{"checks", gr.checks}, {"diffs", gr.diffs}};

    auto& cp = r.add("cut-and-paste maps tile source and target");
    for (const auto& [name, map] : std::vector<std::pair<std::string, CutAndPaste>>{
             {"hexagon to parallelogram", hexagon_to_parallelogram_map()}, {"R1perp to R2perp", bm::upsilon_perp()}}) {
        auto e = validate_cut_and_paste(map);
        cp.record(e.empty(), name + ": " + e);
    }

    auto& hp = r.add("hexagon permutations pi_i match nu_i on traces");
    auto& hd = r.add("hexagon diagrams D_i admit every trace in Sigma_i and use every arrow");
    for (int i = 0; i < hexagon::kSectors; ++i) {
        std::set<std::string> used;
        for (int k = 0; k < n; ++k) {
            Trajectory t = detail::hex_sample(s, i);
            Word w = trace(hexagon::surface(), t, 60);
            Word v = trace(hexagon::surface(), {hexagon::nu(i) * t.start, hexagon::nu(i) * t.direction}, 60);
            hp.record(hexagon::pi(i)(w) == v, "pi" + std::to_string(i) + " on " + w);
            hd.record(hexagon::diagrams()[static_cast<std::size_t>(i)].admits(w), "D" + std::to_string(i) + " " + w);
            auto tr = transitions_of(w);
            used.insert(tr.begin(), tr.end());
        }
        hd.record(used == hexagon::diagrams()[static_cast<std::size_t>(i)].transitions(), "D" + std::to_string(i) + " has an unused arrow");
    }

    auto& sp = r.add("square permutation pi_1 matches nu_1");
    static const Surface sq = build_square();
    for (int k = 0; k < n; ++k) {
        Trajectory t = s.trajectory(sq, s.direction_in(SectorScheme::Square, 1, Field::sqrt2()));
        Word w = trace(sq, t, 60);
        sp.record(square::pi1()(w) == trace(sq, {square::nu1() * t.start, square::nu1() * t.direction}, 60), w);
    }

    auto& bp = r.add("Bouw-Moller permutations pi_i match nu_i on traces");
    auto& bd = r.add("Bouw-Moller diagrams D_i admit every trace in Sigma_i and use every arrow");
    for (int i = 0; i < bm::kSectors; ++i) {
        std::set<std::string> used;
        for (int k = 0; k < n; ++k) {
            Trajectory t = detail::bm_sample(s, 0);
            Mat2 inv = bm::nu(i).inverse();
            Word w = trace(detail::r1(), {inv * t.start, inv * t.direction}, 60);
            bp.record(bm::pi(i)(w) == trace(detail::r1(), t, 60), "pi" + std::to_string(i) + " on " + w);
            bd.record(bm::diagrams()[static_cast<std::size_t>(i)].admits(w), "BM D" + std::to_string(i) + " " + w);
            auto tr = transitions_of(w);
            used.insert(tr.begin(), tr.end());
        }
        bd.record(used == bm::diagrams()[static_cast<std::size_t>(i)].transitions(), "BM D" + std::to_string(i) + " has an unused arrow");
    }

    auto& aug = r.add("augmented and dictionary D0 labels match traced crossings");
    static const Surface ah = build_augmented_hexagon(), dh = build_dictionary_hexagon();
    for (int k = 0; k < n; ++k) {
        Trajectory t = detail::hex_sample(s, 0);
        for (const auto& [surf, diag] : std::vector<std::pair<const Surface*, TransitionDiagram>>{
                 {&ah, hexagon::augmented_d0()}, {&dh, hexagon::dictionary_d0()}}) {
            auto read = read_augmentation(trace(*surf, t, 120), "ABC");
            bool ok = read.has_value();
            if (ok)
                for (const auto& [tr, label] : *read) {
                    auto a = diag.find(tr[0], tr[1]);
                    ok = ok && a && a->label == label;
                }
            aug.record(ok, diag.name);
        }
    }

    auto& gen = r.add("generation labels rebuild traced windows");
    for (int k = 0; k < n * 5; ++k) {
        Trajectory t = detail::hex_uniform(s);
        Verdict v = characterize(trace(hexagon::surface(), t, 200), 2);
        gen.record(v.status != Verdict::Status::Fail, v.reason);
    }
    return r;
}

inline const std::map<std::string, std::function<Report(const Options&)>>& suites() {
    static const std::map<std::string, std::function<Report(const Options&)>> all = {
        {"central", suite_central},       {"derivable", suite_derivable},   {"recognize", suite_recognize},
        {"generation", suite_generation}, {"square", suite_square},         {"dictionary", suite_dictionary},
        {"bm-constants", suite_bm_constants}, {"bm-main", suite_bm_main}, {"teich", suite_teich},
        {"structural", suite_structural},
    };
    return all;
}

/// Suites in report order.
inline const std::vector<std::string>& suite_order() {
    static const std::vector<std::string> order = {"central", "derivable", "recognize", "generation", "square",
                                                   "dictionary", "bm-constants", "bm-main", "teich", "structural"};
    return order;
}

inline Report run_suite(const std::string& name, const Options& o) {
    auto it = suites().find(name);
    if (it == suites().end()) throw DomainError("unknown suite '" + name + "'");
    return it->second(o);
}

}  // namespace veech::verify
