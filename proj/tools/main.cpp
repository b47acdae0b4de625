// Command line front end: exact calculator for tree diagrams, stabilizer
// subgroups and eventually periodic limit diagrams.

#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "thompson/corpus.hpp"
#include "thompson/limits.hpp"

using namespace thompson;
using nlohmann::json;

namespace {

struct Options {
    bool as_json = false;
};

json json_root() { return json{{"format", 1}}; }

void emit(const Options& opt, const std::string& text, json payload) {
    if (opt.as_json) {
        json root = json_root();
        root.merge_patch(payload);
        std::cout << root.dump(2) << "\n";
    } else {
        std::cout << text << "\n";
    }
}

json element_json(const TreeDiagram& d) {
    json out = json::array();
    for (const auto& [u, v] : d.pairs()) out.push_back({u, v});
    return out;
}

std::vector<Point> parse_points(const std::vector<std::string>& literals) {
    std::vector<Point> out;
    for (const std::string& s : literals) out.push_back(parse_point(s));
    return out;
}

std::string interval_text(const IntervalSet& set) {
    std::string out;
    for (const Interval& iv : set) {
        if (!out.empty()) out += ' ';
        out += "[" + fraction_to_string(iv.lo) + "," + fraction_to_string(iv.hi) +
               "]";
    }
    return out.empty() ? "(empty)" : out;
}

json interval_json(const IntervalSet& set) {
    json out = json::array();
    for (const Interval& iv : set)
        out.push_back({fraction_to_string(iv.lo), fraction_to_string(iv.hi)});
    return out;
}

std::string factor_text(const FactorWord& w) {
    if (w.empty()) return "e";
    std::string out;
    for (const FactorLetter& l : w) {
        if (!out.empty()) out += ' ';
        out += l.name;
        if (l.exp != 1) out += "^" + std::to_string(l.exp);
    }
    return out;
}

json factor_json(const FactorWord& w) {
    json out = json::array();
    for (const FactorLetter& l : w) out.push_back({l.name, l.exp});
    return out;
}

json gens_manifest(const StabilizerSpec& U, const GeneratorSet& gens,
                   bool extended, bool certificates) {
    json root;
    json pts = json::array();
    for (const Point& p : U.points) pts.push_back(to_string(p));
    root["points"] = pts;
    root["type_word"] = U.partition.type_word;
    root["rank"] = U.rank();
    json mins = json::array();
    for (const NamedElement& ne : gens.minimal)
        mins.push_back({{"name", ne.name}, {"element", element_json(ne.element)}});
    root["minimal"] = mins;
    if (extended) {
        json exts = json::array();
        for (const NamedElement& ne : gens.extended)
            exts.push_back({{"name", ne.name}, {"element", element_json(ne.element)}});
        root["extended"] = exts;
    }
    json blocks = json::array();
    for (const Block& b : gens.blocks) {
        json jb;
        jb["interval"] = {fraction_to_string(b.lo), fraction_to_string(b.hi)};
        jb["class2_count"] = b.m;
        if (b.m >= 1) {
            jb["leaves"] = b.std_pos.leaves;
            jb["prefixes"] = b.std_pos.prefixes;
        }
        blocks.push_back(jb);
    }
    root["blocks"] = blocks;
    root["conjugator"] = element_json(gens.conjugator);
    if (certificates) {
        json certs = json::array();
        for (const CertEntry& ce : generation_certificates(U))
            certs.push_back({{"target", ce.target}, {"word", factor_json(ce.word)}});
        root["certificates"] = certs;
    }
    return root;
}

void write_gens_files(const std::string& dir, const json& manifest,
                      const GeneratorSet& gens) {
    std::filesystem::create_directories(dir);
    std::ofstream mf(dir + "/manifest.json");
    mf << manifest.dump(2) << "\n";
    auto dump = [&dir](const NamedElement& ne) {
        std::string fname = ne.name;
        for (char& c : fname)
            if (c == ':' || c == '@') c = '_';
        std::ofstream out(dir + "/" + fname + ".elem");
        out << to_string(ne.element) << "\n";
    };
    for (const NamedElement& ne : gens.minimal) dump(ne);
    for (const NamedElement& ne : gens.extended) dump(ne);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact tree-diagram calculator for the group F and its "
                 "stabilizer subgroups"};
    app.require_subcommand(1);
    Options opt;
    app.add_flag("--json", opt.as_json, "machine-readable JSON output");
    std::function<void()> run;

    // --- plain diagram operations -----------------------------------------
    {
        auto* c = app.add_subcommand("mul", "multiply elements left to right");
        auto a = std::make_shared<std::string>();
        auto b = std::make_shared<std::string>();
        c->add_option("a", *a)->required();
        c->add_option("b", *b)->required();
        c->callback([&, a, b] {
            run = [&, a, b] {
                TreeDiagram d = multiply(parse_element(*a), parse_element(*b));
                emit(opt, to_string(d), {{"element", element_json(d)}});
            };
        });
    }
    {
        auto* c = app.add_subcommand("inv", "invert an element");
        auto a = std::make_shared<std::string>();
        c->add_option("a", *a)->required();
        c->callback([&, a] {
            run = [&, a] {
                TreeDiagram d = inverse(parse_element(*a));
                emit(opt, to_string(d), {{"element", element_json(d)}});
            };
        });
    }
    {
        auto* c = app.add_subcommand("reduce", "reduce a diagram to normal form");
        auto a = std::make_shared<std::string>();
        c->add_option("a", *a)->required();
        c->callback([&, a] {
            run = [&, a] {
                TreeDiagram d = parse_element(*a);
                emit(opt, to_string(d), {{"element", element_json(d)}});
            };
        });
    }
    {
        auto* c = app.add_subcommand("eq", "compare two elements");
        auto a = std::make_shared<std::string>();
        auto b = std::make_shared<std::string>();
        c->add_option("a", *a)->required();
        c->add_option("b", *b)->required();
        c->callback([&, a, b] {
            run = [&, a, b] {
                bool equal = parse_element(*a) == parse_element(*b);
                emit(opt, equal ? "true" : "false", {{"equal", equal}});
            };
        });
    }
    {
        auto* c = app.add_subcommand("apply", "image of a point");
        auto a = std::make_shared<std::string>();
        auto p = std::make_shared<std::string>();
        auto lim = std::make_shared<bool>(false);
        c->add_option("element", *a)->required();
        c->add_option("point", *p)->required();
        c->add_flag("--limit", *lim, "treat the first argument as a limit diagram");
        c->callback([&, a, p, lim] {
            run = [&, a, p, lim] {
                Point img = *lim ? eval_limit(parse_limit(*a), parse_point(*p))
                                 : apply(parse_element(*a), parse_point(*p));
                emit(opt, to_string(img),
                     {{"point", to_string(img)},
                      {"value", fraction_to_string(to_fraction(img))}});
            };
        });
    }
    {
        auto* c = app.add_subcommand("slope", "log2 slope at a point");
        auto a = std::make_shared<std::string>();
        auto p = std::make_shared<std::string>();
        auto side = std::make_shared<std::string>();
        c->add_option("element", *a)->required();
        c->add_option("point", *p)->required();
        c->add_option("side", *side)
            ->required()
            ->check(CLI::IsMember({"left", "right"}));
        c->callback([&, a, p, side] {
            run = [&, a, p, side] {
                long e = slope_exponent(parse_element(*a), parse_point(*p),
                                        *side == "left" ? Side::left : Side::right);
                emit(opt, std::to_string(e), {{"exponent", e}});
            };
        });
    }
    {
        auto* c = app.add_subcommand("fixed", "fixed intervals and points");
        auto a = std::make_shared<std::string>();
        c->add_option("element", *a)->required();
        c->callback([&, a] {
            run = [&, a] {
                FixedSet fs = fixed_set(parse_element(*a));
                std::string pts;
                json jpts = json::array();
                for (const Point& p : fs.points) {
                    if (!pts.empty()) pts += ' ';
                    pts += to_string(p);
                    jpts.push_back(to_string(p));
                }
                emit(opt,
                     "intervals: " + interval_text(fs.intervals) +
                         "\npoints: " + (pts.empty() ? "(none)" : pts),
                     {{"intervals", interval_json(fs.intervals)},
                      {"points", jpts}});
            };
        });
    }
    {
        auto* c = app.add_subcommand("support", "support intervals");
        auto a = std::make_shared<std::string>();
        c->add_option("element", *a)->required();
        c->callback([&, a] {
            run = [&, a] {
                IntervalSet s = support(parse_element(*a));
                emit(opt, interval_text(s), {{"intervals", interval_json(s)}});
            };
        });
    }
    {
        auto* c = app.add_subcommand("dist", "Hamming distance");
        auto a = std::make_shared<std::string>();
        auto b = std::make_shared<std::string>();
        c->add_option("a", *a)->required();
        c->add_option("b", *b)->required();
        c->callback([&, a, b] {
            run = [&, a, b] {
                Fraction d = hamming(parse_element(*a), parse_element(*b));
                emit(opt, fraction_to_string(d),
                     {{"distance", fraction_to_string(d)}});
            };
        });
    }

    // --- words --------------------------------------------------------------
    {
        auto* c = app.add_subcommand("toword", "express a diagram as a word");
        auto a = std::make_shared<std::string>();
        auto normal = std::make_shared<bool>(false);
        c->add_option("element", *a)->required();
        c->add_flag("--normal", *normal,
                    "normal form over the infinite generating set");
        c->callback([&, a, normal] {
            run = [&, a, normal] {
                TreeDiagram d = parse_element(*a);
                GroupWord w =
                    *normal ? diagram_to_normal_form(d) : diagram_to_word(d);
                emit(opt, to_string(w), {{"word", to_string(w)}});
            };
        });
    }
    {
        auto* c = app.add_subcommand("fromword", "evaluate a word");
        auto w = std::make_shared<std::string>();
        c->add_option("word", *w)->required();
        c->callback([&, w] {
            run = [&, w] {
                TreeDiagram d = word_to_diagram(parse_word(*w));
                emit(opt, to_string(d), {{"element", element_json(d)}});
            };
        });
    }

    // --- constructions -------------------------------------------------------
    {
        auto* c = app.add_subcommand(
            "build", "complete a partial set of branch pairs to an element");
        auto a = std::make_shared<std::string>();
        c->add_option("pairs", *a)->required();
        c->callback([&, a] {
            run = [&, a] {
                TreeDiagram d = from_branch_pairs(parse_branch_pairs(*a));
                emit(opt, to_string(d), {{"element", element_json(d)}});
            };
        });
    }
    {
        auto* c = app.add_subcommand("copy", "copy acting inside [u]");
        auto a = std::make_shared<std::string>();
        auto u = std::make_shared<std::string>();
        c->add_option("element", *a)->required();
        c->add_option("u", *u)->required();
        c->callback([&, a, u] {
            run = [&, a, u] {
                if (!is_bits(*u)) throw ParseError("u must be a binary word");
                TreeDiagram d = copy_into(parse_element(*a), *u);
                emit(opt, to_string(d), {{"element", element_json(d)}});
            };
        });
    }
    {
        auto* c = app.add_subcommand("oplus", "sum acting on the two halves");
        auto a = std::make_shared<std::string>();
        auto b = std::make_shared<std::string>();
        c->add_option("a", *a)->required();
        c->add_option("b", *b)->required();
        c->callback([&, a, b] {
            run = [&, a, b] {
                TreeDiagram d = oplus(parse_element(*a), parse_element(*b));
                emit(opt, to_string(d), {{"element", element_json(d)}});
            };
        });
    }
    {
        auto* c = app.add_subcommand("mirror", "conjugate by t -> 1-t");
        auto a = std::make_shared<std::string>();
        c->add_option("element", *a)->required();
        c->callback([&, a] {
            run = [&, a] {
                TreeDiagram d = mirror(parse_element(*a));
                emit(opt, to_string(d), {{"element", element_json(d)}});
            };
        });
    }
    {
        auto* c = app.add_subcommand("rescale", "carry an element into [a,b]");
        auto a = std::make_shared<std::string>();
        auto lo = std::make_shared<std::string>();
        auto hi = std::make_shared<std::string>();
        c->add_option("element", *a)->required();
        c->add_option("lo", *lo)->required();
        c->add_option("hi", *hi)->required();
        c->callback([&, a, lo, hi] {
            run = [&, a, lo, hi] {
                TreeDiagram d = rescale(parse_element(*a), parse_fraction(*lo),
                                        parse_fraction(*hi));
                emit(opt, to_string(d), {{"element", element_json(d)}});
            };
        });
    }

    // --- stabilizers ----------------------------------------------------------
    auto add_points_option = [](CLI::App* c,
                                std::shared_ptr<std::vector<std::string>> pts,
                                bool required = true) {
        auto* o = c->add_option("-u,--point", *pts, "stabilized point");
        if (required) o->required();
    };
    {
        auto* c = app.add_subcommand("member", "stabilizer membership");
        auto a = std::make_shared<std::string>();
        auto pts = std::make_shared<std::vector<std::string>>();
        c->add_option("element", *a)->required();
        add_points_option(c, pts);
        c->callback([&, a, pts] {
            run = [&, a, pts] {
                StabilizerSpec U = StabilizerSpec::of(parse_points(*pts));
                bool in = member(parse_element(*a), U);
                emit(opt, in ? "true" : "false", {{"member", in}});
            };
        });
    }
    {
        auto* c = app.add_subcommand("sig", "slope signature of a member");
        auto a = std::make_shared<std::string>();
        auto pts = std::make_shared<std::vector<std::string>>();
        c->add_option("element", *a)->required();
        add_points_option(c, pts);
        c->callback([&, a, pts] {
            run = [&, a, pts] {
                StabilizerSpec U = StabilizerSpec::of(parse_points(*pts));
                std::vector<long> s = signature(parse_element(*a), U);
                std::string text = "(";
                json js = json::array();
                for (std::size_t i = 0; i < s.size(); ++i) {
                    if (i) text += ",";
                    text += std::to_string(s[i]);
                    js.push_back(s[i]);
                }
                text += ")";
                emit(opt, text, {{"signature", js}});
            };
        });
    }
    {
        auto* c = app.add_subcommand("gens", "generating sets of a stabilizer");
        auto pts = std::make_shared<std::vector<std::string>>();
        auto extended = std::make_shared<bool>(false);
        auto certificate = std::make_shared<bool>(false);
        auto outdir = std::make_shared<std::string>();
        add_points_option(c, pts, false);
        c->add_flag("--extended", *extended, "include the extended set");
        c->add_flag("--certificate", *certificate,
                    "include words generating the extended set");
        c->add_option("-o,--out", *outdir, "write element files and manifest");
        c->callback([&, pts, extended, certificate, outdir] {
            run = [&, pts, extended, certificate, outdir] {
                StabilizerSpec U = StabilizerSpec::of(parse_points(*pts));
                GeneratorSet gens = generators(U);
                json manifest = gens_manifest(U, gens, *extended, *certificate);
                if (!outdir->empty()) write_gens_files(*outdir, manifest, gens);
                json root = json_root();
                root.merge_patch(manifest);
                std::cout << root.dump(2) << "\n";
            };
        });
    }
    {
        auto* c = app.add_subcommand(
            "factor", "factor a member over the extended generating set");
        auto a = std::make_shared<std::string>();
        auto pts = std::make_shared<std::vector<std::string>>();
        c->add_option("element", *a)->required();
        add_points_option(c, pts);
        c->callback([&, a, pts] {
            run = [&, a, pts] {
                StabilizerSpec U = StabilizerSpec::of(parse_points(*pts));
                FactorWord w = factor(parse_element(*a), U);
                emit(opt, factor_text(w), {{"word", factor_json(w)}});
            };
        });
    }
    {
        auto* c = app.add_subcommand(
            "hnncheck", "verify the iterated ascending HNN structure");
        auto pts = std::make_shared<std::vector<std::string>>();
        add_points_option(c, pts);
        c->callback([&, pts] {
            run = [&, pts] {
                StabilizerSpec U = StabilizerSpec::of(parse_points(*pts));
                HnnReport rep = hnn_check(U);
                std::string text =
                    std::string("ascending: ") + (rep.ascending ? "yes" : "no");
                json rows = json::array();
                for (const HnnRow& row : rep.rows) {
                    text += "\nt" + std::to_string(row.stable) + " copy " +
                            std::to_string(row.block) + " " + row.base +
                            " -> " + to_string(row.computed) + " | stated " +
                            to_string(row.claimed) +
                            (row.agrees ? " | agree" : " | differ");
                    rows.push_back({{"stable", row.stable},
                                    {"copy", row.block},
                                    {"base", row.base},
                                    {"computed", to_string(row.computed)},
                                    {"stated", to_string(row.claimed)},
                                    {"agrees", row.agrees}});
                }
                emit(opt, text,
                     {{"ascending", rep.ascending}, {"table", rows}});
            };
        });
    }

    // --- limit diagrams -------------------------------------------------------
    auto resolve_limit = [](const std::string& from, const std::string& to,
                            const std::string& text) {
        if (!text.empty()) return parse_limit(text);
        if (from.empty() || to.empty())
            throw ParseError("need either --limit or both --from and --to");
        return make_conjugator(parse_point(from), parse_point(to));
    };
    {
        auto* c = app.add_subcommand("mkconj",
                                     "limit conjugator between two stabilized "
                                     "class-2 points");
        auto pa = std::make_shared<std::string>();
        auto pb = std::make_shared<std::string>();
        c->add_option("alpha", *pa)->required();
        c->add_option("beta", *pb)->required();
        c->callback([&, pa, pb] {
            run = [&, pa, pb] {
                LimitDiagram L =
                    make_conjugator(parse_point(*pa), parse_point(*pb));
                emit(opt, to_string(L), {{"limit", to_string(L)}});
            };
        });
    }
    {
        auto* c = app.add_subcommand(
            "conj", "conjugate an element through a limit diagram or between "
                    "stabilizers");
        auto a = std::make_shared<std::string>();
        auto from = std::make_shared<std::string>();
        auto to = std::make_shared<std::string>();
        auto text = std::make_shared<std::string>();
        auto us = std::make_shared<std::vector<std::string>>();
        auto vs = std::make_shared<std::vector<std::string>>();
        c->add_option("element", *a)->required();
        c->add_option("--from", *from, "class-2 point stabilized by the input");
        c->add_option("--to", *to, "class-2 target point");
        c->add_option("--limit", *text, "explicit limit diagram");
        c->add_option("-u", *us, "source stabilizer point (repeatable)");
        c->add_option("-v", *vs, "target stabilizer point (repeatable)");
        c->callback([&, a, from, to, text, us, vs] {
            run = [&, a, from, to, text, us, vs] {
                TreeDiagram g = parse_element(*a);
                TreeDiagram image;
                if (!us->empty() || !vs->empty()) {
                    StabilizerSpec U = StabilizerSpec::of(parse_points(*us));
                    StabilizerSpec V = StabilizerSpec::of(parse_points(*vs));
                    image = map_through(conjugate_stabilizer(U, V), g);
                } else {
                    image = conjugate(g, resolve_limit(*from, *to, *text));
                }
                emit(opt, to_string(image), {{"element", element_json(image)}});
            };
        });
    }
    {
        auto* c = app.add_subcommand(
            "approx", "finite approximation of a limit diagram");
        auto m = std::make_shared<long>(0);
        auto from = std::make_shared<std::string>();
        auto to = std::make_shared<std::string>();
        auto text = std::make_shared<std::string>();
        c->add_option("m", *m, "approximation depth")->required();
        c->add_option("--from", *from);
        c->add_option("--to", *to);
        c->add_option("--limit", *text);
        c->callback([&, m, from, to, text] {
            run = [&, m, from, to, text] {
                TreeDiagram d = approximate(resolve_limit(*from, *to, *text), *m);
                emit(opt, to_string(d), {{"element", element_json(d)}});
            };
        });
    }

    // --- corpora ---------------------------------------------------------------
    {
        auto* c = app.add_subcommand("corpus", "seed-reproducible random words");
        auto seed = std::make_shared<std::uint64_t>(1);
        auto size = std::make_shared<std::size_t>(10);
        auto maxlen = std::make_shared<std::size_t>(30);
        c->add_option("--seed", *seed);
        c->add_option("--size", *size);
        c->add_option("--max-len", *maxlen);
        c->callback([&, seed, size, maxlen] {
            run = [&, seed, size, maxlen] {
                auto words = corpus(*seed, *size, *maxlen);
                if (opt.as_json) {
                    json arr = json::array();
                    for (const GroupWord& w : words) arr.push_back(to_string(w));
                    json root = json_root();
                    root["words"] = arr;
                    std::cout << root.dump(2) << "\n";
                } else {
                    for (const GroupWord& w : words)
                        std::cout << to_string(w) << "\n";
                }
            };
        });
    }

    try {
        app.parse(argc, argv);
        run();
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
