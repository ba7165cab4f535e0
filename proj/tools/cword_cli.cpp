// cword - generate, classify and verify balanced and abelian-3-bounded
// circular words over binary and ternary alphabets.
//
// Exit codes: 0 success, 1 domain error, 2 usage error. `verify oracle`
// exits 0 only when the brute-force and constructive sets agree.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "cword/abelian.hpp"
#include "cword/christoffel.hpp"
#include "cword/geometry.hpp"
#include "cword/infinite.hpp"
#include "cword/oracle.hpp"
#include "cword/ternary.hpp"
#include "cword/tree.hpp"
#include "cword/word.hpp"

namespace {

using nlohmann::json;

constexpr std::uint64_t kDefaultSeed = 1;

cword::Word parse_word(const std::string& digits, int alphabet) {
    cword::Word w = cword::Word::parse(digits, alphabet);
    if (w.empty()) throw std::invalid_argument("empty word");
    return w;
}

std::string perm_string(const cword::LetterPermutation& sigma) {
    std::string from, to;
    for (std::size_t a = 0; a < sigma.size(); ++a) {
        from.push_back(static_cast<char>('0' + a));
        to.push_back(static_cast<char>('0' + sigma[a]));
    }
    return from + "→" + to;
}

json classification_json(const cword::CircularWord& cw, const cword::ClassificationResult& r) {
    json j;
    j["word"] = cw.str();
    j["alphabet"] = cw.alphabet();
    j["label"] = cword::to_string(r.label);
    if (r.slope) j["slope"] = {r.slope->zeros, r.slope->ones};
    if (r.power) j["power"] = *r.power;
    if (r.perm) j["perm"] = perm_string(*r.perm);
    if (!r.borders.empty()) j["borders"] = r.borders;
    if (r.max_complexity) j["maxComplexity"] = *r.max_complexity;
    if (r.min_nonbalanced_scale) j["minNonbalancedScale"] = *r.min_nonbalanced_scale;
    if (r.label == cword::Label::NotAllLetters) {
        std::string letters;
        auto counts = cword::parikh(cw.canonical());
        for (std::size_t a = 0; a < counts.size(); ++a)
            if (counts[a] > 0) letters.push_back(static_cast<char>('0' + a));
        j["letters"] = letters;
        if (letters == "01") {
            cword::CircularWord binary(cword::Word(cw.canonical().letters, 2));
            if (auto bin = cword::classify_binary(binary))
                j["binary"] = {{"slope", {bin->slope.zeros, bin->slope.ones}},
                               {"power", bin->power}};
        }
    }
    return j;
}

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream os(out_path, std::ios::binary);
    if (!os) throw std::invalid_argument("cannot open output file: " + out_path);
    os << text;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"balanced and abelian-3-bounded circular words"};
    app.require_subcommand(1);
    int exit_code = 0;

    // ---- generate ----------------------------------------------------
    auto* generate = app.add_subcommand("generate", "construct words");
    generate->require_subcommand(1);

    int g_zeros = 1, g_ones = 1, g_power = 1, g_letters = 3;
    std::vector<int> g_borders;

    auto* gen_christoffel = generate->add_subcommand("christoffel", "Christoffel word C(k, n)");
    gen_christoffel->add_option("--zeros", g_zeros, "zero count k")->required();
    gen_christoffel->add_option("--ones", g_ones, "one count n")->required();
    gen_christoffel->add_option("--power", g_power, "repeat the word p times");
    gen_christoffel->callback([&] {
        std::cout << cword::christoffel_power(cword::Slope{g_zeros, g_ones}, g_power).str()
                  << '\n';
    });

    auto* gen_phi = generate->add_subcommand("phi", "phi image of a Christoffel power");
    gen_phi->add_option("--zeros", g_zeros)->required();
    gen_phi->add_option("--ones", g_ones)->required();
    gen_phi->add_option("--power", g_power);
    gen_phi->callback([&] {
        std::cout << cword::phi(cword::christoffel_power(cword::Slope{g_zeros, g_ones}, g_power))
                         .str()
                  << '\n';
    });

    auto* gen_fraenkel = generate->add_subcommand("fraenkel", "Fraenkel word F_N");
    gen_fraenkel->add_option("--letters", g_letters, "alphabet size N")->required();
    gen_fraenkel->add_option("--power", g_power);
    gen_fraenkel->callback([&] {
        std::cout << cword::power(cword::fraenkel(g_letters), g_power).str() << '\n';
    });

    auto* gen_twisted = generate->add_subcommand("twisted", "twisted Christoffel power");
    gen_twisted->add_option("--zeros", g_zeros)->required();
    gen_twisted->add_option("--ones", g_ones)->required();
    gen_twisted->add_option("--power", g_power)->required();
    gen_twisted->add_option("--borders", g_borders, "borders to swap, in 1..power-1")
        ->required()
        ->delimiter(',');
    gen_twisted->callback([&] {
        cword::TwistSpec spec{cword::Slope{g_zeros, g_ones}, g_power,
                              std::set<int>(g_borders.begin(), g_borders.end())};
        std::cout << cword::twisted(spec).str() << '\n';
    });

    auto* gen_d3 = generate->add_subcommand("d3", "the six classes of [01210]");
    gen_d3->add_option("--power", g_power);
    gen_d3->callback([&] {
        for (const auto& d : cword::d3_words())
            std::cout << cword::power(d, g_power).str() << '\n';
    });

    // ---- check -------------------------------------------------------
    auto* check = app.add_subcommand("check", "classify or analyze one word");
    check->require_subcommand(1);
    std::string c_word;
    bool c_json = false;
    int c_alphabet = 0;

    auto* check_classify = check->add_subcommand("classify", "constructive classification");
    check_classify->add_option("word", c_word, "digit string")->required();
    check_classify->add_flag("--json", c_json);
    check_classify->add_option("--alphabet", c_alphabet, "alphabet size (default: inferred)");
    check_classify->callback([&] {
        cword::Word w = parse_word(c_word, c_alphabet);
        if (w.alphabet > 3) throw std::invalid_argument("classification needs alphabet <= 3");
        cword::CircularWord cw(cword::Word(w.letters, 3));
        auto r = cword::classify(cw);
        json j = classification_json(cw, r);
        if (c_json) {
            std::cout << j.dump() << '\n';
        } else {
            std::cout << j["label"].get<std::string>();
            if (r.slope) std::cout << " slope=(" << r.slope->zeros << ',' << r.slope->ones << ')';
            if (r.power) std::cout << " power=" << *r.power;
            if (r.perm) std::cout << " perm=" << perm_string(*r.perm);
            if (!r.borders.empty()) {
                std::cout << " borders={";
                bool first = true;
                for (int b : r.borders) {
                    if (!first) std::cout << ',';
                    std::cout << b;
                    first = false;
                }
                std::cout << '}';
            }
            if (r.max_complexity) std::cout << " maxComplexity=" << *r.max_complexity;
            if (r.min_nonbalanced_scale)
                std::cout << " minNonbalancedScale=" << *r.min_nonbalanced_scale;
            std::cout << '\n';
        }
    });

    auto* check_analyze = check->add_subcommand("analyze", "balance and complexity report");
    check_analyze->add_option("word", c_word)->required();
    check_analyze->add_flag("--json", c_json);
    check_analyze->add_option("--alphabet", c_alphabet);
    check_analyze->callback([&] {
        cword::CircularWord cw(parse_word(c_word, c_alphabet));
        json j;
        j["word"] = cw.str();
        j["alphabet"] = cw.alphabet();
        j["balanced"] = cword::is_balanced(cw);
        j["maxComplexity"] = cword::max_complexity(cw);
        std::vector<int> by_n;
        for (int n = 1; n <= static_cast<int>(cw.size()); ++n)
            by_n.push_back(cword::abelian_complexity(cw, n));
        j["complexityByN"] = by_n;
        auto scale = cword::minimal_nonbalanced_scale(cw);
        j["minNonbalancedScale"] = scale ? json(*scale) : json(nullptr);
        if (c_json) {
            std::cout << j.dump() << '\n';
        } else {
            std::cout << "word " << cw.str() << (j["balanced"].get<bool>() ? " balanced" : " unbalanced")
                      << " maxComplexity=" << j["maxComplexity"].get<int>() << '\n';
        }
    });

    // ---- enumerate ---------------------------------------------------
    auto* enumerate = app.add_subcommand("enumerate", "list constructive classes");
    std::string e_family = "b3";
    int e_max_len = 8;
    bool e_primitive = false, e_json = false;
    enumerate->add_option("family", e_family, "b3 or m3")
        ->check(CLI::IsMember({"b3", "m3"}))
        ->required();
    enumerate->add_option("--max-len", e_max_len)->required();
    enumerate->add_flag("--primitive", e_primitive, "primitive classes only");
    enumerate->add_flag("--json", e_json);
    enumerate->callback([&] {
        auto classes = e_family == "b3" ? cword::enumerate_b3(e_max_len, e_primitive)
                                        : cword::enumerate_m3(e_max_len, e_primitive);
        if (e_json) {
            json j;
            j["family"] = e_family;
            j["maxLen"] = e_max_len;
            j["primitive"] = e_primitive;
            j["count"] = classes.size();
            std::vector<std::string> words;
            for (const auto& cw : classes) words.push_back(cw.str());
            j["words"] = words;
            std::cout << j.dump() << '\n';
        } else {
            for (const auto& cw : classes) std::cout << cw.str() << '\n';
        }
    });

    // ---- verify ------------------------------------------------------
    auto* verify = app.add_subcommand("verify", "brute-force checks");
    verify->require_subcommand(1);
    int v_alphabet = 3, v_max_len = 8, v_threads = 0;
    bool v_json = false;

    auto* verify_oracle = verify->add_subcommand(
        "oracle", "compare brute-force and constructive classification");
    verify_oracle->add_option("--alphabet", v_alphabet)->check(CLI::IsMember({2, 3}));
    verify_oracle->add_option("--max-len", v_max_len)->required();
    verify_oracle->add_option("--threads", v_threads);
    verify_oracle->add_flag("--json", v_json);
    verify_oracle->callback([&] {
        auto report = cword::verify_theorems(v_alphabet, v_max_len, v_threads);
        if (v_json) {
            json j;
            j["alphabet"] = report.alphabet;
            j["maxLen"] = report.max_len;
            json per = json::array();
            for (const auto& lc : report.by_length)
                per.push_back({{"length", lc.length},
                               {"necklaces", lc.necklaces.size()},
                               {"balanced", lc.balanced.size()},
                               {"bounded3", lc.bounded3.size()}});
            j["perLength"] = per;
            j["mismatches"] = report.mismatches;
            j["ok"] = report.ok();
            std::cout << j.dump() << '\n';
        } else {
            for (const auto& lc : report.by_length)
                std::cout << "L=" << lc.length << " necklaces=" << lc.necklaces.size()
                          << " balanced=" << lc.balanced.size()
                          << " bounded3=" << lc.bounded3.size() << '\n';
            for (const auto& m : report.mismatches) std::cout << "mismatch: " << m << '\n';
            std::cout << (report.ok() ? "ok" : "MISMATCH") << '\n';
        }
        if (!report.ok()) exit_code = 1;
    });

    auto* verify_bound = verify->add_subcommand(
        "bound", "largest complexity observed over balanced classes");
    verify_bound->add_option("--alphabet", v_alphabet)->check(CLI::IsMember({2, 3}));
    verify_bound->add_option("--max-len", v_max_len)->required();
    verify_bound->add_option("--threads", v_threads);
    verify_bound->add_flag("--json", v_json);
    verify_bound->callback([&] {
        int bound = cword::balanced_complexity_bound(v_alphabet);
        int observed = 0;
        json per = json::array();
        for (int len = v_alphabet; len <= v_max_len; ++len) {
            auto lc = cword::brute_classify(v_alphabet, len, v_threads);
            int len_max = 0;
            for (const auto& cw : lc.balanced)
                len_max = std::max(len_max, cword::max_complexity(cw));
            observed = std::max(observed, len_max);
            per.push_back({{"length", len}, {"maxComplexity", len_max}});
        }
        if (v_json) {
            json j;
            j["alphabet"] = v_alphabet;
            j["maxLen"] = v_max_len;
            j["bound"] = bound;
            j["observed"] = observed;
            j["perLength"] = per;
            j["attained"] = observed == bound;
            std::cout << j.dump() << '\n';
        } else {
            std::cout << "bound=" << bound << " observed=" << observed << '\n';
        }
    });

    // ---- tree ----------------------------------------------------------
    auto* tree_cmd = app.add_subcommand("tree", "coprime-pair tree of balanced classes");
    int t_depth = 3;
    std::string t_format = "dot", t_out;
    tree_cmd->add_option("--depth", t_depth)->required();
    tree_cmd->add_option("--format", t_format)->check(CLI::IsMember({"dot", "json"}));
    tree_cmd->add_option("--out", t_out, "write to file instead of stdout");
    tree_cmd->callback([&] {
        auto root = cword::build_tree(t_depth);
        std::string text = t_format == "dot" ? cword::export_dot(*root)
                                             : cword::export_json(*root).dump() + "\n";
        write_output(text, t_out);
    });

    // ---- viz -----------------------------------------------------------
    auto* viz = app.add_subcommand("viz", "SVG figures");
    viz->require_subcommand(1);
    int z_zeros = 2, z_ones = 3, z_m = 4, z_n = 3;
    std::string z_out, z_word;

    auto* viz_path2d = viz->add_subcommand("path2d", "Christoffel path with its guide line");
    viz_path2d->add_option("--zeros", z_zeros)->required();
    viz_path2d->add_option("--ones", z_ones)->required();
    viz_path2d->add_option("--out", z_out)->required();
    viz_path2d->callback([&] {
        cword::SvgStyle style;
        style.guide = {{z_zeros, z_ones}};
        write_output(cword::svg_path(cword::path2d(cword::Slope{z_zeros, z_ones}), style), z_out);
    });

    auto* viz_path3d = viz->add_subcommand("path3d", "plane approximation in isometric view");
    viz_path3d->add_option("--m", z_m)->required();
    viz_path3d->add_option("--n", z_n)->required();
    viz_path3d->add_option("--out", z_out)->required();
    viz_path3d->callback([&] {
        auto [path, word] = cword::path3d(cword::PlaneSpec{z_m, z_n});
        write_output(cword::svg_path(path), z_out);
    });

    auto* viz_necklace = viz->add_subcommand("necklace", "letters as polygons on a circle");
    viz_necklace->add_option("word", z_word)->required();
    viz_necklace->add_option("--out", z_out)->required();
    viz_necklace->callback([&] {
        write_output(cword::svg_necklace(cword::CircularWord(parse_word(z_word, 0))), z_out);
    });

    // ---- infinite --------------------------------------------------------
    auto* infinite = app.add_subcommand("infinite", "aperiodic abelian-3-bounded segments");
    int i_m = 2, i_n = 1, i_check_n = 0;
    std::int64_t i_length = 100;
    std::string i_source = "fibonacci";
    std::uint64_t i_seed = kDefaultSeed;
    bool i_json = false;
    infinite->add_option("--m", i_m)->required();
    infinite->add_option("--n", i_n)->required();
    infinite->add_option("--source", i_source, "fibonacci | bits:STRING | seed:U64");
    infinite->add_option("--length", i_length)->required();
    infinite->add_option("--check-n-max", i_check_n, "verify complexity for n = 1..K");
    infinite->add_option("--seed", i_seed, "seed when --source is plain 'seed'");
    infinite->add_flag("--json", i_json);
    infinite->callback([&] {
        cword::BitSource source = cword::BitSource::fibonacci();
        if (i_source.rfind("bits:", 0) == 0) {
            source = cword::BitSource::explicit_bits(i_source.substr(5));
        } else if (i_source.rfind("seed:", 0) == 0) {
            source = cword::BitSource::seeded(std::stoull(i_source.substr(5)));
        } else if (i_source == "seed") {
            source = cword::BitSource::seeded(i_seed);
        } else if (i_source != "fibonacci") {
            throw std::invalid_argument("unknown bit source: " + i_source);
        }
        auto spec = cword::morphism_images(i_m, i_n);
        cword::Word segment = cword::expand(source, spec, 0, i_length);
        std::vector<int> by_n;
        bool all_at_most_3 = true;
        for (int n = 1; n <= i_check_n && n <= static_cast<int>(segment.size()); ++n) {
            int c = cword::window_complexity(segment, n);
            by_n.push_back(c);
            all_at_most_3 = all_at_most_3 && c <= 3;
        }
        if (i_json) {
            json j;
            j["m"] = i_m;
            j["n"] = i_n;
            j["source"] = i_source;
            j["aperiodicCertified"] = source.aperiodic_certified();
            j["segment"] = segment.str();
            j["complexityByN"] = by_n;
            j["allAtMost3"] = all_at_most_3;
            std::cout << j.dump() << '\n';
        } else {
            std::cout << segment.str() << '\n';
            if (i_check_n > 0)
                std::cout << (all_at_most_3 ? "complexity <= 3" : "COMPLEXITY ABOVE 3") << '\n';
        }
        if (!all_at_most_3) exit_code = 1;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return exit_code;
}
