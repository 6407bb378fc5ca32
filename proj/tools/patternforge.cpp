// patternforge: command-line front end for the level-by-level construction,
// the succession-rule engine and the oracles.
//
// Exit codes: 0 success, 1 verification mismatch, 2 usage, 3 soundness violation.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "patternforge/patternforge.hpp"
#include "patternforge/render.hpp"

namespace pf = patternforge;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_mismatch = 1;
constexpr int exit_usage = 2;
constexpr int exit_unsound = 3;

struct PatternFlags {
    int j = 0;
    int i = 0;

    void add_to(CLI::App* cmd, bool required = true) {
        auto* oj = cmd->add_option("--j", j, "number of ones in the forbidden factor 1^j 0^i");
        auto* oi = cmd->add_option("--i", i, "number of zeros in the forbidden factor (0 < i < j)");
        if (required) {
            oj->required();
            oi->required();
        }
    }

    pf::Pattern pattern() const { return pf::Pattern(j, i); }
};

struct RunConfig {
    PatternFlags pattern;
    int max_ones = 0;
    std::string format = "jsonl";
    bool cancel_nodes = false;
    std::size_t budget = pf::default_brute_force_budget;
};

int cmd_generate(const RunConfig& cfg) {
    const pf::Pattern p = cfg.pattern.pattern();
    pf::RunOptions opts;
    opts.cancel_nodes = cfg.cancel_nodes;
    const pf::RunResult run = pf::run_levels(p, cfg.max_ones, opts);

    if (cfg.format == "tsv") {
        std::cout << "level\tlabel\tplus\tminus\tnet\n";
        for (const pf::LevelCensus& level : run.levels)
            for (const auto& [label, t] : level.by_label)
                std::cout << level.level << '\t' << label << '\t' << t.plus << '\t' << t.minus << '\t' << t.net() << '\n';
        return exit_ok;
    }
    for (const pf::LevelCensus& level : run.levels) {
        for (const pf::WordTally& w : level.survivors()) {
            nlohmann::ordered_json rec;
            rec["level"] = level.level;
            rec["word"] = w.word;
            rec["net"] = w.tally.net();
            rec["plus"] = w.tally.plus;
            rec["minus"] = w.tally.minus;
            std::cout << rec.dump() << '\n';
        }
    }
    return exit_ok;
}

int cmd_verify(const RunConfig& cfg) {
    const pf::Pattern p = cfg.pattern.pattern();
    pf::RunOptions opts;
    opts.cancel_nodes = cfg.cancel_nodes;
    const pf::RunResult run = pf::run_levels(p, cfg.max_ones, opts);
    const pf::VerifyReport report = pf::verify_against_oracle(run, cfg.budget);

    std::cout << "verify " << p.name() << " up to " << cfg.max_ones << " ones\n";
    std::size_t shown = 0;
    for (const pf::LevelVerdict& v : report.levels) {
        std::cout << "level " << v.level << ": " << (v.pass ? "PASS" : "FAIL") << " (" << v.actual_survivors
                  << " survivors, oracle " << v.expected_survivors << ")\n";
        for (const std::string& d : v.divergences) {
            if (shown >= 10) break;
            std::cout << "  " << d << '\n';
            ++shown;
        }
    }
    std::cout << "gamma nodes: " << run.gamma_nodes() << ", jump-" << p.j() << " multiset checks: " << run.multiset_checks
              << '\n';
    std::cout << "result: " << (report.pass() ? "PASS" : "FAIL") << '\n';
    return report.pass() ? exit_ok : exit_mismatch;
}

int cmd_count(const PatternFlags& flags, int ones) {
    const pf::Pattern p = flags.pattern();
    if (ones < 0) throw CLI::ValidationError("--ones", "must be non-negative");
    const auto table = pf::avoiding_count_table(p, ones, ones);
    pf::BigCount total = 0;
    std::cout << "ones\tzeros\tcount\n";
    for (int m = 0; m <= ones; ++m) {
        const pf::BigCount& c = table[static_cast<std::size_t>(ones)][static_cast<std::size_t>(m)];
        std::cout << ones << '\t' << m << '\t' << c << '\n';
        total += c;
    }
    std::cout << "total\t" << total << '\n';
    return exit_ok;
}

int cmd_rule(const std::string& file, int levels) {
    std::ifstream in(file);
    if (!in) {
        std::cerr << "error: cannot read " << file << '\n';
        return exit_usage;
    }
    std::stringstream buf;
    buf << in.rdbuf();
    const pf::RuleSpec rule = pf::parse_rule(buf.str());
    const auto census = pf::expand_census(rule, levels);

    std::cout << "level\tlabel\tplus\tminus\tnet\n";
    for (const pf::RuleCensus& level : census) {
        pf::CensusCount plus = 0, minus = 0;
        for (const auto& [label, t] : level.labels) {
            std::cout << level.level << '\t' << label << '\t' << t.plus << '\t' << t.minus << '\t' << t.net() << '\n';
            plus += t.plus;
            minus += t.minus;
        }
        std::cout << level.level << "\ttotal\t" << plus << '\t' << minus << '\t' << (plus - minus) << '\n';
    }
    return exit_ok;
}

int cmd_trace(const PatternFlags& flags, const std::string& text) {
    const pf::Pattern p = flags.pattern();
    const pf::Word word(text);
    if (!word.in_class_f()) {
        std::cerr << "error: '" << text << "' has more zeros than ones\n";
        return exit_usage;
    }
    pf::RunOptions opts;
    opts.strict = false;
    const pf::RunResult run = pf::run_levels(p, word.ones(), opts);
    const auto copies = pf::collect_copies(run, word);

    std::size_t plus = 0;
    std::cout << "sign\tmarked\tlabels\n";
    for (const pf::Copy& c : copies) {
        plus += c.sign == pf::Sign::plus;
        std::cout << pf::to_string(c.sign) << '\t' << pf::to_string(c.mw) << '\t' << pf::to_string(c.provenance) << '\n';
    }
    std::cout << "copies " << copies.size() << " (plus " << plus << ", minus " << copies.size() - plus << "), C="
              << pf::occurrences(word, p).size() << '\n';
    return exit_ok;
}

int cmd_render(const std::optional<PatternFlags>& flags, const std::string& text, const std::string& spans) {
    pf::MarkedWord mw{pf::Word(text), pf::parse_span_list(spans)};
    std::size_t length = 0, ones = 0;
    if (flags) {
        const pf::Pattern p = flags->pattern();
        pf::validate(mw, p);
        length = p.length();
        ones = static_cast<std::size_t>(p.j());
    } else if (!mw.spans.empty()) {
        // without a pattern, a span is the ones-run starting at it plus the zeros-run that follows
        const std::string& b = mw.word.bits();
        const std::size_t s = mw.spans.front();
        std::size_t q = s;
        while (q < b.size() && b[q] == '1') ++q;
        ones = q - s;
        while (q < b.size() && b[q] == '0') ++q;
        length = q - s;
        if (ones == 0 || length == ones) throw pf::InvalidWord("no 1^j 0^i block starts at " + std::to_string(s));
        pf::validate(mw, pf::Pattern(static_cast<int>(ones), static_cast<int>(length - ones)));
    }
    std::cout << pf::render_path(mw, length, ones);
    return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Level-by-level construction of binary words avoiding 1^j 0^i"};
    app.require_subcommand(1);

    RunConfig gen_cfg;
    auto* generate = app.add_subcommand("generate", "survivors per level as JSON lines (or the label census as TSV)");
    gen_cfg.pattern.add_to(generate);
    generate->add_option("--max-ones", gen_cfg.max_ones, "last level to build")->required()->check(CLI::NonNegativeNumber);
    generate->add_option("--format", gen_cfg.format, "jsonl or tsv")->check(CLI::IsMember({"jsonl", "tsv"}));
    generate->add_flag("--cancel-nodes", gen_cfg.cancel_nodes, "cancel opposite-sign duplicates before expansion");

    RunConfig ver_cfg;
    auto* verify = app.add_subcommand("verify", "compare the construction with brute force and the automaton count");
    ver_cfg.pattern.add_to(verify);
    verify->add_option("--max-ones", ver_cfg.max_ones, "last level to check")->required()->check(CLI::NonNegativeNumber);
    verify->add_option("--budget", ver_cfg.budget, "cap on brute-force candidates per level");
    verify->add_flag("--cancel-nodes", ver_cfg.cancel_nodes, "cancel opposite-sign duplicates before expansion");

    PatternFlags count_flags;
    int count_ones = 0;
    auto* count = app.add_subcommand("count", "automaton count of avoiding words by (ones, zeros)");
    count_flags.add_to(count);
    count->add_option("--ones", count_ones, "number of ones")->required()->check(CLI::NonNegativeNumber);

    std::string rule_file;
    int rule_levels = 0;
    auto* rule = app.add_subcommand("rule", "census of a succession rule file");
    rule->add_option("--file", rule_file, "rule file")->required();
    rule->add_option("--levels", rule_levels, "last level")->required()->check(CLI::NonNegativeNumber);

    PatternFlags trace_flags;
    std::string trace_word;
    auto* trace = app.add_subcommand("trace", "every tree copy of a word with its sign and label sequence");
    trace_flags.add_to(trace);
    trace->add_option("--word", trace_word, "binary word")->required();

    PatternFlags render_flags;
    std::string render_word, render_spans;
    auto* render = app.add_subcommand("render", "ASCII lattice path of a word");
    render_flags.add_to(render, false);
    render->add_option("--word", render_word, "binary word")->required();
    render->add_option("--spans", render_spans, "comma-separated start indices of marked spans");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        if (*generate) return cmd_generate(gen_cfg);
        if (*verify) return cmd_verify(ver_cfg);
        if (*count) return cmd_count(count_flags, count_ones);
        if (*rule) return cmd_rule(rule_file, rule_levels);
        if (*trace) return cmd_trace(trace_flags, trace_word);
        if (*render) {
            const bool has_pattern = render->count("--j") + render->count("--i") > 0;
            return cmd_render(has_pattern ? std::optional<PatternFlags>(render_flags) : std::nullopt, render_word,
                              render_spans);
        }
    } catch (const pf::NetOutOfRange& e) {
        std::cerr << "soundness violation: " << e.what() << '\n';
        return exit_unsound;
    } catch (const pf::ParseError& e) {
        std::cerr << rule_file << ": " << e.what() << '\n';
        return exit_usage;
    } catch (const pf::InvalidPattern& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const pf::InvalidWord& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const pf::BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << " (raise --budget)\n";
        return exit_usage;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const pf::Error& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return exit_unsound;
    }
    return exit_usage;
}
