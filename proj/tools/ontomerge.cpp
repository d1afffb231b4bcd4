// Command-line front end for the ontology merging toolkit: conflict checks,
// hierarchy resolution, merging with hit-count relocation, knowledge-base
// enrichment and precision/recall evaluation. Every step reads and writes
// plain files so intermediate results stay inspectable.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include <CLI11.hpp>

#include "onto/conflict.hpp"
#include "onto/eval.hpp"
#include "onto/pipeline.hpp"

namespace fs = std::filesystem;
using namespace onto;

namespace {

struct CommonOptions {
    std::string wordnet_dir = "fixtures/wordnet";
    std::vector<std::string> overlays;
};

struct ProviderOptions {
    std::string provider = "replay";
    std::string cache;
    std::string corpus;
    std::string endpoint;
    std::string key_env = "ONTOMERGE_SEARCH_KEY";
    int delay_ms = 1000;
};

void add_common(CLI::App* cmd, CommonOptions& opts) {
    cmd->add_option("--wordnet", opts.wordnet_dir,
                    "directory with index.noun and data.noun")
        ->capture_default_str();
    cmd->add_option("--overlay", opts.overlays, "enrichment overlay file (repeatable)");
}

void add_provider(CLI::App* cmd, ProviderOptions& opts) {
    cmd->add_option("--provider", opts.provider, "hit-count source")
        ->check(CLI::IsMember({"replay", "corpus", "live"}))
        ->capture_default_str();
    cmd->add_option("--cache", opts.cache,
                    "replay cache file (read by replay, written through by live)");
    cmd->add_option("--corpus", opts.corpus, "text corpus directory");
    cmd->add_option("--endpoint", opts.endpoint, "search endpoint URL for live queries");
    cmd->add_option("--key-env", opts.key_env,
                    "environment variable holding the endpoint key")
        ->capture_default_str();
    cmd->add_option("--delay-ms", opts.delay_ms, "delay between live requests")
        ->capture_default_str();
}

std::unique_ptr<HitCountProvider> make_provider(const ProviderOptions& opts) {
    if (opts.provider == "replay") {
        if (opts.cache.empty())
            throw AcquireError("the replay provider needs --cache <file>");
        return std::make_unique<ReplayProvider>(opts.cache);
    }
    if (opts.provider == "corpus") {
        if (opts.corpus.empty())
            throw AcquireError("the corpus provider needs --corpus <dir>");
        return std::make_unique<CorpusProvider>(opts.corpus);
    }
    if (opts.endpoint.empty())
        throw AcquireError("the live provider needs --endpoint <url>");
    return std::make_unique<LiveProvider>(opts.endpoint, opts.key_env, opts.cache,
                                          std::chrono::milliseconds(opts.delay_ms));
}

wn::KnowledgeBase load_kb(const CommonOptions& opts) {
    return wn::KnowledgeBase::load(opts.wordnet_dir, opts.overlays);
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string stem_of(const std::string& path) {
    return fs::path(path).stem().string();
}

Ontology load_ontology(const std::string& path) {
    return parse_owl(slurp(path), stem_of(path));
}

void write_file(const fs::path& path, const std::string& content) {
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path.string());
    out << content;
}

void print_warnings(const std::vector<std::string>& warnings) {
    for (const auto& w : warnings) std::cerr << "warning: " << w << '\n';
}

// Artifacts of the merge steps, shared by `merge` and `pipeline`.
PipelineResult merge_to_files(const std::string& o1_path, const std::string& o2_path,
                              const wn::KnowledgeBase& kb, HitCountProvider& provider,
                              const PipelineOptions& options, const fs::path& out_dir) {
    auto o1 = load_ontology(o1_path);
    auto o2 = load_ontology(o2_path);
    auto result = run_merge_pipeline(o1, o2, kb, provider, options);

    write_file(out_dir / ("resolved_" + o1.id + ".owl"), serialize_owl(result.resolved1));
    write_file(out_dir / ("resolved_" + o2.id + ".owl"), serialize_owl(result.resolved2));
    write_file(out_dir / "merged.owl", serialize_owl(result.merged));
    write_file(out_dir / "correspondences.tsv",
               correspondences_to_tsv(result.correspondences));
    std::ostringstream reports;
    for (const auto& r : result.threshold_reports) reports << report_to_text(r) << '\n';
    write_file(out_dir / "thresholds.txt", reports.str());
    print_warnings(result.warnings);
    return result;
}

void enrich_to_files(const Ontology& merged, const wn::KnowledgeBase& kb,
                     const std::string& provenance, const fs::path& out_dir) {
    auto result = run_enrichment(merged, kb, provenance);
    write_file(out_dir / "plan.txt", plan_to_text(result.plan));
    std::vector<std::string> warnings = result.warnings;
    wn::write_overlay(result.entries, (out_dir / "overlay.tsv").string(), &warnings);
    print_warnings(warnings);
    std::cout << result.entries.size() << " overlay record(s) -> "
              << (out_dir / "overlay.tsv").string() << '\n';
}

std::string eval_report_text(const std::vector<Correspondence>& produced,
                             const ExpertMapping& expert, EvalMode mode) {
    auto report = evaluate(produced, expert, mode);
    std::ostringstream out;
    out << report_to_text(report);
    // The other mode's precision, for the record.
    auto other = mode == EvalMode::ExpertScoped ? EvalMode::Strict : EvalMode::ExpertScoped;
    auto [p, r] = precision_recall(produced, expert, other);
    out << (other == EvalMode::Strict ? "P_strict=" : "P_expert_scoped=") << std::fixed
        << std::setprecision(3) << p << '\n';
    return out.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Domain ontology merging against a WordNet-format knowledge base"};
    app.require_subcommand(1);

    CommonOptions common;
    ProviderOptions provider_opts;
    std::string out_dir = "out";
    std::string onto_a, onto_b, produced_path, expert_path;
    bool emit_disjoint = false;
    std::size_t candidate_limit = 0;
    std::string eval_mode = "expert-scoped";

    auto* check = app.add_subcommand("check", "report knowledge-base conflicts");
    check->add_option("ontology", onto_a)->required();
    add_common(check, common);

    auto* resolve_cmd =
        app.add_subcommand("resolve", "rebuild a hierarchy from the knowledge base");
    resolve_cmd->add_option("ontology", onto_a)->required();
    resolve_cmd->add_option("--out", out_dir)->capture_default_str();
    add_common(resolve_cmd, common);

    auto* merge_cmd =
        app.add_subcommand("merge", "resolve, merge and relocate missing concepts");
    merge_cmd->add_option("ontology1", onto_a)->required();
    merge_cmd->add_option("ontology2", onto_b)->required();
    merge_cmd->add_option("--out", out_dir)->capture_default_str();
    merge_cmd->add_flag("--emit-disjoint", emit_disjoint,
                        "emit owl:disjointWith axioms for disjoint siblings");
    merge_cmd->add_option("--candidate-limit", candidate_limit,
                          "cap the number of hit-count candidates");
    add_common(merge_cmd, common);
    add_provider(merge_cmd, provider_opts);

    auto* enrich_cmd =
        app.add_subcommand("enrich", "plan overlay records for missing concepts");
    enrich_cmd->add_option("merged", onto_a)->required();
    enrich_cmd->add_option("--out", out_dir)->capture_default_str();
    add_common(enrich_cmd, common);

    auto* eval_cmd =
        app.add_subcommand("eval", "score produced mappings against expert mappings");
    eval_cmd->add_option("produced", produced_path)->required();
    eval_cmd->add_option("expert", expert_path)->required();
    eval_cmd->add_option("--eval-mode", eval_mode)
        ->check(CLI::IsMember({"strict", "expert-scoped"}))
        ->capture_default_str();

    auto* pipeline_cmd =
        app.add_subcommand("pipeline", "run every step and write all artifacts");
    pipeline_cmd->add_option("ontology1", onto_a)->required();
    pipeline_cmd->add_option("ontology2", onto_b)->required();
    pipeline_cmd->add_option("--out", out_dir)->capture_default_str();
    pipeline_cmd->add_option("--expert", expert_path, "expert mappings to score against");
    pipeline_cmd->add_flag("--emit-disjoint", emit_disjoint);
    pipeline_cmd->add_option("--candidate-limit", candidate_limit);
    pipeline_cmd->add_option("--eval-mode", eval_mode)
        ->check(CLI::IsMember({"strict", "expert-scoped"}));
    add_common(pipeline_cmd, common);
    add_provider(pipeline_cmd, provider_opts);

    CLI11_PARSE(app, argc, argv);

    try {
        if (check->parsed()) {
            auto kb = load_kb(common);
            auto conflicts = detect_conflicts(load_ontology(onto_a), kb);
            std::cout << conflicts_to_tsv(conflicts);
            return 0;
        }
        if (resolve_cmd->parsed()) {
            auto kb = load_kb(common);
            std::vector<std::string> warnings;
            auto resolved = resolve(load_ontology(onto_a), kb, &warnings);
            fs::path out = fs::path(out_dir) / ("resolved_" + stem_of(onto_a) + ".owl");
            write_file(out, serialize_owl(resolved));
            print_warnings(warnings);
            std::cout << out.string() << '\n';
            return 0;
        }
        if (merge_cmd->parsed() || pipeline_cmd->parsed()) {
            auto kb = load_kb(common);
            auto provider = make_provider(provider_opts);
            PipelineOptions options;
            options.merge.emit_disjoint = emit_disjoint;
            options.candidate_limit = candidate_limit;
            auto result = merge_to_files(onto_a, onto_b, kb, *provider, options,
                                         fs::path(out_dir));
            std::cout << "merged " << result.merged.concepts.size() << " concepts, "
                      << result.threshold_reports.size()
                      << " missing concept(s) processed\n";
            if (pipeline_cmd->parsed()) {
                enrich_to_files(result.merged, kb, "enrich:merged", fs::path(out_dir));
                if (!expert_path.empty()) {
                    auto expert = load_expert_mappings(expert_path);
                    auto mode = eval_mode == "strict" ? EvalMode::Strict
                                                      : EvalMode::ExpertScoped;
                    auto text = eval_report_text(
                        asserted_correspondences(result.correspondences), expert, mode);
                    write_file(fs::path(out_dir) / "eval.txt", text);
                    std::cout << text;
                }
            }
            return 0;
        }
        if (enrich_cmd->parsed()) {
            auto kb = load_kb(common);
            auto merged = load_ontology(onto_a);
            enrich_to_files(merged, kb, "enrich:" + stem_of(onto_a), fs::path(out_dir));
            return 0;
        }
        if (eval_cmd->parsed()) {
            auto produced = read_correspondences(produced_path);
            auto expert = load_expert_mappings(expert_path);
            auto mode =
                eval_mode == "strict" ? EvalMode::Strict : EvalMode::ExpertScoped;
            std::cout << eval_report_text(produced, expert, mode);
            return 0;
        }
    } catch (const AcquireError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
