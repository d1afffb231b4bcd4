#include "onto/eval.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>

#include "onto/text.hpp"

namespace onto {

namespace {

// Labels compare equal when their lemma keys do ("Corporate Body" matches
// "Corporate_Body"). Labels that cannot be preprocessed fall back to a
// lowercased form.
std::string norm(const std::string& label) {
    try {
        return preprocess_label(label);
    } catch (const PreprocessError&) {
        std::string low = label;
        std::transform(low.begin(), low.end(), low.begin(),
                       [](unsigned char c) { return std::tolower(c); });
        return low;
    }
}

}  // namespace

ExpertMapping load_expert_mappings(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open expert mapping file " + path);
    ExpertMapping mapping;
    mapping.source = path;
    std::map<std::pair<std::string, std::string>, char> seen;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream fields(line);
        std::string a, b, g;
        if (!std::getline(fields, a, '\t') || !std::getline(fields, b, '\t') ||
            !std::getline(fields, g))
            throw ParseError("expected label_a<TAB>label_b<TAB>glyph in " + path, lineno, 1);
        while (!g.empty() && (g.back() == '\r' || g.back() == ' ')) g.pop_back();
        auto rel = g.size() == 1 ? relation_from_glyph(g[0]) : std::nullopt;
        if (!rel)
            throw ParseError("bad relation glyph '" + g + "' in " + path, lineno, 1);
        auto key = std::make_pair(norm(a), norm(b));
        if (!seen.emplace(key, g[0]).second)
            throw ValidationError(path + ":" + std::to_string(lineno) +
                                  ": duplicate pair (" + a + ", " + b + ")");
        mapping.pairs.push_back({a, b, *rel});
    }
    return mapping;
}

ClassifiedResults classify_results(const std::vector<Correspondence>& produced,
                                   const ExpertMapping& expert) {
    std::map<std::pair<std::string, std::string>, Relation> gold;
    for (const auto& e : expert.pairs) gold[{norm(e.a), norm(e.b)}] = e.r;

    ClassifiedResults out;
    for (const auto& c : produced) {
        auto it = gold.find({norm(c.a), norm(c.b)});
        if (it == gold.end()) out.others.push_back(c);
        else if (it->second == c.r) out.correct.push_back(c);
        else out.incorrect.push_back(c);
    }
    return out;
}

namespace {

double ratio(std::size_t num, std::size_t den) {
    if (den == 0) return num == 0 ? 1.0 : 0.0;
    return static_cast<double>(num) / static_cast<double>(den);
}

}  // namespace

std::pair<double, double> precision_recall(const std::vector<Correspondence>& produced,
                                           const ExpertMapping& expert, EvalMode mode) {
    auto classified = classify_results(produced, expert);
    std::size_t correct = classified.correct.size();
    std::size_t incorrect = classified.incorrect.size();
    double p = mode == EvalMode::ExpertScoped ? ratio(correct, correct + incorrect)
                                              : ratio(correct, produced.size());
    double r = ratio(correct, expert.pairs.size());
    return {p, r};
}

EvalReport evaluate(const std::vector<Correspondence>& produced,
                    const ExpertMapping& expert, EvalMode mode) {
    auto classified = classify_results(produced, expert);
    EvalReport report;
    report.correct = classified.correct.size();
    report.incorrect = classified.incorrect.size();
    report.others = classified.others.size();
    report.mode = mode;
    auto [p, r] = precision_recall(produced, expert, mode);
    report.precision = p;
    report.recall = r;
    return report;
}

std::string report_to_text(const EvalReport& report) {
    std::ostringstream out;
    out << std::fixed << std::setprecision(3);
    out << "  correct    " << std::setw(6) << report.correct << '\n'
        << "  incorrect  " << std::setw(6) << report.incorrect << '\n'
        << "  others     " << std::setw(6) << report.others << '\n'
        << "  precision  " << std::setw(6) << report.precision << '\n'
        << "  recall     " << std::setw(6) << report.recall << '\n';
    out << "mode=" << (report.mode == EvalMode::ExpertScoped ? "expert-scoped" : "strict")
        << '\n';
    out << "correct=" << report.correct << '\n';
    out << "incorrect=" << report.incorrect << '\n';
    out << "others=" << report.others << '\n';
    out << "P=" << report.precision << '\n';
    out << "R=" << report.recall << '\n';
    return out.str();
}

}  // namespace onto
