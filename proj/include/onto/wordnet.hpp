#pragma once

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "onto/errors.hpp"

namespace onto::wn {

enum class PointerKind {
    Hypernym,
    Hyponym,
    MemberMeronym,
    PartMeronym,
    SubstanceMeronym,
    MemberHolonym,
    PartHolonym,
    SubstanceHolonym,
    Antonym,
};

struct Pointer {
    PointerKind kind;
    std::string target;  // synset id
};

struct Synset {
    std::string id;  // data-file byte offset, or "ovl:<n>" for overlay synsets
    std::vector<std::string> lemmas;  // lowercase, spaces as underscores
    std::vector<Pointer> pointers;
    std::string gloss;

    bool has_lemma(std::string_view lemma) const;
    std::vector<std::string> targets(PointerKind kind) const;
};

struct OverlayEntry {
    std::string lemma;
    std::vector<std::string> hypernym_targets;
    std::string provenance;
};

// Reads/writes the overlay record format: lemma<TAB>id{,id}<TAB>provenance.
std::vector<OverlayEntry> read_overlay(const std::string& path);

// Appends entries to the overlay file, skipping records already present
// (same lemma and target set); skipped records are reported via warnings.
// Returns the number of records actually written.
std::size_t write_overlay(const std::vector<OverlayEntry>& entries,
                          const std::string& path,
                          std::vector<std::string>* warnings = nullptr);

// Synset graph loaded from WNDB noun files plus enrichment overlays.
// Immutable after load; safe for unlimited concurrent readers.
class KnowledgeBase {
public:
    // `dir` must contain index.noun and data.noun. Overlay files are applied
    // in order. Throws LoadError on unparseable lines, unresolvable
    // references or a cyclic hypernym graph.
    static KnowledgeBase load(const std::string& dir,
                              const std::vector<std::string>& overlay_paths = {});

    const Synset* find(const std::string& synset_id) const;

    // Synsets containing the lemma, in database sense order. Empty result is
    // the "missing from the knowledge base" condition. The key must already
    // be preprocessed (lowercase, underscores).
    std::vector<const Synset*> lookup(const std::string& lemma) const;

    // Lemmas whose Porter stem equals `stem`, sorted.
    std::vector<std::string> lemmas_for_stem(const std::string& stem) const;

    std::vector<const Synset*> related(const Synset& synset, PointerKind kind) const;

    // All hypernym chains of the synset, each returned root-first and ending
    // at the synset itself.
    std::vector<std::vector<const Synset*>> hypernym_paths(const Synset& synset) const;

    const std::map<std::string, Synset>& synsets() const { return synsets_; }
    const std::vector<OverlayEntry>& overlay_entries() const { return overlay_entries_; }

private:
    std::map<std::string, Synset> synsets_;
    std::map<std::string, std::vector<std::string>> lemma_index_;  // lemma -> ids
    std::map<std::string, std::set<std::string>> stem_index_;      // stem -> lemmas
    std::vector<OverlayEntry> overlay_entries_;

    void apply_overlay(const OverlayEntry& entry, std::size_t number);
    void build_stem_index();
    void validate() const;
};

// Lemma list of a hypernym path, first lemma of each synset.
std::vector<std::string> path_lemmas(const std::vector<const Synset*>& path);

}  // namespace onto::wn
