#!/usr/bin/env python3
"""Generate the desk-scale WordNet noun fixture (fixtures/wordnet/).

Emits index.noun and data.noun in the Princeton WNDB format. Synset ids are
the true byte offsets of each line in data.noun, as in the real database.
The synset inventory is a small bibliography-domain snapshot; see
fixtures/README.md for provenance notes.
"""

import io
import os
import sys

# name, lex_filenum, [lemmas], [hypernym names], gloss, extra pointers
# extra pointers: (symbol, target_name) emitted verbatim on this synset.
SYNSETS = [
    ("entity", "03", ["entity"], [],
     "that which is perceived or known or inferred to have its own distinct existence (living or nonliving)", []),
    ("physical_entity", "03", ["physical_entity"], ["entity"],
     "an entity that has physical existence", []),
    ("abstraction", "03", ["abstraction", "abstract_entity"], ["entity"],
     "a general concept formed by extracting common features from specific examples", []),
    ("object", "03", ["object", "physical_object"], ["physical_entity"],
     "a tangible and visible entity; an entity that can cast a shadow", []),
    ("whole", "03", ["whole", "unit"], ["object"],
     "an assemblage of parts that is regarded as a single entity", [("!", "part")]),
    ("artifact", "06", ["artifact", "artefact"], ["whole"],
     "a man-made object taken as a whole", []),
    ("living_thing", "03", ["living_thing", "animate_thing"], ["whole"],
     "a living (or once living) entity", []),
    ("organism", "03", ["organism", "being"], ["living_thing"],
     "a living thing that has (or can develop) the ability to act or function independently", []),
    ("causal_agent", "03", ["causal_agent", "cause", "causal_agency"], ["physical_entity"],
     "any entity that produces an effect or is responsible for events or results", []),
    ("person", "18", ["person", "individual", "someone", "somebody", "mortal", "soul"],
     ["organism", "causal_agent"],
     "a human being", [("#m", "people")]),
    ("agent_cause", "18", ["agent"], ["causal_agent"],
     "an active and efficient cause; capable of producing a certain effect", []),
    ("representative", "18", ["representative"], ["person"],
     "a person who represents others", []),
    ("agent_rep", "18", ["agent"], ["representative"],
     "a representative who acts on behalf of other persons or organizations", []),
    ("group", "03", ["group", "grouping"], ["abstraction"],
     "any number of entities (members) considered as a unit", []),
    ("social_group", "14", ["social_group"], ["group"],
     "people sharing some social relation", []),
    ("organization_social", "14", ["organization", "organisation"], ["social_group"],
     "a group of people who work together", []),
    ("psychological_feature", "03", ["psychological_feature"], ["abstraction"],
     "a feature of the mental life of a living organism", []),
    ("event", "03", ["event"], ["psychological_feature"],
     "something that happens at a given place and time", []),
    ("act", "03", ["act", "deed", "human_action", "human_activity"], ["event"],
     "something that people do or cause to happen", []),
    ("activity", "04", ["activity"], ["act"],
     "any specific behavior", []),
    ("beginning", "04", ["beginning", "start", "commencement"], ["psychological_feature"],
     "the act of starting something", []),
    ("organization_act", "04", ["constitution", "establishment", "formation", "organization", "organisation"],
     ["beginning"],
     "the act of forming or establishing something", []),
    ("body", "14", ["body"], ["social_group"],
     "a group of persons associated by some common tie or occupation and regarded as an entity", []),
    ("organization_admin", "14", ["administration", "governance", "governing_body", "establishment", "brass", "organization", "organisation"],
     ["body"],
     "the persons (or committees or departments etc.) who make up a body for the purpose of administering something", []),
    ("institution", "14", ["institution", "establishment"], ["organization_social"],
     "an organization founded and united for a specific purpose", []),
    ("educational_institution", "14", ["educational_institution"], ["institution"],
     "an institution dedicated to education", []),
    ("university", "14", ["university"], ["educational_institution"],
     "an institution of higher learning with teaching and research facilities", []),
    ("school", "14", ["school"], ["educational_institution"],
     "an educational institution", []),
    ("association", "14", ["association"], ["organization_social"],
     "a formal organization of people or groups of people", []),
    ("conference", "14", ["conference"], ["association"],
     "an association of teams or organizations that compete mostly among themselves", []),
    ("enterprise", "14", ["enterprise"], ["organization_social"],
     "an organization created for business ventures", []),
    ("firm", "14", ["firm", "house", "business_firm"], ["enterprise"],
     "the members of a business organization that owns or operates one or more establishments", []),
    ("publisher_org", "14", ["publisher", "publishing_house", "publishing_firm", "publishing_company"],
     ["firm"],
     "a firm in the publishing business", []),
    ("owner", "18", ["owner", "proprietor"], ["person"],
     "a person who owns something", []),
    ("publisher_person", "18", ["publisher", "newspaper_publisher"], ["owner"],
     "the proprietor of a newspaper", []),
    ("communicator", "18", ["communicator"], ["person"],
     "a person who communicates with others", []),
    ("writer", "18", ["writer", "author"], ["communicator"],
     "writes (books or stories or articles or the like) professionally (for pay)", []),
    ("student", "18", ["student", "pupil", "educatee"], ["person"],
     "a learner who is enrolled in an educational institution", []),
    ("worker", "18", ["worker"], ["person"],
     "a person who works at a specific occupation", []),
    ("skilled_worker", "18", ["skilled_worker", "trained_worker", "skilled_workman"], ["worker"],
     "a worker who has acquired special skills", []),
    ("editor", "18", ["editor", "editor_in_chief"], ["skilled_worker"],
     "a person responsible for the editorial aspects of publication", []),
    ("gathering", "14", ["gathering", "assemblage"], ["social_group"],
     "a group of persons together in one place", []),
    ("meeting", "14", ["meeting", "group_meeting"], ["gathering"],
     "a formally arranged gathering", []),
    ("collection", "14", ["collection", "aggregation", "accumulation", "assemblage"], ["group"],
     "several things grouped together or considered as a whole", []),
    ("library", "14", ["library"], ["collection"],
     "a collection of literary documents or records kept for reference or borrowing", []),
    ("creation", "06", ["creation"], ["artifact"],
     "an artifact that has been brought into existence by someone", []),
    ("product", "06", ["product", "production"], ["creation"],
     "an artifact that has been created by someone or some process", []),
    ("work_product", "06", ["work", "piece_of_work"], ["product"],
     "a product produced or accomplished through the effort or activity or agency of a person or thing", []),
    ("work_activity", "04", ["work"], ["activity"],
     "activity directed toward making or doing something", []),
    ("publication", "06", ["publication"], ["work_product"],
     "a copy of a printed work offered for distribution", []),
    ("periodical", "06", ["periodical"], ["publication"],
     "a publication that appears at fixed intervals", []),
    ("journal", "06", ["journal"], ["periodical"],
     "a periodical dedicated to a particular subject", []),
    ("magazine", "06", ["magazine", "mag"], ["publication"],
     "a periodic publication containing pictures and stories and articles of interest", []),
    ("book_pub", "06", ["book"], ["publication"],
     "a written work or composition that has been published (printed on pages bound together)", []),
    ("book_volume", "06", ["book", "volume"], ["artifact"],
     "physical objects consisting of a number of pages bound together", []),
    ("telephone", "06", ["telephone", "phone", "telephone_set"], ["artifact"],
     "electronic equipment that converts sound into electrical signals that can be transmitted over distances", []),
    ("reference_book", "06", ["reference_book", "reference", "reference_work", "book_of_facts"], ["book_pub"],
     "a book to which you can refer for authoritative facts", []),
    ("handbook", "06", ["handbook", "enchiridion", "vade_mecum"], ["reference_book"],
     "a concise reference book providing specific information about a subject or location", []),
    ("manual", "06", ["manual"], ["handbook"],
     "a small handbook", []),
    ("booklet", "06", ["booklet", "brochure", "folder", "leaflet", "pamphlet"], ["book_pub"],
     "a small book usually having a paper cover", []),
    ("communication", "03", ["communication"], ["abstraction"],
     "something that is communicated by or to or between people or groups", []),
    ("written_communication", "10", ["written_communication", "written_language", "black_and_white"],
     ["communication"],
     "communication by means of written symbols", []),
    ("writing", "10", ["writing", "written_material", "piece_of_writing"], ["written_communication"],
     "the work of a writer; anything expressed in letters of the alphabet", []),
    ("article", "10", ["article"], ["writing"],
     "nonfictional prose forming an independent part of a publication", []),
    ("document", "10", ["document", "written_document", "papers"], ["writing"],
     "writing that provides information", []),
    ("record", "10", ["record", "written_record", "written_account"], ["document"],
     "a document that can serve as legal evidence of a transaction", []),
    ("proceedings", "10", ["proceedings", "minutes", "transactions"], ["record"],
     "a written account of what transpired at a meeting", []),
    ("report", "10", ["report", "study", "written_report"], ["document"],
     "a written document describing the findings of some individual or group", []),
    ("treatise", "10", ["treatise"], ["writing"],
     "a formal exposition", []),
    ("dissertation", "10", ["dissertation", "thesis"], ["treatise"],
     "a treatise advancing a new point of view resulting from research; usually a requirement for an advanced academic degree", []),
    ("conveyance", "06", ["conveyance", "transport"], ["artifact"],
     "something that serves as a means of transportation", []),
    ("vehicle", "06", ["vehicle"], ["conveyance"],
     "a conveyance that transports people or objects", []),
    ("car", "06", ["car", "auto", "automobile", "machine", "motorcar"], ["vehicle"],
     "a motor vehicle with four wheels; usually propelled by an internal combustion engine", [("%p", "wheel")]),
    ("part", "03", ["part", "portion"], ["physical_entity"],
     "something less than the whole of a human artifact", [("!", "whole")]),
    ("people", "14", ["people"], ["group"],
     "(plural) any group of human beings (men or women or children) collectively", [("%m", "person")]),
    ("wheel", "06", ["wheel"], ["artifact"],
     "a simple machine consisting of a circular frame with spokes (or a solid disc) that can rotate on a shaft or axle", [("#p", "car")]),
    ("cognition", "09", ["cognition", "knowledge", "noesis"], ["psychological_feature"],
     "the psychological result of perception and learning and reasoning", []),
    ("idea", "09", ["idea", "thought"], ["cognition"],
     "the content of cognition; the main thing you are thinking about", []),
    ("concept", "09", ["concept", "conception", "construct"], ["idea"],
     "an abstract or general idea inferred or derived from specific instances", []),
    ("location", "03", ["location"], ["object"],
     "a point or extent in space", []),
    ("point", "15", ["point"], ["location"],
     "the precise location of something; a spatially limited location", []),
    ("topographic_point", "15", ["topographic_point", "place", "spot"], ["point"],
     "a point located with respect to surface features of some region", []),
    ("demonstration", "04", ["demonstration", "demo"], ["activity"],
     "a visual presentation showing how something works", []),
    ("expression", "04", ["expression", "manifestation", "reflection", "reflexion"], ["demonstration"],
     "expression without words", []),
    ("item", "03", ["item"], ["whole"],
     "a whole individual unit; especially when included in a list or collection", []),
]

# Sense order per lemma where it matters (most frequent sense first); lemmas
# not listed get their senses in synset table order, which already encodes
# the intended order elsewhere.
SENSE_ORDER = {
    "organization": ["organization_social", "organization_act", "organization_admin"],
    "organisation": ["organization_social", "organization_act", "organization_admin"],
    "establishment": ["institution", "organization_act", "organization_admin"],
    "agent": ["agent_cause", "agent_rep"],
    "publisher": ["publisher_org", "publisher_person"],
    "work": ["work_product", "work_activity"],
    "book": ["book_pub", "book_volume"],
    "assemblage": ["gathering", "collection"],
}

HEADER = (
    "  1 Desk-scale noun database in WNDB format; see fixtures/README.md for provenance.\n"
    "  2 Lines beginning with whitespace are header lines and are skipped by loaders.\n"
)


def build():
    by_name = {s[0]: i for i, s in enumerate(SYNSETS)}
    n = len(SYNSETS)
    hypernyms = [[by_name[h] for h in s[3]] for s in SYNSETS]
    hyponyms = [[] for _ in range(n)]
    for i, hs in enumerate(hypernyms):
        for h in hs:
            hyponyms[h].append(i)

    # pointer list per synset: @ hypernyms, ~ hyponyms, then extras.
    pointers = [[] for _ in range(n)]
    for i, s in enumerate(SYNSETS):
        for h in hypernyms[i]:
            pointers[i].append(("@", h))
        for c in hyponyms[i]:
            pointers[i].append(("~", c))
        for sym, tgt in s[5]:
            pointers[i].append((sym, by_name[tgt]))

    def data_line(i, offsets):
        s = SYNSETS[i]
        words = " ".join(f"{w} 0" for w in s[2])
        ptrs = " ".join(f"{sym} {offsets[t]} n 0000" for sym, t in pointers[i])
        return (f"{offsets[i]} {s[1]} n {len(s[2]):02x} {words} "
                f"{len(pointers[i]):03d} {ptrs} | {s[4]}  \n")

    # Fixed-point offset computation: offset fields are fixed-width (8 digits),
    # so line lengths are stable across passes.
    offsets = ["00000000"] * n
    for _ in range(2):
        pos = len(HEADER.encode())
        new = []
        for i in range(n):
            new.append(f"{pos:08d}")
            pos += len(data_line(i, offsets).encode())
        if new == offsets:
            break
        offsets = new

    data = HEADER + "".join(data_line(i, offsets) for i in range(n))

    # index.noun
    lemma_senses = {}
    for i, s in enumerate(SYNSETS):
        for w in s[2]:
            lemma_senses.setdefault(w, []).append(i)
    for lemma, order in SENSE_ORDER.items():
        lemma_senses[lemma] = [by_name[x] for x in order]

    index_lines = []
    for lemma in sorted(lemma_senses):
        senses = lemma_senses[lemma]
        syms = []
        for i in senses:
            for sym, _ in pointers[i]:
                if sym not in syms:
                    syms.append(sym)
        offs = " ".join(offsets[i] for i in senses)
        index_lines.append(
            f"{lemma} n {len(senses)} {len(syms)} {' '.join(syms)} "
            f"{len(senses)} 0 {offs}  \n")
    index = HEADER + "".join(index_lines)
    return index, data


def main():
    out_dir = sys.argv[1] if len(sys.argv) > 1 else "fixtures/wordnet"
    index, data = build()
    os.makedirs(out_dir, exist_ok=True)
    with io.open(os.path.join(out_dir, "index.noun"), "w", newline="") as f:
        f.write(index)
    with io.open(os.path.join(out_dir, "data.noun"), "w", newline="") as f:
        f.write(data)
    print(f"wrote {len(SYNSETS)} synsets to {out_dir}")


if __name__ == "__main__":
    main()
