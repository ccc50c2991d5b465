#!/usr/bin/env python3
# Copyright 2026 The SciKG Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Regenerates the checked-in test fixtures under tests/data.

Usage: tools/make_fixtures.py [output_dir]

Everything is seeded, so rerunning produces identical files.
"""

import json
import os
import sys

import numpy as np

DIM = 300


def write(path, text):
    os.makedirs(os.path.dirname(path), exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        f.write(text)


def unit(v):
    return v / np.linalg.norm(v)


def emb_file(table):
    lines = ["%d %d" % (len(table), DIM)]
    for token in sorted(table):
        lines.append(token + " " + " ".join("%.6f" % x for x in table[token]))
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Gold standard with the evaluation's set sizes.
#
# Venn regions over (EF, OpenIE, PoS+Cons) as (size, true); the discarded
# triples belong to no method.
REGIONS = [
    ("ef", 358, 296),
    ("oie", 73, 53),
    ("pc", 118, 94),
    ("ef+oie", 5, 5),
    ("ef+pc", 28, 28),
    ("oie+pc", 14, 13),
    ("ef+oie+pc", 10, 9),
    ("discarded", 212, 123),
]
POS_SIZE, POS_TRUE = 60, 48


def gold818(out):
    gold, members = [], {"ef": [], "oie": [], "pos": [], "cons": []}
    pos_true = pos_false = 0
    n = 0
    relations = ["uses", "improves", "supports", "includes", "produces"]
    for name, size, true in REGIONS:
        for i in range(size):
            n += 1
            t = ("subject %04d" % n, relations[n % len(relations)], "object %04d" % n)
            verdict = i < true
            gold.append((t, verdict))
            parts = name.split("+")
            if "ef" in parts:
                members["ef"].append(t)
            if "oie" in parts:
                members["oie"].append(t)
            if "pc" in parts:
                # PoS takes its true and false quota from the PoS+Cons-only
                # region; everything else is a consistency triple.
                if name == "pc" and verdict and pos_true < POS_TRUE:
                    members["pos"].append(t)
                    pos_true += 1
                elif name == "pc" and not verdict and pos_false < POS_SIZE - POS_TRUE:
                    members["pos"].append(t)
                    pos_false += 1
                else:
                    members["cons"].append(t)
    assert len(gold) == 818
    assert [len(members[k]) for k in ("ef", "oie", "pos", "cons")] == [401, 102, 60, 110]
    # Shuffle rows so file order carries no information.
    rng = np.random.RandomState(818)
    order = rng.permutation(len(gold))
    write(os.path.join(out, "gold.tsv"),
          "".join("%s\t%s\t%s\t%s\n" % (*gold[i][0], "true" if gold[i][1] else "false")
                  for i in order))
    for k, triples in members.items():
        write(os.path.join(out, k + ".tsv"), "".join("%s\t%s\t%s\n" % t for t in sorted(triples)))


# ---------------------------------------------------------------------------
# Verb embeddings: groups of near-synonyms plus unrelated verbs.

VERB_GROUPS = {
    # The first member of each group sits at the mean of the others.
    "produce": ["produces", "builds", "creates", "develops", "makes", "constructs"],
    "use": ["uses", "utilizes", "adopts", "employs", "applies"],
    "improve": ["improves", "enhances", "boosts", "increases"],
    "limit": ["limits", "constrains", "restricts"],
    "support": ["supports", "enables", "facilitates"],
    "evaluate": ["evaluates", "assesses", "measures"],
    "compare": ["compares", "contrasts"],
    "include": ["includes", "contains", "comprises"],
}
SINGLE_VERBS = ["predicts", "extracts", "detects", "learns", "requires", "describes", "proposes",
                "trains", "solves", "reduces", "identifies", "represents", "generates", "retrieves",
                "classifies", "annotates", "links", "maps", "queries", "ranks", "parses"]


def verb_embeddings(rng):
    table = {}
    for group, verbs in VERB_GROUPS.items():
        center = unit(rng.normal(size=DIM))
        others = [unit(center + 0.35 * unit(rng.normal(size=DIM))) for _ in verbs[1:]]
        others = [np.round(v, 6) for v in others]
        table[verbs[0]] = np.round(np.mean(others, axis=0), 6)
        for verb, v in zip(verbs[1:], others):
            table[verb] = v
    for verb in SINGLE_VERBS:
        table[verb] = np.round(unit(rng.normal(size=DIM)), 6)
    assert len(table) == 50, len(table)
    return table


# ---------------------------------------------------------------------------
# Verb taxonomy: a rooted DAG of synsets with lemma senses.

def taxonomy(rng):
    edges = []  # (child, parent)
    senses = []  # (lemma, synset)

    def add(child, parent):
        edges.append((child, parent))

    root = "entity.v.00"
    add("act.v.01", root)
    add("restrain.v.01", root)
    add("think.v.01", root)
    add("communicate.v.01", root)
    add("change.v.01", root)
    add("manipulate.v.01", "act.v.01")
    add("control.v.01", "restrain.v.01")
    for s in ("use.v.01", "improve.v.01", "produce.v.01"):
        add(s, "manipulate.v.01")
    add("limit.v.01", "control.v.01")
    add("support.v.01", "act.v.01")
    add("evaluate.v.01", "think.v.01")
    add("compare.v.01", "evaluate.v.01")
    add("include.v.01", "change.v.01")
    # Two-parent synset: longest path decides its depth.
    add("apply.v.01", "use.v.01")
    add("apply.v.01", "act.v.01")
    leaf_groups = {
        "use.v.01": ["use", "uses", "utilize", "utilizes", "employ", "employs", "adopt", "adopts"],
        "apply.v.01": ["apply", "applies"],
        "improve.v.01": ["improve", "improves", "enhance", "enhances", "boost", "boosts",
                         "increase", "increases"],
        "produce.v.01": ["produce", "produces", "create", "creates", "build", "builds",
                         "develop", "develops", "make", "makes", "construct", "constructs",
                         "generate", "generates"],
        "limit.v.01": ["limit", "limits", "constrain", "constrains", "restrict", "restricts",
                       "reduce", "reduces"],
        "support.v.01": ["support", "supports", "enable", "enables", "facilitate",
                         "facilitates"],
        "evaluate.v.01": ["evaluate", "evaluates", "assess", "assesses", "measure", "measures",
                          "validate", "validates"],
        "compare.v.01": ["compare", "compares", "contrast", "contrasts", "rank", "ranks"],
        "include.v.01": ["include", "includes", "contain", "contains", "comprise", "comprises"],
        "think.v.01": ["learn", "learns", "predict", "predicts", "solve", "solves"],
        "communicate.v.01": ["describe", "describes", "propose", "proposes", "annotate",
                             "annotates", "query", "queries"],
        "change.v.01": ["map", "maps", "link", "links", "parse", "parses", "train", "trains"],
    }
    # Each verb gets its own synset under the group's synset; the group lemma
    # pair (e.g. "use", "uses") also points at the group synset itself.
    for parent, lemmas in leaf_groups.items():
        base = parent.split(".")[0]
        for lemma in lemmas:
            stem = lemma[:-1] if lemma.endswith("s") and lemma[:-1] in lemmas else lemma
            if stem.startswith(base) or (stem + "s").startswith(base):
                senses.append((lemma, parent))
            else:
                syn = stem + ".v.01"
                if (syn, parent) not in edges:
                    add(syn, parent)
                senses.append((lemma, syn))
    # Polysemy: "make" and "reduces" have a second sense elsewhere.
    add("make.v.02", "change.v.01")
    senses += [("make", "make.v.02"), ("makes", "make.v.02")]
    add("reduce.v.02", "change.v.01")
    senses += [("reduce", "reduce.v.02"), ("reduces", "reduce.v.02")]
    # Filler synsets to reach a realistic size.
    nodes = sorted({c for c, _ in edges} | {p for _, p in edges})
    k = 0
    while len(set(nodes)) < 200:
        k += 1
        parent = nodes[rng.randint(len(nodes))]
        child = "filler%03d.v.01" % k
        add(child, parent)
        nodes.append(child)
        senses.append(("fillverb%03d" % k, child))
    rows = ["%s\thypernym\t%s" % e for e in edges] + ["%s\tsense\t%s" % s for s in senses]
    return "\n".join(rows) + "\n"


# ---------------------------------------------------------------------------
# End-to-end corpus.

ENTITIES = [
    "reinforcement learning", "web recommendation system", "neural network",
    "image classification", "word embedding", "semantic similarity", "ontology alignment",
    "ontology", "knowledge graph", "question answering", "support vector machine",
    "text classification", "topic model", "document clustering", "linked data",
    "deep learning", "speech recognition", "genetic algorithm", "feature selection",
    "data mining", "machine learning", "named entity recognition", "information extraction",
    "collaborative filtering", "recommender system", "fault diagnosis", "sensor network",
    "energy consumption", "knowledge representation", "web ontology language", "owl",
    "sentiment analysis", "machine translation", "semantic web", "artificial intelligence",
    "natural language processing", "information retrieval", "query expansion",
]

# child -> parent
ONTOLOGY_EDGES = [
    ("machine learning", "artificial intelligence"),
    ("neural network", "machine learning"),
    ("deep learning", "machine learning"),
    ("reinforcement learning", "machine learning"),
    ("support vector machine", "machine learning"),
    ("genetic algorithm", "artificial intelligence"),
    ("ontology alignment", "semantic web"),
    ("ontology", "semantic web"),
    ("linked data", "semantic web"),
    ("web ontology language", "semantic web"),
    ("knowledge graph", "semantic web"),
    ("text classification", "natural language processing"),
    ("named entity recognition", "natural language processing"),
    ("sentiment analysis", "natural language processing"),
    ("machine translation", "natural language processing"),
    ("question answering", "natural language processing"),
    ("information extraction", "natural language processing"),
    ("speech recognition", "natural language processing"),
    ("query expansion", "information retrieval"),
    ("recommender system", "information retrieval"),
    ("collaborative filtering", "recommender system"),
    ("data mining", "artificial intelligence"),
    ("document clustering", "data mining"),
    ("feature selection", "data mining"),
]
ALT_LABELS = [("ontology matching", "ontology alignment"),
              ("ontology alignment", "ontology alignment")]

E2E_VERBS = {
    # surface -> (lemma, canonical relation)
    "uses": ("use", "use"), "adopts": ("adopt", "use"), "utilizes": ("utilize", "use"),
    "employs": ("employ", "use"), "improves": ("improve", "improve"),
    "enhances": ("enhance", "improve"), "produces": ("produce", "produce"),
    "creates": ("create", "produce"), "generates": ("generate", "produce"),
    "limits": ("limit", "limit"),
}
CURATED = [("adopt", "use"), ("utilize", "use"), ("employ", "use"), ("apply", "use"),
           ("enhance", "improve"), ("boost", "improve"), ("create", "produce"),
           ("build", "produce"), ("generate", "produce")]
EF_STATIC = [("used-for", "use"), ("hyponym-of", "skos:broader"), ("part-of", "include"),
             ("feature-of", "include"), ("evaluate-for", "evaluate"), ("compare", "compare")]

DOCS = ["d%02d" % i for i in range(1, 51)]


def docs(a, b):
    return DOCS[a - 1:b]


# kind, subject surface, verb surface, object surface, papers, expected key or
# None, gold verdict or None.  EF facts read "S for O"; the others "S <verb> O".
FACTS = [
    ("EF", "reinforcement learning", "used-for", "web recommendation system", docs(1, 3)),
    ("EF", "support vector machine", "used-for", "text classification", docs(4, 8)),
    ("EF", "collaborative filtering", "used-for", "recommender system", docs(9, 20)),
    ("EF", "machine learning and data mining", "used-for", "fault diagnosis", docs(23, 24)),
    ("EF", "it", "used-for", "image classification", docs(25, 25)),
    ("EF", "approach", "used-for", "image classification", docs(26, 26)),
    ("EF", "deep learning", "conjunction", "speech recognition", docs(27, 27)),
    ("OIE", "ontology matching", "adopts", "ontologies", docs(28, 31)),
    ("OIE", "ontology alignment", "adopts", "ontology", docs(32, 39)),
    ("OIE", "neural network", "improves", "image classification", docs(1, 4)),
    ("OIE", "knowledge graph", "enhances", "question answering", docs(5, 7)),
    ("OIE", "word embedding", "utilizes", "semantic similarity", docs(8, 10)),
    ("OIE", "word embedding", "adopts", "semantic similarity", docs(11, 11)),
    ("OIE", "information extraction", "employs", "named entity recognition", docs(12, 13)),
    ("POS", "topic model", "improves", "document clustering", docs(14, 25)),
    ("POS", "genetic algorithm", "uses", "feature selection", docs(26, 35)),
    ("POS", "sensor network", "generates", "energy consumption", docs(36, 44)),
    ("POS", "deep learning", "creates", "speech recognition", docs(45, 50)),
    ("POS", "linked data", "limits", "knowledge graph", docs(40, 42)),
    ("POS", "machine translation", "limits", "sentiment analysis", docs(43, 43)),
]

# Expected graph content (non-inferred): key -> sources.
EXPECTED = {
    ("reinforcement learning", "use", "web recommendation system"): {"EF"},
    ("support vector machine", "use", "text classification"): {"EF"},
    ("collaborative filtering", "use", "recommender system"): {"EF"},
    ("web ontology language", "use", "knowledge representation"): {"EF"},
    ("web ontology language", "use", "semantic similarity"): {"EF"},
    ("owl", "use", "semantic similarity"): {"EF"},
    ("machine learning", "use", "fault diagnosis"): {"EF"},
    ("data mining", "use", "fault diagnosis"): {"EF"},
    ("ontology alignment", "use", "ontology"): {"OIE", "POS"},
    ("neural network", "improve", "image classification"): {"OIE"},
    ("knowledge graph", "improve", "question answering"): {"OIE"},
    ("word embedding", "use", "semantic similarity"): {"OIE"},
    ("information extraction", "use", "named entity recognition"): {"OIE"},
    ("topic model", "improve", "document clustering"): {"POS"},
    ("genetic algorithm", "use", "feature selection"): {"POS"},
    ("sensor network", "produce", "energy consumption"): {"CONS"},
    ("deep learning", "produce", "speech recognition"): {"CONS"},
}

GOLD = [
    (("reinforcement learning", "use", "web recommendation system"), True),
    (("support vector machine", "use", "text classification"), True),
    (("collaborative filtering", "use", "recommender system"), True),
    (("web ontology language", "use", "knowledge representation"), True),
    (("web ontology language", "use", "semantic similarity"), True),
    (("owl", "use", "semantic similarity"), False),
    (("machine learning", "use", "fault diagnosis"), True),
    (("data mining", "use", "fault diagnosis"), False),
    (("ontology alignment", "use", "ontology"), True),
    (("neural network", "improve", "image classification"), True),
    (("knowledge graph", "improve", "question answering"), False),
    (("word embedding", "use", "semantic similarity"), True),
    (("information extraction", "use", "named entity recognition"), True),
    (("topic model", "improve", "document clustering"), True),
    (("genetic algorithm", "use", "feature selection"), False),
    (("sensor network", "produce", "energy consumption"), True),
    (("deep learning", "produce", "speech recognition"), False),
    (("linked data", "limit", "knowledge graph"), False),
    (("machine translation", "limit", "sentiment analysis"), True),
    (("machine learning", "use", "neural network"), True),
    (("information retrieval", "use", "query expansion"), False),
]

METHODS = [
    ("EF", {"EF"}), ("OpenIE", {"OIE"}), ("PoS", {"POS"}), ("PoS+Cons", {"POS", "CONS"}),
    ("EF+OpenIE", {"EF", "OIE"}), ("EF+PoS+Cons", {"EF", "POS", "CONS"}),
    ("OpenIE+PoS+Cons", {"OIE", "POS", "CONS"}),
    ("EF+OpenIE+PoS+Cons", {"EF", "OIE", "POS", "CONS"}),
]


def expected_report():
    rows = []
    for name, sources in METHODS:
        predicted = {k for k, s in EXPECTED.items() if s & sources}
        tp = sum(1 for t, v in GOLD if v and t in predicted)
        fp = sum(1 for t, v in GOLD if not v and t in predicted)
        fn = sum(1 for t, v in GOLD if v and t not in predicted)
        p = tp / (tp + fp) if tp + fp else 0.0
        r = tp / (tp + fn) if tp + fn else 0.0
        f = 2 * p * r / (p + r) if p > 0 and r > 0 else 0.0
        rows.append("%s\t%.4f\t%.4f\t%.4f\t%d\t%d\t%d\n" % (name, p, r, f, tp, fp, fn))
    return "".join(rows)


PLURALS = {"ontologies": "ontology"}


def word_tokens(phrase, cap=False):
    out = []
    for w in phrase.split():
        lemma = PLURALS.get(w, w)
        pos = "NNS" if w in PLURALS else "NN"
        out.append({"t": w, "lemma": lemma, "pos": pos})
    return out


def sentence(doc, idx, kind, subj, verb, obj):
    """One record "S for O ." (EF) or "S <verb> O ." (OIE/POS)."""
    tokens, entities, relations = [], [], []
    subj_surface = "OWL" if subj == "owl" else subj
    s_tokens = word_tokens(subj_surface)
    if subj == "owl":
        s_tokens = [{"t": "OWL", "lemma": "OWL", "pos": "NNP"}]
    if subj == "machine learning and data mining":
        s_tokens = word_tokens("machine learning")
        s_tokens.append({"t": "and", "lemma": "and", "pos": "CC"})
        s_tokens += word_tokens("data mining")
    if subj == "it":
        s_tokens = [{"t": "it", "lemma": "it", "pos": "PRP"}]
    tokens += s_tokens
    s_span = (0, len(tokens))
    if kind == "EF":
        middle = [{"t": "and" if verb == "conjunction" else "for",
                   "lemma": "and" if verb == "conjunction" else "for",
                   "pos": "CC" if verb == "conjunction" else "IN"}]
    else:
        lemma = E2E_VERBS[verb][0]
        middle = [{"t": verb, "lemma": lemma, "pos": "VBZ"}]
    tokens += middle
    o_start = len(tokens)
    tokens += word_tokens(obj)
    o_span = (o_start, len(tokens))
    tokens.append({"t": ".", "lemma": ".", "pos": "."})
    ef_type = {"EF": ("Method", "Task")}.get(kind, ("Method", "Generic"))
    entities.append({"start": s_span[0], "end": s_span[1], "label": subj_surface,
                     "type": ef_type[0], "source": "EF"})
    entities.append({"start": o_span[0], "end": o_span[1], "label": obj,
                     "type": ef_type[1], "source": "EF"})
    if kind == "EF":
        rel = {"used-for": "Used-for", "conjunction": "Conjunction"}[verb]
        relations.append({"subj": 0, "obj": 1, "label": rel, "source": "EF"})
    elif kind == "OIE":
        entities.append({"start": s_span[0], "end": s_span[1], "label": subj_surface,
                         "type": "Generic", "source": "OIE"})
        entities.append({"start": o_span[0], "end": o_span[1], "label": obj,
                         "type": "Generic", "source": "OIE"})
        relations.append({"subj": 2, "obj": 3, "label": verb, "source": "OIE"})
    text = " ".join(t["t"] for t in tokens[:-1]) + " ."
    return {"doc_id": doc, "sent_idx": idx, "text": text, "tokens": tokens,
            "entities": entities, "relations": relations}


def acronym_records(next_idx):
    """d21 defines OWL and then uses it; d22 uses OWL without a definition."""
    recs = []
    toks = word_tokens("web ontology language")
    toks += [{"t": "(", "lemma": "(", "pos": "-LRB-"}, {"t": "OWL", "lemma": "OWL", "pos": "NNP"},
             {"t": ")", "lemma": ")", "pos": "-RRB-"}, {"t": "for", "lemma": "for", "pos": "IN"}]
    toks += word_tokens("knowledge representation")
    toks.append({"t": ".", "lemma": ".", "pos": "."})
    recs.append({
        "doc_id": "d21", "sent_idx": next_idx["d21"],
        "text": "web ontology language (OWL) for knowledge representation .",
        "tokens": toks,
        "entities": [
            {"start": 0, "end": 3, "label": "web ontology language", "type": "Method",
             "source": "EF"},
            {"start": 7, "end": 9, "label": "knowledge representation", "type": "Task",
             "source": "EF"}],
        "relations": [{"subj": 0, "obj": 1, "label": "Used-for", "source": "EF"}]})
    next_idx["d21"] += 1
    for doc in ("d21", "d22"):
        recs.append(sentence(doc, next_idx[doc], "EF", "owl", "used-for", "semantic similarity"))
        next_idx[doc] += 1
    return recs


def e2e(out, verb_table, rng):
    next_idx = {d: 0 for d in DOCS}
    records = acronym_records(next_idx)
    for kind, s, v, o, papers in FACTS:
        for doc in papers:
            records.append(sentence(doc, next_idx[doc], kind, s, v, o))
            next_idx[doc] += 1
    # Every paper gets a closing sentence without entities.
    for doc in DOCS:
        toks = [{"t": w, "lemma": w, "pos": p} for w, p in
                (("results", "NNS"), ("are", "VBP"), ("promising", "JJ"))]
        toks[0]["lemma"] = "result"
        records.append({"doc_id": doc, "sent_idx": next_idx[doc], "text": "results are promising .",
                        "tokens": toks + [{"t": ".", "lemma": ".", "pos": "."}],
                        "entities": [], "relations": []})
    # File order is scrambled; the loader sorts.
    order = rng.permutation(len(records))
    write(os.path.join(out, "annotations.jsonl"),
          "".join(json.dumps(records[i], sort_keys=True) + "\n" for i in order))

    write(os.path.join(out, "ontology.tsv"),
          "".join("%s\tsuperTopicOf\t%s\n" % e for e in ONTOLOGY_EDGES) +
          "".join("%s\taltLabel\t%s\n" % a for a in ALT_LABELS))

    # Embeddings: verb lemmas for the relation vocabulary plus one vector per
    # entity. "produce" is close to both "use" and "improve"; "limit" is far
    # from everything.
    table = {}
    g_use = unit(rng.normal(size=DIM))
    g_improve = unit(rng.normal(size=DIM))
    g_produce = unit(g_use + g_improve + 0.5 * unit(rng.normal(size=DIM)))
    g_limit = unit(rng.normal(size=DIM))
    centers = {"use": g_use, "improve": g_improve, "produce": g_produce, "limit": g_limit}
    for lemma, canon in sorted({v for v in E2E_VERBS.values()}):
        c = centers[canon]
        table[lemma] = c if lemma == canon else unit(c + 0.2 * unit(rng.normal(size=DIM)))
    for lemma in ("apply", "boost", "build"):
        canon = dict(CURATED)[lemma]
        table[lemma] = unit(centers[canon] + 0.2 * unit(rng.normal(size=DIM)))
    for e in ENTITIES + ["ontologies", "ontology matching"]:
        table[e.replace(" ", "_")] = unit(rng.normal(size=DIM))
    table = {k: np.round(v, 6) for k, v in table.items()}
    write(os.path.join(out, "embeddings.emb"), emb_file(table))

    topics = {c for c, _ in ONTOLOGY_EDGES} | {p for _, p in ONTOLOGY_EDGES} | \
        {a for a, _ in ALT_LABELS}
    surfaces = set(ENTITIES) | {"ontologies", "approach", "machine learning and data mining"}
    in_rows, sib_rows, out_rows = [], [], []
    for label in sorted(surfaces - topics):
        if label == "approach":
            in_rows.append((label, 50))
            sib_rows.append((label, 60))
            out_rows.append((label, 70))
        else:
            in_rows.append((label, 40))
            sib_rows.append((label, 5))
            out_rows.append((label, 1))

    def counts(rows, total):
        return "".join("%s\t%d\n" % r for r in rows) + "__TOTAL__\t%d\n" % total

    write(os.path.join(out, "background_in.tsv"), counts(in_rows, 100000))
    write(os.path.join(out, "background_sibling.tsv"), counts(sib_rows, 100000))
    write(os.path.join(out, "background_out.tsv"), counts(out_rows, 100000))
    write(os.path.join(out, "blacklist.txt"), "it\nthis\nthat\n")
    write(os.path.join(out, "whitelist.txt"), "knowledge representation\nsemantic similarity\n")
    write(os.path.join(out, "curated_map.tsv"),
          "# reviewed relation map\n" + "".join("%s\t%s\n" % p for p in CURATED))
    write(os.path.join(out, "ef_static_map.tsv"), "".join("%s\t%s\n" % p for p in EF_STATIC))
    write(os.path.join(out, "gold.tsv"),
          "".join("%s\t%s\t%s\t%s\n" % (*t, "true" if v else "false") for t, v in GOLD))
    write(os.path.join(out, "expected_evaluation.tsv"), expected_report())
    write(os.path.join(out, "expected_graph.tsv"),
          "".join("%s\t%s\t%s\t%s\n" % (*k, "|".join(sorted(v))) for k, v in sorted(EXPECTED.items())))
    write(os.path.join(out, "pipeline.conf"), "\n".join([
        "# End-to-end fixture configuration.",
        "annotations = annotations.jsonl",
        "embeddings = embeddings.emb",
        "ontology = ontology.tsv",
        "taxonomy = ../verbs.taxonomy.tsv",
        "background_in_domain = background_in.tsv",
        "background_sibling = background_sibling.tsv",
        "background_out_domain = background_out.tsv",
        "blacklist = blacklist.txt",
        "whitelist = whitelist.txt",
        "curated_map = curated_map.tsv",
        "ef_static_map = ef_static_map.tsv",
        "gold = gold.tsv",
        "namespace = http://example.org/scikg",
        "min_support = 10",
        "silhouette_target = 0.65",
        "gate_threshold = 0.5",
        "seed = 7",
        "",
    ]))


def main():
    out = sys.argv[1] if len(sys.argv) > 1 else os.path.join(
        os.path.dirname(os.path.abspath(__file__)), "..", "tests", "data")
    rng = np.random.RandomState(20190101)
    gold818(os.path.join(out, "gold818"))
    write(os.path.join(out, "verbs50.emb"), emb_file(verb_embeddings(rng)))
    write(os.path.join(out, "verbs.taxonomy.tsv"), taxonomy(rng))
    e2e(os.path.join(out, "e2e"), None, rng)


if __name__ == "__main__":
    main()
