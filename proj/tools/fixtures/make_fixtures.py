#!/usr/bin/env python3
# Copyright 2026 The valgen Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Writes the shipped data directory.

usage: make_fixtures.py [OUT_DIR]   (default: <repo>/data)
"""

import json
import os
import sys

import numpy as np

import frames_de
import lexicon_de
import romance

ROOT = os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))
DIM = 50


def dump_json(path, obj):
    os.makedirs(os.path.dirname(path), exist_ok=True)
    with open(path, "w", encoding="utf-8") as f:
        json.dump(obj, f, ensure_ascii=False, indent=1)
        f.write("\n")


def write_tsv(path, spec):
    os.makedirs(os.path.dirname(path), exist_ok=True)
    rows = sorted(spec["rows"], key=lambda r: r[0])
    prev = None
    for r in rows:
        if prev is not None and r[2] > prev[2]:
            raise SystemExit(f"{path}: rank {r[0]} has a larger count than rank {prev[0]}")
        prev = r
    explicit = any(r[4] for r in rows)
    with open(path, "w", encoding="utf-8") as f:
        f.write(f"# corpus_size_tokens={spec['corpus']}\n")
        f.write(f"# lexeme_token={spec['lexeme_token']}\n")
        if spec["pattern_count"] is not None:
            f.write(f"# pattern_count={spec['pattern_count']}\n")
        for n in spec["notes"]:
            f.write(f"# {n}\n")
        f.write("rank\tfiller\tcount\tper_million" + ("\tlexeme" if explicit else "") + "\n")
        for rank, filler, count, pm, lex in rows:
            cells = [str(rank), filler, str(count), pm]
            if explicit:
                cells.append(lex or "")
            f.write("\t".join(cells) + "\n")


# ------------------------------------------------------------------ vectors

GROUPS_DE = [
    ("belebt.menschlich.körperteil", "BODY"),
    ("belebt.menschlich", "HUMAN"),
    ("abstrakt.kommunikation.anlass", "OCCASION"),
    ("abstrakt.recht", "LAW"),
    ("abstrakt.größe", "MAGN"),
    ("abstrakt.zeit", "TIME"),
    ("abstrakt", "DISC"),
    ("materiell.werk", "DISC"),
    ("eigenschaft.empfindung", "BODY"),
    ("eigenschaft", "DISC"),
    ("materiell", "SENSE"),
    ("unbelebt", "SENSE"),
]

GROUPS_ROMANCE = [
    ("parte-del-cuerpo", "BODY"), ("partie-du-corps", "BODY"),
    ("animado", "HUMAN"), ("animé", "HUMAN"),
    ("magnitud", "MAGN"), ("grandeur", "MAGN"),
    ("abstracto", "DISC"), ("abstrait", "DISC"),
    ("material", "SENSE"), ("matériel", "SENSE"), ("inanimado", "SENSE"), ("inanimé", "SENSE"),
]

# group -> {axis: weight}
MIX = {
    "HUMAN": {"HUMAN": 1.0, "DISC": 0.9},
    "DISC": {"DISC": 1.0, "HUMAN": 0.8},
    "OCCASION": {"DISC": 0.6, "OCC": 1.0, "HUMAN": 0.4},
    "LAW": {"DISC": 0.9, "LAW": 0.5, "HUMAN": 0.5, "OCC": -1.0},
    "BODY": {"BODY": 1.0},
    "SENSE": {"SENSE": 1.0},
    "MAGN": {"MAGN": 1.0, "HUMAN": 0.3},
    "TIME": {"TIME": 1.0},
}


def group_of(path, table):
    for prefix, g in table:
        if path == prefix or path.startswith(prefix + ".") or ("." + prefix) in ("." + path):
            return g
    return None


def make_vectors(entries, nodes, table, seed):
    rng = np.random.default_rng(seed)
    axes = {}

    def axis(name):
        if name not in axes:
            v = rng.standard_normal(DIM)
            axes[name] = v / np.linalg.norm(v)
        return axes[name]

    for name in ("HUMAN", "DISC", "OCC", "LAW", "BODY", "SENSE", "MAGN", "TIME"):
        axis(name)
    field = {}
    for n in nodes:
        p = ".".join(n["path"])
        for m in n["members"]:
            field.setdefault(m, p)
    out = []
    for e in entries:
        w = e["id"]
        p = field.get(w)
        g = group_of(p, table) if p else None
        if g is None:
            v = 0.8 * axis("misc:" + w) + 0.3 * rng.standard_normal(DIM) / np.sqrt(DIM)
        else:
            v = sum(wt * axis(a) for a, wt in MIX[g].items())
            v = v + 0.5 * axis("field:" + p) + 0.6 * rng.standard_normal(DIM) / np.sqrt(DIM)
        out.append((w, v))
    return out


def cos(a, b):
    return float(a @ b / (np.linalg.norm(a) * np.linalg.norm(b)))


def write_vectors(path, vecs):
    with open(path, "w", encoding="utf-8") as f:
        f.write(f"{len(vecs)} {DIM}\n")
        for w, v in vecs:
            f.write(w + " " + " ".join(f"{x:.6f}" for x in v) + "\n")


# ------------------------------------------------------------------ corpus

def write_corpus(path, tables, prefix_len=1, seed=11):
    rng = np.random.default_rng(seed)
    lines = []
    for name, spec in sorted(tables.items()):
        rows = spec["rows"]
        lexemes = []
        for _, filler, count, _, lex in rows:
            toks = filler.split()
            lexeme = lex or (toks[0] if spec["lexeme_token"] == "first" else toks[-1])
            lexemes.append((lexeme, count))
        headword = name.split("_")[0].capitalize()
        total = sum(c for _, c in lexemes)
        for lexeme, count in lexemes:
            k = max(1, int(round(40 * count / total)))
            for _ in range(k):
                others = [lexemes[i][0] for i in rng.integers(0, len(lexemes), size=2)]
                lines.append(" ".join([headword, lexeme] + others))
    rng.shuffle(lines)
    with open(path, "w", encoding="utf-8") as f:
        f.write("\n".join(lines) + "\n")


# ------------------------------------------------------------------ checks

def check_bundle(lang, entries, nodes, frames):
    ids = [e["id"] for e in entries]
    dup = {i for i in ids if ids.count(i) > 1}
    if dup:
        raise SystemExit(f"{lang}: duplicate entries {sorted(dup)}")
    known = set(ids)
    for n in nodes:
        for m in n["members"]:
            if m not in known:
                raise SystemExit(f"{lang}: ontology member {m} has no entry")
    for f in frames:
        if f["inflection_ref"] not in known:
            raise SystemExit(f"{lang}: head {f['lemma']} has no entry")
    pids = [p["id"] for f in frames for p in f["patterns"]]
    if len(pids) != len(set(pids)):
        raise SystemExit(f"{lang}: duplicate pattern ids")
    if len(frames) != 20:
        raise SystemExit(f"{lang}: expected 20 frames, got {len(frames)}")


def main():
    out = sys.argv[1] if len(sys.argv) > 1 else os.path.join(ROOT, "data")
    os.makedirs(out, exist_ok=True)
    summary = {}

    # German
    entries = lexicon_de.NOUNS + lexicon_de.ADJECTIVES
    nodes = [{"path": p, "members": m, **({"tags": t} if t else {})} for p, m, t in lexicon_de.ONTOLOGY]
    lex_frames, prof_frames, tables, anns = frames_de.frames()
    bundles = {"de": (entries, nodes, lex_frames, prof_frames, tables, anns, GROUPS_DE)}
    for lang in ("es", "fr"):
        e, o, lf, pf, t, a = romance.build(lang)
        bundles[lang] = (e, o, lf, pf, t, a, GROUPS_ROMANCE)

    for lang, (entries, nodes, lex_frames, prof_frames, tables, anns, groups) in bundles.items():
        check_bundle(lang, entries, nodes, lex_frames)
        dump_json(os.path.join(out, f"lexicon.{lang}.json"),
                  {"language": lang, "frames": lex_frames, "entries": entries})
        dump_json(os.path.join(out, f"ontology.{lang}.json"), {"language": lang, "nodes": nodes})
        dump_json(os.path.join(out, f"profiles.{lang}.json"), {"language": lang, "frames": prof_frames})
        for name, spec in tables.items():
            write_tsv(os.path.join(out, "freq", lang, name + ".tsv"), spec)
        for name, items in anns.items():
            dump_json(os.path.join(out, "annotations", lang, name + ".json"), items)
        vecs = make_vectors(entries, nodes, groups, seed={"de": 3, "es": 5, "fr": 7}[lang])
        write_vectors(os.path.join(out, f"vectors.{lang}.txt"), vecs)
        if lang == "de":
            write_corpus(os.path.join(out, "corpus.de.txt"), tables)
            vd = dict(vecs)
            for a, b in [("Bundesregierung", "Anfrage"), ("Bemerkung", "Akademikerin"), ("Lösung", "Dozent"),
                         ("Abschied", "Gesetz"), ("Predigt", "Hochzeit"), ("Bibel", "Versuchung"),
                         ("Zimmer", "Blume"), ("Kopf", "Lippenstift"), ("Regierung", "Gesetz")]:
                print(f"  cos({a}, {b}) = {cos(vd[a], vd[b]):.3f}")
        summary[lang] = (len(lex_frames), len(entries), len(nodes),
                         sum(len(n["members"]) for n in nodes), len(tables))
    for lang, (f, e, n, m, t) in summary.items():
        print(f"{lang}: {f} frames, {e} entries, {n} nodes, {m} members, {t} tables")
    print("total nodes", sum(v[2] for v in summary.values()), "members", sum(v[3] for v in summary.values()))


if __name__ == "__main__":
    main()
