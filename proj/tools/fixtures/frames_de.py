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

"""German frames, patterns, frequency tables, annotations and profiles."""

from patterns import det, adj, head, fill, prep, comp, pattern, slot

# deTenTen13 size derived from the pair (1913, 0.09658).
CORPUS = 19807413543

AGENS = "derjenige, der die Handlung durchführt"
THEMA = "dasjenige, worüber gesprochen oder geschrieben wird"

# ---------------------------------------------------------------- TEXT

TEXT_SLOTS = [
    slot("Arg1.1", "AGENS", AGENS),
    slot("Arg1.2", "AGENS", AGENS + " (von-Phrase)"),
    slot("Arg1.3", "AGENS", AGENS + " (Adjektiv)"),
    slot("Arg1.4", "AGENS", AGENS + " (Kompositum)"),
    slot("Arg2.1", "TRÄGER", "dasjenige, worin der Text enthalten ist"),
    slot("Arg3.1", "THEMA", "dasjenige, worüber der Text handelt"),
    slot("Arg4.1", "INHALT", "der Wortlaut des Textes"),
    slot("Arg4.2", "INHALT", "der Wortlaut des Textes (Apposition)"),
    slot("Arg5.1", "KLASSIFIKATION", "die Art des Textes (Adjektiv)"),
    slot("Arg5.2", "KLASSIFIKATION", "die Art des Textes (Kompositum)"),
]

TEXT_PATTERNS = [
    pattern("det+adj+Text+gen+adj+N1aG",
            "determinante+adjetivo+Text+determinante genitivo+adjetivo+actante N1aG",
            [det(), adj(), head(), det(), adj(), fill("Arg1.1", "gen")]),
    pattern("det+head+gen+N1a",
            "determinante+Text+determinante genitivo+actante N1a",
            [det(), head(), det(), fill("Arg1.1", "gen")]),
    pattern("det+arg5c+head+gen+N1a",
            "determinante+actante Arg5.2+Text+determinante genitivo+actante N1a",
            [det(), comp("Arg5.2"), head(), det(), fill("Arg1.1", "gen")]),
    pattern("det+adj+Text+über+det.acc+adj+N2A",
            "determinante+adjetivo+Text+über+determinante acusativo+adjetivo+actante N2A",
            [det(), adj(), head(), prep("über", "acc"), det(), adj(), fill("Arg3.1")]),
    pattern("det+adj+Text+von+det.dat+adj+N1aD",
            "determinante+adjetivo+Text+von+determinante dativo+adjetivo+actante N1aD",
            [det(), adj(), head(), prep("von", "dat"), det(), adj(), fill("Arg1.2")]),
    pattern("det+adj+A1aN+Text",
            "determinante+adjetivo+actante A1aN+Text",
            [det(), adj(), fill("Arg1.3", pos="adjective"), head()]),
    pattern("det+A5N+Text",
            "determinante+actante A5N+Text",
            [det(), fill("Arg5.1", pos="adjective"), head()]),
    pattern("det+arg1c+head+über+det.acc+N3",
            "determinante+actante Arg1.4+Text+über+determinante acusativo+actante N3",
            [det(), comp("Arg1.4"), head(), prep("über", "acc"), det(), fill("Arg3.1")]),
    pattern("det+head+gen+N2+über+det.acc+N3",
            "determinante+Text+determinante genitivo+actante N2+über+determinante acusativo+actante N3",
            [det(), head(), det(), fill("Arg2.1", "gen"), prep("über", "acc"), det(), fill("Arg3.1")]),
    pattern("det+arg5c+head+über+det.acc+N3",
            "determinante+actante Arg5.2+Text+über+determinante acusativo+actante N3",
            [det(), comp("Arg5.2"), head(), prep("über", "acc"), det(), fill("Arg3.1")]),
]

# The source top 20 of TEXT + genitive.
TAB2 = [
    (1, "Text die Lied", 1913, "0.09658"),
    (2, "Text die Bibel", 1820, "0.09188"),
    (3, "Text die Buch", 866, "0.04372"),
    (4, "Text die Autor", 844, "0.04261"),
    (5, "Text die Band", 837, "0.04226"),
    (6, "Text die Song", 755, "0.03812"),
    (7, "Text die neu Testament", 649, "0.03276"),
    (8, "Text die alt Testament", 509, "0.02570"),
    (9, "Text die Petition", 507, "0.02560"),
    (10, "Text die Seite", 487, "0.02459"),
    (11, "Text die Artikel", 467, "0.02358"),
    (12, "Text die Mail", 365, "0.01843"),
    (13, "Text die Anzeige", 345, "0.01742"),
    (14, "Text die Rede", 332, "0.01676"),
    (15, "Text die heilig Schrift", 331, "0.01671"),
    (16, "Text die Autorin", 331, "0.01671"),
    (17, "Text die Urkunde", 326, "0.01646"),
    (18, "Text die E-Mail", 324, "0.01636"),
    (19, "Text die Webseite", 323, "0.01631"),
    (20, "Text die Evangelium", 318, "0.01605"),
]

TEXT_GEN_SYNTHETIC = [
    "Polizei", "Verein", "Akademiker", "Bundesregierung", "Cousine", "Faschist",
    "Konzern", "Nato", "Geschäftsführerin", "Agnostiker", "Hochschule", "Detektiv",
    "Dichter", "Schüler", "Verlag", "Uni", "EU", "Paulus", "Jury", "Papst",
    "Architekt", "Künstler", "Philosoph", "Teilnehmer", "Dozent", "Regierung",
    "Mutter", "Sozialist", "Armee", "Klub", "Partei", "Präsident", "Katholik",
    "Firma", "Universität", "Gastprofessor", "Hersteller", "Journalistin", "Sänger",
    "Schriftsteller", "Kommission", "Vater", "Kommunist", "Marine", "Chor",
    "Atheist", "Mia", "Lena", "Gruppe", "Lehrer", "Tourist",
]

CONTAINERS = ["Lied", "Bibel", "Buch", "Song", "Testament", "Petition", "Seite",
              "Artikel", "Mail", "Anzeige", "Rede", "Schrift", "Urkunde", "E-Mail",
              "Webseite", "Evangelium"]


def text_gen_table():
    rows = [(r, f, c, pm, None) for r, f, c, pm in TAB2]
    for i, lex in enumerate(TEXT_GEN_SYNTHETIC):
        rows.append((21 + i, f"Text die {lex}", 316 - 4 * i, "", None))
    rows.append((103, "Text die Jahr", 102, "", None))
    rows.append((124, "Text die Monat", 88, "", None))
    return rows


def text_gen_annotations():
    out = []
    for lex in CONTAINERS:
        out.append({"filler": lex, "verdict": "valency_required", "slot": "Arg2.1",
                    "note": "complement, but the text is contained in it, no agent"})
    for lex in ["Autor", "Band", "Autorin"] + TEXT_GEN_SYNTHETIC:
        out.append({"filler": lex, "verdict": "valency_required", "slot": "Arg1.1",
                    "note": "agent"})
    out.append({"filler": "Jahr", "verdict": "excluded", "note": "temporal, not valency-bound"})
    out.append({"filler": "Monat", "verdict": "excluded", "note": "temporal, not valency-bound"})
    return out


# Genitive agent in the compound pattern (pair marginals).
TEXT_ARG5C_N1 = [
    ("Akademikerin", 812), ("Gastprofessor", 471), ("Englischlehrer", 446),
    ("Erzieher", 415), ("Dozent", 388), ("Akademiker", 352), ("Englischlehrerin", 301),
    ("Lehrer", 264), ("Autor", 240), ("Dichter", 212), ("Künstler", 188),
    ("Schriftsteller", 160), ("Bundesregierung", 151), ("Regierung", 120),
    ("Kommission", 97),
]

TEXT_COMPOUND_A5 = [
    ("Bemerkungstext", "Bemerkung", 905), ("Lösungstext", "Lösung", 480),
    ("Antworttext", "Antwort", 472), ("Erklärungstext", "Erklärung", 421),
    ("Ankündigungstext", "Ankündigung", 393), ("Beschreibungstext", "Beschreibung", 364),
    ("Predigttext", "Predigt", 2410), ("Abschiedstext", "Abschied", 1320),
    ("Pressetext", "Presse", 3120),
]

TEXT_UEBER = [
    ("Thema", 2210), ("Gesetz", 1650), ("Frage", 1402), ("Zukunft", 1210),
    ("Problem", 980), ("Vertrag", 611), ("Sinn", 540), ("Versuchung", 420),
    ("Hochzeit", 380), ("Rolle", 301),
]

TEXT_VON = [("Autor", 560), ("Verlag", 300), ("Künstler", 240), ("Dichter", 200),
            ("Schriftsteller", 180), ("Architekt", 95)]

TEXT_ADJ_AGENT = [("platonisch", 310), ("kantisch", 120), ("aristotelisch", 95),
                  ("sokratisch", 61), ("marxistisch", 44)]

TEXT_ADJ_TYPE = [("literarisch", 2300), ("wissenschaftlich", 1890), ("liturgisch", 900),
                 ("juristisch", 780), ("religiös", 640)]

TEXT_COMPOUND_A1 = [("Regierungstext", "Regierung", 150), ("Kommissionstext", "Kommission", 131),
                    ("Senatstext", "Senat", 42), ("Verwaltungstext", "Verwaltung", 30)]

TEXT_PACKAGES_GEN = [
    # class, label, head adjectives, filler adjectives
    ("belebt.menschlich.organisation.militär", "animado humano organización militar",
     ["langweilig"], ["deutsch"]),
    ("belebt.menschlich.verein.freizeit", "animado humano asociación tiempo libre",
     ["lang"], ["alt"]),
    ("belebt.menschlich.beruf.ausbildung", "animado humano profesión educación",
     ["kurz"], ["bekannt"]),
    ("belebt.menschlich.organisation.regierung", "animado humano organización gubernamental",
     ["ausführlich"], ["deutsch"]),
    ("belebt.menschlich.familie", "animado humano familia", ["literarisch"], ["alt"]),
    ("belebt.menschlich.ideologie.politik", "animado humano ideología política",
     ["komisch"], ["spanisch"]),
    ("belebt.menschlich.organisation.unternehmen", "animado humano organización empresarial",
     ["offiziell"], ["russisch"]),
    ("belebt.menschlich.beruf", "animado humano profesión", ["endgültig"], ["schlau"]),
    ("belebt.menschlich.organisation.politik", "animado humano organización política",
     ["vollständig"], ["mächtig"]),
    ("belebt.menschlich.amt", "animado humano cargo", ["bekannt"], ["nett"]),
    ("belebt.menschlich.glaube", "animado humano creencia religiosa",
     ["schwierig"], ["bekannt"]),
    ("belebt.menschlich.organisation.bildung", "animado humano organización educativa",
     ["lang"], ["privat"]),
    ("belebt.menschlich.eigenschaft", "animado humano propiedad", ["kurz"], ["jung"]),
    ("belebt.menschlich.eigenname", "animado humano nombre propio", ["neu"], []),
    ("belebt.menschlich.kollektiv", "animado humano colectivo", ["neu"], ["bekannt"]),
]

TEXT_HEAD_ADJ = ["kurz", "lang", "langweilig", "ausführlich", "literarisch", "komisch",
                 "offiziell", "endgültig", "vollständig", "bekannt", "schwierig"]
TEXT_FILLER_ADJ = ["bekannt", "alt", "jung", "deutsch"]


def pkg(cls, label=None, number="sg", head_adj=None, filler_adj=None):
    p = {"class": cls, "number": number}
    if label:
        p["label"] = label
    if head_adj is not None:
        p["head_adjectives"] = head_adj
    if filler_adj is not None:
        p["filler_adjectives"] = filler_adj
    return p


def frames():
    """Returns (lexicon frames, profile frames, tables, annotations)."""
    lex_frames, prof_frames, tables, anns = [], [], {}, {}

    def table(name, rows, lexeme_token="last", pattern_count=None, notes=()):
        tables[name] = {"rows": rows, "lexeme_token": lexeme_token,
                        "corpus": CORPUS, "pattern_count": pattern_count, "notes": list(notes)}
        return f"freq/de/{name}.tsv"

    def ann(name, items):
        anns[name] = items
        return f"annotations/de/{name}.json"

    def simple_rows(prefix, pairs, start_rank=1):
        return [(start_rank + i, f"{prefix} {lex}", c, "", None) for i, (lex, c) in enumerate(pairs)]

    def compound_rows(items, start_rank=1):
        return [(start_rank + i, surf, c, "", lex) for i, (surf, lex, c) in enumerate(items)]

    def all_required(pairs, arg, note="valency-bound"):
        return [{"filler": lex, "verdict": "valency_required", "slot": arg, "note": note}
                for lex, *_ in pairs]

    # TEXT
    lex_frames.append({"lemma": "Text", "gender": "masc", "inflection_ref": "Text",
                       "scene": "AUSDRUCK", "evidence": "attested",
                       "slots": TEXT_SLOTS, "patterns": TEXT_PATTERNS})
    t_gen = table("text_gen", text_gen_table(),
                  notes=["top 20 transcribed; rows from rank 21 synthetic except Jahr/Monat"])
    a_gen = ann("text_gen", text_gen_annotations())
    t_n1 = table("text_arg5c_n1", simple_rows("Bemerkungstext die", TEXT_ARG5C_N1),
                 notes=["synthetic pair marginals"])
    a_n1 = ann("text_arg5c_n1", all_required(TEXT_ARG5C_N1, "Arg1.1"))
    a5 = sorted(TEXT_COMPOUND_A5, key=lambda x: (-x[2], x[0]))
    t_a5 = table("text_compound_a5", compound_rows(a5), notes=["synthetic"])
    a_a5 = ann("text_compound_a5", all_required([(l, c) for _, l, c in a5], "Arg5.2"))
    t_ue = table("text_ueber", simple_rows("Text über", TEXT_UEBER), notes=["synthetic"])
    a_ue = ann("text_ueber", all_required(TEXT_UEBER, "Arg3.1"))
    t_von = table("text_von", simple_rows("Text von", TEXT_VON), notes=["synthetic"])
    a_von = ann("text_von", all_required(TEXT_VON, "Arg1.2"))
    t_aa = table("text_adj_agent", [(i + 1, f"{a} Text", c, "", None)
                                    for i, (a, c) in enumerate(TEXT_ADJ_AGENT)],
                 lexeme_token="first", notes=["synthetic"])
    a_aa = ann("text_adj_agent", all_required(TEXT_ADJ_AGENT, "Arg1.3"))
    t_at = table("text_adj_type", [(i + 1, f"{a} Text", c, "", None)
                                   for i, (a, c) in enumerate(TEXT_ADJ_TYPE)],
                 lexeme_token="first", notes=["synthetic"])
    a_at = ann("text_adj_type", all_required(TEXT_ADJ_TYPE, "Arg5.1"))
    t_a1 = table("text_compound_a1", compound_rows(TEXT_COMPOUND_A1), notes=["synthetic"])
    a_a1 = ann("text_compound_a1", all_required([(l, c) for _, l, c in TEXT_COMPOUND_A1], "Arg1.4"))
    prof_frames.append({
        "lemma": "Text",
        "head_adjectives": TEXT_HEAD_ADJ,
        "filler_adjectives": TEXT_FILLER_ADJ,
        "aliases": {"Bemerkung-set": "abstrakt.kommunikation.textsorte"},
        "exclude": {},
        "evidence": [
            {"patterns": ["det+adj+Text+gen+adj+N1aG", "det+head+gen+N1a"], "slot": "Arg1.1",
             "table": t_gen, "annotations": a_gen,
             "packages": [pkg(c, l, "sg", h, f) for c, l, h, f in TEXT_PACKAGES_GEN]},
            {"patterns": ["det+arg5c+head+gen+N1a"], "slot": "Arg1.1",
             "table": t_n1, "annotations": a_n1,
             "packages": [pkg("belebt.menschlich.beruf.ausbildung", "animado humano profesión educación", "both"),
                          pkg("belebt.menschlich.beruf", "animado humano profesión", "both"),
                          pkg("belebt.menschlich.organisation.regierung",
                              "animado humano organización gubernamental", "sg")]},
            {"patterns": ["det+arg5c+head+gen+N1a", "det+arg5c+head+über+det.acc+N3"], "slot": "Arg5.2",
             "table": t_a5, "annotations": a_a5,
             "packages": [pkg("abstrakt.kommunikation.textsorte", "Bemerkung-set", "both"),
                          pkg("abstrakt.kommunikation.anlass", None, "sg")]},
            {"patterns": ["det+adj+Text+über+det.acc+adj+N2A", "det+arg1c+head+über+det.acc+N3",
                          "det+head+gen+N2+über+det.acc+N3", "det+arg5c+head+über+det.acc+N3"],
             "slot": "Arg3.1", "table": t_ue, "annotations": a_ue},
            {"patterns": ["det+adj+Text+von+det.dat+adj+N1aD"], "slot": "Arg1.2",
             "table": t_von, "annotations": a_von},
            {"patterns": ["det+adj+A1aN+Text"], "slot": "Arg1.3",
             "table": t_aa, "annotations": a_aa, "packages": [pkg("eigenschaft.urheber", None, "both")]},
            {"patterns": ["det+A5N+Text"], "slot": "Arg5.1",
             "table": t_at, "annotations": a_at, "packages": [pkg("eigenschaft.textsorte", None, "both")]},
            {"patterns": ["det+arg1c+head+über+det.acc+N3"], "slot": "Arg1.4",
             "table": t_a1, "annotations": a_a1,
             "packages": [pkg("belebt.menschlich.organisation.regierung", None, "sg")]},
            {"patterns": ["det+head+gen+N2+über+det.acc+N3"], "slot": "Arg2.1",
             "table": t_gen, "annotations": a_gen},
        ],
    })

    # SCHMERZ
    lex_frames.append({
        "lemma": "Schmerz", "gender": "masc", "inflection_ref": "Schmerz",
        "scene": "AFFIZIERTHEIT", "evidence": "attested",
        "slots": [slot("Arg1.1", "EXPERIENCER", "derjenige, der den Schmerz empfindet"),
                  slot("Arg1.3", "EXPERIENCER", "die Art des Empfindens (Adjektiv)"),
                  slot("Arg2.1", "LOKALISATION", "der Körperteil, an dem der Schmerz auftritt"),
                  slot("Arg2.2", "LOKALISATION", "der Körperteil (Kompositum)")],
        "patterns": [
            pattern("det+A1N+Schmerz", "determinante+actante A1N+Schmerz",
                    [det(), fill("Arg1.3", pos="adjective"), head()]),
            pattern("det+arg2c+Schmerz", "determinante+actante Arg2.2+Schmerz",
                    [det(), comp("Arg2.2"), head()]),
            pattern("det+Schmerz+gen+N2", "determinante+Schmerz+determinante genitivo+actante N2",
                    [det(), head(), det(), fill("Arg2.1", "gen")]),
            pattern("det+adj+Schmerz+gen+N1", "determinante+adjetivo+Schmerz+determinante genitivo+actante N1",
                    [det(), adj(), head(), det(), fill("Arg1.1", "gen")]),
        ]})
    tab9 = [(1, "stark Schmerz", 30125), (2, "chronisch Schmerz", 21934), (3, "groß Schmerz", 12875),
            (4, "stechend Schmerz", 8063), (5, "körperlich Schmerz", 5899), (6, "heftig Schmerz", 5165),
            (7, "akut Schmerz", 5045), (8, "leicht Schmerz", 4624), (9, "brennend Schmerz", 3673),
            (10, "seelisch Schmerz", 3612)]
    t_adj = table("schmerz_adj", [(r, f, c, "", None) for r, f, c in tab9], lexeme_token="first",
                  notes=["transcribed; per-million column recomputed (source values rounded)"])
    a_adj = ann("schmerz_adj",
                [{"filler": f.split()[0],
                  "verdict": "valency_required" if f.split()[0] in ("körperlich", "seelisch") else "not_valency",
                  **({"slot": "Arg1.3"} if f.split()[0] in ("körperlich", "seelisch") else {}),
                  "note": "experiencer dimension" if f.split()[0] in ("körperlich", "seelisch")
                  else "intensity or quality, not valency-bound"} for _, f, _ in tab9])
    comp_rows = [
        (1, "Kopfschmerz", 188950, "", "Kopf"), (2, "Rückenschmerz", 92363, "", "Rücken"),
        (3, "Bauchschmerz", 45907, "", "Bauch"), (4, "Zahnschmerz", 30210, "", "Zahn"),
        (5, "Gelenkschmerz", 24100, "", "Gelenk"), (6, "Muskelschmerz", 20550, "", "Muskel"),
        (7, "Halsschmerz", 15330, "", "Hals"), (8, "Magenschmerz", 12040, "", "Magen"),
        (9, "Ohrenschmerz", 9100, "", "Ohr"), (10, "Herzschmerz", 6100, "", "Herz"),
        (11, "Knochenschmerz", 4480, "", "Knochen"), (12, "Fußschmerz", 4190, "", "Fuß"),
        (14, "Nierenschmerz", 2110, "", "Niere"), (17, "Handschmerz", 1890, "", "Hand"),
        (30, "Augenschmerz", 1949 - 0, "", "Auge"),
        (41, "Gesichtsschmerz", 811, "", "Gesicht"), (96, "Eierstockschmerz", 152, "", "Eierstock"),
        (234, "Hautschmerz", 48, "", "Haut"), (263, "Haarschmerz", 39, "", "Haar"),
    ]
    # rank 30 (Auge) carries 1949, so ranks 14 and 17 must exceed it
    comp_rows[12] = (14, "Nierenschmerz", 2610, "", "Niere")
    comp_rows[13] = (17, "Handschmerz", 2090, "", "Hand")
    t_comp = table("schmerz_compound", comp_rows,
                   notes=["Kopf/Rücken/Bauch and Auge/Haar/Haut transcribed; other rows synthetic"])
    a_comp = ann("schmerz_compound", [{"filler": r[4], "verdict": "valency_required", "slot": "Arg2.2",
                                       "note": "body part"} for r in comp_rows])
    t_sgen = table("schmerz_gen", [(107, "Schmerz die Kopf", 21, "", None)], pattern_count=21,
                   notes=["transcribed; only the Kopf row is listed in the source"])
    a_sgen = ann("schmerz_gen", [{"filler": "Kopf", "verdict": "valency_required", "slot": "Arg2.1",
                                  "note": "body part"}])
    exp = [("Patient", 640), ("Kind", 520), ("Mensch", 480), ("Mutter", 210), ("Opfer", 0)]
    exp = [e for e in exp if e[1] > 0]
    t_sexp = table("schmerz_experiencer", simple_rows("Schmerz die", exp), notes=["synthetic"])
    a_sexp = ann("schmerz_experiencer", all_required(exp, "Arg1.1"))
    prof_frames.append({
        "lemma": "Schmerz",
        "head_adjectives": ["stark", "chronisch", "stechend", "heftig", "akut", "leicht", "brennend"],
        "filler_adjectives": ["jung", "alt"],
        "aliases": {"Körperteil": "belebt.menschlich.körperteil"},
        "exclude": {"belebt.menschlich.körperteil": ["Haar", "Haut"]},
        "evidence": [
            {"patterns": ["det+A1N+Schmerz"], "slot": "Arg1.3", "table": t_adj, "annotations": a_adj,
             "packages": [pkg("eigenschaft.empfindung", None, "both")]},
            {"patterns": ["det+arg2c+Schmerz"], "slot": "Arg2.2", "table": t_comp, "annotations": a_comp,
             "packages": [pkg("belebt.menschlich.körperteil", "Körperteil", "both")]},
            {"patterns": ["det+Schmerz+gen+N2"], "slot": "Arg2.1", "table": t_sgen, "annotations": a_sgen},
            {"patterns": ["det+adj+Schmerz+gen+N1"], "slot": "Arg1.1", "table": t_sexp, "annotations": a_sexp},
        ]})

    # FARBE
    lex_frames.append({
        "lemma": "Farbe", "gender": "fem", "inflection_ref": "Farbe",
        "scene": "KLASSIFIKATION", "evidence": "attested",
        "slots": [slot("Arg1.1", "TRÄGER", "dasjenige, das die Farbe aufweist")],
        "patterns": [pattern("det+Farbe+gen+adj+N1", "determinante+Farbe+determinante genitivo+adjetivo+actante N1",
                             [det(), head(), det(), adj(), fill("Arg1.1", "gen")])]})
    farbe = [(1, "Farbe die Himmel", 3120, "Himmel"), (2, "Farbe die Wand", 2480, "Wand"),
             (3, "Farbe die Meer", 2100, "Meer"), (4, "Farbe die Blatt", 1780, "Blatt"),
             (5, "Farbe die Wein", 1530, "Wein"), (6, "Farbe die Kleid", 1390, "Kleid"),
             (7, "Farbe die Lippenstift", 1214, "Lippenstift"), (8, "Farbe die Haus", 1100, "Haus"),
             (9, "Farbe die Rose", 980, "Rose"), (12, "Farbe die Blume", 760, "Blume"),
             (31, "Farbe die Auge", 460, "Auge"), (38, "Farbe die Haar", 402, "Haar"),
             (54, "Farbe die Haut", 285, "Haut")]
    t_f = table("farbe_gen", [(r, f, c, "", None) for r, f, c, _ in farbe],
                notes=["Auge/Haar/Haut transcribed; other rows synthetic"])
    a_f = ann("farbe_gen", [{"filler": lex, "verdict": "valency_required", "slot": "Arg1.1",
                             "note": "bearer of the colour"} for *_, lex in farbe])
    prof_frames.append({
        "lemma": "Farbe", "head_adjectives": [], "filler_adjectives": ["alt", "frisch"],
        "aliases": {"Kosmetik": "materiell.gegenstand.schönheitspflege.kosmetik"},
        "exclude": {"belebt.menschlich.körperteil": ["Muskel", "Knochen", "Gelenk", "Eierstock",
                                                     "Herz", "Magen", "Leber", "Niere"]},
        "evidence": [{"patterns": ["det+Farbe+gen+adj+N1"], "slot": "Arg1.1", "table": t_f, "annotations": a_f,
                      "packages": [pkg("belebt.menschlich.körperteil", None, "both"),
                                   pkg("unbelebt.natur"), pkg("materiell.gebäude"),
                                   pkg("materiell.getränk"), pkg("materiell.gegenstand.kleidung"),
                                   pkg("materiell.gegenstand.schönheitspflege.kosmetik"),
                                   pkg("materiell.gegenstand.schönheitspflege.nagelpflege")]}]})

    # DISKUSSION
    lex_frames.append({
        "lemma": "Diskussion", "gender": "fem", "inflection_ref": "Diskussion",
        "scene": "AUSDRUCK", "evidence": "attested",
        "slots": [slot("Arg1.1", "AGENS", AGENS), slot("Arg2.1", "THEMA", THEMA + " (über)"),
                  slot("Arg2.2", "THEMA", THEMA + " (um)")],
        "patterns": [
            pattern("det+Diskussion+über+det.acc+N2", "determinante+Diskussion+über+determinante acusativo+actante N2",
                    [det(), head(), prep("über", "acc"), det(), fill("Arg2.1")]),
            pattern("det+Diskussion+um+det.acc+N2", "determinante+Diskussion+um+determinante acusativo+actante N2",
                    [det(), head(), prep("um", "acc"), det(), fill("Arg2.2")]),
            pattern("det+Diskussion+gen+N1", "determinante+Diskussion+determinante genitivo+actante N1",
                    [det(), head(), det(), fill("Arg1.1", "gen")]),
            pattern("det+Diskussion+gen+N1+über+det.acc+N2",
                    "determinante+Diskussion+determinante genitivo+actante N1+über+determinante acusativo+actante N2",
                    [det(), head(), det(), fill("Arg1.1", "gen"), prep("über", "acc"), det(), fill("Arg2.1")]),
        ]})
    tab8 = [("Thema", 5189), ("Zukunft", 2886), ("Frage", 2383), ("Sinn", 1893), ("Problem", 874),
            ("Rolle", 874), ("Möglichkeit", 838), ("Inhalt", 765), ("Umgang", 743), ("Einführung", 714)]
    t_d = table("diskussion_ueber", simple_rows("Diskussion über", tab8), pattern_count=114929,
                notes=["transcribed candidate counts; ranks assigned by count; pattern total transcribed"])
    a_d = ann("diskussion_ueber", all_required(tab8, "Arg2.1", "theme"))
    dag = [("Experte", 820), ("Politiker", 640), ("Teilnehmer", 590), ("Bürger", 410), ("Schüler", 260),
           ("Lehrer", 190), ("Dozent", 120)]
    t_da = table("diskussion_gen", simple_rows("Diskussion die", dag), notes=["synthetic"])
    a_da = ann("diskussion_gen", all_required(dag, "Arg1.1"))
    prof_frames.append({
        "lemma": "Diskussion", "head_adjectives": ["lang", "neu"], "filler_adjectives": ["jung"],
        "aliases": {}, "exclude": {},
        "evidence": [
            {"patterns": ["det+Diskussion+über+det.acc+N2", "det+Diskussion+gen+N1+über+det.acc+N2"],
             "slot": "Arg2.1", "table": t_d, "annotations": a_d},
            {"patterns": ["det+Diskussion+gen+N1", "det+Diskussion+gen+N1+über+det.acc+N2"],
             "slot": "Arg1.1", "table": t_da, "annotations": a_da},
        ]})

    # ANTWORT
    lex_frames.append({
        "lemma": "Antwort", "gender": "fem", "inflection_ref": "Antwort",
        "scene": "AUSDRUCK", "evidence": "attested",
        "slots": [slot("Arg1.1", "AGENS", AGENS), slot("Arg2.1", "THEMA", "dasjenige, worauf geantwortet wird")],
        "patterns": [
            pattern("det+adj+Antwort+gen+N1+auf+det.acc+N2",
                    "determinante+adjetivo+Antwort+determinante genitivo+actante N1+auf+determinante acusativo+actante N2",
                    [det(), adj(), head(), det(), fill("Arg1.1", "gen"), prep("auf", "acc"),
                     det("indefinite"), fill("Arg2.1")]),
            pattern("det+Antwort+gen+N1", "determinante+Antwort+determinante genitivo+actante N1",
                    [det(), head(), det(), fill("Arg1.1", "gen")]),
            pattern("det+Antwort+auf+det.acc+N2", "determinante+Antwort+auf+determinante acusativo+actante N2",
                    [det(), head(), prep("auf", "acc"), det("indefinite"), fill("Arg2.1")]),
        ]})
    n1 = [("Bundesregierung", 566), ("Landesregierung", 130), ("Senat", 81), ("Verwaltung", 64),
          ("Regierung", 37), ("Stadtverwaltung", 31), ("Kommission", 19)]
    n2 = [("Anfrage", 874), ("Frage", 35), ("Bitte", 27), ("Beschwerde", 21), ("Kritik", 18)]
    t_n1a = table("antwort_n1", simple_rows("Antwort die", n1),
                  notes=["marginals of the source biargumental top 10; Kommission synthetic"])
    a_n1a = ann("antwort_n1", all_required(n1, "Arg1.1"))
    t_n2a = table("antwort_n2", simple_rows("Antwort auf", n2),
                  notes=["marginals of the source biargumental top 10; rows 3-5 synthetic"])
    a_n2a = ann("antwort_n2", all_required(n2, "Arg2.1"))
    prof_frames.append({
        "lemma": "Antwort", "head_adjectives": ["schriftlich", "kurz", "ausführlich", "offiziell"],
        "filler_adjectives": [], "aliases": {}, "exclude": {},
        "evidence": [
            {"patterns": ["det+adj+Antwort+gen+N1+auf+det.acc+N2", "det+Antwort+gen+N1"], "slot": "Arg1.1",
             "table": t_n1a, "annotations": a_n1a,
             "packages": [pkg("belebt.menschlich.organisation.regierung", "Organisation regierungsgebunden")]},
            {"patterns": ["det+adj+Antwort+gen+N1+auf+det.acc+N2", "det+Antwort+auf+det.acc+N2"], "slot": "Arg2.1",
             "table": t_n2a, "annotations": a_n2a,
             "packages": [pkg("abstrakt.intellektuell.kommunikation", "intellektuelles Kommunikation")]},
        ]})

    # GERUCH
    lex_frames.append({
        "lemma": "Geruch", "gender": "masc", "inflection_ref": "Geruch",
        "scene": "KLASSIFIKATION", "evidence": "synthetic",
        "slots": [slot("Arg1.1", "TRÄGER", "dasjenige, das riecht"),
                  slot("Arg2.1", "QUELLE", "dasjenige, wonach es riecht")],
        "patterns": [
            pattern("det+adj+Geruch+nach+N2", "determinante+adjetivo+Geruch+nach+actante N2",
                    [det(), adj(), head(), prep("nach", "dat"), fill("Arg2.1")]),
            pattern("det+Geruch+gen+N1", "determinante+Geruch+determinante genitivo+actante N1",
                    [det(), head(), det(), fill("Arg1.1", "gen")]),
            pattern("det+Geruch+gen+N1+nach+N2", "determinante+Geruch+determinante genitivo+actante N1+nach+actante N2",
                    [det(), head(), det(), fill("Arg1.1", "gen"), prep("nach", "dat"), fill("Arg2.1")]),
        ]})
    gn = [("Blume", 820), ("Kaffee", 610), ("Rose", 450), ("Lavendel", 300), ("Wein", 260), ("Tee", 140)]
    gg = [("Zimmer", 300), ("Küche", 280), ("Haus", 240), ("Raum", 180), ("Keller", 120), ("Wand", 40)]
    t_gn = table("geruch_nach", simple_rows("Geruch nach", gn), notes=["synthetic"])
    a_gn = ann("geruch_nach", all_required(gn, "Arg2.1"))
    t_gg = table("geruch_gen", simple_rows("Geruch die", gg), notes=["synthetic"])
    a_gg = ann("geruch_gen", all_required(gg, "Arg1.1"))
    prof_frames.append({
        "lemma": "Geruch", "head_adjectives": ["unangenehm", "angenehm", "übel", "intensiv"],
        "filler_adjectives": ["frisch"], "aliases": {}, "exclude": {},
        "evidence": [
            {"patterns": ["det+adj+Geruch+nach+N2", "det+Geruch+gen+N1+nach+N2"], "slot": "Arg2.1",
             "table": t_gn, "annotations": a_gn,
             "packages": [pkg("unbelebt.natur.pflanze", None, "pl"), pkg("materiell.getränk", None, "sg")]},
            {"patterns": ["det+Geruch+gen+N1", "det+Geruch+gen+N1+nach+N2"], "slot": "Arg1.1",
             "table": t_gg, "annotations": a_gg},
        ]})

    # synthetic frames: genitive agent/bearer only
    synthetic = [
        ("Flucht", "fem", "BEWEGUNG", "AGENS", ["Flüchtling", "Familie", "Präsident", "Bevölkerung", "Tourist", "Mutter"]),
        ("Reise", "fem", "BEWEGUNG", "AGENS", ["Tourist", "Präsident", "Papst", "Schüler", "Teilnehmer", "Familie"]),
        ("Umzug", "masc", "BEWEGUNG", "AGENS", ["Familie", "Firma", "Konzern", "Verlag", "Mutter", "Vater"]),
        ("Anwesenheit", "fem", "LOKATION", "AGENS", ["Präsident", "Papst", "Lehrer", "Dozent", "Geschäftsführerin", "Erzieher"]),
        ("Abwesenheit", "fem", "LOKATION", "AGENS", ["Lehrer", "Präsident", "Schüler", "Dozent", "Teilnehmer", "Papst"]),
        ("Aufenthalt", "masc", "LOKATION", "AGENS", ["Tourist", "Flüchtling", "Präsident", "Papst", "Schüler", "Teilnehmer"]),
        ("Gespräch", "neut", "AUSDRUCK", "AGENS", ["Präsident", "Experte", "Politiker", "Papst", "Autor", "Künstler", "Geschäftsführerin"]),
        ("Frage", "fem", "AUSDRUCK", "AGENS", ["Schüler", "Teilnehmer", "Lehrer", "Dozent", "Bürger", "Tourist"]),
        ("Video", "neut", "AUSDRUCK", "AGENS", ["Band", "Künstler", "Sänger", "Gruppe", "Jury", "Autor"]),
        ("Tod", "masc", "AFFIZIERTHEIT", "PATIENS", ["Vater", "Mutter", "Papst", "Präsident", "Familie", "Patient"]),
        ("Zunahme", "fem", "AFFIZIERTHEIT", "PATIENS", ["Zahl", "Temperatur", "Menge", "Geschwindigkeit", "Bevölkerung"]),
        ("Liebe", "fem", "AFFIZIERTHEIT", "EXPERIENCER", ["Mutter", "Vater", "Kind", "Mensch", "Familie", "Cousine"]),
        ("Geschmack", "masc", "KLASSIFIKATION", "TRÄGER", ["Wein", "Kaffee", "Bier", "Tee", "Brot", "Suppe", "Käse"]),
        ("Breite", "fem", "KLASSIFIKATION", "TRÄGER", ["Straße", "Fluss", "Weg", "Brücke", "Tür"]),
    ]
    for lemma, gender, scene, role, fillers in synthetic:
        pid = f"det+{lemma}+gen+N1"
        lex_frames.append({
            "lemma": lemma, "gender": gender, "inflection_ref": lemma, "scene": scene, "evidence": "synthetic",
            "slots": [slot("Arg1.1", role, "synthetic slot")],
            "patterns": [pattern(pid, f"determinante+{lemma}+determinante genitivo+actante N1",
                                 [det(), head(), det(), fill("Arg1.1", "gen")]),
                         pattern(f"det+adj+{lemma}+gen+N1", f"determinante+adjetivo+{lemma}+determinante genitivo+actante N1",
                                 [det(), adj(), head(), det(), fill("Arg1.1", "gen")])]})
        rows = [(lex, 900 - 110 * i) for i, lex in enumerate(fillers)]
        name = "syn_" + lemma.lower().replace("ü", "ue").replace("ä", "ae").replace("ö", "oe")
        t = table(name, simple_rows(f"{lemma} die", rows), notes=["synthetic"])
        a = ann(name, all_required(rows, "Arg1.1"))
        prof_frames.append({"lemma": lemma, "head_adjectives": ["lang", "kurz", "neu", "groß"],
                            "filler_adjectives": ["alt", "jung"], "aliases": {}, "exclude": {},
                            "evidence": [{"patterns": [pid, f"det+adj+{lemma}+gen+N1"], "slot": "Arg1.1",
                                          "table": t, "annotations": a}]})

    order = ["Flucht", "Reise", "Umzug", "Anwesenheit", "Abwesenheit", "Aufenthalt", "Gespräch",
             "Diskussion", "Frage", "Antwort", "Text", "Video", "Tod", "Zunahme", "Schmerz", "Liebe",
             "Geruch", "Geschmack", "Farbe", "Breite"]
    lex_frames.sort(key=lambda f: order.index(f["lemma"]))
    prof_frames.sort(key=lambda f: order.index(f["lemma"]))
    return lex_frames, prof_frames, tables, anns
