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

"""Spanish and French bundles. All frames here are synthetic."""

from morph_romance import noun as N, adjective as A
from patterns import det, adj, head, fill, prep, pattern, slot

CORPUS = 1000000000

# class key -> {lang: (path, [(lemma, gender, plural)])}
CLASSES = {
    "profession": {
        "es": (["animado", "humano", "profesión"],
               [("escritor", "m", "escritores"), ("periodista", "m", None), ("autor", "m", "autores"),
                ("artista", "m", None), ("arquitecto", "m", None)]),
        "fr": (["animé", "humain", "profession"],
               [("écrivain", "m", None), ("journaliste", "m", None), ("auteur", "m", None),
                ("artiste", "m", None), ("architecte", "m", None)]),
    },
    "education": {
        "es": (["animado", "humano", "profesión", "educación"],
               [("profesor", "m", "profesores"), ("profesora", "f", None), ("académico", "m", None),
                ("académica", "f", None), ("maestro", "m", None)]),
        "fr": (["animé", "humain", "profession", "éducation"],
               [("professeur", "m", None), ("enseignant", "m", None), ("enseignante", "f", None),
                ("instituteur", "m", None), ("institutrice", "f", None)]),
    },
    "government": {
        "es": (["animado", "humano", "organización", "gubernamental"],
               [("gobierno", "m", None), ("ayuntamiento", "m", None), ("ministerio", "m", None),
                ("senado", "m", None)]),
        "fr": (["animé", "humain", "organisation", "gouvernementale"],
               [("gouvernement", "m", None), ("mairie", "f", None), ("ministère", "m", None),
                ("sénat", "m", None)]),
    },
    "company": {
        "es": (["animado", "humano", "organización", "empresarial"],
               [("empresa", "f", None), ("editorial", "f", "editoriales"), ("banco", "m", None)]),
        "fr": (["animé", "humain", "organisation", "entreprise"],
               [("entreprise", "f", None), ("éditeur", "m", None), ("banque", "f", None)]),
    },
    "family": {
        "es": (["animado", "humano", "familia"],
               [("madre", "f", None), ("padre", "m", None), ("familia", "f", None),
                ("hermano", "m", None), ("abuela", "f", None)]),
        "fr": (["animé", "humain", "famille"],
               [("mère", "f", None), ("père", "m", None), ("famille", "f", None),
                ("frère", "m", None), ("grand-mère", "f", "grands-mères")]),
    },
    "office": {
        "es": (["animado", "humano", "cargo"],
               [("presidente", "m", None), ("ministro", "m", None), ("alcalde", "m", None),
                ("director", "m", "directores")]),
        "fr": (["animé", "humain", "fonction"],
               [("président", "m", None), ("ministre", "m", None), ("maire", "m", None),
                ("directeur", "m", None)]),
    },
    "property": {
        "es": (["animado", "humano", "propiedad"],
               [("turista", "m", None), ("viajero", "m", None), ("niño", "m", None),
                ("refugiado", "m", None), ("estudiante", "m", None)]),
        "fr": (["animé", "humain", "propriété"],
               [("touriste", "m", None), ("voyageur", "m", None), ("enfant", "m", None),
                ("réfugié", "m", None), ("homme", "m", None)]),
    },
    "name": {
        "es": (["animado", "humano", "nombre-propio"], [("Susana", "f", "Susanas"), ("Patricia", "f", "Patricias")]),
        "fr": (["animé", "humain", "nom-propre"], [("Paulette", "f", "Paulettes"), ("Annick", "f", "Annicks")]),
    },
    "body_ext": {
        "es": (["animado", "humano", "parte-del-cuerpo", "externa"],
               [("cabeza", "f", None), ("espalda", "f", None), ("ojo", "m", None),
                ("pelo", "m", None), ("mano", "f", None)]),
        "fr": (["animé", "humain", "partie-du-corps", "externe"],
               [("tête", "f", None), ("dos", "m", "dos"), ("œil", "m", "yeux"),
                ("main", "f", None), ("jambe", "f", None)]),
    },
    "body_skin": {
        "es": (["animado", "humano", "parte-del-cuerpo", "revestimiento"], [("piel", "f", "pieles")]),
        "fr": (["animé", "humain", "partie-du-corps", "revêtement"], [("peau", "f", "peaux")]),
    },
    "body_organ": {
        "es": (["animado", "humano", "parte-del-cuerpo", "órgano"],
               [("estómago", "m", None), ("corazón", "m", "corazones"), ("muela", "f", None)]),
        "fr": (["animé", "humain", "partie-du-corps", "organe"],
               [("estomac", "m", None), ("cœur", "m", None), ("ventre", "m", None)]),
    },
    "nature": {
        "es": (["inanimado", "naturaleza"],
               [("flor", "f", "flores"), ("río", "m", None), ("cielo", "m", None),
                ("mar", "m", "mares"), ("árbol", "m", "árboles")]),
        "fr": (["inanimé", "nature"],
               [("fleur", "f", None), ("rivière", "f", None), ("ciel", "m", "cieux"),
                ("mer", "f", None), ("arbre", "m", None)]),
    },
    "drink": {
        "es": (["material", "bebida"],
               [("vino", "m", None), ("café", "m", None), ("té", "m", "tés"),
                ("cerveza", "f", None), ("zumo", "m", None)]),
        "fr": (["matériel", "boisson"],
               [("vin", "m", None), ("café", "m", None), ("thé", "m", None),
                ("bière", "f", None), ("jus", "m", "jus")]),
    },
    "food": {
        "es": (["material", "comida"], [("pan", "m", "panes"), ("sopa", "f", None), ("queso", "m", None)]),
        "fr": (["matériel", "nourriture"], [("pain", "m", None), ("soupe", "f", None), ("fromage", "m", None)]),
    },
    "place": {
        "es": (["material", "lugar"],
               [("calle", "f", None), ("habitación", "f", "habitaciones"), ("ciudad", "f", "ciudades"),
                ("casa", "f", None), ("cocina", "f", None)]),
        "fr": (["matériel", "lieu"],
               [("rue", "f", None), ("chambre", "f", None), ("ville", "f", None),
                ("maison", "f", None), ("cuisine", "f", None)]),
    },
    "topic": {
        "es": (["abstracto", "intelectual", "tema"],
               [("tema", "m", None), ("futuro", "m", None), ("ley", "f", "leyes"),
                ("problema", "m", None), ("pregunta", "f", None)]),
        "fr": (["abstrait", "intellectuel", "sujet"],
               [("sujet", "m", None), ("avenir", "m", None), ("loi", "f", None),
                ("problème", "m", None), ("question", "f", None)]),
    },
    "communication": {
        "es": (["abstracto", "comunicación"],
               [("solicitud", "f", "solicitudes"), ("carta", "f", None), ("petición", "f", "peticiones"),
                ("queja", "f", None)]),
        "fr": (["abstrait", "communication"],
               [("demande", "f", None), ("lettre", "f", None), ("pétition", "f", None),
                ("plainte", "f", None)]),
    },
    "magnitude": {
        "es": (["abstracto", "magnitud"],
               [("población", "f", "poblaciones"), ("temperatura", "f", None), ("número", "m", None),
                ("precio", "m", None)]),
        "fr": (["abstrait", "grandeur"],
               [("population", "f", None), ("température", "f", None), ("nombre", "m", None),
                ("prix", "m", "prix")]),
    },
}

# concept -> (es lemma, gender, plural, fr lemma, gender, plural, scene, role, classes, number)
FRAMES = [
    ("Flucht", "huida", "f", None, "fuite", "f", None, "BEWEGUNG", "AGENS", ["property", "family"], "sg"),
    ("Reise", "viaje", "m", None, "voyage", "m", None, "BEWEGUNG", "AGENS", ["property", "office"], "sg"),
    ("Umzug", "mudanza", "f", None, "déménagement", "m", None, "BEWEGUNG", "AGENS", ["family", "company"], "sg"),
    ("Anwesenheit", "presencia", "f", None, "présence", "f", None, "LOKATION", "AGENS", ["office", "profession"], "sg"),
    ("Abwesenheit", "ausencia", "f", None, "absence", "f", None, "LOKATION", "AGENS", ["office", "education"], "sg"),
    ("Aufenthalt", "estancia", "f", None, "séjour", "m", None, "LOKATION", "AGENS", ["property", "office"], "sg"),
    ("Gespräch", "conversación", "f", "conversaciones", "conversation", "f", None, "AUSDRUCK", "AGENS",
     ["office", "profession"], "both"),
    ("Diskussion", "discusión", "f", "discusiones", "discussion", "f", None, "AUSDRUCK", "AGENS",
     ["office", "profession"], "both"),
    ("Frage", "pregunta", "f", None, "question", "f", None, "AUSDRUCK", "AGENS", ["education", "property"], "both"),
    ("Antwort", "respuesta", "f", None, "réponse", "f", None, "AUSDRUCK", "AGENS", ["government"], "sg"),
    ("Text", "texto", "m", None, "texte", "m", None, "AUSDRUCK", "AGENS",
     ["profession", "education", "government", "family", "name"], "both"),
    ("Video", "video", "m", None, "vidéo", "f", None, "AUSDRUCK", "AGENS", ["profession", "property"], "sg"),
    ("Tod", "muerte", "f", None, "mort", "f", None, "AFFIZIERTHEIT", "PATIENS", ["family", "office"], "sg"),
    ("Zunahme", "aumento", "m", None, "augmentation", "f", None, "AFFIZIERTHEIT", "PATIENS", ["magnitude"], "sg"),
    ("Schmerz", "dolor", "m", "dolores", "douleur", "f", None, "AFFIZIERTHEIT", "LOKALISATION",
     ["body_ext", "body_organ"], "sg"),
    ("Liebe", "amor", "m", "amores", "amour", "m", None, "AFFIZIERTHEIT", "EXPERIENCER", ["family", "property"], "sg"),
    ("Geruch", "olor", "m", "olores", "odeur", "f", None, "KLASSIFIKATION", "TRÄGER",
     ["nature", "drink", "place"], "both"),
    ("Geschmack", "sabor", "m", "sabores", "saveur", "f", None, "KLASSIFIKATION", "TRÄGER", ["drink", "food"], "sg"),
    ("Farbe", "color", "m", "colores", "couleur", "f", None, "KLASSIFIKATION", "TRÄGER",
     ["body_ext", "body_skin", "nature"], "both"),
    ("Breite", "anchura", "f", None, "largeur", "f", None, "KLASSIFIKATION", "TRÄGER", ["place"], "sg"),
]

ADJ = {
    "es": [A("largo"), A("corto"), A("breve", "breve", "breves", "breves"), A("famoso"), A("conocido"),
           A("nuevo"), A("intenso"), A("agradable", "agradable", "agradables", "agradables"),
           A("desagradable", "desagradable", "desagradables", "desagradables"),
           A("fuerte", "fuerte", "fuertes", "fuertes"), A("oficial", "oficial", "oficiales", "oficiales"),
           A("español", "española", "españoles", "españolas"), A("alemán", "alemana", "alemanes", "alemanas"),
           A("antiguo")],
    "fr": [A("long", "longue"), A("court"), A("bref", "brève", "brefs", "brèves"), A("célèbre"),
           A("connu"), A("nouveau", "nouvelle", "nouveaux", "nouvelles"), A("intense"), A("agréable"),
           A("désagréable"), A("fort"), A("officiel", "officielle"), A("français", "française"),
           A("allemand"), A("ancien", "ancienne")],
}
HEAD_ADJ = {"es": ["largo", "corto", "breve", "famoso", "nuevo", "oficial"],
            "fr": ["long", "court", "bref", "célèbre", "nouveau", "officiel"]}
SENSE_ADJ = {"es": ["intenso", "agradable", "desagradable", "fuerte"],
             "fr": ["intense", "agréable", "désagréable", "fort"]}

PREP = {"es": {"de": "de", "about": "sobre", "to": "a"}, "fr": {"de": "de", "about": "sur", "to": "à"}}


def _cls(key, lang):
    return ".".join(CLASSES[key][lang][0])


def build(lang):
    idx = 1 if lang == "es" else 4
    entries, seen = [], set()
    for key, per in CLASSES.items():
        for lemma, g, pl in per[lang][1]:
            if lemma not in seen:
                seen.add(lemma)
                entries.append(N(lemma, g, pl))
    for fr in FRAMES:
        lemma, g, pl = fr[idx], fr[idx + 1], fr[idx + 2]
        if lemma not in seen:
            seen.add(lemma)
            entries.append(N(lemma, g, pl))
    entries.extend(ADJ[lang])

    nodes = {}
    for key, per in CLASSES.items():
        path, members = per[lang]
        for d in range(1, len(path)):
            nodes.setdefault(tuple(path[:d]), [])
        nodes.setdefault(tuple(path), [])
        nodes[tuple(path)].extend(m[0] for m in members)
    ontology = [{"path": list(p), "members": m} for p, m in sorted(nodes.items())]

    P = PREP[lang]
    lex_frames, prof_frames, tables, anns = [], [], {}, {}
    for fr in FRAMES:
        concept, lemma, g, scene, role, classes, number = fr[0], fr[idx], fr[idx + 1], fr[7], fr[8], fr[9], fr[10]
        gender = {"m": "masc", "f": "fem"}[g]
        no_det = concept == "Schmerz"
        filler_part = [prep(P["de"]), fill("Arg1.1")] if no_det else [prep(P["de"]), det(), fill("Arg1.1")]
        base = f"det+{lemma}+de+N1" if no_det else f"det+{lemma}+de+det+N1"
        slots = [slot("Arg1.1", role, "synthetic slot")]
        patterns = [
            pattern(base, f"determinante+{lemma}+{P['de']}+{'' if no_det else 'determinante+'}actante N1",
                    [det(), head()] + filler_part),
            pattern(f"det+{lemma}+adj+de+N1", f"determinante+{lemma}+adjetivo+{P['de']}+actante N1",
                    [det(), head(), adj()] + filler_part),
        ]
        evidence_defs = [("n1", [p["id"] for p in patterns], "Arg1.1", classes, number)]
        if concept in ("Text", "Diskussion"):
            arg = "Arg3.1" if concept == "Text" else "Arg2.1"
            slots.append(slot(arg, "THEMA", "synthetic slot"))
            mono = pattern(f"det+{lemma}+{P['about']}+det+N2", f"determinante+{lemma}+{P['about']}+determinante+actante N2",
                           [det(), head(), prep(P["about"]), det(), fill(arg)])
            bi = pattern(f"det+{lemma}+de+det+N1+{P['about']}+det+N2",
                         f"determinante+{lemma}+{P['de']}+determinante+actante N1+{P['about']}+determinante+actante N2",
                         [det(), head(), prep(P["de"]), det(), fill("Arg1.1"), prep(P["about"]), det(), fill(arg)])
            patterns += [mono, bi]
            evidence_defs[0][1].append(bi["id"])
            evidence_defs.append(("n2", [mono["id"], bi["id"]], arg, ["topic"], "sg"))
        if concept == "Antwort":
            slots.append(slot("Arg2.1", "THEMA", "synthetic slot"))
            mono = pattern(f"det+{lemma}+{P['to']}+det+N2", f"determinante+{lemma}+{P['to']}+determinante+actante N2",
                           [det(), head(), prep(P["to"]), det("indefinite"), fill("Arg2.1")])
            bi = pattern(f"det+{lemma}+de+det+N1+{P['to']}+det+N2",
                         f"determinante+{lemma}+{P['de']}+determinante+actante N1+{P['to']}+determinante+actante N2",
                         [det(), head(), prep(P["de"]), det(), fill("Arg1.1"), prep(P["to"]), det("indefinite"),
                          fill("Arg2.1")])
            patterns += [mono, bi]
            evidence_defs[0][1].append(bi["id"])
            evidence_defs.append(("n2", [mono["id"], bi["id"]], "Arg2.1", ["communication"], "sg"))

        lex_frames.append({"lemma": lemma, "gender": gender, "inflection_ref": lemma, "scene": scene,
                           "evidence": "synthetic", "slots": slots, "patterns": patterns})
        evidence = []
        for tag, pids, arg, cls_keys, num in evidence_defs:
            members = [m[0] for k in cls_keys for m in CLASSES[k][lang][1]]
            pairs = [(m, int(600 * 0.88 ** i) + 3) for i, m in enumerate(members)]
            name = f"{concept.lower().replace('ä', 'ae').replace('ü', 'ue')}_{tag}"
            tables[name] = {"rows": [(i + 1, f"{lemma} {P['de']} {m}", c, "", None) for i, (m, c) in enumerate(pairs)],
                            "lexeme_token": "last", "corpus": CORPUS, "pattern_count": None,
                            "notes": ["synthetic"]}
            anns[name] = [{"filler": m, "verdict": "valency_required", "slot": arg, "note": "synthetic"}
                          for m, _ in pairs]
            evidence.append({"patterns": pids, "slot": arg, "table": f"freq/{lang}/{name}.tsv",
                             "annotations": f"annotations/{lang}/{name}.json", "number": num})
        head_adj = SENSE_ADJ[lang] if scene == "KLASSIFIKATION" or concept == "Schmerz" else HEAD_ADJ[lang]
        prof_frames.append({"lemma": lemma, "head_adjectives": head_adj, "filler_adjectives": [],
                            "aliases": {}, "exclude": {}, "evidence": evidence})
    return entries, ontology, lex_frames, prof_frames, tables, anns
