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

"""Authoring helpers for German form tables.

The runtime never derives forms; these helpers only expand compact
hand-written descriptions into the explicit tables stored in the lexicon.
"""

CASES = ("nom", "gen", "dat", "acc")
NUMBERS = ("sg", "pl")
GENDERS = ("masc", "fem", "neut")
DECLENSIONS = ("weak", "strong", "mixed")

_G = {"m": "masc", "f": "fem", "n": "neut"}


def noun(lemma, gender, gen_sg=None, plural=None, weak=False, link=None,
         overrides=None, plural_less=False):
    """gen_sg defaults to the lemma (feminine nouns); weak masculines reuse
    gen_sg for dat/acc singular."""
    g = _G[gender]
    gen = gen_sg if gen_sg is not None else lemma
    pl = plural if plural is not None else lemma
    forms = {
        "nom.sg": lemma,
        "gen.sg": gen,
        "dat.sg": gen if weak else lemma,
        "acc.sg": gen if weak else lemma,
        "nom.pl": pl,
        "gen.pl": pl,
        "acc.pl": pl,
        "dat.pl": pl if pl.endswith(("n", "s")) or plural_less else pl + "n",
    }
    if overrides:
        forms.update(overrides)
    entry = {"id": lemma, "lemma": lemma, "pos": "noun", "gender": g, "forms": forms}
    if link is not None:
        entry["compound_link"] = link
    return entry


_STRONG = {
    ("masc", "nom"): "er", ("fem", "nom"): "e", ("neut", "nom"): "es",
    ("masc", "acc"): "en", ("fem", "acc"): "e", ("neut", "acc"): "es",
    ("masc", "dat"): "em", ("fem", "dat"): "er", ("neut", "dat"): "em",
    ("masc", "gen"): "en", ("fem", "gen"): "er", ("neut", "gen"): "en",
}
_STRONG_PL = {"nom": "e", "acc": "e", "dat": "en", "gen": "er"}

_WEAK = {
    ("masc", "nom"): "e", ("fem", "nom"): "e", ("neut", "nom"): "e",
    ("masc", "acc"): "en", ("fem", "acc"): "e", ("neut", "acc"): "e",
}

_MIXED = {
    ("masc", "nom"): "er", ("fem", "nom"): "e", ("neut", "nom"): "es",
    ("masc", "acc"): "en", ("fem", "acc"): "e", ("neut", "acc"): "es",
}


def _ending(decl, gender, case, number):
    if decl == "strong":
        return _STRONG_PL[case] if number == "pl" else _STRONG[(gender, case)]
    if number == "pl":
        return "en"
    table = _WEAK if decl == "weak" else _MIXED
    return table.get((gender, case), "en")


def adjective(lemma, stem=None):
    stem = stem or lemma
    forms = {}
    for d in DECLENSIONS:
        for g in GENDERS:
            for c in CASES:
                for n in NUMBERS:
                    forms[f"{d}.{g}.{c}.{n}"] = stem + _ending(d, g, c, n)
    return {"id": lemma, "lemma": lemma, "pos": "adjective", "forms": forms}
