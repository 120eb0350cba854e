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

"""Authoring helpers for Spanish and French form tables (gender x number)."""

_G = {"m": "masc", "f": "fem"}


def noun(lemma, gender, plural=None):
    pl = plural if plural is not None else lemma + "s"
    return {"id": lemma, "lemma": lemma, "pos": "noun", "gender": _G[gender],
            "forms": {"sg": lemma, "pl": pl}}


def adjective(lemma, fem=None, masc_pl=None, fem_pl=None):
    """Defaults: -o/-a alternation for Spanish-style lemmas, otherwise the
    feminine adds -e (French) unless the lemma already ends in -e."""
    if fem is None:
        if lemma.endswith("o"):
            fem = lemma[:-1] + "a"
        elif lemma.endswith("e"):
            fem = lemma
        else:
            fem = lemma + "e"
    if masc_pl is None:
        masc_pl = lemma if lemma.endswith(("s", "x")) else lemma + "s"
    if fem_pl is None:
        fem_pl = fem + "s"
    return {"id": lemma, "lemma": lemma, "pos": "adjective",
            "forms": {"masc.sg": lemma, "fem.sg": fem, "masc.pl": masc_pl, "fem.pl": fem_pl}}
