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

"""Pattern slot constructors shared by the per-language frame modules."""


def det(definiteness="definite"):
    return {"kind": "determiner", "definiteness": definiteness}


def adj():
    return {"kind": "adjective", "optional": True}


def head():
    return {"kind": "head"}


def fill(arg, case=None, pos="noun"):
    s = {"kind": "argument_filler", "binds": arg, "pos": pos}
    if case:
        s["case"] = case
    return s


def prep(text, case=None):
    s = {"kind": "preposition", "text": text}
    if case:
        s["case"] = case
    return s


def comp(arg):
    return {"kind": "compound_modifier", "binds": arg}


def pattern(pid, label, slots):
    arity = sum(1 for s in slots if s["kind"] in ("argument_filler", "compound_modifier"))
    return {"id": pid, "label": label, "arity": "mono" if arity == 1 else "bi", "slots": slots}


def slot(arg, role, gloss):
    return {"arg": arg, "role": role, "gloss": gloss}
