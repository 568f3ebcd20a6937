"""Text and JSON forms for group elements and algebra elements.

Element text form: `pi^k * [i_1,...,i_m]` (the Pi exponent is omitted when
trivial).  Element JSON carries the word form plus the redundant normal
form {lambda, u} which is validated on ingest.  Hecke elements serialize
as arrays sorted by (length, word, Pi index) so output is byte-stable.
"""

from __future__ import annotations

import json
import re

from .hecke import HeckeElt
from .weyl import GroupElement, Weyl


def element_text(weyl: Weyl, w: GroupElement) -> str:
    pi, word = weyl.reduced_word(w)
    body = "[" + ",".join(str(i) for i in word) + "]"
    return f"pi^{pi}*{body}" if pi else body


def element_json(weyl: Weyl, w: GroupElement) -> dict:
    pi, word = weyl.reduced_word(w)
    _, fin_word = weyl.reduced_word(weyl.finite_element(w.finite))
    return {
        "pi": pi,
        "word": list(word),
        "lambda": list(w.translation),
        "u": list(fin_word),
    }


_WORD_RE = re.compile(r"^(?:pi\^(-?\d+)\s*\*\s*)?\[([\d\s,]*)\]$")


def parse_element(weyl: Weyl, text: str) -> GroupElement:
    """Accepts `[1,2,1]`, `pi^k*[...]` or the JSON normal form."""
    text = text.strip()
    if text.startswith("{"):
        return element_from_json(weyl, json.loads(text))
    m = _WORD_RE.match(text)
    if not m:
        raise ValueError(f"cannot parse element {text!r}")
    pi = int(m.group(1) or 0) % len(weyl.pi_elements)
    body = m.group(2).strip()
    word = [int(t) for t in body.split(",")] if body else []
    for i in word:
        if not 0 <= i < weyl.ws.num_gens:
            raise ValueError(f"generator index {i} out of range")
    return weyl.from_word(pi, word)


def element_from_json(weyl: Weyl, obj: dict) -> GroupElement:
    if "word" in obj or "pi" in obj:
        w = weyl.from_word(int(obj.get("pi", 0)), obj.get("word", []))
        if "lambda" in obj:
            lam = tuple(int(x) for x in obj["lambda"])
            if lam != w.translation:
                raise ValueError("normal form does not match the word form")
        return w
    if "lambda" in obj and "u" in obj:
        lam = tuple(int(x) for x in obj["lambda"])
        u = weyl.identity
        for i in obj["u"]:
            u = u * weyl.gens[int(i)]
        if any(u.translation):
            raise ValueError("u is not a finite-part word")
        return weyl.element(u.finite, weyl.ws.check_lattice(lam))
    raise ValueError(f"cannot interpret element object {obj!r}")


def hecke_json(weyl: Weyl, h: HeckeElt) -> list:
    items = sorted(h.items(), key=lambda wc: weyl.sort_key(wc[0]))
    return [
        {"element": element_json(weyl, w), "coeff": c.to_json()} for w, c in items
    ]


def hecke_text(weyl: Weyl, h: HeckeElt) -> str:
    items = sorted(h.items(), key=lambda wc: weyl.sort_key(wc[0]))
    if not items:
        return "0"
    return "\n".join(
        f"({c})  T_{element_text(weyl, w)}" for w, c in items
    )


def weight_text(lam) -> str:
    return "(" + ",".join(str(x) for x in lam) + ")"


def parse_weight(text: str):
    text = text.strip().strip("()[]")
    return tuple(int(t) for t in text.split(",")) if text else ()
