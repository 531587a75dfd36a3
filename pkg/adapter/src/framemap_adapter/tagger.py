"""Lexicon-driven frame tagger: a deterministic stand-in for a neural frame parser.

Builds a surface-form table from an FIV1 inventory's verb lexical units
(inflecting each lemma with compact rules plus a small irregular list), then
emits one FTC1 record per token that matches a known verb form.  The morph
tag falls straight out of which inflection matched; when past and past
participle share a surface (regular verbs), the earlier tag in the canonical
order wins, mirroring a POS tagger's most-common-tag guess.

This is intentionally not a disambiguating parser: precision comes from the
inventory, not from context.  It exists so corpora can be frame-tagged
offline; swap in real parser output where available.
"""

from __future__ import annotations

PARSER_NAME = "framemap-adapter-lexicon"
PARSER_VERSION = "0.1.0"

MORPH_ORDER = ["base", "3rd-person-singular", "past", "past-participle", "gerund"]

VOWELS = "aeiou"

IRREGULAR = {
    "be": ("was", "been", "is", "being"),
    "bear": ("bore", "borne", None, None),
    "begin": ("began", "begun", None, "beginning"),
    "break": ("broke", "broken", None, None),
    "bring": ("brought", "brought", None, None),
    "come": ("came", "come", None, None),
    "die": (None, None, None, "dying"),
    "do": ("did", "done", "does", None),
    "drive": ("drove", "driven", None, None),
    "eat": ("ate", "eaten", None, None),
    "fall": ("fell", "fallen", None, None),
    "fight": ("fought", "fought", None, None),
    "fly": ("flew", "flown", None, None),
    "give": ("gave", "given", None, None),
    "go": ("went", "gone", "goes", None),
    "grow": ("grew", "grown", None, None),
    "have": ("had", "had", "has", None),
    "hold": ("held", "held", None, None),
    "know": ("knew", "known", None, None),
    "lie": ("lay", "lain", None, "lying"),
    "make": ("made", "made", None, None),
    "pass": (None, None, "passes", None),
    "run": ("ran", "run", None, "running"),
    "say": ("said", "said", None, None),
    "see": ("saw", "seen", None, "seeing"),
    "sing": ("sang", "sung", None, None),
    "sit": ("sat", "sat", None, "sitting"),
    "slay": ("slew", "slain", None, None),
    "speak": ("spoke", "spoken", None, None),
    "stand": ("stood", "stood", None, None),
    "take": ("took", "taken", None, None),
    "tell": ("told", "told", None, None),
    "think": ("thought", "thought", None, None),
    "throw": ("threw", "thrown", None, None),
    "write": ("wrote", "written", None, None),
}


def _doubles(word: str) -> bool:
    if len(word) < 3:
        return False
    a, b, c = word[-3], word[-2], word[-1]
    groups, prev = 0, False
    for ch in word:
        now = ch in VOWELS
        if now and not prev:
            groups += 1
        prev = now
    return c not in VOWELS and c not in "wxy" and b in VOWELS and a not in VOWELS and groups == 1


def _regular_past(lemma: str) -> str:
    if lemma.endswith("e"):
        return lemma + "d"
    if lemma.endswith("y") and len(lemma) > 1 and lemma[-2] not in VOWELS:
        return lemma[:-1] + "ied"
    if _doubles(lemma):
        return lemma + lemma[-1] + "ed"
    return lemma + "ed"


def _regular_3sg(lemma: str) -> str:
    if lemma.endswith(("s", "x", "z", "ch", "sh", "o")):
        return lemma + "es"
    if lemma.endswith("y") and len(lemma) > 1 and lemma[-2] not in VOWELS:
        return lemma[:-1] + "ies"
    return lemma + "s"


def _regular_gerund(lemma: str) -> str:
    if lemma.endswith("ie"):
        return lemma[:-2] + "ying"
    if lemma.endswith("e") and not lemma.endswith(("ee", "oe", "ye")):
        return lemma[:-1] + "ing"
    if _doubles(lemma):
        return lemma + lemma[-1] + "ing"
    return lemma + "ing"


def verb_forms(lemma: str) -> dict[str, str]:
    """Surface forms of a lemma keyed by morph tag."""
    past, participle, third, gerund = IRREGULAR.get(lemma, (None, None, None, None))
    return {
        "base": lemma,
        "3rd-person-singular": third or _regular_3sg(lemma),
        "past": past or _regular_past(lemma),
        "past-participle": participle or past or _regular_past(lemma),
        "gerund": gerund or _regular_gerund(lemma),
    }


def read_fiv_verb_lexicon(lines) -> dict[str, list[str]]:
    """Frame -> sorted verb lemmas, from FIV1 text."""
    frames: dict[str, set[str]] = {}
    current = None
    for raw in lines:
        line = raw.rstrip("\n")
        if not line.strip() or line.startswith("#"):
            continue
        fields = line.split("\t")
        if fields[0] == "F" and len(fields) == 2:
            current = " ".join(fields[1].strip().lower().split()).replace(" ", "_")
            frames.setdefault(current, set())
        elif fields[0] == "L" and len(fields) == 3 and current is not None:
            if fields[2].strip().lower() == "v":
                frames[current].add(fields[1].strip().lower())
    return {f: sorted(ls) for f, ls in frames.items()}


class LexiconTagger:
    def __init__(self, inventory_lines):
        lexicon = read_fiv_verb_lexicon(inventory_lines)
        # surface -> (frame, lemma, morph); first writer wins, iteration
        # order is (frame, lemma, canonical morph order) for determinism
        self.table: dict[str, tuple[str, str, str]] = {}
        for frame in sorted(lexicon):
            for lemma in lexicon[frame]:
                forms = verb_forms(lemma)
                for morph in MORPH_ORDER:
                    self.table.setdefault(forms[morph], (frame, lemma, morph))

    def tag(self, sentence: str) -> list[str]:
        """FTC1 record lines for every known verb form in the sentence."""
        tokens = sentence.split()
        records = []
        for i, token in enumerate(tokens):
            hit = self.table.get(token.lower().strip(".,!?;:"))
            if hit is None:
                hit = self.table.get(token.lower())
            if hit is not None:
                frame, lemma, morph = hit
                records.append(
                    "\t".join([" ".join(tokens), str(i), frame, lemma, morph])
                )
        return records
