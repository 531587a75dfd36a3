"""Deterministic English verb inflection: suffix rules plus an irregular lexicon.

Rules cover the regular morphology (e-drop, consonant doubling, y->ies/ied,
sibilant +es); the bundled lexicon overrides past and past-participle forms
for common irregular verbs, plus the handful of verbs whose 3rd-person or
gerund forms are not rule-derivable (be, have).

Doubling uses the monosyllable heuristic (single vowel group, CVC ending, no
w/x/y), so stress-dependent cases like "refer" come out wrong unless listed
in the lexicon.  Good enough for a generation pipeline; not a full morphology.
"""

from __future__ import annotations

VOWELS = "aeiou"

# lemma: (past, past-participle)
IRREGULAR = {
    "arise": ("arose", "arisen"),
    "awake": ("awoke", "awoken"),
    "be": ("was", "been"),
    "bear": ("bore", "borne"),
    "beat": ("beat", "beaten"),
    "become": ("became", "become"),
    "begin": ("began", "begun"),
    "bend": ("bent", "bent"),
    "bet": ("bet", "bet"),
    "bind": ("bound", "bound"),
    "bite": ("bit", "bitten"),
    "bleed": ("bled", "bled"),
    "blow": ("blew", "blown"),
    "break": ("broke", "broken"),
    "breed": ("bred", "bred"),
    "bring": ("brought", "brought"),
    "build": ("built", "built"),
    "burst": ("burst", "burst"),
    "buy": ("bought", "bought"),
    "cast": ("cast", "cast"),
    "catch": ("caught", "caught"),
    "choose": ("chose", "chosen"),
    "cling": ("clung", "clung"),
    "come": ("came", "come"),
    "cost": ("cost", "cost"),
    "creep": ("crept", "crept"),
    "cut": ("cut", "cut"),
    "deal": ("dealt", "dealt"),
    "dig": ("dug", "dug"),
    "do": ("did", "done"),
    "draw": ("drew", "drawn"),
    "drink": ("drank", "drunk"),
    "drive": ("drove", "driven"),
    "eat": ("ate", "eaten"),
    "fall": ("fell", "fallen"),
    "feed": ("fed", "fed"),
    "feel": ("felt", "felt"),
    "fight": ("fought", "fought"),
    "find": ("found", "found"),
    "flee": ("fled", "fled"),
    "fling": ("flung", "flung"),
    "fly": ("flew", "flown"),
    "forbid": ("forbade", "forbidden"),
    "forget": ("forgot", "forgotten"),
    "forgive": ("forgave", "forgiven"),
    "freeze": ("froze", "frozen"),
    "get": ("got", "gotten"),
    "give": ("gave", "given"),
    "go": ("went", "gone"),
    "grind": ("ground", "ground"),
    "grow": ("grew", "grown"),
    "hang": ("hung", "hung"),
    "have": ("had", "had"),
    "hear": ("heard", "heard"),
    "hide": ("hid", "hidden"),
    "hit": ("hit", "hit"),
    "hold": ("held", "held"),
    "hurt": ("hurt", "hurt"),
    "keep": ("kept", "kept"),
    "kneel": ("knelt", "knelt"),
    "know": ("knew", "known"),
    "lay": ("laid", "laid"),
    "lead": ("led", "led"),
    "leap": ("leapt", "leapt"),
    "leave": ("left", "left"),
    "lend": ("lent", "lent"),
    "let": ("let", "let"),
    "lie": ("lay", "lain"),
    "light": ("lit", "lit"),
    "lose": ("lost", "lost"),
    "make": ("made", "made"),
    "mean": ("meant", "meant"),
    "meet": ("met", "met"),
    "pay": ("paid", "paid"),
    "prove": ("proved", "proven"),
    "put": ("put", "put"),
    "quit": ("quit", "quit"),
    "read": ("read", "read"),
    "refer": ("referred", "referred"),
    "ride": ("rode", "ridden"),
    "ring": ("rang", "rung"),
    "rise": ("rose", "risen"),
    "run": ("ran", "run"),
    "say": ("said", "said"),
    "see": ("saw", "seen"),
    "seek": ("sought", "sought"),
    "sell": ("sold", "sold"),
    "send": ("sent", "sent"),
    "set": ("set", "set"),
    "sew": ("sewed", "sewn"),
    "shake": ("shook", "shaken"),
    "shed": ("shed", "shed"),
    "shine": ("shone", "shone"),
    "shoot": ("shot", "shot"),
    "show": ("showed", "shown"),
    "shrink": ("shrank", "shrunk"),
    "shut": ("shut", "shut"),
    "sing": ("sang", "sung"),
    "sink": ("sank", "sunk"),
    "sit": ("sat", "sat"),
    "slay": ("slew", "slain"),
    "sleep": ("slept", "slept"),
    "slide": ("slid", "slid"),
    "sling": ("slung", "slung"),
    "smite": ("smote", "smitten"),
    "sow": ("sowed", "sown"),
    "speak": ("spoke", "spoken"),
    "speed": ("sped", "sped"),
    "spend": ("spent", "spent"),
    "spin": ("spun", "spun"),
    "spit": ("spat", "spat"),
    "split": ("split", "split"),
    "spread": ("spread", "spread"),
    "spring": ("sprang", "sprung"),
    "stand": ("stood", "stood"),
    "steal": ("stole", "stolen"),
    "stick": ("stuck", "stuck"),
    "sting": ("stung", "stung"),
    "stink": ("stank", "stunk"),
    "stride": ("strode", "stridden"),
    "strike": ("struck", "struck"),
    "string": ("strung", "strung"),
    "strive": ("strove", "striven"),
    "swear": ("swore", "sworn"),
    "sweep": ("swept", "swept"),
    "swell": ("swelled", "swollen"),
    "swim": ("swam", "swum"),
    "swing": ("swung", "swung"),
    "take": ("took", "taken"),
    "teach": ("taught", "taught"),
    "tear": ("tore", "torn"),
    "tell": ("told", "told"),
    "think": ("thought", "thought"),
    "throw": ("threw", "thrown"),
    "thrust": ("thrust", "thrust"),
    "tread": ("trod", "trodden"),
    "understand": ("understood", "understood"),
    "wake": ("woke", "woken"),
    "wear": ("wore", "worn"),
    "weave": ("wove", "woven"),
    "weep": ("wept", "wept"),
    "win": ("won", "won"),
    "wind": ("wound", "wound"),
    "wring": ("wrung", "wrung"),
    "write": ("wrote", "written"),
}

# regular verbs whose final consonant doubles despite the extra syllable
# (stress on the last syllable defeats the monosyllable heuristic)
IRREGULAR.update(
    {
        "admit": ("admitted", "admitted"),
        "commit": ("committed", "committed"),
        "confer": ("conferred", "conferred"),
        "control": ("controlled", "controlled"),
        "equip": ("equipped", "equipped"),
        "infer": ("inferred", "inferred"),
        "occur": ("occurred", "occurred"),
        "omit": ("omitted", "omitted"),
        "patrol": ("patrolled", "patrolled"),
        "permit": ("permitted", "permitted"),
        "prefer": ("preferred", "preferred"),
        "regret": ("regretted", "regretted"),
        "submit": ("submitted", "submitted"),
    }
)

IRREGULAR_3SG = {"be": "is", "have": "has"}
IRREGULAR_GERUND = {"be": "being", "singe": "singeing"}


def _is_vowel(c: str) -> bool:
    return c in VOWELS


def _vowel_groups(word: str) -> int:
    groups = 0
    prev_vowel = False
    for c in word:
        now_vowel = _is_vowel(c)
        if now_vowel and not prev_vowel:
            groups += 1
        prev_vowel = now_vowel
    return groups


def _doubles_final(word: str) -> bool:
    # CVC ending, final consonant not w/x/y, one vowel group: stop -> stopp-
    if len(word) < 3:
        return False
    a, b, c = word[-3], word[-2], word[-1]
    return (
        not _is_vowel(c)
        and c not in "wxy"
        and _is_vowel(b)
        and not _is_vowel(a)
        and _vowel_groups(word) == 1
    )


def _third_singular(lemma: str) -> str:
    if lemma in IRREGULAR_3SG:
        return IRREGULAR_3SG[lemma]
    if lemma.endswith(("s", "x", "z", "ch", "sh", "o")):
        return lemma + "es"
    if lemma.endswith("y") and len(lemma) > 1 and not _is_vowel(lemma[-2]):
        return lemma[:-1] + "ies"
    return lemma + "s"


def _past(lemma: str) -> str:
    if lemma.endswith("e"):
        return lemma + "d"
    if lemma.endswith("y") and len(lemma) > 1 and not _is_vowel(lemma[-2]):
        return lemma[:-1] + "ied"
    if _doubles_final(lemma):
        return lemma + lemma[-1] + "ed"
    return lemma + "ed"


def _gerund(lemma: str) -> str:
    if lemma in IRREGULAR_GERUND:
        return IRREGULAR_GERUND[lemma]
    if lemma.endswith("ie"):
        return lemma[:-2] + "ying"
    if lemma.endswith("e") and not lemma.endswith(("ee", "oe", "ye")):
        return lemma[:-1] + "ing"
    if _doubles_final(lemma):
        return lemma + lemma[-1] + "ing"
    return lemma + "ing"


def inflect(lemma: str, morph: str) -> str:
    """Surface form of ``lemma`` under one of the five morph tags.

    Always produces a form; ``base`` returns the lemma unchanged.
    """
    lemma = lemma.lower()
    if morph == "base":
        return lemma
    if morph == "3rd-person-singular":
        return _third_singular(lemma)
    if morph == "past":
        return IRREGULAR[lemma][0] if lemma in IRREGULAR else _past(lemma)
    if morph == "past-participle":
        return IRREGULAR[lemma][1] if lemma in IRREGULAR else _past(lemma)
    if morph == "gerund":
        return _gerund(lemma)
    raise ValueError(f"unknown morph tag {morph!r}")
