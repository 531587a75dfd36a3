import pytest
from hypothesis import given, strategies as st

from framemap.inflect import inflect


@pytest.mark.parametrize(
    "lemma,morph,expected",
    [
        ("die", "past", "died"),
        ("run", "gerund", "running"),
        ("slay", "past-participle", "slain"),
        ("slay", "past", "slew"),
        ("fight", "past", "fought"),
        ("bring", "past", "brought"),
        ("try", "past", "tried"),
        ("stop", "past", "stopped"),
        ("argue", "past", "argued"),
        ("play", "past", "played"),
        ("visit", "past", "visited"),
        ("infer", "past", "inferred"),
        ("pass", "3rd-person-singular", "passes"),
        ("go", "3rd-person-singular", "goes"),
        ("watch", "3rd-person-singular", "watches"),
        ("fix", "3rd-person-singular", "fixes"),
        ("try", "3rd-person-singular", "tries"),
        ("die", "3rd-person-singular", "dies"),
        ("be", "3rd-person-singular", "is"),
        ("have", "3rd-person-singular", "has"),
        ("be", "past", "was"),
        ("be", "past-participle", "been"),
        ("be", "gerund", "being"),
        ("die", "gerund", "dying"),
        ("lie", "gerund", "lying"),
        ("see", "gerund", "seeing"),
        ("make", "gerund", "making"),
        ("stop", "gerund", "stopping"),
        ("walk", "gerund", "walking"),
    ],
)
def test_inflections(lemma, morph, expected):
    assert inflect(lemma, morph) == expected


@given(st.from_regex(r"[a-z]{2,8}", fullmatch=True))
def test_base_is_identity(lemma):
    assert inflect(lemma, "base") == lemma


def test_unknown_morph_rejected():
    with pytest.raises(ValueError):
        inflect("run", "subjunctive")


@given(st.from_regex(r"[a-z]{2,8}", fullmatch=True),
       st.sampled_from(["base", "3rd-person-singular", "past", "past-participle", "gerund"]))
def test_always_produces_a_form(lemma, morph):
    form = inflect(lemma, morph)
    assert form and form.islower()
