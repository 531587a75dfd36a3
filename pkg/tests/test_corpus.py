import io
from collections import Counter

import pytest
from hypothesis import given, strategies as st

from framemap.corpus import (
    FRAME_PREFIX,
    TaggedSentence,
    TrainingWindow,
    build_mapping_table,
    emit_control_record,
    extract_window,
    frame_token,
    is_frame_token,
    load_mapping_table,
    load_windows,
    parse_control_record,
    parse_ftc,
    parse_pfc,
    save_mapping_table,
    save_windows,
    substitute_frame_label,
    symbol_overlap_filter,
)
from framemap.errors import FormatError, IntegrityError


def test_parse_single_record():
    line = "The party ended as soon as she left.\t2\tcause_to_end\tend\tpast\n"
    (s,) = parse_ftc([line])
    assert s.tokens[2] == "ended"
    assert s.frame_label == "cause_to_end"
    assert s.focus_lemma == "end"
    assert s.focus_morph == "past"


def test_focus_index_out_of_range_rejected():
    line = "a b c\t3\tframe\tx\tbase\n"
    with pytest.raises(FormatError, match="line 1"):
        parse_ftc([line])


def test_unknown_morph_tag_rejected():
    line = "a b c\t1\tframe\tx\tpluperfect\n"
    with pytest.raises(FormatError, match="pluperfect"):
        parse_ftc([line])


def test_fixture_counts_by_frame(fixtures_dir):
    with open(fixtures_dir / "mini_corpus.ftc") as f:
        sentences = parse_ftc(f)
    assert len(sentences) == 30
    counts = Counter(s.frame_label for s in sentences)
    assert counts == {
        "death": 4,
        "killing": 3,
        "cause_to_end": 4,
        "process_end": 3,
        "cause_motion": 3,
        "self_motion": 3,
        "fluidic_motion": 2,
        "destruction": 3,
        "coming_to_believe": 2,
        "bringing": 2,
        "argument": 1,
    }


def test_window_centered():
    s = TaggedSentence([f"t{i}" for i in range(11)], 5, "f", "t5", "base")
    w = extract_window(s, radius=5)
    assert w.center == "t5"
    assert len(w.context) == 10
    assert "t5" not in w.context


def test_window_truncates_at_start():
    s = TaggedSentence([f"t{i}" for i in range(9)], 0, "f", "t0", "base")
    w = extract_window(s, radius=5)
    assert w.context == ["t1", "t2", "t3", "t4", "t5"]


def test_window_table_sentence_hand_extracted(fixtures_dir):
    with open(fixtures_dir / "mini_corpus.ftc") as f:
        sentences = parse_ftc(f)
    died = next(s for s in sentences if s.tokens[s.focus_index] == "died" and len(s.tokens) == 6)
    w = extract_window(died, radius=5)
    assert w.center == "died"
    assert w.context == ["The", "house", "where", "love", "had"]


@given(
    st.lists(st.from_regex(r"[a-z]{1,4}", fullmatch=True), min_size=1, max_size=15),
    st.data(),
    st.integers(min_value=0, max_value=6),
)
def test_window_bounds_property(tokens, data, radius):
    i = data.draw(st.integers(min_value=0, max_value=len(tokens) - 1))
    s = TaggedSentence(tokens, i, "f", tokens[i], "base")
    w = extract_window(s, radius=radius)
    assert len(w.context) <= 2 * radius
    assert w.context == tokens[max(0, i - radius):i] + tokens[i + 1:i + 1 + radius]


def test_substitute_frame_label():
    w = TrainingWindow("died", ["The", "house", "where", "love", "had"])
    out = substitute_frame_label(w, "death")
    assert out.center == "__frame__:death"
    assert out.context == w.context
    assert substitute_frame_label(out, "death").center == out.center


def test_substitute_always_prefixed():
    w = TrainingWindow("x", ["a"])
    out = substitute_frame_label(w, "Some Frame")
    assert out.center.startswith(FRAME_PREFIX)
    assert is_frame_token(out.center)
    assert frame_token("Some Frame") == "__frame__:some_frame"


def test_symbol_overlap_paper_example():
    gold = ["loss", "loneliness", "despair", "sadness", "sorrow"]
    literal = ["loss", "loneliness", "despair", "sadness", "life"]
    assert symbol_overlap_filter(gold, literal, threshold=4)
    assert not symbol_overlap_filter(gold, literal, threshold=5)


def test_symbol_overlap_trivial_cases():
    same = ["a", "b", "c", "d", "e"]
    assert symbol_overlap_filter(same, list(same))
    assert not symbol_overlap_filter(same, ["v", "w", "x", "y", "z"])
    with pytest.raises(ValueError):
        symbol_overlap_filter(["a"], same)


@given(
    st.lists(st.sampled_from("abcdefgh"), min_size=5, max_size=5),
    st.lists(st.sampled_from("abcdefgh"), min_size=5, max_size=5),
    st.integers(min_value=0, max_value=5),
)
def test_symbol_overlap_symmetric(a, b, threshold):
    assert symbol_overlap_filter(a, b, threshold) == symbol_overlap_filter(b, a, threshold)


def _pair(literal_tokens, focus, lit_frame, lit_lemma, lit_morph, met_token, met_frame, met_lemma, met_morph):
    met_tokens = list(literal_tokens)
    met_tokens[focus] = met_token
    return parse_pfc([
        "\t".join([
            " ".join(literal_tokens), str(focus), lit_frame, lit_lemma, lit_morph,
            "|",
            " ".join(met_tokens), str(focus), met_frame, met_lemma, met_morph,
        ])
    ])[0]


def test_control_record_exact_rendering():
    pair = _pair(
        ["The", "party", "ended", "as", "soon", "as", "she", "left."],
        2, "cause_to_end", "end", "past",
        "died", "death", "die", "past",
    )
    assert emit_control_record(pair) == (
        "death <EOT> The party <V> ended : cause_to_end <V> as soon as she left."
    )


def test_control_record_empty_prefix():
    pair = _pair(["Run", "for", "cover"], 0, "self_motion", "run", "base",
                 "Stream", "fluidic_motion", "stream", "base")
    record = emit_control_record(pair)
    assert record == "fluidic_motion <EOT> <V> Run : self_motion <V> for cover"
    source, target, tokens, focus = parse_control_record(record)
    assert (source, target, tokens, focus) == (
        "fluidic_motion", "self_motion", ["Run", "for", "cover"], 0
    )


token_st = st.from_regex(r"[A-Za-z.,']{1,8}", fullmatch=True).filter(
    lambda t: t not in ("<V>", "<EOT>")
)


@given(st.lists(token_st, min_size=1, max_size=10), st.data())
def test_control_record_roundtrip_property(tokens, data):
    focus = data.draw(st.integers(min_value=0, max_value=len(tokens) - 1))
    pair = _pair(tokens, focus, "target_f", "x", "base", tokens[focus], "source_f", "y", "base")
    source, target, out_tokens, out_focus = parse_control_record(emit_control_record(pair))
    assert source == "source_f"
    assert target == "target_f"
    assert out_tokens == tokens
    assert out_focus == focus


def test_pair_alignment_enforced():
    line = "a b c\t1\tf\tb\tbase\t|\tx y c\t1\tg\ty\tbase"
    with pytest.raises(IntegrityError):
        parse_pfc([line])


def test_mapping_table_trivial():
    assert build_mapping_table([]).counts == {}
    pairs = [
        _pair(["x", "runs"], 1, "a", "run", "3rd-person-singular",
              "streams", "b", "stream", "3rd-person-singular"),
        _pair(["x", "runs"], 1, "a", "run", "3rd-person-singular",
              "streams", "b", "stream", "3rd-person-singular"),
        _pair(["x", "runs"], 1, "a", "run", "3rd-person-singular",
              "rolls", "c", "roll", "3rd-person-singular"),
    ]
    table = build_mapping_table(pairs)
    assert table.counts == {("a", "b"): 2, ("a", "c"): 1}
    assert table.total() == 3


def test_mapping_table_matches_independent_tally(fixtures_dir):
    with open(fixtures_dir / "mini_pairs.pfc") as f:
        pairs = parse_pfc(f)
    table = build_mapping_table(pairs)
    # independent tally straight off the raw fields
    expected = Counter()
    with open(fixtures_dir / "mini_pairs.pfc") as f:
        for line in f:
            if not line.strip() or line.startswith("#"):
                continue
            fields = line.rstrip("\n").split("\t")
            expected[(fields[2], fields[8])] += 1
    assert table.counts == dict(expected)
    assert table.total() == len(pairs)


def test_mapping_table_file_roundtrip(fixtures_dir):
    with open(fixtures_dir / "mini_pairs.pfc") as f:
        table = build_mapping_table(parse_pfc(f))
    sink = io.StringIO()
    save_mapping_table(table, sink)
    assert load_mapping_table(io.StringIO(sink.getvalue())).counts == table.counts


def test_windows_file_roundtrip():
    windows = [
        TrainingWindow("__frame__:death", ["The", "house"]),
        TrainingWindow("alone", []),
    ]
    sink = io.StringIO()
    save_windows(windows, sink)
    assert load_windows(io.StringIO(sink.getvalue())) == windows
