import io

import pytest
from hypothesis import given, strategies as st

from framemap.errors import FormatError, IntegrityError, UnknownFrameError
from framemap.inventory import (
    Frame,
    FrameInventory,
    FrameRelation,
    lexical_units_of,
    load_inventory,
    neighbors,
    normalize_frame_name,
    save_inventory,
)

MINIMAL = "F\talpha\nL\trise\tv\nF\tbeta\nR\talpha\tuses\tbeta\n"


def test_minimal_two_frames_one_relation():
    inv = load_inventory(io.StringIO(MINIMAL))
    assert set(inv.frames) == {"alpha", "beta"}
    assert len(inv.relations) == 1
    assert inv.relations[0] == FrameRelation("alpha", "uses", "beta")


def test_dangling_relation_names_missing_frame():
    text = "F\talpha\nR\talpha\tuses\tx\n"
    with pytest.raises(IntegrityError, match="'x'"):
        load_inventory(io.StringIO(text))


def test_malformed_line_reports_line_number():
    text = "F\talpha\nL\tonly_two_fields\n"
    with pytest.raises(FormatError, match="line 2"):
        load_inventory(io.StringIO(text))


def test_unknown_record_type_rejected():
    with pytest.raises(FormatError, match="line 1"):
        load_inventory(io.StringIO("Q\tweird\n"))


def test_mini_fixture_hand_counts(fixtures_dir):
    with open(fixtures_dir / "mini_inventory.fiv") as f:
        inv = load_inventory(f)
    assert len(inv.frames) == 12
    assert sum(len(fr.lexical_units) for fr in inv.frames.values()) == 20
    assert len(inv.relations) == 8


def test_neighbors_of_isolated_frame_empty():
    inv = load_inventory(io.StringIO("F\tlone\n"))
    assert neighbors(inv, "lone") == set()


def test_neighbors_ignore_direction():
    text = "F\ta\nF\tb\nF\tc\nR\ta\tuses\tb\nR\tc\tused-by\ta\n"
    inv = load_inventory(io.StringIO(text))
    assert neighbors(inv, "a") == {"b", "c"}


def test_hub_neighbors_hand_enumerated(fixtures_dir):
    with open(fixtures_dir / "mini_inventory.fiv") as f:
        inv = load_inventory(f)
    assert neighbors(inv, "cause_to_end") == {"death", "process_end", "destruction"}
    assert neighbors(inv, "death") == {"cause_to_end", "killing"}


def test_unknown_frame_lookup():
    inv = load_inventory(io.StringIO("F\talpha\n"))
    with pytest.raises(UnknownFrameError):
        neighbors(inv, "nope")
    with pytest.raises(UnknownFrameError):
        lexical_units_of(inv, "nope")


def test_lexical_units_pos_filter():
    text = "F\tdeath\nL\tdie\tv\nL\tdeath\tn\n"
    inv = load_inventory(io.StringIO(text))
    assert lexical_units_of(inv, "death", pos="v") == {"die"}
    assert lexical_units_of(inv, "death") == {"die", "death"}


def test_lexical_units_of_empty_frame(fixtures_dir):
    with open(fixtures_dir / "mini_inventory.fiv") as f:
        inv = load_inventory(f)
    assert lexical_units_of(inv, "argument") == set()
    assert lexical_units_of(inv, "killing") == {"slay", "kill"}


def test_frame_names_normalized():
    inv = load_inventory(io.StringIO("F\tCause_To_End\nF\tSelf Motion\n"))
    assert set(inv.frames) == {"cause_to_end", "self_motion"}
    assert normalize_frame_name("  Cause  To End ") == "cause_to_end"


def test_roundtrip_on_fixture(fixtures_dir):
    with open(fixtures_dir / "mini_inventory.fiv") as f:
        inv = load_inventory(f)
    sink = io.StringIO()
    save_inventory(inv, sink)
    again = load_inventory(io.StringIO(sink.getvalue()))
    assert again.frames == inv.frames
    assert again.relations == inv.relations


names_st = st.from_regex(r"[a-z][a-z_]{0,5}", fullmatch=True)
lemmas_st = st.from_regex(r"[a-z]{1,6}", fullmatch=True)


@st.composite
def inventories(draw):
    names = draw(st.lists(names_st, min_size=1, max_size=6, unique=True))
    frames = {}
    for n in names:
        lus = draw(
            st.sets(st.tuples(lemmas_st, st.sampled_from(["v", "n", "a"])), max_size=3)
        )
        frames[n] = Frame(n, lus)
    relations = draw(
        st.lists(
            st.tuples(st.sampled_from(names), st.sampled_from(["uses", "used-by"]),
                      st.sampled_from(names)),
            max_size=8,
        )
    )
    return FrameInventory(
        frames=frames,
        relations=[FrameRelation(a, t, b) for a, t, b in relations],
    )


@given(inventories())
def test_neighbor_symmetry_property(inv):
    for f in inv.frames:
        for g in neighbors(inv, f):
            assert f in neighbors(inv, g)
            assert g != f


@given(inventories())
def test_save_load_roundtrip_property(inv):
    sink = io.StringIO()
    save_inventory(inv, sink)
    again = load_inventory(io.StringIO(sink.getvalue()))
    assert again.frames == inv.frames
    assert again.relations == inv.relations


@given(inventories())
def test_every_relation_endpoint_resolves(inv):
    for rel in inv.relations:
        assert rel.from_frame in inv.frames
        assert rel.to_frame in inv.frames
