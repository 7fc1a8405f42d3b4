import json
import random

import pytest

from clasp.clink import random_family
from clasp.errors import InconsistencyError
from clasp.linkio import (BUILTINS, InputError, LinkInput, builtin_text, emit_link, link_to_dict,
                          load_builtin, parse_link)


@pytest.mark.parametrize("name", BUILTINS)
def test_builtins_are_canonical(name):
    text = builtin_text(name)
    assert emit_link(parse_link(text)) == text


@pytest.mark.parametrize("name", BUILTINS)
def test_builtins_are_verified(name):
    link = load_builtin(name)
    assert link.hypothesis_status() == "verified"


def test_round_trip_random_families():
    rng = random.Random(0)
    for _ in range(20):
        mu = rng.randint(1, 3)
        link = LinkInput(random_family(mu, rng.randint(0, 3), rng), name=f"r{mu}")
        again = parse_link(emit_link(link))
        assert again == link
        assert emit_link(again) == emit_link(link)


def test_round_trip_with_labels_and_flags():
    text = json.dumps({
        "mu": 2, "n": 3,
        "matrices": {"++": [[1, 0, 0], [0, 1, 0], [0, 0, 1]], "+-": [[0, 0, 0]] * 3},
        "ccomplex": {"surfaces": [{"genus": 1, "boundary": 1}, {"genus": 0, "boundary": 1}],
                     "clasps": [[1, 2], [1, 2, 5]]},
        "allow_unverified_torsion": True})
    link = parse_link(text)
    assert [c.label for c in link.ccomplex.clasps] == [1, 5]
    assert parse_link(emit_link(link)) == link
    assert link_to_dict(link)["ccomplex"]["clasps"] == [[1, 2], [1, 2, 5]]


def test_missing_ccomplex_is_unverified():
    link = parse_link('{"mu": 1, "matrices": {"-": [[1]]}}')
    assert link.hypothesis_status() == "unverified"
    assert link.hypothesis_status(override=True) == "override"


def test_json_syntax_error_reports_position():
    with pytest.raises(InputError, match="line 2 column"):
        parse_link('{"mu": 1,\n "n": }')


@pytest.mark.parametrize("text, fragment", [
    ('[]', "top level"),
    ('{"n": 1}', "'mu'"),
    ('{"mu": "2", "matrices": {}}', "top level.mu"),
    ('{"mu": 1, "matrices": {"-": [[1, 2]]}}', "matrices"),
    ('{"mu": 1, "matrices": {"-": [[1]]}, "ccomplex": {"surfaces": [{"genus": -1}]}}', "surfaces[0]"),
    ('{"mu": 2, "matrices": {"++": [[1]], "+-": [[1]]}, "ccomplex": {"surfaces": [{}, {}], "clasps": [[1]]}}',
     "clasps[0]"),
])
def test_field_errors_name_the_field(text, fragment):
    with pytest.raises(InputError) as info:
        parse_link(text)
    assert fragment in str(info.value)


def test_rank_mismatch_is_inconsistent():
    text = '{"mu": 1, "matrices": {"-": [[1]]}, "ccomplex": {"surfaces": [{"genus": 1}]}}'
    with pytest.raises(InconsistencyError, match="rank 2"):
        parse_link(text)


def test_transpose_conflict():
    with pytest.raises(InconsistencyError):
        parse_link('{"mu": 1, "matrices": {"-": [[1, 1], [0, 1]], "+": [[1, 1], [0, 1]]}}')
