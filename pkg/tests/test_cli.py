"""Tests for file formats, report rendering and command exit codes."""

import json
import random

import pytest

from coverlab.cli import (
    FormatError,
    main,
    parse_cover_file,
    parse_group_cover_file,
    parse_group_file,
    serialize_cover,
    serialize_group,
    serialize_group_cover,
)
from coverlab.gcover import CosetSystem
from coverlab.group import (
    all_subgroups,
    catalog_group,
    load_catalog,
    subgroup_closure,
    trivial_subgroup,
)
from coverlab.zcover import ResidueSystem


# ------------------------------------------------------------ cover files


def pairs(system):
    return tuple((c.residue, c.modulus) for c in system.classes)


def test_cover_parse_inline():
    s = parse_cover_file("0/2 1/4 3/4")
    assert pairs(s) == ((0, 2), (1, 4), (3, 4))


def test_cover_parse_comments_and_lines():
    text = "# an exact cover\n0/2\n1/4  3/4   # two quarters\n"
    assert pairs(parse_cover_file(text)) == ((0, 2), (1, 4), (3, 4))


def test_cover_parse_from_file(tmp_path):
    p = tmp_path / "cover.txt"
    p.write_text("0/2 1/2\n")
    assert pairs(parse_cover_file(str(p))) == ((0, 2), (1, 2))


def test_cover_round_trip_random():
    rng = random.Random(5)
    for _ in range(50):
        pairs = []
        for _ in range(rng.randint(1, 8)):
            n = rng.randint(1, 60)
            pairs.append((rng.randrange(n), n))
        system = ResidueSystem.from_pairs(pairs)
        assert parse_cover_file(serialize_cover(system)) == system


def test_cover_parse_errors():
    with pytest.raises(FormatError, match="out of range"):
        parse_cover_file("5/4")
    with pytest.raises(FormatError, match="line 2"):
        parse_cover_file("0/2\n1/4 junk\n")
    with pytest.raises(FormatError):
        parse_cover_file("")


# ------------------------------------------------------------ group files


def test_group_parse_catalog_name():
    G = parse_group_file("S3")
    assert G.order == 6 and G.name == "S3"
    assert parse_group_file("group D4").order == 8


def test_group_parse_inline_record():
    G = parse_group_file("group K\ndegree 4\ngen (1 2)\ngen (3 4)\norder 4\nend\n")
    assert G.order == 4 and G.is_abelian()


def test_group_round_trip_tables():
    for name in ("S3", "D4", "C12", "Q8", "SD16"):
        G = catalog_group(name)
        H = parse_group_file(serialize_group(G))
        assert H.order == G.order
        assert H.table == G.table


def test_group_parse_errors():
    with pytest.raises(FormatError, match="catalog"):
        parse_group_file("NoSuchGroup")
    with pytest.raises(FormatError):
        parse_group_file("group X\ndegree 3\ngen (1 2 3)\norder 3\n")  # no end


# ------------------------------------------------------ group-cover files


def s3_cover_text():
    return "group S3\nH : \n0 : (1 2 3)\n1 : (1 2 3)\n"


def test_group_cover_parse_catalog():
    G, H, entries = parse_group_cover_file(s3_cover_text())
    assert G.name == "S3" and H.size == 1
    assert len(entries) == 2
    assert all(sub.size == 3 for _, sub in entries)


def test_group_cover_parse_h_line():
    text = "group C12\nH : 6\n0 : 2\n3 : 2\n"
    G, H, entries = parse_group_cover_file(text)
    assert H.size == G.order // subgroup_closure(G, [6]).index
    assert H.mask == subgroup_closure(G, [6]).mask
    assert [rep for rep, _ in entries] == [0, 3]


def test_group_cover_inline_record():
    text = (
        "group V\ndegree 4\ngen (1 2)\ngen (3 4)\norder 4\nend\n"
        "0 : 1\n2 : 1\n"
    )
    G, H, entries = parse_group_cover_file(text)
    assert G.order == 4 and H.size == 1
    assert [sub.size for _, sub in entries] == [2, 2]


def test_group_cover_round_trip():
    G = catalog_group("S3")
    three = [S for S in all_subgroups(G) if S.size == 3][0]
    cover = CosetSystem.from_pairs(G, [(0, three), (1, three)])
    text = serialize_group_cover(cover, trivial_subgroup(G))
    G2, H2, entries = parse_group_cover_file(text)
    assert G2.table == G.table
    assert H2.size == 1
    assert [(rep, sub.members()) for rep, sub in entries] == [
        (rep, sub.members()) for rep, sub in cover.entries
    ]


def test_group_cover_parse_errors():
    with pytest.raises(FormatError, match="group line"):
        parse_group_cover_file("0 : 1\n")
    with pytest.raises(FormatError, match="duplicate H"):
        parse_group_cover_file("group C4\nH : 2\nH : 2\n0 : 2\n")
    with pytest.raises(FormatError, match="precede"):
        parse_group_cover_file("group C4\n0 : 2\nH : 2\n")
    with pytest.raises(FormatError, match="no cover entries"):
        parse_group_cover_file("group C4\n")
    with pytest.raises(FormatError, match="element id"):
        parse_group_cover_file("group C4\n9 : 2\n")


# -------------------------------------------------------------- exit codes


def test_exit_exact_cover(capsys):
    assert main(["verify-cover", "0/2 1/4 3/4"]) == 0
    out = capsys.readouterr().out
    assert "status: pass" in out
    assert "* is-cover = true" in out


def test_exit_non_cover(capsys):
    assert main(["verify-cover", "1/3"]) == 1
    assert "status: FAIL" in capsys.readouterr().out


def test_exit_parse_error(capsys):
    assert main(["verify-cover", "9/4"]) == 2
    assert "error:" in capsys.readouterr().err


def test_exit_budget(capsys, monkeypatch):
    monkeypatch.setenv("COVERLAB_BUDGET", "100")
    assert main(["verify-cover", "0/2 1/999983"]) == 2
    assert "budget exceeded" in capsys.readouterr().err


def test_budget_flag_beats_env(capsys, monkeypatch):
    monkeypatch.setenv("COVERLAB_BUDGET", "100")
    # the flag requests more than the env but stays under the cap
    assert main(["density", "--budget", "5000000", "0/2 1/999983"]) == 0
    capsys.readouterr()


def test_exit_no_command(capsys):
    assert main([]) == 2
    capsys.readouterr()


def test_exit_unknown_command():
    with pytest.raises(SystemExit):
        main(["no-such-command"])


@pytest.mark.parametrize(
    "argv",
    [
        ["density", "0/2 1/3"],
        ["mu", "0/2 1/4 3/4"],
        ["density-check", "0/2 1/4 3/4"],
        ["rogers", "0/2 1/4 3/4"],
        ["level-gap", "0/2 1/4 3/4", "--prime", "2"],
        ["level-gap", "0/2 1/4 3/4", "--prime", "2", "--alpha", "2"],
        ["simpson", "0/2 1/4 3/4"],
        ["bounds", "--M", "2"],
        ["qbound", "--q", "8", "--M", "2"],
        ["group-info", "S3"],
        ["group-suite", "D6"],
        ["hs-search", "C6"],
        ["hs-search", "--max-order", "8"],
        ["enumerate-covers", "S3", "--k", "4"],
        ["max-index", "group C4\n0 : 2\n1 : \n3 : \n"],
        ["uniform-cover", "group C4\n0 : 2\n1 : \n3 : \n"],
        ["union-bound", "group C12\n0 : 2\n1 : 3\n"],
        ["aligned-union", "group C12\nH : 6\n0 : 3\n1 : 3\n5 : 3\n"],
    ],
)
def test_exit_zero_commands(argv, capsys):
    assert main(argv) == 0
    assert "status: pass" in capsys.readouterr().out


def test_exit_truncated_enumeration(capsys):
    assert main(["enumerate-covers", "D4", "--k", "6", "--m", "2", "--budget", "50"]) == 2
    out = capsys.readouterr().out
    assert "truncated: true" in out


# ---------------------------------------------------------------- output


def test_text_output_deterministic(capsys):
    main(["verify-cover", "0/2 1/4 3/4"])
    first = capsys.readouterr().out
    main(["verify-cover", "0/2 1/4 3/4"])
    assert capsys.readouterr().out == first


def test_structured_output_shape(capsys):
    assert main(["density", "--format", "structured", "0/2 1/3"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["command"] == "density"
    assert doc["status"] == "pass"
    assert doc["truncated"] is False
    names = {v["name"]: v for v in doc["verdicts"]}
    assert names["density"]["value"] == {"num": "2", "den": "3"}
    assert names["period"]["value"] == 6


def test_structured_output_deterministic(capsys):
    main(["group-suite", "--format", "structured", "S3"])
    first = capsys.readouterr().out
    main(["group-suite", "--format", "structured", "S3"])
    assert capsys.readouterr().out == first


def test_seed_echoed(capsys):
    main(["density", "--seed", "11", "0/2"])
    assert "seed: 11" in capsys.readouterr().out


def test_version_flag(capsys):
    with pytest.raises(SystemExit) as e:
        main(["--version"])
    assert e.value.code == 0
    assert capsys.readouterr().out.startswith("coverlab ")


def test_group_suite_lines(capsys):
    assert main(["group-suite", "A4"]) == 0
    out = capsys.readouterr().out
    assert "* pyramidal-sylow = true" in out
    assert "* pyramidal-heredity = true" in out  # vacuous for A4, note says so


def test_uniform_cover_witnesses(capsys):
    assert main(["uniform-cover", "group C4\n0 : 2\n1 : \n3 : \n"]) == 0
    out = capsys.readouterr().out
    assert "* index-bound = true" in out
    assert "* equal-index-pair = true" in out


def test_hs_search_reports_multisets(capsys):
    assert main(["hs-search", "D6"]) == 0
    out = capsys.readouterr().out
    assert "* no-counterexample[D6] = true" in out
    assert "nodes=750" in out
