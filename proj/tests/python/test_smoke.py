import json
import os
from fractions import Fraction
from pathlib import Path

import pytest

import autqm

GRAPHS = Path(os.environ.get("AUTQM_GRAPH_DIR", Path(__file__).resolve().parents[2] / "tools" / "data"))


def test_words():
    assert autqm.reduce("abBA") == "1"
    assert autqm.multiply("ab", "BA") == "1"
    assert autqm.invert("abAB") == "baBA"
    assert autqm.power("ab", 3) == "ababab"
    assert autqm.cyclic_reduce("baaB") == ("aa", "b")
    assert autqm.is_conjugate("ab", "ba")
    with pytest.raises(ValueError):
        autqm.reduce("abz")


def test_automorphisms():
    phi = autqm.Automorphism("t:b=ab")
    assert phi("b") == "ab"
    assert phi.autocommutator("b") == "a"
    swap = autqm.Automorphism("p:ba")
    assert swap.autocommutator("abAB") == "baBAbaBA"
    assert (phi @ phi.inverse()) == autqm.Automorphism("id")
    assert autqm.Automorphism.ad("a")("b") == "abA"


def test_whitehead():
    assert autqm.is_primitive("abb")
    assert not autqm.is_primitive("abAB")
    assert autqm.in_proper_free_factor("b")
    assert not autqm.in_proper_free_factor("abAB")
    assert autqm.minimize("abb") in {"a", "b", "A", "B"}


def test_quasimorphisms():
    f = autqm.brooks_homogeneous("ab")
    assert f("abAB") == Fraction(1)
    assert f.homogeneous
    g = autqm.average_signed_permutations(autqm.brooks_homogeneous("aaba"))
    assert g("aabaBBB") == Fraction(1, 8)
    again = autqm.Quasimorphism.from_json(g.to_json())
    assert again("aabaBBB") == Fraction(1, 8)
    cert = autqm.defect_enumerate(autqm.brooks("ab"), 3)
    assert cert["bound_type"] == "enumerated-lower"
    assert Fraction(cert["value"]) <= autqm.brooks("ab").defect_bound


def test_norms():
    r = autqm.acl_upper("a")
    assert r["value"] == 1
    assert r["witness"][0]["phi"]["trace"] == "t:b=ab"
    s = autqm.sacl_estimate("abAB", 8)
    assert Fraction(s["upper"]) <= Fraction(1, 8)
    assert autqm.bfs_norm("abAB", ["a", "b", "A", "B"], 6)["value"] == 4
    assert autqm.cl_upper("abAB")["value"] == 1


def test_graph_products():
    join5 = (GRAPHS / "join5.graph").read_text()
    assert autqm.normal_form(join5, "2 1 0^3 1^-1") == "0^3 2^1"
    assert autqm.join_decompose(join5) == ([0], [[1, 2], [3, 4]])
    assert autqm.classify_virtually_abelian((GRAPHS / "c4.graph").read_text())
    assert not autqm.classify_virtually_abelian("vertices 2\nlabel 0 0\nlabel 1 0\n")


def test_acceptance_check():
    r = autqm.run_check(5)
    assert r["passed"], json.dumps(r)
