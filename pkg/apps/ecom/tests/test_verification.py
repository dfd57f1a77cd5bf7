"""
Verification Runner Tests - check execution and the cheap reference checks
"""
import math
import os
import sys
from dataclasses import replace

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from ecom_sdk.complexes.simplicial import SimplicialComplex
from ecom_sdk.errors import BudgetExceeded
from ecom_sdk.homology.chains import HomologyGroup
from ecom_sdk.pi1.presentation import pi1_presentation
from ecom_sdk.pi1.tietze import tietze_simplify
from ecom_sdk.settings import Settings, checkpoint
from ecom_sdk.verification import SUITES, Check, Verdict, run_check, run_checks, summarize
from ecom_sdk.verification.catalog import catalog, catalog_group
from ecom_sdk.verification.property_suite import (
    affine_methods_agree,
    coset_enumeration_consistency,
    enclosing_coset_minimality,
    face_compatibility,
)
from ecom_sdk.verification.reference_suite import (
    feit_thompson_examples,
    first_homology_matches_pi1,
    o2_identities,
    quaternion_formulas,
    s3_census,
    s3_wedge_of_eight,
)


def ok_check(value=1):
    return Verdict.PASS, {"value": value}


def broken_check():
    raise RuntimeError("boom")


def out_of_time():
    raise BudgetExceeded("time_limit_seconds", 1, 2)


def ticking_check():
    checkpoint("tick")
    return Verdict.PASS, {}


class TestRunner:
    """Verdicts, budget handling and ordering"""

    def test_pass_with_kwargs(self):
        result = run_check(Check("ok", ok_check, kwargs={"value": 5}), Settings())
        assert result.verdict == Verdict.PASS
        assert result.details == {"value": 5}

    def test_exception_is_failure(self):
        result = run_check(Check("broken", broken_check), Settings())
        assert result.verdict == Verdict.FAIL
        assert "RuntimeError" in result.details["error"]

    def test_budget_is_skipped(self):
        result = run_check(Check("slow", out_of_time), Settings())
        assert result.verdict == Verdict.SKIPPED
        assert result.budget_exhausted
        assert result.to_dict()["budget_exhausted"]

    def test_order_is_kept_across_workers(self):
        checks = [Check(f"c{i}", ok_check, kwargs={"value": i}) for i in range(6)]
        results = run_checks(checks, Settings(), jobs=2, progress=False)
        assert [r.name for r in results] == [c.name for c in checks]
        assert [r.details["value"] for r in results] == list(range(6))

    def test_summary(self):
        checks = [Check("a", ok_check), Check("b", broken_check), Check("c", out_of_time)]
        results = run_checks(checks, Settings(), progress=False)
        assert summarize(results) == {"PASS": 1, "FAIL": 1, "SKIPPED": 1}

    def test_stretch_uses_stretch_limit(self):
        settings = replace(Settings(), stretch_seconds=-1.0)
        assert run_check(Check("regular", ticking_check), settings).verdict == Verdict.PASS
        result = run_check(Check("stretch", ticking_check, stretch=True), settings)
        assert result.verdict == Verdict.SKIPPED
        assert result.details["budget"]["resource"] == "time_limit_seconds"


class TestSuites:
    """Suite composition"""

    def test_stretch_adds_s5(self):
        regular = [c.name for c in SUITES["paper"]()]
        stretched = [c.name for c in SUITES["paper"](stretch=True)]
        assert "s5-torsion" not in regular
        assert stretched == regular + ["s5-torsion"]

    def test_extraspecial_checks_are_stretch(self):
        checks = {c.name: c for c in SUITES["paper"]()}
        assert checks["extraspecial32+"].stretch
        assert not checks["s3-census"].stretch

    def test_property_names_unique(self):
        names = [c.name for c in SUITES["properties"]()]
        assert len(names) == len(set(names))


class TestCatalog:
    """Groups swept by the suites"""

    def test_orders_bounded(self):
        assert all(G.order <= 12 for G in catalog(12))

    def test_filters(self):
        assert all(G.is_abelian for G in catalog(12, abelian=True))
        assert not any(G.is_abelian for G in catalog(12, abelian=False))

    def test_frobenius_group(self):
        G = catalog_group("F_21")
        assert G.order == 21
        assert G.name == "F_21"


class TestPropertyChecks:
    """Exhaustive structural properties on the small end of the catalog"""

    def test_affine_methods_agree_on_every_small_subset(self):
        outcome, details = affine_methods_agree(seed=42, max_order=8)
        assert outcome == Verdict.PASS, details
        expected = sum(math.comb(G.order, k) for G in catalog(8) for k in range(1, min(4, G.order) + 1))
        assert details["subsets"] == expected

    def test_enclosing_coset_is_minimal(self):
        outcome, details = enclosing_coset_minimality(max_order=8)
        assert outcome == Verdict.PASS, details


class TestReferenceChecks:
    """The quick reference checks pass outright"""

    RP2_FACETS = [
        [0, 1, 2], [0, 2, 3], [0, 3, 4], [0, 4, 5], [0, 1, 5],
        [1, 2, 4], [2, 3, 5], [1, 3, 4], [2, 4, 5], [1, 3, 5],
    ]

    def test_s3(self):
        assert s3_wedge_of_eight()[0] == Verdict.PASS
        assert s3_census()[0] == Verdict.PASS

    def test_quaternion_q8_q16(self):
        for n in (3, 4):
            outcome, details = quaternion_formulas(n)
            assert outcome == Verdict.PASS, details

    def test_first_homology_matches_pi1(self):
        K = SimplicialComplex(6, self.RP2_FACETS)
        assert first_homology_matches_pi1(K)
        P = tietze_simplify(pi1_presentation(K))
        assert first_homology_matches_pi1(K, P, HomologyGroup(0, (2,)))
        assert not first_homology_matches_pi1(K, P, HomologyGroup(1))

    def test_feit_thompson(self):
        outcome, details = feit_thompson_examples()
        assert outcome == Verdict.PASS
        assert details["witness"] == {"S_3": True, "F_21": True, "A_5": False}

    def test_o2(self):
        assert o2_identities(100, 42)[0] == Verdict.PASS

    def test_coset_enumeration_consistency(self):
        assert coset_enumeration_consistency(max_order=8)[0] == Verdict.PASS

    def test_face_compatibility(self):
        assert face_compatibility(seed=42, max_order=8)[0] == Verdict.PASS
