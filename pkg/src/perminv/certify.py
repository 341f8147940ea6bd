"""Rule engine: Gorenstein status in characteristic 0 and non-Cohen-Macaulay
certificates in characteristic 2 for permutation invariant rings.

Theorems are axioms here; what gets computed is whether their hypotheses
hold for a given group and what the Molien numerator says.

Rule table
----------
hochster_eagon_cm
    In the nonmodular case (in particular char 0) K[V]^G is Cohen-Macaulay.
lemma_pseudoreflection_transposition
    In a permutation group, g is a pseudoreflection iff g is a transposition.
watanabe_sl
    Nonmodular, G in SL(V)  =>  K[V]^G Gorenstein.
watanabe_converse
    Nonmodular, no pseudoreflections, K[V]^G Gorenstein  =>  G in SL(V).
stanley_palindromic
    A Cohen-Macaulay domain is Gorenstein iff the Hilbert series numerator
    over an h.s.o.p. is palindromic.
hilbert_char_independent
    For a permutation representation the Hilbert series does not depend on
    the characteristic, since orbit sums form a basis.
braun_theorem_b
    G in SL(V) with no transvections: Cohen-Macaulay implies Gorenstein.
braun_theorem_c (documented, never invoked)
    No pseudoreflections and Gorenstein implies G in SL(V). For permutation
    groups at p = 2 every determinant is 1, so it says nothing.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from .molien import MolienResult, molien_series
from .perm import PermGroup, Permutation, is_pseudoreflection, rank_id_minus, sign
from .series import Poly, coeffs_json, is_palindromic, palindrome_offset, render

RULES = (
    "hochster_eagon_cm",
    "lemma_pseudoreflection_transposition",
    "watanabe_converse",
    "watanabe_sl",
    "stanley_palindromic",
    "hilbert_char_independent",
    "braun_theorem_b",
)


class RuleContradiction(RuntimeError):
    """Two theorems disagree on computed data, which means a bug somewhere."""


@dataclass(frozen=True)
class StructureReport:
    n: int
    group_order: int
    has_odd_permutation: bool
    transpositions: tuple[Permutation, ...]
    pseudoreflections: tuple[Permutation, ...]
    in_sl_char0: bool
    in_sl_char2: bool
    numerator: Poly
    palindromic: bool
    h_at_one: int
    molien: MolienResult = field(repr=False, compare=False)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "order": self.group_order,
            "has_odd_permutation": self.has_odd_permutation,
            "transpositions": [str(t) for t in self.transpositions],
            "pseudoreflections": [str(t) for t in self.pseudoreflections],
            "in_sl_char0": self.in_sl_char0,
            "in_sl_char2": self.in_sl_char2,
            "numerator": coeffs_json(self.numerator),
            "denominator_degrees": list(range(1, self.n + 1)),
            "palindromic": self.palindromic,
            "palindrome_offset": palindrome_offset(self.numerator),
            "h_at_one": self.h_at_one,
        }


def analyze(G: PermGroup, molien: MolienResult | None = None) -> StructureReport:
    transpositions = tuple(g for g in G.elements if is_pseudoreflection(g))
    by_rank = tuple(g for g in G.elements if rank_id_minus(g) == 1)
    if transpositions != by_rank:
        raise RuleContradiction(
            "cycle-type and rank detectors disagree on pseudoreflections: "
            f"{[str(g) for g in transpositions]} vs {[str(g) for g in by_rank]}"
        )
    has_odd = any(sign(g) == -1 for g in G.elements)
    molien = molien or molien_series(G)
    h = molien.numerator
    return StructureReport(
        n=G.n,
        group_order=G.order,
        has_odd_permutation=has_odd,
        transpositions=transpositions,
        pseudoreflections=by_rank,
        in_sl_char0=not has_odd,
        in_sl_char2=True,  # det = +-1 and 1 = -1 at p = 2
        numerator=h,
        palindromic=is_palindromic(h),
        h_at_one=molien.numerator_at_one,
        molien=molien,
    )


class Gorenstein(Enum):
    GORENSTEIN = "gorenstein"
    NOT_GORENSTEIN = "not_gorenstein"


@dataclass(frozen=True)
class CrossCheck:
    rule: str
    applies: bool
    agrees: bool | None  # None when skipped
    note: str = ""

    def to_json(self) -> dict:
        return {"rule": self.rule, "applies": self.applies, "agrees": self.agrees, "note": self.note}


@dataclass(frozen=True)
class GorensteinStatus:
    status: Gorenstein
    via: str
    cross_checks: tuple[CrossCheck, ...]

    def to_json(self) -> dict:
        return {
            "status": self.status.value,
            "via": self.via,
            "cross_checks": [c.to_json() for c in self.cross_checks],
        }


def gorenstein_status_char0(G: PermGroup, report: StructureReport | None = None) -> GorensteinStatus:
    r = report or analyze(G)
    # char-0 invariant rings are CM domains, so Stanley decides outright
    stanley = r.palindromic
    checks = []

    if r.in_sl_char0:
        checks.append(CrossCheck("watanabe_sl", True, stanley, "G in SL(V) forces Gorenstein"))
    else:
        checks.append(CrossCheck("watanabe_sl", False, None, "G not in SL(V)"))

    if not r.in_sl_char0 and not r.pseudoreflections:
        checks.append(
            CrossCheck(
                "watanabe_converse", True, not stanley,
                "G not in SL(V) and no pseudoreflections forces not Gorenstein",
            )
        )
    else:
        why = "G in SL(V)" if r.in_sl_char0 else "G contains pseudoreflections"
        checks.append(CrossCheck("watanabe_converse", False, None, why))

    bad = [c.rule for c in checks if c.applies and not c.agrees]
    if bad:
        raise RuleContradiction(
            f"Stanley verdict (palindromic={stanley}) contradicts {', '.join(bad)} "
            f"for numerator {render(r.numerator)}"
        )
    return GorensteinStatus(
        Gorenstein.GORENSTEIN if stanley else Gorenstein.NOT_GORENSTEIN,
        "stanley_palindromic",
        tuple(checks),
    )


class Conclusion(Enum):
    NOT_CM_AT_P2 = "not_cm_at_p2"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class Step:
    rule: str
    statement: str
    evidence: dict

    def __post_init__(self) -> None:
        if self.rule not in RULES:
            raise ValueError(f"unknown rule {self.rule!r}")

    def to_json(self) -> dict:
        return {"rule": self.rule, "statement": self.statement, "evidence": self.evidence}


@dataclass(frozen=True)
class Certificate:
    conclusion: Conclusion
    steps: tuple[Step, ...]
    reason: str | None = None

    def to_json(self) -> dict:
        out = {
            "conclusion": self.conclusion.value,
            "steps": [s.to_json() for s in self.steps],
        }
        if self.reason is not None:
            out["reason"] = self.reason
        return out


def certify_non_cm_char2(G: PermGroup, report: StructureReport | None = None) -> Certificate:
    r = report or analyze(G)
    numerator = {
        "numerator": coeffs_json(r.numerator),
        "rendered": render(r.numerator),
        "denominator_degrees": list(range(1, r.n + 1)),
    }
    step1 = Step(
        "hochster_eagon_cm",
        "In characteristic 0 the invariant ring is Cohen-Macaulay (and a domain).",
        {"characteristic": 0, "group_order": r.group_order},
    )

    if not r.has_odd_permutation:
        return Certificate(
            Conclusion.INCONCLUSIVE,
            (
                step1,
                Step(
                    "watanabe_converse",
                    "Hypothesis fails: every element is even, so G lies in SL(V) in characteristic 0.",
                    {"has_odd_permutation": False, "in_sl_char0": True},
                ),
            ),
            reason="contains no odd permutation",
        )
    if r.transpositions:
        t = min(r.transpositions, key=lambda g: g.cycles(include_fixed=False))
        return Certificate(
            Conclusion.INCONCLUSIVE,
            (
                step1,
                Step(
                    "lemma_pseudoreflection_transposition",
                    "Hypothesis fails: G contains a transposition, i.e. a pseudoreflection.",
                    {"transpositions": [str(x) for x in r.transpositions]},
                ),
            ),
            reason=f"contains transposition {t}",
        )
    if r.palindromic:
        raise RuleContradiction(
            "odd permutation present and no transpositions, yet numerator "
            f"{render(r.numerator)} is palindromic"
        )
    steps = (
        step1,
        Step(
            "lemma_pseudoreflection_transposition",
            "G contains an odd permutation, so G is not in SL(V) in characteristic 0; "
            "G contains no transposition, hence no pseudoreflection.",
            {"has_odd_permutation": True, "in_sl_char0": False, "transpositions": []},
        ),
        Step(
            "watanabe_converse",
            "Characteristic 0, no pseudoreflections and G not in SL(V): the invariant ring is not Gorenstein.",
            {"gorenstein_char0": False},
        ),
        Step(
            "stanley_palindromic",
            "A Cohen-Macaulay domain that is not Gorenstein has a non-palindromic numerator; "
            "checked against the computed numerator.",
            {**numerator, "palindromic": False},
        ),
        Step(
            "hilbert_char_independent",
            "V is a permutation representation, so the same Hilbert series and numerator hold at p = 2.",
            {"characteristic": 2, **numerator},
        ),
        Step(
            "braun_theorem_b",
            "At p = 2 every determinant is 1, so G lies in SL(V); a transposition-free permutation "
            "group has no pseudoreflections and so no transvections. If the ring were Cohen-Macaulay "
            "it would be Gorenstein and its numerator palindromic: contradiction. "
            "The invariant ring is not Cohen-Macaulay at p = 2.",
            {"in_sl_char2": True, "transvections": [], "palindromic": False},
        ),
    )
    return Certificate(Conclusion.NOT_CM_AT_P2, steps)


def verdict_other_characteristic(G: PermGroup, p: int) -> str:
    """What the rule engine can say at characteristic p other than 2."""
    if p == 0 or G.order % p:
        return "nonmodular: CM by Hochster-Eagon"
    return "no rule applies"
