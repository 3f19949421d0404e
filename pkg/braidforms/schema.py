"""JSON output models and the shipped schema."""

from collections.abc import Iterable
from typing import Any

from pydantic import BaseModel, ConfigDict

from .algebra.braid import Permutation
from .algebra.polynomial import LaurentPoly


class _Output(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")


class PolynomialModel(_Output):
    """A polynomial as varnames, sorted exponent/coefficient rows and text."""

    varnames: list[str]
    terms: list[list[int]]
    text: str

    @classmethod
    def of(cls, p: LaurentPoly) -> "PolynomialModel":
        return cls(**p.to_json(), text=p.render())


class HomflyResult(_Output):
    """Shared by `homfly`, `framed-homfly` and `oracle-homfly`."""

    braid: str
    strands: int
    invariant: str
    polynomial: PolynomialModel


class TraceResult(_Output):
    braid: str
    strands: int
    trace: PolynomialModel


class MFWResult(_Output):
    braid: str
    strands: int
    writhe: int
    window_ok: bool
    v_min: int | None
    v_max: int | None
    lower: PolynomialModel
    upper: PolynomialModel
    lower_sharp: bool
    upper_sharp: bool
    braid_index_bound: int


class InnerResult(_Output):
    a: str
    b: str
    strands: int
    side: str
    value: PolynomialModel


class GramResult(_Output):
    n: int
    basis: str
    side: str
    perms: list[list[int]]
    matrix: list[list[PolynomialModel]]
    identity: bool
    determinant: PolynomialModel | None = None


class ExpansionTerm(_Output):
    perm: list[int]
    coeff: PolynomialModel

    @classmethod
    def rows(
        cls, terms: Iterable[tuple[Permutation, LaurentPoly]]
    ) -> "list[ExpansionTerm]":
        """One row per basis permutation, in the order given."""
        return [cls(perm=list(p.image), coeff=PolynomialModel.of(c)) for p, c in terms]


class ExpansionResult(_Output):
    """ν-basis coefficients, plus the element itself in the ω basis."""

    braid: str
    strands: int
    element: list[ExpansionTerm]
    coefficients: list[ExpansionTerm]


class SharpnessResult(_Output):
    braid: str
    strands: int
    side: str
    sharp: bool
    column: PolynomialModel


class FrontResult(_Output):
    front: str
    events: list[str]


class FrontStatsResult(_Output):
    front: str
    C: int
    w: int
    tb: int
    crossing_signs: list[int]
    components: int


class RulingModel(_Output):
    switches: list[int]
    theta: int


class RulingResult(_Output):
    front: str
    polynomial: PolynomialModel
    rulings: list[RulingModel]


class SuiteResult(_Output):
    name: str
    passed: bool
    cases: int
    detail: str = ""


class SelfcheckReport(_Output):
    level: str
    seed: int
    passed: bool
    suites: list[SuiteResult]


OUTPUT_MODELS: dict[str, type[BaseModel]] = {
    "homfly": HomflyResult,
    "framed-homfly": HomflyResult,
    "oracle-homfly": HomflyResult,
    "trace": TraceResult,
    "mfw": MFWResult,
    "inner": InnerResult,
    "gram": GramResult,
    "expand": ExpansionResult,
    "mfw-sharp": SharpnessResult,
    "front-build": FrontResult,
    "front-stats": FrontStatsResult,
    "front-ruling": RulingResult,
    "selfcheck": SelfcheckReport,
}


def shipped_schema() -> dict[str, Any]:
    """JSON schema of every JSON-emitting subcommand."""
    return {
        "$schema": "https://json-schema.org/draft/2020-12/schema",
        "title": "braidforms output",
        "commands": {
            name: model.model_json_schema() for name, model in OUTPUT_MODELS.items()
        },
    }
