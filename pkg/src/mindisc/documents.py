"""
JSON wire format for curves and reduction results.

Every integer is written as a decimal string so that no consumer loses
precision.  Polynomial coefficients are listed constant term first and the
list carries ``"order": "ascending"``; ``"descending"`` is accepted on input.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Optional, Union

from .arith import factorize
from .elliptic import WeierstrassEquation, c4_c6, laska_minimize
from .errors import DomainError
from .forms import BinaryForm, discriminant
from .superelliptic import (
    CERTIFIED,
    INCONCLUSIVE,
    FactoredIdeal,
    SuperellipticCurve,
    global_minimal_discriminant,
    minimality_certificate,
    reduce,
)

ELLIPTIC_WEIGHT = 12


def parse_int(value, what: str = "value") -> int:
    if isinstance(value, bool):
        raise DomainError(f"{what}: expected an integer, got {value!r}")
    if isinstance(value, int):
        return value
    if isinstance(value, str):
        text = value.strip()
        body = text[1:] if text[:1] in "+-" else text
        if body.isdigit() and body.isascii():
            return int(text)
    raise DomainError(f"{what}: expected an integer, got {value!r}")


def _int_list(value, what: str) -> list[int]:
    if not isinstance(value, list):
        raise DomainError(f"{what}: expected a list, got {value!r}")
    return [parse_int(v, f"{what}[{i}]") for i, v in enumerate(value)]


def _ascending(doc: dict, key: str = "f") -> list[int]:
    coeffs = _int_list(doc.get(key), key)
    order = doc.get("order", "ascending")
    if order == "descending":
        coeffs.reverse()
    elif order != "ascending":
        raise DomainError(f"order must be 'ascending' or 'descending', got {order!r}")
    if not coeffs:
        raise DomainError(f"{key}: empty coefficient list")
    return coeffs


@dataclass(frozen=True)
class CurveDocument:
    kind: str
    a: Optional[tuple[int, ...]] = None
    n: Optional[int] = None
    f: Optional[tuple[int, ...]] = None
    point: Optional[tuple[int, ...]] = None

    @classmethod
    def from_dict(cls, doc) -> CurveDocument:
        if not isinstance(doc, dict):
            raise DomainError("document must be a JSON object")
        kind = doc.get("kind")
        if kind == "elliptic":
            a = _int_list(doc.get("a"), "a")
            if len(a) != 5:
                raise DomainError(f"a: expected 5 coefficients, got {len(a)}")
            return cls("elliptic", a=tuple(a))
        if kind == "superelliptic":
            point = doc.get("point")
            return cls(
                "superelliptic",
                n=parse_int(doc.get("n"), "n"),
                f=tuple(_ascending(doc)),
                point=None if point is None else tuple(_int_list(point, "point")),
            )
        if kind == "form":
            return cls("form", f=tuple(_ascending(doc)))
        raise DomainError(f"unknown kind {kind!r}")

    def to_dict(self) -> dict:
        if self.kind == "elliptic":
            return {"kind": "elliptic", "a": [str(x) for x in self.a]}
        out = {"kind": self.kind}
        if self.kind == "superelliptic":
            out["n"] = str(self.n)
        out["f"] = [str(x) for x in self.f]
        out["order"] = "ascending"
        if self.point is not None:
            out["point"] = [str(x) for x in self.point]
        return out

    @classmethod
    def from_elliptic(cls, E: WeierstrassEquation) -> CurveDocument:
        return cls("elliptic", a=E.ainvs)

    @classmethod
    def from_superelliptic(cls, C: SuperellipticCurve) -> CurveDocument:
        return cls("superelliptic", n=C.n, f=C.coeffs, point=C.point)

    def to_elliptic(self) -> WeierstrassEquation:
        return WeierstrassEquation(*self.a)

    def to_superelliptic(self) -> SuperellipticCurve:
        return SuperellipticCurve.from_ascending(self.n, self.f, self.point)

    def to_form(self) -> BinaryForm:
        return BinaryForm.from_ascending(self.f)


def _ideal_to_dict(ideal: FactoredIdeal) -> dict:
    return {
        "sign": str(ideal.sign),
        "factors": [[str(p), str(e)] for p, e in sorted(ideal.factors.items())],
    }


def _ideal_from_dict(doc) -> FactoredIdeal:
    if not isinstance(doc, dict) or not isinstance(doc.get("factors"), list):
        raise DomainError("malformed factored ideal")
    factors = {}
    for pair in doc["factors"]:
        if not isinstance(pair, list) or len(pair) != 2:
            raise DomainError(f"malformed factor {pair!r}")
        factors[parse_int(pair[0], "prime")] = parse_int(pair[1], "exponent")
    return FactoredIdeal(parse_int(doc.get("sign"), "sign"), factors)


@dataclass(frozen=True)
class ResultDocument:
    input: CurveDocument
    minimal_model: CurveDocument
    transformation: tuple[int, ...]
    discriminant_before: int
    discriminant_after: int
    factored_minimal_discriminant: FactoredIdeal
    certificate: Optional[dict[int, str]] = None

    @property
    def scaling_weight(self) -> int:
        if self.input.kind == "elliptic":
            return ELLIPTIC_WEIGHT
        d = len(self.input.f) - 1
        return self.input.n * d * (d - 1)

    def check(self) -> None:
        """Assert the discriminant scaling relation."""
        u = self.transformation[0]
        if self.discriminant_after * u**self.scaling_weight != self.discriminant_before:
            raise AssertionError("discriminant scaling relation violated")

    def to_dict(self) -> dict:
        names = ("u", "r", "s", "t") if len(self.transformation) == 4 else ("u",)
        out = {
            "input": self.input.to_dict(),
            "minimal_model": self.minimal_model.to_dict(),
            "transformation": {k: str(v) for k, v in zip(names, self.transformation)},
            "discriminant_before": str(self.discriminant_before),
            "discriminant_after": str(self.discriminant_after),
            "factored_minimal_discriminant": _ideal_to_dict(self.factored_minimal_discriminant),
        }
        if self.certificate is not None:
            out["certificate"] = {str(p): s for p, s in sorted(self.certificate.items())}
        return out

    @classmethod
    def from_dict(cls, doc) -> ResultDocument:
        if not isinstance(doc, dict):
            raise DomainError("result must be a JSON object")
        try:
            tr = doc["transformation"]
            names = ("u", "r", "s", "t") if "r" in tr else ("u",)
            cert = doc.get("certificate")
            if cert is not None:
                if any(s not in (CERTIFIED, INCONCLUSIVE) for s in cert.values()):
                    raise DomainError("unknown certificate status")
                cert = {parse_int(p, "prime"): s for p, s in cert.items()}
            return cls(
                input=CurveDocument.from_dict(doc["input"]),
                minimal_model=CurveDocument.from_dict(doc["minimal_model"]),
                transformation=tuple(parse_int(tr[k], k) for k in names),
                discriminant_before=parse_int(doc["discriminant_before"]),
                discriminant_after=parse_int(doc["discriminant_after"]),
                factored_minimal_discriminant=_ideal_from_dict(
                    doc["factored_minimal_discriminant"]
                ),
                certificate=cert,
            )
        except (KeyError, TypeError, AttributeError) as exc:
            raise DomainError(f"malformed result document: {exc}") from None


def emit(doc: Union[CurveDocument, ResultDocument]) -> str:
    return json.dumps(doc.to_dict(), separators=(",", ":"))


def parse_json(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise DomainError(f"invalid JSON: {exc}") from None


def _lemma_certificate(delta: int, weight: int) -> dict[int, str]:
    fac = factorize(delta)
    return {p: CERTIFIED if e < weight else INCONCLUSIVE for p, e in fac.factors.items()}


def minimize_elliptic(doc: CurveDocument, certificate: bool = False) -> ResultDocument:
    if doc.kind != "elliptic":
        raise DomainError(f"expected an elliptic curve, got kind {doc.kind!r}")
    E = doc.to_elliptic()
    Emin, T = laska_minimize(E)
    delta = Emin.discriminant
    return ResultDocument(
        input=doc,
        minimal_model=CurveDocument.from_elliptic(Emin),
        transformation=T.as_tuple(),
        discriminant_before=E.discriminant,
        discriminant_after=delta,
        factored_minimal_discriminant=FactoredIdeal.from_factorization(factorize(delta)),
        certificate=_lemma_certificate(delta, ELLIPTIC_WEIGHT) if certificate else None,
    )


def minimize_superelliptic(doc: CurveDocument, certificate: bool = False) -> ResultDocument:
    if doc.kind != "superelliptic":
        raise DomainError(f"expected a superelliptic curve, got kind {doc.kind!r}")
    C = doc.to_superelliptic()
    reduced, scaling = reduce(C)
    return ResultDocument(
        input=doc,
        minimal_model=CurveDocument.from_superelliptic(reduced),
        transformation=(scaling.u,),
        discriminant_before=scaling.old_delta,
        discriminant_after=scaling.new_delta,
        factored_minimal_discriminant=global_minimal_discriminant(reduced),
        certificate=minimality_certificate(reduced) if certificate else None,
    )


def document_discriminant(doc: CurveDocument) -> int:
    """Discriminant of any document; zero is allowed here."""
    if doc.kind == "elliptic":
        c4, c6 = c4_c6(doc.a)
        return (c4**3 - c6**2) // 1728
    return discriminant(doc.to_form()).numerator

