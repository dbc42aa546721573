"""Verification campaigns over grids of functions, intervals, m and q."""

from __future__ import annotations

import json
import logging
import math
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Any, Callable, Iterable, Optional

import jsonschema

from . import bounds as B
from .certify import Certificate, certify_m_convex, combine
from .core import ExponentPair, FunctionSpec, Interval, MParam, midpoint_gap, trapezoid_gap
from .errors import ConfigError, HadamardError, NonFiniteError, PreconditionError
from .functions import BUILTIN_NAMES, builtin
from .identity import lemma1_sides
from .means import prop2_bounds

log = logging.getLogger(__name__)

FAMILIES = ("T", "U", "V", "sandwich", "product", "means", "lemma1", "baselines")

CONFIG_SCHEMA: dict[str, Any] = {
    "type": "object",
    "additionalProperties": False,
    "required": ["functions", "intervals", "m_values"],
    "properties": {
        "functions": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["name"],
                "properties": {"name": {"enum": list(BUILTIN_NAMES)}},
                "additionalProperties": {"type": "number"},
            },
        },
        "intervals": {
            "type": "array",
            "items": {"type": "array", "items": {"type": "number"}, "minItems": 2, "maxItems": 2},
        },
        "m_values": {"type": "array", "items": {"type": "number"}},
        "exponents": {"type": "array", "items": {"type": "number"}},
        "families": {"type": "array", "items": {"enum": list(FAMILIES)}, "uniqueItems": True},
        "tolerances": {
            "type": "object",
            "additionalProperties": False,
            "properties": {
                "quad": {"type": "number", "exclusiveMinimum": 0},
                "slack": {"type": "number", "minimum": 0},
                "cert": {"type": "number", "exclusiveMinimum": 0},
                "grid_n": {"type": "integer", "minimum": 3},
            },
        },
        "output": {
            "type": "object",
            "additionalProperties": False,
            "properties": {"path": {"type": "string"}, "format": {"enum": ["json", "csv"]}},
        },
    },
}


@dataclass(frozen=True)
class CampaignConfig:
    functions: tuple[dict, ...]
    intervals: tuple[tuple[float, float], ...]
    m_values: tuple[float, ...]
    exponents: tuple[float, ...] = (1.0,)
    families: tuple[str, ...] = ("T",)
    quad_tol: float = 1e-10
    slack_tol: float = 1e-8
    cert_tol: float = 1e-9
    grid_n: int = 33
    output_path: Optional[str] = None
    output_format: str = "json"

    def __post_init__(self) -> None:
        for i, m in enumerate(self.m_values):
            if not (math.isfinite(m) and 0.0 < m <= 1.0):
                raise ConfigError(f"field m_values[{i}]: m must lie in (0, 1], got {m}")
        for i, (a, b) in enumerate(self.intervals):
            if not (0.0 <= a < b and math.isfinite(b)):
                raise ConfigError(f"field intervals[{i}]: need 0 <= a < b, got ({a}, {b})")
        for i, q in enumerate(self.exponents):
            if not (math.isfinite(q) and q >= 1.0):
                raise ConfigError(f"field exponents[{i}]: q must be >= 1, got {q}")
        for i, fam in enumerate(self.families):
            if fam not in FAMILIES:
                raise ConfigError(f"field families[{i}]: unknown family {fam!r}")
        for i, entry in enumerate(self.functions):
            try:
                builtin(entry)
            except ConfigError as exc:
                raise ConfigError(f"field functions[{i}]: {exc}") from None
        if self.output_format not in ("json", "csv"):
            raise ConfigError(f"field output.format: expected json or csv, got {self.output_format!r}")

    @classmethod
    def from_dict(cls, doc: dict) -> "CampaignConfig":
        validator = jsonschema.Draft7Validator(CONFIG_SCHEMA)
        errors = sorted(validator.iter_errors(doc), key=lambda e: list(e.absolute_path))
        if errors:
            err = errors[0]
            where = _json_path(err.absolute_path) or "<root>"
            raise ConfigError(f"field {where}: {err.message}")
        tol = doc.get("tolerances", {})
        out = doc.get("output", {})
        return cls(
            functions=tuple(dict(f) for f in doc["functions"]),
            intervals=tuple((float(a), float(b)) for a, b in doc["intervals"]),
            m_values=tuple(float(m) for m in doc["m_values"]),
            exponents=tuple(float(q) for q in doc.get("exponents", [1.0])),
            families=tuple(doc.get("families", ["T"])),
            quad_tol=float(tol.get("quad", 1e-10)),
            slack_tol=float(tol.get("slack", 1e-8)),
            cert_tol=float(tol.get("cert", 1e-9)),
            grid_n=int(tol.get("grid_n", 33)),
            output_path=out.get("path"),
            output_format=out.get("format", "json"),
        )

    def override(self, **changes: Any) -> "CampaignConfig":
        return replace(self, **{k: v for k, v in changes.items() if v is not None})


def _json_path(parts: Iterable) -> str:
    out = ""
    for p in parts:
        out += f"[{p}]" if isinstance(p, int) else (f".{p}" if out else str(p))
    return out


def load_config(path: str | Path) -> CampaignConfig:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigError(f"{path}: cannot read config ({exc.strerror})") from None
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"{path}: line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    if not isinstance(doc, dict):
        raise ConfigError(f"{path}: top level must be a JSON object")
    try:
        return CampaignConfig.from_dict(doc)
    except ConfigError as exc:
        raise ConfigError(f"{path}: {exc}") from None


@dataclass(frozen=True)
class VerificationRecord:
    """One grid point of a campaign.

    ``slack`` is oriented so that a nonnegative value means the asserted
    inequality holds; ``holds`` is ``None`` for skipped points and ``False``
    for errored ones.
    """

    function: str
    a: float
    b: float
    m: float
    q: float
    family: str
    p: Optional[float] = None
    variants: tuple[Optional[float], ...] = (None, None, None, None)
    minimum: Optional[float] = None
    argmin: Optional[int] = None
    lhs: Optional[float] = None
    slack: Optional[float] = None
    holds: Optional[bool] = None
    status: str = "ok"
    reason: str = ""
    certificate: str = ""
    approx_derivative: bool = False

    def sort_key(self) -> tuple:
        return (self.function, self.a, self.b, self.m, self.q, self.family)


@dataclass
class CampaignSummary:
    passed: int = 0
    failed: int = 0
    skipped: int = 0
    errored: int = 0

    @classmethod
    def of(cls, records: Iterable[VerificationRecord]) -> "CampaignSummary":
        s = cls()
        for r in records:
            if r.status == "skipped":
                s.skipped += 1
            elif r.status == "errored":
                s.errored += 1
            elif r.holds:
                s.passed += 1
            else:
                s.failed += 1
        return s

    @property
    def total(self) -> int:
        return self.passed + self.failed + self.skipped + self.errored

    def __str__(self) -> str:
        return (
            f"{self.total} records: {self.passed} pass, {self.failed} fail, "
            f"{self.skipped} skipped, {self.errored} errored"
        )


class _Skip(Exception):
    pass


@dataclass
class _Point:
    spec: FunctionSpec
    iv: Interval
    m: float
    q: float
    cfg: CampaignConfig
    # shared by every point of a campaign; keys carry the function label and geometry
    cache: dict = field(default_factory=dict)

    def derivative_power_cert(self, q: float, m: float) -> Certificate:
        hi = self.iv.b / m
        key = ("dpow", self.spec.label, hi, q, m)
        if key not in self.cache:
            spec = self.spec
            g = lambda x: abs(spec.derivative(x)) ** q  # noqa: E731
            self.cache[key] = certify_m_convex(
                g, m, hi, self.cfg.grid_n, self.cfg.cert_tol, relative=True
            )
        return self.cache[key]

    def require(self, cert: Certificate, what: str) -> Certificate:
        if not cert.passed:
            raise _Skip(f"hypothesis not certified: {what} [{cert.summary()}]")
        return cert

    def midpoint_gap(self) -> float:
        key = ("mid", self.spec.label, self.iv)
        if key not in self.cache:
            self.cache[key] = midpoint_gap(self.spec, self.iv, self.cfg.quad_tol)
        return self.cache[key]


def _family_T(pt: _Point) -> dict:
    cert = pt.require(pt.derivative_power_cert(1.0, pt.m), "|f'| m-convex on [0, b/m]")
    bs = B.t_bounds(pt.spec, pt.iv, pt.m)
    return _boundset_fields(bs, pt.midpoint_gap(), cert)


def _family_U(pt: _Point) -> dict:
    if pt.q <= 1.0:
        raise _Skip("U family needs q > 1 (conjugate p is infinite at q = 1)")
    exps = ExponentPair.from_q(pt.q)
    cert = pt.require(pt.derivative_power_cert(pt.q, pt.m), "|f'|^q m-convex on [0, b/m]")
    tight, loose = B.u_bounds(pt.spec, pt.iv, pt.m, exps)
    out = _boundset_fields(tight, pt.midpoint_gap(), cert)
    out["p"] = exps.p
    out["reason"] = f"loose_min={loose.minimum!r}"
    return out


def _family_V(pt: _Point) -> dict:
    cert = pt.require(pt.derivative_power_cert(pt.q, pt.m), "|f'|^q m-convex on [0, b/m]")
    bs = B.v_bounds(pt.spec, pt.iv, pt.m, pt.q)
    return _boundset_fields(bs, pt.midpoint_gap(), cert)


def _boundset_fields(bs: B.BoundSet, lhs: float, cert: Certificate) -> dict:
    return dict(
        variants=bs.values,
        minimum=bs.minimum,
        argmin=bs.argmin,
        lhs=lhs,
        slack=bs.minimum - lhs,
        certificate=cert.summary(),
    )


def _family_sandwich(pt: _Point) -> dict:
    hi = pt.iv.b / pt.m
    f = pt.spec
    cert = pt.require(
        certify_m_convex(f, pt.m, hi, pt.cfg.grid_n, pt.cfg.cert_tol, relative=True),
        "f m-convex on [0, b/m]",
    )
    s = B.dragomir_sandwich(f, pt.iv, pt.m, pt.cfg.quad_tol)
    return dict(
        variants=(s.left, s.middle, s.right, None),
        lhs=s.middle,
        slack=s.slack,
        certificate=cert.summary(),
    )


def _family_product(pt: _Point) -> dict:
    if pt.q <= 1.0:
        raise _Skip("product family needs conjugate exponents, q > 1")
    exps = ExponentPair.from_q(pt.q)
    f = pt.spec
    try:
        res = B.product_lower_bound(
            f, f, pt.iv, pt.m, exps, pt.cfg.quad_tol, pt.cfg.grid_n, pt.cfg.cert_tol, relative_cert=True
        )
    except PreconditionError as exc:
        raise _Skip(f"hypothesis not certified: {exc}") from None
    return dict(
        p=exps.p,
        variants=(res.lhs, res.rhs, None, None),
        minimum=res.rhs,
        lhs=res.lhs,
        slack=res.slack,
        reason=f"direction {res.direction.value}",
        certificate=res.certificate.summary() if res.certificate else "",
    )


def _family_means(pt: _Point, entry: dict) -> dict:
    n = entry.get("n")
    if entry.get("name") != "power" or n is None or int(n) != n or abs(n) < 2:
        raise _Skip("means family applies to x^n with integer |n| >= 2")
    if pt.iv.a <= 0:
        raise _Skip("means family needs a > 0")
    cert = pt.require(pt.derivative_power_cert(pt.q, pt.m), "|f'|^q m-convex on [0, b/m]")
    res = prop2_bounds(pt.iv.a, pt.iv.b, int(n), 1.0, pt.m, pt.q, pt.cfg.quad_tol)
    return _boundset_fields(res.bounds, res.lhs, cert)


def _family_lemma1(pt: _Point) -> dict:
    for x in (pt.iv.a, pt.iv.b):
        try:
            pt.spec.derivative(x)
        except NonFiniteError:
            raise _Skip(f"f' is not finite at x={x!r}; the identity needs f' integrable on [a, b]") from None
    sides = lemma1_sides(pt.spec, pt.iv, pt.cfg.quad_tol)
    threshold = 10.0 * pt.cfg.quad_tol
    return dict(
        variants=(sides.lhs, sides.rhs, None, None),
        minimum=threshold,
        lhs=sides.residual,
        slack=threshold - sides.residual,
    )


def _family_baselines(pt: _Point) -> dict:
    f, iv, q = pt.spec, pt.iv, pt.q
    g = lambda x: abs(f.derivative(x)) ** q  # noqa: E731
    convex = certify_m_convex(g, 1.0, iv.b, pt.cfg.grid_n, pt.cfg.cert_tol, lower=iv.a, relative=True)
    cert = pt.require(
        combine(convex, pt.derivative_power_cert(q, pt.m)),
        "|f'|^q convex on [a, b] and m-convex on [0, b/m]",
    )
    l0 = B.classical_trapezoid_bound(f, iv)
    l1, l2 = B.pearce_pecaric_bounds(f, iv, q)
    bak = B.bakula_midpoint_bound(f, iv, pt.m, q)
    trap = trapezoid_gap(f, iv, pt.cfg.quad_tol)
    mid = pt.midpoint_gap()
    return dict(
        variants=(l0, l1, l2, bak),
        lhs=mid,
        slack=min(l0 - trap, l1 - trap, l2 - mid, bak - mid),
        reason=f"trapezoid_gap={trap!r}",
        certificate=cert.summary(),
    )


_HANDLERS: dict[str, Callable[[_Point], dict]] = {
    "T": _family_T,
    "U": _family_U,
    "V": _family_V,
    "sandwich": _family_sandwich,
    "product": _family_product,
    "lemma1": _family_lemma1,
    "baselines": _family_baselines,
}


def run_campaign(config: CampaignConfig) -> list[VerificationRecord]:
    """Evaluate every grid point; one record per (function, interval, m, q, family)."""
    records: list[VerificationRecord] = []
    cache: dict = {}
    for entry in config.functions:
        for a, b in config.intervals:
            for m in config.m_values:
                spec = builtin(entry, upper=b / m)
                iv = Interval(a, b)
                for q in config.exponents:
                    pt = _Point(spec, iv, m, q, config, cache)
                    for fam in config.families:
                        records.append(_evaluate(pt, fam, entry))
    records.sort(key=VerificationRecord.sort_key)
    return records


def _evaluate(pt: _Point, family: str, entry: dict) -> VerificationRecord:
    base = dict(
        function=pt.spec.label, a=pt.iv.a, b=pt.iv.b, m=pt.m, q=pt.q, family=family,
        approx_derivative=pt.spec.approximate_derivative,
    )
    try:
        if family == "means":
            fields = _family_means(pt, entry)
        else:
            fields = _HANDLERS[family](pt)
    except _Skip as skip:
        return VerificationRecord(**base, status="skipped", reason=str(skip))
    except (HadamardError, ArithmeticError, ValueError) as exc:
        log.warning("errored point %s: %s", base, exc)
        return VerificationRecord(
            **base, status="errored", holds=False, reason=f"{type(exc).__name__}: {exc}"
        )
    variants = tuple(fields.pop("variants", (None,) * 4))
    holds = fields["slack"] >= -pt.cfg.slack_tol
    return VerificationRecord(**base, variants=variants, holds=holds, **fields)
