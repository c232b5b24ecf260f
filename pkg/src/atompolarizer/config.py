"""Run configuration: a JSON document with defaults and strict key checking.

Example::

    {
      "model": {"rabi": 50, "gamma2": 0},
      "probe": {"delta": 0},
      "sweep": {"axes": [{"parameter": "delta", "start": -50, "stop": 50, "count": 201}],
                "quantity": "left"},
      "malus": {"alpha": 1.0471975512, "n": 1000000, "seed": 1},
      "verify": {"draws": 10000, "seed": 7},
      "output": {"path": "out.csv", "format": "csv"}
    }
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field, fields

from .errors import ParseError, ValidationError
from .params import ModelParams, ProbeEnergy
from .sweep import QUANTITIES, SweepAxis

FORMATS = ("csv", "jsonl")


@dataclass(frozen=True)
class SweepConfig:
    axes: tuple[SweepAxis, ...] = ()
    quantity: str = "full"
    alpha: float = 0.0


@dataclass(frozen=True)
class MalusConfig:
    alpha: float = 0.0
    n: int = 100_000
    seed: int = 0
    z: float = 4.0
    ideal: bool = False


@dataclass(frozen=True)
class VerifyConfig:
    draws: int = 10_000
    seed: int = 0


@dataclass(frozen=True)
class OutputConfig:
    path: str | None = None
    format: str = "csv"


@dataclass(frozen=True)
class RunConfig:
    model: ModelParams = field(default_factory=ModelParams)
    probe_delta: float | None = 0.0
    probe_omega: float | None = None
    sweep: SweepConfig = field(default_factory=SweepConfig)
    malus: MalusConfig = field(default_factory=MalusConfig)
    verify: VerifyConfig = field(default_factory=VerifyConfig)
    output: OutputConfig = field(default_factory=OutputConfig)

    @property
    def probe(self) -> ProbeEnergy:
        if self.probe_omega is not None:
            return ProbeEnergy(self.probe_omega)
        return ProbeEnergy.from_detuning(self.model, self.probe_delta)

    def resolved(self) -> dict:
        """Fully resolved config as plain JSON-serialisable data."""
        probe = {"omega": self.probe_omega} if self.probe_omega is not None else {"delta": self.probe_delta}
        return {
            "model": self.model.as_dict(),
            "probe": probe,
            "sweep": {
                "axes": [asdict(a) for a in self.sweep.axes],
                "quantity": self.sweep.quantity,
                "alpha": self.sweep.alpha,
            },
            "malus": asdict(self.malus),
            "verify": asdict(self.verify),
            "output": asdict(self.output),
        }


def _number(key: str, value, *, integer: bool = False):
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ValidationError(key, f"expected a number, got {value!r}")
    if integer and (not float(value).is_integer()):
        raise ValidationError(key, f"expected an integer, got {value!r}")
    return int(value) if integer else float(value)


def _object(key: str, value, allowed) -> dict:
    if not isinstance(value, dict):
        raise ValidationError(key, "expected an object")
    for k in value:
        if k not in allowed:
            raise ValidationError(f"{key}.{k}" if key else k, "unknown key")
    return value


def _model(doc: dict) -> ModelParams:
    names = [f.name for f in fields(ModelParams)]
    doc = _object("model", doc, names)
    values = {k: _number(f"model.{k}", v) for k, v in doc.items()}
    if "omega2" in values and "omega3" not in values:
        values["omega3"] = values["omega2"]
    try:
        return ModelParams(**values)
    except ValueError as exc:
        bad = next((k for k in values if k in str(exc)), "model")
        raise ValidationError(f"model.{bad}" if bad != "model" else bad, str(exc)) from None


def _axis(key: str, doc) -> SweepAxis:
    doc = _object(key, doc, ("parameter", "start", "stop", "count"))
    missing = {"parameter", "start", "stop", "count"} - set(doc)
    if missing:
        raise ValidationError(key, f"missing {sorted(missing)}")
    try:
        return SweepAxis(str(doc["parameter"]), _number(f"{key}.start", doc["start"]),
                         _number(f"{key}.stop", doc["stop"]),
                         _number(f"{key}.count", doc["count"], integer=True))
    except ValueError as exc:
        if isinstance(exc, ValidationError):
            raise
        raise ValidationError(key, str(exc)) from None


def config_from_dict(doc: dict) -> RunConfig:
    doc = _object("", doc, ("model", "probe", "sweep", "malus", "verify", "output"))
    model = _model(doc.get("model", {}))

    probe = _object("probe", doc.get("probe", {}), ("omega", "delta"))
    if "omega" in probe and "delta" in probe:
        raise ValidationError("probe", "give either omega or delta, not both")
    probe_omega = _number("probe.omega", probe["omega"]) if "omega" in probe else None
    probe_delta = None if probe_omega is not None else _number("probe.delta", probe.get("delta", 0.0))

    s = _object("sweep", doc.get("sweep", {}), ("axes", "quantity", "alpha"))
    axes_doc = s.get("axes", [])
    if not isinstance(axes_doc, list) or len(axes_doc) > 2:
        raise ValidationError("sweep.axes", "expected a list of at most two axes")
    quantity = s.get("quantity", "full")
    if quantity not in QUANTITIES:
        raise ValidationError("sweep.quantity", f"expected one of {QUANTITIES}")
    sweep = SweepConfig(tuple(_axis(f"sweep.axes[{i}]", a) for i, a in enumerate(axes_doc)),
                        quantity, _number("sweep.alpha", s.get("alpha", 0.0)))

    m = _object("malus", doc.get("malus", {}), ("alpha", "n", "seed", "z", "ideal"))
    malus = MalusConfig(
        alpha=_number("malus.alpha", m.get("alpha", 0.0)),
        n=_number("malus.n", m.get("n", MalusConfig.n), integer=True),
        seed=_number("malus.seed", m.get("seed", 0), integer=True),
        z=_number("malus.z", m.get("z", 4.0)),
        ideal=bool(m.get("ideal", False)),
    )
    if malus.n < 1:
        raise ValidationError("malus.n", "must be positive")
    if not 0 <= malus.seed < 2**64:
        raise ValidationError("malus.seed", "must be an unsigned 64-bit integer")

    v = _object("verify", doc.get("verify", {}), ("draws", "seed"))
    verify = VerifyConfig(_number("verify.draws", v.get("draws", VerifyConfig.draws), integer=True),
                          _number("verify.seed", v.get("seed", 0), integer=True))
    if verify.draws < 1:
        raise ValidationError("verify.draws", "must be positive")

    o = _object("output", doc.get("output", {}), ("path", "format"))
    fmt = o.get("format", "csv")
    if fmt not in FORMATS:
        raise ValidationError("output.format", f"expected one of {FORMATS}")
    output = OutputConfig(o.get("path"), fmt)

    return RunConfig(model, probe_delta, probe_omega, sweep, malus, verify, output)


def parse_config(document: str) -> RunConfig:
    try:
        doc = json.loads(document) if document.strip() else {}
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from None
    return config_from_dict(doc)
