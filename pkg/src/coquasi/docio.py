"""The JSON structure-constant interchange format (schema "coquasi-doc/1").

A document is {"format": "coquasi-doc/1", "kind": ..., "field":
{"cyclotomic_order": n}, "payload": {...}}.  Scalars are encoded as strings
"c0 + c1*z + ..." (z the root of unity) or as coefficient lists of rational
strings.  Hosts and other sub-structures may be referenced by "builtin:" URI,
by a path to another document, or inlined as a nested document object.
"""

from __future__ import annotations

import json
import os

import numpy as np

from . import linalg
from .catalog import (H2Datum, H3Datum, builtin, check_h2_datum, check_h3_datum)
from .cleft import CleavingSystem, check_cleaving
from .comodule import ComoduleAlgebra, check_comodule_algebra
from .crossed import CrossedSystem, check_crossed_system
from .cyclotomic import FieldSpec
from .errors import SchemaError, UnknownName
from .hopf_modules import CoquasiHopfModule, check_hopf_module
from .linear import Algebra, Coalgebra, Functional, Space, check_algebra
from .report import Report
from .structures import (CoquasiBialgebra, CoquasiHopf, Twist,
                         check_coquasi_bialgebra, check_coquasi_hopf)

FORMAT = "coquasi-doc/1"

KINDS = ("algebra", "coquasi_bialgebra", "coquasi_hopf", "comodule_algebra",
         "crossed_system", "cleaving_system", "hopf_module", "h2_datum",
         "h3_datum", "twist")


def normalize_kind(kind: str) -> str:
    k = kind.replace("-", "_")
    if k not in KINDS:
        raise SchemaError(f"unknown document kind {kind!r}")
    return k


# -- scalar and tensor codecs ---------------------------------------------------


def parse_scalar(field: FieldSpec, value):
    if isinstance(value, str):
        return field.parse(value)
    if isinstance(value, (int,)):
        return field.scalar(value)
    if isinstance(value, list):
        return field.from_coeffs([_fraction_of(x) for x in value])
    raise SchemaError(f"cannot parse scalar {value!r}")


def _fraction_of(x):
    from fractions import Fraction
    try:
        return Fraction(x)
    except ZeroDivisionError as exc:
        from .errors import DivisionByZero
        raise DivisionByZero(f"zero denominator in {x!r}") from exc


def parse_tensor(field: FieldSpec, nested, shape: tuple[int, ...]) -> np.ndarray:
    arr = linalg.obj_zeros(shape, field)
    _fill_tensor(field, arr, nested, (), shape)
    return arr


def _fill_tensor(field, arr, nested, idx, shape):
    if len(idx) == len(shape):
        arr[idx] = parse_scalar(field, nested)
        return
    if not isinstance(nested, list) or len(nested) != shape[len(idx)]:
        raise SchemaError(f"tensor shape mismatch at {idx}: expected {shape}")
    for i, sub in enumerate(nested):
        _fill_tensor(field, arr, sub, idx + (i,), shape)


def emit_tensor(field: FieldSpec, arr):
    if isinstance(arr, np.ndarray):
        return [emit_tensor(field, arr[i]) for i in range(arr.shape[0])]
    return field.format(arr)


# -- document assembly ------------------------------------------------------------


def _algebra_from_payload(field: FieldSpec, payload: dict) -> Algebra:
    labels = tuple(payload["labels"])
    d = len(labels)
    mult = parse_tensor(field, payload["mult"], (d, d, d))
    unit = parse_tensor(field, payload["unit"], (d,))
    return Algebra(Space(labels), mult, unit)


def _algebra_payload(field: FieldSpec, alg: Algebra) -> dict:
    return {"labels": list(alg.space.labels),
            "mult": emit_tensor(field, alg.mult),
            "unit": emit_tensor(field, alg.unit)}


def _bialgebra_from_payload(field: FieldSpec, payload: dict) -> CoquasiBialgebra:
    labels = tuple(payload["labels"])
    d = len(labels)
    sp = Space(labels)
    co = Coalgebra(sp, parse_tensor(field, payload["comult"], (d, d, d)),
                   parse_tensor(field, payload["counit"], (d,)))
    mult = parse_tensor(field, payload["mult"], (d, d, d))
    unit = parse_tensor(field, payload["unit"], (d,))
    omega = Functional((sp,) * 3, parse_tensor(field, payload["omega"], (d, d, d)))
    omega_inv = None
    if "omega_inv" in payload:
        omega_inv = Functional((sp,) * 3, parse_tensor(field, payload["omega_inv"], (d, d, d)))
    return CoquasiBialgebra(co, mult, unit, omega, omega_inv)


def _hopf_from_payload(field: FieldSpec, payload: dict) -> CoquasiHopf:
    base = _bialgebra_from_payload(field, payload)
    d = base.dim
    sp = base.space
    antipode = parse_tensor(field, payload["antipode"], (d, d))
    alpha = Functional((sp,), parse_tensor(field, payload["alpha"], (d,)))
    beta = Functional((sp,), parse_tensor(field, payload["beta"], (d,)))
    twist_f = None
    if "twist_f" in payload:
        tf = payload["twist_f"]
        twist_f = (Functional((sp,) * 2, parse_tensor(field, tf["f"], (d, d))),
                   Functional((sp,) * 2, parse_tensor(field, tf["f_inv"], (d, d))))
    return CoquasiHopf(base.coalgebra, base.mult, base.unit, base.omega,
                       antipode, alpha, beta, omega_inv=base.omega_inv,
                       twist_f=twist_f)


def _resolve_host(field: FieldSpec, ref, base_dir: str):
    if isinstance(ref, str):
        if ref.startswith("builtin:"):
            return load_builtin(ref, field)
        kind, obj = load_document(os.path.join(base_dir, ref))
        if kind not in ("coquasi_hopf", "coquasi_bialgebra"):
            raise SchemaError(f"host reference {ref!r} is a {kind}")
        return obj
    if isinstance(ref, dict):
        kind, obj = _object_from_document(ref, base_dir)
        if kind not in ("coquasi_hopf", "coquasi_bialgebra"):
            raise SchemaError("inline host must be a coquasi bialgebra or Hopf document")
        return obj
    raise SchemaError(f"cannot resolve host reference {ref!r}")


def load_builtin(uri: str, field: FieldSpec | None = None):
    """builtin:H2, builtin:H3, builtin:C<n>, builtin:group_Cn?n=k,
    builtin:group_C2n_twisted?n=k."""
    name = uri[len("builtin:"):]
    params: dict[str, int] = {}
    if "?" in name:
        name, qs = name.split("?", 1)
        for part in qs.split("&"):
            k, v = part.split("=")
            params[k] = int(v)
    if name in ("H2", "H3"):
        return builtin(name, field=field)
    if name.startswith("C") and name[1:].isdigit():
        return builtin("group_Cn", n=int(name[1:]), field=field)
    if name in ("group_Cn", "group_C2n_twisted"):
        return builtin(name, n=params.get("n"), field=field)
    raise UnknownName(uri)


def _comodule_from_payload(field: FieldSpec, payload: dict, base_dir: str) -> ComoduleAlgebra:
    host = _resolve_host(field, payload["host"], base_dir)
    labels = tuple(payload["labels"])
    d = len(labels)
    mult = parse_tensor(field, payload["mult"], (d, d, d))
    unit = parse_tensor(field, payload["unit"], (d,))
    coaction = parse_tensor(field, payload["coaction"], (d, d, host.dim))
    return ComoduleAlgebra(Space(labels), mult, unit, coaction, host)


def _crossed_from_payload(field: FieldSpec, payload: dict, base_dir: str) -> CrossedSystem:
    host = _resolve_host(field, payload["host"], base_dir)
    R = _algebra_from_payload(field, payload["R"])
    action = parse_tensor(field, payload["action"], (host.dim, R.dim, R.dim))
    sigma = Functional((host.space,) * 2,
                       parse_tensor(field, payload["sigma"], (host.dim, host.dim, R.dim)), R)
    sigma_inv = None
    if "sigma_inv" in payload:
        sigma_inv = Functional((host.space,) * 2,
                               parse_tensor(field, payload["sigma_inv"],
                                            (host.dim, host.dim, R.dim)), R)
    return CrossedSystem(R, host, action, sigma, sigma_inv)


def _object_from_document(doc: dict, base_dir: str):
    if doc.get("format") != FORMAT:
        raise SchemaError(f"unsupported document format {doc.get('format')!r}")
    kind = normalize_kind(doc["kind"])
    field = FieldSpec(int(doc.get("field", {}).get("cyclotomic_order", 1)))
    payload = doc["payload"]
    if kind == "algebra":
        return kind, _algebra_from_payload(field, payload)
    if kind == "coquasi_bialgebra":
        return kind, _bialgebra_from_payload(field, payload)
    if kind == "coquasi_hopf":
        return kind, _hopf_from_payload(field, payload)
    if kind == "comodule_algebra":
        return kind, _comodule_from_payload(field, payload, base_dir)
    if kind == "crossed_system":
        return kind, _crossed_from_payload(field, payload, base_dir)
    if kind == "cleaving_system":
        inner = payload["comodule_algebra"]
        if isinstance(inner, str):
            k2, A = load_document(os.path.join(base_dir, inner))
        else:
            k2, A = _object_from_document(inner, base_dir)
        if k2 != "comodule_algebra":
            raise SchemaError("cleaving system needs a comodule algebra")
        gamma = parse_tensor(field, payload["gamma"], (A.dim, A.host.dim))
        delta = parse_tensor(field, payload["delta"], (A.dim, A.host.dim))
        return kind, CleavingSystem(A, gamma, delta)
    if kind == "hopf_module":
        inner = payload["crossed_system"]
        if isinstance(inner, str):
            k2, cs = load_document(os.path.join(base_dir, inner))
        else:
            k2, cs = _object_from_document(inner, base_dir)
        if k2 != "crossed_system":
            raise SchemaError("module document needs a crossed system")
        labels = tuple(payload["labels"])
        d = len(labels)
        r_action = parse_tensor(field, payload["r_action"], (d, cs.R.dim, d))
        coaction = parse_tensor(field, payload["coaction"], (d, d, cs.host.dim))
        h_action = parse_tensor(field, payload["h_action"], (d, cs.host.dim, d))
        return kind, CoquasiHopfModule(Space(labels), r_action, coaction, h_action, cs)
    if kind == "h2_datum":
        B = _algebra_from_payload(field, payload["B"])
        F = parse_tensor(field, payload["F"], (B.dim, B.dim))
        c = parse_tensor(field, payload["c"], (B.dim,))
        return kind, H2Datum(B, F, c)
    if kind == "h3_datum":
        B = _algebra_from_payload(field, payload["B"])
        F = parse_tensor(field, payload["F"], (B.dim, B.dim))
        G = parse_tensor(field, payload["G"], (B.dim, B.dim))
        vecs = {k: parse_tensor(field, payload[k], (B.dim,)) for k in ("u1", "u2", "v1", "v2")}
        return kind, H3Datum(B, F, G, **vecs)
    if kind == "twist":
        host = _resolve_host(field, payload["host"], base_dir)
        tau = parse_tensor(field, payload["tau"], (host.dim, host.dim))
        return kind, Twist.from_values(host, tau)
    raise SchemaError(f"unhandled kind {kind}")


def load_document(path: str):
    with open(path, "r", encoding="utf-8") as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise SchemaError(f"invalid JSON in {path}: {exc}") from exc
    return _object_from_document(doc, os.path.dirname(os.path.abspath(path)))


def load_target(target: str, kind: str | None = None, field: FieldSpec | None = None):
    """A path or a builtin: URI; verifies the expected kind when given."""
    if target.startswith("builtin:"):
        obj = load_builtin(target, field)
        got = kind_of(obj)
    else:
        got, obj = load_document(target)
    if kind is not None and normalize_kind(kind) != got:
        raise SchemaError(f"expected kind {kind}, target is {got}")
    return got, obj


def kind_of(obj) -> str:
    if isinstance(obj, CoquasiHopf):
        return "coquasi_hopf"
    if isinstance(obj, CoquasiBialgebra):
        return "coquasi_bialgebra"
    if isinstance(obj, ComoduleAlgebra):
        return "comodule_algebra"
    if isinstance(obj, CrossedSystem):
        return "crossed_system"
    if isinstance(obj, CleavingSystem):
        return "cleaving_system"
    if isinstance(obj, CoquasiHopfModule):
        return "hopf_module"
    if isinstance(obj, H2Datum):
        return "h2_datum"
    if isinstance(obj, H3Datum):
        return "h3_datum"
    if isinstance(obj, Twist):
        return "twist"
    if isinstance(obj, Algebra):
        return "algebra"
    raise SchemaError(f"cannot determine document kind of {type(obj).__name__}")


# -- serialization ---------------------------------------------------------------


def to_document(obj, host_ref=None) -> dict:
    """Serialize a structure back to a document.  host_ref may replace an
    inline host payload with a reference string."""
    kind = kind_of(obj)
    if kind in ("coquasi_bialgebra", "coquasi_hopf"):
        field = obj.field()
        payload = {
            "labels": list(obj.space.labels),
            "comult": emit_tensor(field, obj.comult),
            "counit": emit_tensor(field, obj.counit),
            "mult": emit_tensor(field, obj.mult),
            "unit": emit_tensor(field, obj.unit),
            "omega": emit_tensor(field, obj.omega.values),
            "omega_inv": emit_tensor(field, obj.omega_inv.values),
        }
        if kind == "coquasi_hopf":
            payload["antipode"] = emit_tensor(field, obj.antipode)
            payload["alpha"] = emit_tensor(field, obj.alpha.values)
            payload["beta"] = emit_tensor(field, obj.beta.values)
            if obj.twist_f is not None:
                payload["twist_f"] = {"f": emit_tensor(field, obj.twist_f[0].values),
                                      "f_inv": emit_tensor(field, obj.twist_f[1].values)}
    elif kind == "algebra":
        field = obj.field()
        payload = _algebra_payload(field, obj)
    elif kind == "comodule_algebra":
        field = obj.field()
        payload = {
            "host": host_ref if host_ref is not None else to_document(obj.host),
            "labels": list(obj.space.labels),
            "mult": emit_tensor(field, obj.mult),
            "unit": emit_tensor(field, obj.unit),
            "coaction": emit_tensor(field, obj.coaction),
        }
    elif kind == "crossed_system":
        field = obj.field()
        payload = {
            "host": host_ref if host_ref is not None else to_document(obj.host),
            "R": _algebra_payload(field, obj.R),
            "action": emit_tensor(field, obj.weak_action),
            "sigma": emit_tensor(field, obj.sigma.values),
        }
        if obj.sigma_inv is not None:
            payload["sigma_inv"] = emit_tensor(field, obj.sigma_inv.values)
    elif kind == "cleaving_system":
        field = obj.field()
        payload = {
            "comodule_algebra": to_document(obj.A, host_ref=host_ref),
            "gamma": emit_tensor(field, obj.gamma),
            "delta": emit_tensor(field, obj.delta),
        }
    elif kind == "hopf_module":
        field = obj.field()
        payload = {
            "crossed_system": to_document(obj.system, host_ref=host_ref),
            "labels": list(obj.space.labels),
            "r_action": emit_tensor(field, obj.r_action),
            "coaction": emit_tensor(field, obj.coaction),
            "h_action": emit_tensor(field, obj.h_action),
        }
    elif kind == "h2_datum":
        field = obj.field()
        payload = {
            "B": _algebra_payload(field, obj.B),
            "F": emit_tensor(field, obj.F),
            "c": emit_tensor(field, obj.c),
        }
    elif kind == "h3_datum":
        field = obj.field()
        payload = {
            "B": _algebra_payload(field, obj.B),
            "F": emit_tensor(field, obj.F),
            "G": emit_tensor(field, obj.G),
            "u1": emit_tensor(field, obj.u1),
            "u2": emit_tensor(field, obj.u2),
            "v1": emit_tensor(field, obj.v1),
            "v2": emit_tensor(field, obj.v2),
        }
    elif kind == "twist":
        field = obj.tau.field()
        payload = {
            "host": host_ref if host_ref is not None else None,
            "tau": emit_tensor(field, obj.tau.values),
        }
    else:
        raise SchemaError(f"cannot serialize kind {kind}")
    return {"format": FORMAT, "kind": kind,
            "field": {"cyclotomic_order": field.n}, "payload": payload}


def save_document(obj, path: str, host_ref=None) -> None:
    doc = to_document(obj, host_ref=host_ref)
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(doc, fh, indent=2, sort_keys=True)
        fh.write("\n")


# -- whole-document checking --------------------------------------------------------


def check_document(obj) -> Report:
    """Dispatch to the structure's checker, recursively including hosts and
    provenance so that corrupting any entry of a document surfaces somewhere."""
    kind = kind_of(obj)
    rep = Report()
    if kind == "algebra":
        rep.merge(check_algebra(obj))
    elif kind == "coquasi_bialgebra":
        rep.merge(check_coquasi_bialgebra(obj))
    elif kind == "coquasi_hopf":
        rep.merge(check_coquasi_hopf(obj))
    elif kind == "comodule_algebra":
        rep.merge(_check_host(obj.host), prefix="host:")
        rep.merge(check_comodule_algebra(obj))
    elif kind == "crossed_system":
        rep.merge(_check_host(obj.host), prefix="host:")
        rep.merge(check_crossed_system(obj))
    elif kind == "cleaving_system":
        rep.merge(_check_host(obj.A.host), prefix="host:")
        rep.merge(check_comodule_algebra(obj.A), prefix="algebra:")
        rep.merge(check_cleaving(obj))
    elif kind == "hopf_module":
        rep.merge(_check_host(obj.system.host), prefix="host:")
        rep.merge(check_crossed_system(obj.system), prefix="system:")
        rep.merge(check_hopf_module(obj))
    elif kind == "h2_datum":
        rep.merge(check_h2_datum(obj).report)
    elif kind == "h3_datum":
        rep.merge(check_h3_datum(obj).report)
    elif kind == "twist":
        rep.note("twist validated at load time")
    return rep


def _check_host(host) -> Report:
    if isinstance(host, CoquasiHopf):
        return check_coquasi_hopf(host)
    return check_coquasi_bialgebra(host)
