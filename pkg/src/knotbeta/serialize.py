"""JSON and CSV shapes emitted by the command line, with their schemas.

Matrices are row-major nested arrays. Laurent entries are objects mapping
exponent strings to integer coefficients, so ``1 - 1/x`` is
``{"-1": -1, "0": 1}`` and zero is ``{}``.
"""

from __future__ import annotations

import csv
import io
from collections.abc import Iterable

from .diagram import LongKnotDiagram, render_pd
from .invariants import InvariantBundle, VerificationReport
from .laurent import normalize

LAURENT_SCHEMA = {
    "type": "object",
    "patternProperties": {"^-?[0-9]+$": {"type": "integer"}},
    "additionalProperties": False,
}
INT_MATRIX_SCHEMA = {"type": "array", "items": {"type": "array", "items": {"type": "integer"}}}
LAURENT_MATRIX_SCHEMA = {"type": "array", "items": {"type": "array", "items": LAURENT_SCHEMA}}
INT_VECTOR_SCHEMA = {"type": "array", "items": {"type": "integer", "enum": [-1, 1]}}

WITNESS_SCHEMA = {
    "type": "object",
    "properties": {
        "location": {"type": "string"},
        "expected": {"type": "string"},
        "actual": {"type": "string"},
    },
    "required": ["location", "expected", "actual"],
    "additionalProperties": False,
}

REPORT_SCHEMA = {
    "type": "object",
    "properties": {
        "theorem_holds": {"type": "boolean"},
        "sign": {"type": "integer", "enum": [-1, 0, 1]},
        "l": {"type": "integer", "minimum": 0},
        "proposition_holds": {"type": "boolean"},
        "lemma1_holds": {"type": "boolean"},
        "lemma2_holds": {"type": "boolean"},
        "detW": {"type": "integer"},
        "failures": {"type": "array", "items": WITNESS_SCHEMA},
    },
    "required": [
        "theorem_holds", "sign", "l", "proposition_holds",
        "lemma1_holds", "lemma2_holds", "detW", "failures",
    ],
    "additionalProperties": False,
}

COMPUTE_SCHEMA = {
    "type": "object",
    "properties": {
        "n": {"type": "integer", "minimum": 0},
        "pd": {"type": "string"},
        "basepoint": {"type": "integer", "minimum": 0},
        "T": INT_MATRIX_SCHEMA,
        "sigma": INT_VECTOR_SCHEMA,
        "d": INT_VECTOR_SCHEMA,
        "S": INT_VECTOR_SCHEMA,
        "X^-S": LAURENT_MATRIX_SCHEMA,
        "X^-(1+S)/2": LAURENT_MATRIX_SCHEMA,
        "1+T^t(1-X^-S)": LAURENT_MATRIX_SCHEMA,
        "A": LAURENT_MATRIX_SCHEMA,
        "W": INT_MATRIX_SCHEMA,
        "beta": LAURENT_SCHEMA,
        "delta": LAURENT_SCHEMA,
        "beta_text": {"type": "string"},
        "delta_text": {"type": "string"},
        "delta_normalized": {"type": "string"},
        "l": {"type": "integer", "minimum": 0},
    },
    "required": [
        "n", "pd", "basepoint", "T", "sigma", "d", "S", "X^-S", "X^-(1+S)/2",
        "1+T^t(1-X^-S)", "A", "W", "beta", "delta", "beta_text", "delta_text",
        "delta_normalized", "l",
    ],
    "additionalProperties": False,
}

BATCH_COLUMNS = (
    "id", "n", "l", "sign", "beta", "delta", "theorem_ok", "proposition_ok", "detW",
)

BATCH_ROW_SCHEMA = {
    "type": "object",
    "properties": {
        "id": {"type": "string"},
        "n": {"type": "integer", "minimum": 0},
        "l": {"type": "integer", "minimum": 0},
        "sign": {"type": "integer", "enum": [-1, 0, 1]},
        "beta": {"type": "string"},
        "delta": {"type": "string"},
        "theorem_ok": {"type": "boolean"},
        "proposition_ok": {"type": "boolean"},
        "detW": {"type": "integer"},
    },
    "required": list(BATCH_COLUMNS),
    "additionalProperties": False,
}
BATCH_SCHEMA = {"type": "array", "items": BATCH_ROW_SCHEMA}


def bundle_to_json(lk: LongKnotDiagram, b: InvariantBundle) -> dict:
    return {
        "n": b.n,
        "pd": render_pd(lk.diagram),
        "basepoint": lk.basepoint_edge,
        "T": [list(r) for r in b.T],
        "sigma": list(b.sigma),
        "d": list(b.d),
        "S": list(b.S),
        "X^-S": b.x_neg_s.to_json(),
        "X^-(1+S)/2": b.x_neg_half.to_json(),
        "1+T^t(1-X^-S)": b.proposition_rhs().to_json(),
        "A": b.A.to_json(),
        "W": [list(r) for r in b.W],
        "beta": b.beta.to_json(),
        "delta": b.delta.to_json(),
        "beta_text": str(b.beta),
        "delta_text": str(b.delta),
        "delta_normalized": str(normalize(b.delta)) if b.delta else "0",
        "l": b.l,
    }


def batch_row(ident: str, b: InvariantBundle, report: VerificationReport) -> dict:
    return {
        "id": ident,
        "n": b.n,
        "l": report.l,
        "sign": report.sign,
        "beta": str(b.beta),
        "delta": str(b.delta),
        "theorem_ok": report.theorem_holds,
        "proposition_ok": report.proposition_holds,
        "detW": report.detW,
    }


def rows_to_csv(rows: Iterable[dict]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=BATCH_COLUMNS, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow(row)
    return buf.getvalue()
