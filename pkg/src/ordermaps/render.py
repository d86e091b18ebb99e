"""Payload builders shared by the CLI and the HTTP service.

Rationals render as "num/den" strings; decimal approximations are
display-only, formatted with 17 significant digits at output time.
JSON is emitted with sorted keys and compact separators so identical
inputs always produce byte-identical documents.
"""

import json
from fractions import Fraction

from .counting import IdentityCheck
from .distributions import DistributionTable
from .sampling import SampleReport
from .transform import PartialTransformation, to_payload


def fraction_str(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def approx_str(x: Fraction) -> str:
    return format(float(x), ".17g")


def dumps(payload) -> str:
    return json.dumps(payload, sort_keys=True, separators=(",", ":"))


def transformation_payload(alpha: PartialTransformation) -> dict:
    return to_payload(alpha)


def distribution_payload(table: DistributionTable, approx: bool = False) -> dict:
    points = []
    for k, p in table.support:
        point = {"k": k, "p": fraction_str(p)}
        if approx:
            point["p_approx"] = approx_str(p)
        points.append(point)
    return {"label": table.label, "normalizer": table.normalizer, "support": points}


def moments_payload(mean: Fraction, variance: Fraction, approx: bool = False, **fields) -> dict:
    payload = dict(fields)
    payload["mean"] = fraction_str(mean)
    payload["variance"] = fraction_str(variance)
    if approx:
        payload["mean_approx"] = approx_str(mean)
        payload["variance_approx"] = approx_str(variance)
    return payload


def identity_payload(check: IdentityCheck) -> dict:
    return {
        "identity": check.identity,
        "params": dict(check.params),
        "lhs": check.lhs,
        "rhs": check.rhs,
        "equal": check.equal,
    }


def report_payload(report: SampleReport, approx: bool = True) -> dict:
    return {
        "family": report.family.value,
        "n": report.n,
        "sample_count": report.sample_count,
        "seed": report.seed,
        "include_null": report.include_null,
        "empirical": {str(k): c for k, c in report.empirical.items()},
        "exact": distribution_payload(report.exact, approx=approx),
        "tv_distance": fraction_str(report.tv_distance),
        "tv_distance_approx": approx_str(report.tv_distance),
    }
