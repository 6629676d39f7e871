"""Analysis reports with deterministic serialization.

Field order is fixed by construction and floats print at full round-trip
precision (17 significant digits), so identical invocations yield
byte-identical JSON and CSV.  The top-level JSON object carries a
"schema": "spectre-pack/1" marker for downstream scripts.
"""

from __future__ import annotations

import json
import math

import numpy as np

from . import __version__, bounds
from .errors import DomainError, NotApplicableError
from .graphs import Graph, is_connected
from .theorems import GraphAnalysis, Verdict, check_co3_3, check_co3_5, check_cor2, check_main1, check_main2

SCHEMA = "spectre-pack/1"


def format_float(x: float) -> str:
    """Round-trip float formatting used for both JSON and CSV."""
    if not math.isfinite(x):
        raise ValueError("non-finite float in output; encode it explicitly")
    return "%.17g" % x


def dumps_canonical(obj, pretty: bool = False) -> str:
    """JSON with insertion-ordered keys and fixed float formatting."""
    out: list[str] = []
    _dump(obj, out, 0, pretty)
    return "".join(out)


def _dump(obj, out: list[str], level: int, pretty: bool) -> None:
    pad = "  " * (level + 1) if pretty else ""
    end_pad = "  " * level if pretty else ""
    nl = "\n" if pretty else ""
    sep = ": " if pretty else ":"
    if obj is None:
        out.append("null")
    elif obj is True:
        out.append("true")
    elif obj is False:
        out.append("false")
    elif isinstance(obj, (np.floating, float)):
        out.append(format_float(float(obj)))
    elif isinstance(obj, (np.integer, int)):
        out.append(str(int(obj)))
    elif isinstance(obj, str):
        out.append(json.dumps(obj))
    elif isinstance(obj, np.ndarray):
        _dump(list(obj), out, level, pretty)
    elif isinstance(obj, (list, tuple)):
        if not obj:
            out.append("[]")
            return
        out.append("[" + nl)
        for i, item in enumerate(obj):
            out.append(pad)
            _dump(item, out, level + 1, pretty)
            out.append(("," + nl) if i + 1 < len(obj) else nl)
        out.append(end_pad + "]")
    elif isinstance(obj, dict):
        if not obj:
            out.append("{}")
            return
        out.append("{" + nl)
        items = list(obj.items())
        for i, (key, value) in enumerate(items):
            if not isinstance(key, str):
                raise ValueError(f"non-string JSON key {key!r}")
            out.append(pad + json.dumps(key) + sep)
            _dump(value, out, level + 1, pretty)
            out.append(("," + nl) if i + 1 < len(items) else nl)
        out.append(end_pad + "}")
    else:
        raise ValueError(f"cannot serialize {type(obj).__name__}")


def _a_key(a: float) -> str:
    return "a=%g" % a


def _finite_or_none(value):
    return None if value == math.inf else value


def build_report(g: Graph, source: str, ks: list[int], a_values: list[float],
                 full_spectrum: bool = False, force_tau: bool = False,
                 tau_max_n: int = 200, seed: int | None = None) -> dict:
    """Assemble the full analysis record for one graph.

    Exact edge-connectivity is always computed (cheap); the exact packing
    number only for n <= tau_max_n unless forced.  Verdicts cover the
    connectivity and packing checkers for every requested (k, a) pair plus
    the fixed-form corollaries for every k.
    """
    ana = GraphAnalysis(g)
    report: dict = {"schema": SCHEMA}
    report["provenance"] = {
        "source": source,
        "tool_version": __version__,
        "seed": seed,
    }
    connected = is_connected(g)
    report["graph"] = {
        "n": g.n,
        "m": g.m,
        "min_degree": ana.delta if g.n else None,
        "max_degree": ana.max_degree if g.n else None,
        "average_degree": ana.average_degree if g.n else None,
        "girth": _finite_or_none(ana.girth),
        "bipartite": ana.bipartite,
        "connected": connected,
    }
    spectra: dict = {}
    for a in a_values:
        if g.n == 0:
            spectra[_a_key(a)] = None
            continue
        values = ana.spectrum(a)
        entry = {
            "lambda1": float(values[0]),
            "lambda2": float(values[1]) if g.n >= 2 else None,
            "lambda_n_minus_1": float(values[g.n - 2]) if g.n >= 2 else None,
        }
        if full_spectrum:
            entry["full"] = [float(x) for x in values]
        spectra[_a_key(a)] = entry
    report["spectra"] = spectra
    report["bounds"] = _bounds_section(ana, ks, a_values)
    exact: dict = {"kappa_prime": None, "kappa_witness": None, "tau": None}
    if g.n >= 2:
        kappa, witness = ana.kappa_prime()
        exact["kappa_prime"] = kappa
        exact["kappa_witness"] = sorted(witness)
    if force_tau or g.n <= tau_max_n:
        from .connectivity import tau as tau_exact

        exact["tau"] = tau_exact(g)
    report["exact"] = exact
    verdicts: list[Verdict] = []
    for k in ks:
        for a in a_values:
            verdicts.append(check_main1(ana, k, a, variant="strong"))
            verdicts.append(check_main1(ana, k, a, variant="weak"))
            verdicts.append(check_main2(ana, k, a))
        for variant in ("i", "ii", "iii"):
            verdicts.append(check_cor2(ana, k, variant))
            verdicts.append(check_co3_3(ana, k, variant))
        verdicts.append(check_co3_5(ana, k))
    report["verdicts"] = [v.to_json_dict() for v in verdicts]
    return report


def _bounds_section(ana: GraphAnalysis, ks: list[int], a_values: list[float]) -> dict:
    section: dict = {"n1_star": ana.n1_star()}
    try:
        section["moore_bound"] = (
            bounds.moore_bound(ana.delta, ana.girth) if ana.n else None
        )
    except (NotApplicableError, DomainError):
        section["moore_bound"] = None
    thresholds = []
    for k in ks:
        for a in a_values:
            entry: dict = {"k": k, "a": a}
            entry["tau"] = _try_threshold(bounds.tau_threshold, ana, k, a)
            entry["kappa_weak"] = _try_threshold(bounds.kappa_threshold_weak, ana, k, a)
            try:
                entry["kappa_strong"] = (
                    bounds.kappa_threshold_strong(ana.delta, k, ana.girth, a, ana.n)
                    if ana.n1_star() is not None
                    else None
                )
            except NotApplicableError:
                entry["kappa_strong"] = None
            thresholds.append(entry)
    section["thresholds"] = thresholds
    return section


def _try_threshold(fn, ana: GraphAnalysis, k: int, a: float):
    if ana.n1_star() is None:
        return None
    try:
        return fn(ana.delta, k, ana.girth, a)
    except NotApplicableError:
        return None


CSV_HEADER = (
    "spec,n,m,delta,girth,n1_star,eigenvalue,threshold,margin,"
    "hypothesis,kappa_prime,tau_ge_k,sound"
)


def _csv_quote(field: str) -> str:
    if "," in field or '"' in field:
        return '"' + field.replace('"', '""') + '"'
    return field


def verdict_csv_row(spec: str, g: Graph, verdict: Verdict) -> str:
    """One CSV line per checked instance; empty fields where undefined."""
    details = verdict.details
    n1 = details.get("n1_star")
    girth_value = details.get("girth")

    def fmt(value) -> str:
        if value is None:
            return ""
        if isinstance(value, bool):
            return "true" if value else "false"
        if isinstance(value, float):
            return "inf" if value == math.inf else format_float(value)
        return str(value)

    exact = verdict.exact_values
    return ",".join([
        _csv_quote(spec),
        str(g.n),
        str(g.m),
        fmt(details.get("delta")),
        fmt(girth_value),
        fmt(n1),
        fmt(details.get("eigenvalue")),
        fmt(details.get("threshold")),
        fmt(verdict.margin),
        fmt(verdict.hypothesis_holds if verdict.applicable else None),
        fmt(exact.get("kappa_prime")),
        fmt(exact.get("tau_at_least_k")),
        fmt(verdict.sound),
    ])
