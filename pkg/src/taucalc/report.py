"""Deterministic human- and machine-readable reports for deduction runs."""

from __future__ import annotations

from .deduce import Certificate, CertStep, FactBase
from .interval import fmt_endpoint


def _fmt_interval(iv) -> list[str]:
    return [fmt_endpoint(iv.lo), fmt_endpoint(iv.hi)]


def _premise_str(premise: tuple) -> str:
    kind = premise[0]
    if kind == "fact":
        _, knot, qty, value = premise
        return f"fact {knot}.{qty} = {value}"
    if kind == "relation":
        return f"relation {premise[1]}"
    _, knot, pres = premise
    return f"presentation {knot} {pres.kind}: {pres.value}"


def step_to_dict(step: CertStep) -> dict:
    return {
        "index": step.index,
        "rule": step.rule,
        "target": step.target,
        "quantity": step.quantity,
        "premises": [_premise_str(p) for p in step.premises],
        "conclusion": str(step.conclusion),
        "result": str(step.result),
    }


def build_report(base: FactBase, cert: Certificate, *, certify: bool = False) -> dict:
    """JSON-ready report of per-knot intervals; byte-for-byte reproducible
    from the same inputs (ids sorted, no timestamps)."""
    knots = []
    for id in sorted(base.records):
        rec = base.records[id]
        knots.append({
            "id": id,
            "tau": _fmt_interval(rec.tau),
            "g4": _fmt_interval(rec.g4),
            "g3": rec.g3,
            "tb_lower": rec.tb_lower,
            "seeds": sorted({p.kind for p in rec.presentations}),
            "certificate_steps": sum(1 for s in cert.steps if s.target == id),
        })
    out = {"knots": knots, "total_steps": len(cert)}
    if certify:
        out["certificate"] = [step_to_dict(s) for s in cert.steps]
    return out


def render_report(report: dict) -> str:
    lines = []
    header = f"{'knot':<14} {'tau':<12} {'g4':<12} {'g3':<4} {'tb>=':<5} {'cert':<5} seeds"
    lines.append(header)
    lines.append("-" * len(header))
    for k in report["knots"]:
        tau = f"[{k['tau'][0]}, {k['tau'][1]}]"
        g4 = f"[{k['g4'][0]}, {k['g4'][1]}]"
        g3 = "-" if k["g3"] is None else str(k["g3"])
        tbl = "-" if k["tb_lower"] is None else str(k["tb_lower"])
        seeds = ",".join(k["seeds"]) or "-"
        lines.append(
            f"{k['id']:<14} {tau:<12} {g4:<12} {g3:<4} {tbl:<5} "
            f"{k['certificate_steps']:<5} {seeds}"
        )
    lines.append(f"total certificate steps: {report['total_steps']}")
    return "\n".join(lines)
