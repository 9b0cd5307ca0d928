"""Suite execution and report serialization."""

from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass

from .checks import anchor, plan, run_check
from .config import SuiteConfig


@dataclass
class CheckReport:
    name: str
    anchor: str
    params: dict
    status: str
    witness: str | None
    ms: float

    def __post_init__(self) -> None:
        if self.status == "fail" and self.witness is None:
            self.witness = "no witness recorded"


def _params_key(params: dict) -> str:
    return json.dumps(params, sort_keys=True)


def _execute(job: tuple[str, dict, bool]) -> CheckReport:
    name, params, timings = job
    start = time.perf_counter()
    try:
        ok, witness = run_check(name, params)
        status = "pass" if ok else "fail"
    except Exception as exc:  # a crashing check is a failed check with the error as witness
        status, witness = "fail", f"{type(exc).__name__}: {exc}"
    ms = round((time.perf_counter() - start) * 1000, 3) if timings else 0
    return CheckReport(name, anchor(name), params, status, None if status == "pass" else witness, ms)


def run_suite(cfg: SuiteConfig) -> list[CheckReport]:
    """Run every registered check of the configured suite(s); order-stable output."""
    cfg.validate()
    jobs = [(name, params, cfg.timings) for suite in cfg.suites() for name, params in plan(suite, cfg)]
    if cfg.jobs > 1:
        with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
            reports = list(pool.map(_execute, jobs))
    else:
        reports = [_execute(j) for j in jobs]
    reports.sort(key=lambda r: (r.name, _params_key(r.params)))
    return reports


def report_dict(suite: str, seed: int, reports: list[CheckReport]) -> dict:
    return {"suite": suite, "seed": seed, "checks": [asdict(r) for r in reports]}


def emit_report(reports: list[CheckReport], fmt: str = "json", suite: str = "all", seed: int = 0) -> bytes:
    if fmt == "json":
        return (json.dumps(report_dict(suite, seed, reports), sort_keys=True, indent=1) + "\n").encode()
    lines = [f"suite {suite}  seed {seed}", f"{'status':<6}  {'check':<28}  {'ms':>10}  params"]
    for r in reports:
        lines.append(f"{r.status:<6}  {r.name:<28}  {r.ms:>10.1f}  {_params_key(r.params)}")
        if r.witness:
            lines.append(f"        witness: {r.witness}")
    failed = sum(r.status == "fail" for r in reports)
    lines.append(f"{len(reports)} checks, {failed} failed")
    return ("\n".join(lines) + "\n").encode()


def parse_report(data: bytes) -> tuple[str, int, list[CheckReport]]:
    obj = json.loads(data)
    return obj["suite"], obj["seed"], [CheckReport(**c) for c in obj["checks"]]
