"""
matlc Server - HTTP endpoints over the invariant computations.
Request bodies use the CLI's JSON input formats and responses carry the
same JSON reports.
"""
from __future__ import annotations

import logging
import random
from contextlib import asynccontextmanager
from typing import Any, Dict

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from matlc.arrangements import (
    AffineArrangement,
    CentralArrangement,
    affine_char_poly,
    bounded_regions_2d,
    decone,
    varchenko_count,
)
from matlc.check import find_fixture
from matlc.config import MatlcConfig, set_config
from matlc.errors import MatlcError, ParseError
from matlc.graphs.chromatic import chromatic_report
from matlc.graphs.reliability import reliability_report
from matlc.lattice import reduced_char_poly
from matlc.matroids.io import graph_from_json, matroid_from_json
from matlc.report import random_orderings, theorem_report

logging.basicConfig(level=logging.INFO)
logger = logging.getLogger(__name__)

# MatlcError exit codes mapped to HTTP statuses.
_STATUS = {2: 400, 3: 413, 4: 500}


@asynccontextmanager
async def lifespan(app: FastAPI):
    """App lifespan context manager."""
    cfg = MatlcConfig()
    set_config(cfg)
    app.state.config = cfg
    logger.info(f"[matlc_server] enumeration cap {cfg.enumeration_cap}")
    yield


app = FastAPI(lifespan=lifespan)


@app.exception_handler(MatlcError)
async def matlc_error_handler(request: Request, exc: MatlcError):
    logger.warning(f"[matlc_server] {request.url.path}: {exc.kind}: {exc}")
    return JSONResponse(status_code=_STATUS.get(exc.exit_code, 400), content={"error": exc.kind, "message": str(exc)})


def _int_field(body: Dict[str, Any], key: str) -> int:
    value = body[key]
    try:
        if isinstance(value, float) and not value.is_integer():
            raise ValueError(value)
        return int(value)
    except (TypeError, ValueError):
        raise ParseError(f"{key} must be an integer, got {body[key]!r}") from None


@app.get("/healthz")
def healthz():
    """Health check endpoint."""
    return {"ok": True}


@app.post("/invariants")
def invariants(body: Dict[str, Any]):
    """Body: {"matroid": {...}} or {"fixture": "fano"}, optional "orderings" and "seed"."""
    if "fixture" in body:
        matroid = find_fixture(str(body["fixture"])).matroid
    elif "matroid" in body:
        matroid = matroid_from_json(body["matroid"])
    else:
        raise ParseError("missing:matroid")
    orderings: list = [None]
    k = _int_field(body, "orderings") if body.get("orderings") else 0
    if k:
        if body.get("seed") is None:
            raise ParseError("seed is required for random orderings")
        orderings.extend(random_orderings(matroid.labels, k, random.Random(_int_field(body, "seed"))))
    return theorem_report(matroid, orderings).to_json()


@app.post("/chromatic")
def chromatic(body: Dict[str, Any]):
    """Body: graph JSON, optional "method"."""
    return chromatic_report(graph_from_json(body), str(body.get("method", "auto"))).to_json()


@app.post("/reliability")
def reliability(body: Dict[str, Any]):
    return reliability_report(graph_from_json(body)).to_json()


@app.post("/regions")
def regions(body: Dict[str, Any]):
    """Body: {"lines": {...}} or {"central": {...}, "infinity": i}."""
    out: Dict[str, Any] = {}
    if "lines" in body:
        affine = AffineArrangement.from_json(body["lines"])
    elif "central" in body:
        if "infinity" not in body:
            raise ParseError("missing:infinity")
        central = CentralArrangement.from_json(body["central"])
        affine = decone(central, _int_field(body, "infinity"))
        out["reduced_chi"] = reduced_char_poly(central.matroid()).to_json()
    else:
        raise ParseError("missing:lines")
    chi = affine_char_poly(affine)
    count = bounded_regions_2d(affine)
    out.update(
        arrangement=affine.to_json(),
        chi=chi.to_json(),
        bounded_regions=count,
        varchenko_count=varchenko_count(affine),
    )
    if "reduced_chi" in out:
        out["decone_identity"] = out["reduced_chi"] == out["chi"]
    return out
