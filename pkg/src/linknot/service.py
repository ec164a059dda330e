"""HTTP JSON service over a single diagram session: the backend for the web
editor.

The service holds exactly one diagram, persists it to a working file after
every successful mutation (atomic temp-file replacement), and serves census
and search requests for it.  Mutations are atomic: if an edit fails
validation the served diagram is unchanged."""

from __future__ import annotations

import os
import tempfile
from pathlib import Path

from fastapi import FastAPI, HTTPException, Request, Response

from .census import (
    BoundViolationError,
    CensusError,
    count_census,
    link_records,
    knot_records,
    local_search_minimize,
)
from .diagram import DegeneracyError, Diagram, UnknownCrossingError


def _workers() -> int:
    try:
        return max(1, int(os.environ.get("LINKNOT_WORKERS", "1")))
    except ValueError:
        return 1


def create_app(workfile: Path) -> FastAPI:
    app = FastAPI(title="linknot service")
    app.state.workfile = Path(workfile)
    app.state.diagram = None
    if app.state.workfile.exists():
        app.state.diagram = Diagram.from_json(app.state.workfile.read_text())

    def current() -> Diagram:
        if app.state.diagram is None:
            raise HTTPException(status_code=404, detail="no diagram loaded")
        return app.state.diagram

    def persist(d: Diagram) -> None:
        wf = app.state.workfile
        wf.parent.mkdir(parents=True, exist_ok=True)
        fd, tmp = tempfile.mkstemp(dir=str(wf.parent), suffix=".tmp")
        try:
            with os.fdopen(fd, "w") as fh:
                fh.write(d.to_json())
            os.replace(tmp, wf)
        except BaseException:
            if os.path.exists(tmp):
                os.unlink(tmp)
            raise
        app.state.diagram = d

    @app.get("/diagram")
    def get_diagram():
        return Response(content=current().to_json(), media_type="application/json")

    @app.put("/diagram")
    async def put_diagram(request: Request):
        try:
            d = Diagram.from_json_obj(await request.json())
            d.crossings()  # validate before accepting
        except (DegeneracyError, ValueError, KeyError, TypeError) as e:
            raise HTTPException(status_code=422, detail=str(e))
        persist(d)
        return {"ok": True, "crossings": len(d.crossings())}

    @app.post("/flip")
    async def flip(request: Request):
        body = await request.json()
        key = body.get("key")
        if not (isinstance(key, (list, tuple)) and len(key) == 4):
            raise HTTPException(status_code=422, detail="key must be 4 integers")
        d = current()
        try:
            new = d.flip_crossing(tuple(int(k) for k in key))
        except UnknownCrossingError:
            raise HTTPException(status_code=404, detail=f"unknown crossing {key}")
        persist(new)
        return {"ok": True, "key": list(key), "over": new.over_for(tuple(key))}

    @app.post("/move-vertex")
    async def move_vertex(request: Request):
        body = await request.json()
        d = current()
        try:
            v = int(body["id"])
            if not (0 <= v < d.graph.n):
                raise HTTPException(status_code=404, detail=f"no vertex {v}")
            new = d.move_vertex(v, str(body["x"]), str(body["y"]))
        except HTTPException:
            raise
        except DegeneracyError as e:
            raise HTTPException(status_code=422, detail=str(e))
        except (KeyError, ValueError, TypeError) as e:
            raise HTTPException(status_code=422, detail=f"bad payload: {e}")
        persist(new)
        return {"ok": True}

    @app.get("/census")
    def census(kind: str = "both"):
        try:
            report = count_census(current(), kind, workers=_workers())
        except BoundViolationError as e:
            raise HTTPException(status_code=500, detail=str(e))
        except CensusError as e:
            raise HTTPException(status_code=422, detail=str(e))
        return Response(content=report.to_json(), media_type="application/json")

    @app.get("/links")
    def links():
        records = link_records(current(), workers=_workers())
        return {"total": len(records), "links": [r.to_json_obj() for r in records]}

    @app.get("/knots")
    def knots():
        records = knot_records(current(), workers=_workers())
        return {"total": len(records), "knots": [r.to_json_obj() for r in records]}

    @app.post("/search")
    async def search(request: Request):
        body = await request.json()
        try:
            result = local_search_minimize(
                current(),
                objective=body.get("objective", "links"),
                budget=int(body.get("budget", 200)),
                seed=int(body.get("seed", 0)),
                annealing=bool(body.get("annealing", False)),
                jitter=bool(body.get("jitter", False)),
            )
        except BoundViolationError as e:
            raise HTTPException(status_code=500, detail=str(e))
        except (CensusError, ValueError) as e:
            raise HTTPException(status_code=422, detail=str(e))
        persist(result.best)
        return {"ok": True, "objective": result.objective,
                "best_count": result.best_count, "seed": result.seed,
                "trace": result.trace}

    return app
