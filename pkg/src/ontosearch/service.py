"""HTTP service exposing the search pipeline as a JSON API.

Endpoints: ``GET /api/search?q=...&k=...`` (full stage-by-stage response),
``GET /api/expand?q=...`` (analysis and expansions only), ``GET /health``.
When a built web UI directory is configured it is served at ``/``.
"""

from __future__ import annotations

from pathlib import Path

from fastapi import FastAPI, HTTPException, Query
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles

from ontosearch.engine import BackendUnavailableError, EmptyQueryError, SearchEngine


def create_app(engine: SearchEngine, static_dir: str | Path | None = None) -> FastAPI:
    app = FastAPI(title="ontosearch", version="0.1.0")
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["GET"],
        allow_headers=["*"],
    )

    @app.get("/health")
    def health() -> dict:
        return {"status": "ok"}

    @app.get("/api/search")
    def api_search(q: str = Query(default=""), k: int | None = Query(default=None, ge=1)):
        try:
            response = engine.handle_search(q, k=k)
        except EmptyQueryError as exc:
            raise HTTPException(status_code=400, detail=str(exc)) from exc
        except BackendUnavailableError as exc:
            raise HTTPException(status_code=502, detail=str(exc)) from exc
        return JSONResponse(response.to_json_dict())

    @app.get("/api/expand")
    def api_expand(q: str = Query(default="")):
        try:
            analyzed, keywords, emap, refined = engine.expand(q)
        except EmptyQueryError as exc:
            raise HTTPException(status_code=400, detail=str(exc)) from exc
        return JSONResponse({
            "query": q,
            "analysis": {
                "tokens": [
                    {"text": t.text, "lemma": t.lemma, "tag": t.tag} for t in analyzed.tokens
                ],
                "noun_phrases": [np.text for np in analyzed.noun_phrases],
                "content_terms": list(analyzed.content_terms),
                "anchor_terms": list(analyzed.anchor_terms),
                "is_location_query": analyzed.is_location_query,
                "location_terms": list(analyzed.location_terms),
            },
            "domain_keywords": keywords.to_json_dict(),
            "terms": emap.to_json_dict(),
            "queries": [r.to_json_dict() for r in refined],
        })

    static_path = Path(static_dir) if static_dir else None
    if static_path and static_path.is_dir():
        app.mount("/", StaticFiles(directory=str(static_path), html=True), name="ui")

    return app


def serve(engine: SearchEngine, host: str, port: int, static_dir: str | None = None) -> None:
    import uvicorn

    uvicorn.run(create_app(engine, static_dir=static_dir), host=host, port=port)
