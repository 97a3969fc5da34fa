"""HTTP surface: the translation API plus static hosting for the viewer.

Resources are loaded once at app creation and shared read-only across
requests; translate() is a pure function, so no locking is needed. The
translate endpoint returns the canonical serialized document (built by
serialize_translation) rather than letting the framework re-encode it, which
keeps responses byte-identical for identical inputs.
"""

from __future__ import annotations

from pathlib import Path

from fastapi import FastAPI, Response
from fastapi.exceptions import RequestValidationError
from fastapi.responses import HTMLResponse, JSONResponse
from fastapi.staticfiles import StaticFiles
from pydantic import BaseModel

from . import __version__
from .pipeline import PipelineResources, load_resources, serialize_translation, translate

_PLACEHOLDER = """<!doctype html>
<html lang="en">
<head><meta charset="utf-8"><title>mal2sign</title></head>
<body>
<h1>mal2sign</h1>
<p>The translation API is up. The viewer bundle is not being served;
start the server with <code>mal2sign serve --static &lt;DIR&gt;</code>
pointing at a built viewer to get the full UI.</p>
<ul>
<li><code>POST /api/translate</code> with body <code>{"text": "..."}</code></li>
<li><code>GET /api/lexicon</code></li>
<li><code>GET /api/health</code></li>
</ul>
</body>
</html>
"""


class TranslateRequest(BaseModel):
    text: str


class LexiconEntrySummary(BaseModel):
    gloss: str
    roots: list[str]
    duration: float


class HealthResponse(BaseModel):
    status: str
    version: str


def create_app(
    resources: PipelineResources | None = None,
    static_dir: str | Path | None = None,
) -> FastAPI:
    """Build the service around one immutable resource set.

    static_dir, when given, must exist; its files are served at /. Without
    it, / returns a small placeholder page.
    """
    res = resources if resources is not None else load_resources()
    app = FastAPI(title="mal2sign", version=__version__)

    @app.exception_handler(RequestValidationError)
    async def malformed_request(_, exc: RequestValidationError):
        # The API contract promises 400 for malformed bodies.
        return JSONResponse(
            status_code=400,
            content={"error": "malformed-request", "detail": str(exc)},
        )

    @app.post("/api/translate")
    async def api_translate(request: TranslateRequest) -> Response:
        result = translate(request.text, res)
        return Response(content=serialize_translation(result), media_type="application/json")

    @app.get("/api/lexicon")
    async def api_lexicon() -> list[LexiconEntrySummary]:
        return [
            LexiconEntrySummary(gloss=e.gloss, roots=list(e.roots), duration=e.duration)
            for e in res.lexicon.entries.values()
        ]

    @app.get("/api/health")
    async def api_health() -> HealthResponse:
        return HealthResponse(status="ok", version=__version__)

    if static_dir is not None:
        app.mount("/", StaticFiles(directory=Path(static_dir), html=True), name="viewer")
    else:

        @app.get("/", include_in_schema=False)
        async def index() -> HTMLResponse:
            return HTMLResponse(_PLACEHOLDER)

    return app
