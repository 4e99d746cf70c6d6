"""FastAPI application exposing the checker over HTTP.

Routes (all under /v1):
    POST /v1/check      run the substitution search on a form
    POST /v1/necessary  run only the majorization pre-check
    POST /v1/majorize   compare two monomials under an ordering
    GET  /v1/health     liveness probe

Domain errors (bad grammar, inhomogeneous input, bad template, too many
variables) return HTTP 400 with a plain-text detail message.
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .. import __version__
from .handlers import RequestError, handle_check, handle_majorize, handle_necessary
from .schemas import (
    CheckRequest,
    CheckResponse,
    MajorizeRequest,
    MajorizeResponse,
    NecessaryRequest,
    NecessaryResponse,
)


def create_app() -> FastAPI:
    app = FastAPI(
        title="sdscheck",
        version=__version__,
        description="Exact nonnegativity checking on the nonnegative orthant "
        "by successive difference substitution.",
    )

    @app.exception_handler(RequestError)
    async def request_error(_: Request, exc: RequestError) -> JSONResponse:
        return JSONResponse(status_code=400, content={"detail": str(exc)})

    @app.post("/v1/check", response_model=CheckResponse, response_model_exclude_none=True)
    def check(request: CheckRequest) -> CheckResponse:
        return handle_check(request)

    @app.post("/v1/necessary", response_model=NecessaryResponse)
    def necessary(request: NecessaryRequest) -> NecessaryResponse:
        return handle_necessary(request)

    @app.post(
        "/v1/majorize", response_model=MajorizeResponse, response_model_exclude_none=True
    )
    def majorize(request: MajorizeRequest) -> MajorizeResponse:
        return handle_majorize(request)

    @app.get("/v1/health")
    def health() -> dict[str, str]:
        return {"status": "ok", "version": __version__}

    return app


app = create_app()
