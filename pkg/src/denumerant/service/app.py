"""FastAPI application exposing the counting commands over HTTP.

Each endpoint wraps one envelope builder.  Domain errors map to structured
JSON errors: invalid input is 400 with code "invalid_input", a failed
constituent over-verification is 422 with code "residual_non_zero" (carrying
the residue and sample index), so clients can translate them to exit codes.
"""

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from ..errors import DenumerantError, ResidualNonZero
from . import handlers
from .schemas import (
    AsymptoteRequest,
    CountRequest,
    Envelope,
    QuasipolyRequest,
    TableRequest,
    VerifyRequest,
)


def create_app() -> FastAPI:
    app = FastAPI(
        title="denumerant",
        version="0.1.0",
        description="Exact restricted-partition counts, quasi-polynomial constituents, "
        "identity verification, and asymptotic diagnostics.",
    )

    @app.exception_handler(ResidualNonZero)
    async def residual_handler(request: Request, exc: ResidualNonZero) -> JSONResponse:
        return JSONResponse(
            status_code=422,
            content={
                "error": {
                    "code": "residual_non_zero",
                    "message": str(exc),
                    "residue": str(exc.residue),
                    "l": str(exc.l),
                }
            },
        )

    @app.exception_handler(DenumerantError)
    async def domain_handler(request: Request, exc: DenumerantError) -> JSONResponse:
        return JSONResponse(
            status_code=400,
            content={"error": {"code": "invalid_input", "message": str(exc)}},
        )

    @app.exception_handler(ValueError)
    async def value_handler(request: Request, exc: ValueError) -> JSONResponse:
        return JSONResponse(
            status_code=400,
            content={"error": {"code": "invalid_input", "message": str(exc)}},
        )

    @app.get("/healthz")
    def healthz() -> dict[str, str]:
        return {"status": "ok"}

    @app.post("/count", response_model=Envelope)
    def count_endpoint(request: CountRequest):
        return handlers.count_envelope(request.parts, request.n)

    @app.post("/table", response_model=Envelope)
    def table_endpoint(request: TableRequest):
        return handlers.table_envelope(request.parts, request.n_max)

    @app.post("/quasipoly", response_model=Envelope)
    def quasipoly_endpoint(request: QuasipolyRequest):
        return handlers.quasipoly_envelope(request.parts, request.extra_samples)

    @app.post("/verify", response_model=Envelope)
    def verify_endpoint(request: VerifyRequest):
        return handlers.verify_envelope(request.parts, request.l_max, request.seed)

    @app.post("/asymptote", response_model=Envelope)
    def asymptote_endpoint(request: AsymptoteRequest):
        return handlers.asymptote_envelope(request.parts, request.n_points)

    return app
