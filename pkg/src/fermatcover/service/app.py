"""FastAPI wrapper: one POST route per registered operation.

Responses wrap the report as {"operation", "passed", "report"}.  Domain
errors map to HTTP 400 with a machine-readable code ("budget-exceeded",
"invalid-input", ...); internal certification failures map to 500.
"""

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .. import __version__
from ..errors import CertificationError, FermatcoverError
from .handlers import OPERATIONS, Operation


def _make_endpoint(op: Operation):
    def endpoint(request):
        report = op.handler(request)
        return {"operation": op.name, "passed": bool(op.passed(report)), "report": report}

    # the request model drives body validation; bind it as a real annotation
    endpoint.__annotations__ = {"request": op.request_model}
    endpoint.__name__ = "op_" + op.name.replace("-", "_")
    return endpoint


def create_app() -> FastAPI:
    app = FastAPI(title="fermatcover", version=__version__)

    @app.exception_handler(FermatcoverError)
    async def domain_error(request: Request, exc: FermatcoverError):
        status = 500 if isinstance(exc, CertificationError) else 400
        return JSONResponse(status_code=status, content={"code": exc.code, "detail": str(exc)})

    @app.get("/")
    def index() -> dict:
        return {
            "name": "fermatcover",
            "version": __version__,
            "operations": [
                {"name": op.name, "path": op.path, "summary": op.summary}
                for op in OPERATIONS.values()
            ],
        }

    for op in OPERATIONS.values():
        app.post(op.path)(_make_endpoint(op))
    return app
