import logging

from fastapi import APIRouter, FastAPI, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.openapi.docs import get_swagger_ui_html
from fastapi.responses import HTMLResponse, JSONResponse
from starlette.exceptions import HTTPException as StarletteHTTPException

import cfg
from routers import combinatorics, cone, symmetric
from schurpos import SchurPosError

logging.basicConfig(level=cfg.LOG_LEVEL, format="%(asctime)s %(levelname)s %(name)s: %(message)s")
logger = logging.getLogger(__name__)

TAGS = [
    {"name": "Combinatorics", "description": "Partitions, semistandard Young tableaux and Kostka numbers."},
    {"name": "Symmetric polynomials", "description": "Basis changes, Schur positivity, bialternants and GL characters."},
    {"name": "Cone geometry", "description": "How likely a nonnegative symmetric polynomial is to be Schur positive."},
]

v1 = APIRouter(
    prefix="/v1",
    responses={
        400: {"description": "The arguments are outside the domain of the operation or the server limits."},
        422: {"description": "A partition, rational list or expression could not be parsed."},
    },
)
for module in (combinatorics, symmetric, cone):
    v1.include_router(module.router)

app = FastAPI(
    debug=cfg.DEBUG,
    title=cfg.APP_NAME,
    version=cfg.APP_VERSION,
    description=cfg.APP_DESCRIPTION,
    openapi_tags=TAGS,
    openapi_url=cfg.OPENAPI_URL,
    # served below under the configured URL
    docs_url=None,
    redoc_url=None,
)
app.include_router(v1)
app.add_middleware(
    CORSMiddleware,
    allow_origins=cfg.ORIGINS,
    allow_credentials=cfg.ALLOW_CREDENTIALS,
    allow_methods=cfg.ALLOW_METHODS,
    allow_headers=cfg.ALLOW_HEADERS,
)


@app.get(cfg.DOCS_URL, include_in_schema=False)
def swagger_docs() -> HTMLResponse:
    return get_swagger_ui_html(openapi_url=cfg.OPENAPI_URL, title=cfg.DOCS_TITLE)


@app.exception_handler(SchurPosError)
async def library_error_handler(_: Request, exc: SchurPosError) -> JSONResponse:
    """Turn library errors into `{"status", "message"}` bodies."""
    logger.info("%s: %s", type(exc).__name__, exc.msg)
    return JSONResponse(status_code=exc.code, content=exc.to_dict())


@app.exception_handler(StarletteHTTPException)
async def http_error_handler(_: Request, exc: StarletteHTTPException) -> JSONResponse:
    body = exc.detail if isinstance(exc.detail, dict) else {"message": exc.detail}
    # same shape as SchurPosError.to_dict
    body.setdefault("status", exc.status_code)
    return JSONResponse(status_code=exc.status_code, content=body)


if __name__ == "__main__":
    import uvicorn

    uvicorn.run(app, host="127.0.0.1", port=8000)
