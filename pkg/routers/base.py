from http import HTTPStatus
from typing import Any, Dict, Optional

from fastapi import Path
from fastapi.exceptions import HTTPException

import cfg


def raise_error(status_code: int, headers: Optional[Dict[str, Any]] = None, **detail: Any) -> None:
    """Abort the request with ``detail`` as the body, labelled by the status name (``BAD_REQUEST``, ...)."""
    try:
        label = HTTPStatus(status_code).name
    except ValueError:
        label = "UNKNOWN_ERROR"
    raise HTTPException(status_code=status_code, detail={**detail, "error": label}, headers=headers)


def check_degree(k: int) -> int:
    """Reject degrees the server is not configured to compute."""
    if k > cfg.MAX_DEGREE:
        raise_error(400, message=f"degree {k} exceeds the server limit of {cfg.MAX_DEGREE}")
    return k


def get_degree(
        k: int = Path(
            ...,
            title="Degree",
            description="The degree k; every partition of k indexes one basis element.",
            example=3,
            ge=0
        )
) -> int:
    return check_degree(k)
