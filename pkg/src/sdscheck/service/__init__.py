"""FastAPI service wrapping the exact nonnegativity checker."""

from .app import app, create_app
from .handlers import RequestError, handle_check, handle_majorize, handle_necessary
from .schemas import (
    CheckRequest,
    CheckResponse,
    MajorizeRequest,
    MajorizeResponse,
    NecessaryRequest,
    NecessaryResponse,
)

__all__ = [
    "CheckRequest",
    "CheckResponse",
    "MajorizeRequest",
    "MajorizeResponse",
    "NecessaryRequest",
    "NecessaryResponse",
    "RequestError",
    "app",
    "create_app",
    "handle_check",
    "handle_majorize",
    "handle_necessary",
]
