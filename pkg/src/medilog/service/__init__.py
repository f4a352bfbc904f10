"""HTTP service wrapping the engine (FastAPI app, handlers, schemas)."""

from .app import app, create_app

__all__ = ["app", "create_app"]
