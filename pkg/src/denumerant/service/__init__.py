"""HTTP service layer: pydantic schemas, envelope builders, FastAPI app."""

from .app import create_app

__all__ = ["create_app"]
